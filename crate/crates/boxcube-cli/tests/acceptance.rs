//! Acceptance gate: one test per advertised guarantee, each printing a
//! single PASS line with the measured evidence. Criteria 1-9 drive the
//! library directly; criterion 10 drives the installed binary.

use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use boxcube::{
    box_to_cube, boxicity_oracle, ceil_log2, check_ordering_property, cube_construction,
    cubicity_oracle, interval_to_cube, left_endpoint_ordering, random_box_representation,
    random_interval_representation, recognize_interval_brute, verify_layers, BoxRepresentation,
    Graph, Interval, IntervalRepresentation, Rational,
};

fn ints(lo: i64, hi: i64) -> Interval {
    Interval::from_ints(lo, hi)
}

/// Every labeled simple graph on `n` vertices, by edge-set bitmask.
fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("pairs are valid edges")
        })
        .collect()
}

/// Independent interval-graph decision procedure: searches for an
/// open/close event sequence over distinct endpoints `1..2n`. Opening a
/// vertex forces edges to everything currently open, so it is only allowed
/// next to neighbors; closing a vertex is only allowed once all its
/// neighbors have opened. A full sequence exists iff the graph has an
/// interval representation with distinct endpoints.
fn realizable_with_distinct_endpoints(g: &Graph) -> bool {
    fn step(g: &Graph, opened: u32, closed: u32, dead: &mut HashSet<(u32, u32)>) -> bool {
        let n = g.n();
        if closed.count_ones() as usize == n {
            return true;
        }
        if dead.contains(&(opened, closed)) {
            return false;
        }
        let open_now = opened & !closed;
        for v in 0..n {
            if opened >> v & 1 == 0 {
                let compatible =
                    (0..n).all(|u| open_now >> u & 1 == 0 || g.has_edge(u, v));
                if compatible && step(g, opened | 1 << v, closed, dead) {
                    return true;
                }
            }
        }
        for u in 0..n {
            if open_now >> u & 1 == 1
                && g.neighbors(u).iter().all(|&w| opened >> w & 1 == 1)
                && step(g, opened, closed | 1 << u, dead)
            {
                return true;
            }
        }
        dead.insert((opened, closed));
        false
    }
    step(g, 0, 0, &mut HashSet::new())
}

/// 200 seeded interval families covering every n in 2..=64.
fn seeded_interval_runs() -> impl Iterator<Item = (u64, IntervalRepresentation)> {
    (0..200u64).map(|seed| (seed, random_interval_representation(2 + seed as usize % 63, seed)))
}

/// An interval representation of the star on `n` vertices: the hub spans
/// everything, each leaf is a distinct point.
fn star_interval_rep(n: usize) -> IntervalRepresentation {
    let mut intervals = vec![ints(0, 2 * n as i64)];
    intervals.extend((1..n).map(|v| ints(2 * v as i64, 2 * v as i64)));
    IntervalRepresentation::new(intervals)
}

/// Two-dimensional boxes realizing the four-cycle: opposite vertices are
/// separated in one axis each.
fn four_cycle_boxes() -> BoxRepresentation {
    let full = ints(0, 3);
    let left = ints(0, 1);
    let right = ints(2, 3);
    BoxRepresentation::new(
        2,
        vec![
            vec![left.clone(), full.clone()],
            vec![full.clone(), left],
            vec![right.clone(), full.clone()],
            vec![full, right],
        ],
    )
    .expect("uniform dimensions")
}

#[test]
fn criterion_01_conversion_emits_log_n_dimensions_and_the_exact_graph() {
    let mut complete_runs = 0;
    for (seed, rep) in seeded_interval_runs() {
        let n = rep.n();
        let g = rep.intersection_graph();
        let cube = interval_to_cube(&rep);
        if g.is_complete() {
            complete_runs += 1;
            assert_eq!(cube.dims(), 0, "seed {seed}: complete input must cost 0 dimensions");
        } else {
            assert_eq!(cube.dims(), ceil_log2(n), "seed {seed}: wrong dimension count");
        }
        assert_eq!(cube.intersection_graph(), g, "seed {seed}: edge-set diff is nonzero");
    }
    println!(
        "criterion 1: PASS - 200/200 conversions exact, \
         ceil(log2 n) dimensions ({complete_runs} complete inputs at 0)"
    );
}

#[test]
fn criterion_02_every_layer_is_an_edge_superset() {
    let mut layers_checked = 0;
    for (seed, rep) in seeded_interval_runs() {
        if let Some(pipeline) = cube_construction(&rep).pipeline {
            let report = verify_layers(&pipeline.padded_graph, &pipeline.layers).unwrap();
            for (index, ok) in report.superset_ok.iter().enumerate() {
                assert!(ok, "seed {seed}: layer {index} dropped an input edge");
                layers_checked += 1;
            }
        }
    }
    println!("criterion 2: PASS - {layers_checked} layers all contain every input edge");
}

#[test]
fn criterion_03_layer_intersection_equals_the_input_graph() {
    let mut runs_with_layers = 0;
    for (seed, rep) in seeded_interval_runs() {
        if let Some(pipeline) = cube_construction(&rep).pipeline {
            let report = verify_layers(&pipeline.padded_graph, &pipeline.layers).unwrap();
            assert!(report.intersection_ok, "seed {seed}: layer intersection differs from E(G)");
            runs_with_layers += 1;
        }
    }
    println!(
        "criterion 3: PASS - layer edge intersection equals E(G) in all \
         {runs_with_layers} layered runs"
    );
}

#[test]
fn criterion_04_star_cubicity_matches_the_log_formula_and_the_construction() {
    let mut values = Vec::new();
    for n in [3usize, 4, 5] {
        let star = Graph::star(n).unwrap();
        let value = cubicity_oracle(&star, 4, 6)
            .unwrap()
            .value()
            .expect("star cubicity is within the cap");
        assert_eq!(value, ceil_log2(n - 1), "cubicity of the star on {n} vertices");
        values.push(value);
    }
    assert_eq!(values, vec![1, 2, 2]);

    // On 4 vertices the construction meets the optimum with equality.
    let rep = star_interval_rep(4);
    assert_eq!(rep.intersection_graph(), Graph::star(4).unwrap());
    let dims = interval_to_cube(&rep).dims();
    assert_eq!(dims, 2);
    assert_eq!(dims, values[1]);
    println!(
        "criterion 4: PASS - star cubicities {values:?} match ceil(log2(n-1)); \
         construction meets the optimum at n=4"
    );
}

#[test]
fn criterion_05_box_pipeline_is_exact_within_twice_log_n() {
    let fixture = four_cycle_boxes();
    assert_eq!(fixture.intersection_graph(), Graph::cycle(4).unwrap());
    let cube = box_to_cube(&fixture);
    assert!(cube.dims() <= 2 * ceil_log2(4));
    assert_eq!(cube.intersection_graph(), Graph::cycle(4).unwrap());

    for seed in 0..50u64 {
        let n = 4 + seed as usize % 13;
        let rep = random_box_representation(n, 2, seed);
        let cube = box_to_cube(&rep);
        assert!(
            cube.dims() <= 2 * ceil_log2(n),
            "seed {seed}: {} dims exceeds 2*ceil(log2 {n})",
            cube.dims()
        );
        assert_eq!(cube.intersection_graph(), rep.intersection_graph(), "seed {seed}");
    }
    println!(
        "criterion 5: PASS - four-cycle fixture and 50/50 random 2-dimensional \
         box families convert exactly within 2*ceil(log2 n) dimensions"
    );
}

#[test]
fn criterion_06_boxicity_and_cubicity_agree_on_every_tiny_graph() {
    let mut graphs_checked = 0;
    for n in 1..=5 {
        for g in all_graphs(n) {
            let boxi = boxicity_oracle(&g, 4, 6)
                .unwrap()
                .value()
                .expect("boxicity of a 5-vertex graph is at most 2");
            let cub = cubicity_oracle(&g, 4, 6)
                .unwrap()
                .value()
                .expect("cubicity of a 5-vertex graph is at most 4");
            assert!(boxi <= cub, "n={n}: boxicity {boxi} > cubicity {cub} for {g:?}");
            assert_eq!(boxi == 0, g.is_complete(), "n={n}: zero value must mean complete");
            assert_eq!(cub == 0, g.is_complete(), "n={n}: zero value must mean complete");
            graphs_checked += 1;
        }
    }

    let c4 = Graph::cycle(4).unwrap();
    assert_eq!(boxicity_oracle(&c4, 4, 6).unwrap().value(), Some(2));
    let k22 = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    assert_eq!(boxicity_oracle(&k22, 4, 6).unwrap().value(), Some(2));
    println!(
        "criterion 6: PASS - boxicity <= cubicity on all {graphs_checked} graphs \
         with n <= 5; complete-bipartite fixtures have boxicity 2"
    );
}

#[test]
fn criterion_07_ordering_property_and_recognizer_cross_validation() {
    for seed in 0..1000u64 {
        let n = 1 + seed as usize % 32;
        let rep = random_interval_representation(n, seed);
        let g = rep.intersection_graph();
        let f = left_endpoint_ordering(&rep);
        assert!(
            check_ordering_property(&g, &f),
            "seed {seed}: left-endpoint ordering violates the closure property"
        );
    }

    let mut agreements = 0;
    for n in 1..=5 {
        for g in all_graphs(n) {
            let brute = recognize_interval_brute(&g, 5).unwrap().is_some();
            let exhaustive = realizable_with_distinct_endpoints(&g);
            assert_eq!(
                brute, exhaustive,
                "n={n}: ordering-based and endpoint-based searches disagree on {g:?}"
            );
            agreements += 1;
        }
    }
    println!(
        "criterion 7: PASS - closure property on 1000/1000 seeded orderings; \
         recognizers agree on all {agreements} graphs with n <= 5"
    );
}

#[test]
fn criterion_08_conversion_time_scales_like_n_squared_log_n() {
    let time = |n: usize| {
        let rep = random_interval_representation(n, 4242);
        (0..3)
            .map(|_| {
                let start = Instant::now();
                let cube = interval_to_cube(&rep);
                std::hint::black_box(cube.dims());
                start.elapsed().as_secs_f64()
            })
            .fold(f64::INFINITY, f64::min)
    };
    time(256); // warm-up
    let t1024 = time(1024);
    let t2048 = time(2048);
    let ratio = t2048 / t1024;
    assert!(t1024 < 2.0, "n=1024 took {t1024:.3}s, expected under 2s");
    assert!(ratio <= 6.0, "t(2048)/t(1024) = {ratio:.2}, expected at most 6");
    println!(
        "criterion 8: PASS - n=1024 in {:.0}ms, n=2048 in {:.0}ms, ratio {ratio:.2} <= 6",
        t1024 * 1e3,
        t2048 * 1e3
    );
}

#[test]
fn criterion_09_layer_diameter_three_counterexample_is_pinned() {
    // Four vertices, one edge between the first two positions: the scale-1
    // layer wires isolated vertices into a path of diameter 3.
    let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
    let f = boxcube::VertexOrdering::identity(4);
    let layer = boxcube::build_layer(&g, &f, 1).unwrap();
    let expected: Vec<Rational> = [2, 6, 0, 8].iter().map(|&a| Rational::from_integer(a)).collect();
    assert_eq!(layer.anchors(), expected.as_slice());

    let report = verify_layers(&g, std::slice::from_ref(&layer)).unwrap();
    assert!(report.superset_ok[0], "the layer must still contain the input edge");
    let diameters = &report.layer_diameters[0];
    assert!(diameters.connected);
    assert_eq!(diameters.component_diameters, vec![3]);
    assert_eq!(diameters.max_component_diameter(), 3);
    println!(
        "criterion 9: PASS - verifier reports component diameters {:?} for the \
         pinned single-edge layer (a diameter-3 path)",
        diameters.component_diameters
    );
}

fn run_cli(dir: &Path, args: &[&str]) {
    let output = Command::new(env!("CARGO_BIN_EXE_boxcube"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        output.status.success(),
        "command {args:?} failed:\n{}",
        String::from_utf8_lossy(&output.stderr)
    );
}

#[test]
fn criterion_10_every_cli_command_is_byte_deterministic() {
    let scripts: &[&[&str]] = &[
        &["gen", "--family", "star", "--n", "5", "--out", "star.json"],
        &["gen", "--family", "cycle", "--n", "4", "--out", "c4.json"],
        &[
            "gen",
            "--family",
            "random-interval",
            "--n",
            "24",
            "--seed",
            "7",
            "--out",
            "rand.json",
            "--rep-out",
            "rand_rep.json",
        ],
        &["order", "--in", "rand_rep.json", "--out", "ordering.json"],
        &["convert", "--kind", "interval-to-cube", "--in", "rand_rep.json", "--out", "cube.json"],
        &[
            "convert",
            "--kind",
            "interval-to-cube",
            "--in",
            "rand_rep.json",
            "--out",
            "cube_norm.json",
            "--normalize",
        ],
        &["oracle", "--graph", "star.json", "--parameter", "cubicity", "--out", "cub.json"],
        &["oracle", "--graph", "c4.json", "--parameter", "boxicity", "--out", "boxi.json"],
    ];
    let box_file = "{\"n\":4,\"dims\":2,\"boxes\":{\
         \"0\":[[0,1,1,1],[0,1,3,1]],\"1\":[[0,1,3,1],[0,1,1,1]],\
         \"2\":[[2,1,3,1],[0,1,3,1]],\"3\":[[0,1,3,1],[2,1,3,1]]}}\n";

    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for dir in &dirs {
        fs::write(dir.path().join("boxes.json"), box_file).unwrap();
        for args in scripts {
            run_cli(dir.path(), args);
        }
        run_cli(
            dir.path(),
            &["convert", "--kind", "box-to-cube", "--in", "boxes.json", "--out", "box_cube.json"],
        );
        // Rerun everything in place: outputs must survive overwriting.
        for args in scripts {
            run_cli(dir.path(), args);
        }
    }

    let outputs = [
        "star.json",
        "c4.json",
        "rand.json",
        "rand_rep.json",
        "ordering.json",
        "cube.json",
        "cube_norm.json",
        "cub.json",
        "boxi.json",
        "box_cube.json",
    ];
    for name in outputs {
        let a = fs::read(dirs[0].path().join(name)).unwrap();
        let b = fs::read(dirs[1].path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between identical runs");
        assert!(!a.is_empty());
    }
    println!(
        "criterion 10: PASS - {} output files byte-identical across reruns \
         in separate directories",
        outputs.len()
    );
}
