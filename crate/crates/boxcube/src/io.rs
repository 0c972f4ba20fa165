//! Canonical JSON documents for every representation, plus readers.
//!
//! Writers build the byte-exact canonical form by hand: compact separators,
//! vertex keys in ascending numeric order, rationals in lowest terms with a
//! positive denominator, and a single trailing newline. Repeated runs over
//! the same data therefore produce byte-identical files.
//!
//! Readers are lenient about formatting (whitespace, key order, unreduced
//! rationals) but strict about content: unknown fields, missing vertices,
//! zero denominators, and oversized numbers are rejected with a message
//! naming the offending field. Magnitudes are capped so that every exact
//! rational operation downstream stays inside 64-bit integers.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde_json::{Map, Value};

use crate::boxes::BoxRepresentation;
use crate::cube::CubeRepresentation;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalRepresentation, UnitIntervalRepresentation};
use crate::oracle::OracleOutcome;
use crate::ordering::VertexOrdering;
use crate::rational::{integer, le_exact, rational, Rational};

/// Largest accepted vertex count in any document.
pub const MAX_VERTICES: usize = 1 << 20;
/// Largest accepted dimension count in any document.
pub const MAX_DIMS: usize = 1 << 16;
/// Largest accepted absolute value for any endpoint, anchor, side length,
/// numerator, or denominator. Small enough that sums and least common
/// denominators of two in-range rationals never overflow `i64`.
pub const MAX_MAGNITUDE: i64 = 1 << 30;

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

fn push_rational(out: &mut String, r: &Rational) {
    write!(out, "[{},{}]", r.numer(), r.denom()).unwrap();
}

fn push_interval(out: &mut String, iv: &Interval) {
    write!(
        out,
        "[{},{},{},{}]",
        iv.lo().numer(),
        iv.lo().denom(),
        iv.hi().numer(),
        iv.hi().denom()
    )
    .unwrap();
}

/// Appends `{"0":...,"1":...}` with one entry per vertex in ascending order.
fn push_vertex_map(out: &mut String, n: usize, mut entry: impl FnMut(&mut String, usize)) {
    out.push('{');
    for v in 0..n {
        if v > 0 {
            out.push(',');
        }
        write!(out, "\"{v}\":").unwrap();
        entry(out, v);
    }
    out.push('}');
}

fn graph_body(g: &Graph) -> String {
    let mut out = String::new();
    write!(out, "{{\"n\":{},\"edges\":[", g.n()).unwrap();
    for (i, (u, v)) in g.edges().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "[{u},{v}]").unwrap();
    }
    out.push_str("]}");
    out
}

fn interval_rep_body(rep: &IntervalRepresentation) -> String {
    let mut out = String::new();
    write!(out, "{{\"n\":{},\"intervals\":", rep.n()).unwrap();
    push_vertex_map(&mut out, rep.n(), |out, v| push_interval(out, rep.interval(v)));
    out.push('}');
    out
}

fn unit_rep_body(rep: &UnitIntervalRepresentation) -> String {
    let mut out = String::new();
    write!(out, "{{\"n\":{},\"length\":", rep.n()).unwrap();
    push_rational(&mut out, rep.length());
    out.push_str(",\"anchors\":");
    push_vertex_map(&mut out, rep.n(), |out, v| push_rational(out, rep.anchor(v)));
    out.push('}');
    out
}

fn cube_rep_body(cube: &CubeRepresentation) -> String {
    let mut out = String::new();
    write!(out, "{{\"n\":{},\"dims\":{},\"side\":{},\"anchors\":", cube.n(), cube.dims(), cube.side())
        .unwrap();
    push_vertex_map(&mut out, cube.n(), |out, v| {
        out.push('[');
        for (p, a) in cube.anchor(v).iter().enumerate() {
            if p > 0 {
                out.push(',');
            }
            write!(out, "{a}").unwrap();
        }
        out.push(']');
    });
    out.push('}');
    out
}

fn normalized_cube_body(cube: &CubeRepresentation) -> String {
    let side = cube.side();
    let mut out = String::new();
    write!(out, "{{\"n\":{},\"dims\":{},\"side\":1,\"anchors\":", cube.n(), cube.dims()).unwrap();
    push_vertex_map(&mut out, cube.n(), |out, v| {
        out.push('[');
        for (p, &a) in cube.anchor(v).iter().enumerate() {
            if p > 0 {
                out.push(',');
            }
            let scaled = rational(a, side).expect("cube side is positive");
            push_rational(out, &scaled);
        }
        out.push(']');
    });
    out.push('}');
    out
}

fn box_rep_body(rep: &BoxRepresentation) -> String {
    let mut out = String::new();
    write!(out, "{{\"n\":{},\"dims\":{},\"boxes\":", rep.n(), rep.dims()).unwrap();
    push_vertex_map(&mut out, rep.n(), |out, v| {
        out.push('[');
        for (p, iv) in rep.box_of(v).iter().enumerate() {
            if p > 0 {
                out.push(',');
            }
            push_interval(out, iv);
        }
        out.push(']');
    });
    out.push('}');
    out
}

fn ordering_body(f: &VertexOrdering) -> String {
    let n = f.sequence().len();
    let mut out = String::new();
    write!(out, "{{\"n\":{n},\"positions\":").unwrap();
    push_vertex_map(&mut out, n, |out, v| write!(out, "{}", f.position(v)).unwrap());
    out.push('}');
    out
}

fn document(mut body: String) -> String {
    body.push('\n');
    body
}

/// Canonical graph document: `{"n":..,"edges":[[u,v],..]}` with `u < v` and
/// the pairs in ascending lexicographic order.
pub fn graph_to_json(g: &Graph) -> String {
    document(graph_body(g))
}

/// Canonical interval document: one `[lo_num,lo_den,hi_num,hi_den]` quad per
/// vertex, lowest terms, keys ascending.
pub fn interval_rep_to_json(rep: &IntervalRepresentation) -> String {
    document(interval_rep_body(rep))
}

/// Canonical shared-length interval document: a `[num,den]` length plus one
/// `[num,den]` anchor per vertex.
pub fn unit_rep_to_json(rep: &UnitIntervalRepresentation) -> String {
    document(unit_rep_body(rep))
}

/// Canonical cube document with integer anchors and an explicit side.
pub fn cube_rep_to_json(cube: &CubeRepresentation) -> String {
    document(cube_rep_body(cube))
}

/// The same cubes rescaled to side 1: anchors become `[num,den]` rationals
/// `a/side` in lowest terms.
pub fn cube_rep_to_normalized_json(cube: &CubeRepresentation) -> String {
    document(normalized_cube_body(cube))
}

/// Canonical box document: one array of interval quads per vertex.
pub fn box_rep_to_json(rep: &BoxRepresentation) -> String {
    document(box_rep_body(rep))
}

/// Canonical ordering document: 1-based position per vertex.
pub fn ordering_to_json(f: &VertexOrdering) -> String {
    document(ordering_body(f))
}

fn oracle_body(parameter: &str, value: Option<usize>, witness_bodies: &[String]) -> String {
    let mut out = String::new();
    write!(out, "{{\"parameter\":\"{parameter}\",\"value\":").unwrap();
    match value {
        Some(v) => write!(out, "{v}").unwrap(),
        None => out.push_str("null"),
    }
    write!(out, ",\"exceeded\":{},\"witness\":[", value.is_none()).unwrap();
    for (i, body) in witness_bodies.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(body);
    }
    out.push_str("]}");
    out
}

fn outcome_to_json<R>(
    parameter: &str,
    outcome: &OracleOutcome<R>,
    body: impl Fn(&R) -> String,
) -> String {
    let (value, bodies) = match outcome {
        OracleOutcome::Computed(result) => {
            (Some(result.value), result.witness.iter().map(body).collect())
        }
        OracleOutcome::Exceeded { .. } => (None, Vec::new()),
    };
    document(oracle_body(parameter, value, &bodies))
}

/// Cubicity search result with shared-length interval witnesses inline.
pub fn cubicity_outcome_to_json(outcome: &OracleOutcome<UnitIntervalRepresentation>) -> String {
    outcome_to_json("cubicity", outcome, unit_rep_body)
}

/// Boxicity search result with interval witnesses inline.
pub fn boxicity_outcome_to_json(outcome: &OracleOutcome<IntervalRepresentation>) -> String {
    outcome_to_json("boxicity", outcome, interval_rep_body)
}

/// Writes `contents` to `path` atomically: the data lands in a temporary
/// file in the same directory and is renamed over the target, so readers
/// never observe a partial document.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Readers
// ---------------------------------------------------------------------------

fn parse_root(text: &str) -> Result<Map<String, Value>> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("invalid JSON: {e}")))?;
    match value {
        Value::Object(map) => Ok(map),
        _ => Err(Error::parse("top-level JSON value must be an object")),
    }
}

/// Requires the object to carry exactly the `required` fields.
fn expect_keys(map: &Map<String, Value>, required: &[&str], what: &str) -> Result<()> {
    for key in map.keys() {
        if !required.contains(&key.as_str()) {
            return Err(Error::parse(format!("{what}: unexpected field {key:?}")));
        }
    }
    for key in required {
        if !map.contains_key(*key) {
            return Err(Error::parse(format!("{what}: missing field {key:?}")));
        }
    }
    Ok(())
}

fn parse_count(map: &Map<String, Value>, key: &str, cap: usize, what: &str) -> Result<usize> {
    let raw = map
        .get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse(format!("{what}: field {key:?} must be a non-negative integer")))?;
    let count = usize::try_from(raw)
        .map_err(|_| Error::parse(format!("{what}: field {key:?} is out of range")))?;
    if count > cap {
        return Err(Error::parse(format!("{what}: {key} = {count} exceeds the limit {cap}")));
    }
    Ok(count)
}

/// An integer whose magnitude fits the exact-arithmetic budget.
fn parse_scalar(value: &Value, what: &str) -> Result<i64> {
    let v = value
        .as_i64()
        .ok_or_else(|| Error::parse(format!("{what}: expected an integer")))?;
    match v.checked_abs() {
        Some(a) if a <= MAX_MAGNITUDE => Ok(v),
        _ => Err(Error::parse(format!(
            "{what}: magnitude of {v} exceeds the supported bound {MAX_MAGNITUDE}"
        ))),
    }
}

fn parse_fixed_array<'a>(value: &'a Value, len: usize, what: &str) -> Result<&'a [Value]> {
    let arr = value
        .as_array()
        .ok_or_else(|| Error::parse(format!("{what}: expected an array")))?;
    if arr.len() != len {
        return Err(Error::parse(format!(
            "{what}: expected {len} elements, found {}",
            arr.len()
        )));
    }
    Ok(arr)
}

fn parse_rational_pair(value: &Value, what: &str) -> Result<Rational> {
    let arr = parse_fixed_array(value, 2, what)?;
    let num = parse_scalar(&arr[0], what)?;
    let den = parse_scalar(&arr[1], what)?;
    rational(num, den).map_err(|_| Error::parse(format!("{what}: denominator must not be zero")))
}

fn parse_interval_quad(value: &Value, what: &str) -> Result<Interval> {
    let arr = parse_fixed_array(value, 4, what)?;
    let lo = {
        let num = parse_scalar(&arr[0], what)?;
        let den = parse_scalar(&arr[1], what)?;
        rational(num, den)
            .map_err(|_| Error::parse(format!("{what}: denominator must not be zero")))?
    };
    let hi = {
        let num = parse_scalar(&arr[2], what)?;
        let den = parse_scalar(&arr[3], what)?;
        rational(num, den)
            .map_err(|_| Error::parse(format!("{what}: denominator must not be zero")))?
    };
    Interval::new(lo, hi).map_err(|e| Error::parse(format!("{what}: {e}")))
}

/// The per-vertex dictionary under `key`, as one value per vertex `0..n`.
fn vertex_entries<'a>(
    map: &'a Map<String, Value>,
    key: &str,
    n: usize,
    what: &str,
) -> Result<Vec<&'a Value>> {
    let dict = map
        .get(key)
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse(format!("{what}: field {key:?} must be an object")))?;
    if dict.len() != n {
        return Err(Error::parse(format!(
            "{what}: {key} has {} entries, expected one per vertex of {n}",
            dict.len()
        )));
    }
    (0..n)
        .map(|v| {
            dict.get(&v.to_string())
                .ok_or_else(|| Error::parse(format!("{what}: {key} is missing vertex {v}")))
        })
        .collect()
}

/// Parses a graph document `{"n":..,"edges":[[u,v],..]}`. Edge order and
/// orientation are normalized; duplicates collapse.
pub fn graph_from_json(text: &str) -> Result<Graph> {
    let map = parse_root(text)?;
    expect_keys(&map, &["n", "edges"], "graph")?;
    let n = parse_count(&map, "n", MAX_VERTICES, "graph")?;
    let list = map["edges"]
        .as_array()
        .ok_or_else(|| Error::parse("graph: field \"edges\" must be an array"))?;
    let mut edges = Vec::with_capacity(list.len());
    for (i, entry) in list.iter().enumerate() {
        let what = format!("graph: edges[{i}]");
        let pair = parse_fixed_array(entry, 2, &what)?;
        let endpoint = |value: &Value| -> Result<usize> {
            value
                .as_u64()
                .and_then(|v| usize::try_from(v).ok())
                .ok_or_else(|| Error::parse(format!("{what}: expected a vertex index")))
        };
        edges.push((endpoint(&pair[0])?, endpoint(&pair[1])?));
    }
    Graph::from_edges(n, &edges)
}

/// Parses an interval document `{"n":..,"intervals":{"v":[quad],..}}`.
pub fn interval_rep_from_json(text: &str) -> Result<IntervalRepresentation> {
    let map = parse_root(text)?;
    expect_keys(&map, &["n", "intervals"], "interval representation")?;
    let n = parse_count(&map, "n", MAX_VERTICES, "interval representation")?;
    let entries = vertex_entries(&map, "intervals", n, "interval representation")?;
    let intervals = entries
        .iter()
        .enumerate()
        .map(|(v, value)| parse_interval_quad(value, &format!("intervals[{v}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntervalRepresentation::new(intervals))
}

/// Parses a shared-length interval document
/// `{"n":..,"length":[num,den],"anchors":{"v":[num,den],..}}`.
pub fn unit_rep_from_json(text: &str) -> Result<UnitIntervalRepresentation> {
    let map = parse_root(text)?;
    expect_keys(&map, &["n", "length", "anchors"], "shared-length representation")?;
    let n = parse_count(&map, "n", MAX_VERTICES, "shared-length representation")?;
    let length = parse_rational_pair(&map["length"], "length")?;
    let entries = vertex_entries(&map, "anchors", n, "shared-length representation")?;
    let anchors = entries
        .iter()
        .enumerate()
        .map(|(v, value)| parse_rational_pair(value, &format!("anchors[{v}]")))
        .collect::<Result<Vec<_>>>()?;
    UnitIntervalRepresentation::new(anchors, length)
}

/// Parses a box document `{"n":..,"dims":..,"boxes":{"v":[[quad],..],..}}`.
pub fn box_rep_from_json(text: &str) -> Result<BoxRepresentation> {
    let map = parse_root(text)?;
    expect_keys(&map, &["n", "dims", "boxes"], "box representation")?;
    let n = parse_count(&map, "n", MAX_VERTICES, "box representation")?;
    let dims = parse_count(&map, "dims", MAX_DIMS, "box representation")?;
    let entries = vertex_entries(&map, "boxes", n, "box representation")?;
    let boxes = entries
        .iter()
        .enumerate()
        .map(|(v, value)| {
            let what = format!("boxes[{v}]");
            let arr = parse_fixed_array(value, dims, &what)?;
            arr.iter()
                .enumerate()
                .map(|(p, side)| parse_interval_quad(side, &format!("{what}[{p}]")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    BoxRepresentation::new(dims, boxes)
}

/// Parses an ordering document `{"n":..,"positions":{"v":<1-based>,..}}`.
pub fn ordering_from_json(text: &str) -> Result<VertexOrdering> {
    let map = parse_root(text)?;
    expect_keys(&map, &["n", "positions"], "ordering")?;
    let n = parse_count(&map, "n", MAX_VERTICES, "ordering")?;
    let entries = vertex_entries(&map, "positions", n, "ordering")?;
    let positions = entries
        .iter()
        .enumerate()
        .map(|(v, value)| {
            value
                .as_u64()
                .and_then(|p| usize::try_from(p).ok())
                .ok_or_else(|| Error::parse(format!("positions[{v}]: expected a position")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexOrdering::from_positions(positions)
}

/// Cubes rescaled to side 1, with rational anchors; the normalized document
/// form of a cube family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizedCubeRepresentation {
    dims: usize,
    anchors: Vec<Vec<Rational>>,
}

impl NormalizedCubeRepresentation {
    pub fn n(&self) -> usize {
        self.anchors.len()
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn anchor(&self, v: usize) -> &[Rational] {
        &self.anchors[v]
    }

    /// Dimension `p` as plain intervals `[a, a + 1]`.
    pub fn dimension_layer(&self, p: usize) -> Result<IntervalRepresentation> {
        if p >= self.dims {
            return Err(Error::invalid(format!(
                "dimension {p} is out of range for a {}-dimensional family",
                self.dims
            )));
        }
        let one = integer(1);
        let intervals = self
            .anchors
            .iter()
            .map(|a| Interval::new(a[p], a[p] + one).expect("unit interval is well formed"))
            .collect::<Vec<_>>();
        Ok(IntervalRepresentation::new(intervals))
    }

    /// The graph realized by the side-1 cubes: an edge wherever anchors stay
    /// within 1 of each other in every dimension.
    pub fn intersection_graph(&self) -> Graph {
        let one = integer(1);
        Graph::from_pairwise(self.n(), |u, v| {
            self.anchors[u]
                .iter()
                .zip(&self.anchors[v])
                .all(|(a, b)| le_exact(a, &(b + one)) && le_exact(b, &(a + one)))
        })
    }
}

/// A parsed cube document: either integer anchors with an explicit side, or
/// the normalized side-1 form with rational anchors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CubeDocument {
    Integer(CubeRepresentation),
    Normalized(NormalizedCubeRepresentation),
}

impl CubeDocument {
    pub fn n(&self) -> usize {
        match self {
            CubeDocument::Integer(c) => c.n(),
            CubeDocument::Normalized(c) => c.n(),
        }
    }

    pub fn dims(&self) -> usize {
        match self {
            CubeDocument::Integer(c) => c.dims(),
            CubeDocument::Normalized(c) => c.dims(),
        }
    }

    pub fn intersection_graph(&self) -> Graph {
        match self {
            CubeDocument::Integer(c) => c.intersection_graph(),
            CubeDocument::Normalized(c) => c.intersection_graph(),
        }
    }
}

/// Parses a cube document, accepting both anchor styles: integer coordinates
/// (`"anchors":{"0":[2,0],..}` with any positive side) and normalized
/// rational pairs (`"anchors":{"0":[[1,2],[0,1]],..}` with side 1).
pub fn cube_from_json(text: &str) -> Result<CubeDocument> {
    let map = parse_root(text)?;
    expect_keys(&map, &["n", "dims", "side", "anchors"], "cube representation")?;
    let n = parse_count(&map, "n", MAX_VERTICES, "cube representation")?;
    let dims = parse_count(&map, "dims", MAX_DIMS, "cube representation")?;
    let entries = vertex_entries(&map, "anchors", n, "cube representation")?;
    let rows = entries
        .iter()
        .enumerate()
        .map(|(v, value)| parse_fixed_array(value, dims, &format!("anchors[{v}]")))
        .collect::<Result<Vec<_>>>()?;

    let normalized = rows.iter().flat_map(|row| row.iter()).any(Value::is_array);
    if !normalized {
        let side = parse_scalar(&map["side"], "side")?;
        let anchors = rows
            .iter()
            .enumerate()
            .map(|(v, row)| {
                row.iter()
                    .enumerate()
                    .map(|(p, a)| parse_scalar(a, &format!("anchors[{v}][{p}]")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(CubeDocument::Integer(CubeRepresentation::new(dims, side, anchors)?));
    }

    let side = map["side"]
        .as_u64()
        .ok_or_else(|| Error::parse("cube representation: field \"side\" must be an integer"))?;
    if side != 1 {
        return Err(Error::parse(
            "cube representation: rational anchors require side 1".to_string(),
        ));
    }
    let anchors = rows
        .iter()
        .enumerate()
        .map(|(v, row)| {
            row.iter()
                .enumerate()
                .map(|(p, a)| parse_rational_pair(a, &format!("anchors[{v}][{p}]")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CubeDocument::Normalized(NormalizedCubeRepresentation { dims, anchors }))
}

/// Any representation document, detected by its fields.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepresentationDocument {
    Interval(IntervalRepresentation),
    Unit(UnitIntervalRepresentation),
    Boxes(BoxRepresentation),
    Cube(CubeDocument),
}

impl RepresentationDocument {
    pub fn n(&self) -> usize {
        match self {
            RepresentationDocument::Interval(rep) => rep.n(),
            RepresentationDocument::Unit(rep) => rep.n(),
            RepresentationDocument::Boxes(rep) => rep.n(),
            RepresentationDocument::Cube(doc) => doc.n(),
        }
    }

    /// The graph the document realizes.
    pub fn intersection_graph(&self) -> Graph {
        match self {
            RepresentationDocument::Interval(rep) => rep.intersection_graph(),
            RepresentationDocument::Unit(rep) => rep.intersection_graph(),
            RepresentationDocument::Boxes(rep) => rep.intersection_graph(),
            RepresentationDocument::Cube(doc) => doc.intersection_graph(),
        }
    }

    /// The document as one interval family per dimension. Zero-dimensional
    /// cube and box documents yield no layers: they realize a complete graph.
    pub fn interval_layers(&self) -> Vec<IntervalRepresentation> {
        match self {
            RepresentationDocument::Interval(rep) => vec![rep.clone()],
            RepresentationDocument::Unit(rep) => vec![rep.to_intervals()],
            RepresentationDocument::Boxes(rep) => (0..rep.dims())
                .map(|p| rep.project(p).expect("dimension is in range"))
                .collect(),
            RepresentationDocument::Cube(CubeDocument::Integer(cube)) => (0..cube.dims())
                .map(|p| {
                    cube.dimension_layer(p).expect("dimension is in range").to_intervals()
                })
                .collect(),
            RepresentationDocument::Cube(CubeDocument::Normalized(cube)) => (0..cube.dims())
                .map(|p| cube.dimension_layer(p).expect("dimension is in range"))
                .collect(),
        }
    }
}

/// Parses any representation document, keyed off its distinguishing field:
/// `intervals`, `length`, `boxes`, or `side` + `anchors`.
pub fn representation_from_json(text: &str) -> Result<RepresentationDocument> {
    let map = parse_root(text)?;
    if map.contains_key("intervals") {
        return interval_rep_from_json(text).map(RepresentationDocument::Interval);
    }
    if map.contains_key("length") {
        return unit_rep_from_json(text).map(RepresentationDocument::Unit);
    }
    if map.contains_key("boxes") {
        return box_rep_from_json(text).map(RepresentationDocument::Boxes);
    }
    if map.contains_key("side") {
        return cube_from_json(text).map(RepresentationDocument::Cube);
    }
    Err(Error::parse(
        "unrecognized representation: expected one of the fields \
         \"intervals\", \"length\", \"boxes\", or \"side\"",
    ))
}

/// Imports a plain-text edge list: one `u v` pair per line, `#` comments and
/// blank lines ignored. An optional `n <count>` line fixes the vertex count;
/// otherwise it is the largest endpoint plus one.
pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let context = || format!("edge list line {}", idx + 1);
        match fields.as_slice() {
            ["n", count] => {
                let n: usize = count
                    .parse()
                    .map_err(|_| Error::parse(format!("{}: invalid vertex count", context())))?;
                if declared_n.replace(n).is_some() {
                    return Err(Error::parse(format!(
                        "{}: vertex count declared twice",
                        context()
                    )));
                }
            }
            [u, v] => {
                let parse = |s: &str| -> Result<usize> {
                    s.parse().map_err(|_| {
                        Error::parse(format!("{}: invalid vertex index {s:?}", context()))
                    })
                };
                edges.push((parse(u)?, parse(v)?));
            }
            _ => {
                return Err(Error::parse(format!(
                    "{}: expected \"u v\" or \"n <count>\"",
                    context()
                )))
            }
        }
    }
    let n = declared_n
        .unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    if n > MAX_VERTICES {
        return Err(Error::parse(format!(
            "edge list declares {n} vertices, more than the limit {MAX_VERTICES}"
        )));
    }
    Graph::from_edges(n, &edges)
}
