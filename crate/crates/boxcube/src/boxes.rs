//! Axis-parallel box representations and their conversion to cubes.
//!
//! A box family on `b` dimensions realizes the intersection of its `b`
//! per-dimension interval graphs. Converting each projection with the
//! interval-to-cube pipeline and concatenating the anchors therefore yields
//! a cube family for the same graph in at most `b * ceil(log2 n)`
//! dimensions; projections whose interval graph is complete contribute
//! nothing and are dropped.

use crate::cube::{ceil_log2, interval_to_cube, CubeRepresentation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalRepresentation};

/// One axis-parallel box per vertex: `dims` closed intervals each.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxRepresentation {
    dims: usize,
    boxes: Vec<Vec<Interval>>,
}

impl BoxRepresentation {
    /// Builds a box family, enforcing a uniform dimension count.
    pub fn new(dims: usize, boxes: Vec<Vec<Interval>>) -> Result<Self> {
        if let Some(bad) = boxes.iter().position(|b| b.len() != dims) {
            return Err(Error::invalid(format!(
                "vertex {bad} has {} intervals, expected {dims}",
                boxes[bad].len()
            )));
        }
        Ok(BoxRepresentation { dims, boxes })
    }

    pub fn n(&self) -> usize {
        self.boxes.len()
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn box_of(&self, v: usize) -> &[Interval] {
        &self.boxes[v]
    }

    /// The interval representation formed by dimension `p` of every box.
    pub fn project(&self, p: usize) -> Result<IntervalRepresentation> {
        if p >= self.dims {
            return Err(Error::invalid(format!(
                "dimension {p} is out of range for a {}-dimensional family",
                self.dims
            )));
        }
        Ok(IntervalRepresentation::new(
            self.boxes.iter().map(|b| b[p].clone()).collect(),
        ))
    }

    /// Whether the boxes of `u` and `v` share a point, i.e. their intervals
    /// intersect in every dimension. With zero dimensions every pair does.
    pub fn boxes_intersect(&self, u: usize, v: usize) -> bool {
        self.boxes[u].iter().zip(&self.boxes[v]).all(|(a, b)| a.intersects(b))
    }

    /// The graph realized by the boxes.
    pub fn intersection_graph(&self) -> Graph {
        Graph::from_pairwise(self.n(), |u, v| self.boxes_intersect(u, v))
    }
}

/// Converts a box representation into a cube representation of the same
/// graph by converting every projection and concatenating the resulting
/// anchors. The output has at most `dims * ceil(log2 n)` dimensions and one
/// shared side; complete inputs collapse to zero dimensions.
pub fn box_to_cube(rep: &BoxRepresentation) -> CubeRepresentation {
    let n = rep.n();
    let side = 1i64 << ceil_log2(n.max(1));
    let g = rep.intersection_graph();
    if g.is_complete() {
        return CubeRepresentation::new(0, side, vec![Vec::new(); n])
            .expect("zero-dimensional family");
    }
    let mut anchors: Vec<Vec<i64>> = vec![Vec::new(); n];
    let mut dims = 0;
    for p in 0..rep.dims() {
        let projection = rep.project(p).expect("p < dims");
        let cube = interval_to_cube(&projection);
        // Complete projections come back zero-dimensional and vanish here;
        // everything else shares the side 2^ceil(log2 n).
        debug_assert!(cube.dims() == 0 || cube.side() == side);
        dims += cube.dims();
        for (v, anchor) in anchors.iter_mut().enumerate() {
            anchor.extend_from_slice(cube.anchor(v));
        }
    }
    CubeRepresentation::new(dims, side, anchors)
        .expect("concatenated anchors have uniform length")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::ceil_log2;

    /// A two-dimensional box family realizing the 4-cycle 0-1-2-3-0: the
    /// first dimension separates 0 from 2, the second separates 1 from 3.
    pub(crate) fn four_cycle_boxes() -> BoxRepresentation {
        let full = Interval::from_ints(0, 3);
        let left = Interval::from_ints(0, 1);
        let right = Interval::from_ints(2, 3);
        BoxRepresentation::new(
            2,
            vec![
                vec![left.clone(), full.clone()],
                vec![full.clone(), left.clone()],
                vec![right.clone(), full.clone()],
                vec![full, right],
            ],
        )
        .unwrap()
    }

    #[test]
    fn four_cycle_boxes_realize_the_cycle() {
        let rep = four_cycle_boxes();
        assert_eq!(rep.intersection_graph(), Graph::cycle(4).unwrap());
        // Each non-edge fails in exactly one dimension.
        assert!(!rep.box_of(0)[0].intersects(&rep.box_of(2)[0]));
        assert!(rep.box_of(0)[1].intersects(&rep.box_of(2)[1]));
        assert!(rep.box_of(1)[0].intersects(&rep.box_of(3)[0]));
        assert!(!rep.box_of(1)[1].intersects(&rep.box_of(3)[1]));
    }

    #[test]
    fn zero_dimensional_boxes_form_a_complete_graph() {
        let rep = BoxRepresentation::new(0, vec![Vec::new(); 4]).unwrap();
        assert!(rep.intersection_graph().is_complete());
    }

    #[test]
    fn projections_are_supersets_of_the_box_graph() {
        let rep = four_cycle_boxes();
        let g = rep.intersection_graph();
        for p in 0..2 {
            let pg = rep.project(p).unwrap().intersection_graph();
            assert!(g.edges().all(|(u, v)| pg.has_edge(u, v)));
        }
        assert!(rep.project(2).is_err());
    }

    #[test]
    fn ragged_boxes_are_rejected() {
        let bad = BoxRepresentation::new(
            2,
            vec![vec![Interval::from_ints(0, 1)], vec![Interval::from_ints(0, 1); 2]],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn cycle_boxes_convert_to_cubes_within_the_dimension_budget() {
        let rep = four_cycle_boxes();
        let cube = box_to_cube(&rep);
        assert!(cube.dims() <= 2 * ceil_log2(4));
        assert_eq!(cube.side(), 4);
        assert_eq!(cube.intersection_graph(), Graph::cycle(4).unwrap());
    }

    #[test]
    fn one_dimensional_boxes_agree_with_the_interval_pipeline() {
        let intervals = vec![
            Interval::from_ints(0, 2),
            Interval::from_ints(1, 3),
            Interval::from_ints(5, 6),
        ];
        let boxes =
            BoxRepresentation::new(1, intervals.iter().map(|i| vec![i.clone()]).collect()).unwrap();
        let direct = interval_to_cube(&IntervalRepresentation::new(intervals));
        assert_eq!(box_to_cube(&boxes), direct);
    }

    #[test]
    fn complete_box_families_collapse_to_zero_dimensions() {
        let shared = Interval::from_ints(0, 1);
        let rep = BoxRepresentation::new(2, vec![vec![shared.clone(), shared.clone()]; 5]).unwrap();
        let cube = box_to_cube(&rep);
        assert_eq!((cube.dims(), cube.side()), (0, 8));
        assert!(cube.intersection_graph().is_complete());
    }

    #[test]
    fn complete_projections_are_skipped_not_counted() {
        // Dimension 0 is complete (everyone overlaps); dimension 1 is the
        // only one that separates anything.
        let rep = BoxRepresentation::new(
            2,
            vec![
                vec![Interval::from_ints(0, 10), Interval::from_ints(0, 1)],
                vec![Interval::from_ints(1, 9), Interval::from_ints(4, 5)],
            ],
        )
        .unwrap();
        let cube = box_to_cube(&rep);
        assert_eq!(cube.dims(), ceil_log2(2));
        assert_eq!(cube.intersection_graph(), rep.intersection_graph());
    }
}
