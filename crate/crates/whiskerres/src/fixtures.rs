//! Shared unit-test fixtures.

use crate::corpus;
use crate::graph::{CliquePartition, Graph};

pub fn k2() -> Graph {
    Graph::new(&["a", "b"], &[("a", "b")]).unwrap()
}

pub fn k1() -> Graph {
    Graph::new(&["x:1,1"], &[]).unwrap()
}

/// The 4-vertex running fixture: K4 minus the x:1,2 - x:2,1 edge.
pub fn k4_minus_edge() -> Graph {
    corpus::running_example().0
}

pub fn k4_minus_edge_partition(g: &Graph) -> CliquePartition {
    g.validate_partition(&[vec!["x:1,1", "x:1,2", "x:1,3"], vec!["x:2,1"]]).unwrap()
}

pub fn cycle4() -> Graph {
    Graph::new(
        &["v1", "v2", "v3", "v4"],
        &[("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")],
    )
    .unwrap()
}

/// A Cohen-Macaulay very well-covered fixture with a cross edge x1-y2 and
/// no x1-x2 edge; its covers are {x1,x2}, {x1,y2}, {y1,y2}.
pub fn vwc_staircase() -> Graph {
    corpus::staircase_base()
}
