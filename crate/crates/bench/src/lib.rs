//! Shared fixtures for the benchmarks.

use coopnet_core::generators::{lattice, star, Neighborhood};
use coopnet_core::{Family, Graph};

/// Graphs small enough for the dense and exact paths.
pub fn small_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("star_9", star(9).expect("valid star")),
        ("lattice_3_moore", lattice(3, Neighborhood::Moore).expect("valid lattice")),
        ("joint_star_2_6", Family::JointStar { hubs: 2, leaves: 6 }.generate(0).expect("valid joint star")),
    ]
}

/// Graphs that take the iterative path.
pub fn large_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("lattice_10_vn", lattice(10, Neighborhood::VonNeumann).expect("valid lattice")),
        ("lattice_20_moore", lattice(20, Neighborhood::Moore).expect("valid lattice")),
        ("er_100_0.05", Family::ErdosRenyi { n: 100, p: 0.05 }.generate(7).expect("connected sample")),
    ]
}
