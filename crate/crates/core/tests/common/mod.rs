//! Shared fixtures for the integration tests.

use srlc_core::{FieldSpec, SimplicialComplex, Workspace};

pub fn complex(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, facets.iter().map(|f| f.to_vec())).unwrap()
}

pub fn workspace(n: u32, facets: &[&[u32]], field: FieldSpec) -> Workspace {
    Workspace::new(complex(n, facets), field)
}

pub struct Fixture {
    pub name: &'static str,
    pub n: u32,
    pub facets: &'static [&'static [u32]],
}

/// The standing test corpus: spheres, Buchsbaum and singular examples, the
/// characteristic-sensitive projective plane, a torus, a pure 3-complex with
/// a singular edge, and a non-pure complex.
pub const CORPUS: &[Fixture] = &[
    Fixture {
        name: "boundary-simplex-2",
        n: 3,
        facets: &[&[1, 2], &[2, 3], &[1, 3]],
    },
    Fixture {
        name: "boundary-simplex-3",
        n: 4,
        facets: &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]],
    },
    Fixture {
        name: "bowtie",
        n: 5,
        facets: &[&[1, 2, 3], &[1, 4, 5]],
    },
    Fixture {
        name: "two-disjoint-filled-triangles",
        n: 6,
        facets: &[&[1, 2, 3], &[4, 5, 6]],
    },
    Fixture {
        name: "two-disjoint-edges",
        n: 4,
        facets: &[&[1, 2], &[3, 4]],
    },
    Fixture {
        name: "rp2-6",
        n: 6,
        facets: &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 5],
            &[1, 4, 6],
            &[1, 5, 6],
            &[2, 3, 6],
            &[2, 4, 5],
            &[2, 5, 6],
            &[3, 4, 5],
            &[3, 4, 6],
        ],
    },
    Fixture {
        name: "torus-7",
        n: 7,
        facets: &[
            &[1, 2, 4],
            &[1, 2, 6],
            &[1, 3, 4],
            &[1, 3, 7],
            &[1, 5, 6],
            &[1, 5, 7],
            &[2, 3, 5],
            &[2, 3, 7],
            &[2, 4, 5],
            &[2, 6, 7],
            &[3, 4, 6],
            &[3, 5, 6],
            &[4, 5, 7],
            &[4, 6, 7],
        ],
    },
    Fixture {
        name: "suspended-bowtie",
        n: 7,
        facets: &[&[1, 2, 3, 6], &[1, 4, 5, 6], &[1, 2, 3, 7], &[1, 4, 5, 7]],
    },
    Fixture {
        name: "nonpure-example",
        n: 4,
        facets: &[&[1, 2, 3], &[4]],
    },
];
