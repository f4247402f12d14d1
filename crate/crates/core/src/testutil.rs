//! Shared fixtures for the unit tests: tiny parsers and the Reisner
//! instance, so test modules stay readable.

use crate::complex::SimplicialComplex;
use crate::ideal::{Monomial, MonomialIdeal, Ring};

/// Parse `x1^2*x2` against a ring; `1` is the unit monomial.
pub fn mono(ring: &Ring, s: &str) -> Monomial {
    if s == "1" {
        return Monomial::one();
    }
    Monomial::from_exponents(s.split('*').map(|part| {
        let (name, exp) = match part.split_once('^') {
            Some((n, e)) => (n, e.parse().unwrap()),
            None => (part, 1),
        };
        (
            ring.index_of(name)
                .unwrap_or_else(|| panic!("no variable {name}")),
            exp,
        )
    }))
}

pub fn ideal(r: &Ring, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::new(r.clone(), gens.iter().map(|s| mono(r, s))).unwrap()
}

/// Build a complex from facet strings like `"x1 x3"`; `"."` is the empty
/// facet.
pub fn complex(r: &Ring, facets: &[&str]) -> SimplicialComplex {
    let masks = facets
        .iter()
        .map(|f| {
            if *f == "." {
                return 0;
            }
            f.split_whitespace()
                .map(|name| 1u64 << r.index_of(name).unwrap())
                .fold(0u64, |a, b| a | b)
        })
        .collect();
    SimplicialComplex::from_facets(r.clone(), masks).unwrap()
}

pub fn reisner_ring() -> Ring {
    Ring::standard(6)
}

/// The ten cubic generators of the Stanley-Reisner ideal of the minimal
/// triangulation of the real projective plane.
pub fn reisner_ideal() -> MonomialIdeal {
    let r = reisner_ring();
    ideal(
        &r,
        &[
            "x1*x2*x3",
            "x1*x2*x4",
            "x1*x3*x5",
            "x2*x4*x5",
            "x3*x4*x5",
            "x2*x3*x6",
            "x1*x4*x6",
            "x3*x4*x6",
            "x1*x5*x6",
            "x2*x5*x6",
        ],
    )
}

/// The ten triangles of the minimal triangulation of RP^2.
pub fn rp2_complex() -> SimplicialComplex {
    let r = reisner_ring();
    complex(
        &r,
        &[
            "x4 x5 x6",
            "x3 x5 x6",
            "x2 x4 x6",
            "x1 x3 x6",
            "x1 x2 x6",
            "x1 x4 x5",
            "x2 x3 x5",
            "x1 x2 x5",
            "x2 x3 x4",
            "x1 x3 x4",
        ],
    )
}
