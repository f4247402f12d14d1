//! Reduced simplicial homology, exactly: boundary matrices in the
//! augmented convention (the empty face sits in degree -1), integer
//! homology via Smith normal form, and field dimensions via a separate
//! elimination path so the universal-coefficient identity genuinely
//! cross-checks two routes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::mask::{self, VertexMask};
use crate::snf::{rank_mod_p, rank_rational, smith_normal_form, IntMat, SmithForm};
use crate::Result;

/// Guard against accidentally asking for the chain complex of something
/// astronomically large.
pub const MAX_TOTAL_FACES: usize = 2_000_000;

/// A finitely generated abelian group: free rank plus invariant factors
/// above 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        HomologyGroup {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_owned()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The augmented chain complex of a simplicial complex: faces graded by
/// vertex count (level k holds the k-vertex faces, level 0 the empty
/// face), and the boundary matrix out of each level.
#[derive(Debug, Clone)]
pub struct ChainBoundary {
    levels: Vec<Vec<VertexMask>>,
    mats: Vec<IntMat>,
}

impl ChainBoundary {
    /// Build the boundary matrices; canonical face order is (dimension,
    /// then mask value), signs by position in the sorted vertex list.
    pub fn new(complex: &SimplicialComplex) -> Result<Self> {
        if complex.is_void() {
            return Err(Error::VoidComplex {
                operation: "chain boundary",
            });
        }
        let levels = complex.faces_graded();
        let total: usize = levels.iter().map(Vec::len).sum();
        if total > MAX_TOTAL_FACES {
            return Err(Error::CapacityExceeded {
                vertices: total,
                bound: MAX_TOTAL_FACES,
            });
        }
        let mut mats = Vec::with_capacity(levels.len());
        // level 0 (the empty face) maps to the zero module
        mats.push(IntMat::zeros(0, levels[0].len()));
        for k in 1..levels.len() {
            let below = &levels[k - 1];
            let here = &levels[k];
            let mut mat = IntMat::zeros(below.len(), here.len());
            for (col, &face) in here.iter().enumerate() {
                for (position, v) in mask::bits(face).enumerate() {
                    let sub = face & !(1 << v);
                    let row = below
                        .binary_search(&sub)
                        .expect("complexes are closed under subsets");
                    let sign = if position % 2 == 0 { 1 } else { -1 };
                    mat.set(row, col, sign);
                }
            }
            mats.push(mat);
        }
        Ok(ChainBoundary { levels, mats })
    }

    /// Faces with `k` vertices (homological degree k-1).
    pub fn level(&self, k: usize) -> &[VertexMask] {
        &self.levels[k]
    }

    pub fn top_level(&self) -> usize {
        self.levels.len() - 1
    }

    /// Boundary matrix out of level `k`; zero-shaped beyond the top.
    pub fn matrix(&self, k: usize) -> Option<&IntMat> {
        self.mats.get(k)
    }

    /// Verify d ∘ d = 0 by multiplying consecutive matrices.
    pub fn is_complex(&self) -> bool {
        for k in 1..self.mats.len() {
            let lower = &self.mats[k - 1];
            let upper = &self.mats[k];
            if lower.cols() != upper.rows() {
                return false;
            }
            for i in 0..lower.rows() {
                for j in 0..upper.cols() {
                    let dot: i64 = (0..upper.rows())
                        .map(|t| lower.get(i, t) * upper.get(t, j))
                        .sum();
                    if dot != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Integer homology in every reduced degree -1 ..= top dimension.
    pub fn homology_z_all(&self) -> Vec<(i32, HomologyGroup)> {
        let snfs: Vec<SmithForm> = self.mats.iter().map(smith_normal_form).collect();
        (0..self.levels.len())
            .map(|k| {
                let chain_dim = self.levels[k].len();
                let rank_out = snfs[k].rank();
                let (rank_in, torsion) = match snfs.get(k + 1) {
                    Some(s) => (s.rank(), s.torsion()),
                    None => (0, Vec::new()),
                };
                let group = HomologyGroup {
                    rank: chain_dim - rank_out - rank_in,
                    torsion,
                };
                (k as i32 - 1, group)
            })
            .collect()
    }

    /// Homology dimensions over a field in every reduced degree, computed
    /// by direct elimination (not from the Smith form).
    pub fn field_dims_all(&self, field: FieldSpec) -> Vec<(i32, usize)> {
        let rank_of = |m: &IntMat| -> usize {
            match field {
                FieldSpec::Rationals => rank_rational(m),
                FieldSpec::Prime(p) => rank_mod_p(m, p),
            }
        };
        let ranks: Vec<usize> = self.mats.iter().map(rank_of).collect();
        (0..self.levels.len())
            .map(|k| {
                let chain_dim = self.levels[k].len();
                let rank_in = ranks.get(k + 1).copied().unwrap_or(0);
                (k as i32 - 1, chain_dim - ranks[k] - rank_in)
            })
            .collect()
    }

    /// `dim rows cols` headers plus nonzero triplets for every level, the
    /// debugging export.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (k, m) in self.mats.iter().enumerate() {
            out.push_str(&format!("dim {} {} {}\n", k as i32 - 1, m.rows(), m.cols()));
            for line in m.triplets_string().lines().skip(1) {
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    }
}

/// Reduced integer homology in one degree. The void complex has all
/// groups zero; the EMPTY complex contributes ZZ in degree -1.
pub fn homology_z(complex: &SimplicialComplex, degree: i32) -> HomologyGroup {
    homology_z_all(complex)
        .into_iter()
        .find(|&(d, _)| d == degree)
        .map(|(_, g)| g)
        .unwrap_or_else(HomologyGroup::trivial)
}

/// All reduced integer homology groups, degree -1 through the dimension.
pub fn homology_z_all(complex: &SimplicialComplex) -> Vec<(i32, HomologyGroup)> {
    if complex.is_void() {
        return Vec::new();
    }
    ChainBoundary::new(complex)
        .expect("non-void")
        .homology_z_all()
}

/// Reduced homology dimension over a field in one degree.
pub fn homology_dim(complex: &SimplicialComplex, degree: i32, field: FieldSpec) -> usize {
    if complex.is_void() {
        return 0;
    }
    ChainBoundary::new(complex)
        .expect("non-void")
        .field_dims_all(field)
        .into_iter()
        .find(|&(d, _)| d == degree)
        .map(|(_, v)| v)
        .unwrap_or(0)
}

/// Primes dividing any torsion invariant factor in any reduced degree:
/// exactly the characteristics where field Betti numbers can jump.
pub fn torsion_primes(complex: &SimplicialComplex) -> BTreeSet<u64> {
    let mut primes = BTreeSet::new();
    for (_, group) in homology_z_all(complex) {
        for factor in group.torsion {
            primes.extend(prime_factors(&factor));
        }
    }
    primes
}

/// Trial-division factorization; torsion factors at this scale are tiny.
pub fn prime_factors(n: &BigInt) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut n = n.clone();
    if n < BigInt::from(2) {
        return out;
    }
    let mut d = 2u64;
    loop {
        let big_d = BigInt::from(d);
        if &big_d * &big_d > n {
            break;
        }
        while (&n % &big_d).is_zero() {
            out.insert(d);
            n /= &big_d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::from(1) {
        let p: u64 = (&n).try_into().expect("torsion factor fits in u64");
        out.insert(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::sr_complex;
    use crate::ideal::Ring;
    use crate::testutil::{complex, reisner_ideal, rp2_complex};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn z(rank: usize) -> HomologyGroup {
        HomologyGroup::free(rank)
    }

    fn z_mod(factors: &[u64]) -> HomologyGroup {
        HomologyGroup {
            rank: 0,
            torsion: factors.iter().map(|&f| BigInt::from(f)).collect(),
        }
    }

    #[test]
    fn boundary_shapes() {
        let r = Ring::standard(1);
        let point = SimplicialComplex::simplex(r).unwrap();
        let chain = ChainBoundary::new(&point).unwrap();
        // augmentation: one vertex mapping onto the empty face
        let aug = chain.matrix(1).unwrap();
        assert_eq!((aug.rows(), aug.cols()), (1, 1));
        assert_eq!(aug.get(0, 0), 1);

        let r2 = Ring::standard(2);
        let edge = SimplicialComplex::simplex(r2).unwrap();
        let chain = ChainBoundary::new(&edge).unwrap();
        let d1 = chain.matrix(2).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (2, 1));
        assert_eq!((d1.get(0, 0), d1.get(1, 0)), (1, -1));

        let rp2 = rp2_complex();
        let chain = ChainBoundary::new(&rp2).unwrap();
        let d2 = chain.matrix(3).unwrap();
        assert_eq!((d2.rows(), d2.cols()), (15, 10));
        assert!(chain.is_complex());
    }

    #[test]
    fn boundary_rejects_void() {
        let void = SimplicialComplex::void(Ring::standard(2));
        assert!(matches!(
            ChainBoundary::new(&void),
            Err(Error::VoidComplex { .. })
        ));
    }

    #[test]
    fn rp2_homology() {
        let rp2 = rp2_complex();
        assert_eq!(homology_z(&rp2, 0), z(0));
        assert_eq!(homology_z(&rp2, 1), z_mod(&[2]));
        assert_eq!(homology_z(&rp2, 2), z(0));
        assert_eq!(torsion_primes(&rp2), BTreeSet::from([2]));

        assert_eq!(homology_dim(&rp2, 1, FieldSpec::Prime(2)), 1);
        assert_eq!(homology_dim(&rp2, 2, FieldSpec::Prime(2)), 1);
        assert_eq!(homology_dim(&rp2, 1, FieldSpec::Rationals), 0);
        assert_eq!(homology_dim(&rp2, 2, FieldSpec::Rationals), 0);
        assert_eq!(homology_dim(&rp2, 1, FieldSpec::Prime(3)), 0);
    }

    #[test]
    fn rp2_complex_is_the_reisner_sr_complex() {
        assert_eq!(sr_complex(&reisner_ideal()).unwrap(), rp2_complex());
    }

    #[test]
    fn cones_are_acyclic() {
        let r = Ring::standard(4);
        let cone = complex(&r, &["x1 x2 x3", "x1 x3 x4"]);
        assert_eq!(cone.cone_apex(), Some(0));
        for (_, g) in homology_z_all(&cone) {
            assert!(g.is_trivial());
        }
        for f in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(5)] {
            for (_, d) in ChainBoundary::new(&cone).unwrap().field_dims_all(f) {
                assert_eq!(d, 0);
            }
        }
    }

    #[test]
    fn spheres_have_top_homology() {
        // boundary of the n-simplex is an (n-2)-sphere
        for n in 2..=5 {
            let r = Ring::standard(n);
            let full = mask::full(n);
            let facets: Vec<VertexMask> = (0..n).map(|v| full & !(1 << v)).collect();
            let sphere = SimplicialComplex::from_facets(r, facets).unwrap();
            for (d, g) in homology_z_all(&sphere) {
                if d == n as i32 - 2 {
                    assert_eq!(g, z(1));
                } else {
                    assert!(g.is_trivial(), "degree {d} of S^{}", n - 2);
                }
            }
        }
    }

    #[test]
    fn empty_complex_has_reduced_degree_minus_one() {
        let empty = SimplicialComplex::empty_complex(Ring::standard(2));
        let groups = homology_z_all(&empty);
        assert_eq!(groups, vec![(-1, z(1))]);
        assert_eq!(homology_dim(&empty, -1, FieldSpec::Prime(3)), 1);
        // void: everything vanishes
        let void = SimplicialComplex::void(Ring::standard(2));
        assert!(homology_z_all(&void).is_empty());
        assert_eq!(homology_z(&void, 0), z(0));
        assert_eq!(homology_dim(&void, -1, FieldSpec::Rationals), 0);
    }

    #[test]
    fn two_points_and_circle() {
        let r = Ring::standard(2);
        let pts = complex(&r, &["x1", "x2"]);
        assert_eq!(homology_z(&pts, 0), z(1));

        let r3 = Ring::standard(3);
        let circle = complex(&r3, &["x1 x2", "x2 x3", "x1 x3"]);
        assert_eq!(homology_z(&circle, 0), z(0));
        assert_eq!(homology_z(&circle, 1), z(1));
    }

    #[test]
    fn boundary_squares_to_zero_on_random_complexes() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..50 {
            let n = rng.random_range(1..=7);
            let r = Ring::standard(n);
            let facets: Vec<VertexMask> = (0..rng.random_range(1..=6))
                .map(|_| rng.random_range(0..1u64 << n))
                .collect();
            let cx = SimplicialComplex::from_facets(r, facets).unwrap();
            assert!(ChainBoundary::new(&cx).unwrap().is_complex());
        }
    }

    #[test]
    fn uct_identity_small() {
        // dim_{F_p} = rank + t_i(p) + t_{i-1}(p); dim_Q = rank
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..40 {
            let n = rng.random_range(1..=6);
            let r = Ring::standard(n);
            let facets: Vec<VertexMask> = (0..rng.random_range(1..=8))
                .map(|_| rng.random_range(0..1u64 << n))
                .collect();
            let cx = SimplicialComplex::from_facets(r, facets).unwrap();
            let chain = ChainBoundary::new(&cx).unwrap();
            let over_z = chain.homology_z_all();
            let t = |degree: i32, p: u64| -> usize {
                over_z
                    .iter()
                    .find(|&&(d, _)| d == degree)
                    .map(|(_, g)| {
                        g.torsion
                            .iter()
                            .filter(|f| (*f % BigInt::from(p)).is_zero())
                            .count()
                    })
                    .unwrap_or(0)
            };
            for (d, q_dim) in chain.field_dims_all(FieldSpec::Rationals) {
                let rank = over_z.iter().find(|&&(x, _)| x == d).unwrap().1.rank;
                assert_eq!(q_dim, rank);
            }
            for p in [2u64, 3, 5, 7] {
                for (d, p_dim) in chain.field_dims_all(FieldSpec::Prime(p)) {
                    let rank = over_z.iter().find(|&&(x, _)| x == d).unwrap().1.rank;
                    assert_eq!(p_dim, rank + t(d, p) + t(d - 1, p), "degree {d}, p={p}");
                }
            }
        }
    }

    #[test]
    fn factorization() {
        assert_eq!(prime_factors(&BigInt::from(1)), BTreeSet::new());
        assert_eq!(prime_factors(&BigInt::from(2)), BTreeSet::from([2]));
        assert_eq!(prime_factors(&BigInt::from(360)), BTreeSet::from([2, 3, 5]));
        assert_eq!(prime_factors(&BigInt::from(97)), BTreeSet::from([97]));
    }
}
