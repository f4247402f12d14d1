//! Simplicial complexes on bit-mask faces, the Stanley-Reisner dictionary,
//! and the local operations: restriction, link, deletion, star, cone
//! detection, and the vertex-decomposability search.
//!
//! Two degenerate complexes are distinct representable values: the VOID
//! complex has no faces at all (empty facet list), while the EMPTY complex
//! `{∅}` has the empty face as its single facet. Vertices need not appear
//! in any facet; such ghost vertices stay in the vertex list, which is what
//! makes restriction match the ideal-side operation `(I ∩ k[W])R`.

use std::collections::{BTreeSet, HashMap};

use crate::error::Error;
use crate::ideal::{minimalize, Monomial, MonomialIdeal, Ring};
use crate::mask::{self, VertexMask, MAX_VERTICES};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Ring,
    facets: Vec<VertexMask>,
}

/// Certificate produced by the vertex-decomposability search: a tree of
/// shedding vertices ending in simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SheddingWitness {
    Simplex,
    Shed {
        vertex: String,
        link: Box<SheddingWitness>,
        deletion: Box<SheddingWitness>,
    },
}

impl SheddingWitness {
    /// Shedding vertices in search order, for flat display.
    pub fn shed_order(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a str>) {
        if let SheddingWitness::Shed {
            vertex,
            link,
            deletion,
        } = self
        {
            out.push(vertex);
            link.collect(out);
            deletion.collect(out);
        }
    }
}

impl SimplicialComplex {
    /// Build from generating faces: keeps the inclusion-maximal ones,
    /// sorted by size then mask value.
    pub fn from_facets(vertices: Ring, faces: Vec<VertexMask>) -> Result<Self> {
        let width = vertices.full_mask()?;
        for &f in &faces {
            if !mask::is_subset(f, width) {
                return Err(Error::UnknownVariable {
                    id: 63 - (f & !width).leading_zeros() as usize,
                });
            }
        }
        Ok(SimplicialComplex {
            vertices,
            facets: maximalize(faces),
        })
    }

    /// The complex with no faces at all.
    pub fn void(vertices: Ring) -> Self {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`, i.e. the (-1)-simplex.
    pub fn empty_complex(vertices: Ring) -> Self {
        SimplicialComplex {
            vertices,
            facets: vec![0],
        }
    }

    /// The full simplex on the whole vertex list.
    pub fn simplex(vertices: Ring) -> Result<Self> {
        let full = vertices.full_mask()?;
        Ok(SimplicialComplex {
            vertices,
            facets: vec![full],
        })
    }

    pub fn vertices(&self) -> &Ring {
        &self.vertices
    }

    pub fn facets(&self) -> &[VertexMask] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [0]
    }

    /// Union of all facets; vertices outside it are ghosts.
    pub fn support(&self) -> VertexMask {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    pub fn dimension(&self) -> Result<i32> {
        self.facets
            .iter()
            .map(|f| mask::size(*f) as i32 - 1)
            .max()
            .ok_or(Error::VoidComplex {
                operation: "dimension",
            })
    }

    pub fn is_pure(&self) -> Result<bool> {
        if self.is_void() {
            return Err(Error::VoidComplex {
                operation: "purity",
            });
        }
        let first = mask::size(self.facets[0]);
        Ok(self.facets.iter().all(|&f| mask::size(f) == first))
    }

    pub fn contains_face(&self, face: VertexMask) -> bool {
        self.facets.iter().any(|&f| mask::is_subset(face, f))
    }

    /// Every face of `self` is a face of `other` (vertex lists must match).
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.vertices == other.vertices
            && self.facets.iter().all(|&f| other.contains_face(f))
    }

    /// All faces, deduplicated, in canonical order (size, then mask value).
    pub fn faces(&self) -> Vec<VertexMask> {
        let mut set = BTreeSet::new();
        for &f in &self.facets {
            for s in mask::submasks(f) {
                set.insert(s);
            }
        }
        let mut out: Vec<VertexMask> = set.into_iter().collect();
        out.sort_by_key(|&f| (mask::size(f), f));
        out
    }

    /// Faces grouped by vertex count: `graded[k]` holds the k-vertex faces
    /// sorted by mask value. Empty outer vector for the void complex.
    pub fn faces_graded(&self) -> Vec<Vec<VertexMask>> {
        if self.is_void() {
            return Vec::new();
        }
        let top = self
            .facets
            .iter()
            .map(|&f| mask::size(f))
            .max()
            .unwrap_or(0);
        let mut graded = vec![Vec::new(); top + 1];
        let mut seen = BTreeSet::new();
        for &f in &self.facets {
            for s in mask::submasks(f) {
                if seen.insert(s) {
                    graded[mask::size(s)].push(s);
                }
            }
        }
        for level in &mut graded {
            level.sort_unstable();
        }
        graded
    }

    /// The induced subcomplex on `sigma`: faces contained in `sigma`, on
    /// the vertex list `sigma` (masks renumbered accordingly).
    pub fn restriction(&self, sigma: VertexMask) -> SimplicialComplex {
        let facets = maximalize(
            self.facets
                .iter()
                .map(|&f| mask::compress(f & sigma, sigma))
                .collect(),
        );
        SimplicialComplex {
            vertices: self.vertices.select(sigma),
            facets,
        }
    }

    /// Faces not containing `x`, on the vertex list without `x`.
    pub fn deletion(&self, x: usize) -> SimplicialComplex {
        let full = mask::full(self.vertices.len());
        self.restriction(full & !(1 << x))
    }

    /// `{F : x ∉ F, F ∪ {x} ∈ Δ}` on the vertex list without `x`; void
    /// when `x` lies in no face.
    pub fn link(&self, x: usize) -> SimplicialComplex {
        let bit = 1u64 << x;
        let keep = mask::full(self.vertices.len()) & !bit;
        let facets: Vec<VertexMask> = self
            .facets
            .iter()
            .filter(|&&f| f & bit != 0)
            .map(|&f| mask::compress(f & !bit, keep))
            .collect();
        SimplicialComplex {
            vertices: self.vertices.select(keep),
            facets: maximalize(facets),
        }
    }

    /// `{F : F ∪ {x} ∈ Δ}` on the full vertex list; the cone over `x`
    /// with base the link. Void when `x` lies in no face.
    pub fn star(&self, x: usize) -> SimplicialComplex {
        let bit = 1u64 << x;
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets: self
                .facets
                .iter()
                .filter(|&&f| f & bit != 0)
                .copied()
                .collect(),
        }
    }

    /// A vertex contained in every facet, lowest id first; `None` for the
    /// void complex or when no such vertex exists.
    pub fn cone_apex(&self) -> Option<usize> {
        let common = self
            .facets
            .iter()
            .copied()
            .reduce(|a, b| a & b)
            .unwrap_or(0);
        mask::bits(common).next()
    }

    /// Canonical form of the facet set after relabeling the support to
    /// dense ids; ghosts are dropped. Used as the memo key in the
    /// vertex-decomposability search.
    pub fn canonical_key(&self) -> Vec<VertexMask> {
        let support = self.support();
        let mut key: Vec<VertexMask> = self
            .facets
            .iter()
            .map(|&f| mask::compress(f, support))
            .collect();
        key.sort_unstable();
        key
    }

    /// Recursive shedding-vertex search with memoization on canonical
    /// facet sets. `None` means not vertex-decomposable (the void complex
    /// included); the EMPTY complex counts as the (-1)-simplex and is
    /// decomposable.
    pub fn vertex_decomposable(&self) -> Option<SheddingWitness> {
        if self.is_void() {
            return None;
        }
        let mut memo = HashMap::new();
        vd_search(self, &mut memo)
    }
}

fn vd_search(
    cx: &SimplicialComplex,
    memo: &mut HashMap<Vec<VertexMask>, Option<SheddingWitness>>,
) -> Option<SheddingWitness> {
    if cx.facets.len() == 1 {
        return Some(SheddingWitness::Simplex);
    }
    if !cx.is_pure().expect("non-void by construction") {
        return None;
    }
    let key = cx.canonical_key();
    if let Some(cached) = memo.get(&key) {
        return cached.clone();
    }
    let d = mask::size(cx.facets[0]) as i32 - 1;
    for x in mask::bits(cx.support()) {
        let link = cx.link(x);
        if link.is_void() || link.dimension().unwrap() != d - 1 {
            continue;
        }
        let deletion = cx.deletion(x);
        if deletion.is_void() || deletion.dimension().unwrap() != d {
            continue;
        }
        if let Some(link_witness) = vd_search(&link, memo) {
            if let Some(deletion_witness) = vd_search(&deletion, memo) {
                let witness = SheddingWitness::Shed {
                    vertex: cx.vertices.name(x).to_owned(),
                    link: Box::new(link_witness),
                    deletion: Box::new(deletion_witness),
                };
                memo.insert(key, Some(witness.clone()));
                return Some(witness);
            }
        }
    }
    memo.insert(key, None);
    None
}

fn maximalize(mut faces: Vec<VertexMask>) -> Vec<VertexMask> {
    faces.sort_by_key(|&f| std::cmp::Reverse(mask::size(f)));
    let mut maximal: Vec<VertexMask> = Vec::with_capacity(faces.len());
    for f in faces {
        if !maximal.iter().any(|&m| mask::is_subset(f, m)) {
            maximal.push(f);
        }
    }
    maximal.sort_by_key(|&f| (mask::size(f), f));
    maximal
}

/// The Stanley-Reisner complex of a squarefree ideal: subsets whose
/// product avoids I, computed by pruning the full simplex along the
/// minimal nonfaces. The unit ideal yields the void complex.
pub fn sr_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let ring = ideal.ring().clone();
    let full = ring.full_mask()?;
    let mut facets = vec![full];
    for g in ideal.generators() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree {
                generator: g.display_in(&ring),
            });
        }
        let nonface = g.support_mask();
        let mut next = Vec::with_capacity(facets.len());
        for &f in &facets {
            if !mask::is_subset(nonface, f) {
                next.push(f);
            } else {
                for v in mask::bits(nonface) {
                    next.push(f & !(1 << v));
                }
            }
        }
        facets = maximalize(next);
    }
    Ok(SimplicialComplex {
        vertices: ring,
        facets,
    })
}

/// The Stanley-Reisner ideal: minimal nonfaces of the complex. Inverse of
/// [`sr_complex`] on its image; the void complex maps to the unit ideal.
pub fn sr_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    let ring = complex.vertices().clone();
    if complex.is_void() {
        return MonomialIdeal::unit(ring);
    }
    let n = ring.len();
    debug_assert!(n <= MAX_VERTICES);
    // grow candidates by one vertex at a time: a minimal nonface has all
    // proper subsets among the faces
    let graded = complex.faces_graded();
    let mut nonfaces: Vec<VertexMask> = Vec::new();
    for v in 0..n {
        if !complex.contains_face(1 << v) {
            nonfaces.push(1 << v);
        }
    }
    let top = graded.len() - 1;
    for k in 1..=top + 1 {
        let below = &graded[k - 1];
        let mut seen = BTreeSet::new();
        for &f in below {
            for v in 0..n {
                let bit = 1u64 << v;
                if f & bit != 0 {
                    continue;
                }
                let candidate = f | bit;
                if !seen.insert(candidate) || complex.contains_face(candidate) {
                    continue;
                }
                let all_subsets_faces = mask::bits(candidate)
                    .all(|w| complex.contains_face(candidate & !(1 << w)));
                if all_subsets_faces {
                    nonfaces.push(candidate);
                }
            }
        }
    }
    let gens = nonfaces.into_iter().map(Monomial::squarefree).collect();
    MonomialIdeal::new(ring, minimalize(gens)).expect("vertex ids come from the ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{complex, ideal, mono, reisner_ideal, rp2_complex};

    #[test]
    fn void_and_empty_are_distinct() {
        let r = Ring::standard(2);
        let void = SimplicialComplex::void(r.clone());
        let empty = SimplicialComplex::empty_complex(r.clone());
        assert!(void.is_void());
        assert!(!empty.is_void());
        assert_ne!(void, empty);
        assert_eq!(empty.dimension().unwrap(), -1);
        assert!(empty.is_pure().unwrap());
        assert!(matches!(
            void.dimension(),
            Err(Error::VoidComplex { .. })
        ));
    }

    #[test]
    fn facet_cap() {
        let r = Ring::new((0..64).map(|i| format!("v{i}"))).unwrap();
        assert!(matches!(
            SimplicialComplex::simplex(r),
            Err(Error::TooManyVertices { count: 64, .. })
        ));
    }

    #[test]
    fn sr_complex_examples() {
        let r = Ring::standard(2);
        let full = sr_complex(&MonomialIdeal::zero(r.clone())).unwrap();
        assert_eq!(full.facets(), &[0b11]);

        let rp2 = sr_complex(&reisner_ideal()).unwrap();
        assert_eq!(rp2, rp2_complex());
        assert_eq!(rp2.facets().len(), 10);

        let r1 = Ring::standard(1);
        let point_gone = sr_complex(&ideal(&r1, &["x1"])).unwrap();
        assert!(point_gone.is_empty_complex());

        let unit = sr_complex(&MonomialIdeal::unit(r)).unwrap();
        assert!(unit.is_void());

        assert!(matches!(
            sr_complex(&ideal(&Ring::standard(1), &["x1^2"])),
            Err(Error::NotSquarefree { .. })
        ));
    }

    #[test]
    fn sr_ideal_examples() {
        let r = Ring::standard(3);
        let full = SimplicialComplex::simplex(r.clone()).unwrap();
        assert!(sr_ideal(&full).is_zero());

        assert_eq!(sr_ideal(&rp2_complex()), reisner_ideal());

        let void = SimplicialComplex::void(r.clone());
        assert!(sr_ideal(&void).is_unit());

        let empty = SimplicialComplex::empty_complex(r.clone());
        assert_eq!(sr_ideal(&empty), ideal(&r, &["x1", "x2", "x3"]));
    }

    #[test]
    fn sr_round_trip_keeps_ghosts() {
        let r = Ring::standard(3);
        let i = ideal(&r, &["x1", "x2*x3"]);
        let cx = sr_complex(&i).unwrap();
        // x1 is a ghost: still a vertex, in no facet
        assert_eq!(cx.vertices().len(), 3);
        assert!(!mask::contains(cx.support(), 0));
        assert_eq!(sr_ideal(&cx), i);
    }

    #[test]
    fn restriction_examples() {
        let rp2 = rp2_complex();
        let full = mask::full(6);
        assert_eq!(rp2.restriction(full), rp2);

        let r = Ring::standard(4);
        let simplex = SimplicialComplex::simplex(r).unwrap();
        let restricted = simplex.restriction(0b0101);
        assert_eq!(restricted.facets(), &[0b11]);
        assert_eq!(restricted.vertices().len(), 2);

        // drop x6: five triangles survive and absorb every boundary face
        let r5 = Ring::standard(5);
        let deleted = rp2.deletion(5);
        let expected = complex(
            &r5,
            &["x1 x4 x5", "x2 x3 x5", "x1 x2 x5", "x2 x3 x4", "x1 x3 x4"],
        );
        assert_eq!(deleted, expected);
    }

    #[test]
    fn restriction_matches_ideal_restriction() {
        // the SR complex of I ∩ k[W] is the restriction of the SR complex
        let i = reisner_ideal();
        let w: VertexMask = 0b011111;
        let restricted_ideal = i.restrict_to(w);
        let from_ideal = sr_complex(&restricted_ideal).unwrap().restriction(w);
        let from_complex = sr_complex(&i).unwrap().restriction(w);
        assert_eq!(from_ideal, from_complex);
    }

    #[test]
    fn link_deletion_star_identities() {
        let rp2 = rp2_complex();
        for x in 0..6 {
            let keep = mask::full(6) & !(1 << x);
            let star = rp2.star(x);
            let deletion = rp2.deletion(x);
            let link = rp2.link(x);
            // star ∪ deletion = Δ
            let mut union_faces: Vec<VertexMask> = star.facets().to_vec();
            union_faces.extend(
                deletion
                    .facets()
                    .iter()
                    .map(|&f| mask::decompress(f, keep)),
            );
            let union =
                SimplicialComplex::from_facets(rp2.vertices().clone(), union_faces).unwrap();
            assert_eq!(union, rp2);
            // star ∩ deletion = link, after dropping x from the vertex list
            assert_eq!(star.cone_apex(), Some(x));
            let star_shrunk = star.restriction(keep);
            let intersection_facets: Vec<VertexMask> = star_shrunk
                .faces()
                .into_iter()
                .filter(|&f| deletion.contains_face(f))
                .collect();
            let intersection = SimplicialComplex::from_facets(
                deletion.vertices().clone(),
                intersection_facets,
            )
            .unwrap();
            assert_eq!(intersection, link);
        }
    }

    #[test]
    fn link_ideal_is_colon_restricted() {
        // sr_ideal(link(Δ_I, x)) = (I : x) ∩ k[V \ x]
        let i = reisner_ideal();
        let cx = sr_complex(&i).unwrap();
        for x in 0..6 {
            let link = cx.link(x);
            let keep = mask::full(6) & !(1 << x);
            let colon = i
                .colon(&mono(i.ring(), i.ring().name(x)))
                .restrict_to(keep);
            // re-express the colon in the link's 5-variable ring
            let gens: Vec<Monomial> = colon
                .generators()
                .iter()
                .map(|g| Monomial::squarefree(mask::compress(g.support_mask(), keep)))
                .collect();
            let expected = MonomialIdeal::new(link.vertices().clone(), gens).unwrap();
            assert_eq!(sr_ideal(&link), expected);
        }
    }

    #[test]
    fn cone_detection() {
        let rp2 = rp2_complex();
        assert_eq!(rp2.cone_apex(), None);
        let r = Ring::standard(3);
        let cone = complex(&r, &["x1 x2", "x1 x3"]);
        assert_eq!(cone.cone_apex(), Some(0));
        let apex_of_star = rp2.star(2).cone_apex();
        assert_eq!(apex_of_star, Some(2));
        assert_eq!(
            SimplicialComplex::void(Ring::standard(1)).cone_apex(),
            None
        );
        // link of the apex of a cone is the base
        let base = cone.link(0);
        let expected_ring = Ring::new(["x2", "x3"]).unwrap();
        assert_eq!(base, complex(&expected_ring, &["x2", "x3"]));
    }

    #[test]
    fn purity_and_dimension() {
        let rp2 = rp2_complex();
        assert!(rp2.is_pure().unwrap());
        assert_eq!(rp2.dimension().unwrap(), 2);
        let r = Ring::standard(3);
        let impure = complex(&r, &["x1 x2", "x3"]);
        assert!(!impure.is_pure().unwrap());
    }

    #[test]
    fn simplices_are_vertex_decomposable() {
        for n in 0..=8 {
            let r = Ring::standard(n);
            let s = if n == 0 {
                SimplicialComplex::empty_complex(r)
            } else {
                SimplicialComplex::simplex(r).unwrap()
            };
            assert_eq!(s.vertex_decomposable(), Some(SheddingWitness::Simplex));
        }
    }

    #[test]
    fn rp2_is_not_vertex_decomposable() {
        assert_eq!(rp2_complex().vertex_decomposable(), None);
    }

    #[test]
    fn boundary_of_triangle_is_vertex_decomposable() {
        let r = Ring::standard(3);
        let hollow = complex(&r, &["x1 x2", "x2 x3", "x1 x3"]);
        let witness = hollow.vertex_decomposable().unwrap();
        assert!(matches!(witness, SheddingWitness::Shed { .. }));
        assert!(!witness.shed_order().is_empty());
    }

    #[test]
    fn impure_complex_is_not_vertex_decomposable() {
        let r = Ring::standard(3);
        let impure = complex(&r, &["x1 x2", "x3"]);
        assert_eq!(impure.vertex_decomposable(), None);
    }
}
