//! Generative constructions: whiskered ideals, the coning complex built
//! from a cover by subcomplexes, the bipartite complex/ideal pair encoding
//! an arbitrary simplicial complex, recovery of the base complex from a
//! bipartite ideal, and the built-in projective-plane instance with its
//! golden Betti tables.

use crate::betti::{BettiTable, Convention};
use crate::complex::{sr_complex, sr_ideal, SimplicialComplex};
use crate::error::Error;
use crate::homology::{homology_z_all, HomologyGroup};
use crate::ideal::{Bipartition, Monomial, MonomialIdeal, Ring};
use crate::mask::{self, VertexMask};
use crate::Result;

/// Adjoin a fresh variable y and the whisker generator x*y.
pub fn whisker(ideal: &MonomialIdeal, var: usize, y_name: &str) -> Result<MonomialIdeal> {
    if var >= ideal.ring().len() {
        return Err(Error::UnknownVariable { id: var });
    }
    let ring = ideal.ring().extend([y_name])?;
    let y = ring.len() - 1;
    let gens = ideal
        .generators()
        .iter()
        .cloned()
        .chain([Monomial::from_exponents([(var, 1), (y, 1)])]);
    MonomialIdeal::new(ring, gens)
}

/// Adjoin one fresh y_i per ring variable and all whiskers x_i*y_i. For
/// squarefree I this is the polarization of I + (x_1^2, ..., x_n^2) up to
/// renaming.
pub fn whisker_all(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let n = ideal.ring().len();
    let ring = ideal.ring().extend((1..=n).map(|i| format!("y{i}")))?;
    let gens = ideal
        .generators()
        .iter()
        .cloned()
        .chain((0..n).map(|i| Monomial::from_exponents([(i, 1), (n + i, 1)])));
    MonomialIdeal::new(ring, gens)
}

pub(crate) fn validate_covers(
    base: &SimplicialComplex,
    covers: &[SimplicialComplex],
) -> Result<()> {
    for (j, cover) in covers.iter().enumerate() {
        if cover.vertices() != base.vertices() || !cover.is_subcomplex_of(base) {
            return Err(Error::CoverNotSubcomplex { index: j });
        }
    }
    for &facet in base.facets() {
        if !covers.iter().any(|c| c.contains_face(facet)) {
            return Err(Error::CoverIncomplete {
                facet: base.vertices().mask_names(facet).join(" "),
            });
        }
    }
    Ok(())
}

/// For each face σ of the base, the set of cover indices containing it,
/// as a bit mask over 0..m.
pub(crate) fn cover_membership(
    base: &SimplicialComplex,
    covers: &[SimplicialComplex],
) -> Vec<(VertexMask, u64)> {
    base.faces()
        .into_iter()
        .map(|sigma| {
            let mut y = 0u64;
            for (j, cover) in covers.iter().enumerate() {
                if cover.contains_face(sigma) {
                    y |= 1 << j;
                }
            }
            (sigma, y)
        })
        .collect()
}

/// The coning complex: one new vertex y_j per cover member, with faces
/// σ ∪ τ for σ in the base and τ any set of y_j whose cover contains σ.
/// Always contractible when the covers actually cover the base.
pub fn cone_tilde(
    base: &SimplicialComplex,
    covers: &[SimplicialComplex],
) -> Result<SimplicialComplex> {
    validate_covers(base, covers)?;
    let n = base.vertices().len();
    let m = covers.len();
    let ring = base
        .vertices()
        .extend((1..=m).map(|j| format!("y{j}")))?;
    let facets = cover_membership(base, covers)
        .into_iter()
        .map(|(sigma, y)| sigma | y << n)
        .collect();
    SimplicialComplex::from_facets(ring, facets)
}

/// Everything the bipartite construction produces from a base complex and
/// the sets G_j: the coning part Δ', the full complex Δ = Δ' ∪ (simplex
/// on the base vertices), the bipartite ideal I = sr_ideal(Δ), and the
/// extension of the base's Stanley-Reisner ideal.
#[derive(Debug, Clone)]
pub struct BipartiteInstance {
    pub delta_prime: SimplicialComplex,
    pub delta: SimplicialComplex,
    pub ideal: MonomialIdeal,
    pub gamma_ideal: MonomialIdeal,
}

/// Build the bipartite pair (Δ', Δ, I, I_Γ) from a base complex Γ and
/// sets G_j with each complement V1 ∖ G_j a face of Γ and every facet of
/// Γ realized as such a complement.
pub fn bipartite_from_complex(
    base: &SimplicialComplex,
    g_sets: &[VertexMask],
) -> Result<BipartiteInstance> {
    let n = base.vertices().len();
    let full = mask::full(n);
    for (j, &g) in g_sets.iter().enumerate() {
        if !mask::is_subset(g, full) || !base.contains_face(full & !g) {
            return Err(Error::ComplementNotFace { index: j });
        }
    }
    for &facet in base.facets() {
        if !g_sets.iter().any(|&g| full & !g == facet) {
            return Err(Error::FacetNotRealized {
                facet: base.vertices().mask_names(facet).join(" "),
            });
        }
    }
    // G_j's complement-closure is exactly the subcomplex of faces avoiding
    // G_j, so the coning construction applies verbatim
    let covers: Vec<SimplicialComplex> = g_sets
        .iter()
        .map(|&g| {
            SimplicialComplex::from_facets(base.vertices().clone(), vec![full & !g])
        })
        .collect::<Result<_>>()?;
    let delta_prime = cone_tilde(base, &covers)?;
    let ring = delta_prime.vertices().clone();
    let mut delta_facets = delta_prime.facets().to_vec();
    delta_facets.push(full);
    let delta = SimplicialComplex::from_facets(ring.clone(), delta_facets)?;
    let ideal = sr_ideal(&delta);
    let gamma_ideal = MonomialIdeal::new(
        ring,
        sr_ideal(base).generators().to_vec(),
    )?;
    Ok(BipartiteInstance {
        delta_prime,
        delta,
        ideal,
        gamma_ideal,
    })
}

/// Recover the base complex of a bipartite ideal: the facets are the
/// left-side complements of the inclusion-minimal incidence sets.
pub fn bipartite_to_complex(
    ideal: &MonomialIdeal,
    partition: &Bipartition,
) -> Result<SimplicialComplex> {
    debug_assert_eq!(ideal.bipartition().as_ref(), Ok(partition));
    let left = partition.left;
    let facets = partition
        .incidence
        .iter()
        .map(|&(_, g)| mask::compress(left & !g, left))
        .collect();
    SimplicialComplex::from_facets(ideal.ring().select(left), facets)
}

/// One degree of the homology-shift comparison between Δ and Γ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftComparison {
    pub degree: i32,
    pub delta_group: HomologyGroup,
    pub base_group: HomologyGroup,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyShiftReport {
    pub ok: bool,
    pub comparisons: Vec<ShiftComparison>,
}

/// Verify H̃_{i+1}(Δ; Z) ≅ H̃_i(Γ; Z) degree by degree (rank and torsion),
/// for all i ≥ 0 up to the relevant dimensions.
pub fn homology_shift_check(
    base: &SimplicialComplex,
    delta: &SimplicialComplex,
) -> HomologyShiftReport {
    let base_groups = homology_z_all(base);
    let delta_groups = homology_z_all(delta);
    let group = |list: &[(i32, HomologyGroup)], d: i32| -> HomologyGroup {
        list.iter()
            .find(|&&(x, _)| x == d)
            .map(|(_, g)| g.clone())
            .unwrap_or_else(HomologyGroup::trivial)
    };
    let top_base = base_groups.last().map(|&(d, _)| d).unwrap_or(-1);
    let top_delta = delta_groups.last().map(|&(d, _)| d).unwrap_or(-1);
    let top = top_base.max(top_delta - 1);
    let comparisons: Vec<ShiftComparison> = (0..=top.max(0))
        .map(|i| {
            let delta_group = group(&delta_groups, i + 1);
            let base_group = group(&base_groups, i);
            let matches = delta_group == base_group;
            ShiftComparison {
                degree: i,
                delta_group,
                base_group,
                matches,
            }
        })
        .collect();
    HomologyShiftReport {
        ok: comparisons.iter().all(|c| c.matches),
        comparisons,
    }
}

/// The built-in instance: the minimal triangulation of the projective
/// plane, its Stanley-Reisner ideal, and the quotient Betti tables in
/// characteristic 2 and characteristic 0.
pub struct ReisnerInstance {
    pub ideal: MonomialIdeal,
    pub complex: SimplicialComplex,
    pub table_char2: BettiTable,
    pub table_char0: BettiTable,
}

pub fn reisner_instance() -> ReisnerInstance {
    let ring = Ring::standard(6);
    let gen_supports: [&[usize]; 10] = [
        &[0, 1, 2],
        &[0, 1, 3],
        &[0, 2, 4],
        &[1, 3, 4],
        &[2, 3, 4],
        &[1, 2, 5],
        &[0, 3, 5],
        &[2, 3, 5],
        &[0, 4, 5],
        &[1, 4, 5],
    ];
    let ideal = MonomialIdeal::new(
        ring.clone(),
        gen_supports
            .iter()
            .map(|s| Monomial::from_exponents(s.iter().map(|&v| (v, 1)))),
    )
    .expect("generators are in the ring");
    let facet_vertices: [&[usize]; 10] = [
        &[3, 4, 5],
        &[2, 4, 5],
        &[1, 3, 5],
        &[0, 2, 5],
        &[0, 1, 5],
        &[0, 3, 4],
        &[1, 2, 4],
        &[0, 1, 4],
        &[1, 2, 3],
        &[0, 2, 3],
    ];
    let complex = SimplicialComplex::from_facets(
        ring,
        facet_vertices
            .iter()
            .map(|vs| vs.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect(),
    )
    .expect("six vertices");
    let table_char2 = BettiTable::from_entries(
        Convention::Quotient,
        [
            ((0, 0), 1),
            ((1, 3), 10),
            ((2, 4), 15),
            ((3, 5), 6),
            ((3, 6), 1),
            ((4, 6), 1),
        ],
    );
    let table_char0 = BettiTable::from_entries(
        Convention::Quotient,
        [((0, 0), 1), ((1, 3), 10), ((2, 4), 15), ((3, 5), 6)],
    );
    ReisnerInstance {
        ideal,
        complex,
        table_char2,
        table_char0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_table, char_dependence_scan, Convention, ScanOptions};
    use crate::field::FieldSpec;
    use crate::testutil::{complex, ideal, reisner_ideal, rp2_complex};

    #[test]
    fn whisker_examples() {
        let r = Ring::standard(2);
        let i = ideal(&r, &["x1*x2"]);
        let w = whisker(&i, 0, "y").unwrap();
        assert_eq!(w.ring().len(), 3);
        assert_eq!(w.generators().len(), 2);
        assert_eq!(w.generators()[1].display_in(w.ring()), "x1*x2");
        assert_eq!(w.generators()[0].display_in(w.ring()), "x1*y");

        let zero = MonomialIdeal::zero(r.clone());
        let w0 = whisker(&zero, 0, "y").unwrap();
        assert_eq!(w0.generators().len(), 1);

        assert!(matches!(
            whisker(&i, 0, "x2"),
            Err(Error::FreshVariableCollision { .. })
        ));
    }

    #[test]
    fn whisker_all_structure() {
        let j = whisker_all(&reisner_ideal()).unwrap();
        assert_eq!(j.ring().len(), 12);
        assert_eq!(j.generators().len(), 16);
        let zero = MonomialIdeal::zero(Ring::standard(3));
        let w = whisker_all(&zero).unwrap();
        assert_eq!(w.generators().len(), 3);
    }

    #[test]
    fn whisker_all_is_polarization_of_squares() {
        // whisker_all(I) coincides with polarize(I + (x_i^2)) after the
        // renaming x_i_1 -> x_i, x_i_2 -> y_i
        let i = reisner_ideal();
        let n = i.ring().len();
        let whiskered = whisker_all(&i).unwrap();
        let squares = MonomialIdeal::new(
            i.ring().clone(),
            (0..n).map(|v| Monomial::from_exponents([(v, 2)])),
        )
        .unwrap();
        let with_squares = i.sum(&squares).unwrap();
        let (polarized, map) = with_squares.polarize().unwrap();
        let renamed = polarized.generators().iter().map(|g| {
            Monomial::from_exponents(g.exponents().map(|(id, e)| {
                let (orig, copy) = map.origin[id];
                let new_id = if copy == 1 { orig } else { n + orig };
                (new_id, e)
            }))
        });
        let renamed_ideal = MonomialIdeal::new(whiskered.ring().clone(), renamed).unwrap();
        assert_eq!(renamed_ideal, whiskered);
    }

    #[test]
    fn cone_tilde_point() {
        let r = Ring::standard(1);
        let point = SimplicialComplex::simplex(r).unwrap();
        let tilde = cone_tilde(&point, std::slice::from_ref(&point)).unwrap();
        assert_eq!(tilde.vertices().len(), 2);
        assert_eq!(tilde.facets(), &[0b11]);
    }

    #[test]
    fn cone_tilde_hollow_triangle_is_contractible() {
        let r = Ring::standard(3);
        let gamma = complex(&r, &["x1 x2", "x2 x3", "x1 x3"]);
        let covers: Vec<SimplicialComplex> = gamma
            .facets()
            .iter()
            .map(|&f| SimplicialComplex::from_facets(r.clone(), vec![f]).unwrap())
            .collect();
        let tilde = cone_tilde(&gamma, &covers).unwrap();
        assert_eq!(tilde.vertices().len(), 6);
        for (_, g) in homology_z_all(&tilde) {
            assert!(g.is_trivial());
        }
    }

    #[test]
    fn cone_tilde_validates_covers() {
        let r = Ring::standard(2);
        let gamma = complex(&r, &["x1", "x2"]);
        let partial = complex(&r, &["x1"]);
        assert!(matches!(
            cone_tilde(&gamma, std::slice::from_ref(&partial)),
            Err(Error::CoverIncomplete { .. })
        ));
        let not_sub = complex(&r, &["x1 x2"]);
        assert!(matches!(
            cone_tilde(&gamma, std::slice::from_ref(&not_sub)),
            Err(Error::CoverNotSubcomplex { index: 0 })
        ));
        // a cover member consisting of just the empty face is legal
        let tiny = SimplicialComplex::empty_complex(r.clone());
        let tilde = cone_tilde(&gamma, &[gamma.clone(), tiny]).unwrap();
        assert!(tilde.contains_face(0b0100 << 0)); // y1
        assert!(tilde.contains_face(0b1000)); // y2 attached at the empty face
        for (_, g) in homology_z_all(&tilde) {
            assert!(g.is_trivial());
        }
    }

    #[test]
    fn bipartite_hollow_triangle() {
        let r = Ring::standard(3);
        let gamma = complex(&r, &["x1 x2", "x2 x3", "x1 x3"]);
        // G_j = complements of the canonical facets {x1x2, x1x3, x2x3}
        let g_sets = vec![0b100, 0b010, 0b001];
        let inst = bipartite_from_complex(&gamma, &g_sets).unwrap();
        let ring = inst.ideal.ring();
        assert_eq!(ring.len(), 6);
        let shown: Vec<String> = inst
            .ideal
            .generators()
            .iter()
            .map(|g| g.display_in(ring))
            .collect();
        assert_eq!(shown, vec!["x3*y1", "x2*y2", "x1*y3"]);

        // primary-decomposition identities
        let y_ideal = MonomialIdeal::new(
            ring.clone(),
            (3..6).map(Monomial::var),
        )
        .unwrap();
        let summed = inst.ideal.sum(&inst.gamma_ideal).unwrap();
        assert_eq!(summed.intersect(&y_ideal).unwrap(), inst.ideal);
        assert_eq!(sr_ideal(&inst.delta_prime), summed);

        // Δ' ∩ Δ_{V1} = Γ
        let v1 = 0b111;
        let prime_restricted = inst.delta_prime.restriction(v1);
        assert_eq!(prime_restricted, gamma);

        // the generators really are x_i y_j over the incidence sets
        let expected: Vec<Monomial> = g_sets
            .iter()
            .enumerate()
            .flat_map(|(j, &g)| {
                mask::bits(g)
                    .map(|x| Monomial::from_exponents([(x, 1), (3 + j, 1)]))
                    .collect::<Vec<_>>()
            })
            .collect();
        let expected = MonomialIdeal::new(ring.clone(), expected).unwrap();
        assert_eq!(inst.ideal, expected);
    }

    #[test]
    fn bipartite_precondition_errors() {
        let r = Ring::standard(3);
        let gamma = complex(&r, &["x1 x2", "x2 x3", "x1 x3"]);
        // complement {x1,x2,x3} \ {} = everything: not a face
        assert!(matches!(
            bipartite_from_complex(&gamma, &[0]),
            Err(Error::ComplementNotFace { index: 0 })
        ));
        // facets x1x3 and x2x3 never realized
        assert!(matches!(
            bipartite_from_complex(&gamma, &[0b100]),
            Err(Error::FacetNotRealized { .. })
        ));
    }

    #[test]
    fn bipartite_round_trip() {
        let r = Ring::standard(3);
        let gamma = complex(&r, &["x1 x2", "x2 x3", "x1 x3"]);
        let g_sets = vec![0b100, 0b010, 0b001];
        let inst = bipartite_from_complex(&gamma, &g_sets).unwrap();
        let partition = inst.ideal.bipartition().unwrap();
        assert_eq!(partition.left, 0b000111);
        let recovered = bipartite_to_complex(&inst.ideal, &partition).unwrap();
        // same facets; vertex lists agree because V1 keeps its names
        assert_eq!(recovered.facets(), gamma.facets());
    }

    #[test]
    fn bipartite_single_edge_recovers_empty_complex() {
        let r = Ring::new(["x1", "y1"]).unwrap();
        let i = ideal(&r, &["x1*y1"]);
        let partition = i.bipartition().unwrap();
        let gamma = bipartite_to_complex(&i, &partition).unwrap();
        assert!(gamma.is_empty_complex());
        assert_eq!(gamma.vertices().len(), 1);
    }

    #[test]
    fn shift_check_hollow_triangle() {
        let r = Ring::standard(3);
        let gamma = complex(&r, &["x1 x2", "x2 x3", "x1 x3"]);
        let g_sets = vec![0b100, 0b010, 0b001];
        let inst = bipartite_from_complex(&gamma, &g_sets).unwrap();
        let report = homology_shift_check(&gamma, &inst.delta);
        assert!(report.ok);
        let at_one = report
            .comparisons
            .iter()
            .find(|c| c.degree == 1)
            .unwrap();
        assert_eq!(at_one.delta_group, HomologyGroup::free(1));
        assert_eq!(at_one.base_group, HomologyGroup::free(1));
    }

    #[test]
    fn shift_check_simplex_base() {
        let r = Ring::standard(2);
        let gamma = SimplicialComplex::simplex(r).unwrap();
        let g_sets = vec![0];
        let inst = bipartite_from_complex(&gamma, &g_sets).unwrap();
        let report = homology_shift_check(&gamma, &inst.delta);
        assert!(report.ok);
        for c in &report.comparisons {
            assert!(c.delta_group.is_trivial());
            assert!(c.base_group.is_trivial());
        }
    }

    #[test]
    fn reisner_instance_consistency() {
        let inst = reisner_instance();
        assert_eq!(inst.ideal, reisner_ideal());
        assert_eq!(inst.complex, rp2_complex());
        assert_eq!(inst.ideal.generators().len(), 10);
        assert_eq!(inst.complex.facets().len(), 10);
        assert_eq!(sr_complex(&inst.ideal).unwrap(), inst.complex);
        assert_eq!(inst.table_char2.totals(), vec![1, 10, 15, 7, 1]);
        assert_eq!(inst.table_char0.totals(), vec![1, 10, 15, 6]);
        // the engine reproduces the transcribed tables
        assert_eq!(
            betti_table(&inst.ideal, FieldSpec::Prime(2), Convention::Quotient).unwrap(),
            inst.table_char2
        );
        assert_eq!(
            betti_table(&inst.ideal, FieldSpec::Rationals, Convention::Quotient).unwrap(),
            inst.table_char0
        );
    }

    #[test]
    fn whiskered_reisner_scan_depends() {
        let j = whisker_all(&reisner_ideal()).unwrap();
        let report = char_dependence_scan(
            &j,
            &ScanOptions {
                early_exit: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(report.depends);
        assert!(report.primes.contains(&2));
    }
}
