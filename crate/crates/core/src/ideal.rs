//! Monomials, monomial ideals, and the ideal-level operations: minimal
//! generating sets, polarization, colon, sum/intersection, restriction,
//! graded pieces, truncation, Alexander duality, and the recognition
//! predicates (primary, bipartite, power splits).
//!
//! Every ideal carries its ambient ring (an ordered list of named
//! variables) and stores exactly the canonical minimal generating set:
//! no generator divides another, and generators are ordered by degree,
//! then descending lexicographically on the dense exponent vector. All
//! values are immutable; operations return fresh ideals.

use std::sync::Arc;

use crate::error::{BipartiteObstruction, Error};
use crate::mask::{self, VertexMask, MAX_VERTICES};
use crate::Result;

/// Ordered list of named variables; doubles as the vertex set of a
/// simplicial complex. Cheap to clone, compared by name list.
#[derive(Debug, Clone)]
pub struct Ring {
    names: Arc<Vec<String>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(Error::DuplicateVariable { name: n.clone() });
            }
        }
        Ok(Ring {
            names: Arc::new(names),
        })
    }

    /// `x1 x2 .. xn`.
    pub fn standard(n: usize) -> Self {
        Ring::new((1..=n).map(|i| format!("x{i}"))).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Extend by fresh variables; rejects name collisions.
    pub fn extend<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut names = (*self.names).clone();
        for n in extra {
            let n = n.into();
            if names.contains(&n) {
                return Err(Error::FreshVariableCollision { name: n });
            }
            names.push(n);
        }
        Ok(Ring {
            names: Arc::new(names),
        })
    }

    /// Sub-ring of the variables in `keep`, preserving order.
    pub fn select(&self, keep: VertexMask) -> Self {
        let names: Vec<String> = mask::bits(keep)
            .filter(|&id| id < self.len())
            .map(|id| self.names[id].clone())
            .collect();
        Ring {
            names: Arc::new(names),
        }
    }

    pub fn full_mask(&self) -> Result<VertexMask> {
        if self.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                count: self.len(),
                max: MAX_VERTICES,
            });
        }
        Ok(mask::full(self.len()))
    }

    /// Render a vertex subset as sorted names (for error messages and JSON).
    pub fn mask_names(&self, m: VertexMask) -> Vec<String> {
        mask::bits(m).map(|id| self.names[id].to_owned()).collect()
    }
}

/// A monomial as a sparse exponent vector: sorted `(variable id, exponent)`
/// pairs with every stored exponent at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(id: usize) -> Self {
        Monomial {
            exps: vec![(id, 1)],
        }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(id, _)| id);
        exps.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        Monomial { exps }
    }

    /// Squarefree monomial with the given support.
    pub fn squarefree(support: VertexMask) -> Self {
        Monomial {
            exps: mask::bits(support).map(|id| (id, 1)).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent_of(&self, id: usize) -> u32 {
        self.exps
            .binary_search_by_key(&id, |&(v, _)| v)
            .map(|k| self.exps[k].1)
            .unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(id, _)| id)
    }

    /// Support as a bit mask; only valid when every variable id fits.
    pub fn support_mask(&self) -> VertexMask {
        debug_assert!(self.max_var().is_none_or(|v| v < MAX_VERTICES));
        self.exps.iter().fold(0, |m, &(id, _)| m | 1 << id)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|&(id, e)| other.exponent_of(id) >= e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exponents().chain(other.exponents()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = merge_exps(self, other, |a, b| a.max(b));
        out.exps.retain(|&(_, e)| e > 0);
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = merge_exps(self, other, |a, b| a.min(b));
        out.exps.retain(|&(_, e)| e > 0);
        out
    }

    /// `self / gcd(self, other)`, the generator map underlying colon ideals.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&(id, e)| (id, e.saturating_sub(other.exponent_of(id))))
            .filter(|&(_, e)| e > 0)
            .collect();
        Monomial { exps }
    }

    /// Canonical order: total degree, then descending lexicographic on the
    /// dense exponent vector (so x1^2 sorts before x1*x2).
    fn canonical_cmp(&self, other: &Monomial) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.exps.iter().peekable();
            let mut b = other.exps.iter().peekable();
            loop {
                match (a.peek(), b.peek()) {
                    (None, None) => return std::cmp::Ordering::Equal,
                    (Some(_), None) => return std::cmp::Ordering::Less,
                    (None, Some(_)) => return std::cmp::Ordering::Greater,
                    (Some(&&(ia, ea)), Some(&&(ib, eb))) => {
                        if ia != ib {
                            // the smaller id has a positive exponent vs zero
                            if ia < ib {
                                return std::cmp::Ordering::Less;
                            }
                            return std::cmp::Ordering::Greater;
                        }
                        if ea != eb {
                            return eb.cmp(&ea);
                        }
                        a.next();
                        b.next();
                    }
                }
            }
        })
    }

    pub fn display_in(&self, ring: &Ring) -> String {
        if self.is_one() {
            return "1".to_owned();
        }
        self.exps
            .iter()
            .map(|&(id, e)| {
                if e == 1 {
                    ring.name(id).to_owned()
                } else {
                    format!("{}^{}", ring.name(id), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn merge_exps(a: &Monomial, b: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
    let mut exps = Vec::with_capacity(a.exps.len().max(b.exps.len()));
    let mut i = 0;
    let mut j = 0;
    while i < a.exps.len() || j < b.exps.len() {
        match (a.exps.get(i), b.exps.get(j)) {
            (Some(&(ia, ea)), Some(&(ib, eb))) if ia == ib => {
                exps.push((ia, f(ea, eb)));
                i += 1;
                j += 1;
            }
            (Some(&(ia, ea)), Some(&(ib, _))) if ia < ib => {
                exps.push((ia, f(ea, 0)));
                i += 1;
            }
            (Some(_), Some(&(ib, eb))) => {
                exps.push((ib, f(0, eb)));
                j += 1;
            }
            (Some(&(ia, ea)), None) => {
                exps.push((ia, f(ea, 0)));
                i += 1;
            }
            (None, Some(&(ib, eb))) => {
                exps.push((ib, f(0, eb)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Monomial { exps }
}

/// Records where each variable of a polarized ring came from:
/// `origin[new_id] = (original id, copy index >= 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationMap {
    pub origin: Vec<(usize, u32)>,
    /// `copies[orig_id]` lists the new ids of that variable's copies in
    /// ascending copy order; empty when the variable never appears.
    pub copies: Vec<Vec<usize>>,
}

impl PolarizationMap {
    /// Collapse a monomial of the polarized ring back to the original ring:
    /// every copy of x_i contributes one factor of x_i.
    pub fn depolarize(&self, m: &Monomial) -> Monomial {
        Monomial::from_exponents(
            m.exponents()
                .map(|(id, e)| (self.origin[id].0, e)),
        )
    }
}

/// Outcome of splitting off the pure power of one variable:
/// `I = (J, x^t)` minimally, together with the colon `(I : x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSplit {
    pub without_power: MonomialIdeal,
    pub exponent: u32,
    pub colon: MonomialIdeal,
}

/// A 2-coloring of the generator graph of a quadratic squarefree ideal,
/// plus the incidence sets G_j = { x in V1 : x*y_j in I } indexed by the
/// right-side vertices in ascending id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexMask,
    pub right: VertexMask,
    pub incidence: Vec<(usize, VertexMask)>,
}

/// A monomial ideal: ambient ring plus the canonical minimal generating
/// set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Build from an arbitrary generating set: drops divisible generators,
    /// dedups, and sorts canonically. Rejects out-of-ring variables.
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if let Some(v) = g.max_var() {
                if v >= ring.len() {
                    return Err(Error::UnknownVariable { id: v });
                }
            }
        }
        Ok(MonomialIdeal {
            gens: minimalize(gens),
            ring,
        })
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: Ring) -> Self {
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one()],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Least degree of a minimal generator (d(I)); undefined for 0.
    pub fn least_generator_degree(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .min()
            .ok_or(Error::ZeroIdeal {
                operation: "least generator degree",
            })
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// The squarefree ideal in the ring of variable copies, with a map
    /// recording where each copy came from. Generators stay in bijection
    /// with the originals and keep their degrees.
    pub fn polarize(&self) -> Result<(MonomialIdeal, PolarizationMap)> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal {
                operation: "polarization",
            });
        }
        let n = self.ring.len();
        let mut max_exp = vec![0u32; n];
        for g in &self.gens {
            for (id, e) in g.exponents() {
                max_exp[id] = max_exp[id].max(e);
            }
        }
        let mut names = Vec::new();
        let mut origin = Vec::new();
        let mut copies = vec![Vec::new(); n];
        for (id, &e) in max_exp.iter().enumerate() {
            for j in 1..=e {
                copies[id].push(names.len());
                origin.push((id, j));
                names.push(format!("{}_{}", self.ring.name(id), j));
            }
        }
        let polarized_ring = Ring::new(names)?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial::from_exponents(g.exponents().flat_map(|(id, e)| {
                    copies[id][..e as usize].iter().map(|&nid| (nid, 1))
                }))
            })
            .collect::<Vec<_>>();
        let ideal = MonomialIdeal::new(polarized_ring, gens)?;
        Ok((ideal, PolarizationMap { origin, copies }))
    }

    /// `(I : m)`, minimally generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect()),
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(self.gens.iter().chain(&other.gens).cloned().collect()),
        })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(|h| g.lcm(h)))
            .collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// Generators supported inside `keep`, in the same ambient ring
    /// (the extension of I ∩ k[W] back to R).
    pub fn restrict_to(&self, keep: VertexMask) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .filter(|g| mask::is_subset(g.support_mask(), keep))
            .cloned()
            .collect();
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        }
    }

    /// `(I_t)R`: the ideal generated by every degree-`t` monomial of I.
    pub fn graded_piece(&self, t: u32) -> MonomialIdeal {
        let mut gens = Vec::new();
        for g in &self.gens {
            if g.degree() > t {
                continue;
            }
            for m in monomials_of_degree(self.ring.len(), t - g.degree()) {
                gens.push(g.mul(&m));
            }
        }
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        }
    }

    /// Squarefree-ambient variant of [`graded_piece`]: multipliers are
    /// squarefree and coprime to the generator, so the result stays
    /// squarefree when I is.
    ///
    /// [`graded_piece`]: MonomialIdeal::graded_piece
    pub fn graded_piece_squarefree(&self, t: u32) -> Result<MonomialIdeal> {
        if !self.is_squarefree() {
            let g = self.gens.iter().find(|g| !g.is_squarefree()).unwrap();
            return Err(Error::NotSquarefree {
                generator: g.display_in(&self.ring),
            });
        }
        let full = self.ring.full_mask()?;
        let mut gens = Vec::new();
        for g in &self.gens {
            if g.degree() > t {
                continue;
            }
            let free = full & !g.support_mask();
            for extra in subsets_of_size(free, (t - g.degree()) as usize) {
                gens.push(g.mul(&Monomial::squarefree(extra)));
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// `I ∩ m^t`, computed as the intersection with the power of the
    /// maximal ideal.
    pub fn truncate(&self, t: u32) -> MonomialIdeal {
        if t == 0 || self.is_zero() {
            return self.clone();
        }
        let power = MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(monomials_of_degree(self.ring.len(), t)),
        };
        self.intersect(&power).expect("same ring")
    }

    /// The Alexander dual of a squarefree ideal: complements of the facets
    /// of its Stanley-Reisner complex.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal {
                operation: "Alexander dual",
            });
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal {
                operation: "Alexander dual",
            });
        }
        let complex = crate::complex::sr_complex(self)?;
        let full = self.ring.full_mask()?;
        let gens = complex
            .facets()
            .iter()
            .map(|&f| Monomial::squarefree(full & !f))
            .collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// When R/I has a unique associated prime, its variable set: every
    /// variable with a pure power among the generators, provided every
    /// generator is supported there. The zero ideal is primary to the zero
    /// prime; the unit ideal has no associated primes at all.
    pub fn primary_support(&self) -> Option<Vec<usize>> {
        if self.is_unit() {
            return None;
        }
        let pure: Vec<usize> = self
            .gens
            .iter()
            .filter(|g| g.exps.len() == 1)
            .map(|g| g.exps[0].0)
            .collect();
        let ok = self
            .gens
            .iter()
            .all(|g| g.exponents().all(|(id, _)| pure.contains(&id)));
        if ok {
            let mut p = pure;
            p.sort_unstable();
            Some(p)
        } else {
            None
        }
    }

    /// Two-color the generator graph of a quadratic squarefree ideal.
    /// Deterministic: the lowest-id vertex of every connected component —
    /// and every isolated ring variable — lands on the left side.
    pub fn bipartition(&self) -> Result<Bipartition> {
        let n = self.ring.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                count: n,
                max: MAX_VERTICES,
            });
        }
        let mut adjacent = vec![0u64; n];
        for g in &self.gens {
            if g.degree() != 2 || !g.is_squarefree() {
                return Err(Error::NotBipartite(
                    BipartiteObstruction::NotQuadraticSquarefree {
                        generator: g.display_in(&self.ring),
                    },
                ));
            }
            let (a, b) = (g.exps[0].0, g.exps[1].0);
            adjacent[a] |= 1 << b;
            adjacent[b] |= 1 << a;
        }
        let mut side = vec![None; n];
        let mut left = 0u64;
        let mut right = 0u64;
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            left |= 1 << start;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let v_side = side[v].unwrap();
                for w in mask::bits(adjacent[v]) {
                    match side[w] {
                        None => {
                            side[w] = Some(!v_side);
                            if v_side {
                                left |= 1 << w;
                            } else {
                                right |= 1 << w;
                            }
                            queue.push_back(w);
                        }
                        Some(w_side) if w_side == v_side => {
                            return Err(Error::NotBipartite(BipartiteObstruction::OddCycle {
                                vertex: self.ring.name(w).to_owned(),
                            }));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let incidence = mask::bits(right)
            .map(|y| {
                let g: VertexMask = self
                    .gens
                    .iter()
                    .filter(|m| mask::contains(m.support_mask(), y))
                    .map(|m| m.support_mask() & !(1 << y))
                    .fold(0, |acc, m| acc | m);
                (y, g)
            })
            .collect();
        Ok(Bipartition {
            left,
            right,
            incidence,
        })
    }

    /// Write `I = (J, x^t)` minimally: `t` is the least power of `x` in I,
    /// `J` keeps the generators not divisible by `x^t`, and the colon
    /// `(I : x)` comes along for the ride.
    pub fn power_split(&self, var: usize) -> Result<PowerSplit> {
        let power = self
            .gens
            .iter()
            .find(|g| g.exps.len() == 1 && g.exps[0].0 == var)
            .ok_or_else(|| Error::NoPowerOfVariable {
                variable: self.ring.name(var).to_owned(),
            })?;
        let t = power.exps[0].1;
        let xt = Monomial::from_exponents([(var, t)]);
        let without_power = MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(
                self.gens
                    .iter()
                    .filter(|g| !xt.divides(g))
                    .cloned()
                    .collect(),
            ),
        };
        Ok(PowerSplit {
            without_power,
            exponent: t,
            colon: self.colon(&Monomial::var(var)),
        })
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "(0)".to_owned();
        }
        format!(
            "({})",
            self.gens
                .iter()
                .map(|g| g.display_in(&self.ring))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// Divisibility-minimal subset in canonical order. The workhorse behind
/// every ideal constructor.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.canonical_cmp(b));
    gens.dedup();
    let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // earlier monomials have lower or equal degree, so only they can divide g
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    debug_assert!(is_antichain(&minimal));
    minimal
}

fn is_antichain(gens: &[Monomial]) -> bool {
    gens.iter().enumerate().all(|(i, g)| {
        gens.iter()
            .enumerate()
            .all(|(j, h)| i == j || !g.divides(h))
    })
}

/// All monomials of total degree `d` in `nvars` variables, in canonical
/// order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill_degree(nvars, 0, d, &mut stack, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn fill_degree(
    nvars: usize,
    var: usize,
    remaining: u32,
    stack: &mut Vec<(usize, u32)>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        out.push(Monomial::from_exponents(stack.iter().copied()));
        return;
    }
    if var == nvars {
        return;
    }
    if var + 1 == nvars {
        stack.push((var, remaining));
        out.push(Monomial::from_exponents(stack.iter().copied()));
        stack.pop();
        return;
    }
    for e in (0..=remaining).rev() {
        if e > 0 {
            stack.push((var, e));
        }
        fill_degree(nvars, var + 1, remaining - e, stack, out);
        if e > 0 {
            stack.pop();
        }
    }
}

/// All sub-masks of `pool` with exactly `k` bits set.
pub fn subsets_of_size(pool: VertexMask, k: usize) -> Vec<VertexMask> {
    let items: Vec<usize> = mask::bits(pool).collect();
    if k > items.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    choose(&items, 0, k, &mut chosen, &mut out);
    out
}

fn choose(
    items: &[usize],
    from: usize,
    k: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<VertexMask>,
) {
    if k == 0 {
        out.push(chosen.iter().fold(0, |m, &id| m | 1 << id));
        return;
    }
    for i in from..=items.len().saturating_sub(k) {
        chosen.push(items[i]);
        choose(items, i + 1, k - 1, chosen, out);
        chosen.pop();
    }
}
