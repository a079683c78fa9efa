//! Buchberger's algorithm and ideal arithmetic on top of it.
//!
//! Lengths "at the origin" are computed exactly rather than by waiting for
//! a truncation sequence to stop moving: for a zero-dimensional ideal the
//! part of `R/J` supported at the origin is the complement of the stable
//! power `m^k (R/J)`, and any other ideal is first cut down to its
//! components through the origin by two saturations.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::ExactMatrix;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring, RingSpec};

/// Budgets for the expensive procedures. Carried by the ring so every
/// ideal built over it sees the same limits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// S-pairs a single Buchberger run may process.
    pub max_pairs: usize,
    /// Colon steps a saturation may take before giving up.
    pub sat_iterations: usize,
    /// Largest power `N` of the maximal ideal examined while isolating the
    /// part of a quotient supported at the origin.
    pub colength_max: u32,
    /// Largest quotient dimension handled by dense linear algebra.
    pub dense_dim: usize,
    /// Largest finite quotient dimension that will be enumerated.
    pub max_standard: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 200_000,
            sat_iterations: 64,
            colength_max: 64,
            dense_dim: 400,
            max_standard: 2_000_000,
        }
    }
}

/// A reduced Gröbner basis: monic elements sorted ascending by leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    leading: Vec<Monomial>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    fn from_reduced(ring: &Ring, order: MonomialOrder, mut elements: Vec<Polynomial>) -> Self {
        elements.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        let leading = elements.iter().map(|g| g.lm().clone()).collect();
        GroebnerBasis {
            ring: ring.clone(),
            order,
            elements,
            leading,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(|m| m.is_one())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.elements.iter().all(|g| g.is_homogeneous())
    }

    /// True when `m` lies in the leading-monomial ideal.
    pub fn in_staircase(&self, m: &Monomial) -> bool {
        self.leading.iter().any(|l| l.divides(m))
    }

    /// Complete reduction remainder of `f`.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let refs: Vec<&Polynomial> = self.elements.iter().collect();
        reduce_full(f, &refs, self.order)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        let n = self.ring.nvars();
        let mut seen = vec![false; n];
        for m in &self.leading {
            if m.is_one() {
                return true;
            }
            if let Some(i) = m.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Standard monomials (not in the leading ideal), ascending degree.
    /// `None` when there are more than `limit` of them or infinitely many.
    pub fn standard_monomials(&self, limit: usize) -> Option<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        self.enumerate_standard(u32::MAX, limit)
    }

    /// Number of standard monomials of degree `< n`, or `None` past `limit`.
    pub fn count_standard_below(&self, n: u32, limit: usize) -> Option<usize> {
        self.enumerate_standard(n, limit).map(|v| v.len())
    }

    fn enumerate_standard(&self, below: u32, limit: usize) -> Option<Vec<Monomial>> {
        let nv = self.ring.nvars();
        if self.is_unit() || below == 0 {
            return Some(Vec::new());
        }
        let mut out = vec![Monomial::one(nv)];
        let mut frontier = vec![(Monomial::one(nv), 0usize)];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (m, last) in frontier {
                if m.degree() + 1 >= below {
                    continue;
                }
                for i in last..nv {
                    let c = m.mul(&Monomial::var(nv, i));
                    if !self.in_staircase(&c) {
                        out.push(c.clone());
                        if out.len() > limit {
                            return None;
                        }
                        next.push((c, i));
                    }
                }
            }
            frontier = next;
        }
        Some(out)
    }
}

/// Full remainder of `f` on division by `divisors` (all in `order`, monic).
pub(crate) fn reduce_full(f: &Polynomial, divisors: &[&Polynomial], order: MonomialOrder) -> Polynomial {
    let field = f.field();
    let mut p = f.with_order(order);
    let mut rem = Vec::new();
    while !p.is_zero() {
        let (m, c) = p.terms()[0].clone();
        let hit = divisors.iter().find_map(|g| g.lm().quotient_of(&m).map(|q| (q, *g)));
        match hit {
            Some((q, g)) => {
                let c = if g.lc().is_one() {
                    c
                } else {
                    field.div(&c, g.lc()).expect("nonzero leading coefficient")
                };
                p = p.sub_scaled(&c, &q, g);
            }
            None => {
                rem.push((m, c));
                let rest = p.terms()[1..].to_vec();
                p = Polynomial::from_sorted_terms(p.ring(), order, rest);
            }
        }
    }
    Polynomial::from_sorted_terms(f.ring(), order, rem)
}

// ---------------------------------------------------------------------
// Buchberger

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    order: MonomialOrder,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pair {}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pair {
    // reversed: BinaryHeap pops the smallest lcm (degree first) first
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .lcm
            .degree()
            .cmp(&self.lcm.degree())
            .then_with(|| self.order.cmp(&other.lcm, &self.lcm))
            .then_with(|| other.j.cmp(&self.j))
            .then_with(|| other.i.cmp(&self.i))
    }
}

fn sort_key(p: &Polynomial) -> Vec<(Vec<u32>, String)> {
    p.terms()
        .iter()
        .map(|(m, c)| (m.exponents().to_vec(), c.to_string()))
        .collect()
}

/// Sorts monic copies of the generators (by leading monomial, then term
/// list) and removes zeros and duplicates.
fn prepare(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order).monic())
        .collect();
    v.sort_by(|a, b| {
        order
            .cmp(a.lm(), b.lm())
            .then_with(|| sort_key(a).cmp(&sort_key(b)))
    });
    v.dedup();
    v
}

fn s_poly(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let field = f.field();
    let a = f.lm().quotient_of(lcm).expect("lcm");
    let b = g.lm().quotient_of(lcm).expect("lcm");
    // both monic
    f.mul_term(&a, &field.one()).sub_scaled(&field.one(), &b, g)
}

struct Engine {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    alive: Vec<bool>,
    pairs: BinaryHeap<Pair>,
}

impl Engine {
    fn reducers(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.alive)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Gebauer–Möller update with the new element `h`.
    fn insert(&mut self, h: Polynomial) {
        let k = self.polys.len();
        let lh = h.lm().clone();
        let order = self.order;

        let mut cand: Vec<(usize, Monomial)> = (0..k)
            .filter(|&i| self.alive[i])
            .map(|i| (i, self.polys[i].lm().lcm(&lh)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((i, l)) = cand.pop() {
            let coprime = self.polys[i].lm().is_coprime(&lh);
            let dominated = cand.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((i, l));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(i, _)| !self.polys[*i].lm().is_coprime(&lh))
            .map(|(i, lcm)| Pair {
                i,
                j: k,
                lcm,
                order,
            })
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].lm().lcm(&lh);
            let lj = polys[p.j].lm().lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);

        for i in 0..k {
            if self.alive[i] && lh.divides(self.polys[i].lm()) {
                self.alive[i] = false;
            }
        }
        self.polys.push(h);
        self.alive.push(true);
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let input = prepare(gens, order);
    if input.iter().any(|g| g.is_unit()) {
        return Ok(GroebnerBasis::from_reduced(
            ring,
            order,
            vec![Polynomial::one(ring).with_order(order)],
        ));
    }
    let budget = ring.limits().max_pairs;
    let mut eng = Engine {
        order,
        polys: Vec::new(),
        alive: Vec::new(),
        pairs: BinaryHeap::new(),
    };
    for g in input {
        let r = reduce_full(&g, &eng.reducers(), order);
        if !r.is_zero() {
            eng.insert(r.monic());
        }
    }
    let mut processed = 0usize;
    while let Some(p) = eng.pairs.pop() {
        processed += 1;
        if processed > budget {
            return Err(Error::ResourceLimit(format!(
                "Buchberger exceeded {budget} S-pairs"
            )));
        }
        let s = s_poly(&eng.polys[p.i], &eng.polys[p.j], &p.lcm);
        let r = reduce_full(&s, &eng.reducers(), order);
        if !r.is_zero() {
            let r = r.monic();
            if r.is_unit() {
                return Ok(GroebnerBasis::from_reduced(ring, order, vec![r]));
            }
            eng.insert(r);
        }
    }
    // minimal basis, then interreduce tails
    let minimal: Vec<Polynomial> = eng
        .polys
        .iter()
        .zip(&eng.alive)
        .filter(|(_, a)| **a)
        .map(|(p, _)| p.clone())
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (idx, g) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != idx)
            .map(|(_, p)| p)
            .collect();
        let head = Polynomial::monomial(ring, g.lm().clone(), g.lc().clone()).with_order(order);
        let tail = g.sub(&head);
        let tail = reduce_full(&tail, &others, order);
        reduced.push(head.add(&tail));
    }
    Ok(GroebnerBasis::from_reduced(ring, order, reduced))
}

// ---------------------------------------------------------------------
// Ideals

/// Generators of an ideal plus a cache of its reduced Gröbner bases.
/// Clones share the cache.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: Arc<RwLock<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>,
}

/// Selector for [`ideal_op`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Power(u32),
}

/// Checked sum, product or power.
pub fn ideal_op(op: IdealOp, i: &Ideal, j: Option<&Ideal>) -> Result<Ideal> {
    match op {
        IdealOp::Power(n) => Ok(i.power(n)),
        IdealOp::Sum | IdealOp::Product => {
            let j = j.ok_or_else(|| Error::InvalidInput("second ideal required".into()))?;
            i.same_ring(j)?;
            Ok(if op == IdealOp::Sum { i.sum(j) } else { i.product(j) })
        }
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert!(g.ring() == ring, "generator from another ring");
                g.with_order(MonomialOrder::DegRevLex)
            })
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            cache: Arc::default(),
        }
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| crate::polyring::parse_poly(ring, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, polys))
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &Ring) -> Self {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect())
    }

    /// An ideal with a known reduced basis; the basis is cached.
    pub fn from_basis(gb: GroebnerBasis) -> Self {
        let ideal = Ideal::new(&gb.ring.clone(), gb.elements.clone());
        ideal.cache.write().unwrap().insert(gb.order, Arc::new(gb));
        ideal
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    /// Reduced basis under `order`, computed once and cached.
    pub fn groebner(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.ring, &self.gens, order)?);
        self.cache.write().unwrap().insert(order, gb.clone());
        Ok(gb)
    }

    /// Reduced degrevlex basis.
    pub fn gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner(MonomialOrder::DegRevLex)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn add_gens(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(&self.ring, interreduce(gens))
    }

    /// `self^n` by iterated products, interreducing the generator list
    /// after every step. `power(0)` is the unit ideal.
    pub fn power(&self, n: u32) -> Ideal {
        if n == 0 {
            return Ideal::unit(&self.ring);
        }
        let mut acc = Ideal::new(&self.ring, interreduce(self.gens.clone()));
        let base = acc.clone();
        for _ in 1..n {
            acc = acc.product(&base);
        }
        acc
    }

    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::MixedRings);
        }
        Ok(self.gb()?.reduces_to_zero(f))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        let gb = self.gb()?;
        Ok(other.gens.iter().all(|g| gb.reduces_to_zero(g)))
    }

    /// Equality by comparing reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(*self.gb()? == *other.gb()?)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.gb()?.is_unit() {
            return Ok(other.clone());
        }
        if other.gb()?.is_unit() {
            return Ok(self.clone());
        }
        if let (Some(a), Some(b)) = (self.monomial_gens(), other.monomial_gens()) {
            let field = self.ring.field();
            let gens = a
                .iter()
                .flat_map(|x| b.iter().map(move |y| x.lcm(y)))
                .map(|m| Polynomial::monomial(&self.ring, m, field.one()))
                .collect();
            return Ok(Ideal::new(&self.ring, interreduce(gens)));
        }
        let aux = self.ring.with_leading_aux();
        let ord = MonomialOrder::Elimination(1);
        let t = Polynomial::var(&aux, 0).with_order(ord);
        let one_minus_t = Polynomial::one(&aux).with_order(ord).sub(&t);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(f.lift_into_aux(&aux, 0, ord).mul(&t));
        }
        for g in &other.gens {
            gens.push(g.lift_into_aux(&aux, 0, ord).mul(&one_minus_t));
        }
        let gb = buchberger(&aux, &gens, ord)?;
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| !g.contains_var(0))
            .map(|g| g.drop_aux(&self.ring, MonomialOrder::DegRevLex))
            .collect();
        // the t-free part of a reduced elimination basis is the reduced
        // degrevlex basis of the intersection
        let basis = GroebnerBasis::from_reduced(&self.ring, MonomialOrder::DegRevLex, kept);
        Ok(Ideal::from_basis(basis))
    }

    fn monomial_gens(&self) -> Option<Vec<Monomial>> {
        self.gens
            .iter()
            .map(|g| if g.len() == 1 { Some(g.lm().clone()) } else { None })
            .collect()
    }

    /// `(self : f)`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.ring() != &self.ring {
            return Err(Error::MixedRings);
        }
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if f.is_unit() || self.is_zero() {
            return Ok(self.clone());
        }
        let gb = self.gb()?;
        if gb.is_unit() || gb.reduces_to_zero(f) {
            return Ok(Ideal::unit(&self.ring));
        }
        if let Some(k) = self.colon_finite(&gb, std::slice::from_ref(f))? {
            return Ok(k);
        }
        let inter = self.intersect(&Ideal::new(&self.ring, vec![f.clone()]))?;
        let gens = inter
            .gens
            .iter()
            .map(|g| g.exact_div(f).expect("generator of I ∩ (f) is divisible by f"))
            .collect();
        Ok(Ideal::new(&self.ring, gens))
    }

    /// Zero-dimensional shortcut: `(I : J)` is `I` plus the lifts of the
    /// common kernel of multiplication by the generators of `J` on `R/I`.
    fn colon_finite(&self, gb: &GroebnerBasis, by: &[Polynomial]) -> Result<Option<Ideal>> {
        let limits = self.ring.limits();
        let Some(basis) = gb.standard_monomials(limits.dense_dim) else {
            return Ok(None);
        };
        let field = self.ring.field();
        let dim = basis.len();
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::with_capacity(dim * by.len());
        for f in by {
            let fnf = gb.normal_form(f);
            let mut block = vec![vec![field.zero(); dim]; dim];
            for (col, b) in basis.iter().enumerate() {
                let img = gb.normal_form(&fnf.mul_term(b, &field.one()));
                for (m, c) in img.terms() {
                    block[index[m]][col] = c.clone();
                }
            }
            rows.extend(block);
        }
        let mat = ExactMatrix::from_entries(field, rows.len(), dim, rows.into_iter().flatten().collect())?;
        let mut gens = self.gens.clone();
        for v in mat.nullspace() {
            let terms = basis
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c))
                .collect();
            gens.push(Polynomial::from_terms(&self.ring, MonomialOrder::DegRevLex, terms));
        }
        Ok(Some(Ideal::new(&self.ring, gens)))
    }

    /// `(self : other)`, the intersection of the colons by its generators.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let gb = self.gb()?;
        if gb.is_unit() {
            return Ok(Ideal::unit(&self.ring));
        }
        if let Some(k) = self.colon_finite(&gb, &other.gens)? {
            return Ok(k);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.expect("nonempty generator list"))
    }

    /// `(self : other^∞)`, iterating colons until the basis stops changing.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let cap = self.ring.limits().sat_iterations;
        let mut cur = self.clone();
        for _ in 0..cap {
            let next = cur.colon_ideal(other)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::ResourceLimit(format!(
            "saturation did not stabilize in {cap} steps"
        )))
    }

    /// `dim_k R/(self + m^n)`, counted as standard monomials of a basis of
    /// the truncated ideal.
    pub fn truncated_colength(&self, n: u32) -> Result<usize> {
        let limit = self.ring.limits().max_standard;
        if self.is_homogeneous() {
            return self
                .gb()?
                .count_standard_below(n, limit)
                .ok_or_else(|| Error::ResourceLimit("too many standard monomials".into()));
        }
        let field = self.ring.field();
        let nv = self.ring.nvars();
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.truncate_below(n)).collect();
        for m in monomials_of_degree(nv, n) {
            gens.push(Polynomial::monomial(&self.ring, m, field.one()));
        }
        let gb = buchberger(&self.ring, &gens, MonomialOrder::DegRevLex)?;
        gb.count_standard_below(n, limit)
            .ok_or_else(|| Error::ResourceLimit("too many standard monomials".into()))
    }

    /// Length of `R/self` localized at the origin.
    pub fn local_colength(&self) -> Result<usize> {
        let limits = self.ring.limits().clone();
        let not_finite = Error::NotLocallyFinite {
            cutoff: limits.colength_max,
        };
        let gb = self.gb()?;
        if gb.is_unit() {
            return Ok(0);
        }
        if gb.is_zero_dimensional() {
            return local_part_dim(&gb, &limits);
        }
        if gb.is_homogeneous() {
            return Err(not_finite);
        }
        // keep only the components through the origin
        let m = Ideal::maximal(&self.ring);
        let away = self.saturate(&m)?;
        if away.gens.iter().all(|g| g.constant_coeff().is_zero()) {
            return Err(not_finite);
        }
        let at_origin = self.saturate(&away)?;
        let gb0 = at_origin.gb()?;
        if gb0.is_unit() {
            return Ok(0);
        }
        if !gb0.is_zero_dimensional() {
            return Err(not_finite);
        }
        local_part_dim(&gb0, &limits)
    }

    /// `dim_k (self : m^∞) / self`, the length of the largest submodule
    /// of `R/self` supported at the origin.
    pub fn sat_quotient_length(&self) -> Result<usize> {
        let gb = self.gb()?;
        if gb.is_unit() {
            return Ok(0);
        }
        let sat = self.saturate(&Ideal::maximal(&self.ring))?;
        let sat_gb = sat.gb()?;
        if *sat_gb == *gb {
            return Ok(0);
        }
        self.quotient_length(&sat)
    }

    /// `dim_k bigger / self` for `self ⊆ bigger` with finite quotient:
    /// closes the images of the generators of `bigger` in `R/self` under
    /// multiplication by the variables.
    pub fn quotient_length(&self, bigger: &Ideal) -> Result<usize> {
        self.same_ring(bigger)?;
        let gb = self.gb()?;
        let limit = self.ring.limits().max_standard;
        let nv = self.ring.nvars();
        let one = self.ring.field().one();
        let mut span = PolySpan::default();
        let mut queue: Vec<Polynomial> = Vec::new();
        for g in bigger.gb()?.elements() {
            if let Some(v) = span.insert(gb.normal_form(g)) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for i in 0..nv {
                let w = gb.normal_form(&v.mul_term(&Monomial::var(nv, i), &one));
                if let Some(w) = span.insert(w) {
                    queue.push(w);
                }
            }
            if span.len() > limit {
                return Err(Error::NotFinite {
                    cutoff: self.ring.limits().colength_max,
                });
            }
        }
        Ok(span.len())
    }
}

/// Linear span of polynomials kept in echelon form by leading monomial.
#[derive(Default)]
pub(crate) struct PolySpan {
    rows: HashMap<Monomial, Polynomial>,
}

impl PolySpan {
    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `p`; returns the new echelon row when `p` was independent.
    pub(crate) fn insert(&mut self, p: Polynomial) -> Option<Polynomial> {
        let mut p = p;
        while !p.is_zero() {
            match self.rows.get(p.lm()) {
                Some(row) => {
                    let c = p.lc().clone();
                    p = p.sub_scaled(&c, &Monomial::one(p.ring().nvars()), row);
                }
                None => {
                    let p = p.monic();
                    self.rows.insert(p.lm().clone(), p.clone());
                    return Some(p);
                }
            }
        }
        None
    }
}

/// Dimension of the part of `R/J` (zero-dimensional `J`) supported at
/// the origin: `dim R/J - dim m^k(R/J)` for the stable power.
fn local_part_dim(gb: &GroebnerBasis, limits: &Limits) -> Result<usize> {
    let ring = gb.ring().clone();
    let basis = gb
        .standard_monomials(limits.max_standard)
        .ok_or_else(|| Error::ResourceLimit("quotient too large to enumerate".into()))?;
    let total = basis.len();
    if gb.is_homogeneous() || all_variables_nilpotent(gb, total) {
        return Ok(total);
    }
    let nv = ring.nvars();
    let one = ring.field().one();
    let step = |gens: &[Polynomial]| -> (PolySpan, Vec<Polynomial>) {
        let mut span = PolySpan::default();
        let mut rows = Vec::new();
        for v in gens {
            for i in 0..nv {
                let w = gb.normal_form(&v.mul_term(&Monomial::var(nv, i), &one));
                if let Some(r) = span.insert(w) {
                    rows.push(r);
                }
            }
        }
        (span, rows)
    };
    let mut cur: Vec<Polynomial> = basis
        .iter()
        .map(|m| Polynomial::monomial(&ring, m.clone(), one.clone()))
        .collect();
    let mut dim = total;
    for _ in 0..limits.colength_max {
        let (span, rows) = step(&cur);
        if span.len() == dim {
            return Ok(total - dim);
        }
        dim = span.len();
        cur = rows;
    }
    Err(Error::NotLocallyFinite {
        cutoff: limits.colength_max,
    })
}

fn all_variables_nilpotent(gb: &GroebnerBasis, bound: usize) -> bool {
    let ring = gb.ring();
    let nv = ring.nvars();
    let one = ring.field().one();
    (0..nv).all(|i| {
        let x = Monomial::var(nv, i);
        let mut p = gb.normal_form(&Polynomial::var(ring, i));
        for _ in 1..bound {
            if p.is_zero() {
                return true;
            }
            p = gb.normal_form(&p.mul_term(&x, &one));
        }
        p.is_zero()
    })
}

/// Drops generators that reduce to zero on division by the earlier kept
/// ones (after sorting by degree); normalizes to monic and deduplicates.
pub fn interreduce(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let ord = MonomialOrder::DegRevLex;
    let mut v = prepare(&gens, ord);
    v.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let mut seen = HashSet::new();
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in v {
        if !seen.insert(sort_key(&g)) {
            continue;
        }
        let refs: Vec<&Polynomial> = kept.iter().collect();
        if !reduce_full(&g, &refs, ord).is_zero() {
            kept.push(g);
        }
    }
    kept
}

/// All monomials of total degree exactly `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

/// Ring used by the brute-force test oracles; kept here so tests in other
/// crates can reach it.
pub fn ring_of(names: &[&str], field: crate::exactalg::Field) -> Ring {
    RingSpec::new(names, field).expect("valid ring")
}

/// Brute-force `dim_k R/(J + m^n)`: rank of all truncated multiples
/// `m * g` (deg m < n) inside the space of monomials of degree `< n`.
pub fn truncated_colength_oracle(ideal: &Ideal, n: u32) -> usize {
    let ring = ideal.ring();
    let field = ring.field();
    let nv = ring.nvars();
    let monos: Vec<Monomial> = (0..n).flat_map(|d| monomials_of_degree(nv, d)).collect();
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut span = crate::exactalg::EchelonBasis::new(field, monos.len());
    for g in ideal.gens() {
        let low = g.low_degree().unwrap_or(0);
        for m in &monos {
            if m.degree() + low >= n {
                continue;
            }
            let mut row = vec![field.zero(); monos.len()];
            for (t, c) in g.terms() {
                let p = t.mul(m);
                if p.degree() < n {
                    row[index[&p]] = c.clone();
                }
            }
            span.insert(row);
            if span.len() == monos.len() {
                return 0;
            }
        }
    }
    monos.len() - span.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Field, DEFAULT_PRIME};
    use crate::polyring::parse_poly;

    fn fp() -> Field {
        Field::Prime(DEFAULT_PRIME)
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn monomial_ideal_basis_is_itself() {
        let r = ring_of(&["x", "y"], fp());
        let gb = ideal(&r, &["x^2", "y^3"]).gb().unwrap();
        let shown: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x^2", "y^3"]);
    }

    #[test]
    fn lex_bases() {
        let r = ring_of(&["x", "y"], fp());
        let gb = ideal(&r, &["x - y", "y^2"]).groebner(MonomialOrder::Lex).unwrap();
        assert_eq!(gb.len(), 2);
        let gb = ideal(&r, &["x^2 - y", "y^2 - 1"]).groebner(MonomialOrder::Lex).unwrap();
        let y21 = parse_poly(&r, "y^2 - 1").unwrap();
        assert!(gb.elements().contains(&y21.with_order(MonomialOrder::Lex)));
        let lms: Vec<Vec<u32>> = gb.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(lms, vec![vec![0, 2], vec![2, 0]]);
        let nf = gb.normal_form(&parse_poly(&r, "x^2*y").unwrap());
        assert!(nf.terms().iter().all(|(m, _)| !gb.in_staircase(m)));
        assert_eq!(gb.normal_form(&nf), nf);
    }

    #[test]
    fn normal_form_basics() {
        let r = ring_of(&["x", "y"], fp());
        let gb = ideal(&r, &["x"]).gb().unwrap();
        assert!(gb.normal_form(&parse_poly(&r, "x^2").unwrap()).is_zero());
        let gb = ideal(&r, &["x^2", "y"]).gb().unwrap();
        assert_eq!(gb.normal_form(&Polynomial::one(&r)), Polynomial::one(&r));
    }

    #[test]
    fn sums_products_powers() {
        let r = ring_of(&["x", "y", "z", "w"], fp());
        let m2 = ideal(&r, &["x", "y"]).power(2);
        assert!(m2.equals(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
        assert!(ideal(&r, &["x"]).product(&Ideal::zero(&r)).is_zero());
        let q = ideal(&r, &["x^2 - z", "y^2 - w"]);
        let q3 = q.power(3);
        assert!(q3.gens().len() <= 4);
        let direct = q.product(&q).product(&q);
        assert!(q3.equals(&direct).unwrap());
        assert!(q.power(0).is_unit().unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring_of(&["x", "y"], fp());
        let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(i.equals(&ideal(&r, &["x*y"])).unwrap());
        let m = ideal(&r, &["x", "y"]);
        assert!(m.intersect(&m).unwrap().equals(&m).unwrap());
        let a = ideal(&r, &["x + y^2"]);
        let b = ideal(&r, &["x - y"]);
        let ab = a.intersect(&b).unwrap();
        assert!(ab.equals(&a.product(&b)).unwrap());

        let r4 = ring_of(&["X", "Y", "Z", "W"], fp());
        let i = ideal(&r4, &["X^2", "Y^2"]);
        let j = ideal(&r4, &["Z", "W"]);
        let k = i.intersect(&j).unwrap();
        assert_eq!(k.gb().unwrap().len(), 4);
        let expected = i.product(&j);
        assert!(k.equals(&expected).unwrap());
        assert!(i.contains(&k).unwrap() && j.contains(&k).unwrap());
    }

    #[test]
    fn intersection_by_elimination_matches_monomial_path() {
        let r = ring_of(&["x", "y", "z"], fp());
        let i = ideal(&r, &["x^2 + y*z", "z^3"]);
        let j = ideal(&r, &["y - z", "x^2"]);
        let k = i.intersect(&j).unwrap();
        assert!(i.contains(&k).unwrap());
        assert!(j.contains(&k).unwrap());
        assert!(k.contains(&i.product(&j)).unwrap());
    }

    #[test]
    fn colons_and_saturation() {
        let r = ring_of(&["x", "y"], fp());
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let c = ideal(&r, &["x*y"]).colon(&p("x")).unwrap();
        assert!(c.equals(&ideal(&r, &["y"])).unwrap());
        let i = ideal(&r, &["x^2", "x*y"]);
        assert!(i.colon(&p("1")).unwrap().equals(&i).unwrap());
        assert_eq!(i.colon(&Polynomial::zero(&r)).unwrap_err(), Error::ZeroDivisor);
        let s = ideal(&r, &["x^2*y"]).saturate(&ideal(&r, &["x"])).unwrap();
        assert!(s.equals(&ideal(&r, &["y"])).unwrap());
        assert!(i.saturate(&Ideal::unit(&r)).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn finite_colon_matches_elimination() {
        let r = ring_of(&["x", "y"], fp());
        let i = ideal(&r, &["x^3", "y^2", "x*y - x^2"]);
        let f = parse_poly(&r, "x + y").unwrap();
        let fast = i.colon(&f).unwrap();
        let inter = i.intersect(&Ideal::new(&r, vec![f.clone()])).unwrap();
        let slow = Ideal::new(&r, inter.gens().iter().map(|g| g.exact_div(&f).unwrap()).collect());
        assert!(fast.equals(&slow).unwrap());
    }

    #[test]
    fn local_colengths() {
        let r = ring_of(&["X", "Y", "Z", "W"], fp());
        assert_eq!(Ideal::maximal(&r).local_colength().unwrap(), 1);
        assert_eq!(ideal(&r, &["X^2", "Y^2", "Z", "W"]).local_colength().unwrap(), 4);
        let r2 = ring_of(&["x", "y"], fp());
        // (x^2 - x^3, y): points x = 0 (length 2) and x = 1 (length 1)
        let j = ideal(&r2, &["x^2 - x^3", "y"]);
        assert_eq!(j.local_colength().unwrap(), 2);
        assert_eq!(j.gb().unwrap().standard_monomials(100).unwrap().len(), 3);
        // a line through the origin survives the intersection
        let k = ideal(&r2, &["x*y - x", "x^2"]).intersect(&ideal(&r2, &["x - 1"])).unwrap();
        assert_eq!(k.local_colength().unwrap_err(), Error::NotLocallyFinite { cutoff: 64 });
        let line = ideal(&r2, &["x"]);
        assert!(matches!(line.local_colength(), Err(Error::NotLocallyFinite { .. })));
        let far = ideal(&r2, &["x^2", "y^2"]).intersect(&ideal(&r2, &["x - 1"])).unwrap();
        assert_eq!(far.local_colength().unwrap(), 4);
    }

    #[test]
    fn truncation_agrees_with_oracle() {
        let r = ring_of(&["x", "y", "z"], fp());
        let j = ideal(&r, &["x^2 - y^3", "y*z", "z^2 - x"]);
        for n in 1..6 {
            assert_eq!(j.truncated_colength(n).unwrap(), truncated_colength_oracle(&j, n));
        }
    }

    #[test]
    fn saturation_quotients() {
        let r = ring_of(&["x", "y"], fp());
        assert_eq!(ideal(&r, &["x"]).sat_quotient_length().unwrap(), 0);
        assert_eq!(ideal(&r, &["x^2*y", "y"]).sat_quotient_length().unwrap(), 0);
        // (x^2, x*y): embedded point, (J : m^∞) = (x), (x)/(x^2, xy) has length 1
        assert_eq!(ideal(&r, &["x^2", "x*y"]).sat_quotient_length().unwrap(), 1);
    }

    #[test]
    fn mixed_rings_rejected() {
        let r = ring_of(&["x"], fp());
        let s = ring_of(&["y"], fp());
        assert_eq!(
            ideal(&r, &["x"]).intersect(&ideal(&s, &["y"])).unwrap_err(),
            Error::MixedRings
        );
    }
}
