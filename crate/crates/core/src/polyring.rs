//! Multivariate polynomials over an exact field.
//!
//! A [`Polynomial`] keeps its terms sorted strictly descending under the
//! monomial order it was built with, without zero coefficients. Changing
//! the order is an explicit resort ([`Polynomial::with_order`]).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exactalg::{Field, FieldElement};
use crate::groebner::Limits;

pub const MAX_VARIABLES: usize = 16;

/// Variables, ground field and the computation limits shared by every
/// object built over this ring.
#[derive(Clone, Debug)]
pub struct RingSpec {
    names: Vec<String>,
    field: Field,
    limits: Limits,
}

pub type Ring = Arc<RingSpec>;

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.field == other.field
    }
}

impl Eq for RingSpec {}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new<S: AsRef<str>>(names: &[S], field: Field) -> Result<Ring> {
        Self::with_limits(names, field, Limits::default())
    }

    pub fn with_limits<S: AsRef<str>>(names: &[S], field: Field, limits: Limits) -> Result<Ring> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() || names.len() > MAX_VARIABLES {
            return Err(Error::InvalidRing(format!(
                "need between 1 and {MAX_VARIABLES} variables, got {}",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::InvalidRing(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(RingSpec {
            names,
            field,
            limits,
        }))
    }

    /// The ring with one extra variable prepended, for elimination.
    pub(crate) fn with_leading_aux(&self) -> Ring {
        let mut names = vec![String::from("_t")];
        names.extend(self.names.iter().cloned());
        Arc::new(RingSpec {
            names,
            field: self.field,
            limits: self.limits.clone(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[u32; 6]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            deg: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            deg: exps.iter().sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg + other.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            deg: other.deg - self.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u32; 6]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            deg: exps.iter().sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            deg: self.deg * e,
            exps: self.exps.iter().map(|a| a * e).collect(),
        }
    }

    /// The variable index when this is a pure power `x_i^k`, `k >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub(crate) fn drop_first(&self) -> Monomial {
        Monomial {
            deg: self.deg - self.exps[0],
            exps: SmallVec::from_slice(&self.exps[1..]),
        }
    }

    pub(crate) fn prepend(&self, e: u32) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + 1);
        exps.push(e);
        exps.extend_from_slice(&self.exps);
        Monomial {
            deg: self.deg + e,
            exps,
        }
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .collect();
        parts.join("*")
    }
}

/// A total order on monomials refining divisibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Block order: the first `b` variables by degrevlex, ties broken by
    /// the remaining variables by degrevlex. Eliminates the first block.
    Elimination(usize),
}


fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegRevLex => match a.deg.cmp(&b.deg) {
                Ordering::Equal => degrevlex(&a.exps, &b.exps),
                o => o,
            },
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.exps.len());
                match degrevlex(&a.exps[..k], &b.exps[..k]) {
                    Ordering::Equal => degrevlex(&a.exps[k..], &b.exps[k..]),
                    o => o,
                }
            }
        }
    }

    pub fn parse(s: &str) -> Result<MonomialOrder> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" | "grevlex" | "drl" => Ok(MonomialOrder::DegRevLex),
            _ => {
                if let Some(k) = t.strip_prefix("elim:") {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad block size in `{s}`")))?;
                    if k == 0 {
                        return Err(Error::InvalidInput("elimination block must be >= 1".into()));
                    }
                    Ok(MonomialOrder::Elimination(k))
                } else {
                    Err(Error::InvalidInput(format!(
                        "unknown order `{s}` (lex, degrevlex, elim:B)"
                    )))
                }
            }
        }
    }
}

pub type Term = (Monomial, FieldElement);

/// Polynomial in canonical form: terms strictly descending under `order`,
/// no zero coefficients, no repeated monomials.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.ring != other.ring {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

/// Selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked polynomial arithmetic.
pub fn poly_arith(op: PolyOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring != g.ring {
        return Err(Error::MixedRings);
    }
    Ok(match op {
        PolyOp::Add => f.add(g),
        PolyOp::Sub => f.sub(g),
        PolyOp::Mul => f.mul(g),
    })
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::DegRevLex,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Ring, v: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(v))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: FieldElement) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a canonical polynomial from arbitrary terms (combining
    /// duplicates, dropping zeros).
    pub fn from_terms(ring: &Ring, order: MonomialOrder, terms: Vec<Term>) -> Self {
        let f = ring.field();
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars());
            match acc.get_mut(&m) {
                Some(e) => *e = f.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    /// Trusts the caller that `terms` are already canonical.
    pub(crate) fn from_sorted_terms(ring: &Ring, order: MonomialOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Coefficient of the monomial `1`.
    pub fn constant_coeff(&self) -> FieldElement {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field().zero(),
        }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        let mut p = self.clone();
        p.set_order(order);
        p
    }

    pub fn set_order(&mut self, order: MonomialOrder) {
        if self.order != order {
            self.order = order;
            self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Result<(Monomial, FieldElement)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if order == self.order {
            return Ok(self.terms[0].clone());
        }
        let t = self
            .terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .expect("nonempty");
        Ok(t.clone())
    }

    /// Leading monomial under the polynomial's own order. Panics on zero.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &FieldElement {
        &self.terms[0].1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Smallest degree of a term (the order at the origin).
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        self.check_ring(other);
        let f = self.field();
        let ord = self.order;
        let rhs_owned;
        let rhs = if other.order == ord {
            other
        } else {
            rhs_owned = other.with_order(ord);
            &rhs_owned
        };
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { f.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        f.sub(&a[i].1, &b[j].1)
                    } else {
                        f.add(&a[i].1, &b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { f.neg(&t.1) } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial::from_sorted_terms(&self.ring, ord, out)
    }

    /// Panics if the rings differ; see [`poly_arith`] for the checked form.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect();
        Polynomial::from_sorted_terms(&self.ring, self.order, terms)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        let f = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), f.mul(a, c)))
            .collect();
        Polynomial::from_sorted_terms(&self.ring, self.order, terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        let f = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(n, a)| (n.mul(m), f.mul(a, c)))
            .collect();
        Polynomial::from_sorted_terms(&self.ring, self.order, terms)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other
                .mul_term(&self.terms[0].0, &self.terms[0].1)
                .with_order(self.order);
        }
        let f = self.field();
        let mut acc: HashMap<Monomial, FieldElement> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = f.mul(c1, c2);
                match acc.get_mut(&m) {
                    Some(e) => *e = f.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let ord = self.order;
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial::from_sorted_terms(&self.ring, ord, terms)
    }

    /// Power by repeated squaring; `pow(0)` is 1.
    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring).with_order(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() || self.lc().is_one() {
            return self.clone();
        }
        let inv = self.field().inv(self.lc()).expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// `self - c * m * g`, computed by a single merge. `g` must use the
    /// same order as `self`.
    pub(crate) fn sub_scaled(&self, c: &FieldElement, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.order, g.order);
        let f = self.field();
        let ord = self.order;
        let a = &self.terms;
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let next_b = |j: usize| -> Term { (b[j].0.mul(m), f.mul(&b[j].1, c)) };
        let mut pending: Option<Term> = if j < b.len() { Some(next_b(j)) } else { None };
        while i < a.len() {
            let Some(bt) = pending.take() else { break };
            match ord.cmp(&a[i].0, &bt.0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    pending = Some(bt);
                }
                Ordering::Less => {
                    out.push((bt.0, f.neg(&bt.1)));
                    j += 1;
                    pending = if j < b.len() { Some(next_b(j)) } else { None };
                }
                Ordering::Equal => {
                    let v = f.sub(&a[i].1, &bt.1);
                    if !v.is_zero() {
                        out.push((bt.0, v));
                    }
                    i += 1;
                    j += 1;
                    pending = if j < b.len() { Some(next_b(j)) } else { None };
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        if let Some(bt) = pending {
            out.push((bt.0, f.neg(&bt.1)));
            j += 1;
            while j < b.len() {
                let t = next_b(j);
                out.push((t.0, f.neg(&t.1)));
                j += 1;
            }
        }
        Polynomial::from_sorted_terms(&self.ring, ord, out)
    }

    /// Drops every term of degree `>= n` (reduction modulo `m^n`).
    pub fn truncate_below(&self, n: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() < n)
            .cloned()
            .collect();
        Polynomial::from_sorted_terms(&self.ring, self.order, terms)
    }

    /// Moves the polynomial into `ring`, which must have the same field
    /// and the same variables with one auxiliary variable prepended.
    pub(crate) fn lift_into_aux(&self, aux_ring: &Ring, aux_exp: u32, order: MonomialOrder) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.prepend(aux_exp), c.clone()))
            .collect();
        Polynomial::from_terms(aux_ring, order, terms)
    }

    /// Inverse of [`lift_into_aux`] for polynomials free of the auxiliary
    /// variable.
    pub(crate) fn drop_aux(&self, ring: &Ring, order: MonomialOrder) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                debug_assert_eq!(m.exponents()[0], 0);
                (m.drop_first(), c.clone())
            })
            .collect();
        Polynomial::from_terms(ring, order, terms)
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let ord = self.order;
        let d = d.with_order(ord);
        let f = self.field();
        let lc_inv = f.inv(d.lc()).ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while !rem.is_zero() {
            let (m, c) = rem.terms[0].clone();
            let q = d.lm().quotient_of(&m)?;
            let qc = f.mul(&c, &lc_inv);
            rem = rem.sub_scaled(&qc, &q, &d);
            quot.push((q, qc));
        }
        Some(Polynomial::from_terms(&self.ring, ord, quot))
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[i] > 0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_repr(field);
            let abs = if negative { field.neg(c) } else { c.clone() };
            let abs_str = match abs.to_i64_symmetric(field) {
                Some(v) => v.to_string(),
                None => abs.to_string(),
            };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs_str}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.format(names))?;
            } else if abs_str.contains('/') {
                write!(f, "({abs_str})*{}", m.format(names))?;
            } else {
                write!(f, "{abs_str}*{}", m.format(names))?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------
// Parsing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(num_bigint::BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(v)));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(v)) => {
                    let e: u32 = match u32::try_from(v.clone()) {
                        Ok(e) if e <= 100_000 => e,
                        _ => return self.err("exponent too large"),
                    };
                    self.pos += 1;
                    e
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            };
            if let Some(Tok::Caret) = self.peek() {
                return self.err("chained exponents need parentheses");
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&v)))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(self.ring, i))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial: integer literals, variable names, `+ - * ^` and
/// parentheses. `^` binds tightest, then `*`, then `+`/`-`; unary minus is
/// allowed; juxtaposition is not multiplication.
pub fn parse_poly(ring: &Ring, text: &str) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::DEFAULT_PRIME;

    fn ring(names: &[&str]) -> Ring {
        RingSpec::new(names, Field::Prime(DEFAULT_PRIME)).unwrap()
    }

    #[test]
    fn parse_examples() {
        let r = ring(&["X", "Y", "Z"]);
        assert_eq!(parse_poly(&r, "X^2*Y - Z").unwrap().len(), 2);
        let sq = parse_poly(&r, "(X+Y)^2").unwrap();
        assert_eq!(sq, parse_poly(&r, "X^2 + 2*X*Y + Y^2").unwrap());
        assert!(parse_poly(&r, "X*Y^1 - X*Y").unwrap().is_zero());
        assert_eq!(parse_poly(&r, "-X^2").unwrap(), parse_poly(&r, "0 - X*X").unwrap());
    }

    #[test]
    fn parse_errors() {
        let r = ring(&["X", "Y"]);
        assert!(matches!(parse_poly(&r, "2X"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly(&r, "X +"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly(&r, "X^-1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly(&r, "(X"), Err(Error::Syntax { .. })));
        assert_eq!(parse_poly(&r, "X*T"), Err(Error::UnknownVariable("T".into())));
        assert!(matches!(parse_poly(&r, "X $ Y"), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn ring_validation() {
        let f = Field::Rationals;
        assert!(RingSpec::new(&["x", "x"], f).is_err());
        assert!(RingSpec::new(&["1x"], f).is_err());
        assert!(RingSpec::new::<&str>(&[], f).is_err());
        let many: Vec<String> = (0..17).map(|i| format!("x{i}")).collect();
        assert!(RingSpec::new(&many, f).is_err());
        assert!(RingSpec::new(&many[..16], f).is_ok());
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(&["x", "y", "z"]);
        let p = |s: &str| parse_poly(&r, s).unwrap();
        assert_eq!(p("x - z").pow(0), p("1"));
        assert_eq!(p("x+y").mul(&p("x-y")), p("x^2 - y^2"));
        let r2 = RingSpec::new(&["x", "y"], Field::prime(3).unwrap()).unwrap();
        // binomial coefficients 1 3 3 1 mod 3 would be 1 0 0 1; in F_2 the
        // cube keeps all four terms, checked separately below
        let cube = parse_poly(&r2, "(x+y)^3").unwrap();
        assert_eq!(cube, parse_poly(&r2, "x^3 + y^3").unwrap());
        let other = ring(&["a"]);
        let e = poly_arith(PolyOp::Add, &p("x"), &parse_poly(&other, "a").unwrap());
        assert_eq!(e, Err(Error::MixedRings));
    }

    #[test]
    fn cube_in_characteristic_two() {
        // F_2 is excluded as a field; emulate it by reducing integer
        // binomial coefficients 1,3,3,1 mod 2.
        let coeffs: Vec<u32> = [1u32, 3, 3, 1].iter().map(|c| c % 2).collect();
        assert_eq!(coeffs, vec![1, 1, 1, 1]);
        let r = RingSpec::new(&["x", "y"], Field::Rationals).unwrap();
        let cube = parse_poly(&r, "(x+y)^3").unwrap();
        let odd: Vec<_> = cube
            .terms()
            .iter()
            .map(|(_, c)| c.to_i64_symmetric(Field::Rationals).unwrap() % 2)
            .collect();
        assert_eq!(odd, vec![1, 1, 1, 1]);
    }

    #[test]
    fn leading_terms() {
        let r = ring(&["x", "y"]);
        let f = parse_poly(&r, "x^2 + y^3").unwrap();
        let (m, _) = f.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(m.exponents(), &[0, 3]);
        let (m, _) = f.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(m.exponents(), &[2, 0]);
        let g = parse_poly(&r, "x*y + y^2").unwrap();
        let (m, _) = g.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(m.exponents(), &[1, 1]);
        assert_eq!(
            Polynomial::zero(&r).leading_term(MonomialOrder::Lex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn elimination_order_puts_aux_block_first() {
        let ord = MonomialOrder::Elimination(1);
        let t = Monomial::from_exponents(&[1, 0, 0]);
        let big = Monomial::from_exponents(&[0, 5, 5]);
        assert_eq!(ord.cmp(&t, &big), Ordering::Greater);
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"]);
        let p = |s: &str| parse_poly(&r, s).unwrap();
        assert_eq!(p("x^2 - y^2").exact_div(&p("x - y")), Some(p("x + y")));
        assert_eq!(p("x^2 + y").exact_div(&p("x")), None);
    }

    #[test]
    fn display_round_trips() {
        let r = ring(&["x", "y"]);
        let f = parse_poly(&r, "3*x^2*y - x + 7 - y^2").unwrap();
        let g = parse_poly(&r, &f.to_string()).unwrap();
        assert_eq!(f, g);
        let rq = RingSpec::new(&["x"], Field::Rationals).unwrap();
        let half = Polynomial::constant(&rq, Field::Rationals.div(&Field::Rationals.one(), &Field::Rationals.from_i64(2)).unwrap());
        let h = half.mul(&Polynomial::var(&rq, 0));
        assert_eq!(h.to_string(), "(1/2)*x");
    }
}
