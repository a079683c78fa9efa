//! Hilbert–Samuel functions of parameter ideals in `A = R/a`, their
//! coefficients, reductions and randomly sampled minimal reductions.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Field, FieldElement};
use crate::groebner::{interreduce, Ideal, PolySpan};
use crate::polyring::{Polynomial, Ring};

/// `A = R/a` together with its declared Krull dimension.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    defining: Ideal,
    dim: usize,
}

impl QuotientRing {
    /// Rejects defining ideals with a generator that is a unit at the origin.
    pub fn new(defining: Ideal, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if defining.gens().iter().any(|g| !g.constant_coeff().is_zero()) {
            return Err(Error::InvalidInput(
                "defining ideal is not contained in the maximal ideal".into(),
            ));
        }
        Ok(QuotientRing { defining, dim })
    }

    pub fn ring(&self) -> &Ring {
        self.defining.ring()
    }

    pub fn defining(&self) -> &Ideal {
        &self.defining
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.ring().field()
    }

    /// `ℓ_A(A / I A)` for an ideal given by generators in `R`.
    pub fn colength(&self, gens: &[Polynomial]) -> Result<usize> {
        self.defining.add_gens(gens).local_colength()
    }

    /// The ideal `a + (gens)` of `R`.
    pub fn extend(&self, gens: &[Polynomial]) -> Ideal {
        self.defining.add_gens(gens)
    }

    /// `[a + I, a + I^2, ..., a + I^k]`, each step multiplying the previous
    /// reduced basis by the generators of `I`.
    pub fn power_chain(&self, gens: &[Polynomial], k: u32) -> Result<Vec<Ideal>> {
        self.scaled_chain(gens, gens, k)
    }

    /// `[a + S, a + Q S, ..., a + Q^{k-1} S]` for `S = (start)`, `Q = (by)`.
    pub fn scaled_chain(&self, start: &[Polynomial], by: &[Polynomial], k: u32) -> Result<Vec<Ideal>> {
        let mut out = Vec::with_capacity(k as usize);
        if k == 0 {
            return Ok(out);
        }
        let mut cur = self.extend(start);
        out.push(cur.clone());
        for _ in 1..k {
            let basis = cur.gb()?;
            let mut prods = Vec::with_capacity(basis.len() * by.len());
            for g in basis.elements() {
                for q in by {
                    prods.push(g.mul(q));
                }
            }
            cur = self.extend(&interreduce(prods));
            out.push(cur.clone());
        }
        Ok(out)
    }
}

/// A parameter ideal `Q = (a_1, ..., a_d)` of `A`, given by lifts to `R`.
#[derive(Clone, Debug)]
pub struct ParameterIdeal {
    lifts: Vec<Polynomial>,
}

impl ParameterIdeal {
    /// Checks the count and that `A/Q` has finite length.
    pub fn new(ring: &QuotientRing, lifts: Vec<Polynomial>) -> Result<Self> {
        if lifts.len() != ring.dim() {
            return Err(Error::InvalidInput(format!(
                "a parameter ideal needs {} generators, got {}",
                ring.dim(),
                lifts.len()
            )));
        }
        ring.colength(&lifts)?;
        Ok(ParameterIdeal { lifts })
    }

    /// Skips the finiteness check; used for candidates that are checked
    /// later anyway.
    pub fn unchecked(lifts: Vec<Polynomial>) -> Self {
        ParameterIdeal { lifts }
    }

    pub fn lifts(&self) -> &[Polynomial] {
        &self.lifts
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.lifts.iter().map(|p| p.to_string()).collect()
    }
}

/// Samples of a Hilbert–Samuel function and the fitted coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub samples: BTreeMap<u32, i64>,
    /// `(e^0, e^1, ..., e^d)`.
    pub coeffs: Vec<i64>,
    /// Sample range used to certify the fit.
    pub window: (u32, u32),
    /// Least `n` from which the fitted polynomial matches every sample.
    pub polynomial_from: u32,
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `Σ (-1)^i e^i C(n + d - i, d - i)`.
pub fn hilbert_polynomial_value(coeffs: &[i64], n: i64) -> i64 {
    let d = coeffs.len() as i64 - 1;
    let mut acc = BigInt::zero();
    for (i, e) in coeffs.iter().enumerate() {
        let i = i as i64;
        let term = BigInt::from(*e) * binomial(n + d - i, d - i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_i64().expect("value fits in i64")
}

/// `ℓ_A(A/Q^{n+1})` for `n = 0..=n_max`.
pub fn hs_function(a: &QuotientRing, q: &ParameterIdeal, n_max: u32) -> Result<BTreeMap<u32, i64>> {
    ideal_hilbert_function(a, q.lifts(), n_max)
}

/// `ℓ_A(A/I^{n+1})` for any ideal primary to the maximal ideal.
pub fn ideal_hilbert_function(a: &QuotientRing, gens: &[Polynomial], n_max: u32) -> Result<BTreeMap<u32, i64>> {
    let chain = a.power_chain(gens, n_max + 1)?;
    let values: Vec<Result<usize>> = chain.par_iter().map(|k| k.local_colength()).collect();
    let mut out = BTreeMap::new();
    for (n, v) in values.into_iter().enumerate() {
        out.insert(n as u32, v? as i64);
    }
    Ok(out)
}

/// Fits `H(n) = Σ (-1)^i e^i C(n+d-i, d-i)` to the tail of the samples on
/// which the `(d+1)`-st differences vanish.
pub fn extract_coeffs(samples: &BTreeMap<u32, i64>, d: usize) -> Result<HilbertReport> {
    let keys: Vec<u32> = samples.keys().copied().collect();
    let need = 2 * (d + 1);
    if keys.len() < need {
        return Err(Error::NoPolynomialTail(format!(
            "need at least {need} samples, got {}",
            keys.len()
        )));
    }
    if keys.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(Error::InvalidInput("samples must be at consecutive n".into()));
    }
    let vals: Vec<i64> = samples.values().copied().collect();
    let mut diff: Vec<i128> = vals.iter().map(|&v| v as i128).collect();
    for _ in 0..=d {
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
    }
    // diff[j] is the (d+1)-st difference starting at keys[j]
    let start = match diff.iter().rposition(|&x| x != 0) {
        Some(j) => j + 1,
        None => 0,
    };
    if start >= diff.len() {
        return Err(Error::NoPolynomialTail(
            "the last difference does not vanish; request more samples".into(),
        ));
    }
    let n0 = keys[start];
    let hi = *keys.last().expect("nonempty");

    // solve from the last d+1 samples over Q
    let pts: Vec<u32> = keys[keys.len() - (d + 1)..].to_vec();
    let rows: Vec<Vec<FieldElement>> = pts
        .iter()
        .map(|&n| {
            let mut row: Vec<FieldElement> = (0..=d)
                .map(|i| {
                    let b = binomial(n as i64 + (d - i) as i64, (d - i) as i64);
                    let b = if i % 2 == 0 { b } else { -b };
                    FieldElement::Rat(BigRational::from_integer(b))
                })
                .collect();
            row.push(FieldElement::Rat(BigRational::from_integer(BigInt::from(samples[&n]))));
            row
        })
        .collect();
    let mut m = ExactMatrix::from_entries(Field::Rationals, d + 1, d + 2, rows.into_iter().flatten().collect())?;
    let pivots = m.rref();
    if pivots.len() != d + 1 || pivots.contains(&(d + 1)) {
        return Err(Error::NoPolynomialTail("singular fitting system".into()));
    }
    let mut coeffs = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let FieldElement::Rat(v) = m.get(i, d + 1) else {
            unreachable!("rational matrix")
        };
        if !v.is_integer() {
            return Err(Error::NonIntegerCoefficient(format!("e^{i} = {v}")));
        }
        coeffs.push(v.to_integer().to_i64().expect("coefficient fits in i64"));
    }
    for n in n0..=hi {
        if hilbert_polynomial_value(&coeffs, n as i64) != samples[&n] {
            return Err(Error::NoPolynomialTail(format!("fit fails at n = {n}")));
        }
    }
    Ok(HilbertReport {
        samples: samples.clone(),
        coeffs,
        window: (n0, hi),
        polynomial_from: n0,
    })
}

/// Default number of samples beyond `d`.
pub fn default_n_max(d: usize) -> u32 {
    d as u32 + 6
}

/// Samples `ℓ(A/Q^{n+1})` and extracts the coefficients.
pub fn hilbert_report(a: &QuotientRing, q: &ParameterIdeal, n_max: u32) -> Result<HilbertReport> {
    extract_coeffs(&hs_function(a, q, n_max)?, a.dim())
}

/// Lazily built powers `a + I^k`, shared between reduction checks.
pub struct ReductionChecker<'a> {
    ring: &'a QuotientRing,
    gens: Vec<Polynomial>,
    n_cap: u32,
    // powers[k] = a + I^k (k >= 1) with its local colength
    powers: Vec<OnceLock<Result<(Ideal, usize)>>>,
}

impl<'a> ReductionChecker<'a> {
    pub fn new(ring: &'a QuotientRing, i: &Ideal, n_cap: u32) -> Self {
        ReductionChecker {
            ring,
            gens: i.gens().to_vec(),
            n_cap,
            powers: (0..n_cap + 2).map(|_| OnceLock::new()).collect(),
        }
    }

    fn power(&self, k: u32) -> Result<(Ideal, usize)> {
        assert!(k >= 1);
        self.powers[k as usize]
            .get_or_init(|| {
                let ideal = if k == 1 {
                    self.ring.extend(&self.gens)
                } else {
                    let (prev, _) = self.power(k - 1)?;
                    let basis = prev.gb()?;
                    let mut prods = Vec::new();
                    for g in basis.elements() {
                        for h in &self.gens {
                            prods.push(g.mul(h));
                        }
                    }
                    self.ring.extend(&interreduce(prods))
                };
                let len = ideal.local_colength()?;
                Ok((ideal, len))
            })
            .clone()
    }

    /// Least `n <= n_cap` with `I^{n+1} = Q I^n` locally, or `None`.
    pub fn certificate(&self, q: &ParameterIdeal) -> Result<Option<u32>> {
        let ideal = self.ring.extend(&self.gens);
        let gb = ideal.gb()?;
        if !q.lifts().iter().all(|f| gb.reduces_to_zero(f)) {
            return Err(Error::InvalidInput("Q is not contained in I".into()));
        }
        for n in 0..=self.n_cap {
            let (_, target) = self.power(n + 1)?;
            // Q I^n; for n = 0 this is Q itself
            let qin = if n == 0 {
                self.ring.extend(q.lifts())
            } else {
                let (prev, _) = self.power(n)?;
                let basis = prev.gb()?;
                let mut prods = Vec::new();
                for g in basis.elements() {
                    for a in q.lifts() {
                        prods.push(g.mul(a));
                    }
                }
                self.ring.extend(&interreduce(prods))
            };
            // Q I^n ⊆ I^{n+1}, so equal lengths mean equality at the origin
            match qin.local_colength() {
                Ok(len) if len == target => return Ok(Some(n)),
                Ok(_) => {}
                Err(Error::NotLocallyFinite { .. }) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        Ok(None)
    }
}

pub const DEFAULT_REDUCTION_CAP: u32 = 8;

/// Least `n <= n_cap` with `a + I^{n+1} = a + Q I^n` at the origin.
pub fn is_reduction(a: &QuotientRing, q: &ParameterIdeal, i: &Ideal, n_cap: u32) -> Result<Option<u32>> {
    ReductionChecker::new(a, i, n_cap).certificate(q)
}

/// Outcome of [`sample_reductions`].
#[derive(Clone, Debug)]
pub struct SampledReductions {
    pub reductions: Vec<ParameterIdeal>,
    pub certificates: Vec<u32>,
    pub tried: usize,
    pub warnings: Vec<String>,
}

/// Warning attached to anything relying on generic choices over `F_p`.
pub fn genericity_warning(field: Field) -> Option<String> {
    match field {
        Field::Prime(p) => Some(format!(
            "generic choices are drawn from the finite field F_{p}; genericity holds with high probability only"
        )),
        Field::Rationals => None,
    }
}

/// Deterministic stream of random linear combinations of `gens`.
pub fn random_combinations(field: Field, gens: &[Polynomial], count: usize, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let ring = gens[0].ring().clone();
    (0..count)
        .map(|_| {
            let mut acc = Polynomial::zero(&ring);
            for g in gens {
                let c = field.from_random_word(rng.next_u64());
                acc = acc.add(&g.scale(&c));
            }
            acc
        })
        .collect()
}

/// `count` minimal reductions of `I`, each made of `d` random linear
/// combinations of the generators of `I`, kept only when verified.
pub fn sample_reductions(a: &QuotientRing, i: &Ideal, count: usize, seed: u64) -> Result<SampledReductions> {
    let field = a.field();
    let d = a.dim();
    if i.gens().is_empty() {
        return Err(Error::InvalidInput("cannot sample reductions of the zero ideal".into()));
    }
    let checker = ReductionChecker::new(a, i, DEFAULT_REDUCTION_CAP);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_tries = 10 * count.max(1);
    let mut found = Vec::new();
    let mut certs = Vec::new();
    let mut tried = 0;
    while found.len() < count && tried < max_tries {
        let batch = (count - found.len()).min(max_tries - tried);
        let cands: Vec<ParameterIdeal> = (0..batch)
            .map(|_| ParameterIdeal::unchecked(random_combinations(field, i.gens(), d, &mut rng)))
            .collect();
        tried += batch;
        let verdicts: Vec<Result<Option<u32>>> = cands
            .par_iter()
            .map(|q| match a.colength(q.lifts()) {
                Ok(_) => checker.certificate(q),
                Err(Error::NotLocallyFinite { .. }) => Ok(None),
                Err(e) => Err(e),
            })
            .collect();
        for (q, v) in cands.into_iter().zip(verdicts) {
            if let Some(n) = v? {
                if found.len() < count {
                    found.push(q);
                    certs.push(n);
                }
            }
        }
    }
    if found.len() < count {
        return Err(Error::SamplingExhausted {
            found: found.len(),
            wanted: count,
            tried,
        });
    }
    let mut warnings: Vec<String> = genericity_warning(field).into_iter().collect();
    if tried > count {
        warnings.push(format!("{} of {tried} candidates were rejected", tried - count));
    }
    Ok(SampledReductions {
        reductions: found,
        certificates: certs,
        tried,
        warnings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaEntry {
    pub label: String,
    pub generators: Vec<String>,
    pub coeffs: Vec<i64>,
    pub e1: i64,
}

/// Observed `e^1` values over reductions of one ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaReport {
    pub entries: Vec<LambdaEntry>,
    /// Distinct `e^1` values, ascending. An observed subset only.
    pub distinct: Vec<i64>,
    pub warnings: Vec<String>,
}

/// Collects `e^1` over `count` sampled reductions of `I` plus the named
/// parameter ideals supplied by the caller.
pub fn lambda_map(
    a: &QuotientRing,
    i: &Ideal,
    count: usize,
    seed: u64,
    n_max: u32,
    named: &[(String, ParameterIdeal)],
) -> Result<LambdaReport> {
    let mut todo: Vec<(String, ParameterIdeal)> = named.to_vec();
    let mut warnings = Vec::new();
    if count > 0 {
        let s = sample_reductions(a, i, count, seed)?;
        warnings.extend(s.warnings);
        for (k, q) in s.reductions.into_iter().enumerate() {
            todo.push((format!("sample {}", k + 1), q));
        }
    }
    let reports: Vec<Result<HilbertReport>> = todo.par_iter().map(|(_, q)| hilbert_report(a, q, n_max)).collect();
    let mut entries = Vec::new();
    for ((label, q), r) in todo.iter().zip(reports) {
        let r = r?;
        entries.push(LambdaEntry {
            label: label.clone(),
            generators: q.to_strings(),
            e1: r.coeffs.get(1).copied().unwrap_or(0),
            coeffs: r.coeffs,
        });
    }
    let mut distinct: Vec<i64> = entries.iter().map(|e| e.e1).collect();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(LambdaReport {
        entries,
        distinct,
        warnings,
    })
}

/// Hilbert function of the maximal ideal of `A = k + J` inside `B`:
/// `H_A(n) = ℓ_B(B/J^{n+1}) - (ℓ_B(B/J) - 1)` for `n >= 1`, `H_A(0) = 1`.
pub fn k_plus_j_hilbert(b: &QuotientRing, j: &Ideal, n_max: u32) -> Result<HilbertReport> {
    let hb = ideal_hilbert_function(b, j.gens(), n_max)?;
    let correction = hb[&0] - 1;
    let tail: BTreeMap<u32, i64> = hb
        .iter()
        .filter(|(n, _)| **n >= 1)
        .map(|(n, v)| (*n, v - correction))
        .collect();
    let mut report = extract_coeffs(&tail, b.dim())?;
    report.samples.insert(0, 1);
    Ok(report)
}

/// Hilbert function of `Q = (a_1, ..., a_d)A` in `A = k + J`, where the
/// `a_i` lie in `J`: `Q^{n+1} = span{a^α : |α| = n+1} + q^{n+1} J`.
pub fn k_plus_j_parameter_hilbert(b: &QuotientRing, j: &Ideal, q: &ParameterIdeal, n_max: u32) -> Result<HilbertReport> {
    let jb = b.extend(j.gens());
    let jgb = jb.gb()?;
    if !q.lifts().iter().all(|f| jgb.reduces_to_zero(f)) {
        return Err(Error::InvalidInput("parameters must lie in J".into()));
    }
    let b_over_j = jb.local_colength()? as i64;
    // a + q^{n+1} J for n = 0..=n_max
    let chain = b.scaled_chain(
        &product_gens(q.lifts(), j.gens()),
        q.lifts(),
        n_max + 1,
    )?;
    let ring = b.ring().clone();
    let mut samples = BTreeMap::new();
    let mut monos: Vec<Polynomial> = q.lifts().to_vec();
    for (n, ideal) in chain.iter().enumerate() {
        let gb = ideal.gb()?;
        let total = gb
            .standard_monomials(ring.limits().max_standard)
            .ok_or_else(|| Error::NotLocallyFinite {
                cutoff: ring.limits().colength_max,
            })?
            .len();
        let local = ideal.local_colength()?;
        if local != total {
            return Err(Error::InvalidInput(
                "q^{n+1} J has points away from the origin; not supported".into(),
            ));
        }
        let mut span = PolySpan::default();
        for m in &monos {
            span.insert(gb.normal_form(m));
        }
        samples.insert(n as u32, local as i64 - span.len() as i64 - (b_over_j - 1));
        monos = product_gens(&monos, q.lifts());
    }
    extract_coeffs(&samples, b.dim())
}

fn product_gens(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for f in a {
        for g in b {
            out.push(f.mul(g));
        }
    }
    interreduce(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::DEFAULT_PRIME;
    use crate::groebner::ring_of;
    use crate::polyring::parse_poly;

    fn samples_of(coeffs: &[i64], from: u32, to: u32) -> BTreeMap<u32, i64> {
        (from..=to).map(|n| (n, hilbert_polynomial_value(coeffs, n as i64))).collect()
    }

    #[test]
    fn extraction_examples() {
        let r = extract_coeffs(&samples_of(&[5, -2, -1], 0, 7), 2).unwrap();
        assert_eq!(r.coeffs, vec![5, -2, -1]);
        assert_eq!(r.polynomial_from, 0);
        let r = extract_coeffs(&samples_of(&[1, 0, 0], 0, 7), 2).unwrap();
        assert_eq!(r.coeffs, vec![1, 0, 0]);
        // 8 C(n+2,2) - 2 C(n+1,1) - 6 written in the signed basis
        let r = extract_coeffs(&samples_of(&[8, 2, -6], 1, 8), 2).unwrap();
        assert_eq!(r.coeffs, vec![8, 2, -6]);
        assert_eq!(hilbert_polynomial_value(&[8, 2, -6], 1), 14);
    }

    #[test]
    fn extraction_finds_the_tail() {
        let mut s = samples_of(&[8, 2, -4], 0, 8);
        s.insert(0, 3);
        let r = extract_coeffs(&s, 2).unwrap();
        assert_eq!(r.coeffs, vec![8, 2, -4]);
        assert_eq!(r.polynomial_from, 1);
        let short = samples_of(&[1, 0, 0], 0, 3);
        assert!(matches!(extract_coeffs(&short, 2), Err(Error::NoPolynomialTail(_))));
        let mut bad = samples_of(&[1, 0, 0], 0, 7);
        bad.insert(7, 1000);
        assert!(matches!(extract_coeffs(&bad, 2), Err(Error::NoPolynomialTail(_))));
        let halves: BTreeMap<u32, i64> = (0..8).map(|n| (n, (n * (n + 1) / 2) as i64)).collect();
        assert_eq!(extract_coeffs(&halves, 2).unwrap().coeffs, vec![1, 1, 0]);
    }

    #[test]
    fn regular_ring_hilbert_function() {
        let r = ring_of(&["x", "y"], Field::Prime(DEFAULT_PRIME));
        let a = QuotientRing::new(Ideal::zero(&r), 2).unwrap();
        let q = ParameterIdeal::new(&a, vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()]).unwrap();
        let h = hs_function(&a, &q, 3).unwrap();
        assert_eq!(h.values().copied().collect::<Vec<_>>(), vec![1, 3, 6, 10]);
        let i = Ideal::maximal(&r);
        assert_eq!(is_reduction(&a, &q, &i, 8).unwrap(), Some(0));
        let s = sample_reductions(&a, &i, 3, 7).unwrap();
        assert_eq!(s.reductions.len(), 3);
        assert!(s.certificates.iter().all(|&n| n == 0));
    }

    #[test]
    fn parameter_ideal_validation() {
        let r = ring_of(&["x", "y"], Field::Prime(DEFAULT_PRIME));
        let a = QuotientRing::new(Ideal::zero(&r), 2).unwrap();
        let x = parse_poly(&r, "x").unwrap();
        assert!(ParameterIdeal::new(&a, vec![x.clone()]).is_err());
        assert!(matches!(
            ParameterIdeal::new(&a, vec![x.clone(), x.pow(2)]),
            Err(Error::NotLocallyFinite { .. })
        ));
        let unit = Ideal::parse(&r, &["1 + x"]).unwrap();
        assert!(QuotientRing::new(unit, 1).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let r = ring_of(&["x", "y"], Field::Prime(DEFAULT_PRIME));
        let a = QuotientRing::new(Ideal::zero(&r), 2).unwrap();
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let s1 = sample_reductions(&a, &i, 2, 11).unwrap();
        let s2 = sample_reductions(&a, &i, 2, 11).unwrap();
        assert_eq!(s1.reductions.len(), 2);
        for (p, q) in s1.reductions.iter().zip(&s2.reductions) {
            assert_eq!(p.lifts(), q.lifts());
        }
        assert!(s1.certificates.iter().all(|&n| n == 1));
    }
}
