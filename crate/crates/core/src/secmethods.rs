//! Kernel-method lengths over a finite-dimensional algebra `C = R/c`,
//! slice and saturation invariants, d-sequences, superficial elements and
//! Sally-module lengths.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Field};
use crate::groebner::{monomials_of_degree, GroebnerBasis, Ideal};
use crate::hilbert::{binomial, extract_coeffs, hilbert_report, ideal_hilbert_function, ParameterIdeal, QuotientRing};
use crate::polyring::{Monomial, Polynomial, Ring};

use num_traits::ToPrimitive;

/// `C = R/c` localized at the origin, with the multiplication action of
/// every variable on a monomial basis.
#[derive(Clone, Debug)]
pub struct ArtinAlgebra {
    ring: Ring,
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    mult: Vec<ExactMatrix>,
}

impl ArtinAlgebra {
    /// Builds `C` from `c`. When `R/c` has points away from the origin the
    /// local part is taken, via `c + m^L` with `L = ℓ(C)`.
    pub fn new(c: &Ideal) -> Result<Self> {
        let ring = c.ring().clone();
        let len = c.local_colength()?;
        let limits = ring.limits();
        let mut gb = c.gb()?;
        let total = gb.standard_monomials(limits.max_standard).map(|b| b.len());
        if total != Some(len) {
            let one = ring.field().one();
            let extra: Vec<Polynomial> = monomials_of_degree(ring.nvars(), len.max(1) as u32)
                .into_iter()
                .map(|m| Polynomial::monomial(&ring, m, one.clone()))
                .collect();
            gb = c.add_gens(&extra).gb()?;
        }
        let basis = gb
            .standard_monomials(limits.max_standard)
            .ok_or(Error::NotLocallyFinite {
                cutoff: limits.colength_max,
            })?;
        debug_assert_eq!(basis.len(), len);
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut alg = ArtinAlgebra {
            ring: ring.clone(),
            gb: (*gb).clone(),
            basis,
            index,
            mult: Vec::new(),
        };
        alg.mult = (0..ring.nvars())
            .map(|i| alg.action(&Polynomial::var(&ring, i)))
            .collect();
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Multiplication by the `i`-th variable.
    pub fn mult_op(&self, i: usize) -> &ExactMatrix {
        &self.mult[i]
    }

    /// Normal form of an element of `R` in `C`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.gb.normal_form(f)
    }

    /// Coordinates of `f` in the monomial basis.
    pub fn coordinates(&self, f: &Polynomial) -> Vec<crate::exactalg::FieldElement> {
        let field = self.field();
        let mut v = vec![field.zero(); self.dim()];
        for (m, c) in self.reduce(f).terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Matrix of multiplication by `f`; column `j` is `f * basis[j]`.
    pub fn action(&self, f: &Polynomial) -> ExactMatrix {
        let field = self.field();
        let n = self.dim();
        let fr = self.reduce(f);
        let mut m = ExactMatrix::zeros(field, n, n);
        for (j, b) in self.basis.iter().enumerate() {
            let img = self.reduce(&fr.mul_term(b, &field.one()));
            for (mono, c) in img.terms() {
                m.set(self.index[mono], j, c.clone());
            }
        }
        m
    }

    /// Action of the two parameters `a`, `b` on `C`.
    pub fn action_pair(&self, a: &Polynomial, b: &Polynomial) -> ActionPair {
        ActionPair {
            op_a: self.action(a),
            op_b: self.action(b),
        }
    }
}

/// Matrices of multiplication by `a` and `b` on `C`.
#[derive(Clone, Debug)]
pub struct ActionPair {
    pub op_a: ExactMatrix,
    pub op_b: ExactMatrix,
}

impl ActionPair {
    /// `dim ((0) :_C (a, b))`.
    pub fn common_kernel(&self) -> usize {
        self.op_a.vstack(&self.op_b).expect("same shape").nullity()
    }
}

/// Nullity of the block matrix with `a` on the diagonal blocks `(i, i)`
/// and `b` on the blocks `(i+1, i)`, of size `(n+2) dim × (n+1) dim`:
/// tuples `(α_0, ..., α_n)` with `a α_i + b α_{i-1} = 0` for all `i`.
pub fn tn_length(c: &ArtinAlgebra, act: &ActionPair, n: u32) -> usize {
    let dim = c.dim();
    let n = n as usize;
    let mut m = ExactMatrix::zeros(c.field(), (n + 2) * dim, (n + 1) * dim);
    for i in 0..=n {
        for r in 0..dim {
            for s in 0..dim {
                let a = act.op_a.get(r, s);
                if !a.is_zero() {
                    m.set(i * dim + r, i * dim + s, a.clone());
                }
                let b = act.op_b.get(r, s);
                if !b.is_zero() {
                    m.set((i + 1) * dim + r, i * dim + s, b.clone());
                }
            }
        }
    }
    m.nullity()
}

/// Output of [`e1_e2_via_kernel`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub e1: i64,
    pub e2: i64,
    /// `n -> ℓ(T_n)`.
    pub tn: BTreeMap<u32, i64>,
    /// `n -> e0 C(n+2, 2) + ℓ(T_n)`.
    pub hilbert: BTreeMap<u32, i64>,
    pub lower_bound: i64,
    pub upper_bound: i64,
}

pub const DEFAULT_KERNEL_WINDOW: u32 = 10;

/// `H(n) = e0 C(n+2,2) + ℓ(T_n)` on `0..=n_hi`, fitted for `(e1, e2)`,
/// with the bounds `-ℓ(C) <= e1 <= -ℓ((0) :_C Q)` checked.
pub fn e1_e2_via_kernel(c: &ArtinAlgebra, act: &ActionPair, e0: i64, n_hi: u32) -> Result<KernelReport> {
    let tn: Vec<i64> = (0..=n_hi)
        .into_par_iter()
        .map(|n| tn_length(c, act, n) as i64)
        .collect();
    let tn: BTreeMap<u32, i64> = tn.into_iter().enumerate().map(|(n, v)| (n as u32, v)).collect();
    let hilbert: BTreeMap<u32, i64> = tn
        .iter()
        .map(|(&n, &t)| {
            let b = binomial(n as i64 + 2, 2).to_i64().expect("small");
            (n, e0 * b + t)
        })
        .collect();
    let fit = extract_coeffs(&hilbert, 2)?;
    if fit.coeffs[0] != e0 {
        return Err(Error::BoundViolation(format!(
            "fitted e0 = {} differs from the supplied {e0}",
            fit.coeffs[0]
        )));
    }
    let (e1, e2) = (fit.coeffs[1], fit.coeffs[2]);
    let lower = -(c.dim() as i64);
    let upper = -(act.common_kernel() as i64);
    if e1 < lower || e1 > upper {
        return Err(Error::BoundViolation(format!(
            "e1 = {e1} outside [{lower}, {upper}]"
        )));
    }
    Ok(KernelReport {
        e1,
        e2,
        tn,
        hilbert,
        lower_bound: lower,
        upper_bound: upper,
    })
}

/// `ℓ((0) :_C f)`, equal to `ℓ(C/fC)`.
pub fn annihilator_length(c: &ArtinAlgebra, f: &Polynomial) -> usize {
    c.action(f).nullity()
}

/// `-ℓ(H^0_m(A/(a)))`; equals `e^1` of a parameter ideal containing `a`
/// when `a` is superficial and a nonzerodivisor (dimension 2).
pub fn e1_via_slice(a: &QuotientRing, elem: &Polynomial) -> Result<i64> {
    let j = a.extend(std::slice::from_ref(elem));
    Ok(-(j.sat_quotient_length()? as i64))
}

/// Checks `((a_1..a_{i-1}) : a_i a_j) = ((a_1..a_{i-1}) : a_j)` in `A` for
/// all `i <= j`.
pub fn is_d_sequence(a: &QuotientRing, elems: &[Polynomial]) -> Result<bool> {
    for i in 0..elems.len() {
        let base = a.extend(&elems[..i]);
        for j in i..elems.len() {
            let lhs = base.colon(&elems[i].mul(&elems[j]))?;
            let rhs = base.colon(&elems[j])?;
            if !lhs.equals(&rhs)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// [`is_d_sequence`] for every ordering of `elems`.
pub fn is_d_sequence_any_order(a: &QuotientRing, elems: &[Polynomial]) -> Result<bool> {
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    loop {
        let perm: Vec<Polynomial> = idx.iter().map(|&i| elems[i].clone()).collect();
        if !is_d_sequence(a, &perm)? {
            return Ok(false);
        }
        if !next_permutation(&mut idx) {
            return Ok(true);
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `U(a) = (a + (a)) : b^∞`, with `ℓ(U(a)/(a))`.
#[derive(Clone, Debug)]
pub struct UnmixedComponent {
    pub ideal: Ideal,
    pub length_over_a: usize,
}

pub fn unmixed_component(a: &QuotientRing, x: &Polynomial, y: &Polynomial) -> Result<UnmixedComponent> {
    let base = a.extend(std::slice::from_ref(x));
    let u = base.saturate(&Ideal::new(a.ring(), vec![y.clone()]))?;
    if !u.contains(&base)? {
        return Err(Error::BoundViolation("U(a) does not contain (a)".into()));
    }
    let length_over_a = base.quotient_length(&u)?;
    Ok(UnmixedComponent { ideal: u, length_over_a })
}

/// Result of the windowed superficiality test. `holds == false` comes
/// with the `n` that failed; `holds == true` is evidence only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperficialReport {
    pub holds: bool,
    pub failed_at: Option<u32>,
    pub window: (u32, u32),
    pub heuristic: bool,
}

/// Tests `(Q^{n+1} : a) = Q^n + (0 : a)` in `A` for `n` in the window.
pub fn is_superficial(a: &QuotientRing, q: &ParameterIdeal, elem: &Polynomial, window: (u32, u32)) -> Result<SuperficialReport> {
    let (lo, hi) = window;
    let qa = a.extend(q.lifts());
    if !qa.member(elem)? {
        return Err(Error::InvalidInput("element is not in Q".into()));
    }
    let ann = a.defining().colon(elem)?;
    // chain[k] = a + Q^{k+1}
    let chain = a.power_chain(q.lifts(), hi + 1)?;
    for n in lo.max(1)..=hi {
        let lhs = chain[n as usize].colon(elem)?;
        let rhs = chain[n as usize - 1].sum(&ann);
        if !lhs.equals(&rhs)? {
            return Ok(SuperficialReport {
                holds: false,
                failed_at: Some(n),
                window,
                heuristic: true,
            });
        }
    }
    Ok(SuperficialReport {
        holds: true,
        failed_at: None,
        window,
        heuristic: true,
    })
}

/// `ℓ(I^{n+1} / Q^n I)` for `n = 1..=n_max`.
pub fn sally_lengths(a: &QuotientRing, i: &Ideal, q: &ParameterIdeal, n_max: u32) -> Result<BTreeMap<u32, i64>> {
    let scaled = a.scaled_chain(i.gens(), q.lifts(), n_max + 1)?;
    let powers = a.power_chain(i.gens(), n_max + 1)?;
    let pairs: Vec<(u32, &Ideal, &Ideal)> = (1..=n_max)
        .map(|n| (n, &scaled[n as usize], &powers[n as usize]))
        .collect();
    let vals: Vec<Result<(u32, i64)>> = pairs
        .par_iter()
        .map(|(n, qni, ipow)| {
            let small = qni.local_colength()? as i64;
            let big = ipow.local_colength()? as i64;
            Ok((*n, small - big))
        })
        .collect();
    vals.into_iter().collect()
}

/// Inputs and value of `e^1_I - e^0_I - e^1_Q + ℓ(A/I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SallyRankReport {
    pub e0_i: i64,
    pub e1_i: i64,
    pub e1_q: i64,
    pub colength_i: i64,
    pub rank: i64,
}

pub fn sally_rank(a: &QuotientRing, i: &Ideal, q: &ParameterIdeal, n_max: u32) -> Result<SallyRankReport> {
    let hi = extract_coeffs(&ideal_hilbert_function(a, i.gens(), n_max)?, a.dim())?;
    let hq = hilbert_report(a, q, n_max)?;
    let colength_i = a.colength(i.gens())? as i64;
    let (e0_i, e1_i, e1_q) = (hi.coeffs[0], hi.coeffs[1], hq.coeffs[1]);
    Ok(SallyRankReport {
        e0_i,
        e1_i,
        e1_q,
        colength_i,
        rank: e1_i - e0_i - e1_q + colength_i,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::DEFAULT_PRIME;
    use crate::groebner::ring_of;
    use crate::polyring::parse_poly;

    fn r4() -> Ring {
        ring_of(&["x", "y", "z", "w"], Field::Prime(DEFAULT_PRIME))
    }

    #[test]
    fn artin_algebras() {
        let r = r4();
        let m = ArtinAlgebra::new(&Ideal::maximal(&r)).unwrap();
        assert_eq!(m.dim(), 1);
        assert!((0..4).all(|i| m.mult_op(i).is_zero()));
        let c = ArtinAlgebra::new(&Ideal::parse(&r, &["x^2", "y^2", "z", "w"]).unwrap()).unwrap();
        assert_eq!(c.dim(), 4);
        let xy = parse_poly(&r, "x*y").unwrap();
        assert!(c.reduce(&xy.mul(&parse_poly(&r, "x").unwrap())).is_zero());
        for i in 0..4 {
            for j in 0..4 {
                let ab = c.mult_op(i).mul(c.mult_op(j)).unwrap();
                let ba = c.mult_op(j).mul(c.mult_op(i)).unwrap();
                assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn local_part_is_taken() {
        let r = ring_of(&["x"], Field::Prime(DEFAULT_PRIME));
        let c = ArtinAlgebra::new(&Ideal::parse(&r, &["x^2 - x^3"]).unwrap()).unwrap();
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn zero_action_gives_full_kernel() {
        let r = r4();
        let c = ArtinAlgebra::new(&Ideal::parse(&r, &["x^2", "y", "z", "w"]).unwrap()).unwrap();
        let zero = Polynomial::zero(&r);
        let act = c.action_pair(&zero, &zero);
        for n in 0..4 {
            assert_eq!(tn_length(&c, &act, n), (n as usize + 1) * 2);
        }
        assert_eq!(annihilator_length(&c, &zero), 2);
        assert_eq!(annihilator_length(&c, &parse_poly(&r, "1 + x").unwrap()), 0);
        let rep = e1_e2_via_kernel(&c, &act, 3, 8).unwrap();
        assert_eq!((rep.e1, rep.e2), (-2, 0));
    }

    #[test]
    fn regular_sequences_are_d_sequences() {
        let r = ring_of(&["x", "y"], Field::Prime(DEFAULT_PRIME));
        let a = QuotientRing::new(Ideal::zero(&r), 2).unwrap();
        let xs = vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()];
        assert!(is_d_sequence(&a, &xs).unwrap());
        assert!(is_d_sequence_any_order(&a, &xs).unwrap());
        let q = ParameterIdeal::new(&a, xs.clone()).unwrap();
        let rep = is_superficial(&a, &q, &xs[0], (2, 6)).unwrap();
        assert!(rep.holds);
        assert_eq!(e1_via_slice(&a, &xs[0]).unwrap(), 0);
        let u = unmixed_component(&a, &xs[0], &xs[1]).unwrap();
        assert_eq!(u.length_over_a, 0);
        let i = Ideal::maximal(&r);
        let s = sally_lengths(&a, &i, &q, 3).unwrap();
        assert!(s.values().all(|&v| v == 0));
        assert_eq!(sally_rank(&a, &i, &q, 8).unwrap().rank, 0);
    }
}
