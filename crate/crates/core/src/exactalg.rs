//! Exact coefficient fields and dense linear algebra over them.
//!
//! Two fields are supported: the rationals (arbitrary precision) and prime
//! fields `F_p` with `2 < p < 2^31`. Elements carry no reference to their
//! field; all arithmetic goes through a [`Field`] value, which keeps
//! elements small and lets polynomials share one field descriptor.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic used when no field is requested.
pub const DEFAULT_PRIME: u32 = 32003;

/// Descriptor of the ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Mod(u32),
    Rat(BigRational),
}

/// Selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Neg,
}

impl Field {
    /// Prime field `F_p`; rejects composites and `p` outside `(2, 2^31)`.
    pub fn prime(p: u32) -> Result<Field> {
        if p <= 2 || p >= (1u32 << 31) {
            return Err(Error::InvalidField(format!(
                "characteristic {p} outside the supported range (2, 2^31)"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `qq` or `fp:P`.
    pub fn parse(spec: &str) -> Result<Field> {
        let s = spec.trim().to_ascii_lowercase();
        if s == "qq" || s == "q" || s == "rationals" {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u32 = rest
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad characteristic `{rest}`")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!(
            "expected `qq` or `fp:P`, got `{spec}`"
        )))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rat(BigRational::zero()),
            Field::Prime(_) => FieldElement::Mod(0),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElement::Mod(v.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rat(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v % BigInt::from(*p);
                let r = if r.is_negative() { r + BigInt::from(*p) } else { r };
                FieldElement::Mod(r.to_u32().expect("residue fits in u32"))
            }
        }
    }

    /// Maps a raw 64-bit random word into the field. Rationals get a small
    /// nonzero integer to keep coefficient growth in check.
    pub fn from_random_word(&self, w: u64) -> FieldElement {
        match self {
            Field::Rationals => {
                let v = (w % 40) as i64 - 20;
                self.from_i64(if v >= 0 { v + 1 } else { v })
            }
            Field::Prime(p) => FieldElement::Mod((w % *p as u64) as u32),
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => {
                let s = *x as u64 + *y as u64;
                let p = *p as u64;
                FieldElement::Mod(if s >= p { s - p } else { s } as u32)
            }
            (Field::Rationals, FieldElement::Rat(x), FieldElement::Rat(y)) => {
                FieldElement::Rat(x + y)
            }
            _ => panic!("field element does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match (self, a) {
            (Field::Prime(p), FieldElement::Mod(x)) => {
                FieldElement::Mod(if *x == 0 { 0 } else { p - x })
            }
            (Field::Rationals, FieldElement::Rat(x)) => FieldElement::Rat(-x),
            _ => panic!("field element does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => {
                FieldElement::Mod(if x >= y { x - y } else { p - (y - x) })
            }
            (Field::Rationals, FieldElement::Rat(x), FieldElement::Rat(y)) => {
                FieldElement::Rat(x - y)
            }
            _ => panic!("field element does not belong to {self:?}"),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => {
                FieldElement::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (Field::Rationals, FieldElement::Rat(x), FieldElement::Rat(y)) => {
                FieldElement::Rat(x * y)
            }
            _ => panic!("field element does not belong to {self:?}"),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, a) {
            (Field::Prime(p), FieldElement::Mod(x)) => Ok(FieldElement::Mod(inv_mod(*x, *p))),
            (Field::Rationals, FieldElement::Rat(x)) => Ok(FieldElement::Rat(x.recip())),
            _ => Err(Error::MixedFields),
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let inv = self.inv(b)?;
        Ok(self.mul(a, &inv))
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// True when `a` is a value of this field.
    pub fn contains(&self, a: &FieldElement) -> bool {
        match (self, a) {
            (Field::Prime(p), FieldElement::Mod(x)) => x < p,
            (Field::Rationals, FieldElement::Rat(_)) => true,
            _ => false,
        }
    }
}

fn inv_mod(x: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, x as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i64) as u32
}

/// Checked scalar arithmetic. `y` is required for binary operations and
/// ignored for `Inv` and `Neg`.
pub fn field_arith(
    field: Field,
    op: ArithOp,
    x: &FieldElement,
    y: Option<&FieldElement>,
) -> Result<FieldElement> {
    if !field.contains(x) || y.is_some_and(|y| !field.contains(y)) {
        return Err(Error::MixedFields);
    }
    let rhs = || y.ok_or_else(|| Error::InvalidInput(format!("{op:?} needs two operands")));
    Ok(match op {
        ArithOp::Add => field.add(x, rhs()?),
        ArithOp::Sub => field.sub(x, rhs()?),
        ArithOp::Mul => field.mul(x, rhs()?),
        ArithOp::Div => field.div(x, rhs()?)?,
        ArithOp::Inv => field.inv(x)?,
        ArithOp::Neg => field.neg(x),
    })
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Mod(x) => *x == 0,
            FieldElement::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Mod(x) => *x == 1,
            FieldElement::Rat(x) => x.is_one(),
        }
    }

    /// Symmetric integer representative for residues (`p - 1` prints as
    /// `-1`); `None` for non-integral rationals.
    pub fn to_i64_symmetric(&self, field: Field) -> Option<i64> {
        match (self, field) {
            (FieldElement::Mod(x), Field::Prime(p)) => {
                let x = *x as i64;
                let p = p as i64;
                Some(if x > p / 2 { x - p } else { x })
            }
            (FieldElement::Rat(r), _) if r.is_integer() => r.to_integer().to_i64(),
            _ => None,
        }
    }

    /// True when the symmetric representative is negative, used by printers.
    pub fn is_negative_repr(&self, field: Field) -> bool {
        match (self, field) {
            (FieldElement::Mod(x), Field::Prime(p)) => *x > p / 2,
            (FieldElement::Rat(r), _) => r.is_negative(),
            _ => false,
        }
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Field {
    type Error = Error;

    fn try_from(s: String) -> Result<Field> {
        Field::parse(&s)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "qq"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Mod(x) => write!(f, "{x}"),
            FieldElement::Rat(r) => write!(f, "{r}"),
        }
    }
}

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl ExactMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_entries(
        field: Field,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !field.contains(e)) {
            return Err(Error::MixedFields);
        }
        Ok(ExactMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let entries = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged matrix");
                row.iter().map(|&v| field.from_i64(v))
            })
            .collect();
        ExactMatrix {
            field,
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.cols != other.rows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = &out.entries[i * other.cols + j];
                    let next = f.add(cur, &f.mul(a, b));
                    out.entries[i * other.cols + j] = next;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::InvalidInput("shape mismatch in matrix sum".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Ok(ExactMatrix {
            entries,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &FieldElement) -> ExactMatrix {
        let entries = self.entries.iter().map(|a| self.field.mul(a, c)).collect();
        ExactMatrix {
            entries,
            ..self.clone()
        }
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc = f.add(&acc, &f.mul(a, x));
                    }
                }
                acc
            })
            .collect()
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.cols != other.cols {
            return Err(Error::InvalidInput("column mismatch in vstack".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(ExactMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero
    /// entry scanning columns left to right and rows top to bottom; pivot
    /// rows are scaled to be monic. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        match self.field {
            Field::Prime(p) => self.rref_mod(p),
            Field::Rationals => self.rref_generic(),
        }
    }

    fn rref_generic(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.entries.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let v = f.sub(self.get(i, j), &f.mul(&factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn rref_mod(&mut self, p: u32) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let p64 = p as u64;
        let mut a: Vec<u32> = self
            .entries
            .iter()
            .map(|e| match e {
                FieldElement::Mod(x) => *x,
                FieldElement::Rat(_) => panic!("rational entry in a prime-field matrix"),
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    a.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = inv_mod(a[r * cols + c], p) as u64;
            for j in c..cols {
                a[r * cols + j] = ((a[r * cols + j] as u64 * inv) % p64) as u32;
            }
            let (head, tail) = a.split_at_mut(r * cols);
            let (prow, rest) = tail.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let factor = row[c] as u64;
                if factor == 0 {
                    return;
                }
                let neg = p64 - factor;
                for j in c..cols {
                    let pv = prow[j];
                    if pv != 0 {
                        row[j] = ((row[j] as u64 + neg * pv as u64) % p64) as u32;
                    }
                }
            };
            for row in head.chunks_mut(cols) {
                eliminate(row);
            }
            for row in rest.chunks_mut(cols) {
                eliminate(row);
            }
            pivots.push(c);
            r += 1;
        }
        self.entries = a.into_iter().map(FieldElement::Mod).collect();
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : M v = 0}` as column vectors, one per free column of
    /// the reduced echelon form (the free coordinate is 1).
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                let e = m.get(row, free);
                if !e.is_zero() {
                    v[pc] = f.neg(e);
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Incrementally maintained row-echelon basis, used where vectors arrive
/// one at a time (closure computations, span tests).
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    dim: usize,
    // each row is monic at its pivot; pivots are distinct
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl EchelonBasis {
    pub fn new(field: Field, dim: usize) -> Self {
        EchelonBasis {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the basis; returns the residual.
    pub fn reduce(&self, mut v: Vec<FieldElement>) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.dim);
        let f = self.field;
        for (pc, row) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let factor = v[*pc].clone();
            for (j, e) in row.iter().enumerate().skip(*pc) {
                if !e.is_zero() {
                    v[j] = f.sub(&v[j], &f.mul(&factor, e));
                }
            }
        }
        v
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: Vec<FieldElement>) -> bool {
        let f = self.field;
        let v = self.reduce(v);
        let Some(pc) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = f.inv(&v[pc]).expect("pivot is nonzero");
        let v: Vec<_> = v.iter().map(|e| f.mul(e, &inv)).collect();
        self.rows.push((pc, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> Field {
        Field::Prime(DEFAULT_PRIME)
    }

    #[test]
    fn inverse_of_two_mod_five() {
        let f = Field::prime(5).unwrap();
        let r = field_arith(f, ArithOp::Inv, &f.from_i64(2), None).unwrap();
        assert_eq!(r, f.from_i64(3));
    }

    #[test]
    fn rational_sum() {
        let f = Field::Rationals;
        let half = f.div(&f.one(), &f.from_i64(2)).unwrap();
        let third = f.div(&f.one(), &f.from_i64(3)).unwrap();
        let s = field_arith(f, ArithOp::Add, &half, Some(&third)).unwrap();
        let expected = f.div(&f.from_i64(5), &f.from_i64(6)).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn modular_product() {
        let f = fp();
        let r = field_arith(f, ArithOp::Mul, &f.from_i64(16001), Some(&f.from_i64(2))).unwrap();
        // 32002 = -1, the residue of 16001 * 2 modulo 32003
        assert_eq!(r, f.from_i64(32002));
        assert_eq!(r.to_i64_symmetric(f), Some(-1));
    }

    #[test]
    fn checked_errors() {
        let f = fp();
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
        let q = Field::Rationals;
        let mixed = field_arith(f, ArithOp::Add, &f.one(), Some(&q.one()));
        assert_eq!(mixed, Err(Error::MixedFields));
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(2).is_err());
        assert!(Field::parse("fp:32003").is_ok());
        assert_eq!(Field::parse("qq").unwrap(), Field::Rationals);
    }

    #[test]
    fn rank_and_nullspace_basics() {
        for f in [fp(), Field::Rationals] {
            let z = ExactMatrix::zeros(f, 2, 3);
            assert_eq!(z.nullspace().len(), 3);
            assert_eq!(z.rank(), 0);
            let id = ExactMatrix::identity(f, 4);
            assert!(id.nullspace().is_empty());
            assert_eq!(ExactMatrix::identity(f, 3).rank(), 3);
            let m = ExactMatrix::from_i64_rows(f, &[vec![1, 2], vec![2, 4]]);
            assert_eq!(m.rank(), 1);
            let ns = m.nullspace();
            assert_eq!(ns.len(), 1);
            assert!(m.mul_vec(&ns[0]).iter().all(FieldElement::is_zero));
        }
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let f = Field::Rationals;
        let mut b = EchelonBasis::new(f, 3);
        assert!(b.insert(vec![f.from_i64(1), f.from_i64(2), f.from_i64(0)]));
        assert!(b.insert(vec![f.from_i64(0), f.from_i64(1), f.from_i64(1)]));
        assert!(!b.insert(vec![f.from_i64(2), f.from_i64(5), f.from_i64(1)]));
        assert_eq!(b.len(), 2);
    }
}
