//! Exact sparse linear algebra over the rationals and prime fields.
//!
//! Everything is row-oriented. [`Echelon`] is the incremental workhorse:
//! rows are reduced against the pivots found so far with a dense scratch
//! buffer and a min-heap of pending columns, so the cost of a reduction is
//! proportional to the fill it produces rather than to the number of columns.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Rational, Result};

/// Scalars used by the elimination routines.
pub trait Field: Clone + Send + Sync + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn embed_rational(&self, q: &Rational) -> Result<Self::Elem>;
    fn embed_i64(&self, v: i64) -> Self::Elem;
    fn kind(&self) -> FieldKind;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `acc -= f * x`
    fn sub_mul_assign(&self, acc: &mut Self::Elem, f: &Self::Elem, x: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(f, x));
    }
}

/// Which field a computation ran over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => f.write_str("rational"),
            FieldKind::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Rational {
        assert!(!a.is_zero(), "inverting zero");
        a.recip()
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn sub_mul_assign(&self, acc: &mut Rational, f: &Rational, x: &Rational) {
        *acc -= f * x;
    }
    fn embed_rational(&self, q: &Rational) -> Result<Rational> {
        Ok(q.clone())
    }
    fn embed_i64(&self, v: i64) -> Rational {
        Rational::from_integer(v.into())
    }
    fn kind(&self) -> FieldKind {
        FieldKind::Rational
    }
}

/// The field with `p` elements, `p` a prime below `2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// The two primes used by the double-prime rank certificate.
pub const DEFAULT_PRIMES: [u64; 2] = [1_000_003, 1_000_033];

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let r = (n % BigInt::from(self.p))
            .to_i64()
            .expect("residue fits in i64");
        if r < 0 {
            (r + self.p as i64) as u64
        } else {
            r as u64
        }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverting zero");
        self.pow(*a, self.p - 2)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn sub_mul_assign(&self, acc: &mut u64, f: &u64, x: &u64) {
        *acc = (*acc + self.p * self.p - f * x) % self.p;
    }
    fn embed_rational(&self, q: &Rational) -> Result<u64> {
        let den = self.reduce_bigint(q.denom());
        if den == 0 {
            return Err(Error::Field { prime: self.p });
        }
        Ok(self.reduce_bigint(q.numer()) * self.inv(&den) % self.p)
    }
    fn embed_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.p)
    }
}

/// A sparse vector: strictly increasing columns, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseVec<T> {
    dim: usize,
    entries: Vec<(u32, T)>,
}

impl<T: Clone> SparseVec<T> {
    pub fn zero(dim: usize) -> SparseVec<T> {
        SparseVec {
            dim,
            entries: Vec::new(),
        }
    }

    /// Sorts, merges repeated columns and drops zeros.
    pub fn from_entries<F>(
        field: &F,
        dim: usize,
        mut entries: Vec<(usize, T)>,
    ) -> Result<SparseVec<T>>
    where
        F: Field<Elem = T>,
    {
        if let Some(&(c, _)) = entries.iter().find(|(c, _)| *c >= dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: c + 1,
            });
        }
        entries.sort_by_key(|(c, _)| *c);
        let mut out: Vec<(u32, T)> = Vec::with_capacity(entries.len());
        for (c, x) in entries {
            match out.last_mut() {
                Some((lc, lx)) if *lc as usize == c => *lx = field.add(lx, &x),
                _ => out.push((c as u32, x)),
            }
        }
        out.retain(|(_, x)| !field.is_zero(x));
        Ok(SparseVec { dim, entries: out })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(u32, T)] {
        &self.entries
    }

    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|(c, _)| *c as usize)
    }

    pub fn get(&self, col: usize) -> Option<&T> {
        self.entries
            .binary_search_by_key(&(col as u32), |(c, _)| *c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.entries.iter().map(|(c, x)| (*c as usize, x))
    }

    /// Apply a column permutation (or any injective relabelling).
    pub fn permute_columns<F>(&self, field: &F, map: impl Fn(usize) -> usize) -> SparseVec<T>
    where
        F: Field<Elem = T>,
    {
        let entries = self.iter().map(|(c, x)| (map(c), x.clone())).collect();
        SparseVec::from_entries(field, self.dim, entries).expect("column map stays in range")
    }

    pub fn scale<F: Field<Elem = T>>(&self, field: &F, f: &T) -> SparseVec<T> {
        if field.is_zero(f) {
            return SparseVec::zero(self.dim);
        }
        SparseVec {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(c, x)| (*c, field.mul(f, x)))
                .collect(),
        }
    }

    /// Scale so that the leading coefficient is one.
    pub fn normalized<F: Field<Elem = T>>(&self, field: &F) -> SparseVec<T> {
        match self.entries.first() {
            None => self.clone(),
            Some((_, lead)) => self.scale(field, &field.inv(lead)),
        }
    }

    pub fn to_dense<F: Field<Elem = T>>(&self, field: &F) -> Vec<T> {
        let mut v = vec![field.zero(); self.dim];
        for (c, x) in self.iter() {
            v[c] = x.clone();
        }
        v
    }

    pub fn from_dense<F: Field<Elem = T>>(field: &F, dense: &[T]) -> SparseVec<T> {
        SparseVec {
            dim: dense.len(),
            entries: dense
                .iter()
                .enumerate()
                .filter(|(_, x)| !field.is_zero(x))
                .map(|(c, x)| (c as u32, x.clone()))
                .collect(),
        }
    }

    pub fn convert<F: Field>(&self, target: &F) -> Result<SparseVec<F::Elem>>
    where
        T: Into<Rational>,
    {
        let entries = self
            .iter()
            .map(|(c, x)| Ok((c, target.embed_rational(&x.clone().into())?)))
            .collect::<Result<Vec<_>>>()?;
        SparseVec::from_entries(target, self.dim, entries)
    }

    /// `self + f * other`
    pub fn add_scaled<F: Field<Elem = T>>(
        &self,
        field: &F,
        f: &T,
        other: &SparseVec<T>,
    ) -> SparseVec<T> {
        let mut entries: Vec<(usize, T)> = self.iter().map(|(c, x)| (c, x.clone())).collect();
        entries.extend(other.iter().map(|(c, x)| (c, field.mul(f, x))));
        SparseVec::from_entries(field, self.dim, entries).expect("same dimension")
    }
}

/// Rational matrix given by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    ncols: usize,
    rows: Vec<SparseVec<Rational>>,
}

impl SparseMat {
    pub fn new(ncols: usize, rows: Vec<SparseVec<Rational>>) -> Result<SparseMat> {
        if let Some(r) = rows.iter().find(|r| r.dim() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: r.dim(),
            });
        }
        Ok(SparseMat { ncols, rows })
    }

    pub fn from_dense(rows: &[Vec<Rational>], ncols: usize) -> Result<SparseMat> {
        SparseMat::new(
            ncols,
            rows.iter()
                .map(|r| SparseVec::from_dense(&Rationals, r))
                .collect(),
        )
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec<Rational>] {
        &self.rows
    }
}

/// Rows in reduced row-echelon form: pivots strictly increasing, each pivot
/// coefficient one, pivot columns zero in every other row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RrefBasis<T> {
    ncols: usize,
    rows: Vec<SparseVec<T>>,
}

impl<T: Clone> RrefBasis<T> {
    pub fn empty(ncols: usize) -> RrefBasis<T> {
        RrefBasis {
            ncols,
            rows: Vec::new(),
        }
    }

    /// The whole coordinate space.
    pub fn full<F: Field<Elem = T>>(field: &F, ncols: usize) -> RrefBasis<T> {
        RrefBasis {
            ncols,
            rows: (0..ncols)
                .map(|c| SparseVec {
                    dim: ncols,
                    entries: vec![(c as u32, field.one())],
                })
                .collect(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<T>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.leading().expect("nonzero row"))
            .collect()
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let pivots: HashSet<usize> = self.pivots().into_iter().collect();
        (0..self.ncols).filter(|c| !pivots.contains(c)).collect()
    }

    /// Checks the reduced row-echelon invariants.
    pub fn is_reduced<F: Field<Elem = T>>(&self, field: &F) -> bool
    where
        T: PartialEq,
    {
        let pivots = self.pivots();
        pivots.windows(2).all(|w| w[0] < w[1])
            && self.rows.iter().all(|r| r.entries[0].1 == field.one())
            && self.rows.iter().enumerate().all(|(i, r)| {
                pivots
                    .iter()
                    .enumerate()
                    .all(|(j, &p)| i == j || r.get(p).is_none())
            })
    }
}

const NO_PIVOT: u32 = u32::MAX;

/// Incremental row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: Vec<u32>,
    scratch: Vec<F::Elem>,
    queued: Vec<bool>,
    heap: BinaryHeap<Reverse<u32>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Echelon<F> {
        Echelon {
            scratch: vec![field.zero(); ncols],
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
            queued: vec![false; ncols],
            heap: BinaryHeap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Eliminate every pivot column from `v`. The result is zero exactly when
    /// `v` lies in the span of the rows inserted so far.
    pub fn reduce(&mut self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        assert_eq!(v.dim(), self.ncols, "row dimension mismatch");
        let Echelon {
            field,
            rows,
            pivot_row,
            scratch,
            queued,
            heap,
            ..
        } = self;
        for (c, x) in v.entries.iter() {
            scratch[*c as usize] = x.clone();
            queued[*c as usize] = true;
            heap.push(Reverse(*c));
        }
        let mut out = Vec::new();
        while let Some(Reverse(c)) = heap.pop() {
            let ci = c as usize;
            queued[ci] = false;
            let x = std::mem::replace(&mut scratch[ci], field.zero());
            if field.is_zero(&x) {
                continue;
            }
            let p = pivot_row[ci];
            if p == NO_PIVOT {
                // later pivots only touch columns to the right of c
                out.push((c, x));
                continue;
            }
            for (c2, y) in rows[p as usize].entries.iter().skip(1) {
                let c2i = *c2 as usize;
                field.sub_mul_assign(&mut scratch[c2i], &x, y);
                if !queued[c2i] {
                    queued[c2i] = true;
                    heap.push(Reverse(*c2));
                }
            }
        }
        SparseVec {
            dim: self.ncols,
            entries: out,
        }
    }

    /// Returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec<F::Elem>) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some(c) => {
                self.pivot_row[c] = self.rows.len() as u32;
                self.rows.push(r.normalized(&self.field));
                true
            }
        }
    }

    /// Back-substitute into reduced row-echelon form.
    pub fn into_rref(self) -> RrefBasis<F::Elem> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| Reverse(r.leading()));
        let mut back = Echelon::new(self.field, self.ncols);
        for r in &rows {
            back.insert(r);
        }
        let mut rows = back.rows;
        rows.sort_by_key(|r| r.leading());
        RrefBasis {
            ncols: self.ncols,
            rows,
        }
    }
}

/// Normalize rows to leading coefficient one, drop zeros and duplicates, and
/// order the survivors sparsest first (ties broken by content, so the order is
/// deterministic).
pub fn dedup_rows<F: Field>(field: &F, rows: Vec<SparseVec<F::Elem>>) -> Vec<SparseVec<F::Elem>> {
    let mut seen = HashSet::with_capacity(rows.len());
    let mut out: Vec<_> = rows
        .into_iter()
        .filter(|r| !r.is_zero())
        .map(|r| r.normalized(field))
        .filter(|r| seen.insert(r.clone()))
        .collect();
    out.sort_by(|a, b| {
        a.nnz()
            .cmp(&b.nnz())
            .then_with(|| a.entries.cmp(&b.entries))
    });
    out
}

/// Echelonize rows over `field`. Rows are fed sparsest first, so each pivot
/// column is claimed by the sparsest row that reaches it.
pub fn echelonize<F: Field>(field: &F, ncols: usize, rows: Vec<SparseVec<F::Elem>>) -> Echelon<F> {
    let mut ech = Echelon::new(field.clone(), ncols);
    for r in dedup_rows(field, rows) {
        ech.insert(&r);
    }
    ech
}

/// Reduced row-echelon basis of the row space of `m` over `field`.
pub fn rref<F: Field>(m: &SparseMat, field: &F) -> Result<RrefBasis<F::Elem>> {
    let rows = m
        .rows
        .iter()
        .map(|r| r.convert(field))
        .collect::<Result<Vec<_>>>()?;
    Ok(echelonize(field, m.ncols, rows).into_rref())
}

/// Rank of `m` over the given field.
pub fn rank(m: &SparseMat, kind: FieldKind) -> Result<usize> {
    Ok(match kind {
        FieldKind::Rational => rref(m, &Rationals)?.rank(),
        FieldKind::Prime(p) => {
            let field = PrimeField::new(p)?;
            let rows = m
                .rows
                .iter()
                .map(|r| r.convert(&field))
                .collect::<Result<Vec<_>>>()?;
            echelonize(&field, m.ncols, rows).rank()
        }
    })
}

/// Outcome of a span-membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership<T> {
    /// Coordinates with respect to the rows of the basis.
    InSpan(Vec<T>),
    /// The nonzero residual after eliminating every pivot column.
    NotInSpan(SparseVec<T>),
}

impl<T> Membership<T> {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::InSpan(_))
    }
}

pub fn member<F: Field>(
    field: &F,
    v: &SparseVec<F::Elem>,
    basis: &RrefBasis<F::Elem>,
) -> Result<Membership<F::Elem>> {
    if v.dim() != basis.ncols {
        return Err(Error::DimensionMismatch {
            expected: basis.ncols,
            found: v.dim(),
        });
    }
    let coords: Vec<F::Elem> = basis
        .pivots()
        .iter()
        .map(|&p| v.get(p).cloned().unwrap_or_else(|| field.zero()))
        .collect();
    let mut residual = v.clone();
    for (row, x) in basis.rows.iter().zip(&coords) {
        if !field.is_zero(x) {
            residual = residual.add_scaled(field, &field.neg(x), row);
        }
    }
    Ok(if residual.is_zero() {
        Membership::InSpan(coords)
    } else {
        Membership::NotInSpan(residual)
    })
}

/// Basis of `{y : r . y = 0 for every row r}`, in reduced form.
pub fn nullspace<F: Field>(field: &F, b: &RrefBasis<F::Elem>) -> RrefBasis<F::Elem> {
    let pivots = b.pivots();
    let rows = b
        .free_columns()
        .into_iter()
        .map(|f| {
            let mut entries = vec![(f, field.one())];
            for (row, &p) in b.rows.iter().zip(&pivots) {
                if let Some(x) = row.get(f) {
                    entries.push((p, field.neg(x)));
                }
            }
            SparseVec::from_entries(field, b.ncols, entries).expect("in range")
        })
        .collect();
    echelonize(field, b.ncols, rows).into_rref()
}

/// Orthogonal complement of `sub` under the bilinear form `<x, y> = x^T G y`.
pub fn annihilator(
    sub: &RrefBasis<Rational>,
    form: &[Vec<Rational>],
) -> Result<RrefBasis<Rational>> {
    let n = sub.ncols;
    if form.len() != n || form.iter().any(|r| r.len() != n) {
        return Err(Error::Argument(format!("form must be a {n}x{n} matrix")));
    }
    if rref(&SparseMat::from_dense(form, n)?, &Rationals)?.rank() != n {
        return Err(Error::Argument("bilinear form is singular".into()));
    }
    let rows = sub
        .rows
        .iter()
        .map(|r| {
            let mut w = vec![Rational::zero(); n];
            for (k, x) in r.iter() {
                for (j, g) in form[k].iter().enumerate() {
                    if !g.is_zero() {
                        w[j] += x * g;
                    }
                }
            }
            SparseVec::from_dense(&Rationals, &w)
        })
        .collect();
    Ok(nullspace(
        &Rationals,
        &echelonize(&Rationals, n, rows).into_rref(),
    ))
}

/// `a` and `b` span the same subspace. Both must be reduced.
pub fn same_span<T: PartialEq>(a: &RrefBasis<T>, b: &RrefBasis<T>) -> bool {
    a.ncols == b.ncols && a.rows == b.rows
}

/// Render a rational as `p/q`, or `p` when integral.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> SparseMat {
        let n = rows[0].len();
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        SparseMat::from_dense(&dense, n).unwrap()
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let m = mat(&[&[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(rref(&m, &Rationals).unwrap().rank(), 0);
        assert_eq!(rank(&m, FieldKind::Prime(1_000_003)).unwrap(), 0);
    }

    #[test]
    fn rref_is_reduced() {
        let m = mat(&[&[2, 4, 1, 0], &[1, 2, 0, 1], &[3, 6, 1, 1]]);
        let b = rref(&m, &Rationals).unwrap();
        assert_eq!(b.rank(), 2);
        assert!(b.is_reduced(&Rationals));
        assert_eq!(b.pivots(), vec![0, 2]);
        assert_eq!(
            b.rows()[0].to_dense(&Rationals),
            vec![q(1), q(2), q(0), q(1)]
        );
        assert_eq!(
            b.rows()[1].to_dense(&Rationals),
            vec![q(0), q(0), q(1), q(-2)]
        );
    }

    #[test]
    fn prime_dividing_denominator_is_rejected() {
        let v =
            SparseVec::from_entries(&Rationals, 2, vec![(0, Rational::new(1.into(), 7.into()))])
                .unwrap();
        let m = SparseMat::new(2, vec![v]).unwrap();
        assert_eq!(
            rank(&m, FieldKind::Prime(7)).unwrap_err(),
            Error::Field { prime: 7 }
        );
        assert_eq!(rank(&m, FieldKind::Prime(11)).unwrap(), 1);
        assert_eq!(
            rank(&m, FieldKind::Prime(12)).unwrap_err(),
            Error::NotPrime(12)
        );
    }

    #[test]
    fn rank_mod_small_prime_can_drop() {
        // det = 5
        let m = mat(&[&[1, 2], &[3, 11]]);
        assert_eq!(rank(&m, FieldKind::Rational).unwrap(), 2);
        assert_eq!(rank(&m, FieldKind::Prime(5)).unwrap(), 1);
        assert_eq!(rank(&m, FieldKind::Prime(1_000_003)).unwrap(), 2);
    }

    #[test]
    fn membership() {
        let b = rref(&mat(&[&[1, 1, 0], &[0, 1, 1]]), &Rationals).unwrap();
        let zero = SparseVec::zero(3);
        assert_eq!(
            member(&Rationals, &zero, &b).unwrap(),
            Membership::InSpan(vec![q(0), q(0)])
        );
        let v = SparseVec::from_dense(&Rationals, &[q(1), q(3), q(2)]);
        assert_eq!(
            member(&Rationals, &v, &b).unwrap(),
            Membership::InSpan(vec![q(1), q(3)])
        );
        let w = SparseVec::from_dense(&Rationals, &[q(1), q(0), q(0)]);
        assert!(!member(&Rationals, &w, &b).unwrap().is_member());
        let bad = SparseVec::<Rational>::zero(4);
        assert!(matches!(
            member(&Rationals, &bad, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn annihilator_extremes() {
        let id: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| q((i == j) as i64)).collect())
            .collect();
        let zero = RrefBasis::empty(3);
        assert_eq!(
            annihilator(&zero, &id).unwrap(),
            RrefBasis::full(&Rationals, 3)
        );
        assert_eq!(
            annihilator(&RrefBasis::full(&Rationals, 3), &id)
                .unwrap()
                .rank(),
            0
        );
        let singular = vec![vec![q(1), q(0), q(0)]; 3];
        assert!(matches!(
            annihilator(&zero, &singular),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn annihilator_under_signed_form() {
        // <x, y> = x0 y0 - x1 y1 ; span{(1,1)} is isotropic, so it is its own complement
        let form = vec![vec![q(1), q(0)], vec![q(0), q(-1)]];
        let s = rref(&mat(&[&[1, 1]]), &Rationals).unwrap();
        assert_eq!(annihilator(&s, &form).unwrap(), s);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(1_000_003).unwrap();
        let x = f
            .embed_rational(&Rational::new((-3).into(), 4.into()))
            .unwrap();
        assert_eq!(f.mul(&x, &4), f.embed_i64(-3));
        assert_eq!(f.mul(&f.inv(&x), &x), 1);
        let mut acc = 5;
        f.sub_mul_assign(&mut acc, &1_000_002, &1_000_002);
        assert_eq!(acc, 4);
    }
}
