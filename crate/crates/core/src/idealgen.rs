//! The operadic ideal generated by degree-three relations, and the
//! dimensions of the quotient operad.
//!
//! Two independent generators of the arity-`n` component `I(n)` are provided.
//!
//! *Direct*: every monomial context with one marked leaf, wrapped around a
//! relation whose three inputs are arbitrary monomials, under every bijective
//! labelling of the leaves. Simple and exhaustive; used as the oracle.
//!
//! *Recursive*: `I(n)` is spanned by the grafts `x ∘ (p*q)` that replace a
//! leaf of some `x` in `I(n-1)` by a product of two variables, together with
//! the products `x * l` and `l * x` of `x` with one variable `l`. Any tree
//! containing a relation vertex either has the relation at the root with a
//! cherry in one of its inputs, or has a root `X * Y` with the relation inside
//! `X` (say). In the latter case either `Y` is a single leaf or `Y` contains a
//! cherry. Collapsing that cherry, or removing the root, gives an element of
//! `I(n-1)`. Because `I(n-1)` is stable under relabelling, it suffices to graft
//! into the leaf carrying the largest label and to distribute labels by
//! order-preserving shuffles.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::exactla::{
    echelonize, Field, FieldKind, PrimeField, Rationals, RrefBasis, SparseVec, DEFAULT_PRIMES,
};
use crate::idlang::RelationSpace;
use crate::treekit::{encode, factorial, label_unrank, monomial_count, Shape};
use crate::{Error, Result};

/// Largest arity [`dims`] accepts unless the configuration raises it.
pub const DEFAULT_DIMS_CAP: usize = 6;
/// Arities at or above this use the double-prime rank under [`FieldStrategy::Auto`].
pub const AUTO_PRIME_FROM: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Recursive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::Recursive => "recursive",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "direct" => Ok(Method::Direct),
            "recursive" => Ok(Method::Recursive),
            _ => Err(Error::Argument(format!(
                "unknown method `{s}` (direct|recursive)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldStrategy {
    Rational,
    Prime(u64),
    /// Rationals up to arity 4, two primes from arity 5 on.
    Auto,
}

impl fmt::Display for FieldStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldStrategy::Rational => f.write_str("rational"),
            FieldStrategy::Prime(p) => write!(f, "prime:{p}"),
            FieldStrategy::Auto => f.write_str("auto"),
        }
    }
}

impl FromStr for FieldStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldStrategy> {
        match s {
            "rational" => Ok(FieldStrategy::Rational),
            "auto" => Ok(FieldStrategy::Auto),
            _ => {
                let p = s
                    .strip_prefix("prime:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| {
                        Error::Argument(format!("unknown field `{s}` (rational|prime:P|auto)"))
                    })?;
                PrimeField::new(p)?;
                Ok(FieldStrategy::Prime(p))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimsConfig {
    pub method: Method,
    pub field: FieldStrategy,
    pub arity_cap: usize,
}

impl Default for DimsConfig {
    fn default() -> DimsConfig {
        DimsConfig {
            method: Method::Recursive,
            field: FieldStrategy::Auto,
            arity_cap: DEFAULT_DIMS_CAP,
        }
    }
}

/// How one dimension was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldUsed {
    /// Arities one and two need no elimination.
    None,
    Rational,
    Prime(u64),
    TwoPrimes(u64, u64),
}

impl fmt::Display for FieldUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldUsed::None => f.write_str("none"),
            FieldUsed::Rational => f.write_str("rational"),
            FieldUsed::Prime(p) => write!(f, "prime:{p}"),
            FieldUsed::TwoPrimes(p, q) => write!(f, "primes:{p},{q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimEntry {
    pub arity: usize,
    pub dim: usize,
    /// `None` for arities one and two.
    pub method: Option<Method>,
    pub field: FieldUsed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    pub operad: String,
    pub entries: Vec<DimEntry>,
}

impl DimTable {
    /// Build a table from plain dimensions for arities `1..=dims.len()`.
    pub fn from_dims(operad: impl Into<String>, dims: &[usize]) -> DimTable {
        DimTable {
            operad: operad.into(),
            entries: dims
                .iter()
                .enumerate()
                .map(|(i, &dim)| DimEntry {
                    arity: i + 1,
                    dim,
                    method: None,
                    field: FieldUsed::None,
                })
                .collect(),
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.dim).collect()
    }

    pub fn dim(&self, arity: usize) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.arity == arity)
            .map(|e| e.dim)
    }
}

// Shape bookkeeping for one recursive step from arity `n - 1` to `n`.
struct StepTables {
    n: usize,
    // [shape of arity n-1][leaf position] -> shape rank in arity n
    cherry: Vec<Vec<usize>>,
    // shape rank of `x * leaf` and `leaf * x`
    wrap_left: Vec<usize>,
    wrap_right: Vec<usize>,
    // label sequences of arity n-1, by label rank
    labelings: Vec<Vec<u8>>,
}

impl StepTables {
    fn new(n: usize) -> StepTables {
        let m = n - 1;
        let cherry_shape = Shape::node(Shape::Leaf, Shape::Leaf);
        let shapes = Shape::all(m);
        StepTables {
            n,
            cherry: shapes
                .iter()
                .map(|s| {
                    (0..m)
                        .map(|pos| s.graft(pos, &cherry_shape).rank())
                        .collect()
                })
                .collect(),
            wrap_left: shapes
                .iter()
                .map(|s| Shape::node(s.clone(), Shape::Leaf).rank())
                .collect(),
            wrap_right: shapes
                .iter()
                .map(|s| Shape::node(Shape::Leaf, s.clone()).rank())
                .collect(),
            labelings: (0..factorial(m)).map(|r| label_unrank(m, r)).collect(),
        }
    }

    fn decode(&self, index: usize) -> (usize, &[u8]) {
        let f = self.labelings.len();
        (index / f, &self.labelings[index % f])
    }

    /// Every generating row of `I(n)` derived from one row of `I(n-1)`.
    fn rows_from<F: Field>(&self, field: &F, x: &SparseVec<F::Elem>) -> Vec<SparseVec<F::Elem>> {
        let n = self.n;
        let m = n - 1;
        let ncols = monomial_count(n);
        let mut out = Vec::new();
        let mut labels = Vec::with_capacity(n);
        // graft a product of two fresh labels into the leaf labeled m
        for p in 1..=n as u8 {
            for q in (p + 1)..=n as u8 {
                let rest: Vec<u8> = (1..=n as u8).filter(|&l| l != p && l != q).collect();
                for (first, second) in [(p, q), (q, p)] {
                    let entries = x
                        .iter()
                        .map(|(k, c)| {
                            let (shape, xl) = self.decode(k);
                            labels.clear();
                            let mut pos = 0;
                            for (i, &l) in xl.iter().enumerate() {
                                if l as usize == m {
                                    pos = i;
                                    labels.push(first);
                                    labels.push(second);
                                } else {
                                    labels.push(rest[l as usize - 1]);
                                }
                            }
                            (encode(self.cherry[shape][pos], &labels), c.clone())
                        })
                        .collect();
                    out.push(SparseVec::from_entries(field, ncols, entries).expect("in range"));
                }
            }
        }
        // multiply by one fresh label on either side
        for l in 1..=n as u8 {
            let rest: Vec<u8> = (1..=n as u8).filter(|&k| k != l).collect();
            for left in [true, false] {
                let entries = x
                    .iter()
                    .map(|(k, c)| {
                        let (shape, xl) = self.decode(k);
                        labels.clear();
                        if !left {
                            labels.push(l);
                        }
                        labels.extend(xl.iter().map(|&v| rest[v as usize - 1]));
                        if left {
                            labels.push(l);
                            (encode(self.wrap_left[shape], &labels), c.clone())
                        } else {
                            (encode(self.wrap_right[shape], &labels), c.clone())
                        }
                    })
                    .collect();
                out.push(SparseVec::from_entries(field, ncols, entries).expect("in range"));
            }
        }
        out
    }
}

fn recursive_step<F: Field>(
    field: &F,
    prev: &RrefBasis<F::Elem>,
    n: usize,
) -> Vec<SparseVec<F::Elem>> {
    let tables = StepTables::new(n);
    prev.rows()
        .par_iter()
        .flat_map_iter(|x| tables.rows_from(field, x))
        .collect()
}

// A context with a marked leaf around a relation with three subtree inputs,
// with leaves numbered by "slot" in a fixed order. For each of the 12 relation
// monomials we record the resulting shape rank and the slot read at each
// left-to-right leaf position.
struct Structure {
    per_monomial: Vec<(usize, Vec<u8>)>,
}

fn compositions3(total: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..total {
        for b in 1..total - a {
            out.push([a, b, total - a - b]);
        }
    }
    out
}

fn structures(n: usize) -> Vec<Structure> {
    let mut out = Vec::new();
    let relation_shapes = Shape::all(3);
    let relation_labels: Vec<Vec<u8>> = (0..6).map(|r| label_unrank(3, r)).collect();
    for ctx_arity in 1..=n - 2 {
        for ctx in Shape::all(ctx_arity) {
            for marked in 0..ctx_arity {
                for sizes in compositions3(n - ctx_arity + 1) {
                    let subtree_shapes: Vec<Vec<Shape>> =
                        sizes.iter().map(|&a| Shape::all(a)).collect();
                    for s1 in &subtree_shapes[0] {
                        for s2 in &subtree_shapes[1] {
                            for s3 in &subtree_shapes[2] {
                                let subs = [s1, s2, s3];
                                // slots: context leaves other than the marked one, then t1, t2, t3
                                let mut base = [0usize; 3];
                                base[0] = ctx_arity - 1;
                                base[1] = base[0] + sizes[0];
                                base[2] = base[1] + sizes[1];
                                let mut per_monomial = Vec::with_capacity(12);
                                for k in 0..12 {
                                    let rshape = &relation_shapes[k / 6];
                                    let rlabels = &relation_labels[k % 6];
                                    let mut inner = rshape.clone();
                                    for i in (0..3).rev() {
                                        inner = inner.graft(i, subs[rlabels[i] as usize - 1]);
                                    }
                                    let shape = ctx.graft(marked, &inner).rank();
                                    let mut seq: Vec<u8> = (0..marked as u8).collect();
                                    for &l in rlabels {
                                        let t = l as usize - 1;
                                        seq.extend((base[t]..base[t] + sizes[t]).map(|s| s as u8));
                                    }
                                    seq.extend((marked as u8)..(ctx_arity as u8 - 1));
                                    per_monomial.push((shape, seq));
                                }
                                out.push(Structure { per_monomial });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn direct_rows<F: Field>(
    field: &F,
    relations: &[SparseVec<F::Elem>],
    n: usize,
) -> Vec<SparseVec<F::Elem>> {
    let ncols = monomial_count(n);
    let structs = structures(n);
    (0..factorial(n))
        .into_par_iter()
        .flat_map_iter(|r| {
            let beta = label_unrank(n, r);
            let mut rows = Vec::with_capacity(structs.len() * relations.len());
            let mut labels = vec![0u8; n];
            for s in &structs {
                let cols: Vec<usize> = s
                    .per_monomial
                    .iter()
                    .map(|(shape, seq)| {
                        for (dst, &slot) in labels.iter_mut().zip(seq) {
                            *dst = beta[slot as usize];
                        }
                        encode(*shape, &labels)
                    })
                    .collect();
                for rel in relations {
                    let entries = rel.iter().map(|(k, c)| (cols[k], c.clone())).collect();
                    rows.push(SparseVec::from_entries(field, ncols, entries).expect("in range"));
                }
            }
            rows
        })
        .collect()
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity {
            arity: n,
            limit: cap,
        });
    }
    Ok(())
}

fn relation_rows<F: Field>(r: &RelationSpace, field: &F) -> Result<RrefBasis<F::Elem>> {
    let rows = r
        .basis()
        .rows()
        .iter()
        .map(|v| v.convert(field))
        .collect::<Result<Vec<_>>>()?;
    Ok(echelonize(field, 12, rows).into_rref())
}

/// Spanning rows of `I(n)` over `field` (deduplicated, sparsest first).
pub fn consequences<F: Field>(
    r: &RelationSpace,
    n: usize,
    method: Method,
    field: &F,
    arity_cap: usize,
) -> Result<Vec<SparseVec<F::Elem>>> {
    if n < 3 {
        return Err(Error::Argument(format!(
            "the ideal starts in arity 3, not {n}"
        )));
    }
    check_cap(n, arity_cap)?;
    let rel = relation_rows(r, field)?;
    let rows = match method {
        Method::Direct => direct_rows(field, rel.rows(), n),
        Method::Recursive => {
            let mut basis = rel;
            let mut rows = basis.rows().to_vec();
            for k in 4..=n {
                rows = recursive_step(field, &basis, k);
                if k < n {
                    basis = echelonize(field, monomial_count(k), rows.clone()).into_rref();
                }
            }
            rows
        }
    };
    Ok(crate::exactla::dedup_rows(field, rows))
}

/// Rank of `I(n)` over `field`.
pub fn consequence_rank<F: Field>(
    r: &RelationSpace,
    n: usize,
    method: Method,
    field: &F,
    arity_cap: usize,
) -> Result<usize> {
    let rows = consequences(r, n, method, field, arity_cap)?;
    Ok(echelonize(field, monomial_count(n), rows).rank())
}

/// Ranks of `I(3), ..., I(upto)`, sharing work between arities.
pub fn ideal_ranks<F: Field>(
    r: &RelationSpace,
    upto: usize,
    method: Method,
    field: &F,
) -> Result<Vec<usize>> {
    let rel = relation_rows(r, field)?;
    let mut ranks = Vec::new();
    if upto < 3 {
        return Ok(ranks);
    }
    ranks.push(rel.rank());
    let mut basis = rel.clone();
    for k in 4..=upto {
        let rows = match method {
            Method::Direct => direct_rows(field, rel.rows(), k),
            Method::Recursive => recursive_step(field, &basis, k),
        };
        let ech = echelonize(field, monomial_count(k), rows);
        ranks.push(ech.rank());
        if method == Method::Recursive && k < upto {
            basis = ech.into_rref();
        }
    }
    Ok(ranks)
}

/// Dimensions of the quotient operad in arities `1..=max_arity`.
pub fn dims(r: &RelationSpace, max_arity: usize, config: &DimsConfig) -> Result<DimTable> {
    if max_arity == 0 {
        return Err(Error::Argument("max arity must be positive".into()));
    }
    check_cap(max_arity, config.arity_cap)?;
    let method = config.method;
    let mut entries: Vec<DimEntry> = [1usize, 2]
        .iter()
        .take(max_arity)
        .enumerate()
        .map(|(i, &dim)| DimEntry {
            arity: i + 1,
            dim,
            method: None,
            field: FieldUsed::None,
        })
        .collect();
    let mut push = |ranks: &[usize], from: usize, field: FieldUsed| {
        for (i, &rank) in ranks.iter().enumerate().skip(from - 3) {
            let arity = i + 3;
            entries.push(DimEntry {
                arity,
                dim: monomial_count(arity) - rank,
                method: Some(method),
                field,
            });
        }
    };
    match config.field {
        FieldStrategy::Rational => push(
            &ideal_ranks(r, max_arity, method, &Rationals)?,
            3,
            FieldUsed::Rational,
        ),
        FieldStrategy::Prime(p) => {
            let field = PrimeField::new(p)?;
            push(
                &ideal_ranks(r, max_arity, method, &field)?,
                3,
                FieldUsed::Prime(p),
            )
        }
        FieldStrategy::Auto => {
            let exact_upto = max_arity.min(AUTO_PRIME_FROM - 1);
            push(
                &ideal_ranks(r, exact_upto, method, &Rationals)?,
                3,
                FieldUsed::Rational,
            );
            if max_arity >= AUTO_PRIME_FROM {
                let [p, q] = DEFAULT_PRIMES;
                let a = ideal_ranks(r, max_arity, method, &PrimeField::new(p)?)?;
                let b = ideal_ranks(r, max_arity, method, &PrimeField::new(q)?)?;
                if a != b {
                    return Err(Error::CrossCheck(format!(
                        "ranks of the ideal of `{}` disagree: {a:?} mod {p} vs {b:?} mod {q}",
                        r.name()
                    )));
                }
                push(&a, AUTO_PRIME_FROM, FieldUsed::TwoPrimes(p, q));
            }
        }
    }
    Ok(DimTable {
        operad: r.name().to_string(),
        entries,
    })
}

/// Field kinds used by a strategy for the given arity, for reporting.
pub fn field_for_arity(strategy: FieldStrategy, arity: usize) -> Vec<FieldKind> {
    match strategy {
        FieldStrategy::Rational => vec![FieldKind::Rational],
        FieldStrategy::Prime(p) => vec![FieldKind::Prime(p)],
        FieldStrategy::Auto if arity < AUTO_PRIME_FROM => vec![FieldKind::Rational],
        FieldStrategy::Auto => DEFAULT_PRIMES
            .iter()
            .map(|&p| FieldKind::Prime(p))
            .collect(),
    }
}
