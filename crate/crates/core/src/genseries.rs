//! Truncated generating series and the series test for Koszulity.
//!
//! The series of an operad `P` is `H(t) = sum (-1)^n dim P(n) t^n / n!`.
//! If `P` is Koszul then `H_P(H_{P^!}(t)) = t`; the first coefficient where
//! the composite differs from `t` therefore witnesses that `P` is not Koszul.
//! Agreement to a finite order proves nothing.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactla::format_rational;
use crate::idealgen::{dims, DimTable, DimsConfig};
use crate::idlang::RelationSpace;
use crate::koszul::koszul_dual;
use crate::treekit::factorial;
use crate::{Error, Rational, Result};

/// Default order of the obstruction test.
pub const DEFAULT_ORDER: usize = 5;

/// `c_1 t + ... + c_N t^N`, with zero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Coefficients of `t^1, ..., t^N`.
    pub fn new(coeffs: Vec<Rational>) -> TruncSeries {
        TruncSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> TruncSeries {
        TruncSeries::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; zero outside `1..=order`.
    pub fn coeff(&self, n: usize) -> Rational {
        if n == 0 || n > self.order() {
            Rational::zero()
        } else {
            self.coeffs[n - 1].clone()
        }
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        TruncSeries::new(self.coeffs.iter().take(order).cloned().collect())
    }

    /// `t` to the given order.
    pub fn identity(order: usize) -> TruncSeries {
        let mut coeffs = vec![Rational::zero(); order];
        if order > 0 {
            coeffs[0] = Rational::one();
        }
        TruncSeries::new(coeffs)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let n = i + 1;
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            if !mag.is_one() {
                write!(f, "{}*", format_rational(&mag))?;
            }
            if n == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{n}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// Series of a dimension table. The table must cover `1..=N` without gaps.
pub fn hilbert_series(d: &DimTable) -> Result<TruncSeries> {
    let mut coeffs = Vec::with_capacity(d.entries.len());
    for (i, e) in d.entries.iter().enumerate() {
        let n = i + 1;
        if e.arity != n {
            return Err(Error::Series(format!("dimension table skips arity {n}")));
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        coeffs.push(Rational::new(
            BigInt::from(sign) * BigInt::from(e.dim),
            BigInt::from(factorial(n)),
        ));
    }
    Ok(TruncSeries::new(coeffs))
}

fn mul(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    // both indexed by power, entry 0 is the constant term
    let mut out = vec![Rational::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `f(g(t))` through `t^order`.
pub fn compose(f: &TruncSeries, g: &TruncSeries, order: usize) -> Result<TruncSeries> {
    if f.order() < order || g.order() < order {
        return Err(Error::Series(format!(
            "composition to order {order} needs both series to that order (have {} and {})",
            f.order(),
            g.order()
        )));
    }
    let mut gpow = vec![Rational::zero(); order + 1];
    gpow[0] = Rational::one();
    let mut g_full = vec![Rational::zero()];
    g_full.extend(g.coeffs.iter().take(order).cloned());
    let mut out = vec![Rational::zero(); order + 1];
    for n in 1..=order {
        gpow = mul(&gpow, &g_full, order);
        let c = f.coeff(n);
        if c.is_zero() {
            continue;
        }
        for (o, p) in out.iter_mut().zip(&gpow) {
            *o += &c * p;
        }
    }
    Ok(TruncSeries::new(out.into_iter().skip(1).collect()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `H(H^!(t)) - t` has a nonzero coefficient at `t^order`.
    NotKoszul { order: usize, coefficient: Rational },
    /// No obstruction through `t^order`.
    Inconclusive { order: usize },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::NotKoszul { .. } => "not-koszul",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NotKoszul { order, coefficient } => {
                write!(
                    f,
                    "NOT-KOSZUL (t^{order} coefficient {})",
                    format_rational(coefficient)
                )
            }
            Verdict::Inconclusive { order } => {
                write!(f, "INCONCLUSIVE (no obstruction through t^{order})")
            }
        }
    }
}

/// First deviation of `h` from `t`.
pub fn first_obstruction(h: &TruncSeries) -> Verdict {
    let id = TruncSeries::identity(h.order());
    for n in 1..=h.order() {
        let d = h.coeff(n) - id.coeff(n);
        if !d.is_zero() {
            return Verdict::NotKoszul {
                order: n,
                coefficient: d,
            };
        }
    }
    Verdict::Inconclusive { order: h.order() }
}

/// Everything computed by the series test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub dims: DimTable,
    pub dual_dims: DimTable,
    pub series: TruncSeries,
    pub dual_series: TruncSeries,
    pub composite: TruncSeries,
    pub verdict: Verdict,
}

/// Run the series test for `r` against its Koszul dual.
pub fn koszul_obstruction(
    r: &RelationSpace,
    order: usize,
    config: &DimsConfig,
) -> Result<Obstruction> {
    if order == 0 {
        return Err(Error::Argument("order must be positive".into()));
    }
    let d = dims(r, order, config)?;
    let dual_dims = dims(&koszul_dual(r), order, config)?;
    let series = hilbert_series(&d)?;
    let dual_series = hilbert_series(&dual_dims)?;
    let composite = compose(&series, &dual_series, order)?;
    let verdict = first_obstruction(&composite);
    Ok(Obstruction {
        dims: d,
        dual_dims,
        series,
        dual_series,
        composite,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::relation_space;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn novikov_series() {
        let h = hilbert_series(&DimTable::from_dims("novikov", &[1, 2, 6, 20, 70])).unwrap();
        assert_eq!(
            h.coeffs(),
            &[q(-1, 1), q(1, 1), q(-1, 1), q(5, 6), q(-7, 12)]
        );
        let hh = compose(&h, &h, 5).unwrap();
        assert_eq!(hh.coeffs(), &[q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 6)]);
        assert_eq!(hh.to_string(), "t + 1/6*t^5 + O(t^6)");
    }

    #[test]
    fn small_series() {
        let h = hilbert_series(&DimTable::from_dims("x", &[1])).unwrap();
        assert_eq!(h, TruncSeries::from_integers(&[-1]));
        assert_eq!(compose(&h, &h, 1).unwrap(), TruncSeries::identity(1));
        let a = hilbert_series(&DimTable::from_dims("assoc", &[1, 2, 6, 24, 120, 720])).unwrap();
        assert_eq!(a, TruncSeries::from_integers(&[-1, 1, -1, 1, -1, 1]));
        assert_eq!(compose(&a, &a, 6).unwrap(), TruncSeries::identity(6));
    }

    #[test]
    fn gaps_and_short_inputs() {
        let mut t = DimTable::from_dims("x", &[1, 2, 6]);
        t.entries.remove(1);
        assert!(matches!(hilbert_series(&t), Err(Error::Series(_))));
        let h = TruncSeries::from_integers(&[-1, 1]);
        assert!(matches!(compose(&h, &h, 3), Err(Error::Series(_))));
    }

    #[test]
    fn obstruction_verdicts() {
        let cfg = DimsConfig::default();
        for name in ["novikov-right", "novikov-left"] {
            let o = koszul_obstruction(&relation_space(name).unwrap(), 5, &cfg).unwrap();
            assert_eq!(
                o.verdict,
                Verdict::NotKoszul {
                    order: 5,
                    coefficient: q(1, 6)
                }
            );
        }
        let a = koszul_obstruction(&relation_space("assoc").unwrap(), 5, &cfg).unwrap();
        assert_eq!(a.verdict, Verdict::Inconclusive { order: 5 });
        let m = koszul_obstruction(&relation_space("magma").unwrap(), 4, &cfg).unwrap();
        assert_eq!(m.dual_dims.dims(), [1, 2, 0, 0]);
        assert_eq!(m.verdict, Verdict::Inconclusive { order: 4 });
    }

    #[test]
    fn arity_three_dims_complement() {
        let cfg = DimsConfig::default();
        for p in crate::presets::PRESETS {
            let r = p.relation_space().unwrap();
            let o = koszul_obstruction(&r, 3, &cfg).unwrap();
            assert_eq!(o.dims.dims()[2] + o.dual_dims.dims()[2], 12);
            assert_eq!(o.composite.coeff(1), q(1, 1));
        }
    }
}
