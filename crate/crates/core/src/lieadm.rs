//! Koszul duals through Lie-admissibility.
//!
//! For an algebra `A` with product `∘` and an algebra `U` with product `·`,
//! the tensor product `A ⊗ U` carries the bracket
//! `[x⊗p, y⊗q] = (x∘y)⊗(p·q) - (y∘x)⊗(q·p)`. When `A` is free on `a, b, c`
//! modulo `R`, the Jacobi identity for this bracket holds exactly when `U`
//! satisfies one identity per element of a basis of the degree-three quotient.
//! Those identities span the relations of the dual operad.

use num_traits::Zero;

use crate::exactla::{member, Rationals, SparseVec};
use crate::idlang::{
    parse_identity, s3_closure, IdentitySource, LinComb, RelationSpace, DEGREE_THREE_DIM,
};
use crate::treekit::{Node, TreeMonomial};
use crate::{Rational, Result};

/// Degree-three rewrites valid in right-Novikov algebras, each expressing a
/// monomial through others.
pub const NOVIKOV_REWRITES: [&str; 6] = [
    "b*(a*c) = a*(b*c)",
    "c*(a*b) = a*(c*b)",
    "c*(b*a) = b*(c*a)",
    "(a*c)*b = (a*b)*c + a*(c*b) - a*(b*c)",
    "(b*c)*a = -a*(b*c) + b*(c*a) + (b*a)*c",
    "(c*b)*a = (c*a)*b - a*(c*b) + b*(c*a)",
];

/// Conditions on `U` making `A ⊗ U` Lie-admissible for right-Novikov `A`.
pub const NOVIKOV_U_CONDITIONS: [&str; 6] = [
    "(u*v)*w - (u*w)*v = 0",
    "-(v*w)*u - u*(v*w) + v*(u*w) + (u*w)*v = 0",
    "-w*(u*v) + (w*v)*u + u*(w*v) - (u*w)*v = 0",
    "-(v*u)*w + (v*w)*u = 0",
    "w*(v*u) + (v*w)*u - (w*v)*u - v*(w*u) = 0",
    "-(w*v)*u + (w*u)*v = 0",
];

/// Representatives of a basis of the degree-three space modulo `R`: the
/// monomials at the non-pivot columns of its reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    relations: RelationSpace,
    representatives: Vec<usize>,
}

impl QuotientBasis {
    pub fn new(r: &RelationSpace) -> QuotientBasis {
        QuotientBasis {
            relations: r.clone(),
            representatives: r.basis().free_columns(),
        }
    }

    pub fn relations(&self) -> &RelationSpace {
        &self.relations
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn monomials(&self) -> Vec<TreeMonomial> {
        self.representatives
            .iter()
            .map(|&k| TreeMonomial::from_index(3, k).expect("degree three"))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Coordinates of `v` modulo the relations, one per representative.
    pub fn coordinates(&self, v: &SparseVec<Rational>) -> Vec<Rational> {
        let mut residual = v.clone();
        for (row, p) in self
            .relations
            .basis()
            .rows()
            .iter()
            .zip(self.relations.basis().pivots())
        {
            if let Some(x) = residual.get(p).cloned() {
                residual = residual.add_scaled(&Rationals, &-x, row);
            }
        }
        self.representatives
            .iter()
            .map(|&k| residual.get(k).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }
}

/// The unique combination of representatives congruent to `v` modulo `R`.
pub fn normal_form(v: &LinComb, r: &RelationSpace) -> Result<LinComb> {
    let q = QuotientBasis::new(r);
    let coords = q.coordinates(v.coeffs());
    let entries = q.representatives.iter().copied().zip(coords).collect();
    LinComb::from_vec(
        3,
        SparseVec::from_entries(&Rationals, DEGREE_THREE_DIM, entries)?,
    )
}

/// One term `sign · A-monomial ⊗ U-monomial` of the expanded Jacobiator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JacobiTerm {
    pub a_index: usize,
    pub sign: i8,
    pub u_index: usize,
}

/// `[[a⊗u, b⊗v], c⊗w]` plus its two cyclic images, fully expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jacobiator {
    terms: Vec<JacobiTerm>,
}

type TensorSum = Vec<(i8, Node, Node)>;

fn bracket(x: &TensorSum, y: &TensorSum) -> TensorSum {
    let mut out = Vec::new();
    for (s, a1, u1) in x {
        for (t, a2, u2) in y {
            out.push((
                s * t,
                Node::branch(a1.clone(), a2.clone()),
                Node::branch(u1.clone(), u2.clone()),
            ));
            out.push((
                -s * t,
                Node::branch(a2.clone(), a1.clone()),
                Node::branch(u2.clone(), u1.clone()),
            ));
        }
    }
    out
}

fn generator(label: u8) -> TensorSum {
    vec![(1, Node::Leaf(label), Node::Leaf(label))]
}

impl Jacobiator {
    pub fn new() -> Jacobiator {
        let mut terms = Vec::with_capacity(12);
        for (x, y, z) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
            let inner = bracket(&generator(x), &generator(y));
            for (sign, a, u) in bracket(&inner, &generator(z)) {
                let a = TreeMonomial::new(a).expect("multilinear");
                let u = TreeMonomial::new(u).expect("multilinear");
                terms.push(JacobiTerm {
                    a_index: a.index().total(),
                    sign,
                    u_index: u.index().total(),
                });
            }
        }
        Jacobiator { terms }
    }

    pub fn terms(&self) -> &[JacobiTerm] {
        &self.terms
    }
}

impl Default for Jacobiator {
    fn default() -> Jacobiator {
        Jacobiator::new()
    }
}

/// The U-side identities, one per quotient representative, before closure.
pub fn collected_conditions(r: &RelationSpace) -> Result<Vec<(TreeMonomial, LinComb)>> {
    let q = QuotientBasis::new(r);
    let mut sums = vec![vec![Rational::zero(); DEGREE_THREE_DIM]; q.len()];
    for t in Jacobiator::new().terms() {
        let a = SparseVec::from_entries(
            &Rationals,
            DEGREE_THREE_DIM,
            vec![(t.a_index, Rational::from_integer(1.into()))],
        )?;
        for (sum, c) in sums.iter_mut().zip(q.coordinates(&a)) {
            sum[t.u_index] += c * Rational::from_integer(t.sign.into());
        }
    }
    q.monomials()
        .into_iter()
        .zip(sums)
        .map(|(m, s)| {
            Ok((
                m,
                LinComb::from_vec(3, SparseVec::from_dense(&Rationals, &s))?,
            ))
        })
        .collect()
}

/// Relations of the dual operad obtained from Lie-admissibility.
pub fn jacobiator_conditions(r: &RelationSpace) -> Result<RelationSpace> {
    let gens: Vec<LinComb> = collected_conditions(r)?
        .into_iter()
        .map(|(_, v)| v)
        .collect();
    Ok(s3_closure(&gens)?.with_name(format!("{}-dual", r.name())))
}

/// Outcome of checking identities against a relation space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub identity: String,
    pub in_span: bool,
}

/// Membership of each identity in `target`.
pub fn check_identities<S: AsRef<str>>(
    target: &RelationSpace,
    identities: &[S],
) -> Result<Vec<FixtureCheck>> {
    identities
        .iter()
        .map(|s| {
            let v = parse_identity(&IdentitySource::new(s.as_ref()))?;
            Ok(FixtureCheck {
                identity: s.as_ref().to_string(),
                in_span: member(&Rationals, v.coeffs(), target.basis())?.is_member(),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub fixtures: Vec<FixtureCheck>,
    /// The extracted conditions span exactly `expected`.
    pub span_equal: bool,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.span_equal && self.fixtures.iter().all(|f| f.in_span)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.fixtures
            .iter()
            .filter(|f| !f.in_span)
            .map(|f| f.identity.as_str())
            .collect()
    }
}

/// Check that each listed condition lies in `expected`, and that the
/// conditions extracted from `r` span exactly `expected`.
pub fn check_dual_conditions<S: AsRef<str>>(
    r: &RelationSpace,
    expected: &RelationSpace,
    conditions: &[S],
) -> Result<ConditionReport> {
    Ok(ConditionReport {
        fixtures: check_identities(expected, conditions)?,
        span_equal: jacobiator_conditions(r)?.same_span(expected),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idlang::parse_expression;
    use crate::koszul::koszul_dual;
    use crate::presets::{relation_space, PRESETS};

    fn lc(text: &str) -> LinComb {
        parse_expression(text).unwrap().lincomb
    }

    fn idx(text: &str) -> usize {
        lc(text).coeffs().leading().unwrap()
    }

    #[test]
    fn expansion_matches_hand_computation() {
        let expected = [
            ("(a*b)*c", 1, "(u*v)*w"),
            ("(b*a)*c", -1, "(v*u)*w"),
            ("c*(a*b)", -1, "w*(u*v)"),
            ("c*(b*a)", 1, "w*(v*u)"),
            ("(b*c)*a", 1, "(v*w)*u"),
            ("(c*b)*a", -1, "(w*v)*u"),
            ("a*(b*c)", -1, "u*(v*w)"),
            ("a*(c*b)", 1, "u*(w*v)"),
            ("(c*a)*b", 1, "(w*u)*v"),
            ("(a*c)*b", -1, "(u*w)*v"),
            ("b*(c*a)", -1, "v*(w*u)"),
            ("b*(a*c)", 1, "v*(u*w)"),
        ];
        let mut want: Vec<JacobiTerm> = expected
            .iter()
            .map(|&(a, sign, u)| JacobiTerm {
                a_index: idx(a),
                sign,
                u_index: idx(u),
            })
            .collect();
        let mut got = Jacobiator::new().terms().to_vec();
        want.sort();
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn quotient_representatives() {
        let r = relation_space("novikov-right").unwrap();
        let q = QuotientBasis::new(&r);
        assert_eq!(q.len(), 6);
        for m in q.monomials() {
            let v = LinComb::monomial(&m);
            assert_eq!(normal_form(&v, &r).unwrap(), v);
        }
        let full = QuotientBasis::new(&RelationSpace::full("full"));
        assert!(full.is_empty());
    }

    #[test]
    fn normal_forms_respect_rewrites() {
        let r = relation_space("novikov-right").unwrap();
        assert_eq!(
            normal_form(&lc("b*(a*c)"), &r).unwrap(),
            normal_form(&lc("a*(b*c)"), &r).unwrap()
        );
        assert_eq!(
            normal_form(&lc("(c*b)*a"), &r).unwrap(),
            normal_form(&lc("(c*a)*b - a*(c*b) + b*(c*a)"), &r).unwrap()
        );
        assert!(
            normal_form(&lc("(a*b)*c - (a*c)*b"), &r)
                .unwrap()
                .coeffs()
                .iter()
                .count()
                > 0
        );
    }

    #[test]
    fn rewrites_hold_in_right_novikov() {
        let r = relation_space("novikov-right").unwrap();
        let checks = check_identities(&r, &NOVIKOV_REWRITES).unwrap();
        assert!(checks.iter().all(|c| c.in_span), "{checks:?}");
        let assoc = check_identities(&r, &["(a*b)*c = a*(b*c)"]).unwrap();
        assert!(!assoc[0].in_span);
    }

    #[test]
    fn novikov_conditions() {
        let r = relation_space("novikov-right").unwrap();
        let left = relation_space("novikov-left").unwrap();
        let report = check_dual_conditions(&r, &left, &NOVIKOV_U_CONDITIONS).unwrap();
        assert!(report.passed(), "{:?}", report.failures());
        let extracted = jacobiator_conditions(&r).unwrap();
        assert!(extracted.contains(&lc("(u*v)*w - (u*w)*v")));
        assert!(extracted.contains(&lc("-(v*u)*w + (v*w)*u")));
        assert!(
            member(&Rationals, &SparseVec::zero(DEGREE_THREE_DIM), left.basis())
                .unwrap()
                .is_member()
        );
    }

    #[test]
    fn full_relations_give_no_conditions() {
        assert_eq!(
            jacobiator_conditions(&RelationSpace::full("full"))
                .unwrap()
                .dim(),
            0
        );
    }

    #[test]
    fn routes_agree_on_presets() {
        for p in PRESETS {
            let r = p.relation_space().unwrap();
            assert!(
                jacobiator_conditions(&r)
                    .unwrap()
                    .same_span(&koszul_dual(&r)),
                "{}",
                p.name
            );
        }
    }
}
