use proptest::prelude::*;
use quadop::idlang::{parse_expression, parse_identity, s3_closure, IdentitySource, LinComb};
use quadop::treekit::{monomial_count, TreeMonomial};
use quadop::{Error, Rational};

fn lincomb(n: usize) -> impl Strategy<Value = LinComb> {
    prop::collection::vec((0..monomial_count(n), -4i64..=4, 1i64..=3), 1..6).prop_map(
        move |terms| {
            let terms = terms
                .into_iter()
                .map(|(k, a, b)| {
                    (
                        TreeMonomial::from_index(n, k).unwrap(),
                        Rational::new(a.into(), b.into()),
                    )
                })
                .collect();
            LinComb::from_terms(n, terms).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn render_parse_render(v in (2usize..=4).prop_flat_map(lincomb)) {
        prop_assume!(!v.is_zero());
        let text = v.to_string();
        let parsed = parse_expression(&text).unwrap();
        prop_assert_eq!(parsed.lincomb.to_string(), text);
        prop_assert_eq!(parsed.lincomb, v);
    }

    #[test]
    fn closure_is_idempotent(v in lincomb(3)) {
        let r = s3_closure(&[v]).unwrap();
        let again = s3_closure(&r.rows()).unwrap();
        prop_assert!(again.same_span(&r));
        prop_assert!(!again.closure_enlarged());
    }
}

#[test]
fn identities_from_the_definitions() {
    let v = parse_identity(&IdentitySource::new("a*(b*c) - b*(a*c) = 0")).unwrap();
    assert_eq!(v.to_string(), "(a*(b*c)) - (b*(a*c))");
    assert!(parse_identity(&IdentitySource::new("a*(b*c) = a*(b*c)"))
        .unwrap()
        .is_zero());
    let w = parse_identity(&IdentitySource::new("(a*b)*c - (a*c)*b = 0")).unwrap();
    assert_eq!(w.to_string(), "((a*b)*c) - ((a*c)*b)");
}

#[test]
fn rejects_malformed_identities() {
    let bad = |s: &str| parse_identity(&IdentitySource::new(s)).unwrap_err();
    assert!(matches!(bad("a*b*c = 0"), Error::Syntax { .. }));
    assert!(matches!(bad("(a*a)*b = 0"), Error::NonMultilinear { .. }));
    assert!(matches!(
        bad("(a*b)*c = (a*b)*d"),
        Error::VariableMismatch { .. }
    ));
    assert!(matches!(bad("a*b = b*a"), Error::Arity { .. }));
}
