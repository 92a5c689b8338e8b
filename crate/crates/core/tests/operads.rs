use quadop::exactla::{PrimeField, Rationals};
use quadop::idealgen::{consequence_rank, dims, DimsConfig, FieldStrategy, Method};
use quadop::idlang::opposite_relations;
use quadop::koszul::koszul_dual;
use quadop::presets::{relation_space, PRESETS};

fn config(method: Method, field: FieldStrategy) -> DimsConfig {
    DimsConfig {
        method,
        field,
        ..DimsConfig::default()
    }
}

#[test]
fn preset_dimensions() {
    let expected: [(&str, [usize; 5]); 8] = [
        ("novikov-right", [1, 2, 6, 20, 70]),
        ("novikov-left", [1, 2, 6, 20, 70]),
        ("assoc", [1, 2, 6, 24, 120]),
        ("prelie-right", [1, 2, 9, 64, 625]),
        ("perm", [1, 2, 3, 4, 5]),
        ("leibniz", [1, 2, 6, 24, 120]),
        ("zinbiel", [1, 2, 6, 24, 120]),
        ("magma", [1, 2, 12, 120, 1680]),
    ];
    for (name, want) in expected {
        let got = dims(&relation_space(name).unwrap(), 5, &DimsConfig::default()).unwrap();
        assert_eq!(got.dims(), want, "{name}");
    }
}

#[test]
fn direct_and_recursive_agree() {
    for p in PRESETS {
        let r = p.relation_space().unwrap();
        for n in 3..=5 {
            let f = PrimeField::new(1_000_033).unwrap();
            let d = consequence_rank(&r, n, Method::Direct, &f, 6).unwrap();
            let c = consequence_rank(&r, n, Method::Recursive, &f, 6).unwrap();
            assert_eq!(d, c, "{} arity {n}", p.name);
        }
    }
}

#[test]
fn rational_and_prime_ranks_agree() {
    for p in PRESETS {
        let r = p.relation_space().unwrap();
        let exact = dims(&r, 4, &config(Method::Recursive, FieldStrategy::Rational)).unwrap();
        for prime in [1_000_003, 1_000_033] {
            let modular = dims(
                &r,
                4,
                &config(Method::Recursive, FieldStrategy::Prime(prime)),
            )
            .unwrap();
            assert_eq!(exact.dims(), modular.dims(), "{}", p.name);
        }
        assert_eq!(
            consequence_rank(&r, 4, Method::Direct, &Rationals, 6).unwrap(),
            120 - exact.dims()[3]
        );
    }
}

#[test]
fn opposite_operads_have_equal_dimensions() {
    for p in PRESETS {
        let r = p.relation_space().unwrap();
        let cfg = DimsConfig::default();
        assert_eq!(
            dims(&r, 5, &cfg).unwrap().dims(),
            dims(&opposite_relations(&r), 5, &cfg).unwrap().dims(),
            "{}",
            p.name
        );
    }
}

#[test]
fn more_relations_never_increase_dimensions() {
    let cfg = DimsConfig::default();
    let spaces: Vec<_> = PRESETS
        .iter()
        .map(|p| p.relation_space().unwrap())
        .chain(
            PRESETS
                .iter()
                .map(|p| koszul_dual(&p.relation_space().unwrap())),
        )
        .collect();
    let tables: Vec<Vec<usize>> = spaces
        .iter()
        .map(|r| dims(r, 4, &cfg).unwrap().dims())
        .collect();
    let mut nested = 0;
    for (i, small) in spaces.iter().enumerate() {
        for (j, big) in spaces.iter().enumerate() {
            if i != j && small.rows().iter().all(|v| big.contains(v)) {
                nested += 1;
                assert!(
                    tables[j].iter().zip(&tables[i]).all(|(b, s)| b <= s),
                    "{} within {}",
                    small.name(),
                    big.name()
                );
            }
        }
    }
    assert!(nested > 10);
}
