use intdiff::expr::{parse, parse_poly};
use intdiff::random::Sampler;
use proptest::prelude::*;

// Random surface expressions over the grammar, at the given rank.
fn expr_text(rank: usize) -> impl Strategy<Value = String> {
    let idx = move |i: usize| {
        if rank == 1 {
            String::new()
        } else {
            (i % rank + 1).to_string()
        }
    };
    let leaf = (0usize..7, 0usize..4, 0u64..4, 0u64..4, -5i64..6, 1i64..4).prop_map(
        move |(kind, f, s, t, p, q)| match kind {
            0 => format!("x{}", idx(f)),
            1 => format!("d{}", idx(f)),
            2 => format!("I{}", idx(f)),
            3 => format!("H{}", idx(f)),
            4 if rank == 1 => format!("e({s},{t})"),
            4 => format!("e({s},{t})_{}", idx(f)),
            5 => format!("{}/{q}", p.unsigned_abs()),
            _ => format!("({p})"),
        },
    );
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}*{b}")),
            (inner.clone(), 0u32..3).prop_map(|(a, k)| format!("({a})^{k}")),
            inner.prop_map(|a| format!("(-({a}))")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank1_print_parse_roundtrip(text in expr_text(1)) {
        let a = parse(&text, 1).unwrap();
        prop_assert_eq!(parse(&a.to_string(), 1).unwrap(), a);
    }

    #[test]
    fn rank2_print_parse_roundtrip(text in expr_text(2)) {
        let a = parse(&text, 2).unwrap();
        prop_assert_eq!(parse(&a.to_string(), 2).unwrap(), a);
    }

    #[test]
    fn sampled_elements_roundtrip(seed in any::<u64>(), rank in 1usize..=2) {
        let mut rng = Sampler::new(seed);
        let a = rng.element_n(rank);
        prop_assert_eq!(parse(&a.to_string(), rank).unwrap(), a.clone());
        let p = rng.poly_n(rank);
        prop_assert_eq!(parse_poly(&p.to_string(), rank).unwrap(), p);
    }
}

#[test]
fn documented_examples() {
    assert_eq!(parse("d*I", 1).unwrap().to_string(), "1");
    assert_eq!(parse("I*d", 1).unwrap().to_string(), "1 - e(0,0)");
    assert_eq!(
        parse("I^2*d^2", 1).unwrap().to_string(),
        "1 - e(0,0) - e(1,1)"
    );
    assert_eq!(parse("x", 1).unwrap().to_string(), "I*H");
}

#[test]
fn syntax_errors_carry_positions() {
    for bad in ["x*", "e(1,)", "x2", "(x", "x^-1", "y"] {
        let err = parse(bad, 1).unwrap_err().to_string();
        assert!(
            err.contains("position") || err.contains("factor"),
            "{bad}: {err}"
        );
    }
    assert!(parse("x", 2).is_err());
    assert!(parse("x3", 2).is_err());
}
