mod common;

use chow_core::error::ParseErrorKind;
use chow_core::parse::parse;
use chow_core::GeneratorSet;
use common::{build, raw_poly};
use proptest::prelude::*;

fn gens() -> std::sync::Arc<GeneratorSet> {
    GeneratorSet::new([("lambda1", 1), ("lambda2", 2), ("lambda3", 3), ("sigma1", 1), ("sigma2", 2), ("t", 1)]).unwrap()
}

fn token() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("lambda1".to_string()),
        Just("sigma2".to_string()),
        Just("t".to_string()),
        Just("+".to_string()),
        Just("-".to_string()),
        Just("*".to_string()),
        Just("^".to_string()),
        Just("(".to_string()),
        Just(")".to_string()),
        Just(" ".to_string()),
        Just("/".to_string()),
        (0u32..1000).prop_map(|n| n.to_string()),
        "[a-z_]{1,6}",
        "\\PC",
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn render_reparses(raw in raw_poly(4, 6)) {
        let g = gens();
        let p = build(&raw, &g);
        let text = p.to_string();
        prop_assert_eq!(parse(&text, &g).unwrap(), p);
    }

    #[test]
    fn parse_is_total(tokens in prop::collection::vec(token(), 0..16)) {
        let g = gens();
        let text: String = tokens.concat();
        if let Err(e) = parse(&text, &g) {
            prop_assert!(e.position <= text.len(), "{e} for {text:?}");
        }
    }
}

#[test]
fn precedence() {
    let g = gens();
    let lhs = parse("lambda1 + sigma1 * t^2", &g).unwrap();
    let rhs = parse("lambda1 + (sigma1 * (t^2))", &g).unwrap();
    assert_eq!(lhs, rhs);
    assert_ne!(lhs, parse("(lambda1 + sigma1) * t^2", &g).unwrap());
    assert_eq!(parse("-t^2", &g).unwrap(), parse("-(t^2)", &g).unwrap());
}

#[test]
fn errors_are_positioned() {
    let g = gens();
    let e = parse("lambda1 + tau", &g).unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::UnknownIdentifier("tau".into()));
    assert_eq!(e.position, 10);
    assert!(parse("t^(-1)", &g).is_err());
    assert_eq!(parse("λ1", &g).unwrap_err().kind, ParseErrorKind::NonAsciiInput);
    assert!(parse("(1/2)*t", &g).is_ok());
    assert!(parse("t / 2", &g).is_err());
}
