use super::*;
use proptest::prelude::*;

fn p(name: &str) -> StateFormula {
    StateFormula::atom(name)
}

#[test]
fn parses_adjacent_and_spaced_ctl_operators() {
    let expected = StateFormula::forall(PathFormula::globally(PathFormula::state(
        StateFormula::exists(PathFormula::eventually(PathFormula::state(p("p")))),
    )));
    assert_eq!(parse_formula("AG EF p").unwrap(), expected);
    assert_eq!(parse_formula("AGEF p").unwrap(), expected);
    assert_eq!(parse_formula("A G E F p").unwrap(), expected);
}

#[test]
fn parses_constants_and_bracketed_until() {
    assert_eq!(parse_formula("true").unwrap(), StateFormula::True);
    let expected = StateFormula::exists(PathFormula::until(
        PathFormula::state(p("p")),
        PathFormula::state(StateFormula::and(p("q"), StateFormula::not(p("r")))),
    ));
    assert_eq!(parse_formula("E[p U (q & ~r)]").unwrap(), expected);
}

#[test]
fn embeds_maximal_state_subformulas() {
    // Boolean structure over pure temporal operands stays path-level.
    let f = parse_formula("A(G p & F q)").unwrap();
    let StateFormula::Quant(Quantifier::ForAll, body) = &f else {
        panic!("expected a quantified formula");
    };
    assert!(matches!(**body, PathFormula::And(..)));

    // Boolean structure over plain propositions becomes one embedding.
    let g = parse_formula("A(p & q)").unwrap();
    let StateFormula::Quant(Quantifier::ForAll, body) = &g else {
        panic!("expected a quantified formula");
    };
    assert!(matches!(**body, PathFormula::State(_)));
}

#[test]
fn parses_quoted_atoms() {
    let f = parse_formula("EF \"s_2^01\"").unwrap();
    assert_eq!(
        f,
        StateFormula::exists(PathFormula::eventually(PathFormula::state(p("s_2^01"))))
    );
    let roundtrip = parse_formula(&f.to_string()).unwrap();
    assert_eq!(roundtrip, f);
}

#[test]
fn atoms_colliding_with_operators_need_quotes() {
    // Unquoted `AG` lexes as two operators and fails to parse as an atom.
    assert!(parse_formula("AG").is_err());
    let f = parse_formula("\"AG\"").unwrap();
    assert_eq!(f, p("AG"));
    assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
}

#[test]
fn reports_positions_in_errors() {
    match parse_formula("EF (p & ~)") {
        Err(ParseError::Unexpected { line, col, .. }) => {
            assert_eq!(line, 1);
            assert_eq!(col, 10);
        }
        other => panic!("expected a syntax error, got {other:?}"),
    }
    assert!(matches!(
        parse_formula("E[p U q"),
        Err(ParseError::Unbalanced { expected: ']', .. })
    ));
    assert!(matches!(
        parse_formula("X p"),
        Err(ParseError::PathOperatorOutsideQuantifier { .. })
    ));
    assert!(matches!(
        parse_formula("p q"),
        Err(ParseError::TrailingInput { .. })
    ));
}

#[test]
fn syntactic_class_follows_the_fragment_definitions() {
    let cases = [
        ("p & ~q", Family::Propositional),
        ("AG EF p", Family::Ctl),
        ("E[p U q] & AX p", Family::Ctl),
        ("EFi p", Family::Ectl),
        ("A(G p & F q)", Family::CtlPlus),
        ("A(X p | X X p)", Family::CtlPlus),
        ("E(Gi p & F q)", Family::EctlPlus),
        ("A G F p", Family::CtlStar),
        ("E[F p U q]", Family::CtlStar),
    ];
    for (text, family) in cases {
        let f = parse_formula(text).unwrap();
        assert_eq!(syntactic_class(&f), family, "for `{text}`");
    }
}

#[test]
fn operator_set_pairs_ctl_operators() {
    let f = parse_formula("AG EF p").unwrap();
    let ops: Vec<String> = operator_set(&f).iter().map(|t| t.to_string()).collect();
    assert_eq!(ops, ["AG", "EF"]);

    assert!(operator_set(&parse_formula("p & ~q").unwrap()).is_empty());

    let g = parse_formula("A(G p & F q)").unwrap();
    let ops: Vec<String> = operator_set(&g).iter().map(|t| t.to_string()).collect();
    assert_eq!(ops, ["A", "F", "G"]);
}

#[test]
fn negation_discipline_is_least() {
    let cases = [
        ("EF p", Discipline::Monotone),
        ("EF ~p", Discipline::AtomicNegation),
        ("~(p & q) | EF p", Discipline::Positive),
        ("~EF p", Discipline::Full),
        ("A(~X p)", Discipline::Full),
        ("E[~p U ~q]", Discipline::AtomicNegation),
    ];
    for (text, d) in cases {
        let f = parse_formula(text).unwrap();
        assert_eq!(negation_discipline(&f), d, "for `{text}`");
    }
}

#[test]
fn nnf_dualizes_operators() {
    let cases = [
        ("~EX p", "AX ~p"),
        ("~E[p U q]", "A[~p R ~q]"),
        ("~(p & EF q)", "~p | AG ~q"),
        ("~AFi p", "EGi ~p"),
        ("~A(G p | F q)", "E(F ~p & G ~q)"),
        ("~true", "false"),
    ];
    for (input, expected) in cases {
        let f = parse_formula(input).unwrap();
        let want = parse_formula(expected).unwrap();
        assert_eq!(to_nnf(&f), want, "for `{input}`");
    }
}

#[test]
fn op_tokens_parse_and_print() {
    for text in ["EX", "AGi", "A", "Fi", "U", "ER"] {
        let tok: OpToken = text.parse().unwrap();
        assert_eq!(tok.to_string(), text);
    }
    assert!("Q".parse::<OpToken>().is_err());
    assert!("EXX".parse::<OpToken>().is_err());
}

// Strategies generating exactly the ASTs the parser can produce: embedded
// state subformulas are maximal.

fn atom_strategy() -> BoxedStrategy<StateFormula> {
    prop_oneof![
        4 => prop_oneof![Just("p"), Just("q"), Just("r"), Just("d_1"), Just("s^2")]
            .prop_map(StateFormula::atom),
        1 => Just(StateFormula::True),
        1 => Just(StateFormula::False),
    ]
    .boxed()
}

fn state_strategy() -> BoxedStrategy<StateFormula> {
    atom_strategy()
        .prop_recursive(4, 48, 3, |inner| {
            let quant = (
                prop_oneof![Just(Quantifier::ForAll), Just(Quantifier::Exists)],
                path_strategy(inner.clone()),
            )
                .prop_map(|(q, body)| StateFormula::quant(q, body));
            prop_oneof![
                2 => inner.clone().prop_map(StateFormula::not),
                2 => (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| StateFormula::and(a, b)),
                2 => (inner, quant).prop_map(|(a, q)| StateFormula::or(a, q)),
            ]
        })
        .boxed()
}

fn path_strategy(state: BoxedStrategy<StateFormula>) -> BoxedStrategy<PathFormula> {
    let leaf = state.prop_map(PathFormula::state).boxed();
    leaf.prop_recursive(3, 24, 2, move |inner| {
        // Binary path connectives must keep at least one non-state operand,
        // otherwise the parser would fuse them into a single embedding.
        let temporal = prop_oneof![
            inner.clone().prop_map(PathFormula::next),
            inner.clone().prop_map(PathFormula::eventually),
            inner.clone().prop_map(PathFormula::globally),
            inner.clone().prop_map(PathFormula::inf_often),
            inner.clone().prop_map(PathFormula::almost_always),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PathFormula::until(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PathFormula::release(a, b)),
        ]
        .boxed();
        prop_oneof![
            4 => temporal.clone(),
            1 => (temporal.clone(), inner.clone()).prop_map(|(t, b)| PathFormula::and(t, b)),
            1 => (inner, temporal).prop_map(|(a, t)| PathFormula::or(a, t)),
        ]
    })
    .boxed()
}

proptest! {
    #[test]
    fn roundtrip_print_parse(f in state_strategy()) {
        let printed = f.to_string();
        let reparsed = parse_formula(&printed)
            .unwrap_or_else(|e| panic!("failed to reparse `{printed}`: {e}"));
        prop_assert_eq!(reparsed, f);
    }

    #[test]
    fn nnf_discipline_is_atomic_at_most(f in state_strategy()) {
        let nnf = to_nnf(&f);
        prop_assert!(negation_discipline(&nnf) <= Discipline::AtomicNegation);
    }

    #[test]
    fn nnf_operator_set_is_dual_closed(f in state_strategy()) {
        // Every operator of the NNF is an operator of `f` or its dual.
        let before = operator_set(&f);
        let closed: std::collections::BTreeSet<OpToken> = before
            .iter()
            .flat_map(|t| {
                let dual = match *t {
                    OpToken::Ctl(op) => OpToken::Ctl(op.dual()),
                    OpToken::Quant(q) => OpToken::Quant(q.dual()),
                    OpToken::Pure(op) => OpToken::Pure(op.dual()),
                };
                [*t, dual]
            })
            .collect();
        // NNF can change the family (a CTL formula stays CTL), so compare on
        // the same token kind.
        let f_nnf = to_nnf(&f);
        let after = operator_set(&f_nnf);
        if syntactic_class(&f) == syntactic_class(&f_nnf) {
            for tok in after {
                prop_assert!(closed.contains(&tok), "unexpected operator {tok}");
            }
        }
    }

    #[test]
    fn nnf_size_is_linear(f in state_strategy()) {
        let atoms = f.props().len().max(1);
        prop_assert!(to_nnf(&f).size() <= 2 * f.size() + atoms * 2);
    }
}
