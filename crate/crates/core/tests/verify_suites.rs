use qe7::verify::{run_verify, Suite};

fn assert_suite(s: Suite) {
    let r = run_verify(s);
    let failures: Vec<String> = r
        .failures()
        .map(|c| format!("{}: got {} expected {}", c.id, c.actual, c.expected))
        .collect();
    assert!(r.passed(), "{s}: {failures:#?}");
    assert!(!r.checks.is_empty());
}

#[test]
fn normalizer_suite() {
    assert_suite(Suite::Normalizer);
}

#[test]
fn tensors_suite() {
    assert_suite(Suite::Tensors);
}

#[test]
fn orders_suite() {
    assert_suite(Suite::Orders);
}
