use qe7::e7::weyl_report;

#[test]
fn weyl_group_covers_sp6_with_kernel_plus_minus_identity() {
    let report = weyl_report();
    assert_eq!(report.order, 2_903_040);
    assert!(report.contains_minus_identity);
    assert_eq!(report.kernel.len(), 2);
    let negated: Vec<String> = report.kernel[1].iter().map(|r| r.to_string()).collect();
    assert_eq!(
        negated,
        ["-R12", "-R1238", "-R23", "-R34", "-R45", "-R56", "-R67"]
    );
    assert_eq!(report.image_order, 1_451_520);
    assert!(report.image_symplectic);
}
