use radsym::systems::{identity_ids, verify_identity};

#[test]
fn every_asserted_identity_has_zero_residual() {
    let mut failed = Vec::new();
    for info in identity_ids() {
        let r = verify_identity(info.id).unwrap_or_else(|e| panic!("{}: {e}", info.id));
        println!("{:<28} asserted={} pass={}", r.id, r.asserted, r.pass);
        if r.asserted && !r.pass {
            failed.push(format!("{}: {}", r.id, r.residual_operator()));
        }
    }
    assert!(failed.is_empty(), "failing identities:\n{}", failed.join("\n"));
}
