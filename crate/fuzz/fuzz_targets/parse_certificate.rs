#![no_main]

use altknot::construction::{verify_certificate, DeformationCertificate};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(certificate) = serde_json::from_str::<DeformationCertificate>(text) else {
        return;
    };

    // Parsed certificates survive a JSON round trip unchanged.
    let json = serde_json::to_string(&certificate).expect("certificates serialize");
    let reparsed: DeformationCertificate =
        serde_json::from_str(&json).expect("serialized form parses");
    assert_eq!(reparsed, certificate);

    // Verification must report cleanly on arbitrary certificates — never
    // panic.  Bound the size so fuzzing explores structure, not bignum
    // arithmetic on enormous words.
    if certificate.n <= 8
        && certificate.strands <= 8
        && certificate.word.len() <= 64
        && certificate.flip_positions.len() <= 64
        && certificate.target.summands.len() <= 8
        && certificate
            .target
            .summands
            .iter()
            .all(|&(p, q)| p.abs() <= 64 && q.abs() <= 64)
    {
        let checks = verify_certificate(&certificate);
        assert!(!checks.is_empty());
    }
});
