#![no_main]

use altknot::algebra::LaurentPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(poly) = LaurentPoly::parse(text) else { return };

    // Accepted polynomials survive a print/reparse round trip unchanged.
    let printed = poly.to_string();
    let reparsed = LaurentPoly::parse(&printed).expect("printed form parses");
    assert_eq!(reparsed, poly);

    // Ring sanity on whatever was parsed.
    let _ = poly.eval_at_one();
    let _ = poly.eval_at_minus_one();
    assert_eq!(poly.add(&poly.neg()), LaurentPoly::zero());
});
