#![no_main]

use altknot::braid::{normal_form, BraidWord};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(word) = BraidWord::parse(text, None) else { return };

    // Accepted words survive a print/reparse round trip unchanged.
    let printed = word
        .letters()
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let reparsed = BraidWord::parse(&printed, Some(word.strands())).expect("round trip parses");
    assert_eq!(reparsed.letters(), word.letters());

    let _ = word.writhe();
    // Derived computations allocate per strand, so bound them; the parser
    // itself accepts any i32 letter.
    if word.strands() <= 64 {
        let _ = word.permutation();
        let _ = word.closure_components();
    }
    if word.strands() <= 8 && word.len() <= 48 {
        let inverse = word.inverse();
        let trivial = word.concat(&inverse).expect("same strand count");
        assert_eq!(normal_form(&trivial), normal_form(&BraidWord::empty(word.strands())));
    }
});
