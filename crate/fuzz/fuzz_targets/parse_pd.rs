#![no_main]

use altknot::diagram::PdCode;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(diagram) = PdCode::parse(text) else { return };

    // Accepted diagrams survive a JSON round trip unchanged.
    let json = serde_json::to_string(&diagram).expect("diagrams serialize");
    let reparsed: PdCode = serde_json::from_str(&json).expect("serialized form parses");
    assert_eq!(reparsed, diagram);

    let _ = diagram.writhe();
    let _ = diagram.has_nugatory();
    let flipped = diagram.flip_all();
    assert_eq!(flipped.crossing_count(), diagram.crossing_count());
    assert_eq!(flipped.writhe(), -diagram.writhe());

    // On any diagram the walk analysis either fails cleanly or satisfies:
    // alternating exactly when the distance to an alternating assignment
    // is zero.
    if let (Ok(alternating), Ok(distance)) =
        (diagram.is_alternating(), diagram.alternating_distance())
    {
        assert_eq!(alternating, distance == 0);
    }
});
