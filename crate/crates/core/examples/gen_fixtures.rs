//! Regenerates the JSON files under `fixtures/` from their constructions.

use std::path::PathBuf;

use pierce_core::configs::{build_fixture, fixture_names};

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in fixture_names() {
        let doc = build_fixture(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, doc.to_json() + "\n").expect("write fixture");
        println!("wrote {}", path.display());
    }
}
