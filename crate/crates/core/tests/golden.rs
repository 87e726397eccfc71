//! Byte-level comparisons with the files under `data/golden`.
//!
//! Set `SIPP_BLESS=1` to rewrite the model files after an intended change
//! to the emitters.

use std::path::{Path, PathBuf};

use sipp::instgen::{format_instance, parse_instance, read_instance};
use sipp::models::{emit_model, ModelKind, RcVariant};

const INSTANCES: [&str; 3] = ["n1", "n2", "example1"];

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/golden")
}

fn cases() -> Vec<(String, String, ModelKind, RcVariant)> {
    let mut out = Vec::new();
    for name in INSTANCES {
        for kind in [ModelKind::Basic, ModelKind::Sorted, ModelKind::Rc] {
            out.push((name.into(), format!("{kind}_{name}.lp"), kind, RcVariant::Capped));
        }
    }
    out.push((
        "example1".into(),
        "rc_relaxed_example1.lp".into(),
        ModelKind::Rc,
        RcVariant::Relaxed,
    ));
    out
}

#[test]
fn models_match_golden_files() {
    let bless = std::env::var_os("SIPP_BLESS").is_some();
    for (name, file, kind, variant) in cases() {
        let inst = read_instance(&dir().join(format!("{name}.txt"))).unwrap();
        let text = emit_model(kind, variant, &inst).text;
        let path = dir().join(&file);
        if bless {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap();
        assert!(
            text == expected,
            "{file} differs; rerun with SIPP_BLESS=1 if intended"
        );
    }
}

#[test]
fn instance_files_round_trip() {
    for name in INSTANCES {
        let text = std::fs::read_to_string(dir().join(format!("{name}.txt"))).unwrap();
        let inst = parse_instance(&text).unwrap();
        let again = parse_instance(&format_instance(&inst)).unwrap();
        assert_eq!(inst, again, "{name}");
    }
    let ex = read_instance(&dir().join("example1.txt")).unwrap();
    assert_eq!(ex.lengths(), [20, 15, 13, 13, 11, 8, 5, 3]);
    assert_eq!(ex.strip_width(), 60);
}

#[test]
fn rc_example_has_2n_binaries() {
    let inst = read_instance(&dir().join("example1.txt")).unwrap();
    let doc = emit_model(ModelKind::Rc, RcVariant::Capped, &inst);
    assert_eq!(doc.binary_count, 16);
    assert_eq!(doc.variable_count, 16);
    let basic = emit_model(ModelKind::Basic, RcVariant::Capped, &inst);
    assert_eq!(basic.binary_count, 512);
}
