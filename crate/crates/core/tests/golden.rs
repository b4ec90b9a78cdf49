//! Verification reports pinned as JSON. Set UPDATE_GOLDEN=1 to rewrite.

use std::path::PathBuf;

use asreg::catalog::{self, TableKind, TypeId, VerificationReport};
use asreg::FieldSpec;
use sha2::{Digest, Sha256};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn key(kind: TableKind, r: &VerificationReport) -> String {
    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let text = format!("{kind:?}|{}|{}|{}", r.row, params.join(","), r.field);
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn check(kind: TableKind, field: FieldSpec) {
    let sweep = catalog::sweep(kind, &TypeId::ALL, 2024, 1, field).unwrap();
    assert!(sweep.errors.is_empty(), "{:?}", sweep.errors);
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let dir = golden_dir();
    std::fs::create_dir_all(&dir).unwrap();
    for r in &sweep.reports {
        let path = dir.join(format!("{}-{}.json", r.row.replace('\'', "p"), key(kind, r)));
        let json = serde_json::to_string_pretty(r).unwrap() + "\n";
        if update {
            std::fs::write(&path, &json).unwrap();
        } else {
            let want = std::fs::read_to_string(&path)
                .unwrap_or_else(|_| panic!("missing {}; rerun with UPDATE_GOLDEN=1", path.display()));
            assert_eq!(json, want, "{}", path.display());
        }
    }
}

#[test]
fn table1_over_q() {
    check(TableKind::Table1, FieldSpec::Rationals);
}

#[test]
fn table2_over_q() {
    check(TableKind::Table2, FieldSpec::Rationals);
}

#[test]
fn table3_over_fp() {
    check(TableKind::Table3, FieldSpec::PrimeField(1000003));
}
