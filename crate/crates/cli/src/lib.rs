//! Library surface of the batch CLI, so commands run in-process from
//! tests and other tools.

pub mod commands;
pub mod report;

pub use commands::{
    cmd_alt_scan, cmd_rho, cmd_spiga, cmd_sporadic, cmd_table_psl2, cmd_verify_gamma,
    cmd_witnesses, compute_table1_records, default_sporadic_rows, Table1Record, DESK_Q, GAMMA_Q,
    TARGETED_Q,
};
pub use report::{Report, Verdict};

/// Desk instances of the permutation-equivalent twisted pairs:
/// (q, searched subgroup kind).
pub fn equal_case_instances() -> Vec<(u64, &'static str)> {
    vec![
        (7, "S4"),
        (17, "S4"),
        (23, "S4"),
        (31, "S4"),
        (41, "S4"),
        (47, "S4"),
        (11, "A5"),
        (19, "A5"),
        (29, "A5"),
        (31, "A5"),
        (41, "A5"),
        (59, "A5"),
        (61, "A5"),
        (49, "A5"),
    ]
}

/// Default fixture location for the frozen classification records.
pub fn default_table1_fixture() -> std::path::PathBuf {
    if let Some(d) = std::env::var_os("FIXERLAB_DATA") {
        let cand = std::path::PathBuf::from(&d).join("table1.json");
        if cand.exists() {
            return cand;
        }
    }
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join("table1.json")
}
