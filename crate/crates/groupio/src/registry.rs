//! Named-group registry: shipped sporadic fixtures (loaded from the
//! data directory and closure-verified against their declared orders)
//! plus built-in constructions for the classical families.

use crate::format::{parse_group_file, FormatError};
use permcore::{Perm, PermGroup};
use std::path::PathBuf;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum RegistryError {
    #[error("unknown group name {0:?}")]
    Unknown(String),
    #[error("fixture file {0:?} not found (set FIXERLAB_DATA or run gen-sporadic)")]
    MissingFile(PathBuf),
    #[error("parse error in {path:?}: {source}")]
    Parse {
        path: PathBuf,
        source: FormatError,
    },
    #[error("{path:?}: declared order {declared}, closure found {actual}")]
    OrderMismatch {
        path: PathBuf,
        declared: u64,
        actual: u64,
    },
    #[error("group too large: {0}")]
    Group(#[from] permcore::GroupError),
}

/// Directory holding the shipped .grp fixtures: FIXERLAB_DATA when
/// set, the crate's data/ directory otherwise.
pub fn data_dir() -> PathBuf {
    match std::env::var_os("FIXERLAB_DATA") {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"),
    }
}

/// Load a .grp file and enumerate it, enforcing the declared order.
pub fn load_group_file(file: &str, bound: u64) -> Result<PermGroup, RegistryError> {
    let path = data_dir().join(file);
    let text = std::fs::read_to_string(&path)
        .map_err(|_| RegistryError::MissingFile(path.clone()))?;
    let parsed = parse_group_file(&text).map_err(|source| RegistryError::Parse {
        path: path.clone(),
        source,
    })?;
    let group = PermGroup::from_generators(parsed.degree, parsed.generators, bound)?;
    if let Some(declared) = parsed.expected_order {
        if group.order() != declared {
            return Err(RegistryError::OrderMismatch {
                path,
                declared,
                actual: group.order(),
            });
        }
    }
    Ok(group)
}

/// Load a .grp file as raw verified generators (the subgroup fixtures:
/// the declared order is checked by closing inside the parent later).
pub fn load_generators(file: &str) -> Result<(Vec<Perm>, Option<u64>), RegistryError> {
    let path = data_dir().join(file);
    let text = std::fs::read_to_string(&path)
        .map_err(|_| RegistryError::MissingFile(path.clone()))?;
    let parsed = parse_group_file(&text).map_err(|source| RegistryError::Parse {
        path: path.clone(),
        source,
    })?;
    Ok((parsed.generators, parsed.expected_order))
}

/// Look up a group by name: the shipped sporadic fixtures and the
/// classical built-ins.
pub fn registry_lookup(name: &str) -> Result<PermGroup, RegistryError> {
    match name {
        "M11" => load_group_file("m11.grp", 10_000),
        "M12" => load_group_file("m12.grp", 100_000),
        "M22" => load_group_file("m22.grp", 500_000),
        "M23" => load_group_file("m23.grp", 11_000_000),
        "J1" => load_group_file("j1.grp", 200_000),
        _ => {
            if let Some(n) = name.strip_prefix('A') {
                if let Ok(n) = n.parse::<usize>() {
                    if (3..=12).contains(&n) {
                        return Ok(alternating(n));
                    }
                }
            }
            if let Some(n) = name.strip_prefix('S') {
                if let Ok(n) = n.parse::<usize>() {
                    if (2..=12).contains(&n) {
                        return Ok(symmetric(n));
                    }
                }
            }
            Err(RegistryError::Unknown(name.to_string()))
        }
    }
}

pub fn symmetric(n: usize) -> PermGroup {
    PermGroup::from_generators(
        n,
        vec![
            Perm::from_cycles(n, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(n, &[(0..n as u16).collect()]).unwrap(),
        ],
        1_000_000_000,
    )
    .unwrap()
}

pub fn alternating(n: usize) -> PermGroup {
    let mut gens = vec![Perm::from_cycles(n, &[vec![0, 1, 2]]).unwrap()];
    if n > 3 {
        let long: Vec<u16> = if n % 2 == 1 {
            (0..n as u16).collect()
        } else {
            (1..n as u16).collect()
        };
        gens.push(Perm::from_cycles(n, &[long]).unwrap());
    }
    PermGroup::from_generators(n, gens, 1_000_000_000).unwrap()
}
