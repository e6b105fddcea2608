//! Named definitions saved by `define`, under `$HOPF_BRAUER_CACHE` or
//! `./.hopf-brauer-cache`.

use std::path::{Path, PathBuf};

use hopf_brauer::io::{parse_definition, to_json, NamedDefinition};

use crate::Failure;

fn dir() -> PathBuf {
    std::env::var_os("HOPF_BRAUER_CACHE")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".hopf-brauer-cache"))
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || "-_.".contains(c)) && !name.starts_with('.')
}

pub fn store(name: &str, def: &NamedDefinition) -> Result<PathBuf, Failure> {
    if !valid_name(name) {
        return Err(Failure::Input(format!("invalid cache name {name:?}")));
    }
    let dir = dir();
    std::fs::create_dir_all(&dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let path = dir.join(format!("{name}.json"));
    let mut stored = def.clone();
    stored.name = Some(name.to_string());
    let body = serde_json::to_string_pretty(&to_json(&stored)).expect("values serialize");
    std::fs::write(&path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// Reads `key` as a file path if it exists, else as a cached name.
pub fn load(key: &str) -> Result<NamedDefinition, Failure> {
    let direct = Path::new(key);
    let path = if direct.is_file() {
        direct.to_path_buf()
    } else if valid_name(key) {
        dir().join(format!("{key}.json"))
    } else {
        return Err(Failure::Input(format!("{key}: no such file")));
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|_| Failure::Input(format!("{key}: neither a file nor a cached definition")))?;
    parse_definition(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}
