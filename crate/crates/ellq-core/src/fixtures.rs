//! Data files compiled into the library, optionally overridden from a
//! directory of JSON files with the same names.

use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::error::{Error, Result};

const EMBEDDED: &[(&str, &str)] = &[
    ("families", include_str!("../fixtures/families.json")),
    ("ft_z2", include_str!("../fixtures/ft_z2.json")),
    ("sp4_formal", include_str!("../fixtures/sp4_formal.json")),
    ("g2_packets", include_str!("../fixtures/g2_packets.json")),
    ("g2_formal_degrees", include_str!("../fixtures/g2_formal_degrees.json")),
    ("sp4_packets", include_str!("../fixtures/sp4_packets.json")),
    ("g2_affine_elliptic", include_str!("../fixtures/g2_affine_elliptic.json")),
    ("cyc_values", include_str!("../fixtures/cyc_values.json")),
    ("g2_npolys", include_str!("../fixtures/g2_npolys.json")),
    ("unipotent_data", include_str!("../fixtures/unipotent_data.json")),
];

#[derive(Clone, Debug, Default)]
pub struct Fixtures {
    dir: Option<PathBuf>,
}

impl Fixtures {
    pub fn embedded() -> Fixtures {
        Fixtures { dir: None }
    }

    /// Files `<dir>/<id>.json` take precedence over the embedded copies.
    pub fn with_dir(dir: impl AsRef<Path>) -> Fixtures {
        Fixtures { dir: Some(dir.as_ref().to_path_buf()) }
    }

    pub fn ids() -> Vec<&'static str> {
        EMBEDDED.iter().map(|(k, _)| *k).collect()
    }

    pub fn load(&self, id: &str) -> Result<Value> {
        if let Some(dir) = &self.dir {
            let p = dir.join(format!("{id}.json"));
            if p.exists() {
                let text = std::fs::read_to_string(&p).map_err(|e| Error::Missing(format!("{}: {e}", p.display())))?;
                return parse(id, &text);
            }
        }
        let text = EMBEDDED
            .iter()
            .find(|(k, _)| *k == id)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::Missing(format!("no fixture named {id}")))?;
        parse(id, text)
    }

    /// The provenance tag every fixture carries at top level.
    pub fn provenance(&self, id: &str) -> Result<String> {
        let v = self.load(id)?;
        v.get("provenance")
            .and_then(Value::as_str)
            .map(str::to_string)
            .ok_or_else(|| Error::Invalid(format!("fixture {id} has no provenance tag")))
    }
}

fn parse(id: &str, text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture {id}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_is_tagged() {
        let f = Fixtures::embedded();
        for id in Fixtures::ids() {
            let p = f.provenance(id).unwrap();
            assert!(["PAPER", "STANDARD", "DERIVED"].iter().any(|t| p.starts_with(t)), "{id}: {p}");
        }
    }
}
