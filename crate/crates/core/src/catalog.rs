//! The bundled ring specs and level data.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::level::MuConvention;
use crate::rational::Rational;
use crate::spec_file::{load_ring_spec, load_spec, LoadedRing, RingSpecFile};

/// Bundled specs in load order: bases before the rings built over them.
pub const BUNDLED_SPECS: &[(&str, &str)] = &[
    ("a1_partial", include_str!("../data/a1_partial.json")),
    ("a1_tilde", include_str!("../data/a1_tilde.json")),
    ("a2_partial", include_str!("../data/a2_partial.json")),
    ("a2_tilde", include_str!("../data/a2_tilde.json")),
    ("a2_tilde_2gen", include_str!("../data/a2_tilde_2gen.json")),
    ("a3_partial", include_str!("../data/a3_partial.json")),
    ("a3_taut", include_str!("../data/a3_taut.json")),
    ("a3_taut_lambda1", include_str!("../data/a3_taut_lambda1.json")),
    ("a3_tilde", include_str!("../data/a3_tilde.json")),
    ("x2_tilde", include_str!("../data/x2_tilde.json")),
];

pub const BUNDLED_LEVEL: &str = include_str!("../data/level.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelData {
    pub gamma: Vec<GammaEntry>,
    pub mu: Vec<MuEntry>,
    pub identity: IdentityLevels,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaEntry {
    pub genus: u32,
    pub level: u64,
    pub value: Rational,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuEntry {
    pub genus: u32,
    pub level: u64,
    pub convention: MuConvention,
    pub value: Rational,
    pub citation: String,
    /// reported, never asserted
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityLevels {
    pub levels: Vec<u64>,
    pub citation: String,
}

/// Loaded rings by name plus the level data.
#[derive(Debug)]
pub struct Catalog {
    rings: BTreeMap<String, Arc<LoadedRing>>,
    level: LevelData,
}

impl Catalog {
    /// Load every bundled spec.
    pub fn bundled() -> Result<Self> {
        let mut catalog =
            Catalog { rings: BTreeMap::new(), level: serde_json::from_str(BUNDLED_LEVEL).expect("bundled level data parses") };
        for (name, text) in BUNDLED_SPECS {
            let spec = RingSpecFile::from_json(text)?;
            let loaded = load_spec(spec, Some(format!("{name}.json")), &|base| catalog.get(base))?;
            catalog.rings.insert(loaded.name().to_string(), Arc::new(loaded));
        }
        Ok(catalog)
    }

    pub fn get(&self, name: &str) -> Result<Arc<LoadedRing>> {
        self.rings.get(name).cloned().ok_or_else(|| Error::UnknownRing(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.rings.keys().map(String::as_str)
    }

    pub fn rings(&self) -> impl Iterator<Item = &Arc<LoadedRing>> {
        self.rings.values()
    }

    pub fn level(&self) -> &LevelData {
        &self.level
    }

    /// Load a spec file from disk; relative specs resolve their base here.
    pub fn load_file(&self, path: &Path) -> Result<LoadedRing> {
        load_ring_spec(path, &|base| self.get(base))
    }

    /// A copy of this catalog with `ring` added, replacing any ring of the
    /// same name.
    pub fn with_ring(&self, ring: LoadedRing) -> Catalog {
        let mut rings = self.rings.clone();
        rings.insert(ring.name().to_string(), Arc::new(ring));
        Catalog { rings, level: self.level.clone() }
    }
}

/// The shared bundled catalog, loaded on first use.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::bundled().unwrap_or_else(|e| panic!("bundled catalog is invalid: {e}")))
}

/// Look up a bundled ring by name.
pub fn ring(name: &str) -> Result<Arc<LoadedRing>> {
    catalog().get(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bundled_specs_load() {
        let c = catalog();
        let names: Vec<&str> = c.names().collect();
        assert_eq!(names.len(), BUNDLED_SPECS.len());
        assert!(ring("x2_tilde").unwrap().relative.is_some());
        assert!(matches!(ring("a4"), Err(Error::UnknownRing(_))));
    }

    #[test]
    fn bundled_hilbert_functions() {
        assert_eq!(ring("a3_tilde").unwrap().ring.hilbert_function(6), vec![1, 2, 4, 6, 4, 2, 1]);
        assert_eq!(ring("x2_tilde").unwrap().ring.hilbert_function(5), vec![1, 3, 5, 5, 3, 1]);
    }
}
