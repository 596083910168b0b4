//! JSON group files: `{ "name": ..., "degree": ..., "generators": [...] }`
//! with generators in 1-based cycle notation.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        Self {
            name: g.name().to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(Permutation::to_cycle_string).collect(),
        }
    }

    pub fn to_group(&self, cap: usize) -> Result<FiniteGroup> {
        let gens = self
            .generators
            .iter()
            .map(|s| Permutation::parse(s, self.degree))
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::generate(self.name.clone(), self.degree, gens, cap)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text = self.to_json();
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GroupError;

    #[test]
    fn parses_file_format() {
        let f = GroupFile::from_json(r#"{"name":"S3","degree":3,"generators":["(1 2)","(1 2 3)"]}"#).unwrap();
        assert_eq!(f.to_group(100).unwrap().order(), 6);
    }

    #[test]
    fn rejects_bad_generators() {
        let f = GroupFile::from_json(r#"{"name":"x","degree":3,"generators":["(1 4)"]}"#).unwrap();
        assert!(matches!(f.to_group(100), Err(GroupError::PointOutOfRange { .. })));
        assert!(GroupFile::from_json(r#"{"name":"x"}"#).is_err());
    }
}
