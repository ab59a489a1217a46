use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::invariants::GroupSpec;

/// One group specification as read from a JSON file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub field: FieldSpec,
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i_max: Option<usize>,
}

impl InputSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed spec: {e}")))?;
        spec.field.validate()?;
        if spec.i_max == Some(0) {
            return Err(Error::Input("i_max must be at least 1".into()));
        }
        Ok(spec)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_group_kinds() {
        let a = InputSpec::from_json(r#"{"field":{"type":"rational"},"group":{"type":"permutation","n":3,"generators":[[1,2,0]]},"i_max":2}"#)
            .unwrap();
        assert_eq!(a.i_max, Some(2));
        let m = InputSpec::from_json(
            r#"{"field":{"type":"rational"},"group":{"type":"matrices","n":2,"entries":[[[0,1],["-1",0]]]}}"#,
        )
        .unwrap();
        assert_eq!(m.group.dimension(), 2);
        let c = InputSpec::from_json(r#"{"field":{"type":"prime","p":7},"group":{"type":"cyclic_scalar","m":3,"n":2}}"#).unwrap();
        assert_eq!(c.field, FieldSpec::Prime { p: 7 });
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "not json",
            r#"{"field":{"type":"rational"}}"#,
            r#"{"field":{"type":"prime","p":8},"group":{"type":"cyclic_scalar","m":2,"n":2}}"#,
            r#"{"field":{"type":"rational"},"group":{"type":"cyclic_scalar","m":2,"n":2},"extra":1}"#,
            r#"{"field":{"type":"rational"},"group":{"type":"cyclic_scalar","m":2,"n":2},"i_max":0}"#,
        ] {
            assert!(matches!(InputSpec::from_json(bad), Err(Error::Input(_))), "{bad}");
        }
    }
}
