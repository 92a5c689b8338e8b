//! Built-in relation sets.

use crate::idlang::{RelationSpace, RelationsFile};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub relations: &'static [&'static str],
}

/// Right-symmetric: `(a,b,c) = (a,c,b)` with the associator written out.
const RIGHT_SYMMETRIC: &str = "a*(b*c) - (a*b)*c - a*(c*b) + (a*c)*b = 0";
/// Left-symmetric: `(a,b,c) = (b,a,c)`.
const LEFT_SYMMETRIC: &str = "a*(b*c) - (a*b)*c - b*(a*c) + (b*a)*c = 0";
const LEFT_COMMUTATIVE: &str = "a*(b*c) - b*(a*c) = 0";
const RIGHT_COMMUTATIVE: &str = "(a*b)*c - (a*c)*b = 0";
const ASSOCIATIVE: &str = "(a*b)*c - a*(b*c) = 0";

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "novikov-right",
        description: "right-symmetric and left-commutative",
        relations: &[RIGHT_SYMMETRIC, LEFT_COMMUTATIVE],
    },
    Preset {
        name: "novikov-left",
        description: "left-symmetric and right-commutative",
        relations: &[LEFT_SYMMETRIC, RIGHT_COMMUTATIVE],
    },
    Preset {
        name: "assoc",
        description: "associative",
        relations: &[ASSOCIATIVE],
    },
    Preset {
        name: "prelie-right",
        description: "right-symmetric (right pre-Lie)",
        relations: &[RIGHT_SYMMETRIC],
    },
    Preset {
        name: "perm",
        description: "associative with a*(b*c) = a*(c*b)",
        relations: &[ASSOCIATIVE, "a*(b*c) - a*(c*b) = 0"],
    },
    Preset {
        name: "leibniz",
        description: "right Leibniz: (a*b)*c = (a*c)*b + a*(b*c)",
        relations: &["(a*b)*c - (a*c)*b - a*(b*c) = 0"],
    },
    Preset {
        name: "zinbiel",
        description: "Zinbiel: (a*b)*c = a*(b*c) + a*(c*b)",
        relations: &["(a*b)*c - a*(b*c) - a*(c*b) = 0"],
    },
    Preset {
        name: "magma",
        description: "free magma, no relations",
        relations: &[],
    },
];

pub fn preset(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}

pub fn names() -> Vec<&'static str> {
    PRESETS.iter().map(|p| p.name).collect()
}

/// Relation space of a named preset.
pub fn relation_space(name: &str) -> Result<RelationSpace> {
    preset(name)
        .ok_or_else(|| {
            Error::Argument(format!(
                "unknown operad `{name}`; presets are {}",
                names().join(", ")
            ))
        })?
        .relation_space()
}

impl Preset {
    pub fn relation_space(&self) -> Result<RelationSpace> {
        RelationSpace::from_identities(self.name, self.relations)
    }

    pub fn relations_file(&self) -> RelationsFile {
        RelationsFile {
            name: self.name.to_string(),
            relations: self.relations.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_builds() {
        for p in PRESETS {
            let r = p.relation_space().unwrap();
            assert_eq!(r.name(), p.name);
        }
    }

    #[test]
    fn relation_space_dimensions() {
        let dims: Vec<(&str, usize)> = PRESETS
            .iter()
            .map(|p| (p.name, p.relation_space().unwrap().dim()))
            .collect();
        assert_eq!(
            dims,
            [
                ("novikov-right", 6),
                ("novikov-left", 6),
                ("assoc", 6),
                ("prelie-right", 3),
                ("perm", 9),
                ("leibniz", 6),
                ("zinbiel", 6),
                ("magma", 0),
            ]
        );
    }

    #[test]
    fn unknown_preset() {
        assert!(matches!(relation_space("lie"), Err(Error::Argument(_))));
    }
}
