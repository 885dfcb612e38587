//! JSON form of an annotated twig chain.
//!
//! ```json
//! {"level": 1,
//!  "nodes": [{"label": "1", "word": "R"}, {"label": "2", "word": "R"}],
//!  "twigs": [{"label": "left-end", "word": "R", "multiplicity": 1, "emergent_level": null},
//!            {"label": "", "word": "R", "multiplicity": 2, "emergent_level": 1},
//!            {"label": "right-end", "word": "R", "multiplicity": 1, "emergent_level": null}]}
//! ```
//!
//! Chart strings are written as bare digits (`""` for the empty string) and
//! words inline (`"RV2V3"`).

use monster_core::nodal::{Twig, TwigLabel};
use monster_core::strata::{AnnotatedChain, CodeWord};
use monster_core::ChartString;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDocument {
    pub level: usize,
    pub nodes: Vec<NodeEntry>,
    pub twigs: Vec<TwigEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub label: String,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwigEntry {
    /// Digits of an interior twig, or `left-end` / `right-end`.
    pub label: String,
    pub word: String,
    pub multiplicity: u64,
    pub emergent_level: Option<usize>,
}

const LEFT_END: &str = "left-end";
const RIGHT_END: &str = "right-end";

fn twig_label_text(label: &TwigLabel) -> String {
    match label {
        TwigLabel::LeftEnd => LEFT_END.to_string(),
        TwigLabel::RightEnd => RIGHT_END.to_string(),
        TwigLabel::Interior(c) => c.to_string(),
    }
}

fn bad(what: &str, text: &str, err: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("bad {what} {text:?}: {err}"))
}

impl ChainDocument {
    pub fn from_chain(chain: &AnnotatedChain) -> Self {
        ChainDocument {
            level: chain.level,
            nodes: chain
                .nodes
                .iter()
                .map(|(c, w)| NodeEntry {
                    label: c.to_string(),
                    word: w.to_string(),
                })
                .collect(),
            twigs: chain
                .twigs
                .iter()
                .map(|(t, w)| TwigEntry {
                    label: twig_label_text(&t.label),
                    word: w.to_string(),
                    multiplicity: t.multiplicity,
                    emergent_level: t.emergent_level,
                })
                .collect(),
        }
    }

    pub fn to_chain(&self) -> Result<AnnotatedChain, CliError> {
        let word = |s: &str| s.parse::<CodeWord>().map_err(|e| bad("word", s, e));
        let nodes = self
            .nodes
            .iter()
            .map(|n| {
                let label = n.label.parse::<ChartString>().map_err(|e| bad("label", &n.label, e))?;
                Ok((label, word(&n.word)?))
            })
            .collect::<Result<_, CliError>>()?;
        let twigs = self
            .twigs
            .iter()
            .map(|t| {
                let label = match t.label.as_str() {
                    LEFT_END => TwigLabel::LeftEnd,
                    RIGHT_END => TwigLabel::RightEnd,
                    s => TwigLabel::Interior(s.parse().map_err(|e| bad("twig label", s, e))?),
                };
                let twig = Twig {
                    label,
                    multiplicity: t.multiplicity,
                    emergent_level: t.emergent_level,
                };
                Ok((twig, word(&t.word)?))
            })
            .collect::<Result<_, CliError>>()?;
        Ok(AnnotatedChain {
            level: self.level,
            nodes,
            twigs,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("chain document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid chain JSON: {e}")))
    }
}
