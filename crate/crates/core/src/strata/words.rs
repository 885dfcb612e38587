use super::{CodeSymbol, CodeWord, StrataError};
use crate::nodal::{twigs_at_node, Twig, TwigChain, TwigLabel};
use crate::tower::ChartString;

/// Word of the non-nodal points of a twig at level `k`:
/// `W(label) R V_{j+2}^(k-1-j)` for an interior twig `T(label)` with
/// `|label| = j`, and `R^k` for the end twigs.
pub fn twig_word(twig: &TwigLabel, k: usize) -> Result<CodeWord, StrataError> {
    match twig {
        TwigLabel::LeftEnd | TwigLabel::RightEnd => Ok(CodeWord::all_r(k)),
        TwigLabel::Interior(label) => {
            let head = node_word_recursive(label)?;
            interior_twig_word(twig, head, k)
        }
    }
}

fn interior_twig_word(twig: &TwigLabel, head: CodeWord, k: usize) -> Result<CodeWord, StrataError> {
    let j = head.len();
    if j + 1 > k {
        return Err(StrataError::TwigBeyondLevel {
            twig: twig.to_string(),
            level: k,
        });
    }
    let mut word = head;
    word.push(CodeSymbol::R);
    for _ in 0..k - 1 - j {
        word.push(CodeSymbol::V(j as u32 + 2));
    }
    Ok(word)
}

/// Positionwise merge of the two twig words meeting at a node: where they
/// agree keep the symbol, where one has `R` and the other `V_i` use `V_i`.
fn merge(node: &ChartString, left: &CodeWord, right: &CodeWord) -> Result<CodeWord, StrataError> {
    let clash = |position: usize| StrataError::IncompatibleTwigWords {
        node: node.node_label(),
        position,
        left: left.to_string(),
        right: right.to_string(),
    };
    if left.len() != right.len() {
        return Err(clash(0));
    }
    left.symbols()
        .iter()
        .zip(right.symbols())
        .enumerate()
        .map(|(i, pair)| match pair {
            (a, b) if a == b => Ok(*a),
            (CodeSymbol::R, v) | (v, CodeSymbol::R) => Ok(*v),
            _ => Err(clash(i + 1)),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(CodeWord::new)
}

/// One level of the node-word recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceTwig {
    pub label: TwigLabel,
    pub word: CodeWord,
    /// True when the twig emerges at this level.
    pub emergent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub level: usize,
    pub node: ChartString,
    pub node_word: CodeWord,
    /// Left and right twigs through the node; absent at level 0.
    pub upper: Option<TraceTwig>,
    pub lower: Option<TraceTwig>,
}

/// Node words of every prefix of `label`, each from the twig words of the
/// two twigs at that node. Twig labels at a node are prefixes of the node
/// label, so each level only looks back at earlier entries.
pub fn trace_node_word(label: &ChartString) -> Result<Vec<TraceStep>, StrataError> {
    let mut steps = vec![TraceStep {
        level: 0,
        node: ChartString::empty(),
        node_word: CodeWord::default(),
        upper: None,
        lower: None,
    }];
    for level in 1..=label.len() {
        let node = label.prefix(level);
        let (left, right) = twigs_at_node(&node);
        let trace_twig = |twig: TwigLabel| -> Result<TraceTwig, StrataError> {
            let word = match &twig {
                TwigLabel::Interior(c) => {
                    interior_twig_word(&twig, steps[c.len()].node_word.clone(), level)?
                }
                _ => CodeWord::all_r(level),
            };
            Ok(TraceTwig {
                emergent: twig.emergent_level() == Some(level),
                label: twig,
                word,
            })
        };
        let (upper, lower) = (trace_twig(left)?, trace_twig(right)?);
        let node_word = merge(&node, &upper.word, &lower.word)?;
        steps.push(TraceStep {
            level,
            node,
            node_word,
            upper: Some(upper),
            lower: Some(lower),
        });
    }
    Ok(steps)
}

/// `W(label)` by merging adjacent twig words level by level.
pub fn node_word_recursive(label: &ChartString) -> Result<CodeWord, StrataError> {
    Ok(trace_node_word(label)?.pop().unwrap().node_word)
}

/// `W(label)` from the block decomposition: the first block becomes `R`s,
/// and a later block starting at position `j` becomes `V_j`s.
pub fn node_word_explicit(label: &ChartString) -> CodeWord {
    let mut word = CodeWord::default();
    for (i, (start, len)) in label.blocks().into_iter().enumerate() {
        let s = if i == 0 {
            CodeSymbol::R
        } else {
            CodeSymbol::V(start as u32)
        };
        for _ in 0..len {
            word.push(s);
        }
    }
    word
}

/// A twig chain with node and twig words attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedChain {
    pub level: usize,
    pub nodes: Vec<(ChartString, CodeWord)>,
    pub twigs: Vec<(Twig, CodeWord)>,
}

pub fn annotate_chain(chain: &TwigChain) -> Result<AnnotatedChain, StrataError> {
    let nodes = chain
        .nodes
        .iter()
        .map(|n| Ok((n.clone(), node_word_recursive(n)?)))
        .collect::<Result<_, StrataError>>()?;
    let twigs = chain
        .twigs
        .iter()
        .map(|t| Ok((t.clone(), twig_word(&t.label, chain.level)?)))
        .collect::<Result<_, StrataError>>()?;
    Ok(AnnotatedChain {
        level: chain.level,
        nodes,
        twigs,
    })
}
