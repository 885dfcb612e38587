//! The central fiber: a chain of `2^k + 1` twigs meeting at the `2^k` nodes.

use std::fmt;

use super::{node_binomial, FamilyError};
use crate::kernel::VarName;
use crate::tower::{chart_frame, ChartString, Symbol};

/// Name of a twig. End twigs are the prolongations of `x2 = 0` (left) and
/// `x1 = 0` (right); interior twigs carry the label of the node they
/// emerge from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwigLabel {
    LeftEnd,
    Interior(ChartString),
    RightEnd,
}

impl TwigLabel {
    /// Level at which an interior twig emerges.
    pub fn emergent_level(&self) -> Option<usize> {
        match self {
            TwigLabel::Interior(c) => Some(c.len() + 1),
            _ => None,
        }
    }

    /// Image under the 1 <-> 2 swap.
    pub fn swapped(&self) -> TwigLabel {
        match self {
            TwigLabel::LeftEnd => TwigLabel::RightEnd,
            TwigLabel::RightEnd => TwigLabel::LeftEnd,
            TwigLabel::Interior(c) => TwigLabel::Interior(c.swapped()),
        }
    }
}

impl fmt::Display for TwigLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwigLabel::LeftEnd => f.write_str("left end"),
            TwigLabel::RightEnd => f.write_str("right end"),
            TwigLabel::Interior(c) => write!(f, "T({})", c.label_text()),
        }
    }
}

/// The two twigs meeting at `N(node)`, in chain order (left, right).
///
/// Interior twig labels are the longest common initial string of the two
/// adjacent node labels.
pub fn twigs_at_node(node: &ChartString) -> (TwigLabel, TwigLabel) {
    let left = node
        .predecessor()
        .map_or(TwigLabel::LeftEnd, |p| TwigLabel::Interior(p.common_prefix(node)));
    let right = node
        .successor()
        .map_or(TwigLabel::RightEnd, |s| TwigLabel::Interior(s.common_prefix(node)));
    (left, right)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwigRole {
    /// Mapped isomorphically to a twig one level down; affine coordinate `r`.
    Retained,
    /// Collapsed to a node one level down; affine coordinate `n`.
    Emergent,
}

/// One of the two coordinate axes through a node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwigComponent {
    pub role: TwigRole,
    pub twig: TwigLabel,
    /// The coordinate that stays free along the axis.
    pub affine_coord: VarName,
    /// Coordinates that vanish on the axis.
    pub vanishing: Vec<VarName>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeComponents {
    pub retained: TwigComponent,
    pub emergent: TwigComponent,
}

/// The two components of the central fiber through `N(chart)`:
/// the retained twig `{n = 0, inactive = 0}` and the emergent twig
/// `{r = 0, inactive = 0}`.
pub fn central_fiber_components(chart: &ChartString) -> Result<NodeComponents, FamilyError> {
    let k = chart.len();
    if k == 0 {
        return Err(FamilyError::BaseChart);
    }
    let frame = chart_frame(chart);
    let retained_twig = if chart.is_constant() {
        match chart.last().unwrap() {
            Symbol::One => TwigLabel::LeftEnd,
            Symbol::Two => TwigLabel::RightEnd,
        }
    } else {
        // chart = p1..p_{j-1} p_j q..q; r is the coordinate introduced in
        // C(p1..pj), whose emergent twig is T(p1..p_{j-1})
        let (_, last_block) = *chart.blocks().last().unwrap();
        TwigLabel::Interior(chart.prefix(k - last_block - 1))
    };
    let with = |first: &VarName| {
        let mut v = vec![first.clone()];
        v.extend(frame.inactive_coords.iter().cloned());
        v
    };
    Ok(NodeComponents {
        retained: TwigComponent {
            role: TwigRole::Retained,
            twig: retained_twig,
            affine_coord: frame.retained_coord.clone(),
            vanishing: with(&frame.new_coord),
        },
        emergent: TwigComponent {
            role: TwigRole::Emergent,
            twig: TwigLabel::Interior(chart.prefix(k - 1)),
            affine_coord: frame.new_coord.clone(),
            vanishing: with(&frame.retained_coord),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twig {
    pub label: TwigLabel,
    pub multiplicity: u64,
    pub emergent_level: Option<usize>,
}

/// `X(k)_0` as an ordered chain: `twigs[i]` and `twigs[i + 1]` meet at
/// `nodes[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwigChain {
    pub level: usize,
    pub nodes: Vec<ChartString>,
    pub twigs: Vec<Twig>,
}

impl TwigChain {
    pub fn multiplicities(&self) -> Vec<u64> {
        self.twigs.iter().map(|t| t.multiplicity).collect()
    }
}

/// Twig labels left to right at level `k`.
pub fn chain_labels(k: usize) -> Vec<TwigLabel> {
    let nodes = ChartString::all_of_length(k);
    let mut twigs = vec![TwigLabel::LeftEnd];
    twigs.extend(
        nodes
            .windows(2)
            .map(|w| TwigLabel::Interior(w[0].common_prefix(&w[1]))),
    );
    twigs.push(TwigLabel::RightEnd);
    twigs
}

/// The chain at level `k`, with multiplicities from the node binomials.
pub fn build_chain(k: usize) -> Result<TwigChain, FamilyError> {
    let labels = chain_labels(k);
    let mult = multiplicities(k)?;
    let twigs = labels
        .into_iter()
        .zip(mult)
        .map(|(label, multiplicity)| Twig {
            emergent_level: label.emergent_level(),
            label,
            multiplicity,
        })
        .collect();
    Ok(TwigChain {
        level: k,
        nodes: ChartString::all_of_length(k),
        twigs,
    })
}

/// Twig multiplicities left to right, read off the node binomials: at each
/// node the retained twig gets `alpha` and the emergent twig `alpha + beta`.
///
/// Every interior twig is seen from both of its nodes; the two readings must
/// agree.
pub fn multiplicities(k: usize) -> Result<Vec<u64>, FamilyError> {
    let labels = chain_labels(k);
    if k == 0 {
        // B(∅) = x1 x2: both branches reduced
        return Ok(vec![1, 1]);
    }
    let mut mult: Vec<Option<u64>> = vec![None; labels.len()];
    for (i, node) in ChartString::all_of_length(k).iter().enumerate() {
        let b = node_binomial(node);
        let comps = central_fiber_components(node)?;
        for (twig, value) in [
            (comps.retained.twig, b.retained_multiplicity()),
            (comps.emergent.twig, b.emergent_multiplicity()),
        ] {
            let pos = if labels[i] == twig {
                i
            } else if labels[i + 1] == twig {
                i + 1
            } else {
                return Err(FamilyError::InconsistentChain {
                    twig: twig.to_string(),
                    detail: format!("{twig} does not meet {}", node.node_label()),
                });
            };
            match mult[pos] {
                Some(seen) if seen != value => {
                    return Err(FamilyError::InconsistentChain {
                        twig: twig.to_string(),
                        detail: format!("multiplicities {seen} and {value}"),
                    })
                }
                _ => mult[pos] = Some(value),
            }
        }
    }
    mult.into_iter()
        .zip(&labels)
        .map(|(m, label)| {
            m.ok_or_else(|| FamilyError::InconsistentChain {
                twig: label.to_string(),
                detail: "no node assigns a multiplicity".to_string(),
            })
        })
        .collect()
}

/// The twig multiplicity sequence: start from `1, 1` and, `k` times, insert
/// the sum between each pair of neighbours.
pub fn multiplicity_sequence(k: usize) -> Vec<u64> {
    let mut seq = vec![1u64, 1];
    for _ in 0..k {
        let mut next = Vec::with_capacity(2 * seq.len() - 1);
        for w in seq.windows(2) {
            next.push(w[0]);
            next.push(w[0] + w[1]);
        }
        next.push(*seq.last().unwrap());
        seq = next;
    }
    seq
}
