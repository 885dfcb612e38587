//! Graphviz output. In a chain, nodes are vertices and twigs are edges; the
//! two end twigs run to point-shaped vertices `left_end` and `right_end`.

use std::fmt::Write;

use monster_core::strata::{AnnotatedChain, TraceStep};
use monster_core::ChartString;

use crate::ascii::{word_text, ChainView};

fn vertex_id(label: &ChartString) -> String {
    format!("N{label}")
}

pub fn chain(chain: &AnnotatedChain, view: ChainView) -> String {
    let mut out = String::new();
    writeln!(out, "graph chain_{} {{", chain.level).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    writeln!(out, "  left_end [shape=point];").unwrap();
    writeln!(out, "  right_end [shape=point];").unwrap();
    for (label, word) in &chain.nodes {
        let mut text = label.node_label();
        if view.words {
            text = format!("{text}\n{}", word_text(word));
        }
        writeln!(out, "  {} [label={:?}];", vertex_id(label), text).unwrap();
    }
    let n = chain.nodes.len();
    for (t, (twig, word)) in chain.twigs.iter().enumerate() {
        let from = if t == 0 {
            "left_end".to_string()
        } else {
            vertex_id(&chain.nodes[t - 1].0)
        };
        let to = if t == n {
            "right_end".to_string()
        } else {
            vertex_id(&chain.nodes[t].0)
        };
        let mut text = twig.label.to_string();
        if view.words {
            text = format!("{text}\n{}", word_text(word));
        }
        if view.multiplicities {
            text = format!("{text}\nm={}", twig.multiplicity);
        }
        writeln!(out, "  {from} -- {to} [label={text:?}];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// The node-word recursion as a tree: each node points to its two twigs
/// and to the next node; emergent twigs are drawn bold.
pub fn trace(steps: &[TraceStep]) -> String {
    let mut out = String::new();
    out.push_str("digraph trace {\n");
    out.push_str("  node [shape=box];\n");
    for s in steps {
        let id = vertex_id(&s.node);
        let text = format!("{}\n{}", s.node.node_label(), word_text(&s.node_word));
        writeln!(out, "  {id} [label={text:?}];").unwrap();
        for (side, twig) in [("upper", &s.upper), ("lower", &s.lower)] {
            if let Some(t) = twig {
                let twig_id = format!("{id}_{side}");
                let style = if t.emergent { ", style=bold" } else { "" };
                let text = format!("{}\n{}", t.label, word_text(&t.word));
                writeln!(out, "  {twig_id} [shape=ellipse, label={text:?}{style}];").unwrap();
                writeln!(out, "  {twig_id} -> {id};").unwrap();
            }
        }
    }
    for w in steps.windows(2) {
        writeln!(out, "  {} -> {};", vertex_id(&w[0].node), vertex_id(&w[1].node)).unwrap();
    }
    out.push_str("}\n");
    out
}
