//! Plain-text layouts: the zigzag chain and the node-word trace table.

use monster_core::nodal::TwigLabel;
use monster_core::strata::{AnnotatedChain, CodeWord, TraceStep};

pub fn word_text(w: &CodeWord) -> String {
    if w.is_empty() {
        "∅".to_string()
    } else {
        w.to_string()
    }
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn center(s: &str, w: usize) -> String {
    let pad = w - width(s);
    let left = pad / 2;
    format!("{}{}{}", " ".repeat(left), s, " ".repeat(pad - left))
}

/// Lay out rows of cells in shared columns, centered, one space apart.
fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| width(s))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| center(s, w))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// Options for [`chain`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ChainView {
    pub words: bool,
    pub multiplicities: bool,
}

/// The central fiber as a zigzag: odd-numbered nodes on the upper row,
/// even-numbered nodes on the lower row, twigs as `/` and `\` between them,
/// then one column of twig data under each twig.
pub fn chain(chain: &AnnotatedChain, view: ChainView) -> String {
    let n = chain.nodes.len();
    let slots = 2 * n + 1;
    let high = |j: usize| j % 2 == 0;
    let blank = || vec![String::new(); slots];

    let mut upper = vec![blank()];
    let mut lower = vec![blank()];
    if view.words {
        upper.push(blank());
        lower.push(blank());
    }
    for (j, (label, word)) in chain.nodes.iter().enumerate() {
        let rows = if high(j) { &mut upper } else { &mut lower };
        rows[0][2 * j + 1] = label.node_label();
        if view.words {
            rows[1][2 * j + 1] = word_text(word);
        }
    }

    let mut connector = blank();
    for t in 0..=n {
        // a twig rises into a high node on its right, or out of a low node on its left
        let rising = if t < n { high(t) } else { !high(n - 1) };
        connector[2 * t] = if rising { "/" } else { "\\" }.to_string();
    }

    let mut twig_rows = vec![blank()];
    if view.words {
        twig_rows.push(blank());
    }
    if view.multiplicities {
        twig_rows.push(blank());
    }
    for (t, (twig, word)) in chain.twigs.iter().enumerate() {
        let mut r = 0;
        twig_rows[r][2 * t] = match &twig.label {
            TwigLabel::LeftEnd => "left".to_string(),
            TwigLabel::RightEnd => "right".to_string(),
            label => label.to_string(),
        };
        if view.words {
            r += 1;
            twig_rows[r][2 * t] = word_text(word);
        }
        if view.multiplicities {
            r += 1;
            twig_rows[r][2 * t] = twig.multiplicity.to_string();
        }
    }

    let mut rows = upper;
    rows.push(connector);
    rows.extend(lower);
    rows.push(blank());
    rows.extend(twig_rows);
    grid(&rows)
}

/// Left-aligned table with two-space gutters.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| width(s)).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (s, w) in row.iter().zip(&widths) {
            line.push_str(s);
            line.push_str(&" ".repeat(w - width(s) + 2));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// The node-word recursion level by level. A `*` marks the twig that
/// emerges at that level.
pub fn trace(steps: &[TraceStep]) -> String {
    let twig_cell = |t: &Option<monster_core::strata::TraceTwig>| match t {
        None => String::new(),
        Some(t) => format!(
            "{} {}{}",
            t.label,
            word_text(&t.word),
            if t.emergent { " *" } else { "" }
        ),
    };
    let mut rows = vec![vec![
        "level".to_string(),
        "node".to_string(),
        "upper twig".to_string(),
        "lower twig".to_string(),
        "node word".to_string(),
    ]];
    for s in steps {
        rows.push(vec![
            s.level.to_string(),
            s.node.node_label(),
            twig_cell(&s.upper),
            twig_cell(&s.lower),
            word_text(&s.node_word),
        ]);
    }
    table(&rows)
}
