use std::fmt::Write;
use std::path::Path;

use monster_core::nodal::{
    binomials_by_differentiation, build_chain, node_binomial, verify_flat_limit,
};
use monster_core::parse::parse_curve_spec;
use monster_core::prolong::{default_truncation_order, prolong, ParametricCurve};
use monster_core::strata::{
    annotate_chain, enumerate_code_words, node_word_explicit, node_word_recursive,
    trace_node_word, AnnotatedChain,
};
use monster_core::ChartString;

use crate::ascii::{self, word_text, ChainView};
use crate::{dot, ChainDocument, CliError, Format};

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

/// `B(prefix)` for every prefix of `chart`, one per line.
pub fn binomials_for_chart(chart: &ChartString, labeled: bool) -> String {
    binomial_lines(chart.prefixes(), labeled)
}

/// `B(c)` for every chart of length at most `level`, shortest first.
pub fn all_binomials(level: usize, labeled: bool) -> String {
    binomial_lines((0..=level).flat_map(ChartString::all_of_length), labeled)
}

fn binomial_lines(charts: impl Iterator<Item = ChartString>, labeled: bool) -> String {
    let mut out = String::new();
    for c in charts {
        let b = node_binomial(&c);
        if labeled {
            writeln!(out, "B({}) = {b}", c.label_text()).unwrap();
        } else {
            writeln!(out, "{b}").unwrap();
        }
    }
    out
}

pub fn annotated_chain(level: usize) -> Result<AnnotatedChain, CliError> {
    annotate_chain(&build_chain(level).map_err(internal)?).map_err(internal)
}

pub fn chain(level: usize, format: Format, view: ChainView) -> Result<String, CliError> {
    let c = annotated_chain(level)?;
    Ok(match format {
        Format::Ascii => ascii::chain(&c, view),
        Format::Dot => dot::chain(&c, view),
        Format::Json => ChainDocument::from_chain(&c).to_json() + "\n",
    })
}

pub fn codewords(level: usize, codim: bool) -> String {
    let words = enumerate_code_words(level);
    let mut out = String::new();
    for w in &words {
        if codim {
            writeln!(out, "{w}  codim={}", w.signature().codimension()).unwrap();
        } else {
            writeln!(out, "{w}").unwrap();
        }
    }
    writeln!(out, "count={} (F_{})", words.len(), 2 * level as i64 - 1).unwrap();
    out
}

/// Both node-word algorithms; the last line is the word.
pub fn nodeword(label: &ChartString, trace: bool, format: Format) -> Result<String, CliError> {
    let recursive = node_word_recursive(label).map_err(internal)?;
    let explicit = node_word_explicit(label);
    if recursive != explicit {
        return Err(CliError::Internal(format!(
            "node word algorithms disagree at {}: recursive {recursive}, explicit {explicit}",
            label.node_label()
        )));
    }
    let mut out = String::new();
    if trace {
        let steps = trace_node_word(label).map_err(internal)?;
        match format {
            Format::Dot => return Ok(dot::trace(&steps)),
            Format::Json => {
                return Err(CliError::Usage("--trace supports ascii and dot".to_string()))
            }
            Format::Ascii => out.push_str(&ascii::trace(&steps)),
        }
    }
    writeln!(out, "recursive: {}", word_text(&recursive)).unwrap();
    writeln!(out, "explicit:  {}", word_text(&explicit)).unwrap();
    writeln!(out, "{}", word_text(&recursive)).unwrap();
    Ok(out)
}

/// Lift the curve in `src` and print its coordinates with their known order.
pub fn prolong_source(
    name: &str,
    src: &str,
    levels: usize,
    order: Option<usize>,
) -> Result<String, CliError> {
    let spec = parse_curve_spec(src).map_err(|e| CliError::Usage(format!("{name}:{e}")))?;
    let order = order.unwrap_or_else(|| default_truncation_order(levels));
    let curve = ParametricCurve::from_spec(&spec, order)
        .map_err(|e| CliError::Usage(format!("{name}: {e}")))?;
    let lifted = prolong(&curve, levels).map_err(|e| CliError::Usage(format!("{name}: {e}")))?;
    let mut out = String::new();
    let mut from = spec.chart.chart_label();
    for step in &lifted.steps {
        writeln!(
            out,
            "# {from} -> {}: {}, new coordinate {}",
            step.chart.chart_label(),
            step.kind,
            step.new_coord
        )
        .unwrap();
        from = step.chart.chart_label();
    }
    for (v, s) in lifted.curve.named_coords() {
        writeln!(out, "{v} = {s}").unwrap();
    }
    Ok(out)
}

pub fn prolong_file(path: &Path, levels: usize, order: Option<usize>) -> Result<String, CliError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    prolong_source(&path.display().to_string(), &src, levels, order)
}

pub struct Verification {
    pub report: String,
    pub failures: usize,
}

/// For every chart at `level`: binomials by both routes, the flat limit,
/// and both node-word algorithms.
pub fn verify(level: usize) -> Verification {
    let mut report = String::new();
    let mut failures = 0;
    let mut record = |ok: bool, check: &str, chart: &ChartString, detail: String| {
        if !ok {
            failures += 1;
        }
        let status = if ok { "PASS" } else { "FAIL" };
        writeln!(report, "{status}  {check:<16} {:<12} {detail}", chart.chart_label()).unwrap();
    };
    let charts = ChartString::all_of_length(level);
    for c in &charts {
        match binomials_by_differentiation(c) {
            Ok(_) => record(true, "binomial-routes", c, node_binomial(c).to_string()),
            Err(e) => record(false, "binomial-routes", c, e.to_string()),
        }
        match verify_flat_limit(c) {
            Ok(f) => record(
                true,
                "flat-limit",
                c,
                format!("n^{} r^{} (unit {})", f.exp_new, f.exp_retained, f.unit),
            ),
            Err(e) => record(false, "flat-limit", c, e.to_string()),
        }
        match node_word_recursive(c) {
            Ok(w) if w == node_word_explicit(c) => record(true, "node-words", c, word_text(&w)),
            Ok(w) => record(
                false,
                "node-words",
                c,
                format!("recursive {w}, explicit {}", node_word_explicit(c)),
            ),
            Err(e) => record(false, "node-words", c, e.to_string()),
        }
    }
    let total = 3 * charts.len();
    writeln!(report, "{} of {total} checks passed", total - failures).unwrap();
    Verification { report, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_binomials() {
        let text = binomials_for_chart(&"212".parse().unwrap(), false);
        assert_eq!(
            text,
            "x1x2\nx1(2)x2+x1\n2x1(2)x2(21)+x2\n3x1(212)x2(21)+2x1(2)\n"
        );
        assert_eq!(binomials_for_chart(&ChartString::empty(), false), "x1x2\n");
        assert_eq!(all_binomials(3, false).lines().count(), 15);
        assert!(all_binomials(1, true).contains("B(∅) = x1x2"));
    }

    #[test]
    fn code_word_listing() {
        let text = codewords(3, false);
        assert_eq!(text.lines().count(), 6);
        assert_eq!(text.lines().last(), Some("count=5 (F_5)"));
        assert!(codewords(3, true).contains("RV2V3  codim=2"));
    }

    #[test]
    fn node_word_output() {
        let text = nodeword(&"21221".parse().unwrap(), true, Format::Ascii).unwrap();
        assert_eq!(text.lines().last(), Some("RV2V3V3V5"));
        let text = nodeword(&"222122112".parse().unwrap(), false, Format::Ascii).unwrap();
        assert_eq!(text.lines().last(), Some("RRRV4V5V5V7V7V9"));
    }

    #[test]
    fn cusp() {
        let text = prolong_source("cusp", "x1 = s^2; x2 = s^3", 1, None).unwrap();
        assert!(text.contains("x2(1) = (3/2)*s + O(s^4)"), "{text}");
        assert!(text.starts_with("# C(∅) -> C(1): regular, new coordinate x2(1)"));
        assert!(matches!(prolong_source("e", "", 1, None), Err(CliError::Usage(_))));
        assert!(matches!(
            prolong_source("c", "x1 = 1; x2 = 1", 1, None),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn verify_level_three() {
        let v = verify(3);
        assert_eq!(v.failures, 0);
        assert_eq!(v.report.lines().filter(|l| l.starts_with("PASS")).count(), 24);
    }
}
