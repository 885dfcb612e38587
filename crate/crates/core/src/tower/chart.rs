//! Chart strings: words over the alphabet {1, 2}.

use std::fmt;
use std::str::FromStr;

use super::TowerError;

/// One letter of a chart string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    One,
    Two,
}

impl Symbol {
    /// The opposite letter: 1 <-> 2.
    pub fn opposite(self) -> Symbol {
        match self {
            Symbol::One => Symbol::Two,
            Symbol::Two => Symbol::One,
        }
    }

    /// Coordinate index carried by this letter.
    pub fn index(self) -> u8 {
        match self {
            Symbol::One => 1,
            Symbol::Two => 2,
        }
    }

    pub fn from_index(index: u8) -> Option<Symbol> {
        match index {
            1 => Some(Symbol::One),
            2 => Some(Symbol::Two),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::One => '1',
            Symbol::Two => '2',
        }
    }
}

/// A chart label `p1 p2 ... pk`. The empty string names the base chart.
///
/// The derived ordering is lexicographic with `1 < 2`, which is the order
/// of nodes along the central fiber.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChartString(Vec<Symbol>);

impl ChartString {
    pub fn empty() -> Self {
        ChartString(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        ChartString(symbols)
    }

    /// `n` copies of one symbol.
    pub fn repeat(symbol: Symbol, n: usize) -> Self {
        ChartString(vec![symbol; n])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.0.last().copied()
    }

    /// The string with `q` appended.
    pub fn child(&self, q: Symbol) -> ChartString {
        let mut symbols = self.0.clone();
        symbols.push(q);
        ChartString(symbols)
    }

    /// The length-`len` prefix. Panics if `len > self.len()`.
    pub fn prefix(&self, len: usize) -> ChartString {
        ChartString(self.0[..len].to_vec())
    }

    /// Parent chart, one level down.
    pub fn parent(&self) -> Option<ChartString> {
        if self.is_empty() {
            None
        } else {
            Some(self.prefix(self.len() - 1))
        }
    }

    /// Drop the last `levels` symbols.
    pub fn project(&self, levels: usize) -> Result<ChartString, TowerError> {
        if levels > self.len() {
            return Err(TowerError::ProjectionTooDeep {
                levels,
                level: self.len(),
            });
        }
        Ok(self.prefix(self.len() - levels))
    }

    /// The sibling chart: last symbol replaced by its opposite.
    pub fn sibling(&self) -> Option<ChartString> {
        let last = self.last()?;
        let mut symbols = self.0.clone();
        *symbols.last_mut().unwrap() = last.opposite();
        Some(ChartString(symbols))
    }

    /// Apply 1 <-> 2 to every symbol.
    pub fn swapped(&self) -> ChartString {
        ChartString(self.0.iter().map(|s| s.opposite()).collect())
    }

    /// True when every symbol is the same (including the empty string).
    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Longest common initial string.
    pub fn common_prefix(&self, other: &ChartString) -> ChartString {
        let n = self
            .0
            .iter()
            .zip(&other.0)
            .take_while(|(a, b)| a == b)
            .count();
        self.prefix(n)
    }

    /// All prefixes, from the empty string up to `self`.
    pub fn prefixes(&self) -> impl Iterator<Item = ChartString> + '_ {
        (0..=self.len()).map(move |i| self.prefix(i))
    }

    /// All `2^k` strings of length `k` in lexicographic order.
    pub fn all_of_length(k: usize) -> Vec<ChartString> {
        assert!(k < usize::BITS as usize, "chart length {k} too large");
        (0..1usize << k)
            .map(|bits| {
                ChartString(
                    (0..k)
                        .map(|i| {
                            if bits >> (k - 1 - i) & 1 == 0 {
                                Symbol::One
                            } else {
                                Symbol::Two
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    /// Lexicographic neighbours at the same length.
    pub fn predecessor(&self) -> Option<ChartString> {
        // binary decrement with 1 as the zero digit
        let mut symbols = self.0.clone();
        let pos = symbols.iter().rposition(|&s| s == Symbol::Two)?;
        symbols[pos] = Symbol::One;
        for s in &mut symbols[pos + 1..] {
            *s = Symbol::Two;
        }
        Some(ChartString(symbols))
    }

    pub fn successor(&self) -> Option<ChartString> {
        let mut symbols = self.0.clone();
        let pos = symbols.iter().rposition(|&s| s == Symbol::One)?;
        symbols[pos] = Symbol::Two;
        for s in &mut symbols[pos + 1..] {
            *s = Symbol::One;
        }
        Some(ChartString(symbols))
    }

    /// Maximal runs of equal symbols as `(start, len)` with 1-based starts.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (i, s) in self.0.iter().enumerate() {
            match out.last_mut() {
                Some((start, len)) if self.0[*start - 1] == *s => *len += 1,
                _ => out.push((i + 1, 1)),
            }
        }
        out
    }

    /// Text form used inside labels: the symbols, or `∅` when empty.
    pub fn label_text(&self) -> String {
        if self.is_empty() {
            "∅".to_string()
        } else {
            self.to_string()
        }
    }

    /// `N(212)`.
    pub fn node_label(&self) -> String {
        format!("N({})", self.label_text())
    }

    /// `C(212)`.
    pub fn chart_label(&self) -> String {
        format!("C({})", self.label_text())
    }
}

impl fmt::Display for ChartString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for ChartString {
    type Err = TowerError;

    /// Accepts digits `1`/`2`; `∅` alone denotes the empty string.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "∅" {
            return Ok(ChartString::empty());
        }
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '1' => Ok(Symbol::One),
                '2' => Ok(Symbol::Two),
                other => Err(TowerError::BadChartString {
                    input: s.to_string(),
                    position: pos,
                    found: other,
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ChartString)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> ChartString {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(cs("212").to_string(), "212");
        assert_eq!(cs("").node_label(), "N(∅)");
        assert_eq!(cs("∅"), ChartString::empty());
        assert!("213".parse::<ChartString>().is_err());
    }

    #[test]
    fn projection_of_nodes() {
        assert_eq!(cs("21221").project(1).unwrap(), cs("2122"));
        assert_eq!(cs("212").project(3).unwrap(), cs(""));
        assert!(cs("21").project(3).is_err());
    }

    #[test]
    fn lexicographic_enumeration_and_neighbours() {
        let all = ChartString::all_of_length(3);
        let text: Vec<_> = all.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            text,
            ["111", "112", "121", "122", "211", "212", "221", "222"]
        );
        for w in all.windows(2) {
            assert_eq!(w[0].successor().as_ref(), Some(&w[1]));
            assert_eq!(w[1].predecessor().as_ref(), Some(&w[0]));
        }
        assert_eq!(cs("111").predecessor(), None);
        assert_eq!(cs("222").successor(), None);
        assert_eq!(ChartString::all_of_length(0), vec![cs("")]);
    }

    #[test]
    fn blocks_are_one_based() {
        assert_eq!(
            cs("222122112").blocks(),
            vec![(1, 3), (4, 1), (5, 2), (7, 2), (9, 1)]
        );
        assert!(cs("").blocks().is_empty());
    }

    #[test]
    fn common_prefix_and_sibling() {
        assert_eq!(cs("21221").common_prefix(&cs("21212")), cs("212"));
        assert_eq!(cs("212").sibling(), Some(cs("211")));
        assert_eq!(cs("").sibling(), None);
    }
}
