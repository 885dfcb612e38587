use std::cmp::Ordering;
use std::fmt;

use crate::tower::{ChartString, Symbol};

/// A variable of a polynomial.
///
/// Tower coordinates `x_i(p1...pk)` are always stored under their
/// non-redundant name: `x_q(...q)` is the same function as `x_q(...)`,
/// so trailing copies of the index are stripped on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarName {
    /// The family parameter.
    T,
    /// The curve parameter.
    S,
    Coord(Coord),
    /// Jet variable `y^(order)`, rendered with primes.
    Jet(u32),
    /// Free-form symbol (e.g. `x`, `y`, `D`, `N`, `R`).
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coord {
    index: Symbol,
    suffix: ChartString,
}

impl Coord {
    pub fn index(&self) -> Symbol {
        self.index
    }

    pub fn suffix(&self) -> &ChartString {
        &self.suffix
    }

    /// Level at which this coordinate is introduced.
    pub fn level(&self) -> usize {
        self.suffix.len()
    }
}

impl Ord for Coord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.level(), self.index, &self.suffix).cmp(&(other.level(), other.index, &other.suffix))
    }
}

impl PartialOrd for Coord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl VarName {
    /// `x_index(suffix)`, resolved to its canonical representative.
    pub fn coord(index: Symbol, suffix: &ChartString) -> VarName {
        let symbols = suffix.symbols();
        let keep = symbols
            .iter()
            .rposition(|&s| s != index)
            .map_or(0, |p| p + 1);
        VarName::Coord(Coord {
            index,
            suffix: suffix.prefix(keep),
        })
    }

    pub fn x1() -> VarName {
        VarName::coord(Symbol::One, &ChartString::empty())
    }

    pub fn x2() -> VarName {
        VarName::coord(Symbol::Two, &ChartString::empty())
    }

    pub fn named(name: impl Into<String>) -> VarName {
        VarName::Named(name.into())
    }

    pub fn as_coord(&self) -> Option<&Coord> {
        match self {
            VarName::Coord(c) => Some(c),
            _ => None,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            VarName::T => 0,
            VarName::S => 1,
            VarName::Coord(_) => 2,
            VarName::Jet(_) => 3,
            VarName::Named(_) => 4,
        }
    }

    /// Ordering used when printing a monomial: all `x1` coordinates before
    /// all `x2` coordinates, each family by level.
    pub(crate) fn display_cmp(&self, other: &VarName) -> Ordering {
        match (self, other) {
            (VarName::Coord(a), VarName::Coord(b)) => {
                (a.index, a.level(), &a.suffix).cmp(&(b.index, b.level(), &b.suffix))
            }
            _ => self.cmp(other),
        }
    }
}

impl Ord for VarName {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (VarName::Coord(a), VarName::Coord(b)) => a.cmp(b),
            (VarName::Jet(a), VarName::Jet(b)) => a.cmp(b),
            (VarName::Named(a), VarName::Named(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for VarName {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarName::T => f.write_str("t"),
            VarName::S => f.write_str("s"),
            VarName::Coord(c) if c.suffix.is_empty() => write!(f, "x{}", c.index.index()),
            VarName::Coord(c) => write!(f, "x{}({})", c.index.index(), c.suffix),
            VarName::Jet(order) => {
                f.write_str("y")?;
                for _ in 0..*order {
                    f.write_str("'")?;
                }
                Ok(())
            }
            VarName::Named(name) => f.write_str(name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(index: u8, suffix: &str) -> VarName {
        VarName::coord(Symbol::from_index(index).unwrap(), &suffix.parse().unwrap())
    }

    #[test]
    fn redundant_names_collapse() {
        assert_eq!(x(2, "212").to_string(), "x2(21)");
        assert_eq!(x(1, "211").to_string(), "x1(2)");
        assert_eq!(x(1, "111").to_string(), "x1");
        assert_eq!(x(1, "212").to_string(), "x1(212)");
    }

    #[test]
    fn canonical_order() {
        let mut vars = vec![
            x(2, "1"),
            VarName::Jet(1),
            x(1, "2"),
            x(2, ""),
            VarName::S,
            x(1, "1122"),
            x(1, ""),
            VarName::T,
        ];
        vars.sort();
        let text: Vec<_> = vars.iter().map(|v| v.to_string()).collect();
        assert_eq!(text, ["t", "s", "x1", "x2", "x1(2)", "x2(1)", "x1(1122)", "y'"]);
    }
}
