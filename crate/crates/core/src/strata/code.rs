use std::fmt;
use std::str::FromStr;

use super::StrataError;

/// One letter of a code word. `R` is the subscript-free symbol; `V(j)`
/// refers to the divisor at infinity introduced at level `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeSymbol {
    R,
    V(u32),
}

impl fmt::Display for CodeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeSymbol::R => f.write_str("R"),
            CodeSymbol::V(j) => write!(f, "V{j}"),
        }
    }
}

/// A word in `R` and `V_j`, rendered inline as `RV2V3V3V5`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeWord(Vec<CodeSymbol>);

impl CodeWord {
    pub fn new(symbols: Vec<CodeSymbol>) -> Self {
        CodeWord(symbols)
    }

    pub fn all_r(k: usize) -> Self {
        CodeWord(vec![CodeSymbol::R; k])
    }

    pub fn symbols(&self) -> &[CodeSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: CodeSymbol) {
        self.0.push(s);
    }

    /// Both formation rules: the first symbol is `R`; the symbol at
    /// position `j` is `R`, `V_j`, or a repeat of the symbol before it.
    pub fn is_valid(&self) -> bool {
        self.0.iter().enumerate().all(|(i, s)| match (i, s) {
            (0, s) => *s == CodeSymbol::R,
            (_, CodeSymbol::R) => true,
            (i, CodeSymbol::V(j)) => *j as usize == i + 1 || self.0[i - 1] == CodeSymbol::V(*j),
        })
    }

    /// `n_j`: how often `V_j` occurs, for `j = 2..=k`.
    pub fn signature(&self) -> LocusSignature {
        let k = self.len();
        let mut counts = vec![0u32; k.saturating_sub(1)];
        for s in &self.0 {
            if let CodeSymbol::V(j) = s {
                if let Some(c) = (*j as usize).checked_sub(2).and_then(|i| counts.get_mut(i)) {
                    *c += 1;
                }
            }
        }
        LocusSignature { level: k, counts }
    }
}

impl fmt::Display for CodeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

impl FromStr for CodeWord {
    type Err = StrataError;

    /// Accepts `RV2V3`; the empty string is the empty word.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let bad = |position: usize| StrataError::BadWord {
            input: input.to_string(),
            position,
        };
        let chars: Vec<char> = input.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            match chars[i] {
                'R' => {
                    out.push(CodeSymbol::R);
                    i += 1;
                }
                'V' => {
                    let start = i + 1;
                    let mut end = start;
                    while end < chars.len() && chars[end].is_ascii_digit() {
                        end += 1;
                    }
                    let digits: String = chars[start..end].iter().collect();
                    let j = digits.parse().map_err(|_| bad(start))?;
                    out.push(CodeSymbol::V(j));
                    i = end;
                }
                _ => return Err(bad(i)),
            }
        }
        Ok(CodeWord(out))
    }
}

pub fn validate_code_word(word: &CodeWord) -> bool {
    word.is_valid()
}

/// All valid words of length `k` in lexicographic order (`R < V2 < V3 < ...`).
pub fn enumerate_code_words(k: usize) -> Vec<CodeWord> {
    fn extend(k: usize, current: &mut Vec<CodeSymbol>, out: &mut Vec<CodeWord>) {
        let pos = current.len() + 1;
        if pos > k {
            out.push(CodeWord(current.clone()));
            return;
        }
        let mut options = vec![CodeSymbol::R];
        if pos > 1 {
            if let Some(&CodeSymbol::V(j)) = current.last() {
                options.push(CodeSymbol::V(j));
            }
            options.push(CodeSymbol::V(pos as u32));
        }
        for s in options {
            current.push(s);
            extend(k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        extend(k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// The locus `I_W`: the intersection over `j` of the `(n_j - 1)`-fold
/// prolongations of the divisors at infinity `I_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocusSignature {
    pub level: usize,
    /// `counts[i]` is `n_{i+2}`.
    pub counts: Vec<u32>,
}

impl LocusSignature {
    /// `n_j`; zero outside `2..=level`.
    pub fn count(&self, j: usize) -> u32 {
        j.checked_sub(2)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn codimension(&self) -> u32 {
        self.counts.iter().sum()
    }
}

/// `I(inner) ⊆ I(outer)`: every `n_j` of `inner` is at least that of `outer`.
pub fn locus_contains(outer: &CodeWord, inner: &CodeWord) -> Result<bool, StrataError> {
    for w in [outer, inner] {
        if !w.is_valid() {
            return Err(StrataError::InvalidWord { word: w.to_string() });
        }
    }
    if outer.len() != inner.len() {
        return Err(StrataError::LengthMismatch {
            outer: outer.len(),
            inner: inner.len(),
        });
    }
    let (o, i) = (outer.signature(), inner.signature());
    Ok(o.counts.iter().zip(&i.counts).all(|(a, b)| b >= a))
}
