//! Data model for monotonic translation: aligned word strings, split
//! vectors, token pairs, occurrence counting, corpus files and synthetic
//! corpus generation.
//!
//! Source and target strings always have the same length; a segmentation is
//! shared by both sides, so every token pair aligns an equal number of
//! words. Word positions are 1-based throughout.

mod io;
mod synth;

pub use io::{load_corpus, parse_corpus, save_corpus, write_corpus};
pub use synth::{generate_synthetic, GeneratorConfig};

use crate::error::{Error, Result};

fn check_word(w: &str) -> Result<()> {
    if w.is_empty() {
        return Err(Error::Dimension("empty word".into()));
    }
    if w.chars().any(char::is_whitespace) {
        return Err(Error::Dimension(format!("word {w:?} contains whitespace")));
    }
    Ok(())
}

/// A pair of aligned word strings of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParallelText {
    source: Vec<String>,
    target: Vec<String>,
}

impl ParallelText {
    pub fn new<S: Into<String>>(source: Vec<S>, target: Vec<S>) -> Result<Self> {
        let source: Vec<String> = source.into_iter().map(Into::into).collect();
        let target: Vec<String> = target.into_iter().map(Into::into).collect();
        if source.len() != target.len() {
            return Err(Error::Dimension(format!(
                "source has {} words, target has {}",
                source.len(),
                target.len()
            )));
        }
        if source.is_empty() {
            return Err(Error::Dimension("text must contain at least one word".into()));
        }
        for w in source.iter().chain(target.iter()) {
            check_word(w)?;
        }
        Ok(ParallelText { source, target })
    }

    /// Split two space-separated strings into an aligned pair.
    pub fn parse(source: &str, target: &str) -> Result<Self> {
        Self::new(
            source.split_whitespace().collect::<Vec<_>>(),
            target.split_whitespace().collect::<Vec<_>>(),
        )
    }

    pub fn n(&self) -> usize {
        self.source.len()
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }
}

/// A split vector: entry `i` (0-based) decides whether word `i+1` starts a
/// new token. `true` separates, `false` keeps both words in one token.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segmentation {
    splits: Vec<bool>,
}

impl Segmentation {
    pub fn new(splits: Vec<bool>) -> Self {
        Segmentation { splits }
    }

    /// All-ones: every word its own token.
    pub fn all_separated(n_words: usize) -> Self {
        Segmentation { splits: vec![true; n_words.saturating_sub(1)] }
    }

    /// All-zeros: the whole string is one token.
    pub fn unsegmented(n_words: usize) -> Self {
        Segmentation { splits: vec![false; n_words.saturating_sub(1)] }
    }

    /// Interpret the low `n_words-1` bits of `mask` as the split vector
    /// (bit `i` is split `i`). Used by the enumeration loops.
    pub fn from_mask(mask: u64, n_words: usize) -> Self {
        let splits = (0..n_words.saturating_sub(1)).map(|i| mask >> i & 1 == 1).collect();
        Segmentation { splits }
    }

    /// Parse a string over `{0,1}`, e.g. `"101"`.
    pub fn parse(s: &str) -> Result<Self> {
        let splits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Dimension(format!("invalid split character {c:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(Segmentation { splits })
    }

    pub fn splits(&self) -> &[bool] {
        &self.splits
    }

    pub fn len(&self) -> usize {
        self.splits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splits.is_empty()
    }

    /// Number of separating boundaries; the segmented text has this +1 tokens.
    pub fn ones(&self) -> usize {
        self.splits.iter().filter(|&&b| b).count()
    }

    pub fn zeros(&self) -> usize {
        self.splits.len() - self.ones()
    }

    pub fn to_bit_string(&self) -> String {
        self.splits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl std::fmt::Display for Segmentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// An aligned source/target token: equal-length word runs on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TokenPair {
    source: Vec<String>,
    target: Vec<String>,
}

impl TokenPair {
    pub fn new<S: Into<String>>(source: Vec<S>, target: Vec<S>) -> Result<Self> {
        let source: Vec<String> = source.into_iter().map(Into::into).collect();
        let target: Vec<String> = target.into_iter().map(Into::into).collect();
        if source.len() != target.len() || source.is_empty() {
            return Err(Error::Dimension(format!(
                "token pair sides must have equal nonzero length, got {} and {}",
                source.len(),
                target.len()
            )));
        }
        for w in source.iter().chain(target.iter()) {
            check_word(w)?;
        }
        Ok(TokenPair { source, target })
    }

    /// Parse `"LEFT FOR|went to"`.
    pub fn parse(s: &str) -> Result<Self> {
        let (u, v) = s
            .split_once('|')
            .ok_or_else(|| Error::Config(format!("token pair {s:?} must be written as \"u words|v words\"")))?;
        Self::new(
            u.split_whitespace().collect::<Vec<_>>(),
            v.split_whitespace().collect::<Vec<_>>(),
        )
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    /// Number of words on each side.
    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn source_joined(&self) -> String {
        self.source.join(" ")
    }

    pub fn target_joined(&self) -> String {
        self.target.join(" ")
    }
}

impl std::fmt::Display for TokenPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.source_joined(), self.target_joined())
    }
}

/// The token string obtained by applying one segmentation to a text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizedData {
    pairs: Vec<TokenPair>,
}

impl TokenizedData {
    pub fn pairs(&self) -> &[TokenPair] {
        &self.pairs
    }

    /// Number of tokens.
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Occurrences of `pair` as a token of this segmented text.
    pub fn count(&self, pair: &TokenPair) -> usize {
        self.pairs.iter().filter(|p| *p == pair).count()
    }
}

/// All start positions (1-based) of a token pair in a text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceSet {
    pair: TokenPair,
    positions: Vec<usize>,
}

impl OccurrenceSet {
    pub fn pair(&self) -> &TokenPair {
        &self.pair
    }

    /// Sorted 1-based start positions.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// The occurrence count `m`.
    pub fn m(&self) -> usize {
        self.positions.len()
    }

    /// True when every occurrence keeps clear of both string ends, so both
    /// flanking split variables exist.
    pub fn all_interior(&self, n: usize) -> bool {
        let len = self.pair.len();
        self.positions.iter().all(|&p| p >= 2 && p + len - 1 <= n - 1)
    }
}

/// Cut a text into tokens along a split vector.
pub fn segment(text: &ParallelText, s: &Segmentation) -> Result<TokenizedData> {
    if s.len() + 1 != text.n() {
        return Err(Error::Dimension(format!(
            "split vector of length {} cannot segment a text of {} words",
            s.len(),
            text.n()
        )));
    }
    let mut pairs = Vec::with_capacity(s.ones() + 1);
    let mut start = 0usize;
    for end in 1..=text.n() {
        let boundary = end == text.n() || s.splits()[end - 1];
        if boundary {
            pairs.push(TokenPair {
                source: text.source[start..end].to_vec(),
                target: text.target[start..end].to_vec(),
            });
            start = end;
        }
    }
    Ok(TokenizedData { pairs })
}

/// Exhaustive scan for every start position where both sides of `pair`
/// match the text. Deliberately the naive window comparison; everything
/// else in the crate is checked against it.
pub fn count_occurrences(text: &ParallelText, pair: &TokenPair) -> OccurrenceSet {
    let len = pair.len();
    let mut positions = Vec::new();
    if len <= text.n() {
        for start in 0..=text.n() - len {
            let src_match = text.source[start..start + len] == *pair.source();
            let tgt_match = text.target[start..start + len] == *pair.target();
            if src_match && tgt_match {
                positions.push(start + 1);
            }
        }
    }
    OccurrenceSet { pair: pair.clone(), positions }
}

/// True when no two occurrences overlap or touch: consecutive start
/// positions satisfy `p' >= p + |u| + 1`.
pub fn check_assumption1(occ: &OccurrenceSet) -> bool {
    let len = occ.pair.len();
    occ.positions.windows(2).all(|w| w[1] >= w[0] + len + 1)
}

/// One line of a corpus file: a text plus an optional reference split vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusLine {
    pub text: ParallelText,
    pub splits: Option<Segmentation>,
}

impl CorpusLine {
    pub fn new(text: ParallelText, splits: Option<Segmentation>) -> Result<Self> {
        if let Some(s) = &splits {
            if s.len() + 1 != text.n() {
                return Err(Error::Dimension(format!(
                    "split string of length {} does not fit a {}-word line",
                    s.len(),
                    text.n()
                )));
            }
        }
        Ok(CorpusLine { text, splits })
    }
}

/// A corpus is a list of independent lines; tokens never cross lines.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Corpus {
    pub lines: Vec<CorpusLine>,
}

impl Corpus {
    pub fn from_lines(lines: Vec<CorpusLine>) -> Self {
        Corpus { lines }
    }

    pub fn single(text: ParallelText) -> Self {
        Corpus { lines: vec![CorpusLine { text, splits: None }] }
    }

    /// Total word count over all lines.
    pub fn word_count(&self) -> usize {
        self.lines.iter().map(|l| l.text.n()).sum()
    }

    /// Shortest line length; the window size of an exhaustive grammar may
    /// not exceed it.
    pub fn min_line_len(&self) -> Option<usize> {
        self.lines.iter().map(|l| l.text.n()).min()
    }

    /// Occurrences of `pair` summed over lines (positions are per-line).
    pub fn count_occurrences(&self, pair: &TokenPair) -> usize {
        self.lines.iter().map(|l| count_occurrences(&l.text, pair).m()).sum()
    }
}

#[cfg(test)]
mod tests;
