//! Corpus file format.
//!
//! UTF-8 text, one sentence pair per line:
//!
//! ```text
//! source words<TAB>target words[<TAB>splits]
//! ```
//!
//! Words are separated by single spaces; `splits` is a string over `{0,1}`
//! of length n-1. Lines starting with `#` are comments. Saving and loading
//! round-trips the data bit-exactly.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

use super::{Corpus, CorpusLine, ParallelText, Segmentation};

pub fn parse_corpus(input: &str) -> Result<Corpus> {
    let mut lines = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let mut fields = raw.split('\t');
        let (src, tgt) = match (fields.next(), fields.next()) {
            (Some(s), Some(t)) => (s, t),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected source<TAB>target".into(),
                })
            }
        };
        let text = ParallelText::parse(src, tgt).map_err(|e| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        let splits = match fields.next() {
            Some(bits) => {
                let s = Segmentation::parse(bits).map_err(|e| Error::Parse {
                    line: lineno,
                    msg: e.to_string(),
                })?;
                if s.len() + 1 != text.n() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!(
                            "split string of length {} does not fit a {}-word line",
                            s.len(),
                            text.n()
                        ),
                    });
                }
                Some(s)
            }
            None => None,
        };
        if fields.next().is_some() {
            return Err(Error::Parse { line: lineno, msg: "too many tab-separated fields".into() });
        }
        lines.push(CorpusLine { text, splits });
    }
    Ok(Corpus { lines })
}

pub fn write_corpus(corpus: &Corpus) -> String {
    let mut out = String::new();
    for line in &corpus.lines {
        out.push_str(&line.text.source().join(" "));
        out.push('\t');
        out.push_str(&line.text.target().join(" "));
        if let Some(s) = &line.splits {
            out.push('\t');
            out.push_str(&s.to_bit_string());
        }
        out.push('\n');
    }
    out
}

pub fn load_corpus(path: &Path) -> Result<Corpus> {
    parse_corpus(&fs::read_to_string(path)?)
}

pub fn save_corpus(corpus: &Corpus, path: &Path) -> Result<()> {
    fs::write(path, write_corpus(corpus))?;
    Ok(())
}
