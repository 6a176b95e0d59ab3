//! Synthetic corpus generation with a planted token pair.
//!
//! The generator lays out `m` copies of the planted pair with at least one
//! filler word between copies (so no two occurrences overlap or touch) and,
//! by default, away from both string ends (so every occurrence carries both
//! flanking split variables). Filler words are drawn from a fresh
//! vocabulary; the result is re-counted after generation and regenerated on
//! the rare collision where fillers form an extra copy of the pair.

use rand::Rng;

use crate::error::{Error, Result};
use crate::prior::derive_rng;

use super::{count_occurrences, OccurrenceSet, ParallelText, Segmentation, TokenPair};

const MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    /// Total word count of the generated string.
    pub n: usize,
    /// The pair to plant.
    pub planted: TokenPair,
    /// How many copies to plant.
    pub m: usize,
    /// Keep every occurrence clear of positions 1 and n.
    pub interior_only: bool,
    /// Filler vocabulary sizes (source/target words are paired one-to-one).
    pub source_vocab: usize,
    pub target_vocab: usize,
    /// Maximum length of a filler token in the returned reference
    /// segmentation; 1 keeps every filler word its own token.
    pub filler_token_max_len: usize,
}

impl GeneratorConfig {
    pub fn new(n: usize, planted: TokenPair, m: usize) -> Self {
        GeneratorConfig {
            n,
            planted,
            m,
            interior_only: true,
            source_vocab: 50,
            target_vocab: 50,
            filler_token_max_len: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("corpus length must be positive".into()));
        }
        if self.source_vocab == 0 || self.target_vocab == 0 {
            return Err(Error::Config("vocabulary sizes must be positive".into()));
        }
        if self.filler_token_max_len == 0 {
            return Err(Error::Config("filler token length must be positive".into()));
        }
        Ok(())
    }

    /// 1-based start positions are sampled from `[lo, hi]` with at least
    /// `|u|+1` between consecutive starts.
    fn placement_range(&self) -> Result<(usize, usize)> {
        let len = self.planted.len();
        let (lo, hi) = if self.interior_only {
            (2usize, self.n.saturating_sub(len))
        } else {
            (1usize, (self.n + 1).saturating_sub(len))
        };
        if self.m == 0 {
            return Ok((lo, hi));
        }
        let span = (self.m - 1) * (len + 1);
        if hi < lo || hi - lo < span {
            return Err(Error::Config(format!(
                "cannot place {} non-touching copies of a {}-word pair in {} words{}",
                self.m,
                len,
                self.n,
                if self.interior_only { " away from the ends" } else { "" }
            )));
        }
        Ok((lo, hi - span))
    }
}

/// Deterministic per seed. Returns the text, a reference segmentation in
/// which every planted copy is a token, and the verified occurrence set of
/// the planted pair.
pub fn generate_synthetic(
    cfg: &GeneratorConfig,
    seed: u64,
) -> Result<(ParallelText, Segmentation, OccurrenceSet)> {
    cfg.validate()?;
    let (lo, hi) = cfg.placement_range()?;
    let len = cfg.planted.len();

    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = derive_rng(seed, "corpus-synth", attempt as u64);

        let mut starts: Vec<usize> = (0..cfg.m).map(|_| rng.random_range(lo..=hi)).collect();
        starts.sort_unstable();
        for (i, s) in starts.iter_mut().enumerate() {
            *s += i * (len + 1);
        }

        let mut source = vec![String::new(); cfg.n];
        let mut target = vec![String::new(); cfg.n];
        for &p in &starts {
            for k in 0..len {
                source[p - 1 + k] = cfg.planted.source()[k].clone();
                target[p - 1 + k] = cfg.planted.target()[k].clone();
            }
        }
        for i in 0..cfg.n {
            if source[i].is_empty() {
                source[i] = format!("s{}", rng.random_range(0..cfg.source_vocab));
                target[i] = format!("t{}", rng.random_range(0..cfg.target_vocab));
            }
        }
        let text = ParallelText::new(source, target)?;

        let occ = count_occurrences(&text, &cfg.planted);
        if occ.positions() != starts.as_slice() {
            continue; // filler collided with the planted pattern; redraw
        }

        let splits = reference_segmentation(cfg, &starts, &mut rng);
        return Ok((text, splits, occ));
    }
    Err(Error::Config(format!(
        "gave up after {MAX_ATTEMPTS} attempts: filler text keeps forming extra copies of {}",
        cfg.planted
    )))
}

/// Splits that isolate each planted copy as one token and cut filler into
/// tokens of at most `filler_token_max_len` words.
fn reference_segmentation(
    cfg: &GeneratorConfig,
    starts: &[usize],
    rng: &mut impl Rng,
) -> Segmentation {
    let len = cfg.planted.len();
    let n = cfg.n;
    let mut splits = vec![true; n.saturating_sub(1)];
    let inside_plant = |b: usize| starts.iter().any(|&p| b >= p && b < p + len - 1);
    let mut run = 0usize;
    for b in 1..n {
        // boundary b sits between words b and b+1 (1-based)
        if inside_plant(b) {
            splits[b - 1] = false;
            run = 0;
        } else if starts.iter().any(|&p| b + 1 >= p && b + 1 < p + len) || cfg.filler_token_max_len == 1 {
            run = 0; // next word starts a planted copy, or fillers stay single
        } else if run + 1 < cfg.filler_token_max_len && rng.random_bool(0.5) {
            splits[b - 1] = false;
            run += 1;
        } else {
            run = 0;
        }
    }
    Segmentation::new(splits)
}
