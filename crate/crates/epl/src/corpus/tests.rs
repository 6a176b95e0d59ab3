use proptest::prelude::*;

use super::*;

pub(crate) fn fig1() -> ParallelText {
    ParallelText::parse("SOPHIE LEFT FOR PHILLY", "sophia went to philadelphia").unwrap()
}

fn pair(u: &str, v: &str) -> TokenPair {
    TokenPair::new(u.split(' ').collect::<Vec<_>>(), v.split(' ').collect::<Vec<_>>()).unwrap()
}

#[test]
fn segment_worked_example() {
    let d = fig1();
    let s = Segmentation::parse("101").unwrap();
    let toks = segment(&d, &s).unwrap();
    assert_eq!(toks.size(), 3);
    assert_eq!(
        toks.pairs(),
        &[
            pair("SOPHIE", "sophia"),
            pair("LEFT FOR", "went to"),
            pair("PHILLY", "philadelphia"),
        ]
    );
}

#[test]
fn segment_degenerate_splits() {
    let d = fig1();
    let all_ones = segment(&d, &Segmentation::all_separated(4)).unwrap();
    assert_eq!(all_ones.size(), 4);
    assert!(all_ones.pairs().iter().all(|p| p.len() == 1));

    let all_zeros = segment(&d, &Segmentation::unsegmented(4)).unwrap();
    assert_eq!(all_zeros.size(), 1);
    assert_eq!(all_zeros.pairs()[0].len(), 4);
}

#[test]
fn segment_rejects_wrong_length() {
    let d = fig1();
    assert!(matches!(segment(&d, &Segmentation::parse("10").unwrap()), Err(crate::Error::Dimension(_))));
}

#[test]
fn count_occurrences_worked_examples() {
    let d = fig1();
    let occ = count_occurrences(&d, &pair("LEFT FOR", "went to"));
    assert_eq!(occ.m(), 1);
    assert_eq!(occ.positions(), &[2]);

    // source matches at position 3 but the target side does not
    assert_eq!(count_occurrences(&d, &pair("FOR", "went")).m(), 0);

    let abab = ParallelText::parse("A B A B", "a b a b").unwrap();
    let occ = count_occurrences(&abab, &pair("A B", "a b"));
    assert_eq!(occ.m(), 2);
    assert_eq!(occ.positions(), &[1, 3]);
}

#[test]
fn assumption1_spacing() {
    let abab = ParallelText::parse("A B A B", "a b a b").unwrap();
    let occ = count_occurrences(&abab, &pair("A B", "a b"));
    assert!(!check_assumption1(&occ)); // starts 1 and 3 touch for a 2-word pair

    let spaced = ParallelText::parse("A B x x x x x x A B", "a b y y y y y y a b").unwrap();
    let occ = count_occurrences(&spaced, &pair("A B", "a b"));
    assert_eq!(occ.positions(), &[1, 9]);
    assert!(check_assumption1(&occ));

    // starts 1, 4, 7 with |u| = 2: gaps of exactly |u|+1 are allowed
    let tight = ParallelText::parse("A B x A B x A B", "a b y a b y a b").unwrap();
    let occ = count_occurrences(&tight, &pair("A B", "a b"));
    assert_eq!(occ.positions(), &[1, 4, 7]);
    assert!(check_assumption1(&occ));
}

#[test]
fn generator_plants_exactly_m_interior_copies() {
    let cfg = GeneratorConfig::new(100, pair("A B", "a b"), 3);
    let (text, truth, occ) = generate_synthetic(&cfg, 7).unwrap();
    assert_eq!(text.n(), 100);
    assert_eq!(occ.m(), 3);
    assert!(check_assumption1(&occ));
    assert!(occ.all_interior(text.n()));
    // the reference segmentation isolates each planted copy as a token
    let toks = segment(&text, &truth).unwrap();
    assert_eq!(toks.count(&cfg.planted), 3);
}

#[test]
fn generator_m_zero_means_absent() {
    let cfg = GeneratorConfig::new(40, pair("A B", "a b"), 0);
    let (text, _, occ) = generate_synthetic(&cfg, 3).unwrap();
    assert_eq!(occ.m(), 0);
    assert_eq!(count_occurrences(&text, &cfg.planted).m(), 0);
}

#[test]
fn generator_is_deterministic() {
    let cfg = GeneratorConfig::new(64, pair("A B", "a b"), 3);
    let a = generate_synthetic(&cfg, 11).unwrap();
    let b = generate_synthetic(&cfg, 11).unwrap();
    assert_eq!(a, b);
    let c = generate_synthetic(&cfg, 12).unwrap();
    assert_ne!(a.0, c.0);
}

#[test]
fn generator_rejects_infeasible() {
    let cfg = GeneratorConfig::new(4, pair("A B C", "a b c"), 2);
    assert!(matches!(generate_synthetic(&cfg, 1), Err(crate::Error::Config(_))));
}

#[test]
fn generator_satisfies_assumption1_across_seeds() {
    let cfg = GeneratorConfig::new(30, pair("A B", "a b"), 3);
    for seed in 0..1000 {
        let (text, _, occ) = generate_synthetic(&cfg, seed).unwrap();
        assert!(check_assumption1(&occ), "seed {seed}");
        assert!(occ.all_interior(text.n()), "seed {seed}");
        assert_eq!(occ.m(), 3, "seed {seed}");
    }
}

#[test]
fn corpus_file_worked_examples() {
    let c = parse_corpus("SOPHIE LEFT FOR PHILLY\tsophia went to philadelphia\n").unwrap();
    assert_eq!(c.lines.len(), 1);
    assert_eq!(c.lines[0].text.n(), 4);
    assert!(c.lines[0].splits.is_none());

    let c = parse_corpus("# comment\nSOPHIE LEFT FOR PHILLY\tsophia went to philadelphia\t101\n").unwrap();
    assert_eq!(c.lines[0].splits.as_ref().unwrap().to_bit_string(), "101");

    let err = parse_corpus("A B C\ta b c d\n");
    match err {
        Err(crate::Error::Parse { line, .. }) => assert_eq!(line, 1),
        other => panic!("expected parse error, got {other:?}"),
    }

    let err = parse_corpus("A B\ta b\t1\nA B C\ta b c\t11011\n");
    match err {
        Err(crate::Error::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected parse error, got {other:?}"),
    }
}

fn word_strategy() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::char::ranges(vec!['a'..='z', 'α'..='ω', '一'..='十'].into()), 1..4)
        .prop_map(|cs| cs.into_iter().collect())
}

fn text_strategy(max_n: usize) -> impl Strategy<Value = ParallelText> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(word_strategy(), n),
            prop::collection::vec(word_strategy(), n),
        )
            .prop_map(|(s, t)| ParallelText::new(s, t).unwrap())
    })
}

proptest! {
    #[test]
    fn segmentation_reconstructs_text(text in text_strategy(12), mask in any::<u64>()) {
        let s = Segmentation::from_mask(mask, text.n());
        let toks = segment(&text, &s).unwrap();
        prop_assert_eq!(toks.size(), s.ones() + 1);
        let src: Vec<String> = toks.pairs().iter().flat_map(|p| p.source().to_vec()).collect();
        let tgt: Vec<String> = toks.pairs().iter().flat_map(|p| p.target().to_vec()).collect();
        prop_assert_eq!(src.as_slice(), text.source());
        prop_assert_eq!(tgt.as_slice(), text.target());
    }

    #[test]
    fn corpus_roundtrip(texts in prop::collection::vec((text_strategy(8), any::<u64>(), any::<bool>()), 1..6)) {
        let lines = texts
            .into_iter()
            .map(|(text, mask, with_splits)| {
                let splits = with_splits.then(|| Segmentation::from_mask(mask, text.n()));
                CorpusLine { text, splits }
            })
            .collect();
        let corpus = Corpus::from_lines(lines);
        let written = write_corpus(&corpus);
        let reread = parse_corpus(&written).unwrap();
        prop_assert_eq!(&reread, &corpus);
        // saving what we loaded reproduces the bytes
        prop_assert_eq!(write_corpus(&reread), written);
    }

    #[test]
    fn count_occurrences_matches_alternative_scan(text in text_strategy(10), start in 0usize..10, len in 1usize..4) {
        prop_assume!(start + len <= text.n());
        let pair = TokenPair::new(text.source()[start..start + len].to_vec(), text.target()[start..start + len].to_vec()).unwrap();
        let occ = count_occurrences(&text, &pair);
        // independent scan: compare joined strings over every window
        let mut expect = Vec::new();
        for p in 0..=text.n() - len {
            if text.source()[p..p + len].join(" ") == pair.source_joined()
                && text.target()[p..p + len].join(" ") == pair.target_joined()
            {
                expect.push(p + 1);
            }
        }
        prop_assert_eq!(occ.positions(), expect.as_slice());
        prop_assert!(occ.positions().contains(&(start + 1)));
    }
}
