use codemix::{
    aggregate, alternate, count_sentence, dampening, generate, language_distribution, parse_str, write_to_string,
    Arrangement, Corpus, Dampening, Format, GenSpec, IndexName, LangCode, LanguageTag, MetricConfig, Sentence,
    SentenceCounts, SentenceMetrics, TagPolicy, Token, UnknownTagAction,
};
use proptest::prelude::*;

fn tag_of(code: u8) -> LanguageTag {
    if code == 0 {
        LanguageTag::undefined()
    } else {
        LanguageTag::language(&format!("L{code}"))
    }
}

fn sentence_of(codes: &[u8]) -> Sentence {
    Sentence::new(0, codes.iter().enumerate().map(|(i, &c)| Token::new(format!("w{i}"), tag_of(c))).collect())
}

fn metrics_of(codes: &[u8]) -> (SentenceCounts, SentenceMetrics) {
    codemix::analyze_sentence(sentence_of(codes).tags(), &MetricConfig::default()).unwrap()
}

/// Tag codes: 0 is undefined, 1..=4 are languages.
fn tag_codes(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..=4, 1..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn indices_stay_in_range(codes in tag_codes(40)) {
        let (c, m) = metrics_of(&codes);
        let w = c.words() as f64;
        prop_assert!((0.0..=1.0).contains(&m.sf));
        prop_assert!(m.lf == 0.0 || (1.0..=w).contains(&m.lf));
        prop_assert_eq!(m.lf == 0.0, c.language_words() == 0);
        if c.language_words() > 0 {
            let cap = 1.0 - 1.0 / c.language_words() as f64;
            prop_assert!(m.mf >= 0.0 && m.mf <= cap + 1e-12);
            prop_assert!(m.cmi >= 0.0 && m.cmi <= 100.0 * cap + 1e-9);
        }
        for v in [m.cf1, m.cf2, m.cf3] {
            prop_assert!(v.is_finite() && (0.0..100.0).contains(&v));
        }
    }

    #[test]
    fn zero_law(codes in prop::collection::vec(prop_oneof![Just(0u8), Just(3u8)], 1..30)) {
        let (c, m) = metrics_of(&codes);
        prop_assert!(c.languages() <= 1);
        prop_assert_eq!([m.mf, m.sf, m.cmi, m.cf1, m.cf2, m.cf3], [0.0; 6]);
    }

    #[test]
    fn dampening_bounds(words in 2usize..500, t in 0.0f64..=1.0) {
        let lf = 1.0 + t * (words as f64 - 1.0);
        for kind in [Dampening::Linear, Dampening::Arctan] {
            let d = dampening(lf, words, kind).unwrap();
            prop_assert!((1.0..=1.25).contains(&d), "{kind:?} lf={lf} W={words} -> {d}");
        }
    }

    #[test]
    fn cf2_equals_cf3_when_every_word_is_its_own_language(n in 2u8..=12) {
        let codes: Vec<u8> = (1..=n).collect();
        let (_, m) = metrics_of(&codes);
        prop_assert_eq!(m.lf, 1.0);
        prop_assert!((m.cf2 - m.cf3).abs() < 1e-9);
    }

    #[test]
    fn more_switches_mean_more_complexity(
        counts in prop::collection::vec(1usize..6, 2..4),
        undefined in 0usize..4,
        pick in any::<prop::sample::Index>(),
    ) {
        let lw: usize = counts.iter().sum();
        let words = lw + undefined;
        let per: Vec<(LangCode, usize)> =
            counts.iter().enumerate().map(|(i, &n)| (LangCode::new(&format!("L{}", i + 1)).unwrap(), n)).collect();
        // any S in [1, lw - 2] has a valid successor
        prop_assume!(lw >= 3);
        let s = 1 + pick.index(lw - 2);
        let lo = SentenceCounts::from_parts(words, undefined, per.clone(), s).unwrap();
        let hi = SentenceCounts::from_parts(words, undefined, per, s + 1).unwrap();
        let cfg = MetricConfig::default();
        let (a, b) = (SentenceMetrics::from_counts(&lo, &cfg).unwrap(), SentenceMetrics::from_counts(&hi, &cfg).unwrap());
        prop_assert!(b.sf > a.sf);
        prop_assert!(b.cf1 > a.cf1 && b.cf2 > a.cf2 && b.cf3 > a.cf3);
    }

    #[test]
    fn undefined_tokens_dilute(codes in tag_codes(30)) {
        let (c, m) = metrics_of(&codes);
        prop_assume!(c.languages() >= 2 && c.switches() >= 1);
        let mut longer = codes.clone();
        longer.push(0);
        let (_, d) = metrics_of(&longer);
        prop_assert_eq!(d.mf, m.mf);
        prop_assert_eq!(d.cmi, m.cmi);
        prop_assert!(d.sf < m.sf);
        prop_assert!(d.lf > m.lf);
        prop_assert!(d.cf2 <= m.cf2 && d.cf3 <= m.cf3);
    }

    #[test]
    fn round_trip_both_formats(
        sentences in prop::collection::vec(
            prop::collection::vec(("[a-zA-Z0-9/().,!?'-]{1,6}", 0u8..=5), 1..8),
            1..6,
        )
    ) {
        let sentences: Vec<Sentence> = sentences
            .into_iter()
            .enumerate()
            .map(|(i, toks)| Sentence::new(i, toks.into_iter().map(|(s, c)| Token::new(s, tag_of(c))).collect()))
            .collect();
        let corpus = Corpus::new("rt", sentences, TagPolicy::default());
        for format in [Format::Column, Format::Inline] {
            let text = write_to_string(&corpus, format).unwrap();
            let back = parse_str(&text, format, "rt", &TagPolicy::default()).unwrap();
            prop_assert_eq!(&back.corpus, &corpus);
            prop_assert_eq!(back.skipped_empty, 0);
        }
    }

    #[test]
    fn aggregate_ignores_sentence_order(seed in any::<u64>(), rotate in 0usize..40) {
        let spec = GenSpec { min_words: 3, max_words: 15, ..GenSpec::fixed(40, 3, 3, Arrangement::Random, seed) };
        let base = generate(&spec.with_undefined_ratio(0.2)).unwrap();
        let mut shuffled = base.sentences.clone();
        shuffled.rotate_left(rotate);
        shuffled.reverse();
        let other = Corpus::new(base.name.clone(), shuffled, base.policy.clone());
        let cfg = MetricConfig::default();
        let (x, y) = (aggregate(&base, &cfg).unwrap(), aggregate(&other, &cfg).unwrap());
        prop_assert_eq!(&x.summary, &y.summary);
        prop_assert_eq!(&x.distribution, &y.distribution);
        prop_assert_eq!(x.cmi_all, y.cmi_all);
        prop_assert_eq!(x.cmi_mixed, y.cmi_mixed);
    }

    #[test]
    fn corpus_summaries_are_consistent(seed in any::<u64>(), ratio in 0.0f64..0.5) {
        let spec = GenSpec { min_words: 2, max_words: 20, ..GenSpec::fixed(25, 2, 2, Arrangement::Random, seed) };
        let corpus = generate(&spec.with_undefined_ratio(ratio)).unwrap();
        let report = aggregate(&corpus, &MetricConfig::default()).unwrap();
        prop_assert!(report.cmi_all <= report.cmi_mixed);
        for row in &report.summary {
            prop_assert!(row.min <= row.mean && row.mean <= row.max, "{:?}", row);
        }
        prop_assert!(report.summary_row(IndexName::WordsPerSentence).min >= 1.0);
        let total: f64 = language_distribution(&corpus).unwrap().iter().map(|r| r.percentage).sum();
        prop_assert!((total - 100.0).abs() <= 0.01);
        prop_assert_eq!(report.per_sentence.len(), report.sentence_count);
    }

    #[test]
    fn normalization_is_total_when_lenient(raw in "[^\\s]{1,8}") {
        let policy = TagPolicy::default().with_unknown_tag_action(UnknownTagAction::TreatUndefined);
        prop_assert!(policy.normalize(&raw).is_ok());
    }

    #[test]
    fn synthetic_arrangements_hit_their_switch_counts(words in 2usize..30, languages in 2usize..5, seed in any::<u64>()) {
        prop_assume!(languages <= words);
        let alt = generate(&GenSpec::fixed(1, words, languages, Arrangement::Alternating, seed)).unwrap();
        let (_, m) = metrics_of_sentence(&alt.sentences[0]);
        prop_assert_eq!(m.sf, 1.0);

        let blocked = generate(&GenSpec::fixed(1, words, 2, Arrangement::Blocked, seed)).unwrap();
        let c = count_sentence(blocked.sentences[0].tags()).unwrap();
        prop_assert_eq!(c.switches(), 1);
    }
}

fn metrics_of_sentence(s: &Sentence) -> (SentenceCounts, SentenceMetrics) {
    codemix::analyze_sentence(s.tags(), &MetricConfig::default()).unwrap()
}

/// All distinct orderings of a multiset, by brute force.
fn distinct_permutations(counts: &mut [usize], prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if counts.iter().all(|&c| c == 0) {
        out.push(prefix.clone());
        return;
    }
    for lang in 0..counts.len() {
        if counts[lang] > 0 {
            counts[lang] -= 1;
            prefix.push(lang as u8 + 1);
            distinct_permutations(counts, prefix, out);
            prefix.pop();
            counts[lang] += 1;
        }
    }
}

fn multisets(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            multisets(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[test]
fn permutation_bound_against_brute_force() {
    for total in 1..=8 {
        for mut counts in multisets(total, 3) {
            let max_w = *counts.iter().max().unwrap();
            let mut perms = Vec::new();
            distinct_permutations(&mut counts, &mut Vec::new(), &mut perms);
            let best = perms.iter().map(|p| count_sentence(sentence_of(p).tags()).unwrap().switches()).max().unwrap();
            assert_eq!(best == total - 1, max_w <= total.div_ceil(2), "{counts:?}");

            // the alternating rearrangement reaches the brute-force optimum
            let greedy = alternate(&sentence_of(&perms[0]));
            assert_eq!(count_sentence(greedy.tags()).unwrap().switches(), best, "{counts:?}");

            // any maximizing arrangement with S = W'-1 has no equal neighbours
            for p in &perms {
                let s = count_sentence(sentence_of(p).tags()).unwrap().switches();
                if s == total - 1 {
                    assert!(p.windows(2).all(|w| w[0] != w[1]));
                }
            }
        }
    }
}
