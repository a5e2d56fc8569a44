mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{all_words, nonempty_words, par_failures, sweep_words, verdict};
use num_rational::Ratio;
use palrich::balance::{
    delete_letter, gap_profile, is_balanced, is_periodic_balanced, matches_wr_family, wr_family_word, FrequencyTable,
    WRFamilySpec,
};
use palrich::morphisms::{
    check_mpr_hypotheses, doubling, insertion, is_class_p, is_special, preserves_richness_empirical, psi, theta,
};
use palrich::oracle::{
    enumerate_canonical_words, naive_balanced, naive_defective_positions, naive_oddities, naive_palindrome_set,
    naive_weakly_rich,
};
use palrich::palindrome_index::PalindromeIndex;
use palrich::periodic::{is_power_almost_rich, is_power_rich, periodic_defect, PeriodicDefect};
use palrich::richness::{
    is_rich, is_weakly_rich, oddities, palindromic_closure, rich_extension_fastpath, rich_extensions, richness_report,
};
use palrich::words::{alphabet, conjugates, factor_set, is_palindrome, is_primitive, is_reversal_closed, reverse};
use palrich::{InfiniteWordSpec, Letter, Morphism, Word};

fn periodic(period: &[Letter], n: usize) -> Word {
    InfiniteWordSpec::periodic(period).unwrap().prefix(n).unwrap()
}

fn morphism(pairs: &[(u8, &str)]) -> Morphism {
    Morphism::from_pairs(pairs).unwrap()
}

fn check<F>(words: &[Word], f: F)
where
    F: Fn(&Word) -> Option<String> + Sync,
{
    verdict(par_failures(words, f)).unwrap();
}

/// Primitive periods of length `1..=max_len` over at most 3 letters, up to
/// renaming.
fn canonical_periods(max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|n| enumerate_canonical_words(3, n).unwrap()).filter(|u| is_primitive(u).unwrap()).collect()
}

fn corpus_periods() -> Vec<Word> {
    [
        "aabbaabab",
        "abcba",
        "abc",
        "abcbac",
        "aabacabaac",
        "abcabcacbacb",
        "aacbccbcacbc",
        "1213121",
        "1213",
        "abacaba",
        "aab",
        "ab",
        "abaab",
        "abacabad",
    ]
    .into_iter()
    .map(Word::from)
    .collect()
}

#[test]
fn index_matches_oracle() {
    check(&sweep_words(), |w| {
        let idx = PalindromeIndex::build(w);
        let naive = naive_palindrome_set(w).unwrap();
        if idx.distinct_palindrome_count() != naive.len() {
            return Some(format!("{w}: count {} vs {}", idx.distinct_palindrome_count(), naive.len()));
        }
        if idx.distinct_palindrome_count() > w.len() + 1 {
            return Some(format!("{w}: more than |w|+1 palindromes"));
        }
        let ours = richness_report(w, false).defective_positions;
        (ours != naive_defective_positions(w).unwrap()).then(|| format!("{w}: ups flags differ"))
    });
}

#[test]
fn richness_closures() {
    check(&sweep_words(), |w| {
        if !is_rich(w) {
            return None;
        }
        if !is_rich(&reverse(w)) {
            return Some(format!("{w}: reversal not rich"));
        }
        if w.len() > 1 && !(is_rich(&w[1..]) && is_rich(&w[..w.len() - 1])) {
            return Some(format!("{w}: a factor is not rich"));
        }
        if !is_rich(&palindromic_closure(w)) {
            return Some(format!("{w}: closure not rich"));
        }
        if !w.is_empty() {
            let (right, left) = rich_extensions(w).unwrap();
            if right.is_empty() || left.is_empty() {
                return Some(format!("{w}: no rich extension"));
            }
        }
        for x in alphabet(w) {
            if rich_extension_fastpath(w, x).unwrap() == Some(true) {
                let mut wx = w.clone();
                wx.push(x);
                if !is_rich(&wx) {
                    return Some(format!("{w}{}: fastpath wrong", char::from(x)));
                }
            }
        }
        None
    });
}

#[test]
fn oddities_and_weak_richness_match_oracle() {
    let words: Vec<Word> = all_words(3, 8);
    check(&words, |w| {
        let ours: BTreeSet<(Word, Word)> =
            oddities(w).into_iter().map(|o| (o.representative, o.incriminated_palindrome)).collect();
        if ours != naive_oddities(w).unwrap() {
            return Some(format!("{w}: oddities differ"));
        }
        if is_weakly_rich(w) != naive_weakly_rich(w).unwrap() {
            return Some(format!("{w}: weak richness differs"));
        }
        (is_balanced(w) != naive_balanced(w).unwrap()).then(|| format!("{w}: balance differs"))
    });
}

#[test]
fn rich_words_with_equal_palindromes_are_abelian_equivalent() {
    let mut by_pal: BTreeMap<BTreeSet<Word>, Vec<(Letter, usize)>> = BTreeMap::new();
    for w in all_words(2, 10).into_iter().chain(all_words(3, 8)) {
        if !is_rich(&w) {
            continue;
        }
        let counts: Vec<(Letter, usize)> =
            alphabet(&w).into_iter().map(|x| (x, w.iter().filter(|&&y| y == x).count())).collect();
        let pal = naive_palindrome_set(&w).unwrap();
        if let Some(seen) = by_pal.get(&pal) {
            assert_eq!(seen, &counts, "{w}");
        } else {
            by_pal.insert(pal, counts);
        }
    }
}

#[test]
fn rich_periodic_words_are_reversal_closed_with_growing_palindromic_prefixes() {
    for u in canonical_periods(7).into_iter().chain(corpus_periods()) {
        if is_power_almost_rich(&u).unwrap() {
            let w = periodic(&u, 3 * u.len());
            for n in 0..=u.len() {
                assert!(is_reversal_closed(&factor_set(&w, n)), "{u} at n={n}");
            }
        }
        if is_power_rich(&u).unwrap() {
            let counts: Vec<usize> = (1..=6)
                .map(|k| {
                    let w = periodic(&u, k * u.len());
                    (1..=w.len()).filter(|&i| is_palindrome(&w[..i])).count()
                })
                .collect();
            assert!(counts.windows(2).all(|c| c[0] < c[1]), "{u}: {counts:?}");
        }
    }
}

#[test]
fn periodic_defect_zero_iff_power_rich() {
    check(&nonempty_words(3, 8), |w| {
        let d = periodic_defect(w).unwrap();
        if (d == PeriodicDefect::Finite(0)) != is_power_rich(w).unwrap() {
            return Some(format!("{w}: defect {d}"));
        }
        (d.finite().is_some() != is_power_almost_rich(w).unwrap()).then(|| format!("{w}: finiteness"))
    });
}

#[test]
fn balanced_words_have_two_consecutive_gaps() {
    check(&all_words(3, 9), |w| {
        if !is_balanced(w) {
            return None;
        }
        alphabet(w).into_iter().find_map(|x| {
            let gaps = gap_profile(w, x).gaps;
            let ok = gaps.len() <= 2 && gaps.iter().max().unwrap_or(&0) - gaps.iter().min().unwrap_or(&0) <= 1;
            (!ok).then(|| format!("{w}: gaps of {} are {gaps:?}", char::from(x)))
        })
    });
}

#[test]
fn deleting_a_frequent_letter_keeps_balance() {
    for u in canonical_periods(10) {
        if !is_periodic_balanced(&u).unwrap() {
            continue;
        }
        let table = FrequencyTable::of_period(&u).unwrap();
        for (x, f) in table.frequencies {
            let rest = delete_letter(&u, x);
            if f >= Ratio::new(1, 3) && !rest.is_empty() {
                assert!(is_periodic_balanced(&rest).unwrap(), "{u} without {}", char::from(x));
            }
        }
    }
}

#[test]
fn family_frequencies() {
    for k in 3..=5 {
        let mut specs: Vec<WRFamilySpec> = (1..=3).map(|n| WRFamilySpec::Family1 { k, n }).collect();
        specs.extend((1..=k - 2).map(|j| WRFamilySpec::Family2 { k, j }));
        for spec in specs {
            let p = wr_family_word(spec).unwrap().period().unwrap().clone();
            let table = FrequencyTable::of_period(&p).unwrap();
            let distinct = matches!(spec, WRFamilySpec::Family2 { j, .. } if j == k - 2);
            assert_eq!(table.all_distinct(), distinct, "{spec}");
            let total: Ratio<usize> = table.frequencies.values().copied().sum();
            assert_eq!(total, Ratio::from_integer(1));
        }
    }
}

#[test]
fn balanced_rich_periods_are_episturmian() {
    check(&canonical_periods(10), |u| {
        if alphabet(u).len() < 3 || !is_periodic_balanced(u).unwrap() || !is_power_rich(u).unwrap() {
            return None;
        }
        matches_wr_family(u).unwrap().is_none().then(|| format!("{u}"))
    });
}

#[test]
fn balanced_with_few_oddities_is_episturmian_or_has_equal_frequencies() {
    check(&canonical_periods(10), |u| {
        let k = alphabet(u).len();
        if k < 3 || !is_periodic_balanced(u).unwrap() {
            return None;
        }
        if oddities(&Word::from(u.as_bytes()).pow(3)).len() >= k {
            return None;
        }
        let ok = matches_wr_family(u).unwrap().is_some() || !FrequencyTable::of_period(u).unwrap().all_distinct();
        (!ok).then(|| format!("{u}"))
    });
}

#[test]
fn psi_image_balanced_implies_preimage_balanced() {
    check(&canonical_periods(7), |t| {
        let alph: Vec<Letter> = alphabet(t).into_iter().collect();
        b"abc".iter().copied().find_map(|a| {
            let s = psi(a, &alph).apply(t).unwrap();
            (is_periodic_balanced(&s).unwrap() && !is_periodic_balanced(t).unwrap())
                .then(|| format!("{t} under ψ_{}", char::from(a)))
        })
    });
}

#[test]
fn doubling_doubles_defects() {
    check(&canonical_periods(7), |u| {
        if !is_power_almost_rich(u).unwrap() {
            return None;
        }
        let w = periodic(u, 6 * u.len());
        let before = richness_report(&w, false).defective_positions;
        let after = richness_report(&doubling(b"abc").apply(&w).unwrap(), false).defective_positions;
        let want: Vec<usize> = before.iter().flat_map(|&p| [2 * p - 1, 2 * p]).collect();
        (after != want).then(|| format!("{u}: {before:?} -> {after:?}"))
    });
}

fn special_corpus() -> Vec<Morphism> {
    vec![
        morphism(&[(b'a', "aabbaa"), (b'b', "bab")]),
        morphism(&[(b'a', "abb"), (b'b', "ac"), (b'c', "a")]),
        morphism(&[(b'a', "aba"), (b'b', "bcb"), (b'c', "cac")]),
        morphism(&[(b'a', "aab"), (b'b', "ab")]),
        psi(b'a', b"abc").compose(&psi(b'b', b"abc")).unwrap(),
    ]
}

#[test]
fn special_morphisms_do_not_lower_defect() {
    let periods: Vec<Word> = canonical_periods(6);
    for m in special_corpus() {
        let Some(cert) = is_class_p(&m) else { continue };
        if cert.shift != 0 {
            continue;
        }
        let special = is_special(&m, &cert).unwrap().is_special();
        let injective = m.has_distinct_images();
        if !(special || injective) {
            continue;
        }
        let domain: BTreeSet<Letter> = m.domain().collect();
        let usable: Vec<Word> = periods.iter().filter(|t| alphabet(t).is_subset(&domain)).cloned().collect();
        check(&usable, |t| {
            if !is_power_almost_rich(t).unwrap() {
                return None;
            }
            let image = m.apply(t).unwrap();
            let dt = PalindromeIndex::build(&periodic(t, 6 * t.len())).defect();
            let ds = PalindromeIndex::build(&periodic(&image, 6 * image.len())).defect();
            if special && is_power_almost_rich(&image).unwrap() != is_power_almost_rich(t).unwrap() {
                return Some(format!("{m} on {t}: almost richness differs"));
            }
            (ds < dt).then(|| format!("{m} on {t}: defect {dt} -> {ds}"))
        });
    }
}

#[test]
fn preserving_morphisms_have_rich_fixed_points() {
    let cases = [
        (insertion(b'a', b"ab"), b'a'),
        (psi(b'a', b"ab").compose(&psi(b'b', b"ab")).unwrap(), b'a'),
        (psi(b'a', b"abc").compose(&psi(b'b', b"abc")).unwrap().compose(&psi(b'c', b"abc")).unwrap(), b'a'),
        (theta(b'a', 2, b"ab"), b'a'),
    ];
    for (m, a) in cases {
        if !m.is_prolongable(a) {
            continue;
        }
        let alph: Vec<Letter> = m.domain().collect();
        assert!(preserves_richness_empirical(&m, 8, &alph).unwrap().preserves(), "{m}");
        let w = InfiniteWordSpec::morphic(m.clone(), a).unwrap().prefix(500).unwrap();
        assert!(is_rich(&w), "{m}");
    }
}

#[test]
fn empirical_converse_of_preservation() {
    let corpus = [
        morphism(&[(b'a', "baa"), (b'b', "baba")]),
        morphism(&[(b'a', "aba"), (b'b', "bcb"), (b'c', "cbc")]),
        morphism(&[(b'a', "aabbaa"), (b'b', "bab")]),
        morphism(&[(b'a', "ab"), (b'b', "ba")]),
        morphism(&[(b'a', "aab"), (b'b', "ab")]),
        psi(b'a', b"abc"),
        psi(b'a', b"ab").compose(&psi(b'b', b"ab")).unwrap(),
        insertion(b'c', b"abc"),
        doubling(b"abc"),
    ];
    for m in corpus {
        if !check_mpr_hypotheses(&m).holds() {
            continue;
        }
        let alph: Vec<Letter> = m.domain().collect();
        if preserves_richness_empirical(&m, 8, &alph).unwrap().preserves() {
            assert!(is_class_p(&m).is_some(), "{m}");
        }
    }
}

#[test]
fn rich_periodic_family() {
    for k in 0..=5 {
        let u = format!("aa{}aabab", "b".repeat(k));
        assert!(is_power_rich(u.as_bytes()).unwrap(), "{u}");
    }
}

#[test]
fn primitive_iff_not_among_proper_conjugates() {
    check(&nonempty_words(3, 10), |w| {
        let own = conjugates(w, false).unwrap().contains(w);
        (is_primitive(w).unwrap() == own).then(|| format!("{w}"))
    });
}
