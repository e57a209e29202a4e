mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;
use ybk::kgraph::{
    complete_diamond, constant_family, normalize, periodicity, periodicity_of_family,
    unique_pullback, unique_pushout, words_of_degree, Direction, KWord, Letter, Periodicity,
    ThetaFamily,
};
use ybk::{builtin, Solution};

/// Swaps an adjacent pair of distinct colours with the family's maps.
fn swap_pair(family: &ThetaFamily, a: Letter, b: Letter) -> (Letter, Letter) {
    let ((c1, x), (c2, y)) = (a, b);
    if c1 < c2 {
        let (t, s) = family.map(c1, c2).apply(x, y);
        ((c2, t), (c1, s))
    } else {
        let (s, t) = family.map(c2, c1).invert(x, y);
        ((c2, s), (c1, t))
    }
}

/// Bubble sort by colour, leftmost descent first, returning the sorted word
/// and the positions swapped.
fn sort_by_swaps(family: &ThetaFamily, word: &[Letter]) -> (Vec<Letter>, Vec<usize>) {
    let mut w = word.to_vec();
    let mut trail = Vec::new();
    while let Some(p) = (0..w.len().saturating_sub(1)).find(|&p| w[p].0 > w[p + 1].0) {
        let (a, b) = swap_pair(family, w[p], w[p + 1]);
        w[p] = a;
        w[p + 1] = b;
        trail.push(p);
    }
    (w, trail)
}

fn random_word(rng: &mut impl Rng, sizes: &[usize], max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let c = rng.gen_range(1..=sizes.len());
            (c, rng.gen_range(1..=sizes[c - 1] as u32))
        })
        .collect()
}

/// Random valid three-colour families and constant families of pooled
/// solutions.
fn family() -> impl Strategy<Value = Arc<ThetaFamily>> {
    let pool: Vec<Solution> = common::solution_pool()
        .iter()
        .filter(|r| r.size() <= 3)
        .cloned()
        .collect();
    prop_oneof![
        any::<u64>()
            .prop_map(|seed| Arc::new(common::random_valid_family(&mut common::seeded(seed)).0)),
        (0..pool.len(), 2usize..=3)
            .prop_map(move |(i, k)| Arc::new(constant_family(&pool[i], k).unwrap())),
    ]
}

/// All degree vectors with entries summing to at most `total`.
fn degrees_up_to(k: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|d: Vec<usize>| {
                let used: usize = d.iter().sum();
                (0..=total - used).map(move |x| {
                    let mut d = d.clone();
                    d.push(x);
                    d
                })
            })
            .collect();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_forms_unwind_to_the_input(fam in family(), seed in any::<u64>()) {
        let mut rng = common::seeded(seed);
        for _ in 0..8 {
            let word = random_word(&mut rng, fam.sizes(), 5);
            let (sorted, trail) = sort_by_swaps(&fam, &word);
            let nf = normalize(&fam, &word).unwrap();
            prop_assert_eq!(nf.letters(), &sorted[..]);
            prop_assert!(nf.letters().windows(2).all(|w| w[0].0 <= w[1].0));
            let mut back = sorted.clone();
            for &p in trail.iter().rev() {
                let (a, b) = swap_pair(&fam, back[p], back[p + 1]);
                back[p] = a;
                back[p + 1] = b;
            }
            prop_assert_eq!(back, word.clone());
            prop_assert_eq!(normalize(&fam, nf.letters()).unwrap(), nf);
        }
    }

    #[test]
    fn multiplication_is_associative(fam in family(), seed in any::<u64>()) {
        let mut rng = common::seeded(seed);
        let mut w = || normalize(&fam, &random_word(&mut rng, fam.sizes(), 3)).unwrap();
        let (a, b, c) = (w(), w(), w());
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn factorizations_are_unique(fam in family(), seed in any::<u64>()) {
        let mut rng = common::seeded(seed);
        let k = fam.k();
        for _ in 0..4 {
            let a = normalize(&fam, &random_word(&mut rng, fam.sizes(), 4)).unwrap();
            let d = a.degree();
            for m in degrees_up_to(k, a.len()) {
                if m.iter().zip(&d).any(|(x, y)| x > y) {
                    prop_assert!(a.factorize(&m).is_err());
                    continue;
                }
                let rest: Vec<usize> = d.iter().zip(&m).map(|(x, y)| x - y).collect();
                let mut found = vec![];
                for mu in words_of_degree(&fam, &m) {
                    for nu in words_of_degree(&fam, &rest) {
                        if mu.multiply(&nu).unwrap() == a {
                            found.push((mu.clone(), nu));
                        }
                    }
                }
                prop_assert_eq!(found.len(), 1);
                prop_assert_eq!(a.factorize(&m).unwrap(), found.pop().unwrap());
            }
        }
    }

    #[test]
    fn multiplication_cancels(fam in family(), seed in any::<u64>()) {
        let mut rng = common::seeded(seed);
        let a = normalize(&fam, &random_word(&mut rng, fam.sizes(), 3)).unwrap();
        for e in degrees_up_to(fam.k(), 3 - a.len().min(3)) {
            let words = words_of_degree(&fam, &e);
            let mut left: Vec<KWord> = words.iter().map(|b| a.multiply(b).unwrap()).collect();
            let mut right: Vec<KWord> = words.iter().map(|b| b.multiply(&a).unwrap()).collect();
            left.sort_by(|x, y| x.letters().cmp(y.letters()));
            right.sort_by(|x, y| x.letters().cmp(y.letters()));
            left.dedup();
            right.dedup();
            prop_assert_eq!(left.len(), words.len());
            prop_assert_eq!(right.len(), words.len());
        }
    }

    #[test]
    fn length_counts_match_enumeration(fam in family()) {
        for n in 0..=3 {
            let enumerated: usize = degrees_up_to(fam.k(), n)
                .into_iter()
                .filter(|d| d.iter().sum::<usize>() == n)
                .map(|d| words_of_degree(&fam, &d).len())
                .sum();
            prop_assert_eq!(fam.count_of_length(n), enumerated as u128);
        }
    }

    #[test]
    fn diamonds_close(fam in family(), seed in any::<u64>()) {
        let mut rng = common::seeded(seed);
        let k = fam.k();
        let i = rng.gen_range(1..=k);
        let j = (i % k) + 1;
        let mu_len = rng.gen_range(0..=2);
        let nu_len = rng.gen_range(0..=2);
        let block = |c: usize, len: usize, rng: &mut rand_chacha::ChaCha8Rng| -> Vec<Letter> {
            (0..len).map(|_| (c, rng.gen_range(1..=fam.sizes()[c - 1] as u32))).collect()
        };
        let mu = normalize(&fam, &block(i, mu_len, &mut rng)).unwrap();
        let nu = normalize(&fam, &block(j, nu_len, &mut rng)).unwrap();
        let mut mu_deg = vec![0; k];
        mu_deg[i - 1] = mu_len;
        let mut nu_deg = vec![0; k];
        nu_deg[j - 1] = nu_len;
        let pullback = unique_pullback(&fam).is_ok();
        match complete_diamond(&mu, &nu, Direction::Pullback) {
            Ok((mu2, nu2)) => {
                prop_assert!(pullback);
                prop_assert_eq!(mu.multiply(&nu2).unwrap(), nu.multiply(&mu2).unwrap());
                let mut hits = 0;
                for a in words_of_degree(&fam, &mu_deg) {
                    for b in words_of_degree(&fam, &nu_deg) {
                        if mu.multiply(&b).unwrap() == nu.multiply(&a).unwrap() {
                            hits += 1;
                        }
                    }
                }
                prop_assert_eq!(hits, 1);
            }
            Err(_) => prop_assert!(!pullback),
        }
        let pushout = unique_pushout(&fam).is_ok();
        match complete_diamond(&mu, &nu, Direction::Pushout) {
            Ok((mu2, nu2)) => {
                prop_assert!(pushout);
                prop_assert_eq!(mu2.multiply(&nu).unwrap(), nu2.multiply(&mu).unwrap());
            }
            Err(_) => prop_assert!(!pushout),
        }
    }
}

#[test]
fn pullback_and_pushout_characterize_non_degeneracy() {
    for r in common::solution_pool().iter().filter(|r| r.size() <= 3) {
        let fam = Arc::new(constant_family(r, 2).unwrap());
        let both = unique_pullback(&fam).is_ok() && unique_pushout(&fam).is_ok();
        assert_eq!(r.is_non_degenerate(), both, "{r:?}");
    }
}

#[test]
fn fibre_counts_match_the_semigroup() {
    for r in common::solution_pool().iter().filter(|r| r.size() <= 3) {
        let fam = Arc::new(constant_family(r, 2).unwrap());
        let n = r.size() as u32;
        let mut pull = true;
        let mut push = true;
        for (i, j) in [(1, 2), (2, 1)] {
            for s in 1..=n {
                for t in 1..=n {
                    pull &= common::pullback_fibre(&fam, i, s, j, t) == 1;
                    push &= common::pushout_fibre(&fam, i, s, j, t) == 1;
                }
            }
        }
        assert_eq!(unique_pullback(&fam).is_ok(), pull, "{r:?}");
        assert_eq!(unique_pushout(&fam).is_ok(), push, "{r:?}");
        // R(x, y) = (y', x'): every (x, y') has one (y, x') and every
        // (y, x') one (x, y') exactly when R is non-degenerate.
        let fibres = |key: fn((u32, u32), (u32, u32)) -> (u32, u32)| {
            let mut counts = std::collections::HashMap::new();
            for (x, y) in r.pairs() {
                *counts.entry(key((x, y), r.apply(x, y))).or_insert(0) += 1;
            }
            counts.len() == (n * n) as usize && counts.values().all(|&c| c == 1)
        };
        let left = fibres(|(x, _), (y2, _)| (x, y2));
        let right = fibres(|(_, y), (_, x2)| (y, x2));
        assert_eq!(r.is_non_degenerate(), left && right, "{r:?}");
    }
}

#[test]
fn periodicity_does_not_depend_on_the_colour_count() {
    for r in common::solution_pool().iter().filter(|r| r.size() <= 3) {
        let direct = periodicity(r, 4).unwrap();
        for k in [3, 4, 5] {
            let fam = constant_family(r, k).unwrap();
            assert_eq!(
                periodicity_of_family(&fam, 4).unwrap(),
                direct,
                "{r:?} k={k}"
            );
        }
    }
    assert_eq!(
        periodicity(&builtin("identity", 3).unwrap(), 4).unwrap(),
        Periodicity::Periodic(1)
    );
    assert_eq!(
        periodicity(&builtin("flip", 2).unwrap(), 4).unwrap(),
        Periodicity::AperiodicUpTo(4)
    );
}

#[test]
fn constant_families_validate_exactly_for_solutions() {
    let mut rng = common::seeded(7);
    for n in [2, 3] {
        for _ in 0..100 {
            let r = common::random_solution_table(&mut rng, n);
            for k in [3, 4] {
                assert_eq!(constant_family(&r, k).unwrap().is_kgraph(), r.is_ybe());
            }
        }
    }
    for r in common::solution_pool() {
        assert!(constant_family(r, 3).unwrap().is_kgraph());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn theta_documents_round_trip(seed in any::<u64>()) {
        let (fam, _) = common::random_valid_family(&mut common::seeded(seed));
        let text = ybk::io::ThetaDocument::from_family(&fam).emit();
        let back = ybk::io::ThetaDocument::parse(&text).unwrap();
        prop_assert_eq!(back.to_family().unwrap(), fam);
        prop_assert_eq!(back.emit(), text);
    }
}
