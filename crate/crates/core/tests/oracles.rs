//! Counts checked against a brute-force symbol enumerator that shares no code with the crate.

use weylfock::characters::{enumerate, EnumerateOptions};
use weylfock::{Family, Symbol};

use std::collections::HashMap;

/// Every strictly increasing `size`-subset of the naturals with the given sum.
fn sets(size: usize, sum: i64, min: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if size == 0 {
        if sum == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let k = size as i64;
    // the smallest completion starting at v is v + (v+1) + .. + (v+k-1)
    let mut v = min;
    while k * v + k * (k - 1) / 2 <= sum {
        prefix.push(v);
        sets(size - 1, sum - v, v + 1, prefix, out);
        prefix.pop();
        v += 1;
    }
}

/// Reduced ordered symbols of rank `n`, as increasing (X, Y).
fn brute_symbols(n: i64) -> Vec<(Vec<i64>, Vec<i64>)> {
    let bound = 2 * n as usize + 3;
    let mut memo: HashMap<(usize, i64), Vec<Vec<i64>>> = HashMap::new();
    let mut sets_of = |size: usize, sum: i64| -> Vec<Vec<i64>> {
        memo.entry((size, sum))
            .or_insert_with(|| {
                let mut out = Vec::new();
                sets(size, sum, 0, &mut Vec::new(), &mut out);
                out
            })
            .clone()
    };
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            // a reduced symbol has rank at least min(a, b) + ⌊(a-b)²/4⌋
            let d = a as i64 - b as i64;
            if (a.min(b) as i64) + d * d / 4 > n {
                continue;
            }
            let m = (a + b) as i64;
            let half = (m - 1).max(0) / 2;
            let s = n + half * half + if m > 0 && (m - 1) % 2 == 1 { half } else { 0 };
            for sx in 0..=s {
                let xs = sets_of(a, sx);
                if xs.is_empty() {
                    continue;
                }
                let ys = sets_of(b, s - sx);
                for x in &xs {
                    for y in &ys {
                        let both_zero = x.first() == Some(&0) && y.first() == Some(&0);
                        if !both_zero {
                            out.push((x.clone(), y.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

fn count(n: i64, keep: impl Fn(i64) -> bool) -> usize {
    brute_symbols(n).iter().filter(|(x, y)| keep(x.len() as i64 - y.len() as i64)).count()
}

fn odd_kind(n: i64) -> usize {
    count(n, |d| d.rem_euclid(4) == 1)
}

fn even_kind(n: i64) -> usize {
    count(n, |d| d % 2 == 0)
}

fn qu_count(family: Family, n: i64) -> usize {
    (0..=n)
        .map(|a| match family {
            Family::Sp => odd_kind(a) * even_kind(n - a),
            Family::Oodd => 2 * odd_kind(a) * odd_kind(n - a),
            Family::Oeven => even_kind(a) * even_kind(n - a),
        })
        .sum()
}

#[test]
fn brute_symbols_are_reduced_and_distinct() {
    for n in 0..5 {
        let mut ours: Vec<_> = brute_symbols(n)
            .into_iter()
            .map(|(x, y)| {
                let desc = |r: &[i64]| r.iter().rev().map(|&v| v as u32).collect();
                Symbol::new(desc(&x), desc(&y)).unwrap()
            })
            .collect();
        assert!(ours.iter().all(|s| s.rank() == n && s.is_reduced()));
        ours.sort();
        ours.dedup();
        assert_eq!(ours.len(), brute_symbols(n).len());
    }
}

#[test]
fn unipotent_sp_counts() {
    let got: Vec<usize> = (0..5).map(odd_kind).collect();
    assert_eq!(got, [1, 2, 6, 12, 25]);
}

/// Bipartitions of `n`, by the product of two partition-count series.
fn bipartitions(n: i64) -> usize {
    let mut p = vec![0usize; n as usize + 1];
    p[0] = 1;
    for part in 1..=n as usize {
        for k in part..=n as usize {
            p[k] += p[k - part];
        }
    }
    (0..=n as usize).map(|k| p[k] * p[n as usize - k]).sum()
}

#[test]
fn counts_by_core_and_quotient() {
    // a symbol is its cuspidal core plus a bipartition of the remaining rank
    for n in 0..7 {
        let odd: usize = (0..=n).filter(|t| t * t + t <= n).map(|t| bipartitions(n - t * t - t)).sum();
        let even: usize = (-n..=n).filter(|t| t * t <= n).map(|t| bipartitions(n - t * t)).sum();
        assert_eq!(odd_kind(n), odd, "odd kind at rank {n}");
        assert_eq!(even_kind(n), even, "even kind at rank {n}");
    }
}

#[test]
fn unipotent_even_counts() {
    let got: Vec<usize> = (0..5).map(even_kind).collect();
    assert_eq!(got, [1, 4, 9, 20, 42]);
}

#[test]
fn symbols_of_each_kind_agree_with_crate() {
    use weylfock::symbols::CuspidalKind;
    for n in 0..6 {
        assert_eq!(Symbol::all_of_kind(n, CuspidalKind::SpKind).len(), odd_kind(n), "odd kind at rank {n}");
        assert_eq!(Symbol::all_of_kind(n, CuspidalKind::OevenKind).len(), even_kind(n), "even kind at rank {n}");
    }
}

#[test]
fn quadratic_unipotent_label_counts() {
    let opts = EnumerateOptions { quadratic_unipotent: true, ..Default::default() };
    for family in Family::ALL {
        for n in 0..5u32 {
            assert_eq!(enumerate(family, n, &opts).len(), qu_count(family, n as i64), "{family:?} rank {n}");
        }
    }
}

#[test]
fn frozen_quadratic_unipotent_counts() {
    let opts = EnumerateOptions { quadratic_unipotent: true, ..Default::default() };
    let counts = |f| (0..4).map(|n| enumerate(f, n, &opts).len()).collect::<Vec<_>>();
    assert_eq!(counts(Family::Sp), [1, 6, 23, 74]);
    assert_eq!(counts(Family::Oodd), [2, 8, 32, 96]);
}
