//! Partitions, beta-sets, shifts and hooks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

/// A non-increasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition parts must be non-increasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (1-indexed), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition(parts)
    }

    /// Addable cells `(row, col)`, 1-indexed, top to bottom.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            let p = self.part(i);
            if i == 1 || self.part(i - 1) > p {
                out.push((i, p as usize + 1));
            }
        }
        out
    }

    /// Removable cells `(row, col)`, 1-indexed, top to bottom.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.len() {
            let p = self.part(i);
            if self.part(i + 1) < p {
                out.push((i, p as usize));
            }
        }
        out
    }

    /// Adds a box at the end of row `row` (1-indexed). The caller guarantees addability.
    pub fn with_box(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition(parts)
    }

    /// Removes the last box of row `row` (1-indexed). The caller guarantees removability.
    pub fn without_box(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Partition(parts)
    }

    /// All cells `(row, col)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// The beta-set `{α_t, α_{t-1}+1, …, α_1+t-1}` of size `size`.
    pub fn beta_set(&self, size: usize) -> Result<BetaSet, Error> {
        if size < self.len() {
            return Err(Error::Invalid(format!("beta-set size {size} below part count {}", self.len())));
        }
        let elems = (1..=size).rev().map(|i| self.part(i) + (size - i) as u32).collect();
        Ok(BetaSet(elems))
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all_of_weight(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition of weight at most `n`.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_weight).collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Partition, Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// A strictly increasing set of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct BetaSet(Vec<u32>);

impl BetaSet {
    pub fn new(elems: Vec<u32>) -> Result<BetaSet, Error> {
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!("beta-set must be strictly increasing: {elems:?}")));
        }
        Ok(BetaSet(elems))
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn partition(&self) -> Partition {
        let t = self.0.len();
        let parts = (0..t).rev().map(|k| self.0[k] - k as u32).filter(|&p| p > 0).collect();
        Partition(parts)
    }

    /// The `d`-shift `{0,…,d-1} ∪ (β+d)`.
    pub fn shift(&self, d: u32) -> BetaSet {
        BetaSet((0..d).chain(self.0.iter().map(|x| x + d)).collect())
    }

    /// The shift-equivalent representative without `0`.
    pub fn reduce(&self) -> BetaSet {
        let k = self.0.iter().enumerate().take_while(|&(i, &x)| x == i as u32).count() as u32;
        BetaSet(self.0[k as usize..].iter().map(|x| x - k).collect())
    }

    pub fn equivalent(&self, other: &BetaSet) -> bool {
        self.reduce() == other.reduce()
    }

    /// Pairs `(x, x+d)` with `x ∈ β`, `x+d ∉ β`.
    pub fn d_hooks(&self, d: u32) -> Vec<(u32, u32)> {
        self.0.iter().filter(|&&x| !self.contains(x + d)).map(|&x| (x, x + d)).collect()
    }

    /// Replaces `x` by `x+d`.
    pub fn add_hook(&self, x: u32, d: u32) -> Result<BetaSet, Error> {
        if !self.contains(x) || self.contains(x + d) {
            return Err(Error::Invalid(format!("({x},{}) is not a {d}-hook", x + d)));
        }
        let mut v: Vec<u32> = self.0.iter().map(|&y| if y == x { x + d } else { y }).collect();
        v.sort_unstable();
        Ok(BetaSet(v))
    }
}

impl TryFrom<Vec<u32>> for BetaSet {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<BetaSet, Error> {
        BetaSet::new(v)
    }
}

impl From<BetaSet> for Vec<u32> {
    fn from(b: BetaSet) -> Vec<u32> {
        b.0
    }
}
