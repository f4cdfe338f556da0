//! Lusztig symbols: rank, defect, cuspidality, the Υ map and 1-hook branching.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::Partition;
use crate::Error;

/// An ordered symbol `(X over Y)` with strictly decreasing rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SymbolWire", into = "SymbolWire")]
pub struct Symbol {
    x: Vec<u32>,
    y: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct SymbolWire {
    #[serde(rename = "X")]
    x: Vec<u32>,
    #[serde(rename = "Y")]
    y: Vec<u32>,
}

impl TryFrom<SymbolWire> for Symbol {
    type Error = Error;
    fn try_from(w: SymbolWire) -> Result<Symbol, Error> {
        Symbol::new(w.x, w.y)
    }
}

impl From<Symbol> for SymbolWire {
    fn from(s: Symbol) -> SymbolWire {
        SymbolWire { x: s.x, y: s.y }
    }
}

/// A row of a symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Row {
    X,
    Y,
}

/// The pair `(μ₁, μ₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Bipartition {
        Bipartition { first, second }
    }

    pub fn weight(&self) -> u32 {
        self.first.weight() + self.second.weight()
    }

    /// Every bipartition of `n`.
    pub fn all_of_weight(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            for a in Partition::all_of_weight(k) {
                for b in Partition::all_of_weight(n - k) {
                    out.push(Bipartition::new(a.clone(), b));
                }
            }
        }
        out
    }
}

/// The defect classes of the symbol sets attached to each classical group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymbolFamily {
    /// `def ≡ 0 (mod 4)`: split even orthogonal groups.
    OplusEven,
    /// `def ≡ 1 (mod 4)`: symplectic and odd orthogonal groups.
    SpOrSOodd,
    /// `def ≡ 2 (mod 4)`: non-split even orthogonal groups.
    OminusEven,
}

/// The two shapes of cuspidal symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CuspidalKind {
    /// Defect `(-1)^t (2t+1)`, rank `t² + t`, `t ≥ 0`.
    SpKind,
    /// Defect `2t`, rank `t²`, `t ∈ Z`.
    OevenKind,
}

/// A 1-hook move on a symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookMove {
    pub symbol: Symbol,
    pub row: Row,
    /// Content of the box added to (or removed from) the matching component of Υ, at charge 0.
    pub content: i64,
}

fn strictly_decreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

fn floor_sq_over_4(k: i64) -> i64 {
    (k * k).div_euclid(4)
}

impl Symbol {
    /// Builds a symbol and brings it to canonical (reduced) form.
    pub fn new(x: Vec<u32>, y: Vec<u32>) -> Result<Symbol, Error> {
        Ok(Symbol::unreduced(x, y)?.reduce())
    }

    /// Builds a symbol without reducing it.
    pub fn unreduced(x: Vec<u32>, y: Vec<u32>) -> Result<Symbol, Error> {
        if !strictly_decreasing(&x) || !strictly_decreasing(&y) {
            return Err(Error::Invalid(format!("symbol rows must be strictly decreasing: {x:?} / {y:?}")));
        }
        Ok(Symbol { x, y })
    }

    /// The symbol with both rows empty (rank 0, defect 0).
    pub fn empty() -> Symbol {
        Symbol { x: Vec::new(), y: Vec::new() }
    }

    pub fn row(&self, r: Row) -> &[u32] {
        match r {
            Row::X => &self.x,
            Row::Y => &self.y,
        }
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn y(&self) -> &[u32] {
        &self.y
    }

    pub fn rank(&self) -> i64 {
        let s: i64 = self.x.iter().chain(&self.y).map(|&a| a as i64).sum();
        let m = (self.x.len() + self.y.len()) as i64;
        s - floor_sq_over_4(m - 1)
    }

    pub fn defect(&self) -> i64 {
        self.x.len() as i64 - self.y.len() as i64
    }

    /// `(rank, defect)`.
    pub fn invariants(&self) -> (i64, i64) {
        (self.rank(), self.defect())
    }

    pub fn is_reduced(&self) -> bool {
        !(self.x.last() == Some(&0) && self.y.last() == Some(&0))
    }

    /// Maximal simultaneous un-shift.
    pub fn reduce(&self) -> Symbol {
        let mut s = self.clone();
        while !s.is_reduced() {
            s.x.pop();
            s.y.pop();
            s.x.iter_mut().for_each(|a| *a -= 1);
            s.y.iter_mut().for_each(|a| *a -= 1);
        }
        s
    }

    /// Simultaneous shift by one.
    pub fn shift(&self) -> Symbol {
        let up = |v: &[u32]| v.iter().map(|a| a + 1).chain(std::iter::once(0)).collect();
        Symbol { x: up(&self.x), y: up(&self.y) }
    }

    pub fn transpose(&self) -> Symbol {
        Symbol { x: self.y.clone(), y: self.x.clone() }
    }

    pub fn is_degenerate(&self) -> bool {
        self.x == self.y
    }

    pub fn is_cuspidal(&self) -> bool {
        self.rank() == floor_sq_over_4(self.defect())
    }

    pub fn upsilon(&self) -> Bipartition {
        let strip = |v: &[u32]| {
            let m = v.len() as u32;
            let parts = v.iter().enumerate().map(|(i, &a)| a - (m - 1 - i as u32)).collect();
            Partition::new(parts).expect("staircase removal keeps rows non-increasing")
        };
        Bipartition::new(strip(&self.x), strip(&self.y))
    }

    /// The reduced symbol of the given defect with `Υ = b`.
    pub fn upsilon_inverse(b: &Bipartition, defect: i64) -> Symbol {
        let l1 = b.first.len() as i64;
        let l2 = b.second.len() as i64;
        let m2 = l2.max(l1 - defect).max(0);
        let m1 = m2 + defect;
        let build =
            |mu: &Partition, m: i64| -> Vec<u32> { (1..=m).map(|i| mu.part(i as usize) + (m - i) as u32).collect() };
        Symbol { x: build(&b.first, m1), y: build(&b.second, m2) }.reduce()
    }

    pub fn family_member(&self, family: SymbolFamily) -> bool {
        let r = self.defect().rem_euclid(4);
        match family {
            SymbolFamily::OplusEven => r == 0,
            SymbolFamily::SpOrSOodd => r == 1,
            SymbolFamily::OminusEven => r == 2,
        }
    }

    /// Every way of adding a 1-hook, with the content of the added box.
    pub fn one_hook_additions(&self) -> Vec<HookMove> {
        let s = self.shift();
        let mut out = Vec::new();
        for row in [Row::X, Row::Y] {
            let v = s.row(row);
            let m = v.len() as i64;
            for (k, &a) in v.iter().enumerate() {
                if v.contains(&(a + 1)) {
                    continue;
                }
                let mut w = v.to_vec();
                w[k] = a + 1;
                w.sort_unstable_by(|p, q| q.cmp(p));
                let symbol = s.with_row(row, w).reduce();
                out.push(HookMove { symbol, row, content: a as i64 + 1 - m });
            }
        }
        out
    }

    /// Every way of removing a 1-hook, with the content of the removed box.
    pub fn one_hook_removals(&self) -> Vec<HookMove> {
        let mut out = Vec::new();
        for row in [Row::X, Row::Y] {
            let v = self.row(row);
            let m = v.len() as i64;
            for (k, &a) in v.iter().enumerate() {
                if a == 0 || v.contains(&(a - 1)) {
                    continue;
                }
                let mut w = v.to_vec();
                w[k] = a - 1;
                let symbol = self.with_row(row, w).reduce();
                out.push(HookMove { symbol, row, content: a as i64 - m });
            }
        }
        out
    }

    fn with_row(&self, row: Row, w: Vec<u32>) -> Symbol {
        match row {
            Row::X => Symbol { x: w, y: self.y.clone() },
            Row::Y => Symbol { x: self.x.clone(), y: w },
        }
    }

    /// The cuspidal symbol `Λ_t` of the given kind.
    pub fn cuspidal(t: i64, kind: CuspidalKind) -> Result<Symbol, Error> {
        let stair = |k: i64| -> Vec<u32> { (0..k as u32).rev().collect() };
        match kind {
            CuspidalKind::SpKind => {
                if t < 0 {
                    return Err(Error::Invalid(format!("Sp-kind cuspidal symbols need t >= 0, got {t}")));
                }
                let k = 2 * t + 1;
                Ok(if t % 2 == 0 {
                    Symbol { x: stair(k), y: Vec::new() }
                } else {
                    Symbol { x: Vec::new(), y: stair(k) }
                })
            }
            CuspidalKind::OevenKind => Ok(if t >= 0 {
                Symbol { x: stair(2 * t), y: Vec::new() }
            } else {
                Symbol { x: Vec::new(), y: stair(-2 * t) }
            }),
        }
    }

    /// The parameter `t` of the cuspidal core, read from the defect.
    pub fn core_parameter(&self, kind: CuspidalKind) -> Result<i64, Error> {
        let d = self.defect();
        match kind {
            CuspidalKind::SpKind => {
                let t = (d.abs() - 1) / 2;
                if d.rem_euclid(4) != 1 {
                    return Err(Error::Invalid(format!("defect {d} is not of the form (-1)^t(2t+1)")));
                }
                Ok(t)
            }
            CuspidalKind::OevenKind => {
                if d % 2 != 0 {
                    return Err(Error::Invalid(format!("defect {d} is odd")));
                }
                Ok(d / 2)
            }
        }
    }

    /// Reduced symbols of rank `rank` with the given defect, ordered by Υ.
    pub fn with_rank_and_defect(rank: i64, defect: i64) -> Vec<Symbol> {
        let base = floor_sq_over_4(defect);
        if rank < base {
            return Vec::new();
        }
        Bipartition::all_of_weight((rank - base) as u32).iter().map(|b| Symbol::upsilon_inverse(b, defect)).collect()
    }

    /// Reduced symbols of rank `rank` whose cuspidal core has the given kind.
    pub fn all_of_kind(rank: i64, kind: CuspidalKind) -> Vec<Symbol> {
        let mut out = Vec::new();
        match kind {
            CuspidalKind::SpKind => {
                let mut t = 0;
                while t * t + t <= rank {
                    let d = if t % 2 == 0 { 2 * t + 1 } else { -(2 * t + 1) };
                    out.extend(Symbol::with_rank_and_defect(rank, d));
                    t += 1;
                }
            }
            CuspidalKind::OevenKind => {
                let mut t = 0;
                while t * t <= rank {
                    out.extend(Symbol::with_rank_and_defect(rank, 2 * t));
                    if t > 0 {
                        out.extend(Symbol::with_rank_and_defect(rank, -2 * t));
                    }
                    t += 1;
                }
            }
        }
        out
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[u32]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({} / {})", row(&self.x), row(&self.y))
    }
}
