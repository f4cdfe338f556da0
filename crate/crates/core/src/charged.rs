//! Charged partitions, Kerov interlacing sequences, content and residue functions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::Partition;
use crate::qarith::{QIndex, RootRatio, Sign};
use crate::Error;

/// A partition with an integer charge `|μ, s⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChargedPartition {
    pub mu: Partition,
    pub charge: i64,
}

/// Interlacing integers `x₁ < y₁ < x₂ < … < y_{n-1} < x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InterlacingSequence {
    pub xs: Vec<i64>,
    pub ys: Vec<i64>,
}

impl InterlacingSequence {
    pub fn new(xs: Vec<i64>, ys: Vec<i64>) -> Result<InterlacingSequence, Error> {
        let s = InterlacingSequence { xs, ys };
        s.check()?;
        Ok(s)
    }

    fn check(&self) -> Result<(), Error> {
        let n = self.xs.len();
        if n == 0 || self.ys.len() + 1 != n {
            return Err(Error::Invalid(format!(
                "interlacing needs n >= 1 minima and n-1 maxima, got {} and {}",
                n,
                self.ys.len()
            )));
        }
        for k in 0..n - 1 {
            if !(self.xs[k] < self.ys[k] && self.ys[k] < self.xs[k + 1]) {
                return Err(Error::Invalid(format!("sequences do not interlace at position {}", k + 1)));
            }
        }
        Ok(())
    }

    /// `Σx − Σy`.
    pub fn center(&self) -> i64 {
        self.xs.iter().sum::<i64>() - self.ys.iter().sum::<i64>()
    }
}

impl ChargedPartition {
    pub fn new(mu: Partition, charge: i64) -> ChargedPartition {
        ChargedPartition { mu, charge }
    }

    /// `s + j − i` for the cell in row `i`, column `j`.
    pub fn content(&self, cell: (usize, usize)) -> i64 {
        self.charge + cell.1 as i64 - cell.0 as i64
    }

    /// Charged contents of addable cells, increasing.
    pub fn addable_contents(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.mu.addable_cells().into_iter().map(|c| self.content(c)).collect();
        v.sort_unstable();
        v
    }

    /// Charged contents of removable cells, increasing.
    pub fn removable_contents(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.mu.removable_cells().into_iter().map(|c| self.content(c)).collect();
        v.sort_unstable();
        v
    }

    pub fn to_interlacing(&self) -> InterlacingSequence {
        InterlacingSequence { xs: self.addable_contents(), ys: self.removable_contents() }
    }

    pub fn from_interlacing(seq: &InterlacingSequence) -> Result<ChargedPartition, Error> {
        seq.check()?;
        let c = seq.center();
        // The profile has slope −1 on [k, k+1] exactly for k in the Maya set
        // {μ_i − i + c}; above x₁ that set is finite.
        let x1 = seq.xs[0];
        let mut maya = Vec::new();
        for (y, x) in seq.ys.iter().zip(&seq.xs[1..]) {
            maya.extend(*y..*x);
        }
        maya.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts = Vec::with_capacity(maya.len());
        for (i, &m) in maya.iter().enumerate() {
            let part = m + i as i64 + 1 - c;
            if part < 0 {
                return Err(Error::Invalid("interlacing data does not describe a partition".into()));
            }
            parts.push(part as u32);
        }
        if x1 - 1 + maya.len() as i64 + 1 - c != 0 {
            return Err(Error::Invalid("interlacing data does not describe a partition".into()));
        }
        let mu = Partition::new(parts)?;
        Ok(ChargedPartition::new(mu, c))
    }

    /// `Π(u − addable) / Π(u − removable)`.
    pub fn content_function(&self) -> RootRatio<i64> {
        RootRatio::make(self.addable_contents(), self.removable_contents())
    }

    /// The content function with every content `c` replaced by the root `eps·q^c`.
    pub fn residue_function(&self, eps: Sign) -> RootRatio<QIndex> {
        self.content_function().map_roots(|&c| QIndex::new(eps, c))
    }

    /// The unique charged partition whose `(q, eps)`-residue function is `r`.
    pub fn invert_residue_function(r: &RootRatio<QIndex>, eps: Sign) -> Result<ChargedPartition, Error> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (a, m) in r.support() {
            if a.sign != eps {
                return Err(Error::Invalid(format!("root {a} does not carry sign {eps}")));
            }
            if m.abs() != 1 {
                return Err(Error::Invalid(format!("root {a} has multiplicity {m}")));
            }
            if m > 0 {
                xs.push(a.exp);
            } else {
                ys.push(a.exp);
            }
        }
        ChargedPartition::from_interlacing(&InterlacingSequence::new(xs, ys)?)
    }

    /// Every charged partition with `|μ| ≤ max_weight` and `|charge| ≤ max_charge`.
    pub fn all_up_to(max_weight: u32, max_charge: i64) -> Vec<ChargedPartition> {
        let mut out = Vec::new();
        for mu in Partition::all_up_to(max_weight) {
            for c in -max_charge..=max_charge {
                out.push(ChargedPartition::new(mu.clone(), c));
            }
        }
        out
    }
}

impl fmt::Display for ChargedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}, {}⟩", self.mu, self.charge)
    }
}
