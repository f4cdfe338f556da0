//! Fock spaces `F(ξ)` on charged multipartitions with the action of `e_i`, `f_i`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::charged::ChargedPartition;
use crate::partitions::Partition;
use crate::qarith::{QIndex, RootRatio};
use crate::Error;

/// A basis vector `|λ, ξ⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChargedMultipartition {
    pub lambdas: Vec<Partition>,
    #[serde(rename = "charges")]
    pub xis: Vec<QIndex>,
}

/// A finite integer combination of basis vectors over a common charge vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<ChargedMultipartition, i64>,
}

/// Coordinates `i ↦ N_i` in the fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Weight(pub BTreeMap<QIndex, i64>);

impl ChargedMultipartition {
    pub fn new(lambdas: Vec<Partition>, xis: Vec<QIndex>) -> Result<ChargedMultipartition, Error> {
        if lambdas.is_empty() || lambdas.len() != xis.len() {
            return Err(Error::Invalid(format!(
                "multipartition needs l >= 1 components and as many charges, got {} and {}",
                lambdas.len(),
                xis.len()
            )));
        }
        Ok(ChargedMultipartition { lambdas, xis })
    }

    pub fn vacuum(xis: Vec<QIndex>) -> ChargedMultipartition {
        ChargedMultipartition { lambdas: vec![Partition::empty(); xis.len()], xis }
    }

    pub fn size(&self) -> u32 {
        self.lambdas.iter().map(|l| l.weight()).sum()
    }

    /// Residue `q^{j−i} ξ_p` of the cell `(i, j)` in component `p` (all 1-indexed).
    pub fn box_residue(&self, cell: (usize, usize), p: usize) -> Result<QIndex, Error> {
        box_residue(cell, p, &self.xis)
    }

    fn component(&self, p: usize) -> ChargedPartition {
        ChargedPartition::new(self.lambdas[p].clone(), self.xis[p].exp)
    }

    /// `(component, row)` of every addable `i`-node (0-indexed component).
    pub fn addable_nodes(&self, i: QIndex) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (p, lam) in self.lambdas.iter().enumerate() {
            for cell in lam.addable_cells() {
                if self.xis[p].shift(cell.1 as i64 - cell.0 as i64) == i {
                    out.push((p, cell.0));
                }
            }
        }
        out
    }

    /// `(component, row)` of every removable `i`-node (0-indexed component).
    pub fn removable_nodes(&self, i: QIndex) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (p, lam) in self.lambdas.iter().enumerate() {
            for cell in lam.removable_cells() {
                if self.xis[p].shift(cell.1 as i64 - cell.0 as i64) == i {
                    out.push((p, cell.0));
                }
            }
        }
        out
    }

    /// `#addable − #removable` `i`-nodes.
    pub fn n_i(&self, i: QIndex) -> i64 {
        self.addable_nodes(i).len() as i64 - self.removable_nodes(i).len() as i64
    }

    pub fn f_apply(&self, i: QIndex) -> FockVector {
        let mut v = FockVector::zero();
        for (p, row) in self.addable_nodes(i) {
            let mut next = self.clone();
            next.lambdas[p] = next.lambdas[p].with_box(row);
            v.add_term(next, 1);
        }
        v
    }

    pub fn e_apply(&self, i: QIndex) -> FockVector {
        let mut v = FockVector::zero();
        for (p, row) in self.removable_nodes(i) {
            let mut next = self.clone();
            next.lambdas[p] = next.lambdas[p].without_box(row);
            v.add_term(next, 1);
        }
        v
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::default();
        for p in 0..self.lambdas.len() {
            let r = self.component(p).residue_function(self.xis[p].sign);
            for (a, m) in r.support() {
                w.add(*a, m);
            }
        }
        w
    }

    /// Product of the `(q, sign ξ_p)`-residue functions of all components.
    pub fn residue_function(&self) -> RootRatio<QIndex> {
        (0..self.lambdas.len())
            .map(|p| self.component(p).residue_function(self.xis[p].sign))
            .fold(RootRatio::one(), |acc, r| acc.product(&r))
    }

    /// Every residue where a node can be added or removed.
    pub fn active_residues(&self) -> Vec<QIndex> {
        let mut v: Vec<QIndex> = self.residue_function().support().map(|(a, _)| *a).collect();
        v.sort();
        v
    }

    /// Every basis vector with the given charges and at most `max_boxes` boxes in total.
    pub fn all_up_to(xis: &[QIndex], max_boxes: u32) -> Vec<ChargedMultipartition> {
        let mut acc: Vec<(Vec<Partition>, u32)> = vec![(Vec::new(), 0)];
        for _ in xis {
            let mut next = Vec::new();
            for (ls, used) in &acc {
                for lam in Partition::all_up_to(max_boxes - used) {
                    let w = lam.weight();
                    let mut ls2 = ls.clone();
                    ls2.push(lam);
                    next.push((ls2, used + w));
                }
            }
            acc = next;
        }
        acc.into_iter().map(|(lambdas, _)| ChargedMultipartition { lambdas, xis: xis.to_vec() }).collect()
    }
}

/// Residue `q^{j−i} ξ_p` of the cell `(i, j)` in component `p` (1-indexed).
pub fn box_residue(cell: (usize, usize), p: usize, xis: &[QIndex]) -> Result<QIndex, Error> {
    if p == 0 || p > xis.len() {
        return Err(Error::Invalid(format!("component {p} out of range 1..={}", xis.len())));
    }
    Ok(xis[p - 1].shift(cell.1 as i64 - cell.0 as i64))
}

impl FockVector {
    pub fn zero() -> FockVector {
        FockVector::default()
    }

    pub fn basis(v: ChargedMultipartition) -> FockVector {
        let mut f = FockVector::zero();
        f.add_term(v, 1);
        f
    }

    pub fn add_term(&mut self, v: ChargedMultipartition, c: i64) {
        let e = self.terms.entry(v.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ChargedMultipartition, i64)> {
        self.terms.iter().map(|(v, &c)| (v, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: i64) -> FockVector {
        let mut out = FockVector::zero();
        for (v, k) in self.terms() {
            out.add_term(v.clone(), k * c);
        }
        out
    }

    pub fn plus(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (v, k) in other.terms() {
            out.add_term(v.clone(), k);
        }
        out
    }

    pub fn minus(&self, other: &FockVector) -> FockVector {
        self.plus(&other.scale(-1))
    }

    pub fn f_apply(&self, i: QIndex) -> FockVector {
        self.linear(|v| v.f_apply(i))
    }

    pub fn e_apply(&self, i: QIndex) -> FockVector {
        self.linear(|v| v.e_apply(i))
    }

    fn linear(&self, op: impl Fn(&ChargedMultipartition) -> FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (v, k) in self.terms() {
            out = out.plus(&op(v).scale(k));
        }
        out
    }
}

impl Weight {
    pub fn add(&mut self, i: QIndex, k: i64) {
        let e = self.0.entry(i).or_insert(0);
        *e += k;
        if *e == 0 {
            self.0.remove(&i);
        }
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        let mut w = self.clone();
        for (&i, &k) in &other.0 {
            w.add(i, k);
        }
        w
    }

    pub fn minus(&self, other: &Weight) -> Weight {
        let mut w = self.clone();
        for (&i, &k) in &other.0 {
            w.add(i, -k);
        }
        w
    }

    /// The simple root `α_i = 2Λ_i − Λ_{qi} − Λ_{q⁻¹i}`.
    pub fn simple_root(i: QIndex) -> Weight {
        let mut w = Weight::default();
        w.add(i, 2);
        w.add(i.shift(1), -1);
        w.add(i.shift(-1), -1);
        w
    }

    pub fn get(&self, i: QIndex) -> i64 {
        self.0.get(&i).copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn one(lam: &[u32], xi: QIndex) -> ChargedMultipartition {
        ChargedMultipartition::new(vec![p(lam)], vec![xi]).unwrap()
    }

    #[test]
    fn residues() {
        assert_eq!(box_residue((1, 1), 1, &[QIndex::pos(0)]).unwrap(), QIndex::pos(0));
        assert_eq!(box_residue((2, 1), 1, &[QIndex::pos(1)]).unwrap(), QIndex::pos(0));
        assert_eq!(box_residue((1, 1), 2, &[QIndex::pos(0), QIndex::neg(-1)]).unwrap(), QIndex::neg(-1));
        assert!(box_residue((1, 1), 3, &[QIndex::pos(0)]).is_err());
    }

    #[test]
    fn node_counts() {
        assert_eq!(one(&[], QIndex::pos(0)).n_i(QIndex::pos(0)), 1);
        assert_eq!(one(&[1], QIndex::pos(0)).n_i(QIndex::pos(0)), -1);
        assert_eq!(one(&[1], QIndex::pos(0)).n_i(QIndex::pos(1)), 1);
    }

    #[test]
    fn actions() {
        let vac = one(&[], QIndex::pos(0));
        assert_eq!(vac.f_apply(QIndex::pos(0)), FockVector::basis(one(&[1], QIndex::pos(0))));
        assert!(vac.e_apply(QIndex::pos(0)).is_zero());
        assert_eq!(one(&[1], QIndex::pos(0)).f_apply(QIndex::pos(1)), FockVector::basis(one(&[2], QIndex::pos(0))));
    }

    #[test]
    fn weights() {
        let w = one(&[], QIndex::pos(0)).weight();
        assert_eq!(w.0, BTreeMap::from([(QIndex::pos(0), 1)]));
        let w = one(&[1], QIndex::pos(0)).weight();
        assert_eq!(w.0, BTreeMap::from([(QIndex::pos(0), -1), (QIndex::pos(1), 1), (QIndex::pos(-1), 1)]));
        let two = ChargedMultipartition::new(vec![p(&[]), p(&[1])], vec![QIndex::pos(0), QIndex::pos(0)]).unwrap();
        assert_eq!(two.weight(), one(&[], QIndex::pos(0)).weight().plus(&one(&[1], QIndex::pos(0)).weight()));
    }

    #[test]
    fn enumeration_sizes() {
        let xis = [QIndex::pos(0), QIndex::neg(0)];
        assert_eq!(ChargedMultipartition::all_up_to(&xis, 2).len(), 1 + 2 + 5);
    }
}
