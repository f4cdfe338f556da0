//! Semisimple classes by multiplicity and type functions, centralizers and the spinor value.

use serde::{Deserialize, Serialize};

use crate::characters::Family;
use crate::ffield::GammaDescriptor;
use crate::qarith::Sign;
use crate::{Error, GlobalContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Symplectic,
    Orthogonal,
}

/// The ambient space of a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Space {
    pub kind: SpaceKind,
    pub dim: u32,
    /// `η(V)`, for even-dimensional orthogonal spaces.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Sign>,
}

/// An elementary divisor: `x−1`, `x+1`, or an element of `F1 ∪ F2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaKey {
    XMinusOne,
    XPlusOne,
    Gamma(GammaDescriptor),
}

impl GammaKey {
    /// `d_Γ`.
    pub fn degree(&self) -> u32 {
        match self {
            GammaKey::Gamma(g) => 2 * g.delta,
            _ => 1,
        }
    }
}

/// One primary component: `(Γ, m_Γ, η_Γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub key: GammaKey,
    pub mult: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Sign>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemisimpleClass {
    pub space: Space,
    pub blocks: Vec<Block>,
}

/// A factor `G(n, ε)` of a centralizer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub family: Family,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_type: Option<Sign>,
}

/// A factor `GL_m(ε q^δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFactor {
    pub key: GammaDescriptor,
    pub m: u32,
    pub epsilon: Sign,
    pub delta: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerShape {
    pub plus: Factor,
    pub minus: Factor,
    pub star: Vec<LinearFactor>,
}

impl SemisimpleClass {
    /// The identity of `space`.
    pub fn identity(space: Space) -> SemisimpleClass {
        let eta = space.eta;
        let dim = space.dim;
        SemisimpleClass { space, blocks: vec![Block { key: GammaKey::XMinusOne, mult: dim, eta }] }
    }

    pub fn mult(&self, key: &GammaKey) -> u32 {
        self.blocks.iter().filter(|b| &b.key == key).map(|b| b.mult).sum()
    }

    pub fn eta(&self, key: &GammaKey) -> Option<Sign> {
        self.blocks.iter().find(|b| &b.key == key && b.mult > 0).and_then(|b| b.eta)
    }

    fn live_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.mult > 0)
    }

    /// Checks the multiplicity and type relations; reports the first violation.
    pub fn validate(&self, ctx: &GlobalContext) -> Result<(), Error> {
        let mut seen = Vec::new();
        for b in self.live_blocks() {
            if seen.contains(&&b.key) {
                return Err(Error::Invalid(format!("elementary divisor {:?} listed twice", b.key)));
            }
            seen.push(&b.key);
        }
        let total: u32 = self.live_blocks().map(|b| b.key.degree() * b.mult).sum();
        if total != self.space.dim {
            return Err(Error::Invalid(format!("dim V = {} but Σ d_Γ m_Γ = {total}", self.space.dim)));
        }
        let m_minus = self.mult(&GammaKey::XMinusOne);
        let m_plus = self.mult(&GammaKey::XPlusOne);
        match self.space.kind {
            SpaceKind::Symplectic => {
                if self.space.dim % 2 == 1 || m_minus % 2 == 1 || m_plus % 2 == 1 {
                    return Err(Error::Invalid("symplectic eigenspaces must be even-dimensional".into()));
                }
                if self.live_blocks().any(|b| b.eta == Some(Sign::Minus)) {
                    return Err(Error::Invalid("types on a symplectic space are all +1".into()));
                }
            }
            SpaceKind::Orthogonal => {
                let mut product = Sign::Plus;
                for b in self.live_blocks() {
                    match &b.key {
                        GammaKey::Gamma(g) => {
                            let expected = g.epsilon().pow(b.mult as i64);
                            if b.eta.is_some_and(|e| e != expected) {
                                return Err(Error::Invalid(format!(
                                    "η_Γ = {} but ε_Γ^m_Γ = {expected} for {g}",
                                    b.eta.unwrap()
                                )));
                            }
                            product = product * expected;
                        }
                        key => {
                            if b.mult % 2 == 0 {
                                let eta = b.eta.ok_or_else(|| Error::Invalid(format!("type of {key:?} missing")))?;
                                product = product * eta;
                            } else if let Some(eta) = b.eta {
                                product = product * eta;
                            }
                        }
                    }
                }
                if self.space.dim.is_multiple_of(2) {
                    let eta_v = self.space.eta.ok_or_else(|| Error::Invalid("type η(V) missing".into()))?;
                    let expected = ctx.zeta_minus_one().pow((m_minus * m_plus) as i64) * product;
                    if eta_v != expected {
                        return Err(Error::Invalid(format!("η(V) = {eta_v} but the type relation gives {expected}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `C_{G*}(s) ≃ G⁺ × G⁻ × Π GL_{m_Γ}(ε_Γ q^{δ_Γ})` for `s ∈ G*`, `G` of the given family.
    pub fn centralizer(&self, ambient: Family, ctx: &GlobalContext) -> Result<CentralizerShape, Error> {
        self.validate(ctx)?;
        let odd = self.space.dim % 2 == 1;
        let fits = match ambient {
            Family::Sp => self.space.kind == SpaceKind::Orthogonal && odd,
            Family::Oodd => self.space.kind == SpaceKind::Symplectic,
            Family::Oeven => self.space.kind == SpaceKind::Orthogonal && !odd,
        };
        if !fits {
            return Err(Error::Invalid(format!("class does not live in the dual group of {ambient:?}")));
        }
        let m_minus = self.mult(&GammaKey::XMinusOne);
        let m_plus = self.mult(&GammaKey::XPlusOne);
        let eta_minus = self.eta(&GammaKey::XMinusOne).unwrap_or(Sign::Plus);
        let eta_plus = self.eta(&GammaKey::XPlusOne).unwrap_or(Sign::Plus);
        let (plus, minus) = match ambient {
            Family::Sp => (
                Factor { family: Family::Oodd, n: m_minus / 2, group_type: None },
                Factor { family: Family::Oeven, n: m_plus / 2, group_type: Some(eta_plus) },
            ),
            Family::Oodd => (
                Factor { family: Family::Sp, n: m_minus / 2, group_type: None },
                Factor { family: Family::Sp, n: m_plus / 2, group_type: None },
            ),
            Family::Oeven => (
                Factor { family: Family::Oeven, n: m_minus / 2, group_type: Some(eta_minus) },
                Factor { family: Family::Oeven, n: m_plus / 2, group_type: Some(eta_plus) },
            ),
        };
        let star = self
            .live_blocks()
            .filter_map(|b| match &b.key {
                GammaKey::Gamma(g) => {
                    Some(LinearFactor { key: g.clone(), m: b.mult, epsilon: g.epsilon(), delta: g.delta })
                }
                _ => None,
            })
            .collect();
        Ok(CentralizerShape { plus, minus, star })
    }

    /// The spinor norm character at `s`, for `s` in the special orthogonal group.
    pub fn spinor_value(&self, ctx: &GlobalContext) -> Result<Sign, Error> {
        if self.space.kind != SpaceKind::Orthogonal {
            return Err(Error::Invalid("the spinor value needs an orthogonal space".into()));
        }
        let m_plus = self.mult(&GammaKey::XPlusOne);
        if m_plus % 2 == 1 {
            return Err(Error::Invalid("m_{x+1} is odd, so s is not in the special orthogonal group".into()));
        }
        let mut v = ctx.zeta_minus_one().pow((m_plus / 2) as i64);
        for b in self.live_blocks() {
            if let GammaKey::Gamma(g) = &b.key {
                if g.sigma == Sign::Minus {
                    v = v * Sign::parity(b.mult as i64);
                }
            }
        }
        if m_plus > 0 && self.eta(&GammaKey::XPlusOne) == Some(Sign::Minus) {
            v = -v;
        }
        Ok(v)
    }
}
