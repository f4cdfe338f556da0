//! Theta correspondence at the level of labels: theta-cuspidality, first occurrences
//! read off weight functions, `η` signs and compatibility predicates.

use serde::{Deserialize, Serialize};

use crate::characters::{self, oodd_eta, sp_eta, CharacterLabel, CuspidalSupport, Family, StarPart};
use crate::qarith::{QIndex, Sign};
use crate::{Error, GlobalContext};

/// The three kinds of Witt tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThetaCase {
    /// Orthogonal group against the symplectic tower.
    I,
    /// Symplectic group against the even orthogonal towers.
    II,
    /// Symplectic group against the odd orthogonal towers, with Gauss-sum sign `α`.
    III { alpha: Sign },
}

impl ThetaCase {
    pub fn parse(text: &str, alpha: Sign) -> Option<ThetaCase> {
        match text {
            "I" | "1" => Some(ThetaCase::I),
            "II" | "2" => Some(ThetaCase::II),
            "III" | "3" => Some(ThetaCase::III { alpha }),
            _ => None,
        }
    }

    fn colour(self) -> Sign {
        match self {
            ThetaCase::III { .. } => Sign::Minus,
            _ => Sign::Plus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TowerTag {
    Plus,
    Minus,
    Sigma,
    SigmaDet,
    SigmaC,
    Unresolved,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub dim: u32,
    pub tower: TowerTag,
}

/// The two first occurrences, ordered by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstOccurrence {
    pub entries: [Occurrence; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EtaSigns {
    Single(Sign),
    Pair(Sign, Sign),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DualPair {
    SpOeven,
    SpOodd,
}

/// Each condition with its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityReport {
    pub compatible: bool,
    pub conditions: Vec<(String, bool)>,
}

fn check_case(l: &CharacterLabel, case: ThetaCase) -> Result<(), Error> {
    let ok = match case {
        ThetaCase::I => l.family != Family::Sp,
        _ => l.family == Family::Sp,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Invalid(format!("case {case:?} does not apply to {:?}", l.family)))
    }
}

pub fn is_theta_cuspidal(l: &CharacterLabel, case: ThetaCase) -> Result<bool, Error> {
    check_case(l, case)?;
    Ok(l.lambda(case.colour()).is_cuspidal())
}

pub fn first_occurrence(l: &CharacterLabel, case: ThetaCase, ctx: &GlobalContext) -> Result<FirstOccurrence, Error> {
    if !is_theta_cuspidal(l, case)? {
        return Err(Error::Invalid("label is not theta-cuspidal for this case".into()));
    }
    let colour = case.colour();
    let (op, om) = characters::weight_functions(l, ctx)?;
    let o = if colour.is_plus() { op } else { om };
    if !o.is_polynomial() || o.degree() != 2 {
        return Err(Error::Invalid(format!("weight function {} is not a quadratic polynomial", o.render("u"))));
    }
    let zeros = o.zeros();
    let (r1, r2) = (zeros[0], zeros[1]);
    let product = characters::root_product(l.family, colour);
    if r1.times(r2) != product {
        return Err(Error::Invalid(format!("zeros {r1}, {r2} violate the product constraint {product}")));
    }
    let d = l.family.dimension(l.n) as i64;
    let dim_of = |r: QIndex| -> Result<u32, Error> {
        let v = match case {
            ThetaCase::III { .. } => d - 2 * r.exp + 1,
            _ => 2 * (d / 2) - 2 * r.exp,
        };
        u32::try_from(v).map_err(|_| Error::Invalid(format!("zero {r} gives negative dimension {v}")))
    };
    let tags: [TowerTag; 2] = match case {
        ThetaCase::II => [r1, r2].map(|r| if r.sign.is_plus() { TowerTag::Plus } else { TowerTag::Minus }),
        ThetaCase::III { alpha } => [r1, r2].map(|r| if r.sign == alpha { TowerTag::Sigma } else { TowerTag::SigmaC }),
        ThetaCase::I => {
            let z = ctx.zeta_minus_one();
            let m1 = r1.sign == z.pow((dim_of(r1)? / 2) as i64);
            let m2 = r2.sign == z.pow((dim_of(r2)? / 2) as i64);
            match (m1, m2) {
                (true, false) => [TowerTag::Sigma, TowerTag::SigmaDet],
                (false, true) => [TowerTag::SigmaDet, TowerTag::Sigma],
                _ => [TowerTag::Unresolved; 2],
            }
        }
    };
    let mut entries =
        [Occurrence { dim: dim_of(r1)?, tower: tags[0] }, Occurrence { dim: dim_of(r2)?, tower: tags[1] }];
    entries.sort_by_key(|o| o.dim);
    Ok(FirstOccurrence { entries })
}

pub fn eta_signs(sup: &CuspidalSupport) -> Result<EtaSigns, Error> {
    match sup.family {
        Family::Sp => Ok(EtaSigns::Single(sp_eta(sup))),
        Family::Oodd => Ok(EtaSigns::Pair(oodd_eta(sup, Sign::Plus), oodd_eta(sup, Sign::Minus))),
        Family::Oeven => Err(Error::Invalid("even orthogonal supports carry no η".into())),
    }
}

fn negated_star(star: &[StarPart], ctx: &GlobalContext) -> Result<Vec<StarPart>, Error> {
    let mut out = Vec::with_capacity(star.len());
    for s in star {
        out.push(StarPart { gamma: s.gamma.negate(ctx.q())?, partition: s.partition.clone() });
    }
    out.sort();
    Ok(out)
}

/// Whether `l2` can occur in the theta lift of `l1`, condition by condition.
pub fn theta_compatible(
    l1: &CharacterLabel,
    l2: &CharacterLabel,
    pair: DualPair,
    ctx: &GlobalContext,
) -> Result<CompatibilityReport, Error> {
    let expected = match pair {
        DualPair::SpOeven => Family::Oeven,
        DualPair::SpOodd => Family::Oodd,
    };
    if l1.family != Family::Sp || l2.family != expected {
        return Err(Error::Invalid(format!("{pair:?} needs labels of Sp and {expected:?}")));
    }
    let (tp, tm) = l1.core_parameters()?;
    let (up, _) = l2.core_parameters()?;
    let mut conditions = Vec::new();
    match pair {
        DualPair::SpOeven => {
            conditions.push(("star parts agree".to_string(), l1.star == l2.star));
            let m = &l1.lambda_minus;
            let m2 = &l2.lambda_minus;
            conditions.push(("Λ₋ agrees up to det".to_string(), m == m2 || *m == m2.transpose()));
            let core = CharacterLabel::cuspidal(&CuspidalSupport {
                family: Family::Sp,
                t_plus: tp,
                t_minus: 0,
                star: Vec::new(),
                eps: None,
            })?;
            let fo = first_occurrence(&core, ThetaCase::II, ctx)?;
            let dim2 = 2 * (up * up) as u32;
            conditions.push((
                "Λ′₊ core is a first occurrence of Λ₊ core".to_string(),
                fo.entries.iter().any(|o| o.dim == dim2),
            ));
        }
        DualPair::SpOodd => {
            conditions.push(("star parts agree after Γ ↦ −Γ".to_string(), negated_star(&l1.star, ctx)? == l2.star));
            conditions.push(("Λ₊ = Λ′₋".to_string(), l1.lambda_plus == l2.lambda_minus));
            conditions.push(("|t₋| ∈ {t′₊, t′₊ + 1}".to_string(), tm.abs() == up || tm.abs() == up + 1));
            let sp = l1.semisimple_class()?.spinor_value(ctx)?;
            conditions.push(("sp(s) = ε′".to_string(), Some(sp) == l2.eps));
        }
    }
    let compatible = conditions.iter().all(|(_, ok)| *ok);
    Ok(CompatibilityReport { compatible, conditions })
}
