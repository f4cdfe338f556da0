//! Character labels `ρ_{Λ₊,Λ₋,λ★,(ε)}` of `O_{2n+1}(q)`, `Sp_{2n}(q)` and `O^±_{2n}(q)`:
//! cuspidal supports, colored weight functions, Fock coordinates, branching and twists.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::charged::ChargedPartition;
use crate::ffield::{FqContext, GammaClass, GammaDescriptor};
use crate::fock::{ChargedMultipartition, Weight};
use crate::partitions::Partition;
use crate::qarith::{QIndex, RootRatio, Sign};
use crate::semisimple::{Block, GammaKey, SemisimpleClass, Space, SpaceKind};
use crate::symbols::{Bipartition, CuspidalKind, Row, Symbol};
use crate::{Error, GlobalContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Sp,
    Oodd,
    Oeven,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Sp, Family::Oodd, Family::Oeven];

    /// Cuspidal kinds of the `+` and `−` slots.
    pub fn kinds(self) -> (CuspidalKind, CuspidalKind) {
        match self {
            Family::Sp => (CuspidalKind::SpKind, CuspidalKind::OevenKind),
            Family::Oodd => (CuspidalKind::SpKind, CuspidalKind::SpKind),
            Family::Oeven => (CuspidalKind::OevenKind, CuspidalKind::OevenKind),
        }
    }

    pub fn kind(self, colour: Sign) -> CuspidalKind {
        let (p, m) = self.kinds();
        if colour.is_plus() {
            p
        } else {
            m
        }
    }

    /// Dimension of the natural module of the rank-`n` group.
    pub fn dimension(self, n: u32) -> u32 {
        match self {
            Family::Oodd => 2 * n + 1,
            _ => 2 * n,
        }
    }

    pub fn parse(text: &str) -> Option<Family> {
        match text.to_ascii_lowercase().replace(['_', '-'], "").as_str() {
            "sp" => Some(Family::Sp),
            "oodd" | "so" | "soodd" => Some(Family::Oodd),
            "oeven" => Some(Family::Oeven),
            _ => None,
        }
    }
}

/// A twisting element of the extra symmetry group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    Det,
    Sp,
    Diag,
}

/// `(Γ, λ_Γ)` in the star part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StarPart {
    pub gamma: GammaDescriptor,
    pub partition: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharacterLabel {
    pub family: Family,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Sign>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_type: Option<Sign>,
    pub lambda_plus: Symbol,
    pub lambda_minus: Symbol,
    #[serde(default)]
    pub star: Vec<StarPart>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CuspidalSupport {
    pub family: Family,
    pub t_plus: i64,
    pub t_minus: i64,
    #[serde(default)]
    pub star: Vec<StarPart>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Sign>,
}

/// Exponents with `𝕆 = (u − q^{s₁})(u + q^{s₂})` for each colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Charges {
    pub plus: (i64, i64),
    pub minus: (i64, i64),
}

/// Options for [`enumerate`].
#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    pub quadratic_unipotent: bool,
    /// Largest `Σ δ_Γ |λ_Γ|` allowed.
    pub star_bound: u32,
    /// Pool of `Γ` available to star parts.
    pub gammas: Vec<GammaDescriptor>,
}

fn star_rank(star: &[StarPart]) -> u32 {
    star.iter().map(|s| s.gamma.delta * s.partition.weight()).sum()
}

/// `Π_{Γ∈F1} (−1)^{|λ_Γ|}`.
fn f1_sign(star: &[StarPart]) -> Sign {
    star.iter()
        .filter(|s| s.gamma.class == GammaClass::F1)
        .fold(Sign::Plus, |acc, s| acc * Sign::parity(s.partition.weight() as i64))
}

/// `Π_{σ(Γ)≠1} (−1)^{|λ_Γ|}`.
fn sigma_sign(star: &[StarPart]) -> Sign {
    star.iter()
        .filter(|s| s.gamma.sigma == Sign::Minus)
        .fold(Sign::Plus, |acc, s| acc * Sign::parity(s.partition.weight() as i64))
}

fn oeven_type(t_plus: i64, t_minus: i64, star: &[StarPart]) -> Sign {
    Sign::parity(t_plus + t_minus) * f1_sign(star)
}

impl CharacterLabel {
    /// Builds a label, filling in `n`, the O_even group type and the canonical star order.
    pub fn new(
        family: Family,
        lambda_plus: Symbol,
        lambda_minus: Symbol,
        star: Vec<StarPart>,
        eps: Option<Sign>,
    ) -> Result<CharacterLabel, Error> {
        let mut star = star;
        star.sort();
        let n = lambda_plus.rank() + lambda_minus.rank() + star_rank(&star) as i64;
        let mut l = CharacterLabel {
            family,
            n: n as u32,
            eps: if family == Family::Oodd { eps.or(Some(Sign::Plus)) } else { None },
            group_type: None,
            lambda_plus,
            lambda_minus,
            star,
        };
        if family == Family::Oeven {
            let (tp, tm) = l.core_parameters()?;
            l.group_type = Some(oeven_type(tp, tm, &l.star));
        }
        Ok(l)
    }

    /// The cuspidal label of the given support, with label sign equal to the support sign.
    pub fn cuspidal(sup: &CuspidalSupport) -> Result<CharacterLabel, Error> {
        let (kp, km) = sup.family.kinds();
        CharacterLabel::new(
            sup.family,
            Symbol::cuspidal(sup.t_plus, kp)?,
            Symbol::cuspidal(sup.t_minus, km)?,
            sup.star.clone(),
            sup.eps,
        )
    }

    pub fn lambda(&self, colour: Sign) -> &Symbol {
        if colour.is_plus() {
            &self.lambda_plus
        } else {
            &self.lambda_minus
        }
    }

    fn with_lambda(&self, colour: Sign, s: Symbol) -> CharacterLabel {
        let mut l = self.clone();
        if colour.is_plus() {
            l.lambda_plus = s;
        } else {
            l.lambda_minus = s;
        }
        l.n = (l.lambda_plus.rank() + l.lambda_minus.rank()) as u32 + star_rank(&l.star);
        l
    }

    /// `(t₊, t₋)` read from the defects of `Λ±`.
    pub fn core_parameters(&self) -> Result<(i64, i64), Error> {
        let (kp, km) = self.family.kinds();
        Ok((self.lambda_plus.core_parameter(kp)?, self.lambda_minus.core_parameter(km)?))
    }

    /// Itemized check of every label invariant.
    pub fn validate(&self, ctx: &GlobalContext) -> Result<(), Error> {
        let mut v = Vec::new();
        let (kp, km) = self.family.kinds();
        for (name, s, kind) in [("lambda_plus", &self.lambda_plus, kp), ("lambda_minus", &self.lambda_minus, km)] {
            if !s.is_reduced() {
                v.push(format!("{name} is not in reduced form"));
            }
            if let Err(e) = s.core_parameter(kind) {
                v.push(format!("{name}: {e}"));
            }
        }
        let expected_n = self.lambda_plus.rank() + self.lambda_minus.rank() + star_rank(&self.star) as i64;
        if expected_n != self.n as i64 {
            v.push(format!("n = {} but rank(Λ₊) + rank(Λ₋) + Σ δ|λ_Γ| = {expected_n}", self.n));
        }
        match (self.family, self.eps) {
            (Family::Oodd, None) => v.push("O_odd labels need eps".into()),
            (Family::Sp | Family::Oeven, Some(_)) => v.push("eps is only meaningful for O_odd".into()),
            _ => {}
        }
        match (self.family, self.group_type) {
            (Family::Oeven, None) => v.push("O_even labels need group_type".into()),
            (Family::Oeven, Some(g)) => {
                if let Ok((tp, tm)) = self.core_parameters() {
                    let expected = oeven_type(tp, tm, &self.star);
                    if g != expected {
                        v.push(format!("group_type {g} disagrees with the type bookkeeping, which gives {expected}"));
                    }
                }
            }
            (_, Some(_)) => v.push("group_type is only meaningful for O_even".into()),
            _ => {}
        }
        let mut keys = BTreeSet::new();
        for s in &self.star {
            if s.partition.is_empty() {
                v.push(format!("star part {} has an empty partition", s.gamma));
            }
            if s.gamma.delta == 0 {
                v.push(format!("star part {} has reduced degree 0", s.gamma));
            }
            if !keys.insert(&s.gamma) {
                v.push(format!("star key {} repeated", s.gamma));
            }
            if s.gamma.poly.is_some() {
                match FqContext::new(ctx.q()).and_then(|k| k.check_descriptor(&s.gamma)) {
                    Ok(()) => {}
                    Err(e) => v.push(e.to_string()),
                }
            }
        }
        if !self.star.windows(2).all(|w| w[0] <= w[1]) {
            v.push("star parts are not in canonical order".into());
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Violations(v))
        }
    }

    /// Slots whose symbol is degenerate (`X = Y`); such labels are kept as ordered objects.
    pub fn degenerate_slots(&self) -> Vec<Sign> {
        [Sign::Plus, Sign::Minus].into_iter().filter(|&c| self.lambda(c).is_degenerate()).collect()
    }

    /// Number of 1-hooks stacked on the cuspidal core of `Λ_colour`.
    fn hooks(&self, colour: Sign) -> i64 {
        self.lambda(colour).upsilon().weight() as i64
    }

    pub fn cuspidal_support(&self, ctx: &GlobalContext) -> Result<CuspidalSupport, Error> {
        let (t_plus, t_minus) = self.core_parameters()?;
        let eps = match self.family {
            Family::Oodd => {
                let e = self.eps.ok_or_else(|| Error::Invalid("O_odd label without eps".into()))?;
                Some(e * ctx.zeta_minus_one().pow(self.hooks(Sign::Minus)))
            }
            _ => None,
        };
        Ok(CuspidalSupport { family: self.family, t_plus, t_minus, star: self.star.clone(), eps })
    }

    /// The semisimple class `s ∈ G*` of the Lusztig series (η on `x+1` read from `Λ₋`).
    pub fn semisimple_class(&self) -> Result<SemisimpleClass, Error> {
        let (tp, tm) = self.core_parameters()?;
        let rp = self.lambda_plus.rank() as u32;
        let rm = self.lambda_minus.rank() as u32;
        let mut blocks = Vec::new();
        let (kind, m_minus, m_plus, eta_minus, eta_plus) = match self.family {
            Family::Sp => (SpaceKind::Orthogonal, 2 * rp + 1, 2 * rm, None, Some(Sign::parity(tm))),
            Family::Oodd => (SpaceKind::Symplectic, 2 * rp, 2 * rm, Some(Sign::Plus), Some(Sign::Plus)),
            Family::Oeven => (SpaceKind::Orthogonal, 2 * rp, 2 * rm, Some(Sign::parity(tp)), Some(Sign::parity(tm))),
        };
        blocks.push(Block { key: GammaKey::XMinusOne, mult: m_minus, eta: eta_minus });
        blocks.push(Block { key: GammaKey::XPlusOne, mult: m_plus, eta: eta_plus });
        for s in &self.star {
            let m = s.partition.weight();
            let eta = if kind == SpaceKind::Orthogonal { s.gamma.epsilon().pow(m as i64) } else { Sign::Plus };
            blocks.push(Block { key: GammaKey::Gamma(s.gamma.clone()), mult: m, eta: Some(eta) });
        }
        let dim = self.family.dimension(self.n);
        let eta = (self.family == Family::Oeven).then(|| self.group_type.unwrap_or(Sign::Plus));
        Ok(SemisimpleClass { space: Space { kind, dim, eta }, blocks })
    }
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{}[Λ₊={}, Λ₋={}", self.family, self.n, self.lambda_plus, self.lambda_minus)?;
        for s in &self.star {
            write!(f, ", {}:{}", s.gamma, s.partition)?;
        }
        if let Some(e) = self.eps {
            write!(f, ", ε={e}")?;
        }
        if let Some(g) = self.group_type {
            write!(f, ", type={g}")?;
        }
        f.write_str("]")
    }
}

/// `η` of a symplectic support: `(−1)^{t₊+t₋} Π_{F1} (−1)^{|λ_Γ|}`.
pub fn sp_eta(sup: &CuspidalSupport) -> Sign {
    Sign::parity(sup.t_plus + sup.t_minus) * f1_sign(&sup.star)
}

/// `η^±` of an odd orthogonal support: `ε (−1)^{t±} Π_{σ(Γ)≠1} (−1)^{|λ_Γ|}`.
pub fn oodd_eta(sup: &CuspidalSupport, colour: Sign) -> Sign {
    let t = if colour.is_plus() { sup.t_plus } else { sup.t_minus };
    sup.eps.unwrap_or(Sign::Plus) * Sign::parity(t) * sigma_sign(&sup.star)
}

/// Charges `[ξ₁, ξ₂]` of the Fock components carrying `μ₁` and `μ₂` of `Υ(Λ_colour)`.
///
/// `μ₁` sits on the root `η q^t`, `μ₂` on the other zero of the cuspidal weight function.
pub fn component_charges(sup: &CuspidalSupport, colour: Sign) -> [QIndex; 2] {
    let t = if colour.is_plus() { sup.t_plus } else { sup.t_minus };
    let sp_like = |eta: Sign| [QIndex::new(eta, t), QIndex::new(-eta, -1 - t)];
    let oeven_like = [QIndex::pos(t), QIndex::neg(-t)];
    match (sup.family, colour) {
        (Family::Sp, Sign::Plus) => sp_like(sp_eta(sup)),
        (Family::Oodd, c) => sp_like(oodd_eta(sup, c)),
        _ => oeven_like,
    }
}

/// The exponents `s₁, s₂` with `𝕆 = (u − q^{s₁})(u + q^{s₂})` for the cuspidal weight functions.
pub fn charges(sup: &CuspidalSupport) -> Charges {
    let split = |c: [QIndex; 2]| {
        let pos = c.iter().find(|a| a.sign.is_plus()).expect("one positive root").exp;
        let neg = c.iter().find(|a| !a.sign.is_plus()).expect("one negative root").exp;
        (pos, neg)
    };
    Charges { plus: split(component_charges(sup, Sign::Plus)), minus: split(component_charges(sup, Sign::Minus)) }
}

/// The squared constant `(t^colour)²` as a root: `−q^{−1}` or `−1`.
pub fn root_product(family: Family, colour: Sign) -> QIndex {
    match (family, colour) {
        (Family::Oodd, _) | (Family::Sp, Sign::Plus) => QIndex::neg(-1),
        _ => QIndex::neg(0),
    }
}

/// Fock coordinates `(|Υ(Λ₊), ξ⁺⟩, |Υ(Λ₋), ξ⁻⟩)`.
pub fn fock_coordinates(l: &CharacterLabel, ctx: &GlobalContext) -> Result<[ChargedMultipartition; 2], Error> {
    let sup = l.cuspidal_support(ctx)?;
    let coords = |colour: Sign| {
        let b = l.lambda(colour).upsilon();
        ChargedMultipartition { lambdas: vec![b.first, b.second], xis: component_charges(&sup, colour).to_vec() }
    };
    Ok([coords(Sign::Plus), coords(Sign::Minus)])
}

/// The label with the given Fock coordinates over the given cuspidal support.
pub fn label_from_fock(
    coords: &[ChargedMultipartition; 2],
    sup: &CuspidalSupport,
    ctx: &GlobalContext,
) -> Result<CharacterLabel, Error> {
    let mut lambdas = Vec::new();
    for (k, colour) in [Sign::Plus, Sign::Minus].into_iter().enumerate() {
        let c = &coords[k];
        if c.xis != component_charges(sup, colour) || c.lambdas.len() != 2 {
            return Err(Error::Invalid(format!("coordinates of colour {colour} do not match the support")));
        }
        let kind = sup.family.kind(colour);
        let t = if colour.is_plus() { sup.t_plus } else { sup.t_minus };
        let defect = Symbol::cuspidal(t, kind)?.defect();
        lambdas.push(Symbol::upsilon_inverse(&Bipartition::new(c.lambdas[0].clone(), c.lambdas[1].clone()), defect));
    }
    let lambda_minus = lambdas.pop().unwrap();
    let lambda_plus = lambdas.pop().unwrap();
    let eps = match sup.family {
        Family::Oodd => {
            let hooks = coords[1].size() as i64;
            Some(sup.eps.unwrap_or(Sign::Plus) * ctx.zeta_minus_one().pow(hooks))
        }
        _ => None,
    };
    CharacterLabel::new(sup.family, lambda_plus, lambda_minus, sup.star.clone(), eps)
}

/// `(𝕆⁺(u), 𝕆⁻(v))`.
pub fn weight_functions(
    l: &CharacterLabel,
    ctx: &GlobalContext,
) -> Result<(RootRatio<QIndex>, RootRatio<QIndex>), Error> {
    let [p, m] = fock_coordinates(l, ctx)?;
    Ok((p.residue_function(), m.residue_function()))
}

/// Kac–Moody weights of the two colours.
pub fn weights(l: &CharacterLabel, ctx: &GlobalContext) -> Result<(Weight, Weight), Error> {
    let [p, m] = fock_coordinates(l, ctx)?;
    Ok((p.weight(), m.weight()))
}

fn residue_of(sup: &CuspidalSupport, colour: Sign, row: Row, content: i64) -> QIndex {
    let c = component_charges(sup, colour);
    let base = if row == Row::X { c[0] } else { c[1] };
    base.shift(content)
}

fn branch(
    l: &CharacterLabel,
    colour: Sign,
    i: QIndex,
    ctx: &GlobalContext,
    add: bool,
) -> Result<Vec<CharacterLabel>, Error> {
    let sup = l.cuspidal_support(ctx)?;
    let moves = if add { l.lambda(colour).one_hook_additions() } else { l.lambda(colour).one_hook_removals() };
    let mut out = Vec::new();
    for m in moves {
        if residue_of(&sup, colour, m.row, m.content) != i {
            continue;
        }
        let mut next = l.with_lambda(colour, m.symbol);
        if l.family == Family::Oodd && !colour.is_plus() {
            next.eps = next.eps.map(|e| e * ctx.zeta_minus_one());
        }
        out.push(next);
    }
    out.sort();
    Ok(out)
}

/// `F^colour_i`: add a 1-hook of residue `i` to `Λ_colour`.
pub fn apply_f(l: &CharacterLabel, colour: Sign, i: QIndex, ctx: &GlobalContext) -> Result<Vec<CharacterLabel>, Error> {
    branch(l, colour, i, ctx, true)
}

/// `E^colour_i`: remove a 1-hook of residue `i` from `Λ_colour`.
pub fn apply_e(l: &CharacterLabel, colour: Sign, i: QIndex, ctx: &GlobalContext) -> Result<Vec<CharacterLabel>, Error> {
    branch(l, colour, i, ctx, false)
}

/// The label of `g·ρ`.
pub fn twist(l: &CharacterLabel, g: Twist, ctx: &GlobalContext) -> Result<CharacterLabel, Error> {
    let mut out = l.clone();
    match (g, l.family) {
        (Twist::Det, Family::Oeven) => {
            out.lambda_plus = l.lambda_plus.transpose();
            out.lambda_minus = l.lambda_minus.transpose();
        }
        (Twist::Det, Family::Oodd) => out.eps = l.eps.map(|e| -e),
        (Twist::Sp, Family::Oeven | Family::Oodd) => {
            out.lambda_plus = l.lambda_minus.clone();
            out.lambda_minus = l.lambda_plus.clone();
            let mut star = Vec::with_capacity(l.star.len());
            for s in &l.star {
                star.push(StarPart { gamma: s.gamma.negate(ctx.q())?, partition: s.partition.clone() });
            }
            star.sort();
            out.star = star;
            if l.family == Family::Oodd {
                out.eps = l.eps.map(|e| e * ctx.zeta_minus_one().pow(l.n as i64));
            }
        }
        (Twist::Diag, Family::Sp | Family::Oeven) => out.lambda_minus = l.lambda_minus.transpose(),
        _ => return Err(Error::Invalid(format!("{g:?} is not a symmetry of {:?}", l.family))),
    }
    Ok(out)
}

/// Labels with the same uniform projection as `l`.
pub fn uniform_orbit(l: &CharacterLabel, ctx: &GlobalContext) -> Result<Vec<CharacterLabel>, Error> {
    let mut set = BTreeSet::new();
    set.insert(l.clone());
    match l.family {
        Family::Oodd => {
            set.insert(twist(l, Twist::Det, ctx)?);
        }
        Family::Sp => {
            set.insert(twist(l, Twist::Diag, ctx)?);
        }
        Family::Oeven => {
            let d = twist(l, Twist::Diag, ctx)?;
            set.insert(twist(l, Twist::Det, ctx)?);
            set.insert(twist(&d, Twist::Det, ctx)?);
            set.insert(d);
        }
    }
    Ok(set.into_iter().collect())
}

/// Same uniform projection and same colored weight functions.
pub fn invariants_equal(l1: &CharacterLabel, l2: &CharacterLabel, ctx: &GlobalContext) -> Result<bool, Error> {
    if l1.family != l2.family {
        return Err(Error::Invalid(format!("families differ: {:?} vs {:?}", l1.family, l2.family)));
    }
    if !uniform_orbit(l1, ctx)?.contains(l2) {
        return Ok(false);
    }
    Ok(weight_functions(l1, ctx)? == weight_functions(l2, ctx)?)
}

/// Reads `(t, μ₁, μ₂, η)` off one colored weight function.
fn split_colour(r: &RootRatio<QIndex>, sp_like: bool) -> Result<(i64, Partition, Partition, Sign), Error> {
    let pos = ChargedPartition::invert_residue_function(&r.sign_part(Sign::Plus), Sign::Plus)?;
    let neg = ChargedPartition::invert_residue_function(&r.sign_part(Sign::Minus), Sign::Minus)?;
    let (cp, cn) = (pos.charge, neg.charge);
    if sp_like {
        if cp >= 0 && cn == -1 - cp {
            return Ok((cp, pos.mu, neg.mu, Sign::Plus));
        }
        if cn >= 0 && cp == -1 - cn {
            return Ok((cn, neg.mu, pos.mu, Sign::Minus));
        }
    } else if cn == -cp {
        return Ok((cp, pos.mu, neg.mu, Sign::Plus));
    }
    Err(Error::Invalid(format!("charges ({cp}, {cn}) fit no cuspidal support")))
}

/// The quadratic-unipotent label with the given colored weight functions.
pub fn label_from_weights(
    o_plus: &RootRatio<QIndex>,
    o_minus: &RootRatio<QIndex>,
    family: Family,
    ctx: &GlobalContext,
) -> Result<CharacterLabel, Error> {
    let plus_sp = family != Family::Oeven;
    let minus_sp = family == Family::Oodd;
    let (tp, a1, a2, eta_p) = split_colour(o_plus, plus_sp)?;
    let (tm, b1, b2, eta_m) = split_colour(o_minus, minus_sp)?;
    let eps = match family {
        Family::Sp => {
            if eta_p != Sign::parity(tp + tm) {
                return Err(Error::Invalid("sign of 𝕆⁺ is inconsistent with (t₊, t₋)".into()));
            }
            None
        }
        Family::Oodd => {
            let e = eta_p * Sign::parity(tp);
            if e != eta_m * Sign::parity(tm) {
                return Err(Error::Invalid("𝕆⁺ and 𝕆⁻ give different signs ε".into()));
            }
            Some(e)
        }
        Family::Oeven => None,
    };
    let sup = CuspidalSupport { family, t_plus: tp, t_minus: tm, star: Vec::new(), eps };
    let coords = [
        ChargedMultipartition { lambdas: vec![a1, a2], xis: component_charges(&sup, Sign::Plus).to_vec() },
        ChargedMultipartition { lambdas: vec![b1, b2], xis: component_charges(&sup, Sign::Minus).to_vec() },
    ];
    label_from_fock(&coords, &sup, ctx)
}

fn star_assignments(pool: &[GammaDescriptor], total: u32) -> Vec<Vec<StarPart>> {
    fn rec(pool: &[GammaDescriptor], rem: u32, cur: &mut Vec<StarPart>, out: &mut Vec<Vec<StarPart>>) {
        let Some((g, rest)) = pool.split_first() else {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        };
        rec(rest, rem, cur, out);
        let mut k = 1;
        while k * g.delta <= rem {
            for p in Partition::all_of_weight(k) {
                cur.push(StarPart { gamma: g.clone(), partition: p });
                rec(rest, rem - k * g.delta, cur, out);
                cur.pop();
            }
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(pool, total, &mut Vec::new(), &mut out);
    out
}

/// Every label of rank `n`, sorted.
pub fn enumerate(family: Family, n: u32, opts: &EnumerateOptions) -> Vec<CharacterLabel> {
    let (kp, km) = family.kinds();
    let star_max = if opts.quadratic_unipotent { 0 } else { opts.star_bound.min(n) };
    let mut pool = opts.gammas.clone();
    pool.sort();
    pool.dedup();
    let mut out = Vec::new();
    for r in 0..=star_max {
        let stars = if r == 0 { vec![Vec::new()] } else { star_assignments(&pool, r) };
        for star in stars {
            for a in 0..=(n - r) as i64 {
                let plus = Symbol::all_of_kind(a, kp);
                let minus = Symbol::all_of_kind(n as i64 - r as i64 - a, km);
                for lp in &plus {
                    for lm in &minus {
                        let signs: &[Option<Sign>] =
                            if family == Family::Oodd { &[Some(Sign::Plus), Some(Sign::Minus)] } else { &[None] };
                        for &eps in signs {
                            let l = CharacterLabel::new(family, lp.clone(), lm.clone(), star.clone(), eps)
                                .expect("enumerated symbols have family-appropriate defects");
                            out.push(l);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}
