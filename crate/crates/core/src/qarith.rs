//! Signed powers of `q` and cancel-reduced ratios of monic linear factors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A sign `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^k`.
    pub fn parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn pow(self, k: i64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::parity(k),
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_i64())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Sign, D::Error> {
        let v = i64::deserialize(d)?;
        Sign::from_i64(v).ok_or_else(|| serde::de::Error::custom(format!("sign must be 1 or -1, got {v}")))
    }
}

/// The element `sign * q^exp` of `I = q^Z ⊔ -q^Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QIndex {
    pub sign: Sign,
    pub exp: i64,
}

impl QIndex {
    pub fn new(sign: Sign, exp: i64) -> QIndex {
        QIndex { sign, exp }
    }

    pub fn pos(exp: i64) -> QIndex {
        QIndex::new(Sign::Plus, exp)
    }

    pub fn neg(exp: i64) -> QIndex {
        QIndex::new(Sign::Minus, exp)
    }

    /// Multiplication by `q^k`.
    pub fn shift(self, k: i64) -> QIndex {
        QIndex::new(self.sign, self.exp + k)
    }

    pub fn negate(self) -> QIndex {
        QIndex::new(-self.sign, self.exp)
    }

    pub fn times(self, other: QIndex) -> QIndex {
        QIndex::new(self.sign * other.sign, self.exp + other.exp)
    }

    /// Parses `+3`, `-0`, `3`, `-q^2`, `q^-1`, `+q`.
    pub fn parse(text: &str) -> Option<QIndex> {
        let t = text.trim();
        let (sign, rest) = match t.as_bytes().first()? {
            b'+' => (Sign::Plus, &t[1..]),
            b'-' => (Sign::Minus, &t[1..]),
            _ => (Sign::Plus, t),
        };
        let exp = if let Some(r) = rest.strip_prefix('q') {
            if r.is_empty() {
                1
            } else {
                let r = r.strip_prefix('^')?;
                let r = r.trim_start_matches('{').trim_end_matches('}');
                r.parse().ok()?
            }
        } else {
            rest.parse().ok()?
        };
        Some(QIndex::new(sign, exp))
    }

    fn render_power(exp: i64) -> String {
        match exp {
            0 => "1".to_string(),
            1 => "q".to_string(),
            e if (0..10).contains(&e) => format!("q^{e}"),
            e => format!("q^{{{e}}}"),
        }
    }
}

impl fmt::Display for QIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if (0..10).contains(&self.exp) {
            write!(f, "{}q^{}", self.sign, self.exp)
        } else {
            write!(f, "{}q^{{{}}}", self.sign, self.exp)
        }
    }
}

/// A root that can be rendered as the linear factor `(u - root)`.
pub trait Root: Ord + Clone {
    /// Text of the factor `var - root`, unparenthesized.
    fn factor(&self, var: &str) -> String;
    /// Sort key placing roots in display order.
    fn display_key(&self) -> (i64, i64);
}

impl Root for i64 {
    fn factor(&self, var: &str) -> String {
        match *self {
            0 => var.to_string(),
            c if c > 0 => format!("{var}-{c}"),
            c => format!("{var}+{}", -c),
        }
    }

    fn display_key(&self) -> (i64, i64) {
        (0, -*self)
    }
}

impl Root for QIndex {
    fn factor(&self, var: &str) -> String {
        let op = match self.sign {
            Sign::Plus => '-',
            Sign::Minus => '+',
        };
        format!("{var}{op}{}", QIndex::render_power(self.exp))
    }

    fn display_key(&self) -> (i64, i64) {
        let s = match self.sign {
            Sign::Plus => 0,
            Sign::Minus => 1,
        };
        (s, -self.exp)
    }
}

/// `Π (u - z) / Π (u - p)` stored as net multiplicities, so zeros and poles never overlap.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootRatio<A: Ord> {
    mult: BTreeMap<A, i64>,
}

impl<A: Root> RootRatio<A> {
    pub fn one() -> Self {
        RootRatio { mult: BTreeMap::new() }
    }

    pub fn make<Z, P>(zeros: Z, poles: P) -> Self
    where
        Z: IntoIterator<Item = A>,
        P: IntoIterator<Item = A>,
    {
        let mut r = RootRatio::one();
        for z in zeros {
            r.bump(z, 1);
        }
        for p in poles {
            r.bump(p, -1);
        }
        r
    }

    fn bump(&mut self, a: A, by: i64) {
        let e = self.mult.entry(a.clone()).or_insert(0);
        *e += by;
        if *e == 0 {
            self.mult.remove(&a);
        }
    }

    /// Zeros with multiplicity, ascending.
    pub fn zeros(&self) -> Vec<A> {
        self.expand(|m| m > 0)
    }

    /// Poles with multiplicity, ascending.
    pub fn poles(&self) -> Vec<A> {
        self.expand(|m| m < 0)
    }

    fn expand(&self, keep: impl Fn(i64) -> bool) -> Vec<A> {
        let mut out = Vec::new();
        for (a, &m) in &self.mult {
            if keep(m) {
                for _ in 0..m.abs() {
                    out.push(a.clone());
                }
            }
        }
        out
    }

    /// Net multiplicity of `a`: positive for a zero, negative for a pole.
    pub fn multiplicity(&self, a: &A) -> i64 {
        self.mult.get(a).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&A, i64)> {
        self.mult.iter().map(|(a, &m)| (a, m))
    }

    pub fn is_one(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.mult.values().all(|&m| m > 0)
    }

    /// Numerator degree minus denominator degree.
    pub fn degree(&self) -> i64 {
        self.mult.values().sum()
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (a, &m) in &other.mult {
            r.bump(a.clone(), m);
        }
        r
    }

    pub fn inverse(&self) -> Self {
        RootRatio { mult: self.mult.iter().map(|(a, &m)| (a.clone(), -m)).collect() }
    }

    pub fn map_roots<B: Root>(&self, f: impl Fn(&A) -> B) -> RootRatio<B> {
        let mut r = RootRatio::one();
        for (a, &m) in &self.mult {
            r.bump(f(a), m);
        }
        r
    }

    fn render_side(&self, var: &str, positive: bool) -> (String, usize) {
        let mut roots: Vec<A> = if positive { self.zeros() } else { self.poles() };
        roots.sort_by_key(|a| a.display_key());
        let n = roots.len();
        let text = roots
            .iter()
            .map(|a| {
                let f = a.factor(var);
                if f == var {
                    f
                } else {
                    format!("({f})")
                }
            })
            .collect::<String>();
        (text, n)
    }

    /// Numerator and denominator as factor strings, e.g. `("(u-5)(u-1)(u+2)", "(u-4)(u+1)")`.
    pub fn render_fraction(&self, var: &str) -> (String, String) {
        let (num, n) = self.render_side(var, true);
        let (den, d) = self.render_side(var, false);
        let num = if n == 0 { "1".to_string() } else { num };
        let den = if d == 0 { "1".to_string() } else { den };
        (num, den)
    }

    /// One-line rendering such as `(u-5)(u-1)(u+2)/((u-4)(u+1))`.
    pub fn render(&self, var: &str) -> String {
        let (num, _) = self.render_fraction(var);
        let (den, d) = self.render_side(var, false);
        match d {
            0 => num,
            1 => format!("{num}/{den}"),
            _ => format!("{num}/({den})"),
        }
    }
}

impl RootRatio<QIndex> {
    /// The substitution `u -> -u` at root level.
    pub fn negate_variable(&self) -> Self {
        self.map_roots(|a| a.negate())
    }

    /// The factors whose roots carry sign `s`.
    pub fn sign_part(&self, s: Sign) -> Self {
        RootRatio { mult: self.mult.iter().filter(|(a, _)| a.sign == s).map(|(a, &m)| (*a, m)).collect() }
    }
}

impl<A: Root + Serialize> Serialize for RootRatio<A> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<A> {
            zeros: Vec<A>,
            poles: Vec<A>,
        }
        Wire { zeros: self.zeros(), poles: self.poles() }.serialize(s)
    }
}

impl<'de, A: Root + Deserialize<'de>> Deserialize<'de> for RootRatio<A> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire<A> {
            #[serde(default = "Vec::new")]
            zeros: Vec<A>,
            #[serde(default = "Vec::new")]
            poles: Vec<A>,
        }
        let w = Wire::<A>::deserialize(d)?;
        Ok(RootRatio::make(w.zeros, w.poles))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_cancels() {
        let r = RootRatio::make(vec![1i64, 5], vec![5]);
        assert_eq!(r.zeros(), vec![1]);
        assert!(r.poles().is_empty());
        assert!(RootRatio::<i64>::make(vec![], vec![]).is_one());
        let r = RootRatio::make(vec![QIndex::pos(2), QIndex::neg(0)], vec![QIndex::pos(2)]);
        assert_eq!(r.zeros(), vec![QIndex::neg(0)]);
    }

    #[test]
    fn opposite_signs_never_cancel() {
        let r = RootRatio::make(vec![QIndex::pos(0)], vec![QIndex::neg(0)]);
        assert_eq!(r.zeros().len(), 1);
        assert_eq!(r.poles().len(), 1);
    }

    #[test]
    fn negate_variable_flips_signs() {
        let t = 2;
        let r = RootRatio::make(vec![QIndex::pos(t), QIndex::neg(-1 - t)], vec![]);
        let n = r.negate_variable();
        assert_eq!(n, RootRatio::make(vec![QIndex::neg(t), QIndex::pos(-1 - t)], vec![]));
        assert_eq!(n.negate_variable(), r);
    }

    #[test]
    fn rendering() {
        let r = RootRatio::make(vec![5i64, 1, -2], vec![4, -1]);
        assert_eq!(r.render("u"), "(u-5)(u-1)(u+2)/((u-4)(u+1))");
        let r = RootRatio::make(vec![1i64, -1], vec![0]);
        assert_eq!(r.render("u"), "(u-1)(u+1)/u");
        let r = RootRatio::make(vec![QIndex::pos(0), QIndex::neg(-1)], vec![]);
        assert_eq!(r.render("u"), "(u-1)(u+q^{-1})");
        assert_eq!(RootRatio::<i64>::one().render("v"), "1");
    }

    #[test]
    fn parse_qindex() {
        assert_eq!(QIndex::parse("+0"), Some(QIndex::pos(0)));
        assert_eq!(QIndex::parse("-3"), Some(QIndex::neg(3)));
        assert_eq!(QIndex::parse("-q^{-2}"), Some(QIndex::neg(-2)));
        assert_eq!(QIndex::parse("q"), Some(QIndex::pos(1)));
        assert_eq!(QIndex::parse("x"), None);
    }

    #[test]
    fn json_roundtrip() {
        let r = RootRatio::make(vec![QIndex::pos(0), QIndex::neg(-1)], vec![QIndex::pos(3)]);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"zeros":[{"sign":1,"exp":0},{"sign":-1,"exp":-1}],"poles":[{"sign":1,"exp":3}]}"#);
        let back: RootRatio<QIndex> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
