//! Monic polynomials over `F_q` (q odd): irreducibles, duals, the classes `F0/F1/F2` and `σ(Γ)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qarith::Sign;
use crate::Error;

/// `F_q` for an odd prime power `q = p^e`, elements encoded as base-`p` digit strings.
#[derive(Clone, Debug)]
pub struct FqContext {
    q: u32,
    p: u32,
    e: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// A monic polynomial over `F_q`, coefficients low to high.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FqPoly(Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GammaClass {
    F1,
    F2,
}

impl GammaClass {
    /// `ε_Γ`: `-1` on `F1`, `+1` on `F2`.
    pub fn epsilon(self) -> Sign {
        match self {
            GammaClass::F1 => Sign::Minus,
            GammaClass::F2 => Sign::Plus,
        }
    }
}

/// Classification of a monic irreducible other than `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    F0,
    F1 { delta: u32 },
    F2 { delta: u32, partner: FqPoly },
}

/// Abstract stand-in for an element of `F1 ∪ F2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaDescriptor {
    pub class: GammaClass,
    pub delta: u32,
    pub sigma: Sign,
    /// Distinguishes abstract descriptors sharing `(class, delta, sigma)`.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub tag: u32,
    /// A concrete polynomial, cross-checked against the other fields when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<FqPoly>,
}

fn is_zero(v: &u32) -> bool {
    *v == 0
}

impl GammaDescriptor {
    pub fn new(class: GammaClass, delta: u32, sigma: Sign) -> GammaDescriptor {
        GammaDescriptor { class, delta, sigma, tag: 0, poly: None }
    }

    pub fn with_tag(mut self, tag: u32) -> GammaDescriptor {
        self.tag = tag;
        self
    }

    pub fn epsilon(&self) -> Sign {
        self.class.epsilon()
    }

    /// The descriptor of `-Γ`.
    ///
    /// Abstract mode uses `σ(-Γ) = ε_Γ·ζ(-1)^δ·σ(Γ)`, which is what the concrete engine computes.
    pub fn negate(&self, q: u64) -> Result<GammaDescriptor, Error> {
        if let Some(poly) = &self.poly {
            let ctx = FqContext::new(q)?;
            return ctx.descriptor(&ctx.negate_class(poly));
        }
        let sigma = self.sigma * self.epsilon() * zeta_minus_one(q).pow(self.delta as i64);
        Ok(GammaDescriptor { sigma, ..self.clone() })
    }
}

impl fmt::Display for GammaDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[δ={},σ={}", self.class, self.delta, self.sigma)?;
        if self.tag != 0 {
            write!(f, ",#{}", self.tag)?;
        }
        f.write_str("]")
    }
}

/// `ζ(-1) = (-1)^{(q-1)/2}`.
pub fn zeta_minus_one(q: u64) -> Sign {
    if q % 4 == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// `(p, e)` with `q = p^e`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// Number of monic irreducibles of degree `d` over `F_q`: `(1/d) Σ_{k|d} μ(k) q^{d/k}`.
pub fn necklace_count(q: u64, d: u32) -> u64 {
    fn mobius(mut n: u32) -> i64 {
        let mut m = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                m = -m;
            }
            p += 1;
        }
        if n > 1 {
            m = -m;
        }
        m
    }
    let total: i64 = (1..=d).filter(|k| d.is_multiple_of(*k)).map(|k| mobius(k) * (q as i64).pow(d / k)).sum();
    (total / d as i64) as u64
}

impl FqPoly {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        f.write_str(&terms.join(" + "))
    }
}

type Poly = Vec<u32>;

impl FqContext {
    pub fn new(q: u64) -> Result<FqContext, Error> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::Invalid(format!("q = {q} is not a prime power")))?;
        if p == 2 {
            return Err(Error::Invalid("characteristic 2 is not supported".into()));
        }
        if q > 1 << 12 {
            return Err(Error::Invalid(format!("q = {q} is too large for table arithmetic")));
        }
        let (q, p) = (q as u32, p as u32);
        let modulus = if e == 1 { vec![0, 1] } else { prime_field_irreducible(p, e) };
        let digits = |a: u32| -> Vec<u32> { (0..e).map(|k| (a / p.pow(k)) % p).collect() };
        let pack = |d: &[u32]| -> u32 { d.iter().enumerate().map(|(k, &c)| c * p.pow(k as u32)).sum() };
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = pack(&s);
                let mut prod = vec![0u32; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (e as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    for (j, &m) in modulus.iter().enumerate().take(e as usize) {
                        let idx = k - e as usize + j;
                        prod[idx] = (prod[idx] + c * (p - m)) % p;
                    }
                    prod[k] = 0;
                }
                mul[(a * q + b) as usize] = pack(&prod[..e as usize]);
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap()).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap() })
            .collect();
        Ok(FqContext { q, p, e, add, mul, neg, inv })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.e
    }

    pub fn zeta_minus_one(&self) -> Sign {
        zeta_minus_one(self.q as u64)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// The element `-1`.
    pub fn minus_one(&self) -> u32 {
        self.neg(1)
    }

    /// Quadratic character of a nonzero element of `F_q`.
    pub fn legendre(&self, a: u32) -> Sign {
        let mut r = 1;
        for _ in 0..(self.q - 1) / 2 {
            r = self.mul(r, a);
        }
        if r == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Checks monicity and coefficient range.
    pub fn poly(&self, coeffs: Vec<u32>) -> Result<FqPoly, Error> {
        if coeffs.len() < 2 || *coeffs.last().unwrap() != 1 {
            return Err(Error::Invalid(format!("{coeffs:?} is not a monic polynomial of degree >= 1")));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.q) {
            return Err(Error::Invalid(format!("coefficient {c} is not an element of F_{}", self.q)));
        }
        Ok(FqPoly(coeffs))
    }

    pub fn eval(&self, f: &FqPoly, a: u32) -> u32 {
        f.0.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, a), c))
    }

    fn trim(&self, mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn sub(&self, a: &[u32], b: &[u32]) -> Poly {
        let n = a.len().max(b.len());
        let r = (0..n)
            .map(|k| self.add(a.get(k).copied().unwrap_or(0), self.neg(b.get(k).copied().unwrap_or(0))))
            .collect();
        self.trim(r)
    }

    fn mul_poly(&self, a: &[u32], b: &[u32]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = self.add(r[i + j], self.mul(x, y));
            }
        }
        self.trim(r)
    }

    fn rem(&self, a: &[u32], m: &[u32]) -> Poly {
        let mut r = self.trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = self.inv(m[dm]);
        while r.len() > dm {
            let k = r.len() - 1;
            let c = self.mul(r[k], lead_inv);
            for (j, &mj) in m.iter().enumerate() {
                let idx = k - dm + j;
                r[idx] = self.add(r[idx], self.neg(self.mul(c, mj)));
            }
            r = self.trim(r);
        }
        r
    }

    fn gcd(&self, a: &[u32], b: &[u32]) -> Poly {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        a
    }

    fn powmod(&self, base: &[u32], mut exp: u64, m: &[u32]) -> Poly {
        let mut result = self.rem(&[1], m);
        let mut b = self.rem(base, m);
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.rem(&self.mul_poly(&result, &b), m);
            }
            b = self.rem(&self.mul_poly(&b, &b), m);
            exp >>= 1;
        }
        result
    }

    /// Rabin's test.
    pub fn is_irreducible(&self, f: &FqPoly) -> bool {
        let d = f.degree();
        if d == 1 {
            return true;
        }
        let m = &f.0;
        let x = vec![0, 1];
        let mut frob = vec![x.clone()];
        for _ in 0..d {
            let last = frob.last().unwrap();
            frob.push(self.powmod(last, self.q as u64, m));
        }
        if !self.rem(&self.sub(&frob[d], &x), m).is_empty() {
            return false;
        }
        let mut n = d;
        let mut primes = Vec::new();
        let mut r = 2;
        while r * r <= n {
            if n.is_multiple_of(r) {
                primes.push(r);
                while n.is_multiple_of(r) {
                    n /= r;
                }
            }
            r += 1;
        }
        if n > 1 {
            primes.push(n);
        }
        primes.iter().all(|&r| {
            let g = self.gcd(m, &self.sub(&frob[d / r], &x));
            g.len() == 1
        })
    }

    fn monic_of_degree(&self, d: usize, index: u64) -> FqPoly {
        let mut c = Vec::with_capacity(d + 1);
        let mut k = index;
        for _ in 0..d {
            c.push((k % self.q as u64) as u32);
            k /= self.q as u64;
        }
        c.push(1);
        FqPoly(c)
    }

    /// All monic irreducibles of degree `d`, in coefficient order.
    pub fn irreducibles(&self, d: usize) -> Result<Vec<FqPoly>, Error> {
        if d < 1 {
            return Err(Error::Invalid("degree must be at least 1".into()));
        }
        let total = (self.q as u64).checked_pow(d as u32).filter(|&t| t <= 1 << 26);
        let total = total.ok_or_else(|| Error::Invalid(format!("q^{d} candidates is beyond desk scale")))?;
        Ok((0..total).map(|k| self.monic_of_degree(d, k)).filter(|f| self.is_irreducible(f)).collect())
    }

    /// All self-dual monic irreducibles of degree `2δ` (the class `F1` at reduced degree `δ`).
    pub fn self_dual_irreducibles(&self, delta: usize) -> Vec<FqPoly> {
        let total = (self.q as u64).pow(delta as u32);
        let mut out = Vec::new();
        for k in 0..total {
            let half = self.monic_of_degree(delta, k).0;
            let mut c = vec![0; 2 * delta + 1];
            c[0] = 1;
            c[2 * delta] = 1;
            for i in 1..=delta {
                c[i] = half[i - 1];
                c[2 * delta - i] = half[i - 1];
            }
            let f = FqPoly(c);
            if self.is_irreducible(&f)
                && self.classify(&f).map(|c| matches!(c, Classification::F1 { .. })).unwrap_or(false)
            {
                out.push(f);
            }
        }
        out.sort();
        out
    }

    fn is_x(f: &FqPoly) -> bool {
        f.0 == [0, 1]
    }

    /// The monic polynomial whose roots are the inverses of those of `Γ`.
    pub fn dual(&self, f: &FqPoly) -> Result<FqPoly, Error> {
        if f.0[0] == 0 {
            return Err(Error::Invalid(format!("{f} has the root 0 and no dual")));
        }
        let c0inv = self.inv(f.0[0]);
        Ok(FqPoly(f.0.iter().rev().map(|&c| self.mul(c, c0inv)).collect()))
    }

    /// `(-1)^{deg Γ} Γ(-x)`.
    pub fn negate_class(&self, f: &FqPoly) -> FqPoly {
        let d = f.degree();
        FqPoly(f.0.iter().enumerate().map(|(i, &c)| if (d - i) % 2 == 1 { self.neg(c) } else { c }).collect())
    }

    pub fn classify(&self, f: &FqPoly) -> Result<Classification, Error> {
        if FqContext::is_x(f) {
            return Err(Error::Invalid("x is excluded from the classification".into()));
        }
        if !self.is_irreducible(f) {
            return Err(Error::Invalid(format!("{f} is not irreducible")));
        }
        if f.degree() == 1 && (f.0[0] == self.minus_one() || f.0[0] == 1) {
            return Ok(Classification::F0);
        }
        let d = self.dual(f)?;
        if d == *f {
            Ok(Classification::F1 { delta: (f.degree() / 2) as u32 })
        } else {
            Ok(Classification::F2 { delta: f.degree() as u32, partner: d })
        }
    }

    /// `σ(Γ)`: the quadratic character of a root `α` in the cyclic group containing it.
    ///
    /// On `F1` that group is the norm-one subgroup of order `q^δ+1`; on `F2` it is `F_{q^δ}^×`.
    pub fn sigma(&self, f: &FqPoly) -> Result<Sign, Error> {
        let (exp, _) = match self.classify(f)? {
            Classification::F0 => return Err(Error::Invalid(format!("σ is undefined on {f} in F0"))),
            Classification::F1 { delta } => ((self.q as u64).pow(delta).div_ceil(2), delta),
            Classification::F2 { delta, .. } => (((self.q as u64).pow(delta) - 1) / 2, delta),
        };
        let r = self.powmod(&[0, 1], exp, &f.0);
        Ok(if r == [1] { Sign::Plus } else { Sign::Minus })
    }

    /// The abstract descriptor of `Γ ∈ F1 ∪ F2`, carrying `Γ` itself.
    pub fn descriptor(&self, f: &FqPoly) -> Result<GammaDescriptor, Error> {
        let (class, delta) = match self.classify(f)? {
            Classification::F0 => return Err(Error::Invalid(format!("{f} lies in F0"))),
            Classification::F1 { delta } => (GammaClass::F1, delta),
            Classification::F2 { delta, .. } => (GammaClass::F2, delta),
        };
        let sigma = self.sigma(f)?;
        Ok(GammaDescriptor { class, delta, sigma, tag: 0, poly: Some(f.clone()) })
    }

    /// Checks that a descriptor's fields agree with its polynomial, when it has one.
    pub fn check_descriptor(&self, g: &GammaDescriptor) -> Result<(), Error> {
        let Some(poly) = &g.poly else { return Ok(()) };
        let poly = self.poly(poly.0.clone())?;
        let d = self.descriptor(&poly)?;
        if (d.class, d.delta, d.sigma) != (g.class, g.delta, g.sigma) {
            return Err(Error::Invalid(format!("descriptor {g} disagrees with its polynomial ({d})")));
        }
        Ok(())
    }

    /// Elements of `F_q[x]/(m)` as residue polynomials, all `q^{deg m}` of them.
    pub fn quotient_elements(&self, m: &FqPoly) -> Vec<Vec<u32>> {
        let d = m.degree();
        let total = (self.q as u64).pow(d as u32);
        (0..total).map(|k| self.trim(self.monic_of_degree(d, k).0[..d].to_vec())).collect()
    }

    /// Product in `F_q[x]/(m)`.
    pub fn quotient_mul(&self, a: &[u32], b: &[u32], m: &FqPoly) -> Vec<u32> {
        self.rem(&self.mul_poly(a, b), &m.0)
    }

    /// Power in `F_q[x]/(m)`.
    pub fn quotient_pow(&self, a: &[u32], exp: u64, m: &FqPoly) -> Vec<u32> {
        self.powmod(a, exp, &m.0)
    }
}

/// Smallest monic irreducible of degree `e` over `F_p`, by trial division.
fn prime_field_irreducible(p: u32, e: u32) -> Vec<u32> {
    let candidates = |d: u32| -> Vec<Vec<u32>> {
        (0..p.pow(d))
            .map(|k| {
                let mut c: Vec<u32> = (0..d).map(|i| (k / p.pow(i)) % p).collect();
                c.push(1);
                c
            })
            .collect()
    };
    let rem = |a: &[u32], m: &[u32]| -> Vec<u32> {
        let mut r = a.to_vec();
        let dm = m.len() - 1;
        while r.len() > dm {
            let k = r.len() - 1;
            let c = r[k];
            for (j, &mj) in m.iter().enumerate() {
                let idx = k - dm + j;
                r[idx] = (r[idx] + p * p - c * mj % p) % p;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        r
    };
    candidates(e)
        .into_iter()
        .find(|f| (1..=e / 2).all(|d| candidates(d).iter().all(|g| !rem(f, g).is_empty())))
        .expect("irreducible polynomials exist in every degree")
}
