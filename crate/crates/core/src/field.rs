//! Exact arithmetic in GF(p^m).
//!
//! An element is stored as its integer code: the base-`p` digits of the code
//! are the coefficients of a polynomial in `t` (constant term least
//! significant), reduced modulo a monic irreducible polynomial of degree `m`.
//! Codes `0` and `1` are the additive and multiplicative identities.
//!
//! Moduli are written constant term first, so `[1, 1, 0, 1]` is `t^3 + t + 1`.
//! When `m > 1` and no modulus is supplied, the following built-in moduli are
//! used:
//!
//! | q  | modulus          |
//! |----|------------------|
//! | 4  | t^2 + t + 1      |
//! | 8  | t^3 + t + 1      |
//! | 9  | t^2 + 1          |
//! | 16 | t^4 + t + 1      |
//! | 25 | t^2 + t + 1      |
//! | 27 | t^3 + 2t + 1     |
//!
//! Multiplication and inversion go through log/antilog tables built at
//! construction time; addition uses a full table for `q <= 256` and digit-wise
//! arithmetic above that.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Integer code of a field element, in `[0, q)`.
pub type Elem = u32;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

const ADD_TABLE_MAX: u32 = 256;

/// Built-in moduli, constant term first.
pub fn builtin_modulus(q: u64) -> Option<&'static [u32]> {
    match q {
        4 => Some(&[1, 1, 1]),
        8 => Some(&[1, 1, 0, 1]),
        9 => Some(&[1, 0, 1]),
        16 => Some(&[1, 1, 0, 0, 1]),
        25 => Some(&[1, 1, 1]),
        27 => Some(&[1, 2, 0, 1]),
        _ => None,
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// A finite field GF(q). Cheap to clone; the tables are shared.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    add: Option<Vec<Elem>>,
    neg: Vec<Elem>,
    /// `exp[i] = g^i` for `i < 2(q-1)`.
    exp: Vec<Elem>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.m == other.inner.m
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.modulus {
            Some(m) => write!(f, "GF({}, modulus {:?})", self.inner.q, m),
            None => write!(f, "GF({})", self.inner.q),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

impl Field {
    /// Builds GF(p^m). For `m > 1` the modulus defaults to the built-in one.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::UnsupportedOrder(p.saturating_pow(m)))?;
        let p = p as u32;

        let modulus = match (m, modulus) {
            (1, None) => None,
            (1, Some(c)) => {
                // a degree-one modulus carries no information; accept only t + a
                if c.len() != 2 || c[1] != 1 || c[0] >= p {
                    return Err(Error::InvalidModulus(format!(
                        "prime field takes no modulus, got {c:?}"
                    )));
                }
                None
            }
            (_, Some(c)) => {
                validate_modulus(p, m, c)?;
                Some(c.to_vec())
            }
            (_, None) => {
                let c = builtin_modulus(q).ok_or(Error::UnsupportedOrder(q))?;
                validate_modulus(p, m, c)?;
                Some(c.to_vec())
            }
        };

        Ok(Field {
            inner: Arc::new(Tables::build(p, m, q as u32, modulus)?),
        })
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(q) with the built-in modulus (or the supplied one).
    pub fn with_order(q: u64, modulus: Option<&[u32]>) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(if (2..=MAX_ORDER).contains(&q) {
            Error::NonPrimeCharacteristic(q)
        } else {
            Error::UnsupportedOrder(q)
        })?;
        Self::new(p, m, modulus)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.inner.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.inner.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.inner.modulus.as_deref()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.q()
    }

    pub fn nonzero(&self) -> std::ops::Range<Elem> {
        1..self.q()
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        a < self.q()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.inner;
        match &t.add {
            Some(table) => table[(a * t.q + b) as usize],
            None => digit_add(t.p, a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.inner.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.inner;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let t = &*self.inner;
        let order = t.q - 1;
        Ok(t.exp[((order - t.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.inner;
        let order = (t.q - 1) as u64;
        let idx = (t.log[a as usize] as u64 * (e % order)) % order;
        t.exp[idx as usize]
    }

    /// The image of an integer under `Z -> GF(p) ⊂ GF(q)`.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p() as i64) as Elem
    }
}

impl Tables {
    fn build(p: u32, m: u32, q: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        let mul = |a: Elem, b: Elem| -> Elem {
            match &modulus {
                None => ((a as u64 * b as u64) % p as u64) as Elem,
                Some(md) => poly_mul_mod(p, m, md, a, b),
            }
        };

        let order = q - 1;
        let mut exp = vec![0; 2 * order as usize];
        let mut log = vec![0; q as usize];
        let generator = (1..q)
            .find(|&g| multiplicative_order(g, order, &mul) == order)
            .ok_or_else(|| Error::InvalidModulus("no primitive element found".into()))?;
        let mut x = 1;
        for i in 0..order {
            exp[i as usize] = x;
            exp[(i + order) as usize] = x;
            log[x as usize] = i;
            x = mul(x, generator);
        }

        let neg = (0..q).map(|a| digit_neg(p, a)).collect();
        let add = (q <= ADD_TABLE_MAX).then(|| {
            let mut t = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(p, a, b);
                }
            }
            t
        });

        Ok(Tables {
            p,
            m,
            q,
            modulus,
            add,
            neg,
            exp,
            log,
        })
    }
}

fn multiplicative_order(g: Elem, group_order: u32, mul: &impl Fn(Elem, Elem) -> Elem) -> u32 {
    let mut x = g;
    let mut k = 1;
    while x != 1 {
        x = mul(x, g);
        k += 1;
        if k > group_order {
            break;
        }
    }
    k
}

fn digit_add(p: u32, mut a: u32, mut b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut out, mut place) = (0, 1);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn digit_neg(p: u32, mut a: u32) -> u32 {
    let (mut out, mut place) = (0, 1);
    while a > 0 {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

fn to_digits(p: u32, mut a: u32, len: usize) -> Vec<u32> {
    let mut d = vec![0; len];
    for slot in d.iter_mut() {
        *slot = a % p;
        a /= p;
    }
    d
}

fn from_digits(p: u32, d: &[u32]) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_mul_mod(p: u32, m: u32, modulus: &[u32], a: Elem, b: Elem) -> Elem {
    let m = m as usize;
    let da = to_digits(p, a, m);
    let db = to_digits(p, b, m);
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(p, &mut prod, modulus);
    from_digits(p, &prod[..m])
}

/// Reduces `a` in place modulo the monic polynomial `divisor`.
fn poly_rem(p: u32, a: &mut [u32], divisor: &[u32]) {
    let dd = divisor.len() - 1;
    for top in (dd..a.len()).rev() {
        let c = a[top];
        if c == 0 {
            continue;
        }
        for (i, &d) in divisor.iter().enumerate() {
            let idx = top - dd + i;
            a[idx] = (a[idx] + (p - c) * d) % p;
        }
    }
}

/// Checks that `c` (constant term first) is monic of degree `m` and has no
/// monic factor of degree `1..=m/2` over GF(p).
fn validate_modulus(p: u32, m: u32, c: &[u32]) -> Result<()> {
    let m = m as usize;
    if c.len() != m + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected {} coefficients, got {}",
            m + 1,
            c.len()
        )));
    }
    if let Some(&bad) = c.iter().find(|&&x| x >= p) {
        return Err(Error::InvalidModulus(format!("coefficient {bad} not below {p}")));
    }
    if c[m] != 1 {
        return Err(Error::InvalidModulus("modulus must be monic".into()));
    }
    for deg in 1..=m / 2 {
        for low in 0..p.pow(deg as u32) {
            let mut divisor = to_digits(p, low, deg);
            divisor.push(1);
            let mut rem = c.to_vec();
            poly_rem(p, &mut rem, &divisor);
            if rem[..deg].iter().all(|&x| x == 0) {
                return Err(Error::ReducibleModulus(p));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::with_order(q, None).unwrap()
    }

    /// Schoolbook multiplication for the GF(4) check, independent of the tables.
    fn gf4_mul_naive(a: u32, b: u32) -> u32 {
        // a = a0 + a1 t, t^2 = t + 1
        let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
        let c0 = (a0 * b0) ^ (a1 * b1);
        let c1 = (a0 * b1) ^ (a1 * b0) ^ (a1 * b1);
        c0 | (c1 << 1)
    }

    #[test]
    fn construction_examples() {
        assert_eq!(Field::new(3, 1, None).unwrap().q(), 3);
        let f4 = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f4.q(), 4);
        assert_eq!(Field::new(4, 1, None), Err(Error::NonPrimeCharacteristic(4)));
        assert_eq!(Field::new(2, 2, Some(&[1, 0, 1])), Err(Error::ReducibleModulus(2)));
        assert_eq!(Field::new(2, 2, Some(&[1, 1, 1, 0])).unwrap_err().to_string().contains("coefficients"), true);
        assert_eq!(Field::new(7, 2, None), Err(Error::UnsupportedOrder(49)));
        assert!(Field::new(7, 2, Some(&[1, 0, 1])).is_ok()); // -1 is a non-square mod 7
        assert_eq!(Field::with_order(6, None), Err(Error::NonPrimeCharacteristic(6)));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(gf(3).add(2, 2), 1);
        assert_eq!(gf(4).mul(2, 2), 3);
        assert_eq!(gf(5).inv(2), Ok(3));
        assert_eq!(gf(5).inv(0), Err(Error::ZeroInverse));
        assert_eq!(gf(9).mul(3, 3), 2); // t*t = -1 = 2
    }

    #[test]
    fn gf4_matches_schoolbook() {
        let f = gf(4);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(f.mul(a, b), gf4_mul_naive(a, b));
            }
        }
    }

    #[test]
    fn builtin_moduli_are_valid() {
        for q in [4u64, 8, 9, 16, 25, 27] {
            let (p, m) = prime_power(q).unwrap();
            validate_modulus(p as u32, m, builtin_modulus(q).unwrap()).unwrap();
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
            let f = gf(q);
            let q = q as u32;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.pow(a, q as u64), a, "Frobenius in GF({q})");
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
            }
            // triples: exhaustive for small q, strided sample above 9
            let step = if q > 9 { 5 } else { 1 };
            for a in (0..q).step_by(step) {
                for b in 0..q {
                    for c in (0..q).step_by(step.min(3)) {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn large_field_digit_addition() {
        // q = 289 > 256 takes the digit-wise addition path; 3 is a non-square mod 17
        let f = Field::new(17, 2, Some(&[14, 0, 1])).unwrap();
        for a in (0..f.q()).step_by(7) {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.pow(a, f.q() as u64), a);
            for b in (0..f.q()).step_by(11) {
                assert_eq!(f.sub(f.add(a, b), b), a);
            }
        }
        let t = 17; // code of t
        assert_eq!(f.mul(t, t), 3);
        let f = Field::new(2, 9, Some(&[1, 0, 0, 0, 1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.add(0b1_0000_0011, 0b1), 0b1_0000_0010);
        assert_eq!(f.mul(f.inv(100).unwrap(), 100), 1);
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
