use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{parse_rational, upoly, ExactError, Rational};
use crate::scalar::{join_signed, rational_to_f64, render_scaled, Field, Scalar};

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Φₙ as rational coefficients, lowest degree first (monic, degree φ(n)).
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Rational>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    // x^n - 1 divided by every proper divisor's Φ
    let mut num = vec![Rational::zero(); n as usize + 1];
    num[0] = -Rational::one();
    num[n as usize] = Rational::one();
    for d in (1..n).filter(|d| n % d == 0) {
        let (q, r) = upoly::divmod(&num, &cyclotomic_polynomial(d));
        debug_assert!(r.is_empty());
        num = q;
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// An element of Q(ζₙ), stored as a polynomial in ζₙ reduced modulo Φₙ.
///
/// Values that happen to be rational are always stored with order 1, so the
/// representation is canonical and rationals combine with any order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Reduces an arbitrary polynomial in ζₙ to canonical form.
    pub fn from_poly(order: u32, poly: Vec<Rational>) -> Result<Self, ExactError> {
        if order == 0 {
            return Err(ExactError::InvalidOrder(0));
        }
        let phi = cyclotomic_polynomial(order);
        let (_, mut rem) = upoly::divmod(&poly, &phi);
        rem.resize(phi.len() - 1, Rational::zero());
        Ok(Self::normalized(order, rem))
    }

    fn normalized(order: u32, coeffs: Vec<Rational>) -> Self {
        if coeffs.iter().skip(1).all(Zero::is_zero) {
            let c = coeffs.into_iter().next().unwrap_or_else(Rational::zero);
            Cyclotomic {
                order: 1,
                coeffs: vec![c],
            }
        } else {
            Cyclotomic { order, coeffs }
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![r],
        }
    }

    /// The primitive n-th root of unity e^{2πi/n}.
    pub fn zeta(n: u32) -> Result<Self, ExactError> {
        Self::zeta_pow(n, 1)
    }

    /// ζₙᵏ, with k taken modulo n.
    pub fn zeta_pow(n: u32, k: u64) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::InvalidOrder(0));
        }
        let k = (k % n as u64) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        Self::from_poly(n, poly)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of 1, ζ, ζ², … (length φ(order)).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_rational(&self) -> Option<Rational> {
        (self.order == 1).then(|| self.coeffs[0].clone())
    }

    fn common_order(&self, other: &Self) -> Result<u32, ExactError> {
        match (self.order, other.order) {
            (a, b) if a == b => Ok(a),
            (1, b) => Ok(b),
            (a, 1) => Ok(a),
            (a, b) => Err(ExactError::IncompatibleFields(a, b)),
        }
    }

    fn lifted(&self, order: u32) -> Vec<Rational> {
        if self.order == order {
            return self.coeffs.clone();
        }
        let mut v = vec![Rational::zero(); euler_phi(order) as usize];
        v[0] = self.coeffs[0].clone();
        v
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        let order = self.common_order(other)?;
        let mut a = self.lifted(order);
        for (x, y) in a.iter_mut().zip(other.lifted(order)) {
            *x += y;
        }
        Ok(Self::normalized(order, a))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let order = self.common_order(other)?;
        if self.order == 1 || other.order == 1 {
            let (scale, v) = if self.order == 1 {
                (&self.coeffs[0], other)
            } else {
                (&other.coeffs[0], self)
            };
            let coeffs = v.lifted(order).into_iter().map(|c| c * scale).collect();
            return Ok(Self::normalized(order, coeffs));
        }
        Self::from_poly(order, upoly::mul(&self.coeffs, &other.coeffs))
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        // Φₙ is irreducible, so gcd(a, Φₙ) = 1 for a ≠ 0
        let phi = cyclotomic_polynomial(self.order);
        let (s, _) = upoly::ext_gcd(&self.coeffs, &phi);
        Self::from_poly(self.order, s)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.checked_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Complex conjugation, the automorphism ζ ↦ ζ⁻¹.
    pub fn conjugate(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let n = self.order as usize;
        let mut poly = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[(n - i) % n] += c;
        }
        Self::from_poly(self.order, poly).expect("order is positive")
    }

    /// Numerical value under the embedding ζₙ ↦ e^{2πi/n}.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| Complex64::from_polar(1.0, std::f64::consts::TAU * i as f64 / n) * rational_to_f64(c))
            .sum()
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v.into()))
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;

    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;

            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $tr for Cyclotomic {
            type Output = Cyclotomic;

            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);
panicking_op!(Div, div, checked_div);

impl Scalar for Cyclotomic {
    fn field(&self) -> Field {
        if self.order == 1 {
            Field::Rational
        } else {
            Field::Cyclotomic(self.order)
        }
    }

    fn try_recip(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn from_bigint(value: &BigInt) -> Self {
        Self::from_rational(Rational::from_integer(value.clone()))
    }

    fn from_rational(q: &Rational) -> Self {
        Cyclotomic::from_rational(q.clone())
    }

    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn is_compound(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let name = match i {
                    0 => String::new(),
                    1 => format!("z{}", self.order),
                    _ => format!("z{}^{}", self.order, i),
                };
                render_scaled(c, &name)
            });
        f.write_str(&join_signed(pieces))
    }
}

impl FromStr for Cyclotomic {
    type Err = ExactError;

    /// Parses the rendering produced by `Display`, e.g. `-1 - z3` or
    /// `1/2 + 3/4*z5^2`. All roots in one value must share an order.
    fn from_str(text: &str) -> Result<Self, ExactError> {
        let fail = |reason: &str| ExactError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(fail("empty input"));
        }
        let mut order = 1u32;
        let mut terms: Vec<(Rational, u64)> = Vec::new();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = Rational::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(fail("expected + or -"));
            }
            let end = compact[pos..]
                .find(['+', '-'])
                .map(|i| pos + i)
                .unwrap_or(bytes.len());
            let term = &compact[pos..end];
            pos = end;
            let (coef_text, root_text) = match term.find('z') {
                Some(i) => {
                    let coef = term[..i].strip_suffix('*').unwrap_or(&term[..i]);
                    if i > 0 && !term[..i].ends_with('*') {
                        return Err(fail("expected '*' before root"));
                    }
                    (coef, Some(&term[i + 1..]))
                }
                None => (term, None),
            };
            let coef = if coef_text.is_empty() {
                if root_text.is_none() {
                    return Err(fail("empty term"));
                }
                Rational::one()
            } else {
                parse_rational(coef_text)?
            };
            let exp = match root_text {
                None => 0,
                Some(r) => {
                    let (n_text, e_text) = r.split_once('^').unwrap_or((r, "1"));
                    let n: u32 = n_text.parse().map_err(|_| fail("bad root order"))?;
                    if n == 0 {
                        return Err(ExactError::InvalidOrder(0));
                    }
                    let e: u64 = e_text.parse().map_err(|_| fail("bad exponent"))?;
                    if order != 1 && order != n {
                        return Err(ExactError::IncompatibleFields(order, n));
                    }
                    order = n;
                    e
                }
            };
            terms.push((sign * coef, exp));
        }
        let mut acc = Cyclotomic::zero();
        for (c, e) in terms {
            let term = Cyclotomic::zeta_pow(order, e)?.checked_mul(&Cyclotomic::from_rational(c))?;
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }
}
