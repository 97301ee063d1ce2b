//! Dense polynomials with arbitrary-precision non-negative integer
//! coefficients, stored in ascending degree order (`coefficients[k]` is the
//! number of independent sets of size `k`).

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coefficients: Vec<BigUint>,
}

impl Polynomial {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coefficients(coefficients: Vec<BigUint>) -> Self {
        let mut p = Polynomial { coefficients };
        p.normalize();
        p
    }

    pub fn from_u64s(coefficients: &[u64]) -> Self {
        Self::from_coefficients(coefficients.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Builds from the descending list form `[s_alpha, ..., s_1, s_0]`.
    pub fn from_paper_format(descending: Vec<BigUint>) -> Self {
        let mut coefficients = descending;
        coefficients.reverse();
        Self::from_coefficients(coefficients)
    }

    pub fn zero() -> Self {
        Polynomial { coefficients: vec![BigUint::zero()] }
    }

    pub fn one() -> Self {
        Polynomial { coefficients: vec![BigUint::one()] }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial { coefficients: vec![BigUint::zero(), BigUint::one()] }
    }

    fn normalize(&mut self) {
        while self.coefficients.len() > 1 && self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
        if self.coefficients.is_empty() {
            self.coefficients.push(BigUint::zero());
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coefficient(&self, k: usize) -> BigUint {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> &BigUint {
        self.coefficients.last().expect("never empty")
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.len() == 1 && self.coefficients[0].is_zero()
    }

    /// Schoolbook product. `scalar_ops` is increased by the number of
    /// coefficient-pair multiplications performed.
    pub fn mul_counted(&self, other: &Polynomial, scalar_ops: &mut u64) -> Polynomial {
        let mut out = vec![BigUint::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            *scalar_ops += other.coefficients.len() as u64;
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coefficients(out)
    }

    /// Multiplication by the monomial `x`.
    pub fn shift_mul_x(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coefficients = Vec::with_capacity(self.coefficients.len() + 1);
        coefficients.push(BigUint::zero());
        coefficients.extend(self.coefficients.iter().cloned());
        Polynomial { coefficients }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, point: &BigInt) -> BigInt {
        self.coefficients.iter().rev().fold(BigInt::zero(), |acc, c| acc * point + BigInt::from(c.clone()))
    }

    /// Descending list `[s_alpha, ..., s_1, s_0]`.
    pub fn to_paper_format(&self) -> Vec<BigUint> {
        self.coefficients.iter().rev().cloned().collect()
    }

    /// Renders the paper-order list as `[1, 3, 1]`.
    pub fn paper_format_string(&self) -> String {
        let items: Vec<String> = self.to_paper_format().iter().map(ToString::to_string).collect();
        format!("[{}]", items.join(", "))
    }
}

impl Default for Polynomial {
    fn default() -> Self {
        Polynomial::one()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        let (long, short) =
            if self.coefficients.len() >= other.coefficients.len() { (self, other) } else { (other, self) };
        let mut coefficients = long.coefficients.clone();
        for (slot, c) in coefficients.iter_mut().zip(&short.coefficients) {
            *slot += c;
        }
        Polynomial::from_coefficients(coefficients)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, other: Polynomial) -> Polynomial {
        &self + &other
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &Polynomial) -> Polynomial {
        self.mul_counted(other, &mut 0)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, other: Polynomial) -> Polynomial {
        &self * &other
    }
}

/// `x^2 + 3x + 1`: descending, zero terms omitted, unit coefficients
/// omitted on non-constant terms.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = c.is_one();
            match k {
                0 => write!(f, "{c}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{c}x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}
