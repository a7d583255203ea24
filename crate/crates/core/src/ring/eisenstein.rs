use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Scalar;

/// An Eisenstein integer `re + omega·ω` with ω² = −1 − ω.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Eisenstein {
    pub re: BigInt,
    pub omega: BigInt,
}

impl Eisenstein {
    pub fn new(re: impl Into<BigInt>, omega: impl Into<BigInt>) -> Self {
        Eisenstein {
            re: re.into(),
            omega: omega.into(),
        }
    }

    pub fn from_int(re: impl Into<BigInt>) -> Self {
        Eisenstein {
            re: re.into(),
            omega: <BigInt as Zero>::zero(),
        }
    }

    /// ω itself.
    pub fn omega() -> Self {
        Eisenstein::new(0, 1)
    }

    /// ω² = −1 − ω.
    pub fn omega_sq() -> Self {
        Eisenstein::new(-1, -1)
    }

    /// Field norm a² − ab + b²; units are exactly the elements of norm 1.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re - &self.re * &self.omega + &self.omega * &self.omega
    }

    /// Image under ω ↦ ω²: (a + bω) ↦ (a − b) − bω.
    pub fn conjugate(&self) -> Self {
        Eisenstein {
            re: &self.re - &self.omega,
            omega: -&self.omega,
        }
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.omega)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.re), Zero::is_zero(&self.omega)) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}ω", self.omega),
            (false, false) if self.omega < <BigInt as Zero>::zero() => {
                write!(f, "{}{}ω", self.re, self.omega)
            }
            (false, false) => write!(f, "{}+{}ω", self.re, self.omega),
        }
    }
}

impl<'a> Add<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein {
            re: &self.re + &rhs.re,
            omega: &self.omega + &rhs.omega,
        }
    }
}

impl<'a> Sub<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein {
            re: &self.re - &rhs.re,
            omega: &self.omega - &rhs.omega,
        }
    }
}

impl<'a> Mul<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    /// (a+bω)(c+dω) = (ac − bd) + (ad + bc − bd)ω
    fn mul(self, rhs: &Eisenstein) -> Eisenstein {
        let bd = &self.omega * &rhs.omega;
        Eisenstein {
            re: &self.re * &rhs.re - &bd,
            omega: &self.re * &rhs.omega + &self.omega * &rhs.re - bd,
        }
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein {
            re: -&self.re,
            omega: -&self.omega,
        }
    }
}

impl Scalar for Eisenstein {
    const RING: &'static str = "eisenstein";

    fn zero() -> Self {
        Eisenstein::default()
    }
    fn one() -> Self {
        Eisenstein::from_int(1)
    }
    fn from_i64(v: i64) -> Self {
        Eisenstein::from_int(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.omega)
    }
    fn add_assign(&mut self, rhs: &Self) {
        self.re += &rhs.re;
        self.omega += &rhs.omega;
    }
    fn sub_assign(&mut self, rhs: &Self) {
        self.re -= &rhs.re;
        self.omega -= &rhs.omega;
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if Scalar::is_zero(a) || Scalar::is_zero(b) {
            return;
        }
        // Integer operands dominate most convolutions; skip the ω cross terms.
        if Zero::is_zero(&a.omega) && Zero::is_zero(&b.omega) {
            self.re += &a.re * &b.re;
            return;
        }
        let p = a * b;
        self.re += p.re;
        self.omega += p.omega;
    }
    fn unit_inverse(&self) -> Option<Self> {
        // For a unit u, u⁻¹ = conj(u) since u·conj(u) = N(u) = 1.
        if self.norm().is_one() {
            Some(self.conjugate())
        } else {
            None
        }
    }
    fn conj(&self) -> Self {
        self.conjugate()
    }
}
