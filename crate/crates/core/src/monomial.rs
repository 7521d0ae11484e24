//! Exponent vectors in the polynomial ring k[x1, x2, y1, y2].

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign};

/// A monomial x1^a1 x2^a2 y1^b1 y2^b2, stored as its exponent vector.
#[derive(
    Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize,
)]
pub struct Monomial4(pub [u32; 4]);

impl Monomial4 {
    pub const ONE: Monomial4 = Monomial4([0, 0, 0, 0]);

    pub fn new(a1: u32, a2: u32, b1: u32, b2: u32) -> Self {
        Monomial4([a1, a2, b1, b2])
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0, 0]
    }

    /// Componentwise divisibility.
    pub fn divides(&self, other: &Monomial4) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn checked_div(&self, other: &Monomial4) -> Option<Monomial4> {
        if self.divides(other) {
            let mut out = [0u32; 4];
            for k in 0..4 {
                out[k] = other.0[k] - self.0[k];
            }
            Some(Monomial4(out))
        } else {
            None
        }
    }

    /// Exchange the roles of {x1, x2} and {y1, y2}.
    pub fn transpose(&self) -> Monomial4 {
        Monomial4([self.0[2], self.0[3], self.0[0], self.0[1]])
    }

    pub fn pow(&self, k: u32) -> Monomial4 {
        Monomial4([self.0[0] * k, self.0[1] * k, self.0[2] * k, self.0[3] * k])
    }
}

impl Add for Monomial4 {
    type Output = Monomial4;
    fn add(self, rhs: Monomial4) -> Monomial4 {
        let mut out = [0u32; 4];
        for k in 0..4 {
            out[k] = self.0[k] + rhs.0[k];
        }
        Monomial4(out)
    }
}

impl AddAssign for Monomial4 {
    fn add_assign(&mut self, rhs: Monomial4) {
        for k in 0..4 {
            self.0[k] += rhs.0[k];
        }
    }
}

impl fmt::Display for Monomial4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let names = ["x1", "x2", "y1", "y2"];
        let mut first = true;
        for (name, &e) in names.iter().zip(self.0.iter()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let m = Monomial4::new(2, 0, 1, 1);
        let n = Monomial4::new(3, 1, 1, 2);
        assert!(m.divides(&n));
        assert_eq!(m.checked_div(&n), Some(Monomial4::new(1, 1, 0, 1)));
        assert_eq!(n.checked_div(&m), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Monomial4::ONE.to_string(), "1");
        assert_eq!(Monomial4::new(1, 0, 2, 0).to_string(), "x1*y1^2");
    }
}
