//! Lattice and rational vectors. The two dual lattices N (one-parameter
//! subgroups) and M (characters) share the same coordinate representation and
//! are told apart by a role tag; pairings only make sense across roles.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use std::fmt;

use crate::linalg;

/// Which of the two dual lattices a vector lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// Lattice of one-parameter subgroups (fan rays live here).
    N,
    /// Character lattice (weights, polytopes live here).
    M,
}

impl Role {
    pub fn dual(self) -> Role {
        match self {
            Role::N => Role::M,
            Role::M => Role::N,
        }
    }
}

/// An integer vector in N or M.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub coords: Vec<BigInt>,
    pub role: Role,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>, role: Role) -> Self {
        LatticeVector { coords, role }
    }

    pub fn from_i64(coords: &[i64], role: Role) -> Self {
        LatticeVector {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
            role,
        }
    }

    pub fn zero(rank: usize, role: Role) -> Self {
        LatticeVector {
            coords: vec![BigInt::zero(); rank],
            role,
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_primitive(&self) -> bool {
        linalg::vec_gcd(&self.coords).abs() == BigInt::from(1)
    }

    pub fn primitivized(&self) -> Self {
        LatticeVector {
            coords: linalg::primitivize(&self.coords),
            role: self.role,
        }
    }

    pub fn neg(&self) -> Self {
        LatticeVector {
            coords: self.coords.iter().map(|c| -c).collect(),
            role: self.role,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.role, other.role);
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            role: self.role,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Natural pairing <m, n> between the dual lattices.
    pub fn pair(&self, other: &Self) -> BigInt {
        debug_assert_ne!(self.role, other.role, "pairing requires dual roles");
        linalg::dot(&self.coords, &other.coords)
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector {
            coords: self.coords.iter().map(linalg::to_rational).collect(),
        }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An exact rational point of N_R or M_R (the role is contextual here; points
/// are compared coordinatewise).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector {
    pub coords: Vec<BigRational>,
}

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RationalVector {
            coords: coords.iter().map(|&c| linalg::ratio(c, 1)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        RationalVector {
            coords: vec![BigRational::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        RationalVector {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pair_lattice(&self, v: &LatticeVector) -> BigRational {
        linalg::dot_qi(&self.coords, &v.coords)
    }

    /// The integer point, when every coordinate is an integer.
    pub fn as_lattice(&self, role: Role) -> Option<LatticeVector> {
        if self.coords.iter().all(|c| c.is_integer()) {
            Some(LatticeVector {
                coords: self.coords.iter().map(|c| c.to_integer()).collect(),
                role,
            })
        } else {
            None
        }
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
