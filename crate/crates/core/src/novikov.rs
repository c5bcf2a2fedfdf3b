//! The Novikov-ring ledger: finite formal sums of `q^(energy)` with exact
//! rational coefficients.
//!
//! Energies are nonnegative rational combinations of the three symbols
//! E12, E13, E23 (the symplectic areas of the pairwise intersections).
//! Multiplication adds energy vectors; no zero coefficient is ever stored.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::lattice::{rat_to_string, Rat};

/// A nonnegative rational combination `e12·E12 + e13·E13 + e23·E23`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EnergyVec {
    pub e12: Rat,
    pub e13: Rat,
    pub e23: Rat,
}

impl EnergyVec {
    pub fn zero() -> Self {
        EnergyVec::default()
    }

    pub fn new(e12: Rat, e13: Rat, e23: Rat) -> Self {
        debug_assert!(
            !e12.is_negative() && !e13.is_negative() && !e23.is_negative(),
            "energies are nonnegative"
        );
        EnergyVec { e12, e13, e23 }
    }

    pub fn from_ints(e12: i64, e13: i64, e23: i64) -> Self {
        EnergyVec::new(
            Rat::from_integer(e12.into()),
            Rat::from_integer(e13.into()),
            Rat::from_integer(e23.into()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.e12.is_zero() && self.e13.is_zero() && self.e23.is_zero()
    }

    pub fn add(&self, other: &EnergyVec) -> EnergyVec {
        EnergyVec {
            e12: &self.e12 + &other.e12,
            e13: &self.e13 + &other.e13,
            e23: &self.e23 + &other.e23,
        }
    }
}

impl fmt::Display for EnergyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coeff, name) in [
            (&self.e12, "E12"),
            (&self.e13, "E13"),
            (&self.e23, "E23"),
        ] {
            if coeff.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if coeff.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}·{name}", rat_to_string(coeff))?;
            }
        }
        Ok(())
    }
}

/// A finite formal sum `Σ a_λ·q^λ` with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NovikovPoly {
    terms: BTreeMap<EnergyVec, Rat>,
}

impl NovikovPoly {
    pub fn zero() -> Self {
        NovikovPoly::default()
    }

    pub fn one() -> Self {
        NovikovPoly::term(Rat::one(), EnergyVec::zero())
    }

    pub fn term(coeff: Rat, energy: EnergyVec) -> Self {
        let mut p = NovikovPoly::zero();
        p.add_term(coeff, energy);
        p
    }

    pub fn constant(coeff: Rat) -> Self {
        NovikovPoly::term(coeff, EnergyVec::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: Rat, energy: EnergyVec) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(energy).or_insert_with(Rat::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            let key: Vec<EnergyVec> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(e, _)| e.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &NovikovPoly) -> NovikovPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(c.clone(), e.clone());
        }
        out
    }

    pub fn mul(&self, other: &NovikovPoly) -> NovikovPoly {
        let mut out = NovikovPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(c1 * c2, e1.add(e2));
            }
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> NovikovPoly {
        let mut out = NovikovPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(c * r, e.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EnergyVec, &Rat)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `q^energy` (zero when absent).
    pub fn coeff(&self, energy: &EnergyVec) -> Rat {
        self.terms.get(energy).cloned().unwrap_or_else(Rat::zero)
    }

    /// If the poly is a single constant term, its value.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.is_zero() {
                return Some(c.clone());
            }
        }
        None
    }
}

impl fmt::Display for NovikovPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{}", rat_to_string(c))?;
            } else if c.is_one() {
                write!(f, "q^({e})")?;
            } else {
                write!(f, "{}·q^({e})", rat_to_string(c))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{rat, rat_int};

    #[test]
    fn arithmetic_and_cancellation() {
        let e = EnergyVec::from_ints(1, 0, 2);
        let p = NovikovPoly::term(rat_int(3), e.clone());
        let q = NovikovPoly::term(rat_int(-3), e.clone());
        assert!(p.add(&q).is_zero());
        let r = p.mul(&NovikovPoly::term(rat(1, 3), EnergyVec::from_ints(0, 1, 0)));
        assert_eq!(r.coeff(&EnergyVec::from_ints(1, 1, 2)), rat_int(1));
    }

    #[test]
    fn multiplication_adds_energies() {
        // q^(E13+2E12) · q^(E12+2E23) = q^(3E12+E13+2E23)
        let a = NovikovPoly::term(rat_int(1), EnergyVec::from_ints(2, 1, 0));
        let b = NovikovPoly::term(rat_int(1), EnergyVec::from_ints(1, 0, 2));
        let c = a.mul(&b);
        assert_eq!(c.coeff(&EnergyVec::from_ints(3, 1, 2)), rat_int(1));
        assert_eq!(c.n_terms(), 1);
    }

    #[test]
    fn display_formats() {
        assert_eq!(NovikovPoly::zero().to_string(), "0");
        assert_eq!(NovikovPoly::constant(rat_int(3)).to_string(), "3");
        let p = NovikovPoly::term(rat_int(12), EnergyVec::from_ints(3, 3, 3));
        assert_eq!(p.to_string(), "12·q^(3·E12 + 3·E13 + 3·E23)");
        let u = NovikovPoly::term(rat_int(1), EnergyVec::from_ints(0, 1, 0));
        assert_eq!(u.to_string(), "q^(E13)");
    }
}
