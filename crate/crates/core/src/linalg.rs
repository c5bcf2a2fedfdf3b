//! Exact Gaussian elimination over the rationals.
//!
//! The reducer keeps its rows in reduced row-echelon form at all times, so
//! pushing one equation is cheap and the solution space can be read off
//! directly. Deformation dimensions are kernel dimensions of these systems,
//! which is why everything here must be exact.

use num_traits::Zero;

use crate::lattice::Rat;

/// Outcome of pushing one equation into the reducer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PushOutcome {
    /// The equation added a new pivot.
    Added,
    /// The equation was a consequence of the previous ones.
    Redundant,
    /// The equation contradicts the previous ones (0 = nonzero).
    Inconsistent,
}

/// Incrementally reduced linear system `A·x = b` over Q.
#[derive(Clone, Debug)]
pub struct Reducer {
    n_vars: usize,
    /// Rows in RREF; `pivots[i]` is the pivot column of `rows[i]`.
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    pivots: Vec<usize>,
    inconsistent: bool,
}

impl Reducer {
    pub fn new(n_vars: usize) -> Self {
        Reducer {
            n_vars,
            rows: Vec::new(),
            rhs: Vec::new(),
            pivots: Vec::new(),
            inconsistent: false,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    /// Dimension of the solution space (meaningful only when consistent).
    pub fn kernel_dim(&self) -> usize {
        self.n_vars - self.rank()
    }

    /// Reduce `coeffs·x = rhs` against the current rows and insert it if it
    /// carries new information.
    pub fn push(&mut self, mut coeffs: Vec<Rat>, mut rhs: Rat) -> PushOutcome {
        assert_eq!(coeffs.len(), self.n_vars);
        // eliminate existing pivots from the incoming row
        for (i, &p) in self.pivots.iter().enumerate() {
            if !coeffs[p].is_zero() {
                let f = coeffs[p].clone();
                for j in 0..self.n_vars {
                    if !self.rows[i][j].is_zero() {
                        coeffs[j] = &coeffs[j] - &f * &self.rows[i][j];
                    }
                }
                rhs = &rhs - &f * &self.rhs[i];
            }
        }
        let pivot = match coeffs.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => {
                if rhs.is_zero() {
                    return PushOutcome::Redundant;
                }
                self.inconsistent = true;
                return PushOutcome::Inconsistent;
            }
        };
        // normalize the new row
        let lead = coeffs[pivot].clone();
        for c in coeffs.iter_mut() {
            if !c.is_zero() {
                *c = &*c / &lead;
            }
        }
        rhs = &rhs / &lead;
        // eliminate the new pivot from existing rows
        for i in 0..self.rows.len() {
            if !self.rows[i][pivot].is_zero() {
                let f = self.rows[i][pivot].clone();
                for j in 0..self.n_vars {
                    if !coeffs[j].is_zero() {
                        self.rows[i][j] = &self.rows[i][j] - &f * &coeffs[j];
                    }
                }
                self.rhs[i] = &self.rhs[i] - &f * &rhs;
            }
        }
        // keep rows ordered by pivot column
        let at = self
            .pivots
            .iter()
            .position(|&p| p > pivot)
            .unwrap_or(self.pivots.len());
        self.rows.insert(at, coeffs);
        self.rhs.insert(at, rhs);
        self.pivots.insert(at, pivot);
        PushOutcome::Added
    }

    /// The unique solution, provided the system is consistent and has full
    /// rank.
    pub fn solve_unique(&self) -> Option<Vec<Rat>> {
        if self.inconsistent || self.rank() != self.n_vars {
            return None;
        }
        Some(self.rhs.clone())
    }

    /// A particular solution (free variables set to zero) together with a
    /// kernel basis, one vector per free variable. `None` when inconsistent.
    pub fn solution_space(&self) -> Option<(Vec<Rat>, Vec<Vec<Rat>>)> {
        if self.inconsistent {
            return None;
        }
        let mut particular = vec![Rat::zero(); self.n_vars];
        for (i, &p) in self.pivots.iter().enumerate() {
            particular[p] = self.rhs[i].clone();
        }
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.n_vars];
            for &p in &self.pivots {
                v[p] = true;
            }
            v
        };
        let mut kernel = Vec::new();
        for free in 0..self.n_vars {
            if is_pivot[free] {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.n_vars];
            vec[free] = Rat::from_integer(1.into());
            for (i, &p) in self.pivots.iter().enumerate() {
                vec[p] = -self.rows[i][free].clone();
            }
            kernel.push(vec);
        }
        Some((particular, kernel))
    }
}

/// One-shot solve of `rows·x = rhs`.
pub fn solve(n_vars: usize, rows: &[(Vec<Rat>, Rat)]) -> Option<(Vec<Rat>, Vec<Vec<Rat>>)> {
    let mut red = Reducer::new(n_vars);
    for (coeffs, rhs) in rows {
        if red.push(coeffs.clone(), rhs.clone()) == PushOutcome::Inconsistent {
            return None;
        }
    }
    red.solution_space()
}

/// Evaluate an affine form `coeffs·x + constant`.
pub fn eval_affine(coeffs: &[Rat], constant: &Rat, x: &[Rat]) -> Rat {
    let mut acc = constant.clone();
    for (c, xi) in coeffs.iter().zip(x) {
        if !c.is_zero() {
            acc += c * xi;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{rat, rat_int};

    #[test]
    fn unique_solution() {
        // x + y = 3, x − y = 1  →  x = 2, y = 1
        let mut r = Reducer::new(2);
        assert_eq!(
            r.push(vec![rat_int(1), rat_int(1)], rat_int(3)),
            PushOutcome::Added
        );
        assert_eq!(
            r.push(vec![rat_int(1), rat_int(-1)], rat_int(1)),
            PushOutcome::Added
        );
        assert_eq!(r.solve_unique().unwrap(), vec![rat_int(2), rat_int(1)]);
    }

    #[test]
    fn detects_redundancy_and_conflict() {
        let mut r = Reducer::new(2);
        r.push(vec![rat_int(1), rat_int(1)], rat_int(3));
        assert_eq!(
            r.push(vec![rat_int(2), rat_int(2)], rat_int(6)),
            PushOutcome::Redundant
        );
        assert_eq!(
            r.push(vec![rat_int(2), rat_int(2)], rat_int(5)),
            PushOutcome::Inconsistent
        );
        assert!(!r.is_consistent());
    }

    #[test]
    fn kernel_basis() {
        // x + 2y − z = 1 in Q³: rank 1, kernel dim 2
        let mut r = Reducer::new(3);
        r.push(vec![rat_int(1), rat_int(2), rat_int(-1)], rat_int(1));
        assert_eq!(r.kernel_dim(), 2);
        let (part, kernel) = r.solution_space().unwrap();
        assert_eq!(part, vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(kernel.len(), 2);
        for k in &kernel {
            let lhs = &k[0] + rat_int(2) * &k[1] - &k[2];
            assert_eq!(lhs, rat_int(0));
        }
    }

    #[test]
    fn fractional_pivoting() {
        // 2x + 4y = 1, 3y = 1 → y = 1/3, x = (1 − 4/3)/2 = −1/6
        let mut r = Reducer::new(2);
        r.push(vec![rat_int(2), rat_int(4)], rat_int(1));
        r.push(vec![rat_int(0), rat_int(3)], rat_int(1));
        assert_eq!(r.solve_unique().unwrap(), vec![rat(-1, 6), rat(1, 3)]);
    }
}
