//! Exact linear programming over the rationals.
//!
//! A small dense two-phase simplex with Bland's rule (no cycling, no
//! tolerances). Problem sizes here are tiny — a few dozen variables — so a
//! textbook tableau is the right tool. The main consumer is the
//! strict-feasibility question "does this affine solution space meet the
//! open cone of positive edge lengths?".

use num_traits::{One, Signed, Zero};

use crate::lattice::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, point: Vec<Rat> },
}

/// Maximize `objective·x` subject to `rows[i].0·x ≤ rows[i].1`, with `x`
/// unrestricted in sign.
pub fn maximize(objective: &[Rat], rows: &[(Vec<Rat>, Rat)]) -> LpResult {
    Tableau::build(objective, rows).run()
}

/// Find a point with `ineqs[i].0·x + ineqs[i].1 > 0` for every `i`, if one
/// exists. Maximizes the margin δ (capped at 1) and returns a witness when
/// the optimum is strictly positive.
pub fn strict_interior(n_vars: usize, ineqs: &[(Vec<Rat>, Rat)]) -> Option<Vec<Rat>> {
    // variables (x, δ): maximize δ with −g·x + δ ≤ c and δ ≤ 1
    let mut rows = Vec::with_capacity(ineqs.len() + 1);
    for (coeffs, c) in ineqs {
        let mut row: Vec<Rat> = coeffs.iter().map(|a| -a.clone()).collect();
        row.push(Rat::one());
        rows.push((row, c.clone()));
    }
    let mut cap = vec![Rat::zero(); n_vars];
    cap.push(Rat::one());
    rows.push((cap, Rat::one()));
    let mut objective = vec![Rat::zero(); n_vars];
    objective.push(Rat::one());
    match maximize(&objective, &rows) {
        LpResult::Optimal { value, mut point } if value.is_positive() => {
            point.truncate(n_vars);
            Some(point)
        }
        _ => None,
    }
}

/// Dense tableau in equality form. Free variables are split into positive
/// and negative parts, slack variables complete the basis, and phase one
/// adds artificials only where the slack basis is infeasible.
struct Tableau {
    n_free: usize,
    n_cols: usize,
    n_artificial: usize,
    tab: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
    z_row: Vec<Rat>,
    obj_val: Rat,
    objective: Vec<Rat>,
}

impl Tableau {
    fn build(objective: &[Rat], rows: &[(Vec<Rat>, Rat)]) -> Self {
        let n_free = objective.len();
        let m = rows.len();
        let split = 2 * n_free;
        let n_cols_real = split + m;
        // artificial columns appended after slacks, one per negative-rhs row
        let mut tab = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut n_artificial = 0usize;
        for (i, (coeffs, b)) in rows.iter().enumerate() {
            assert_eq!(coeffs.len(), n_free);
            let negate = b.is_negative();
            let sign = if negate { -Rat::one() } else { Rat::one() };
            let mut row = vec![Rat::zero(); n_cols_real];
            for (j, a) in coeffs.iter().enumerate() {
                if !a.is_zero() {
                    row[j] = &sign * a;
                    row[n_free + j] = -(&sign * a);
                }
            }
            row[split + i] = sign.clone();
            rhs.push(&sign * b);
            if negate {
                n_artificial += 1;
            }
            tab.push(row);
            basis.push(usize::MAX); // fixed below
        }
        // widen rows with artificial columns
        let n_cols = n_cols_real + n_artificial;
        let mut a_idx = n_cols_real;
        for (i, (_, b)) in rows.iter().enumerate() {
            tab[i].resize(n_cols, Rat::zero());
            if b.is_negative() {
                tab[i][a_idx] = Rat::one();
                basis[i] = a_idx;
                a_idx += 1;
            } else {
                basis[i] = split + i;
            }
        }
        let mut full_objective = vec![Rat::zero(); n_cols];
        for j in 0..n_free {
            full_objective[j] = objective[j].clone();
            full_objective[n_free + j] = -objective[j].clone();
        }
        Tableau {
            n_free,
            n_cols,
            n_artificial,
            tab,
            rhs,
            basis,
            z_row: vec![Rat::zero(); n_cols],
            obj_val: Rat::zero(),
            objective: full_objective,
        }
    }

    fn run(mut self) -> LpResult {
        if self.n_artificial > 0 && !self.phase_one() {
            return LpResult::Infeasible;
        }
        // phase two objective from the real costs
        self.load_objective();
        loop {
            match self.step(self.n_cols - self.n_artificial) {
                Step::Optimal => break,
                Step::Unbounded => return LpResult::Unbounded,
                Step::Pivoted => {}
            }
        }
        let mut x = vec![Rat::zero(); self.n_free];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n_free {
                x[b] = &x[b] + &self.rhs[i];
            } else if b < 2 * self.n_free {
                let j = b - self.n_free;
                x[j] = &x[j] - &self.rhs[i];
            }
        }
        LpResult::Optimal {
            value: self.obj_val.clone(),
            point: x,
        }
    }

    /// Minimize the sum of artificials; true iff it reaches zero.
    fn phase_one(&mut self) -> bool {
        let art_start = self.n_cols - self.n_artificial;
        self.z_row = vec![Rat::zero(); self.n_cols];
        self.obj_val = Rat::zero();
        for i in 0..self.tab.len() {
            if self.basis[i] >= art_start {
                for j in 0..self.n_cols {
                    self.z_row[j] = &self.z_row[j] + &self.tab[i][j];
                }
                self.obj_val = &self.obj_val - &self.rhs[i];
            }
        }
        for j in art_start..self.n_cols {
            self.z_row[j] = Rat::zero();
        }
        loop {
            match self.step(self.n_cols) {
                Step::Optimal => break,
                Step::Unbounded => break, // cannot happen: objective ≤ 0
                Step::Pivoted => {}
            }
        }
        if !self.obj_val.is_zero() {
            return false;
        }
        // pivot surviving artificials out of the basis
        for i in 0..self.tab.len() {
            if self.basis[i] >= art_start {
                if let Some(col) = (0..art_start).find(|&j| !self.tab[i][j].is_zero()) {
                    self.pivot(i, col);
                }
                // an all-zero row is a redundant constraint; its artificial
                // stays basic at value zero and never re-enters play
            }
        }
        true
    }

    fn load_objective(&mut self) {
        self.z_row = self.objective.clone();
        self.obj_val = Rat::zero();
        // subtract c_B · (basis rows) so basic columns read zero
        for i in 0..self.tab.len() {
            let cb = self.objective[self.basis[i]].clone();
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.n_cols {
                if !self.tab[i][j].is_zero() {
                    self.z_row[j] = &self.z_row[j] - &cb * &self.tab[i][j];
                }
            }
            self.obj_val = &self.obj_val + &cb * &self.rhs[i];
        }
    }

    /// One Bland-rule simplex step over columns `0..col_limit`.
    fn step(&mut self, col_limit: usize) -> Step {
        let entering = (0..col_limit).find(|&j| self.z_row[j].is_positive());
        let entering = match entering {
            Some(e) => e,
            None => return Step::Optimal,
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..self.tab.len() {
            if self.tab[i][entering].is_positive() {
                let ratio = &self.rhs[i] / &self.tab[i][entering];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && self.basis[i] < self.basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        match leave {
            None => Step::Unbounded,
            Some(row) => {
                self.pivot(row, entering);
                Step::Pivoted
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.tab[row][col].clone();
        for j in 0..self.n_cols {
            if !self.tab[row][j].is_zero() {
                self.tab[row][j] = &self.tab[row][j] / &p;
            }
        }
        self.rhs[row] = &self.rhs[row] / &p;
        for i in 0..self.tab.len() {
            if i != row && !self.tab[i][col].is_zero() {
                let f = self.tab[i][col].clone();
                for j in 0..self.n_cols {
                    if !self.tab[row][j].is_zero() {
                        self.tab[i][j] = &self.tab[i][j] - &f * &self.tab[row][j];
                    }
                }
                self.rhs[i] = &self.rhs[i] - &f * &self.rhs[row];
            }
        }
        if !self.z_row[col].is_zero() {
            let f = self.z_row[col].clone();
            for j in 0..self.n_cols {
                if !self.tab[row][j].is_zero() {
                    self.z_row[j] = &self.z_row[j] - &f * &self.tab[row][j];
                }
            }
            self.obj_val = &self.obj_val + &f * &self.rhs[row];
        }
        self.basis[row] = col;
    }
}

enum Step {
    Optimal,
    Unbounded,
    Pivoted,
}
