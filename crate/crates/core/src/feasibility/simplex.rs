//! Dense two-phase simplex over exact rationals.
//!
//! Bland's pivoting rule throughout, so the solver cannot cycle. Problems in
//! this crate are tiny (tens of variables), so a dense tableau is the right
//! tradeoff: every pivot is exact and auditable.

use num_traits::{Signed, Zero};

use crate::rational::{zero, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// One linear constraint over nonnegative variables.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Self {
            coeffs,
            relation,
            rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>, // one per constraint, last entry is rhs
    obj: Vec<Rational>,       // reduced costs, last entry is objective value
    basis: Vec<usize>,
    num_cols: usize, // columns excluding rhs
}

impl Tableau {
    fn rhs(&self, row: usize) -> &Rational {
        &self.rows[row][self.num_cols]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot_val = self.rows[row][col].clone();
        debug_assert!(!pivot_val.is_zero());
        for v in self.rows[row].iter_mut() {
            *v /= &pivot_val;
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (v, p) in other.iter_mut().zip(pivot_row.iter()) {
                *v -= &factor * p;
            }
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for (v, p) in self.obj.iter_mut().zip(pivot_row.iter()) {
                *v -= &factor * p;
            }
        }
        self.basis[row] = col;
    }

    /// Maximizes the current objective row with Bland's rule.
    /// `eligible` limits the entering columns. Returns false on unbounded.
    fn run(&mut self, eligible: &[bool]) -> bool {
        loop {
            let entering = (0..self.num_cols)
                .find(|&j| eligible[j] && self.obj[j].is_positive());
            let Some(col) = entering else {
                return true;
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rational> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && self.basis[r] < self.basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
            let Some(row) = leave else {
                return false;
            };
            self.pivot(row, col);
        }
    }
}

/// Maximizes `objective` over `{x >= 0 : constraints}`.
pub fn maximize(objective: &[Rational], constraints: &[Constraint]) -> LpOutcome {
    let n = objective.len();
    let m = constraints.len();

    // Column layout: structural | slack/surplus | artificial.
    let mut num_slack = 0;
    for c in constraints {
        if !matches!(c.relation, Relation::Eq) {
            num_slack += 1;
        }
    }
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut artificial_of_row: Vec<Option<usize>> = vec![None; m];
    let mut slack_of_row: Vec<Option<(usize, bool)>> = vec![None; m]; // (col, is_plain_slack)
    let mut next_slack = n;
    let mut num_art = 0;
    for (r, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), n, "constraint arity mismatch");
        let mut relation = c.relation;
        let mut coeffs = c.coeffs.clone();
        let mut rhs = c.rhs.clone();
        if rhs.is_negative() {
            for v in coeffs.iter_mut() {
                *v = -v.clone();
            }
            rhs = -rhs;
            relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        match relation {
            Relation::Le => {
                slack_of_row[r] = Some((next_slack, true));
                next_slack += 1;
            }
            Relation::Ge => {
                slack_of_row[r] = Some((next_slack, false));
                next_slack += 1;
                artificial_of_row[r] = Some(num_art);
                num_art += 1;
            }
            Relation::Eq => {
                artificial_of_row[r] = Some(num_art);
                num_art += 1;
            }
        }
        coeffs.push(rhs); // temporarily park rhs at the end
        rows.push(coeffs);
    }
    let art_base = n + num_slack;
    let num_cols = art_base + num_art;

    let mut table_rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (r, mut coeffs) in rows.into_iter().enumerate() {
        let rhs = coeffs.pop().unwrap();
        let mut row = vec![zero(); num_cols + 1];
        row[..n].clone_from_slice(&coeffs);
        if let Some((col, plain)) = slack_of_row[r] {
            row[col] = if plain {
                Rational::from_integer(1.into())
            } else {
                Rational::from_integer((-1).into())
            };
        }
        if let Some(a) = artificial_of_row[r] {
            row[art_base + a] = Rational::from_integer(1.into());
        }
        row[num_cols] = rhs;
        let basic = match (artificial_of_row[r], slack_of_row[r]) {
            (Some(a), _) => art_base + a,
            (None, Some((col, _))) => col,
            (None, None) => unreachable!(),
        };
        basis.push(basic);
        table_rows.push(row);
    }

    let mut t = Tableau {
        rows: table_rows,
        obj: vec![zero(); num_cols + 1],
        basis,
        num_cols,
    };

    // Phase 1: maximize minus the sum of artificials.
    if num_art > 0 {
        // Reduced costs: price out the artificial basics.
        for r in 0..m {
            if artificial_of_row[r].is_some() {
                let row = t.rows[r].clone();
                for (v, p) in t.obj.iter_mut().zip(row.iter()) {
                    *v += p;
                }
            }
        }
        for a in 0..num_art {
            t.obj[art_base + a] = zero();
        }
        let eligible: Vec<bool> = (0..num_cols).map(|j| j < art_base).collect();
        let bounded = t.run(&eligible);
        debug_assert!(bounded, "phase 1 objective is bounded by construction");
        if t.obj[num_cols].is_positive() {
            return LpOutcome::Infeasible;
        }
        // Drive remaining artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art_base {
                let col = (0..art_base).find(|&j| !t.rows[r][j].is_zero());
                match col {
                    Some(c) => t.pivot(r, c),
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    // Phase 2: price the real objective against the current basis.
    let mut obj = vec![zero(); num_cols + 1];
    obj[..n].clone_from_slice(objective);
    let basis_snapshot = t.basis.clone();
    for (r, &b) in basis_snapshot.iter().enumerate() {
        let c_b = if b < n { objective[b].clone() } else { zero() };
        if c_b.is_zero() {
            continue;
        }
        let row = t.rows[r].clone();
        for (j, v) in obj.iter_mut().enumerate() {
            if j == num_cols {
                *v += &c_b * &row[num_cols];
            } else {
                *v -= &c_b * &row[j];
            }
        }
    }
    // obj[num_cols] currently holds +z; run() treats it as the value cell.
    t.obj = obj;
    let eligible: Vec<bool> = (0..num_cols).map(|j| j < art_base).collect();
    if !t.run(&eligible) {
        return LpOutcome::Unbounded;
    }

    let mut point = vec![zero(); n];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < n {
            point[b] = t.rhs(r).clone();
        }
    }
    let value = objective
        .iter()
        .zip(point.iter())
        .map(|(c, x)| c * x)
        .fold(zero(), |acc, v| acc + v);
    LpOutcome::Optimal { value, point }
}

/// Finds any feasible point of `{x >= 0 : constraints}`.
pub fn find_feasible(num_vars: usize, constraints: &[Constraint]) -> Option<Vec<Rational>> {
    match maximize(&vec![zero(); num_vars], constraints) {
        LpOutcome::Optimal { point, .. } => Some(point),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("constant objective cannot be unbounded"),
    }
}
