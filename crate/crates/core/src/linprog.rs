//! Simplex method with interval right-hand sides.
//!
//! The constraint matrix and the objective are real; each right-hand side is
//! a non-negative class. Pivoting follows the usual tableau mechanics, with
//! the row chosen by the smallest ratio `l(B_j) / a_jk` of lengths. All row
//! operations act on the right-hand sides through the vector space
//! operations of [`GClass`], which keeps their lengths non-negative.

use serde::{Deserialize, Serialize};

use crate::class::{GClass, SignClass};
use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=", alias = "==")]
    Eq,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub sense: Sense,
    pub rhs: GClass,
}

fn default_max_iter() -> usize {
    100
}

/// Maximize `c . x` subject to `A x (<= | =) B`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalLp {
    pub maximize: Vec<f64>,
    pub constraints: Vec<Constraint>,
    #[serde(default = "default_max_iter")]
    pub max_iter: usize,
}

impl IntervalLp {
    pub fn new(maximize: Vec<f64>) -> Self {
        IntervalLp {
            maximize,
            constraints: Vec::new(),
            max_iter: default_max_iter(),
        }
    }

    pub fn le(mut self, coeffs: Vec<f64>, rhs: GClass) -> Self {
        self.constraints.push(Constraint {
            coeffs,
            sense: Sense::Le,
            rhs,
        });
        self
    }

    pub fn eq(mut self, coeffs: Vec<f64>, rhs: GClass) -> Self {
        self.constraints.push(Constraint {
            coeffs,
            sense: Sense::Eq,
            rhs,
        });
        self
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse("problem JSON", e.to_string()))
    }

    pub fn num_vars(&self) -> usize {
        self.maximize.len()
    }

    /// Largest norm of `sum_j a_ij x_j + s_i - B_i` over the rows, where
    /// `s_i` is the slack of row `i` (zero for equality rows).
    pub fn residual(&self, vars: &[GClass], slacks: &[GClass]) -> f64 {
        let mut slack = slacks.iter();
        self.constraints
            .iter()
            .map(|row| {
                let mut lhs: GClass = row.coeffs.iter().zip(vars).map(|(&a, &x)| a * x).sum();
                if row.sense == Sense::Le {
                    lhs += slack.next().copied().unwrap_or_default();
                }
                (lhs - row.rhs).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// A simplex tableau. Columns are the original variables followed by one
/// slack per inequality row.
#[derive(Debug, Clone, PartialEq)]
pub struct Tableau {
    pub rows: Vec<Vec<f64>>,
    pub rhs: Vec<GClass>,
    /// Reduced costs; a positive entry is an improving column.
    pub objective: Vec<f64>,
    pub basis: Vec<usize>,
    pub num_vars: usize,
    pub iterations: usize,
    pub tol: f64,
}

/// Outcome of the pivot rules on a tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotChoice {
    Pivot { row: usize, col: usize },
    NoImprovingColumn,
    Unbounded { col: usize },
}

fn rhs_is_admissible(b: GClass, tol: f64) -> bool {
    match b.sign_with_tol(tol) {
        SignClass::Negative => false,
        SignClass::Scalar(a) => a >= -tol,
        _ => true,
    }
}

pub fn standardize(lp: &IntervalLp) -> Result<Tableau> {
    standardize_with_tol(lp, DEFAULT_TOL)
}

/// Adds a slack to every inequality row and looks up an identity column for
/// every equality row. Basic columns are priced out of the objective.
pub fn standardize_with_tol(lp: &IntervalLp, tol: f64) -> Result<Tableau> {
    let n = lp.num_vars();
    let p = lp.constraints.len();
    for (i, row) in lp.constraints.iter().enumerate() {
        if row.coeffs.len() != n {
            return Err(Error::Dimension(format!(
                "row {i} has {} coefficients, objective has {n}",
                row.coeffs.len()
            )));
        }
        if !row.rhs.is_finite() || row.coeffs.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite);
        }
        if row.rhs.inf() < -tol || !rhs_is_admissible(row.rhs, tol) {
            return Err(Error::Infeasible { row: i });
        }
    }
    let slacks = lp.constraints.iter().filter(|r| r.sense == Sense::Le).count();
    let width = n + slacks;
    let mut rows = Vec::with_capacity(p);
    let mut basis = Vec::with_capacity(p);
    let mut next_slack = n;
    for row in &lp.constraints {
        let mut r = row.coeffs.clone();
        r.resize(width, 0.0);
        if row.sense == Sense::Le {
            r[next_slack] = 1.0;
            basis.push(next_slack);
            next_slack += 1;
        } else {
            basis.push(usize::MAX);
        }
        rows.push(r);
    }
    for i in 0..p {
        if basis[i] != usize::MAX {
            continue;
        }
        let col = (0..n).find(|&j| {
            !basis.contains(&j)
                && (rows[i][j] - 1.0).abs() <= tol
                && (0..p).all(|k| k == i || rows[k][j].abs() <= tol)
        });
        basis[i] = col.ok_or(Error::MissingBasis { row: i })?;
    }
    let mut objective = lp.maximize.clone();
    objective.resize(width, 0.0);
    for (i, &b) in basis.iter().enumerate() {
        let cb = objective[b];
        if cb != 0.0 {
            for (o, a) in objective.iter_mut().zip(&rows[i]) {
                *o -= cb * a;
            }
        }
    }
    Ok(Tableau {
        rows,
        rhs: lp.constraints.iter().map(|r| r.rhs).collect(),
        objective,
        basis,
        num_vars: n,
        iterations: 0,
        tol,
    })
}

impl Tableau {
    /// Column: largest positive reduced cost, lowest index on ties.
    /// Row: smallest `l(B_j) / a_jk` over `a_jk > tol`. Ties are broken by the
    /// smaller `inf(B_j) / a_jk`, then by the lowest index.
    pub fn select_pivot(&self) -> PivotChoice {
        let tol = self.tol;
        let mut col = None;
        for (j, &r) in self.objective.iter().enumerate() {
            if r > tol && col.is_none_or(|c: usize| r > self.objective[c]) {
                col = Some(j);
            }
        }
        let Some(col) = col else {
            return PivotChoice::NoImprovingColumn;
        };
        let mut best: Option<(usize, f64, f64)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            let a = row[col];
            if a <= tol {
                continue;
            }
            let (len, val) = (self.rhs[i].length() / a, self.rhs[i].inf() / a);
            let better = match best {
                None => true,
                Some((_, bl, bv)) => {
                    let band = tol * bl.abs().max(1.0);
                    len < bl - band || ((len - bl).abs() <= band && val < bv - tol * bv.abs().max(1.0))
                }
            };
            if better {
                best = Some((i, len, val));
            }
        }
        match best {
            Some((row, _, _)) => PivotChoice::Pivot { row, col },
            None => PivotChoice::Unbounded { col },
        }
    }

    /// Divides the pivot row by `a_ik` and subtracts `a_jk` times it from every other row.
    pub fn apply_pivot(&mut self, row: usize, col: usize) -> Result<()> {
        let a = self.rows[row][col];
        if a.abs() <= self.tol {
            return Err(Error::NumericalPivot { row, col, value: a });
        }
        for v in self.rows[row].iter_mut() {
            *v /= a;
        }
        self.rows[row][col] = 1.0;
        self.rhs[row] = self.rhs[row].scale(1.0 / a);
        let (pivot_row, pivot_rhs) = (self.rows[row].clone(), self.rhs[row]);
        for i in 0..self.rows.len() {
            let f = self.rows[i][col];
            if i == row || f == 0.0 {
                continue;
            }
            for (v, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                *v -= f * p;
            }
            self.rows[i][col] = 0.0;
            self.rhs[i] = self.rhs[i] - f * pivot_rhs;
        }
        let f = self.objective[col];
        for (v, p) in self.objective.iter_mut().zip(&pivot_row) {
            *v -= f * p;
        }
        self.objective[col] = 0.0;
        self.basis[row] = col;
        self.iterations += 1;
        Ok(())
    }

    /// Basic columns take their row's right-hand side, the others are zero.
    pub fn assignment(&self) -> Vec<GClass> {
        let mut x = vec![GClass::ZERO; self.objective.len()];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs[i];
        }
        x
    }

    /// Whether every right-hand side is a positive class, a non-negative point or zero.
    pub fn rhs_admissible(&self) -> bool {
        self.rhs.iter().all(|&b| rhs_is_admissible(b, self.tol))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Optimal,
    Unbounded,
    Infeasible,
    IterationLimit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LpSolution {
    pub status: Status,
    pub variables: Vec<GClass>,
    /// One per inequality row, in row order.
    pub slacks: Vec<GClass>,
    pub objective: GClass,
    pub iterations: usize,
    /// `(row, col)` of every pivot, 0-based.
    pub trace: Vec<(usize, usize)>,
    pub reduced_costs: Vec<f64>,
}

pub fn solve(lp: &IntervalLp) -> Result<LpSolution> {
    solve_observed(lp, DEFAULT_TOL, |_| {})
}

pub fn solve_with_tol(lp: &IntervalLp, tol: f64) -> Result<LpSolution> {
    solve_observed(lp, tol, |_| {})
}

/// Like [`solve`], calling `observe` on the tableau after every pivot.
pub fn solve_observed<F>(lp: &IntervalLp, tol: f64, mut observe: F) -> Result<LpSolution>
where
    F: FnMut(&Tableau),
{
    let n = lp.num_vars();
    let mut t = match standardize_with_tol(lp, tol) {
        Ok(t) => t,
        Err(Error::Infeasible { .. }) => {
            return Ok(LpSolution {
                status: Status::Infeasible,
                variables: vec![GClass::ZERO; n],
                slacks: Vec::new(),
                objective: GClass::ZERO,
                iterations: 0,
                trace: Vec::new(),
                reduced_costs: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let mut trace = Vec::new();
    let status = loop {
        match t.select_pivot() {
            PivotChoice::NoImprovingColumn => break Status::Optimal,
            PivotChoice::Unbounded { .. } => break Status::Unbounded,
            PivotChoice::Pivot { .. } if t.iterations >= lp.max_iter => {
                break Status::IterationLimit
            }
            PivotChoice::Pivot { row, col } => {
                t.apply_pivot(row, col)?;
                trace.push((row, col));
                observe(&t);
            }
        }
    };
    let x = t.assignment();
    let objective = lp.maximize.iter().zip(&x).map(|(&c, &xi)| c * xi).sum();
    Ok(LpSolution {
        status,
        variables: x[..n].to_vec(),
        slacks: x[n..].to_vec(),
        objective,
        iterations: t.iterations,
        trace,
        reduced_costs: t.objective.clone(),
    })
}
