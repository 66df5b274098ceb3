//! Exact LP feasibility for [`ConstraintSystem`]s over nonnegative variables.
//!
//! Phase-1 simplex on a dense tableau of reduced big rationals: slacks on
//! the `≤` rows, artificials on every equality row and on every `≤` row
//! with a negative right-hand side, minimizing the sum of artificials.
//! Pivoting follows Bland's rule over the column order structural, slack,
//! artificial, so the method terminates and the pivot sequence is a pure
//! function of the system.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::polytope::{ConstraintSystem, RationalPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Feasible,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub verdict: Verdict,
    /// Present iff the verdict is [`Verdict::Feasible`].
    pub witness: Option<RationalPoint>,
    pub pivot_count: u64,
    /// Minimal sum of artificials; strictly positive iff infeasible.
    pub phase_one_optimum: BigRational,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

struct Tableau {
    /// `rows[r]` holds the coefficients followed by the right-hand side.
    rows: Vec<Vec<BigRational>>,
    /// Reduced costs followed by minus the current objective value.
    cost: Vec<BigRational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &BigRational {
        &self.rows[r][self.width]
    }

    /// Bland: the lowest-index column with negative reduced cost.
    fn entering(&self) -> Option<usize> {
        (0..self.width).find(|&c| self.cost[c].is_negative())
    }

    /// Minimum ratio test, ties broken by the lowest basic column index.
    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, BigRational)> = None;
        for r in 0..self.rows.len() {
            let a = &self.rows[r][col];
            if !a.is_positive() {
                continue;
            }
            let ratio = self.rhs(r) / a;
            best = match best {
                None => Some((r, ratio)),
                Some((b, br)) => {
                    if ratio < br || (ratio == br && self.basis[r] < self.basis[b]) {
                        Some((r, ratio))
                    } else {
                        Some((b, br))
                    }
                }
            };
        }
        best.map(|(r, _)| r)
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let inv = self.rows[pr][pc].recip();
        for v in self.rows[pr].iter_mut().filter(|v| !v.is_zero()) {
            *v *= &inv;
        }
        let pivot_row = std::mem::take(&mut self.rows[pr]);
        let support: Vec<usize> = (0..=self.width)
            .filter(|&c| !pivot_row[c].is_zero())
            .collect();
        let eliminate = |target: &mut Vec<BigRational>| {
            let factor = target[pc].clone();
            if factor.is_zero() {
                return;
            }
            for &c in &support {
                target[c] -= &factor * &pivot_row[c];
            }
        };
        for (r, row) in self.rows.iter_mut().enumerate() {
            if r != pr {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[pr] = pivot_row;
        self.basis[pr] = pc;
    }
}

/// Sparse coefficients over structural and slack columns, rhs, and whether
/// the row needs an artificial.
type RawRow = (Vec<(usize, BigInt)>, BigInt, bool);

/// Decides whether `sys` has a nonnegative rational solution, returning an
/// exact witness when it does.
pub fn feasible(sys: &ConstraintSystem) -> FeasibilityResult {
    let nx = sys.num_vars;
    let n_slack = sys.le.len();
    let slack_col = |k: usize| nx + k;

    let mut raw: Vec<RawRow> = Vec::new();
    for row in &sys.eq {
        let coeffs = row
            .coeffs
            .iter()
            .map(|(&v, &c)| (v, BigInt::from(c)))
            .collect();
        raw.push((coeffs, row.rhs.clone(), true));
    }
    for (k, row) in sys.le.iter().enumerate() {
        let mut coeffs: Vec<(usize, BigInt)> = row
            .coeffs
            .iter()
            .map(|(&v, &c)| (v, BigInt::from(c)))
            .collect();
        coeffs.push((slack_col(k), BigInt::one()));
        raw.push((coeffs, row.rhs.clone(), row.rhs.is_negative()));
    }

    let n_art = raw.iter().filter(|r| r.2).count();
    let width = nx + n_slack + n_art;
    let mut rows = Vec::with_capacity(raw.len());
    let mut basis = Vec::with_capacity(raw.len());
    let mut cost = vec![BigRational::zero(); width + 1];
    let mut next_art = nx + n_slack;
    for (r, (coeffs, rhs, artificial)) in raw.into_iter().enumerate() {
        let flip = rhs.is_negative();
        let sign = |x: BigInt| if flip { -x } else { x };
        let mut dense = vec![BigRational::zero(); width + 1];
        for (c, a) in coeffs {
            dense[c] = BigRational::from_integer(sign(a));
        }
        dense[width] = BigRational::from_integer(sign(rhs));
        if artificial {
            dense[next_art] = BigRational::one();
            basis.push(next_art);
            next_art += 1;
            // price out the basic artificial: cost -= row
            for c in 0..=width {
                if c < nx + n_slack || c == width {
                    cost[c] -= &dense[c];
                }
            }
        } else {
            basis.push(slack_col(r - sys.eq.len()));
        }
        rows.push(dense);
    }

    let mut tab = Tableau {
        rows,
        cost,
        basis,
        width,
    };
    let mut pivots = 0u64;
    while let Some(col) = tab.entering() {
        let row = tab
            .leaving(col)
            .expect("phase-one objective is bounded below by zero");
        tab.pivot(row, col);
        pivots += 1;
    }

    let optimum = -tab.cost[width].clone();
    if optimum.is_positive() {
        return FeasibilityResult {
            verdict: Verdict::Infeasible,
            witness: None,
            pivot_count: pivots,
            phase_one_optimum: optimum,
        };
    }
    let mut x = vec![BigRational::zero(); nx];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < nx {
            x[b] = tab.rhs(r).clone();
        }
    }
    FeasibilityResult {
        verdict: Verdict::Feasible,
        witness: Some(RationalPoint::from_values(&sys.vars, x)),
        pivot_count: pivots,
        phase_one_optimum: optimum,
    }
}
