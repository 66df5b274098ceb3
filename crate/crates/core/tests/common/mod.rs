//! Brute-force references shared by the integration tests. None of these
//! go through the LR enumerator or the simplex solver.

#![allow(dead_code)]

use lrpos::{evaluate_point, ConstraintSystem, Partition, RationalPoint, SkewTableau};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn p(parts: &[u64]) -> Partition {
    Partition::from_u64s(parts).unwrap()
}

pub fn small(p: &Partition, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = p
        .to_u64s()
        .unwrap()
        .into_iter()
        .map(|x| x as usize)
        .collect();
    v.resize(n, 0);
    v
}

/// Every `n × n` nonnegative integer matrix with the given row and column
/// sums, entry `m[i][j]` being the number of letters `j + 1` in row `i + 1`.
pub fn contingency_tables(rows: &[usize], cols: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        i: usize,
        j: usize,
        rows: &[usize],
        col_left: &mut Vec<usize>,
        row_left: usize,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let n = col_left.len();
        if i == rows.len() {
            if col_left.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        if j == n {
            if row_left == 0 {
                let next = rows.get(i + 1).copied().unwrap_or(0);
                rec(i + 1, 0, rows, col_left, next, cur, out);
            }
            return;
        }
        for v in 0..=row_left.min(col_left[j]) {
            cur[i][j] = v;
            col_left[j] -= v;
            rec(i, j + 1, rows, col_left, row_left - v, cur, out);
            col_left[j] += v;
        }
        cur[i][j] = 0;
    }
    let mut out = Vec::new();
    if rows.is_empty() {
        if cols.iter().all(|&c| c == 0) {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![vec![0; cols.len()]; rows.len()];
    rec(0, 0, rows, &mut cols.to_vec(), rows[0], &mut cur, &mut out);
    out
}

/// Lays a count matrix out as a skew tableau over `alpha`.
pub fn tableau_from_matrix(alpha: &[usize], m: &[Vec<usize>]) -> SkewTableau {
    let rows = m
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .flat_map(|(j, &c)| std::iter::repeat_n(j as u32 + 1, c))
                .collect()
        })
        .collect();
    SkewTableau {
        offsets: alpha.to_vec(),
        rows,
    }
}

/// Restricts a full count matrix to the variables `j <= i`, or `None` if
/// some entry above the diagonal is nonzero.
pub fn matrix_to_point(sys: &ConstraintSystem, m: &[Vec<usize>]) -> Option<RationalPoint> {
    for (i, row) in m.iter().enumerate() {
        if row.iter().skip(i + 1).any(|&c| c != 0) {
            return None;
        }
    }
    let values = sys
        .vars
        .iter()
        .map(|v| BigRational::from_integer(BigInt::from(m[v.row - 1][v.letter - 1])))
        .collect();
    Some(RationalPoint::from_values(&sys.vars, values))
}

/// Number of integer points of `sys` with every coordinate in `0..=bound`.
pub fn count_integer_points(sys: &ConstraintSystem, bound: i64) -> usize {
    let k = sys.num_vars;
    let mut x = vec![0i64; k];
    let mut count = 0;
    loop {
        let pt = RationalPoint::from_values(
            &sys.vars,
            x.iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        );
        if evaluate_point(sys, &pt).unwrap().satisfied {
            count += 1;
        }
        let mut d = 0;
        while d < k && x[d] == bound {
            x[d] = 0;
            d += 1;
        }
        if d == k {
            return count;
        }
        x[d] += 1;
    }
}

/// Exact Fourier-Motzkin feasibility of `sys` with `x >= 0`: an
/// independent (if exponential) second route to LP feasibility. Equalities
/// are substituted away first; inequalities are then eliminated one variable
/// at a time.
pub fn fourier_motzkin_feasible(sys: &ConstraintSystem) -> bool {
    type Ineq = (Vec<BigRational>, BigRational);
    let k = sys.num_vars;
    let dense = |r: &lrpos::Row| {
        let mut a = vec![BigRational::zero(); k];
        for (&v, &c) in &r.coeffs {
            a[v] = BigRational::from_integer(BigInt::from(c));
        }
        (a, BigRational::from_integer(r.rhs.clone()))
    };
    let mut eqs: Vec<Ineq> = sys.eq.iter().map(dense).collect();
    let mut rows: Vec<Ineq> = sys.le.iter().map(dense).collect();
    for v in 0..k {
        let mut a = vec![BigRational::zero(); k];
        a[v] = -BigRational::one();
        rows.push((a, BigRational::zero()));
    }

    // a·x = b with a[v] != 0 gives x_v = (b - Σ_{u≠v} a_u x_u) / a_v
    while let Some((a, b)) = eqs.pop() {
        let Some(v) = a.iter().position(|c| !c.is_zero()) else {
            if b.is_zero() {
                continue;
            }
            return false;
        };
        let substitute = |(r, rb): &mut Ineq| {
            let f = &r[v] / &a[v];
            if f.is_zero() {
                return;
            }
            for (x, y) in r.iter_mut().zip(&a) {
                *x -= &f * y;
            }
            *rb -= &f * &b;
        };
        eqs.iter_mut().for_each(substitute);
        rows.iter_mut().for_each(substitute);
    }

    let normalize = |(a, b): Ineq| -> Ineq {
        match a.iter().map(|c| c.abs()).max().filter(|m| !m.is_zero()) {
            Some(m) => (a.iter().map(|c| c / &m).collect(), b / m),
            None => (a, b),
        }
    };
    for v in 0..k {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in rows {
            if row.0[v].is_positive() {
                pos.push(row);
            } else if row.0[v].is_negative() {
                neg.push(row);
            } else {
                rest.push(row);
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let (cp, cn) = (ap[v].clone(), -an[v].clone());
                let a: Vec<BigRational> =
                    ap.iter().zip(an).map(|(x, y)| x * &cn + y * &cp).collect();
                rest.push((a, bp * &cn + bn * &cp));
            }
        }
        let mut next = Vec::with_capacity(rest.len());
        for (a, b) in rest.into_iter().map(normalize) {
            if a.iter().all(Zero::is_zero) {
                if b.is_negative() {
                    return false;
                }
            } else {
                next.push((a, b));
            }
        }
        next.sort();
        next.dedup();
        rows = next;
    }
    true
}
