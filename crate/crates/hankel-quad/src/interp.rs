//! Dense Hermite interpolation support for the modified Filon methods.
//!
//! Interpolants have the form p(x) = Lambda(x) * sum_k c_k y(x)^k where y is
//! a (scaled) image of the oscillator and Lambda a case-dependent prefactor.
//! Derivative matching conditions become a confluent Vandermonde system whose
//! rows are read off jets of Lambda and y at each node, so the chain rule
//! never has to be written out.

use crate::error::{Error, Result};
use crate::jets::Jet;

/// Systems larger than this indicate a runaway plan, not a real request.
pub const MAX_SYSTEM: usize = 32;
/// Condition estimates above this make the solve untrustworthy in f64.
pub const COND_LIMIT: f64 = 1e14;

/// Solves the dense system A c = rhs by partial-pivot LU and reports an
/// infinity-norm condition estimate (computed from the explicit inverse; the
/// systems here are tiny).
pub fn solve_dense(a: &[Vec<f64>], rhs: &[f64]) -> Result<(Vec<f64>, f64)> {
    let n = a.len();
    if n == 0 || n > MAX_SYSTEM || rhs.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::Numerical(format!("bad system shape: n = {n}")));
    }
    let norm_a = a
        .iter()
        .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0f64, f64::max);

    // Factor PA = LU in place, remembering the row swaps.
    let mut lu: Vec<Vec<f64>> = a.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let (piv, mag) = (col..n)
            .map(|r| (r, lu[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag == 0.0 {
            return Err(Error::IllConditioned { cond: f64::INFINITY });
        }
        lu.swap(col, piv);
        perm.swap(col, piv);
        for r in col + 1..n {
            let m = lu[r][col] / lu[col][col];
            lu[r][col] = m;
            for c in col + 1..n {
                lu[r][c] -= m * lu[col][c];
            }
        }
    }

    let solve_one = |b: &[f64]| -> Vec<f64> {
        let mut x: Vec<f64> = perm.iter().map(|&p| b[p]).collect();
        for r in 1..n {
            for c in 0..r {
                x[r] -= lu[r][c] * x[c];
            }
        }
        for r in (0..n).rev() {
            for c in r + 1..n {
                x[r] -= lu[r][c] * x[c];
            }
            x[r] /= lu[r][r];
        }
        x
    };

    let mut norm_inv = 0.0f64;
    let mut unit = vec![0.0; n];
    let mut inv_rows = vec![vec![0.0; n]; n];
    for j in 0..n {
        unit[j] = 1.0;
        let col = solve_one(&unit);
        unit[j] = 0.0;
        for (r, v) in col.iter().enumerate() {
            inv_rows[r][j] = *v;
        }
    }
    for row in &inv_rows {
        norm_inv = norm_inv.max(row.iter().map(|v| v.abs()).sum());
    }

    Ok((solve_one(rhs), norm_a * norm_inv))
}

/// Builds the confluent interpolation matrix for p = Lambda * sum c_k y^k.
/// Row block i holds p(x_i), p'(x_i), ..., p^{(m_i-1)}(x_i); `y[i]` and
/// `lambda[i]` are jets at node i with at least m_i coefficients.
pub fn confluent_matrix(y: &[Jet], lambda: &[Jet], mults: &[usize]) -> Result<Vec<Vec<f64>>> {
    let n: usize = mults.iter().sum();
    if y.len() != mults.len() || lambda.len() != mults.len() {
        return Err(Error::Numerical("node/jet count mismatch".into()));
    }
    if n == 0 || n > MAX_SYSTEM {
        return Err(Error::Numerical(format!("plan size {n} out of range")));
    }
    let mut rows = vec![vec![0.0; n]; n];
    let mut row0 = 0;
    for (i, &m) in mults.iter().enumerate() {
        if m == 0 || y[i].len() < m || lambda[i].len() < m {
            return Err(Error::Numerical(format!(
                "node {i}: multiplicity {m} exceeds jet length"
            )));
        }
        let yi = y[i].truncated(m);
        let mut pw = Jet::constant(y[i].center(), 1.0, m);
        for k in 0..n {
            let basis = lambda[i].truncated(m).mul(&pw)?;
            for j in 0..m {
                rows[row0 + j][k] = basis.derivative_value(j);
            }
            pw = pw.mul(&yi)?.truncated(m);
        }
        row0 += m;
    }
    Ok(rows)
}

/// Interpolation coefficients c for p = Lambda * sum c_k y^k matching the
/// flattened derivative data rhs = [f(x_0), f'(x_0), ..., f(x_1), ...].
pub fn hermite_coeffs(
    y: &[Jet],
    lambda: &[Jet],
    mults: &[usize],
    rhs: &[f64],
) -> Result<Vec<f64>> {
    let a = confluent_matrix(y, lambda, mults)?;
    let (c, cond) = solve_dense(&a, rhs)?;
    if cond > COND_LIMIT {
        return Err(Error::IllConditioned { cond });
    }
    Ok(c)
}

/// Pascal's triangle with float entries: table[k][j] = C(k, j), k < n.
pub fn binomial_table(n: usize) -> Vec<Vec<f64>> {
    let mut t: Vec<Vec<f64>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut row = vec![1.0; k + 1];
        for j in 1..k {
            row[j] = t[k - 1][j - 1] + t[k - 1][j];
        }
        t.push(row);
    }
    t
}
