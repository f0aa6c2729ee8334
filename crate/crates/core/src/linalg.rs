//! Dense linear algebra over `F_q` on row vectors.

use crate::error::{Error, Result};
use crate::finite_field::{Fe, FieldCtx};

pub type Matrix = Vec<Vec<Fe>>;

pub fn dot(field: &FieldCtx, x: &[Fe], y: &[Fe]) -> Fe {
    x.iter()
        .zip(y)
        .fold(Fe::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}

pub fn hamming_weight(x: &[Fe]) -> usize {
    x.iter().filter(|c| !c.is_zero()).count()
}

/// Reduced row echelon form; zero rows are dropped. Also returns the pivot
/// column of each remaining row.
pub fn rref(field: &FieldCtx, rows: &[Vec<Fe>]) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(sel) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, sel);
        let inv = field.inv(m[r][col]).unwrap();
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(field: &FieldCtx, rows: &[Vec<Fe>]) -> usize {
    rref(field, rows).0.len()
}

/// Basis of `{y : <x, y> = 0 for every row x}` in `F_q^ncols`.
pub fn orthogonal_complement(field: &FieldCtx, rows: &[Vec<Fe>], ncols: usize) -> Matrix {
    let (m, pivots) = rref(field, rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Fe::ZERO; ncols];
            v[fc] = Fe::ONE;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = field.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Calls `visit` on every vector of the row span of `basis` (which must be
/// linearly independent for the count `q^k` to be exact). Fails before
/// enumerating anything when `q^k` exceeds `cap`.
pub fn for_each_in_span<F>(field: &FieldCtx, basis: &[Vec<Fe>], cap: u128, mut visit: F) -> Result<()>
where
    F: FnMut(&[Fe]),
{
    let q = field.q() as u128;
    let k = basis.len();
    let required = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if required > cap {
        return Err(Error::CapExceeded { required, cap });
    }
    let n = basis.first().map_or(0, Vec::len);
    // multiples[j][c] = c * basis[j]
    let multiples: Vec<Vec<Vec<Fe>>> = basis
        .iter()
        .map(|row| {
            field
                .elements()
                .map(|c| row.iter().map(|&x| field.mul(c, x)).collect())
                .collect()
        })
        .collect();
    let mut digits = vec![0u32; k];
    let mut word = vec![Fe::ZERO; n];
    visit(&word);
    let qm = field.q();
    loop {
        // odometer step; each touched digit swaps one multiple for the next
        let mut j = 0;
        loop {
            if j == k {
                return Ok(());
            }
            let old = &multiples[j][digits[j] as usize];
            digits[j] = (digits[j] + 1) % qm;
            let new = &multiples[j][digits[j] as usize];
            for ((w, &o), &nw) in word.iter_mut().zip(old).zip(new) {
                *w = field.add(field.sub(*w, o), nw);
            }
            if digits[j] != 0 {
                break;
            }
            j += 1;
        }
        visit(&word);
    }
}

/// Every vector of the span, in enumeration order.
pub fn span_vectors(field: &FieldCtx, basis: &[Vec<Fe>], cap: u128) -> Result<Matrix> {
    let mut out = Vec::new();
    for_each_in_span(field, basis, cap, |w| out.push(w.to_vec()))?;
    Ok(out)
}
