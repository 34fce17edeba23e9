//! Dense complex state vectors and operators used by the oracle and
//! simulation paths. Indices pack qudit digits base `D` with qudit 0 as the
//! most significant digit.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Default ceiling on dense Hilbert-space dimension `D^n`.
pub const DEFAULT_DENSE_CAP: usize = 4096;

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub fn check_cap(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        return Err(Error::DenseCap { dim, cap });
    }
    Ok(())
}

/// Hilbert-space dimension `D^n`, erroring past the cap instead of wrapping.
pub fn hilbert_dim(d: u64, n: usize, cap: usize) -> Result<usize> {
    let mut dim: usize = 1;
    for _ in 0..n {
        dim = dim
            .checked_mul(d as usize)
            .filter(|&v| v <= cap)
            .ok_or(Error::DenseCap { dim: usize::MAX, cap })?;
    }
    Ok(dim)
}

/// `omega^k` for `omega = exp(2 pi i / D)`.
pub fn root_of_unity(d: u64, k: i64) -> C64 {
    phase(TAU * (k.rem_euclid(d as i64) as f64) / d as f64)
}

pub fn phase(theta: f64) -> C64 {
    C64::new(theta.cos(), theta.sin())
}

/// Digits of `index` base `d`, most significant first, length `n`.
pub fn index_to_digits(index: usize, d: u64, n: usize) -> Vec<u64> {
    let mut digits = vec![0u64; n];
    let mut rem = index;
    for l in (0..n).rev() {
        digits[l] = (rem % d as usize) as u64;
        rem /= d as usize;
    }
    digits
}

pub fn digits_to_index(digits: &[u64], d: u64) -> usize {
    digits.iter().fold(0usize, |acc, &x| acc * d as usize + (x % d) as usize)
}

/// Apply `X^x Z^z` (per-qudit exponents) to a state vector in place:
/// the image of `|j>` is `omega^{z.(j)} |j - x|`, so the new amplitude at
/// `j` is `omega^{z.(j+x)} v(j+x)`.
pub fn apply_pauli_xz(v: &CVector, x: &[u64], z: &[u64], d: u64) -> CVector {
    let n = x.len();
    let dim = v.len();
    let mut out = CVector::zeros(dim);
    for j in 0..dim {
        let digits = index_to_digits(j, d, n);
        let shifted: Vec<u64> = digits.iter().zip(x).map(|(&jl, &xl)| (jl + xl) % d).collect();
        let mut expo: u64 = 0;
        for l in 0..n {
            expo = (expo + z[l] * shifted[l]) % d;
        }
        out[j] = root_of_unity(d, expo as i64) * v[digits_to_index(&shifted, d)];
    }
    out
}

pub fn inner(a: &CVector, b: &CVector) -> C64 {
    a.dotc(b)
}

/// Largest absolute deviation of `m` from the identity.
pub fn deviation_from_identity(m: &CMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            worst = worst.max((m[(i, j)] - target).norm());
        }
    }
    worst
}

pub fn is_unitary(m: &CMatrix, tol: f64) -> bool {
    if m.nrows() != m.ncols() {
        return false;
    }
    deviation_from_identity(&(m.adjoint() * m)) < tol
}

/// Two matrices equal up to a global phase: `||A - e^{i theta} B||_max < tol`
/// with `theta` read off the largest-magnitude matched entry.
pub fn equal_up_to_phase(a: &CMatrix, b: &CMatrix, tol: f64) -> bool {
    if a.shape() != b.shape() {
        return false;
    }
    let mut best = (0usize, 0usize);
    let mut best_mag = -1.0f64;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            let mag = a[(i, j)].norm().min(b[(i, j)].norm());
            if mag > best_mag {
                best_mag = mag;
                best = (i, j);
            }
        }
    }
    if best_mag <= tol {
        // Both matrices are essentially zero on their common support;
        // compare directly.
        return (a - b).iter().all(|e| e.norm() < tol);
    }
    let theta = a[best] / b[best];
    let theta = theta / theta.norm();
    (a - b.map(|e| e * theta)).iter().all(|e| e.norm() < tol)
}

pub fn vectors_equal_up_to_phase(a: &CVector, b: &CVector, tol: f64) -> bool {
    let am = CMatrix::from_column_slice(a.len(), 1, a.as_slice());
    let bm = CMatrix::from_column_slice(b.len(), 1, b.as_slice());
    equal_up_to_phase(&am, &bm, tol)
}

/// Kronecker product following qudit order (factor 0 most significant).
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Partial trace over the complement of `keep` (0-based qudit indices,
/// ascending) of an operator on `n` qudits of dimension `d`.
pub fn partial_trace(m: &CMatrix, d: u64, n: usize, keep: &[usize]) -> CMatrix {
    let dk = d as usize;
    let keep_dim = dk.pow(keep.len() as u32);
    let traced: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
    let traced_dim = dk.pow(traced.len() as u32);
    let mut out = CMatrix::zeros(keep_dim, keep_dim);
    for rk in 0..keep_dim {
        let rk_digits = index_to_digits(rk, d, keep.len());
        for ck in 0..keep_dim {
            let ck_digits = index_to_digits(ck, d, keep.len());
            let mut acc = C64::new(0.0, 0.0);
            for t in 0..traced_dim {
                let t_digits = index_to_digits(t, d, traced.len());
                let mut row = vec![0u64; n];
                let mut col = vec![0u64; n];
                for (pos, &q) in keep.iter().enumerate() {
                    row[q] = rk_digits[pos];
                    col[q] = ck_digits[pos];
                }
                for (pos, &q) in traced.iter().enumerate() {
                    row[q] = t_digits[pos];
                    col[q] = t_digits[pos];
                }
                acc += m[(digits_to_index(&row, d), digits_to_index(&col, d))];
            }
            out[(rk, ck)] = acc;
        }
    }
    out
}

/// Schmidt spectrum of an n-qudit pure state across the bipartition
/// `(left, complement)`: squared singular values of the reshaped amplitude
/// matrix, sorted descending.
pub fn bipartition_spectrum(v: &CVector, d: u64, n: usize, left: &[usize]) -> Vec<f64> {
    let dk = d as usize;
    let right: Vec<usize> = (0..n).filter(|q| !left.contains(q)).collect();
    let lrows = dk.pow(left.len() as u32);
    let rcols = dk.pow(right.len() as u32);
    let mut omega = CMatrix::zeros(lrows, rcols);
    for idx in 0..v.len() {
        let digits = index_to_digits(idx, d, n);
        let li: Vec<u64> = left.iter().map(|&q| digits[q]).collect();
        let ri: Vec<u64> = right.iter().map(|&q| digits[q]).collect();
        omega[(digits_to_index(&li, d), digits_to_index(&ri, d))] = v[idx];
    }
    let svd = omega.svd(false, false);
    let mut lam: Vec<f64> = svd.singular_values.iter().map(|s| s * s).collect();
    lam.sort_by(|a, b| b.partial_cmp(a).unwrap());
    lam
}

/// Rank of a Hermitian positive semidefinite matrix by eigenvalue count.
pub fn psd_rank(m: &CMatrix, threshold: f64) -> usize {
    let eig = m.clone().symmetric_eigen();
    eig.eigenvalues.iter().filter(|&&e| e > threshold).count()
}
