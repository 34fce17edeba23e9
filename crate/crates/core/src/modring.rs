//! Exact arithmetic over the ring `Z_D` for arbitrary modulus `D >= 2`:
//! matrices, Smith-style diagonalization by elementary operations, and
//! linear-system solving in row-vector convention (`x * A = b`).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Multiplicative inverse of `a` mod `m`, when `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// A unit `u` of `Z_D` with `u * a = gcd(a, D) (mod D)`.
///
/// Every residue is associate to its gcd with the modulus; the unit is found
/// by inverting the unit part of `a` and lifting along the progression
/// `u0 + k * D/g` until the lift is coprime to `D`.
pub fn unit_to_gcd(a: u64, d: u64) -> u64 {
    let a = a % d;
    if a == 0 {
        return 1;
    }
    let g = gcd(a, d);
    let ap = a / g;
    let dg = d / g;
    if dg == 1 {
        return 1;
    }
    let u0 = mod_inverse(ap % dg, dg).expect("unit part invertible");
    for k in 0..g {
        let cand = u0 + k * dg;
        if gcd(cand, d) == 1 {
            return cand;
        }
    }
    unreachable!("a coprime lift always exists");
}

/// Dense matrix over `Z_D`, row-major, entries reduced to `[0, D)`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<u64>,
}

impl fmt::Debug for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ModMatrix {}x{} mod {}", self.rows, self.cols, self.modulus)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl ModMatrix {
    pub fn zero(rows: usize, cols: usize, modulus: u64) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        assert!(modulus >= 2, "modulus must be at least 2");
        ModMatrix { rows, cols, modulus, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut m = Self::zero(n, n, modulus);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>], modulus: u64) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::DimensionMismatch("matrix must be nonempty".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let mut m = Self::zero(rows.len(), cols, modulus);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.cols + j] = v % self.modulus;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> ModMatrix {
        let mut t = ModMatrix::zero(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &ModMatrix) -> Result<ModMatrix> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ModMatrix::zero(self.rows, other.cols, self.modulus);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, (cur + a * other.get(k, j)) % self.modulus);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `x * A` with `|x| = rows`.
    pub fn row_vec_mul(&self, x: &[u64]) -> Result<Vec<u64>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} vs {} rows",
                x.len(),
                self.rows
            )));
        }
        let mut out = vec![0u64; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            let xi = xi % self.modulus;
            if xi == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] = (out[j] + xi * self.get(i, j)) % self.modulus;
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j && self.get(i, j) != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn diagonal(&self) -> Vec<u64> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    /// A square matrix is invertible mod `D` iff `x * M = 0` only trivially.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && nullspace_size(self) == 1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, unit: u64) {
        for j in 0..self.cols {
            let v = self.get(i, j);
            self.set(i, j, (v * unit) % self.modulus);
        }
    }

    /// `row[dest] += factor * row[src]`.
    fn add_row_multiple(&mut self, dest: usize, src: usize, factor: u64) {
        let factor = factor % self.modulus;
        if factor == 0 {
            return;
        }
        for j in 0..self.cols {
            let v = (self.get(dest, j) + factor * self.get(src, j)) % self.modulus;
            self.set(dest, j, v);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `col[dest] += factor * col[src]`.
    fn add_col_multiple(&mut self, dest: usize, src: usize, factor: u64) {
        let factor = factor % self.modulus;
        if factor == 0 {
            return;
        }
        for i in 0..self.rows {
            let v = (self.get(i, dest) + factor * self.get(i, src)) % self.modulus;
            self.set(i, dest, v);
        }
    }
}

/// Elementary column operation, recorded in application order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColOp {
    Swap { a: usize, b: usize },
    ScaleUnit { col: usize, unit: u64 },
    /// `col[dest] += factor * col[src]`.
    AddMultiple { dest: usize, src: usize, factor: u64 },
}

impl ColOp {
    pub fn apply(&self, m: &mut ModMatrix) {
        match *self {
            ColOp::Swap { a, b } => m.swap_cols(a, b),
            ColOp::ScaleUnit { col, unit } => {
                for i in 0..m.rows() {
                    let v = m.get(i, col);
                    m.set(i, col, v * unit);
                }
            }
            ColOp::AddMultiple { dest, src, factor } => m.add_col_multiple(dest, src, factor),
        }
    }
}

/// Result of diagonalizing `f` by elementary operations: `v * f * w = s`
/// with `v`, `w` invertible mod `D` and every diagonal entry of `s` either
/// zero or a divisor of `D`. Replaying `col_ops` reproduces the column
/// action of `w`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub s: ModMatrix,
    pub v: ModMatrix,
    pub w: ModMatrix,
    pub col_ops: Vec<ColOp>,
}

struct SmithCalc {
    s: ModMatrix,
    v: ModMatrix,
    w: ModMatrix,
    ops: Vec<ColOp>,
}

impl SmithCalc {
    fn row_swap(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.v.swap_rows(a, b);
    }

    fn row_scale(&mut self, i: usize, unit: u64) {
        self.s.scale_row(i, unit);
        self.v.scale_row(i, unit);
    }

    fn row_add(&mut self, dest: usize, src: usize, factor: u64) {
        self.s.add_row_multiple(dest, src, factor);
        self.v.add_row_multiple(dest, src, factor);
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        let op = ColOp::Swap { a, b };
        op.apply(&mut self.s);
        op.apply(&mut self.w);
        self.ops.push(op);
    }

    fn col_add(&mut self, dest: usize, src: usize, factor: u64) {
        let factor = factor % self.s.modulus();
        if factor == 0 {
            return;
        }
        let op = ColOp::AddMultiple { dest, src, factor };
        op.apply(&mut self.s);
        op.apply(&mut self.w);
        self.ops.push(op);
    }

    /// Row-only echelon of the submatrix with rows and columns `>= t`.
    ///
    /// Pivots land on consecutive rows starting at `t`, each unit-scaled to
    /// `gcd(pivot, D)`; entries below a pivot are cleared, entries above it
    /// are cleared when the pivot divides them (row operations are free,
    /// column operations cost gates in the encoding circuit).
    fn row_echelon_from(&mut self, t: usize) {
        let (rows, cols, d) = (self.s.rows(), self.s.cols(), self.s.modulus());
        let mut pr = t;
        for j in t..cols {
            if pr == rows {
                break;
            }
            // Euclidean reduction of column j among rows >= pr.
            loop {
                let nz: Vec<usize> = (pr..rows).filter(|&i| self.s.get(i, j) != 0).collect();
                match nz.len() {
                    0 => break,
                    1 => {
                        let i = nz[0];
                        self.row_swap(i, pr);
                        let val = self.s.get(pr, j);
                        let u = unit_to_gcd(val, d);
                        if u != 1 {
                            self.row_scale(pr, u);
                        }
                        let g = self.s.get(pr, j);
                        for u_row in t..pr {
                            let a = self.s.get(u_row, j);
                            if a != 0 && a % g == 0 {
                                self.row_add(u_row, pr, d - a / g);
                            }
                        }
                        pr += 1;
                        break;
                    }
                    _ => {
                        let &imin = nz
                            .iter()
                            .min_by_key(|&&i| (self.s.get(i, j), i))
                            .expect("nonempty");
                        let pv = self.s.get(imin, j);
                        for &i in &nz {
                            if i == imin {
                                continue;
                            }
                            let q = self.s.get(i, j) / pv;
                            self.row_add(i, imin, d - q % d);
                        }
                    }
                }
            }
        }
    }
}

/// Diagonalize `f` over `Z_D` by elementary row and column operations.
///
/// Column operations are kept to the minimum the reduction needs, since each
/// one becomes a gate when the decomposition drives encoding-circuit
/// synthesis; everything achievable by row operations (which change the
/// generator list but not the generated group) is done with rows.
pub fn smith_normal_form(f: &ModMatrix) -> SmithDecomposition {
    let d = f.modulus();
    let (rows, cols) = (f.rows(), f.cols());
    let mut calc = SmithCalc {
        s: f.clone(),
        v: ModMatrix::identity(rows, d),
        w: ModMatrix::identity(cols, d),
        ops: Vec::new(),
    };

    let mut t = 0;
    let mut guard = 0u32;
    while t < rows.min(cols) {
        guard += 1;
        assert!(guard < 100_000, "smith reduction failed to terminate");
        calc.row_echelon_from(t);
        // Leading column of row t is the leftmost nonzero column of the
        // remaining submatrix; if row t is zero the rest of the matrix is too.
        let Some(j0) = (t..cols).find(|&j| calc.s.get(t, j) != 0) else {
            break;
        };
        if j0 != t {
            // Columns t..j0 are zero everywhere: zero in rows >= t by choice
            // of leading column, zero in rows < t because finished rows only
            // carry their diagonal entry.
            calc.col_swap(t, j0);
        }
        let g = calc.s.get(t, t);
        let mut restart = false;
        for j in t + 1..cols {
            let a = calc.s.get(t, j);
            if a == 0 {
                continue;
            }
            if a % g == 0 {
                // col j += (D - a/g) * col t clears the entry; this factor
                // choice makes the inverse gate power a/g, the smallest.
                calc.col_add(j, t, d - a / g);
            } else {
                // Pivot does not divide the entry: shrink the pivot by a
                // Euclidean step and re-run the row phase.
                let q = a / g;
                calc.col_add(j, t, d - q);
                calc.col_swap(t, j);
                restart = true;
                break;
            }
        }
        if restart {
            continue;
        }
        t += 1;
    }

    SmithDecomposition { s: calc.s, v: calc.v, w: calc.w, col_ops: calc.ops }
}

impl SmithDecomposition {
    /// Diagonal entries of `s` (zero or divisors of `D`).
    pub fn diagonal(&self) -> Vec<u64> {
        self.s.diagonal()
    }

    /// Solve `x * A = b` for the decomposed `A`, reusing the factorization.
    ///
    /// Returns `None` when inconsistent; otherwise a particular solution and
    /// generators of the left nullspace `{y : y * A = 0}`.
    pub fn solve(&self, b: &[u64]) -> Result<Option<LinearSolution>> {
        let d = self.s.modulus();
        let (rows, cols) = (self.s.rows(), self.s.cols());
        if b.len() != cols {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} vs {} cols",
                b.len(),
                cols
            )));
        }
        // x A = b  <=>  y s = b w  with  x = y v.
        let bv = self.w.row_vec_mul(b)?;
        let k = rows.min(cols);
        let mut y = vec![0u64; rows];
        for j in 0..cols {
            let target = bv[j];
            if j < k {
                let sj = self.s.get(j, j);
                if sj == 0 {
                    if target != 0 {
                        return Ok(None);
                    }
                } else {
                    if target % sj != 0 {
                        return Ok(None);
                    }
                    y[j] = target / sj;
                }
            } else if target != 0 {
                return Ok(None);
            }
        }
        let particular = self.v.row_vec_mul(&y)?;
        let mut nullspace = Vec::new();
        for j in 0..rows {
            if j < k {
                let sj = self.s.get(j, j);
                if sj == 0 {
                    nullspace.push(self.v.row(j).to_vec());
                } else if sj > 1 {
                    let gen_y = d / sj;
                    let mut row = self.v.row(j).to_vec();
                    for e in row.iter_mut() {
                        *e = (*e * gen_y) % d;
                    }
                    nullspace.push(row);
                }
            } else {
                nullspace.push(self.v.row(j).to_vec());
            }
        }
        Ok(Some(LinearSolution { particular, nullspace }))
    }
}

/// A particular solution of `x * A = b` together with generators of
/// `{y : y * A = 0}`.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub particular: Vec<u64>,
    pub nullspace: Vec<Vec<u64>>,
}

/// Solve `x * A = b` over `Z_D` (row-vector convention).
pub fn solve_mod(a: &ModMatrix, b: &[u64]) -> Result<Option<LinearSolution>> {
    smith_normal_form(a).solve(b)
}

/// Number of solutions of `x * A = 0` over `Z_D`, from the Smith diagonal.
pub fn nullspace_size(a: &ModMatrix) -> u128 {
    let smith = smith_normal_form(a);
    nullspace_size_of(&smith)
}

pub fn nullspace_size_of(smith: &SmithDecomposition) -> u128 {
    let d = smith.s.modulus() as u128;
    let (rows, cols) = (smith.s.rows(), smith.s.cols());
    let k = rows.min(cols);
    let mut count: u128 = 1;
    for j in 0..k {
        let sj = smith.s.get(j, j);
        count *= if sj == 0 { d } else { sj as u128 };
    }
    for _ in k..rows {
        count *= d;
    }
    count
}
