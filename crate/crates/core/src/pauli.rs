//! Generalized Pauli products `omega^lambda X^x Z^z` on `n` qudits of
//! dimension `D`, with exact exponent arithmetic and a dense-matrix oracle.
//!
//! Single-qudit conventions: `Z|j> = omega^j |j>`, `X|j> = |j-1 mod D>`
//! (so `X = sum_j |j><j+1|`), and `X Z = omega Z X`. The canonical operator
//! order per qudit is `X^{x_l} Z^{z_l}`.

use crate::dense::{self, CMatrix, C64};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliProduct {
    n: usize,
    modulus: u64,
    lambda: u64,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl fmt::Debug for PauliProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PauliProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^{} X^{:?} Z^{:?}", self.lambda, self.x, self.z)
    }
}

impl PauliProduct {
    pub fn new(lambda: u64, x: Vec<u64>, z: Vec<u64>, modulus: u64) -> Result<Self> {
        if x.len() != z.len() || x.is_empty() {
            return Err(Error::DimensionMismatch("x and z tuples must have equal nonzero length".into()));
        }
        if modulus < 2 {
            return Err(Error::Precondition("modulus must be at least 2".into()));
        }
        let n = x.len();
        Ok(PauliProduct {
            n,
            modulus,
            lambda: lambda % modulus,
            x: x.into_iter().map(|v| v % modulus).collect(),
            z: z.into_iter().map(|v| v % modulus).collect(),
        })
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        PauliProduct { n, modulus, lambda: 0, x: vec![0; n], z: vec![0; n] }
    }

    /// `X` on qudit `l` (0-based), identity elsewhere.
    pub fn single_x(l: usize, n: usize, modulus: u64) -> Self {
        let mut p = Self::identity(n, modulus);
        p.x[l] = 1;
        p
    }

    pub fn single_z(l: usize, n: usize, modulus: u64) -> Self {
        let mut p = Self::identity(n, modulus);
        p.z[l] = 1;
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn x(&self) -> &[u64] {
        &self.x
    }

    pub fn z(&self) -> &[u64] {
        &self.z
    }

    fn check_compatible(&self, other: &PauliProduct) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{} vs {} qudits", self.n, other.n)));
        }
        Ok(())
    }

    /// Product in canonical form: exponents add and the phase picks up
    /// `-z_p . x_q` from reordering `Z^{z_p} X^{x_q} = w^{-z_p.x_q} X^{x_q} Z^{z_p}`.
    pub fn multiply(&self, other: &PauliProduct) -> Result<PauliProduct> {
        self.check_compatible(other)?;
        let d = self.modulus;
        let mut cross: u64 = 0;
        for l in 0..self.n {
            cross = (cross + self.z[l] * other.x[l]) % d;
        }
        let lambda = (self.lambda + other.lambda + d - cross) % d;
        let x = self.x.iter().zip(&other.x).map(|(&a, &b)| (a + b) % d).collect();
        let z = self.z.iter().zip(&other.z).map(|(&a, &b)| (a + b) % d).collect();
        Ok(PauliProduct { n: self.n, modulus: d, lambda, x, z })
    }

    pub fn inverse(&self) -> PauliProduct {
        let d = self.modulus;
        // (X^x Z^z)^-1 = Z^-z X^-x = w^{-x.z} X^-x Z^-z.
        let mut cross: u64 = 0;
        for l in 0..self.n {
            cross = (cross + self.x[l] * self.z[l]) % d;
        }
        let lambda = ((d - self.lambda % d) % d + (d - cross % d) % d) % d;
        let x = self.x.iter().map(|&a| (d - a) % d).collect();
        let z = self.z.iter().map(|&a| (d - a) % d).collect();
        PauliProduct { n: self.n, modulus: d, lambda, x, z }
    }

    pub fn pow(&self, k: u64) -> PauliProduct {
        let mut acc = PauliProduct::identity(self.n, self.modulus);
        for _ in 0..(k % self.modulus + self.modulus) % self.modulus {
            acc = acc.multiply(self).expect("same shape");
        }
        acc
    }

    /// Exponent `mu` with `p q = w^mu q p`: the symplectic form
    /// `x_p . z_q - z_p . x_q` mod `D`.
    pub fn commutation_phase(&self, other: &PauliProduct) -> Result<u64> {
        self.check_compatible(other)?;
        let d = self.modulus;
        let mut mu: u64 = 0;
        for l in 0..self.n {
            mu = (mu + self.x[l] * other.z[l] + d * d - self.z[l] * other.x[l]) % d;
        }
        Ok(mu)
    }

    /// Base = qudits acted on nontrivially (0-based, ascending); size = |base|.
    pub fn size_and_base(&self) -> (usize, Vec<usize>) {
        let base: Vec<usize> =
            (0..self.n).filter(|&l| self.x[l] != 0 || self.z[l] != 0).collect();
        (base.len(), base)
    }

    pub fn size(&self) -> usize {
        self.size_and_base().0
    }

    /// Equality up to phase compares only the exponent tuples.
    pub fn same_up_to_phase(&self, other: &PauliProduct) -> bool {
        self.n == other.n && self.modulus == other.modulus && self.x == other.x && self.z == other.z
    }

    /// Dense matrix of side `D^n`; errors past the cap.
    pub fn to_dense(&self, cap: usize) -> Result<CMatrix> {
        let d = self.modulus;
        let dim = dense::hilbert_dim(d, self.n, cap)?;
        let mut m = CMatrix::zeros(dim, dim);
        let scale = dense::root_of_unity(d, self.lambda as i64);
        for col in 0..dim {
            let digits = dense::index_to_digits(col, d, self.n);
            // X^x Z^z |j> = w^{z.j} |j - x|.
            let mut expo: u64 = 0;
            for l in 0..self.n {
                expo = (expo + self.z[l] * digits[l]) % d;
            }
            let target: Vec<u64> =
                digits.iter().zip(&self.x).map(|(&j, &x)| (j + d - x) % d).collect();
            let row = dense::digits_to_index(&target, d);
            m[(row, col)] = scale * dense::root_of_unity(d, expo as i64);
        }
        Ok(m)
    }
}

/// Single-qudit `X` as a dense matrix.
pub fn x_matrix(d: u64) -> CMatrix {
    PauliProduct::single_x(0, 1, d).to_dense(d as usize).expect("within cap")
}

/// Single-qudit `Z` as a dense matrix.
pub fn z_matrix(d: u64) -> CMatrix {
    PauliProduct::single_z(0, 1, d).to_dense(d as usize).expect("within cap")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{equal_up_to_phase, DEFAULT_DENSE_CAP};
    use rand::{Rng, SeedableRng};

    fn random_pauli(rng: &mut impl Rng, n: usize, d: u64) -> PauliProduct {
        PauliProduct::new(
            rng.gen_range(0..d),
            (0..n).map(|_| rng.gen_range(0..d)).collect(),
            (0..n).map(|_| rng.gen_range(0..d)).collect(),
            d,
        )
        .unwrap()
    }

    #[test]
    fn canonical_order_product() {
        // X then Z on a qubit is already canonical: no phase.
        let x = PauliProduct::single_x(0, 1, 2);
        let z = PauliProduct::single_z(0, 1, 2);
        let xz = x.multiply(&z).unwrap();
        assert_eq!(xz.lambda(), 0);
        assert_eq!(xz.x(), &[1]);
        assert_eq!(xz.z(), &[1]);
    }

    #[test]
    fn reordering_picks_up_phase() {
        // Z X = w^{-1} X Z over D=3.
        let x = PauliProduct::single_x(0, 1, 3);
        let z = PauliProduct::single_z(0, 1, 3);
        let zx = z.multiply(&x).unwrap();
        assert_eq!(zx.lambda(), 2);
        let dense_zx = z_matrix(3) * x_matrix(3);
        assert!((zx.to_dense(16).unwrap() - dense_zx).iter().all(|e| e.norm() < 1e-12));
    }

    #[test]
    fn product_with_inverse_is_identity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let d = rng.gen_range(2..=6);
            let n = rng.gen_range(1..=4);
            let p = random_pauli(&mut rng, n, d);
            let prod = p.multiply(&p.inverse()).unwrap();
            assert_eq!(prod, PauliProduct::identity(n, d));
        }
    }

    #[test]
    fn commutation_phase_examples() {
        let x = PauliProduct::single_x(0, 1, 4);
        let z = PauliProduct::single_z(0, 1, 4);
        assert_eq!(x.commutation_phase(&z).unwrap(), 1);
        assert_eq!(z.commutation_phase(&z).unwrap(), 0);
    }

    #[test]
    fn commutation_antisymmetric_and_matches_dense() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let (n, d) = (2, 6);
            let p = random_pauli(&mut rng, n, d);
            let q = random_pauli(&mut rng, n, d);
            let mu = p.commutation_phase(&q).unwrap();
            let mu_rev = q.commutation_phase(&p).unwrap();
            assert_eq!((mu + mu_rev) % d, 0);
            let lhs = p.to_dense(64).unwrap() * q.to_dense(64).unwrap();
            let rhs = q.to_dense(64).unwrap() * p.to_dense(64).unwrap()
                * crate::dense::root_of_unity(d, mu as i64);
            assert!((lhs - rhs).iter().all(|e| e.norm() < 1e-12));
        }
    }

    #[test]
    fn commutation_bilinear() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for _ in 0..60 {
            let d = rng.gen_range(2..=6);
            let n = rng.gen_range(1..=3);
            let p = random_pauli(&mut rng, n, d);
            let p2 = random_pauli(&mut rng, n, d);
            let q = random_pauli(&mut rng, n, d);
            let lhs = p.multiply(&p2).unwrap().commutation_phase(&q).unwrap();
            let rhs =
                (p.commutation_phase(&q).unwrap() + p2.commutation_phase(&q).unwrap()) % d;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn base_and_size() {
        let p = PauliProduct::new(2, vec![2, 0, 0, 1], vec![0, 0, 0, 1], 3).unwrap();
        assert_eq!(p.size_and_base(), (2, vec![0, 3]));
        assert_eq!(PauliProduct::identity(4, 3).size(), 0);
        let full = PauliProduct::new(0, vec![1; 5], vec![1; 5], 3).unwrap();
        assert_eq!(full.size(), 5);
    }

    #[test]
    fn dense_single_qudit_forms() {
        let x2 = x_matrix(2);
        assert!((x2[(0, 1)] - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((x2[(1, 0)] - C64::new(1.0, 0.0)).norm() < 1e-15);
        let z3 = z_matrix(3);
        for j in 0..3 {
            assert!((z3[(j, j)] - dense::root_of_unity(3, j as i64)).norm() < 1e-15);
        }
    }

    #[test]
    fn dense_is_unitary() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let p = random_pauli(&mut rng, 2, 3);
            let m = p.to_dense(DEFAULT_DENSE_CAP).unwrap();
            assert!(crate::dense::is_unitary(&m, 1e-12));
        }
    }

    #[test]
    fn dense_cap_enforced() {
        let p = PauliProduct::identity(13, 2);
        assert!(matches!(p.to_dense(4096), Err(Error::DenseCap { .. })));
    }

    #[test]
    fn multiplication_homomorphism_exhaustive_small() {
        // All pairs of single-qudit generators for n <= 2, D <= 4, plus the
        // identity, checked against dense products.
        for d in 2u64..=4 {
            for n in 1..=2usize {
                let mut gens = vec![PauliProduct::identity(n, d)];
                for l in 0..n {
                    gens.push(PauliProduct::single_x(l, n, d));
                    gens.push(PauliProduct::single_z(l, n, d));
                }
                for p in &gens {
                    for q in &gens {
                        let r = p.multiply(q).unwrap();
                        let dense_r = p.to_dense(256).unwrap() * q.to_dense(256).unwrap();
                        assert!(
                            (r.to_dense(256).unwrap() - dense_r).iter().all(|e| e.norm() < 1e-12),
                            "homomorphism failed for {p} * {q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_homomorphism_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..60 {
            let d = rng.gen_range(2..=4);
            let n = rng.gen_range(1..=3);
            let p = random_pauli(&mut rng, n, d);
            let q = random_pauli(&mut rng, n, d);
            let r = p.multiply(&q).unwrap();
            let dense_r = p.to_dense(4096).unwrap() * q.to_dense(4096).unwrap();
            assert!((r.to_dense(4096).unwrap() - dense_r).iter().all(|e| e.norm() < 1e-12));
        }
    }

    #[test]
    fn order_divides_modulus() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10);
        for _ in 0..40 {
            let d = rng.gen_range(2..=6);
            let n = rng.gen_range(1..=3);
            let p = random_pauli(&mut rng, n, d);
            assert_eq!(p.pow(d), PauliProduct::identity(n, d));
        }
    }

    #[test]
    fn phase_equality_ignores_lambda() {
        let p = PauliProduct::new(1, vec![1, 0], vec![0, 1], 3).unwrap();
        let q = PauliProduct::new(2, vec![1, 0], vec![0, 1], 3).unwrap();
        assert!(p.same_up_to_phase(&q));
        assert_ne!(p, q);
        assert!(equal_up_to_phase(
            &p.to_dense(64).unwrap(),
            &q.to_dense(64).unwrap(),
            1e-10
        ));
    }
}
