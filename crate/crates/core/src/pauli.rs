//! Pauli strings and the Pauli-basis (LCU) decomposition of dense matrices.
//!
//! An arbitrary 2^n x 2^n matrix expands as A = sum_l c_l A_l over the
//! 4^n Pauli strings A_l with c_l = tr(A_l * A) / 2^n. The decomposition
//! here uses a recursive 2x2 block transform rather than the brute-force
//! trace loop, so the full expansion costs O(4^n * n) instead of O(16^n).

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

/// Dense qubit count above which we refuse to materialize 2^n x 2^n matrices.
pub const DENSE_QUBIT_LIMIT: usize = 12;

/// Coefficients with magnitude at or below this are floating-point dust and
/// are dropped before any norm-based pruning.
pub const ZERO_CUTOFF: f64 = 1e-14;

/// Single-qubit Pauli axis. The derived ordering (I < X < Y < Z) is the
/// lexicographic order used for canonical term sorting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    I,
    X,
    Y,
    Z,
}

impl Axis {
    pub fn as_char(self) -> char {
        match self {
            Axis::I => 'I',
            Axis::X => 'X',
            Axis::Y => 'Y',
            Axis::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'I' => Ok(Axis::I),
            'X' => Ok(Axis::X),
            'Y' => Ok(Axis::Y),
            'Z' => Ok(Axis::Z),
            other => Err(Error::InvalidPauliAxis(other)),
        }
    }

    /// The 2x2 matrix of this axis.
    pub fn matrix(self) -> DMatrix<Complex64> {
        let z = Complex64::ZERO;
        let one = Complex64::ONE;
        let i = Complex64::I;
        let entries = match self {
            Axis::I => [one, z, z, one],
            Axis::X => [z, one, one, z],
            Axis::Y => [z, -i, i, z],
            Axis::Z => [one, z, z, -one],
        };
        DMatrix::from_row_slice(2, 2, &entries)
    }
}

/// An n-qubit tensor product of single-qubit Paulis. Qubit 0 is the leftmost
/// factor and selects the most significant bit of the matrix index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliString {
    axes: Vec<Axis>,
}

impl PauliString {
    pub fn new(axes: Vec<Axis>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::EmptyRegister);
        }
        Ok(Self { axes })
    }

    /// The identity string on `n` qubits.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(vec![Axis::I; n])
    }

    pub fn len(&self) -> usize {
        self.axes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn is_identity(&self) -> bool {
        self.axes.iter().all(|&a| a == Axis::I)
    }

    /// Decode a string from its index in the lexicographic enumeration of all
    /// 4^n strings (base-4 digits, most significant digit = qubit 0).
    fn from_index(index: usize, n: usize) -> Self {
        let mut axes = vec![Axis::I; n];
        let mut rem = index;
        for q in (0..n).rev() {
            axes[q] = match rem & 3 {
                0 => Axis::I,
                1 => Axis::X,
                2 => Axis::Y,
                _ => Axis::Z,
            };
            rem >>= 2;
        }
        Self { axes }
    }

    /// Dense matrix of the string as a Kronecker product, qubit 0 leftmost.
    pub fn matrix(&self) -> Result<DMatrix<Complex64>> {
        let n = self.len();
        if n > DENSE_QUBIT_LIMIT {
            return Err(Error::QubitLimit {
                what: "dense pauli matrix",
                got: n,
                limit: DENSE_QUBIT_LIMIT,
            });
        }
        let mut m = DMatrix::from_element(1, 1, Complex64::ONE);
        for axis in &self.axes {
            m = m.kronecker(&axis.matrix());
        }
        Ok(m)
    }

    /// Factor-wise product with phase accumulation: returns (phase, r) with
    /// phase * matrix(r) == matrix(self) * matrix(other) exactly.
    pub fn product(&self, other: &PauliString) -> Result<(Complex64, PauliString)> {
        if self.len() != other.len() {
            return Err(Error::PauliLengthMismatch(self.len(), other.len()));
        }
        // phase tracked as an exponent of i, mod 4
        let mut i_power: u8 = 0;
        let mut axes = Vec::with_capacity(self.len());
        for (&a, &b) in self.axes.iter().zip(other.axes.iter()) {
            let (k, r) = single_product(a, b);
            i_power = (i_power + k) % 4;
            axes.push(r);
        }
        let phase = match i_power {
            0 => Complex64::ONE,
            1 => Complex64::I,
            2 => -Complex64::ONE,
            _ => -Complex64::I,
        };
        Ok((phase, PauliString { axes }))
    }
}

/// Product of two single-qubit Paulis: a * b = i^k * r.
fn single_product(a: Axis, b: Axis) -> (u8, Axis) {
    use Axis::*;
    match (a, b) {
        (I, r) => (0, r),
        (l, I) => (0, l),
        (X, X) | (Y, Y) | (Z, Z) => (0, I),
        (X, Y) => (1, Z),
        (Y, X) => (3, Z),
        (Y, Z) => (1, X),
        (Z, Y) => (3, X),
        (Z, X) => (1, Y),
        (X, Z) => (3, Y),
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for axis in &self.axes {
            write!(f, "{}", axis.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let axes = s.chars().map(Axis::from_char).collect::<Result<Vec<_>>>()?;
        PauliString::new(axes)
    }
}

/// One term of a decomposition: a complex coefficient attached to a string.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coefficient: Complex64,
    pub operator: PauliString,
}

/// A pruned linear combination of Pauli strings representing A = sum c_l A_l.
///
/// Terms are sorted by descending |coefficient| with ties broken by
/// lexicographic axes order; `source_norm` is the l2-norm of the full,
/// unpruned coefficient vector and is carried through pruning unchanged.
#[derive(Debug, Clone)]
pub struct LcuDecomposition {
    num_qubits: usize,
    terms: Vec<Term>,
    source_norm: f64,
}

impl LcuDecomposition {
    /// Assemble a decomposition from raw terms, enforcing the ordering
    /// invariant. Zero coefficients are dropped.
    pub fn from_terms(num_qubits: usize, mut terms: Vec<Term>, source_norm: f64) -> Result<Self> {
        for t in &terms {
            if t.operator.len() != num_qubits {
                return Err(Error::PauliLengthMismatch(t.operator.len(), num_qubits));
            }
        }
        terms.retain(|t| t.coefficient.norm() > ZERO_CUTOFF);
        terms.sort_by(|a, b| {
            b.coefficient
                .norm()
                .partial_cmp(&a.coefficient.norm())
                .unwrap()
                .then_with(|| a.operator.cmp(&b.operator))
        });
        Ok(Self {
            num_qubits,
            terms,
            source_norm,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn source_norm(&self) -> f64 {
        self.source_norm
    }

    /// Retain exactly the terms with |c_l| >= epsilon * source_norm.
    /// The ordering invariant and `source_norm` are preserved.
    pub fn prune(&self, epsilon: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&epsilon) {
            return Err(Error::EpsilonOutOfRange(epsilon));
        }
        let threshold = epsilon * self.source_norm;
        let terms = self
            .terms
            .iter()
            .filter(|t| t.coefficient.norm() >= threshold)
            .cloned()
            .collect();
        Ok(Self {
            num_qubits: self.num_qubits,
            terms,
            source_norm: self.source_norm,
        })
    }

    /// Dense reconstruction sum c_l * matrix(A_l).
    pub fn reconstruct(&self) -> Result<DMatrix<Complex64>> {
        if self.num_qubits > DENSE_QUBIT_LIMIT {
            return Err(Error::QubitLimit {
                what: "dense reconstruction",
                got: self.num_qubits,
                limit: DENSE_QUBIT_LIMIT,
            });
        }
        let dim = 1usize << self.num_qubits;
        let mut out = DMatrix::from_element(dim, dim, Complex64::ZERO);
        for term in &self.terms {
            out += term.operator.matrix()? * term.coefficient;
        }
        Ok(out)
    }
}

/// Decompose a dense matrix into the Pauli basis.
///
/// Coefficients satisfy c_P = tr(matrix(P) * A) / 2^n; exact zeros (below
/// [`ZERO_CUTOFF`]) are omitted, and `source_norm` is recorded over the full
/// coefficient vector before the omission.
pub fn decompose(a: &DMatrix<Complex64>) -> Result<LcuDecomposition> {
    let (rows, cols) = a.shape();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    if rows < 2 || !rows.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(rows));
    }
    let n = rows.trailing_zeros() as usize;
    if n > DENSE_QUBIT_LIMIT {
        return Err(Error::QubitLimit {
            what: "pauli decomposition",
            got: n,
            limit: DENSE_QUBIT_LIMIT,
        });
    }

    let mut coeffs = Vec::with_capacity(1usize << (2 * n));
    block_transform(a.clone(), &mut coeffs);
    debug_assert_eq!(coeffs.len(), 1usize << (2 * n));

    let source_norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let terms = coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > ZERO_CUTOFF)
        .map(|(idx, c)| Term {
            coefficient: c,
            operator: PauliString::from_index(idx, n),
        })
        .collect();
    LcuDecomposition::from_terms(n, terms, source_norm)
}

/// Recursive quadrant transform. For A = [[A00, A01], [A10, A11]] the
/// leading factor's coefficient blocks are
///   I -> (A00 + A11)/2,  X -> (A01 + A10)/2,
///   Y -> i(A01 - A10)/2, Z -> (A00 - A11)/2,
/// and each combined block recurses on the remaining qubits. Appends the
/// 4^n coefficients in lexicographic (I, X, Y, Z) digit order.
fn block_transform(a: DMatrix<Complex64>, out: &mut Vec<Complex64>) {
    let dim = a.nrows();
    if dim == 1 {
        out.push(a[(0, 0)]);
        return;
    }
    let h = dim / 2;
    let a00 = a.view((0, 0), (h, h));
    let a01 = a.view((0, h), (h, h));
    let a10 = a.view((h, 0), (h, h));
    let a11 = a.view((h, h), (h, h));

    let half = Complex64::new(0.5, 0.0);
    let half_i = Complex64::new(0.0, 0.5);
    block_transform((a00 + a11) * half, out);
    block_transform((a01 + a10) * half, out);
    block_transform((a01 - a10) * half_i, out);
    block_transform((a00 - a11) * half, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
        let dim = 1usize << n;
        DMatrix::from_fn(dim, dim, |_, _| {
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    /// Brute-force trace oracle: c_P = tr(P * A) / 2^n over all 4^n strings.
    fn trace_coefficients(a: &DMatrix<Complex64>) -> Vec<(PauliString, Complex64)> {
        let n = a.nrows().trailing_zeros() as usize;
        let dim = a.nrows();
        (0..1usize << (2 * n))
            .map(|idx| {
                let p = PauliString::from_index(idx, n);
                let m = p.matrix().unwrap();
                let mut tr = Complex64::ZERO;
                for i in 0..dim {
                    for j in 0..dim {
                        tr += m[(i, j)] * a[(j, i)];
                    }
                }
                (p, tr / dim as f64)
            })
            .collect()
    }

    #[test]
    fn single_qubit_matrices() {
        let i = PauliString::from_str("I").unwrap().matrix().unwrap();
        assert_eq!(i[(0, 0)], c(1.0, 0.0));
        assert_eq!(i[(0, 1)], c(0.0, 0.0));
        assert_eq!(i[(1, 1)], c(1.0, 0.0));

        let x = PauliString::from_str("X").unwrap().matrix().unwrap();
        assert_eq!(x[(0, 1)], c(1.0, 0.0));
        assert_eq!(x[(1, 0)], c(1.0, 0.0));
        assert_eq!(x[(0, 0)], c(0.0, 0.0));
    }

    #[test]
    fn zx_matrix_entries() {
        // brute-force Kronecker of Z (x) X
        let zx = PauliString::from_str("ZX").unwrap().matrix().unwrap();
        let z = Axis::Z.matrix();
        let x = Axis::X.matrix();
        let expected = z.kronecker(&x);
        assert_eq!(zx, expected);
        assert_eq!(zx[(0, 1)], c(1.0, 0.0));
        assert_eq!(zx[(2, 3)], c(-1.0, 0.0));
    }

    #[test]
    fn dense_guard_rejected() {
        let p = PauliString::identity(13).unwrap();
        assert!(matches!(p.matrix(), Err(Error::QubitLimit { .. })));
    }

    #[test]
    fn product_self_inverse() {
        let x = PauliString::from_str("X").unwrap();
        let (phase, r) = x.product(&x).unwrap();
        assert_eq!(phase, Complex64::ONE);
        assert!(r.is_identity());
    }

    #[test]
    fn product_xy_is_iz() {
        let x = PauliString::from_str("X").unwrap();
        let y = PauliString::from_str("Y").unwrap();
        let (phase, r) = x.product(&y).unwrap();
        assert_eq!(phase, Complex64::I);
        assert_eq!(r.to_string(), "Z");
    }

    #[test]
    fn product_with_phase_accumulation() {
        let p = PauliString::from_str("ZX").unwrap();
        let q = PauliString::from_str("ZY").unwrap();
        let (phase, r) = p.product(&q).unwrap();
        assert_eq!(phase, Complex64::I);
        assert_eq!(r.to_string(), "IZ");
        // checked against the dense matrix product
        let dense = p.matrix().unwrap() * q.matrix().unwrap();
        let reconstructed = r.matrix().unwrap() * phase;
        assert!((dense - reconstructed).amax() < 1e-15);
    }

    #[test]
    fn product_length_mismatch() {
        let p = PauliString::from_str("ZX").unwrap();
        let q = PauliString::from_str("Z").unwrap();
        assert!(matches!(
            p.product(&q),
            Err(Error::PauliLengthMismatch(2, 1))
        ));
    }

    proptest! {
        #[test]
        fn product_matches_dense_matrices(seed in 0u64..200, n in 1usize..4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let idx_p = rng.random_range(0..1usize << (2 * n));
            let idx_q = rng.random_range(0..1usize << (2 * n));
            let p = PauliString::from_index(idx_p, n);
            let q = PauliString::from_index(idx_q, n);
            let (phase, r) = p.product(&q).unwrap();
            let dense = p.matrix().unwrap() * q.matrix().unwrap();
            let rec = r.matrix().unwrap() * phase;
            prop_assert!((dense - rec).amax() < 1e-15);
        }
    }

    #[test]
    fn decompose_identity() {
        let a = DMatrix::from_diagonal_element(4, 4, Complex64::ONE);
        let dec = decompose(&a).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.terms()[0].operator.to_string(), "II");
        assert_abs_diff_eq!(dec.terms()[0].coefficient.re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn decompose_tridiag_single_qubit() {
        let a = DMatrix::from_row_slice(
            2,
            2,
            &[c(2.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0), c(2.0, 0.0)],
        );
        let dec = decompose(&a).unwrap();
        let got: Vec<(String, f64)> = dec
            .terms()
            .iter()
            .map(|t| (t.operator.to_string(), t.coefficient.re))
            .collect();
        assert_eq!(got, vec![("I".into(), 2.0), ("X".into(), -1.0)]);
    }

    #[test]
    fn decompose_tridiag_two_qubits() {
        // brute-force trace formula over all 16 strings fixes the expectation
        let dim = 4;
        let mut a = DMatrix::from_element(dim, dim, Complex64::ZERO);
        for i in 0..dim {
            a[(i, i)] = c(2.0, 0.0);
            if i + 1 < dim {
                a[(i, i + 1)] = c(-1.0, 0.0);
                a[(i + 1, i)] = c(-1.0, 0.0);
            }
        }
        let dec = decompose(&a).unwrap();
        let got: Vec<(String, f64)> = dec
            .terms()
            .iter()
            .map(|t| (t.operator.to_string(), t.coefficient.re))
            .collect();
        assert_eq!(
            got,
            vec![
                ("II".into(), 2.0),
                ("IX".into(), -1.0),
                ("XX".into(), -0.5),
                ("YY".into(), -0.5),
            ]
        );
        for (p, expected) in trace_coefficients(&a) {
            let found = dec
                .terms()
                .iter()
                .find(|t| t.operator == p)
                .map(|t| t.coefficient)
                .unwrap_or(Complex64::ZERO);
            assert!((found - expected).norm() < 1e-12);
        }
    }

    #[test]
    fn decompose_rejects_bad_shapes() {
        let a = DMatrix::from_element(3, 3, Complex64::ZERO);
        assert!(matches!(decompose(&a), Err(Error::NotPowerOfTwo(3))));
        let a = DMatrix::from_element(2, 4, Complex64::ZERO);
        assert!(matches!(decompose(&a), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn coefficients_match_trace_oracle() {
        for n in 1..=3usize {
            let mut rng = ChaCha8Rng::seed_from_u64(7 + n as u64);
            let a = random_matrix(n, &mut rng);
            let dec = decompose(&a).unwrap();
            for (p, expected) in trace_coefficients(&a) {
                let found = dec
                    .terms()
                    .iter()
                    .find(|t| t.operator == p)
                    .map(|t| t.coefficient)
                    .unwrap_or(Complex64::ZERO);
                assert!(
                    (found - expected).norm() < 1e-12,
                    "n={n} {p}: {found} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn hermitian_input_gives_real_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_matrix(3, &mut rng);
        let herm = (&a + a.adjoint()) * Complex64::new(0.5, 0.0);
        let dec = decompose(&herm).unwrap();
        for t in dec.terms() {
            assert!(t.coefficient.im.abs() < 1e-12);
        }
    }

    #[test]
    fn reconstruct_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=3usize {
            let a = random_matrix(n, &mut rng);
            let rec = decompose(&a).unwrap().reconstruct().unwrap();
            assert!((a - rec).amax() < 1e-12);
        }
    }

    #[test]
    fn reconstruct_single_z() {
        let dec = LcuDecomposition::from_terms(
            1,
            vec![Term {
                coefficient: Complex64::ONE,
                operator: PauliString::from_str("Z").unwrap(),
            }],
            1.0,
        )
        .unwrap();
        let m = dec.reconstruct().unwrap();
        assert_eq!(m[(0, 0)], c(1.0, 0.0));
        assert_eq!(m[(1, 1)], c(-1.0, 0.0));
        assert_eq!(m[(0, 1)], c(0.0, 0.0));
    }

    #[test]
    fn prune_zero_epsilon_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_matrix(2, &mut rng);
        let dec = decompose(&a).unwrap();
        let pruned = dec.prune(0.0).unwrap();
        assert_eq!(pruned.len(), dec.len());
        assert_abs_diff_eq!(pruned.source_norm(), dec.source_norm());
    }

    #[test]
    fn prune_epsilon_out_of_range() {
        let a = DMatrix::from_diagonal_element(2, 2, Complex64::ONE);
        let dec = decompose(&a).unwrap();
        assert!(matches!(dec.prune(1.0), Err(Error::EpsilonOutOfRange(_))));
        assert!(matches!(dec.prune(-0.1), Err(Error::EpsilonOutOfRange(_))));
    }

    #[test]
    fn prune_loose_frobenius_bound() {
        // || A - reconstruct(prune(dec, eps)) ||_F <= eps * 2^(n/2) * source_norm,
        // both sides computed numerically
        let eps = 0.01;
        for n in 1..=3usize {
            let mut rng = ChaCha8Rng::seed_from_u64(20 + n as u64);
            let a = random_matrix(n, &mut rng);
            let dec = decompose(&a).unwrap();
            let pruned = dec.prune(eps).unwrap();
            let diff = &a - pruned.reconstruct().unwrap();
            let frob = diff.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            let bound = eps * 2f64.powf(n as f64 / 2.0) * dec.source_norm();
            assert!(frob <= bound, "n={n}: {frob} > {bound}");
        }
    }

    proptest! {
        // pruning monotonicity: eps1 <= eps2 implies terms(eps1) contains terms(eps2)
        #[test]
        fn pruning_monotone(seed in 0u64..64, e1 in 0.0f64..0.5, e2 in 0.0f64..0.5) {
            let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix(2, &mut rng);
            let dec = decompose(&a).unwrap();
            let big = dec.prune(lo).unwrap();
            let small = dec.prune(hi).unwrap();
            for t in small.terms() {
                prop_assert!(big.terms().iter().any(|u| u.operator == t.operator));
            }
        }

        // term count never exceeds 4^n
        #[test]
        fn term_count_cap(seed in 0u64..64, n in 1usize..4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix(n, &mut rng);
            let dec = decompose(&a).unwrap();
            prop_assert!(dec.len() <= 1usize << (2 * n));
        }
    }

    #[test]
    fn ordering_invariant_descending_with_lex_ties() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = random_matrix(3, &mut rng);
        let dec = decompose(&a).unwrap();
        for w in dec.terms().windows(2) {
            let (c0, c1) = (w[0].coefficient.norm(), w[1].coefficient.norm());
            assert!(c0 > c1 || (c0 == c1 && w[0].operator < w[1].operator));
        }
    }

    #[test]
    fn decompose_n10_is_fast_and_saturates_at_64_terms() {
        // 1024x1024 tridiagonal in well under the 10 s budget
        let dim = 1 << 10;
        let mut a = DMatrix::from_element(dim, dim, Complex64::ZERO);
        for i in 0..dim {
            a[(i, i)] = c(2.0, 0.0);
            if i + 1 < dim {
                a[(i, i + 1)] = c(-1.0, 0.0);
                a[(i + 1, i)] = c(-1.0, 0.0);
            }
        }
        let start = std::time::Instant::now();
        let dec = decompose(&a).unwrap();
        assert!(start.elapsed().as_secs_f64() < 10.0);
        assert_eq!(dec.prune(0.01).unwrap().len(), 64);
    }
}
