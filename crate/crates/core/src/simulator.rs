//! Ideal state-vector simulation of the circuits the solver needs: the
//! hardware-efficient ansatz, state preparation, controlled operators, and
//! exact single-qubit Z expectations. No sampling, no noise.
//!
//! Bit ordering is big-endian throughout: qubit 0 selects the most
//! significant bit of an amplitude index.

use crate::error::{Error, Result};
use crate::pauli::{Axis, PauliString};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Hard cap on the register size (16 bytes per amplitude).
pub const MAX_QUBITS: usize = 24;

/// A pure state of `num_qubits` qubits as 2^m complex amplitudes.
///
/// Values are cheap to clone relative to circuit work and are never shared
/// mutably: each circuit evaluation owns its private copies.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0...0> on `m` qubits.
    pub fn zero(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyRegister);
        }
        if m > MAX_QUBITS {
            return Err(Error::QubitLimit {
                what: "state vector",
                got: m,
                limit: MAX_QUBITS,
            });
        }
        let mut amps = vec![Complex64::ZERO; 1 << m];
        amps[0] = Complex64::ONE;
        Ok(Self { num_qubits: m, amps })
    }

    /// Wrap raw amplitudes; the length must be a power of two >= 2.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() < 2 || !amps.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo(amps.len()));
        }
        let num_qubits = amps.len().trailing_zeros() as usize;
        Ok(Self { num_qubits, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    fn mask(&self, qubit: usize) -> Result<usize> {
        if qubit >= self.num_qubits {
            return Err(Error::QubitOutOfRange {
                index: qubit,
                num_qubits: self.num_qubits,
            });
        }
        Ok(1usize << (self.num_qubits - 1 - qubit))
    }

    /// <self|other> with conjugation on `self`.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::StateSizeMismatch(self.dim(), other.dim()));
        }
        Ok(self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Exact <Z_qubit> = sum_i |amp_i|^2 * (+1 if bit = 0 else -1).
    pub fn expectation_z(&self, qubit: usize) -> Result<f64> {
        let mask = self.mask(qubit)?;
        let mut acc = 0.0;
        for (i, a) in self.amps.iter().enumerate() {
            let p = a.norm_sqr();
            if i & mask == 0 {
                acc += p;
            } else {
                acc -= p;
            }
        }
        Ok(acc)
    }

    /// Apply one gate, controls first: amplitudes where any control bit is 0
    /// pass through unchanged.
    pub fn apply(&mut self, gate: &GateOp) -> Result<()> {
        gate.validate(self.num_qubits)?;
        let cmask = gate
            .controls
            .iter()
            .try_fold(0usize, |m, &q| self.mask(q).map(|b| m | b))?;
        match &gate.kind {
            GateKind::H => self.apply_1q(gate.targets[0], &H_MATRIX, cmask),
            GateKind::Ry(theta) => self.apply_1q(gate.targets[0], &ry_matrix(*theta), cmask),
            GateKind::Rz(theta) => self.apply_1q(gate.targets[0], &rz_matrix(*theta), cmask),
            GateKind::SDagger => self.apply_1q(gate.targets[0], &SDG_MATRIX, cmask),
            GateKind::Cnot => {
                // control qubit folded into the control mask
                let extra = self.mask(gate.targets[0])?;
                self.apply_1q(gate.targets[1], &X_MATRIX, cmask | extra)
            }
            GateKind::Cz => {
                let m0 = self.mask(gate.targets[0])?;
                let m1 = self.mask(gate.targets[1])?;
                let want = cmask | m0 | m1;
                for (i, a) in self.amps.iter_mut().enumerate() {
                    if i & want == want {
                        *a = -*a;
                    }
                }
                Ok(())
            }
            GateKind::Dense(u) => self.apply_dense(&gate.targets, u, cmask),
        }
    }

    fn apply_1q(&mut self, target: usize, m: &[Complex64; 4], cmask: usize) -> Result<()> {
        let tmask = self.mask(target)?;
        for i in 0..self.amps.len() {
            if i & tmask == 0 && i & cmask == cmask {
                let j = i | tmask;
                let (a, b) = (self.amps[i], self.amps[j]);
                self.amps[i] = m[0] * a + m[1] * b;
                self.amps[j] = m[2] * a + m[3] * b;
            }
        }
        Ok(())
    }

    /// General k-target dense unitary. Local index bit (k-1-t) corresponds to
    /// targets[t], matching the Kronecker convention |q_{t0} q_{t1} ...>.
    fn apply_dense(
        &mut self,
        targets: &[usize],
        u: &DMatrix<Complex64>,
        cmask: usize,
    ) -> Result<()> {
        let k = targets.len();
        let local_dim = 1usize << k;
        let tmasks = targets
            .iter()
            .map(|&q| self.mask(q))
            .collect::<Result<Vec<_>>>()?;
        // global offset of each local basis index
        let mut offsets = vec![0usize; local_dim];
        for (j, off) in offsets.iter_mut().enumerate() {
            for (t, &tm) in tmasks.iter().enumerate() {
                if j & (1 << (k - 1 - t)) != 0 {
                    *off |= tm;
                }
            }
        }
        let tunion: usize = tmasks.iter().fold(0, |m, &b| m | b);
        let mut local = vec![Complex64::ZERO; local_dim];
        for base in 0..self.amps.len() {
            if base & tunion != 0 || base & cmask != cmask {
                continue;
            }
            for (j, off) in offsets.iter().enumerate() {
                local[j] = self.amps[base | off];
            }
            for (r, off) in offsets.iter().enumerate() {
                let mut acc = Complex64::ZERO;
                for (c, v) in local.iter().enumerate() {
                    acc += u[(r, c)] * v;
                }
                self.amps[base | off] = acc;
            }
        }
        Ok(())
    }

    /// Apply a bare (uncontrolled) Pauli string to the lowest `p.len()`
    /// qubits. Used by the direct-expectation path that bypasses the ancilla.
    pub fn apply_pauli(&mut self, p: &PauliString) -> Result<()> {
        if p.len() > self.num_qubits {
            return Err(Error::PauliLengthMismatch(p.len(), self.num_qubits));
        }
        for (q, &axis) in p.axes().iter().enumerate() {
            let mask = self.mask(q)?;
            match axis {
                Axis::I => {}
                Axis::X => {
                    for i in 0..self.amps.len() {
                        if i & mask == 0 {
                            self.amps.swap(i, i | mask);
                        }
                    }
                }
                Axis::Y => {
                    for i in 0..self.amps.len() {
                        if i & mask == 0 {
                            let j = i | mask;
                            let (a, b) = (self.amps[i], self.amps[j]);
                            self.amps[i] = -Complex64::I * b;
                            self.amps[j] = Complex64::I * a;
                        }
                    }
                }
                Axis::Z => {
                    for (i, a) in self.amps.iter_mut().enumerate() {
                        if i & mask != 0 {
                            *a = -*a;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Extend an n-qubit system state with one |0> ancilla appended as the
    /// last (least significant) qubit.
    pub fn with_zero_ancilla(&self) -> Result<StateVector> {
        if self.num_qubits + 1 > MAX_QUBITS {
            return Err(Error::QubitLimit {
                what: "state vector",
                got: self.num_qubits + 1,
                limit: MAX_QUBITS,
            });
        }
        let mut amps = vec![Complex64::ZERO; self.amps.len() * 2];
        for (i, &a) in self.amps.iter().enumerate() {
            amps[i << 1] = a;
        }
        Ok(StateVector {
            num_qubits: self.num_qubits + 1,
            amps,
        })
    }
}

const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

const H_MATRIX: [Complex64; 4] = [
    Complex64::new(SQRT_HALF, 0.0),
    Complex64::new(SQRT_HALF, 0.0),
    Complex64::new(SQRT_HALF, 0.0),
    Complex64::new(-SQRT_HALF, 0.0),
];

const X_MATRIX: [Complex64; 4] = [
    Complex64::ZERO,
    Complex64::ONE,
    Complex64::ONE,
    Complex64::ZERO,
];

const SDG_MATRIX: [Complex64; 4] = [
    Complex64::ONE,
    Complex64::ZERO,
    Complex64::ZERO,
    Complex64::new(0.0, -1.0),
];

/// Ry(theta) = exp(-i theta Y / 2).
fn ry_matrix(theta: f64) -> [Complex64; 4] {
    let (s, c) = (theta / 2.0).sin_cos();
    [
        Complex64::new(c, 0.0),
        Complex64::new(-s, 0.0),
        Complex64::new(s, 0.0),
        Complex64::new(c, 0.0),
    ]
}

/// Rz(theta) = exp(-i theta Z / 2).
fn rz_matrix(theta: f64) -> [Complex64; 4] {
    let (s, c) = (theta / 2.0).sin_cos();
    [
        Complex64::new(c, -s),
        Complex64::ZERO,
        Complex64::ZERO,
        Complex64::new(c, s),
    ]
}

/// Gate kinds supported by the simulator.
#[derive(Debug, Clone)]
pub enum GateKind {
    H,
    Ry(f64),
    Rz(f64),
    SDagger,
    Cnot,
    Cz,
    Dense(DMatrix<Complex64>),
}

/// One gate application: a kind, its target qubits, and optional extra
/// control qubits (the gate acts only where every control bit is 1).
#[derive(Debug, Clone)]
pub struct GateOp {
    pub kind: GateKind,
    pub targets:  Vec<usize>,
    pub controls: Vec<usize>,
}

impl GateOp {
    pub fn h(q: usize) -> Self {
        Self::single(GateKind::H, q)
    }

    pub fn ry(q: usize, theta: f64) -> Self {
        Self::single(GateKind::Ry(theta), q)
    }

    pub fn rz(q: usize, theta: f64) -> Self {
        Self::single(GateKind::Rz(theta), q)
    }

    pub fn s_dagger(q: usize) -> Self {
        Self::single(GateKind::SDagger, q)
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        GateOp {
            kind: GateKind::Cnot,
            targets: vec![control, target],
            controls: Vec::new(),
        }
    }

    pub fn cz(a: usize, b: usize) -> Self {
        GateOp {
            kind: GateKind::Cz,
            targets: vec![a, b],
            controls: Vec::new(),
        }
    }

    /// Dense unitary on the given targets; checked unitary within 1e-10.
    pub fn dense(u: DMatrix<Complex64>, targets: Vec<usize>) -> Result<Self> {
        let expected = 1usize << targets.len();
        if u.nrows() != u.ncols() || u.nrows() != expected {
            return Err(Error::GateSizeMismatch {
                got: u.nrows(),
                expected,
                targets: targets.len(),
            });
        }
        let gram = u.adjoint() * &u;
        let dev = (gram - DMatrix::identity(expected, expected)).amax();
        if dev > 1e-10 {
            return Err(Error::NotUnitary(dev));
        }
        Ok(GateOp {
            kind: GateKind::Dense(u),
            targets,
            controls: Vec::new(),
        })
    }

    pub fn with_controls(mut self, controls: Vec<usize>) -> Self {
        self.controls = controls;
        self
    }

    fn single(kind: GateKind, q: usize) -> Self {
        GateOp {
            kind,
            targets: vec![q],
            controls: Vec::new(),
        }
    }

    fn validate(&self, num_qubits: usize) -> Result<()> {
        let mut seen = vec![false; num_qubits];
        for &q in self.targets.iter().chain(self.controls.iter()) {
            if q >= num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits,
                });
            }
            if seen[q] {
                return Err(Error::OverlappingQubits);
            }
            seen[q] = true;
        }
        Ok(())
    }
}

/// Choice of entangling layer in the hardware-efficient ansatz.
///
/// The default is a CNOT ring (n gates per layer, matching the per-layer
/// two-qubit count); a CZ ring is available as a switch. The CZ ring drops
/// the duplicate edge at n = 2, where i -> (i+1) mod n names the same pair
/// twice and the two CZ applications would cancel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntanglerKind {
    #[default]
    CnotRing,
    CzRing,
}

/// Shape of the hardware-efficient ansatz: `layers` repetitions of a
/// per-qubit [Ry, Rz, Ry] rotation block followed by an entangling ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnsatzSpec {
    pub num_qubits: usize,
    pub layers: usize,
    pub entangler: EntanglerKind,
}

impl AnsatzSpec {
    pub fn new(num_qubits: usize, layers: usize) -> Self {
        Self {
            num_qubits,
            layers,
            entangler: EntanglerKind::default(),
        }
    }

    pub fn with_entangler(mut self, entangler: EntanglerKind) -> Self {
        self.entangler = entangler;
        self
    }

    /// Exactly 3 * n * d trainable parameters.
    pub fn parameter_count(&self) -> usize {
        3 * self.num_qubits * self.layers
    }

    /// Parameter-to-gate mapping is layer-major, then qubit-major, with
    /// rotations in [Ry, Rz, Ry] order.
    pub fn gates(&self, params: &[f64], qubit_offset: usize) -> Result<Vec<GateOp>> {
        if params.len() != self.parameter_count() {
            return Err(Error::ParameterCountMismatch {
                got: params.len(),
                expected: self.parameter_count(),
            });
        }
        let n = self.num_qubits;
        let mut gates = Vec::with_capacity(self.layers * 4 * n);
        let mut idx = 0;
        for _ in 0..self.layers {
            for q in 0..n {
                let reg = qubit_offset + q;
                gates.push(GateOp::ry(reg, params[idx]));
                gates.push(GateOp::rz(reg, params[idx + 1]));
                gates.push(GateOp::ry(reg, params[idx + 2]));
                idx += 3;
            }
            if n >= 2 {
                match self.entangler {
                    EntanglerKind::CnotRing => {
                        for i in 0..n {
                            gates.push(GateOp::cnot(
                                qubit_offset + i,
                                qubit_offset + (i + 1) % n,
                            ));
                        }
                    }
                    EntanglerKind::CzRing => {
                        let mut edges: Vec<(usize, usize)> = (0..n)
                            .map(|i| {
                                let j = (i + 1) % n;
                                (i.min(j), i.max(j))
                            })
                            .collect();
                        edges.sort_unstable();
                        edges.dedup();
                        for (a, b) in edges {
                            gates.push(GateOp::cz(qubit_offset + a, qubit_offset + b));
                        }
                    }
                }
            }
        }
        Ok(gates)
    }
}

/// Apply the ansatz to the contiguous qubit block starting at `qubit_offset`.
pub fn apply_ansatz(
    state: &mut StateVector,
    spec: &AnsatzSpec,
    params: &[f64],
    qubit_offset: usize,
) -> Result<()> {
    for gate in spec.gates(params, qubit_offset)? {
        state.apply(&gate)?;
    }
    Ok(())
}

/// The right-hand-side state |b>: either the uniform superposition or an
/// explicit normalized amplitude vector.
#[derive(Debug, Clone)]
pub enum BVectorSpec {
    Uniform,
    Amplitudes(Vec<Complex64>),
}

impl BVectorSpec {
    /// Build from a real vector, recognizing the uniform case.
    pub fn from_rhs(rhs: &[f64]) -> Result<Self> {
        let norm = rhs.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        let first = rhs[0];
        if rhs.iter().all(|&x| (x - first).abs() < 1e-12) && first > 0.0 {
            return Ok(BVectorSpec::Uniform);
        }
        Ok(BVectorSpec::Amplitudes(
            rhs.iter().map(|&x| Complex64::new(x / norm, 0.0)).collect(),
        ))
    }

    /// The normalized amplitudes of |b> on `n` qubits.
    pub fn amplitudes(&self, n: usize) -> Result<Vec<Complex64>> {
        match self {
            BVectorSpec::Uniform => {
                let dim = 1usize << n;
                let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
                Ok(vec![a; dim])
            }
            BVectorSpec::Amplitudes(v) => {
                if v.len() != 1usize << n {
                    return Err(Error::StateSizeMismatch(v.len(), 1usize << n));
                }
                Ok(v.clone())
            }
        }
    }
}

/// Gates realizing U_b with U_b |0...0> = |b> on the qubit block starting at
/// `qubit_offset`. Uniform -> n Hadamards; explicit amplitudes -> a single
/// dense unitary whose first column is b (completed to a unitary).
pub fn state_prep_gates(
    b: &BVectorSpec,
    n: usize,
    qubit_offset: usize,
) -> Result<Vec<GateOp>> {
    match b {
        BVectorSpec::Uniform => Ok((0..n).map(|q| GateOp::h(qubit_offset + q)).collect()),
        BVectorSpec::Amplitudes(v) => {
            if v.len() != 1usize << n {
                return Err(Error::StateSizeMismatch(v.len(), 1usize << n));
            }
            let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            if (norm - 1.0).abs() > 1e-8 {
                return Err(Error::NotNormalized(norm));
            }
            let u = unitary_completion(v)?;
            let targets = (qubit_offset..qubit_offset + n).collect();
            Ok(vec![GateOp::dense(u, targets)?])
        }
    }
}

/// Complete a normalized column b to a full unitary by Gram-Schmidt against
/// the standard basis.
fn unitary_completion(b: &[Complex64]) -> Result<DMatrix<Complex64>> {
    let dim = b.len();
    let mut cols: Vec<Vec<Complex64>> = vec![b.to_vec()];
    for i in 0..dim {
        if cols.len() == dim {
            break;
        }
        let mut v = vec![Complex64::ZERO; dim];
        v[i] = Complex64::ONE;
        for col in &cols {
            let overlap: Complex64 = col.iter().zip(v.iter()).map(|(c, x)| c.conj() * x).sum();
            for (x, c) in v.iter_mut().zip(col.iter()) {
                *x -= overlap * c;
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            for x in v.iter_mut() {
                *x /= Complex64::new(norm, 0.0);
            }
            cols.push(v);
        }
    }
    if cols.len() != dim {
        return Err(Error::NotUnitary(1.0));
    }
    Ok(DMatrix::from_fn(dim, dim, |r, c| cols[c][r]))
}
