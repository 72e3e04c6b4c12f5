//! Variational quantum linear solver with an LCU/Pauli operator encoding,
//! an embedded ideal state-vector simulator, parallel strided execution of
//! the Hadamard-test circuit workload, and a bounded quasi-Newton optimizer.
//!
//! The crate solves A*x = b by preparing a candidate state |x(theta)> with a
//! hardware-efficient ansatz and minimizing the local cost
//!
//! ```text
//! C(theta) = 1/2 - Re(E) / (2 n Re(Psi))
//! E   = sum_j sum_{l,k} conj(c_l) c_k <x| A_l U_b Z_j U_b' A_k |x>
//! Psi = sum_{l,k} conj(c_l) c_k <x| A_l A_k |x>
//! ```
//!
//! where A = sum_l c_l A_l is the pruned Pauli decomposition of A and U_b
//! prepares |b>. Every expectation value is evaluated by a pair of
//! Hadamard-test circuits (real and imaginary parts), and the (n+1)*L^2
//! independent tasks of one evaluation are striped across a worker pool.

pub mod cost;
pub mod error;
pub mod estimator;
pub mod executor;
pub mod formats;
pub mod optimizer;
pub mod pauli;
pub mod problems;
pub mod simulator;
pub mod solver;

pub use error::{Error, Result};
pub use pauli::{decompose, Axis, LcuDecomposition, PauliString};
pub use simulator::{AnsatzSpec, BVectorSpec, EntanglerKind, GateOp, StateVector};
