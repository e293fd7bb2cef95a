//! Shared inputs for the benchmarks.

use altkit::catalog::{self, TnParams};
use altkit::{q, QAlgebra, Rational};

/// `A_k` with `a_ij = i + j / 2`.
pub fn ak(k: usize) -> QAlgebra {
    let blocks: Vec<[Rational; 2]> = (1..=k as i64).map(|i| [q(2 * i + 1, 2), q(2 * i + 2, 2)]).collect();
    catalog::ak(&blocks).expect("positive parameters")
}

/// A partially alternative Tn with irrational scaling (`a = 2`).
pub fn tn_mplus() -> TnParams {
    TnParams { a: q(2, 1), g: q(-2, 1), ..TnParams::zero() }
}

pub fn representatives() -> Vec<(String, QAlgebra)> {
    catalog::representatives()
}
