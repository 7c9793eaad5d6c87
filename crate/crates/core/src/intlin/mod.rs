//! Exact integer linear algebra: Smith normal form, Diophantine solving,
//! cokernels and kernel lattices.

mod matrix;
mod snf;

pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SnfDecomposition};
pub(crate) use snf::{diagonal_only, left_snf};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Finitely generated abelian group `Z^free_rank ⊕ Z/d₁ ⊕ …` with `dᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Cokernel {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Some integer `x` with `A·x = b`, or `None` if no integer solution exists.
///
/// The witness is `V·y` where `y` solves the diagonal system, with every free
/// coordinate of `y` set to zero.
pub fn solve_linear(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    let snf = smith_normal_form(a);
    solve_with(&snf, b)
}

/// [`solve_linear`] against a precomputed decomposition of `A`.
pub fn solve_with(snf: &SnfDecomposition, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != snf.u.rows() {
        return Err(Error::domain(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            snf.u.rows()
        )));
    }
    let c = snf.u.mul_vec(b);
    let d = snf.invariant_factors();
    let mut y = vec![BigInt::zero(); snf.v.rows()];
    for (i, ci) in c.iter().enumerate() {
        match d.get(i) {
            Some(di) => {
                let (q, r) = ci.div_rem(di);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            }
            None if !ci.is_zero() => return Ok(None),
            None => {}
        }
    }
    Ok(Some(snf.v.mul_vec(&y)))
}

/// `Z^rows / im(A)`.
pub fn cokernel(a: &IntMatrix) -> Cokernel {
    let d = diagonal_only(a);
    Cokernel {
        free_rank: a.rows() - d.len(),
        torsion: d.into_iter().filter(|x| !x.is_one()).collect(),
    }
}

/// Columns spanning `ker(A)` as a lattice, taken from the right transform.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    snf.v.column_range(snf.rank(), a.cols())
}
