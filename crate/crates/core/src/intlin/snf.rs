//! Smith normal form by unimodular row and column operations.
//!
//! Pivoting takes the nonzero entry of smallest absolute value in the active
//! submatrix, ties broken by lowest `(row, col)`. The output is a pure function
//! of the input matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `U · A · V = S` with `U`, `V` unimodular and `S` diagonal, `d₁ | d₂ | …`.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    u_inv: IntMatrix,
    v_inv: IntMatrix,
    diag: Vec<BigInt>,
}

impl SnfDecomposition {
    /// Nonzero diagonal entries `d₁ | … | d_r`, all positive.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.diag
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn u_inverse(&self) -> &IntMatrix {
        &self.u_inv
    }

    pub fn v_inverse(&self) -> &IntMatrix {
        &self.v_inv
    }
}

/// Diagonal form plus the left transform only; enough for cokernels.
#[derive(Clone, Debug)]
pub(crate) struct LeftSnf {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub diag: Vec<BigInt>,
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let mut t = Transforms::new(a.rows(), a.cols(), true, true);
    let (s, diag) = reduce(a.clone(), &mut t);
    SnfDecomposition {
        u: t.u.unwrap(),
        s,
        v: t.v.unwrap(),
        u_inv: t.u_inv.unwrap(),
        v_inv: t.v_inv.unwrap(),
        diag,
    }
}

pub(crate) fn left_snf(a: &IntMatrix) -> LeftSnf {
    let mut t = Transforms::new(a.rows(), a.cols(), true, false);
    let (_, diag) = reduce(a.clone(), &mut t);
    LeftSnf {
        u: t.u.unwrap(),
        u_inv: t.u_inv.unwrap(),
        diag,
    }
}

/// Invariant factors only.
pub(crate) fn diagonal_only(a: &IntMatrix) -> Vec<BigInt> {
    let mut t = Transforms::new(a.rows(), a.cols(), false, false);
    reduce(a.clone(), &mut t).1
}

struct Transforms {
    u: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl Transforms {
    fn new(rows: usize, cols: usize, left: bool, right: bool) -> Self {
        Transforms {
            u: left.then(|| IntMatrix::identity(rows)),
            u_inv: left.then(|| IntMatrix::identity(rows)),
            v: right.then(|| IntMatrix::identity(cols)),
            v_inv: right.then(|| IntMatrix::identity(cols)),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if let (Some(u), Some(ui)) = (&mut self.u, &mut self.u_inv) {
            u.swap_rows(a, b);
            ui.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if let (Some(v), Some(vi)) = (&mut self.v, &mut self.v_inv) {
            v.swap_cols(a, b);
            vi.swap_rows(a, b);
        }
    }

    /// row[dst] += q row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if let (Some(u), Some(ui)) = (&mut self.u, &mut self.u_inv) {
            u.add_row_multiple(dst, src, q, 0);
            ui.add_col_multiple(src, dst, &-q, 0);
        }
    }

    /// col[dst] += q col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if let (Some(v), Some(vi)) = (&mut self.v, &mut self.v_inv) {
            v.add_col_multiple(dst, src, q, 0);
            vi.add_row_multiple(src, dst, &-q, 0);
        }
    }

    fn negate_row(&mut self, i: usize) {
        if let (Some(u), Some(ui)) = (&mut self.u, &mut self.u_inv) {
            u.negate_row(i);
            ui.negate_col(i);
        }
    }
}

fn reduce(mut a: IntMatrix, tr: &mut Transforms) -> (IntMatrix, Vec<BigInt>) {
    let (m, n) = (a.rows(), a.cols());
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&a, t..m, t..n) else {
            break;
        };
        move_pivot(&mut a, tr, t, pi, pj);
        loop {
            clear_column(&mut a, tr, t);
            clear_row(&mut a, tr, t);
            let col_left = (t + 1..m).any(|i| !a[(i, t)].is_zero());
            let row_left = (t + 1..n).any(|j| !a[(t, j)].is_zero());
            if col_left || row_left {
                // remainders are smaller than the pivot; promote the smallest
                let cand = smallest_nonzero(&a, t..m, t..t + 1)
                    .into_iter()
                    .chain(smallest_nonzero(&a, t..t + 1, t..n))
                    .min_by(|x, y| {
                        a[*x].abs().cmp(&a[*y].abs()).then(x.cmp(y))
                    })
                    .unwrap();
                move_pivot(&mut a, tr, t, cand.0, cand.1);
                continue;
            }
            // pivot must divide the rest of the active block
            let bad = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)]))
            });
            match bad {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one, t);
                    tr.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            tr.negate_row(t);
        }
        diag.push(a[(t, t)].clone());
    }
    (a, diag)
}

fn smallest_nonzero(
    a: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            let better = match &best {
                None => true,
                Some((_, b)) => ax < *b,
            };
            if better {
                // a unit cannot be beaten, and row-major order settles ties
                if ax == BigInt::from(1) {
                    return Some((i, j));
                }
                best = Some(((i, j), ax));
            }
        }
    }
    best.map(|(p, _)| p)
}

fn move_pivot(a: &mut IntMatrix, tr: &mut Transforms, t: usize, i: usize, j: usize) {
    if i != t {
        a.swap_rows(t, i);
        tr.swap_rows(t, i);
    }
    if j != t {
        a.swap_cols(t, j);
        tr.swap_cols(t, j);
    }
}

/// `q` with `|x − q·p| ≤ |p| / 2`; balanced remainders slow coefficient growth.
fn nearest_quotient(x: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = x.div_mod_floor(p);
    if (&r + &r).abs() > p.abs() {
        q + 1
    } else {
        q
    }
}

fn clear_column(a: &mut IntMatrix, tr: &mut Transforms, t: usize) {
    for i in t + 1..a.rows() {
        if a[(i, t)].is_zero() {
            continue;
        }
        let q = nearest_quotient(&a[(i, t)], &a[(t, t)]);
        if q.is_zero() {
            continue;
        }
        let neg = -q;
        a.add_row_multiple(i, t, &neg, t);
        tr.add_row(i, t, &neg);
    }
}

fn clear_row(a: &mut IntMatrix, tr: &mut Transforms, t: usize) {
    for j in t + 1..a.cols() {
        if a[(t, j)].is_zero() {
            continue;
        }
        let q = nearest_quotient(&a[(t, j)], &a[(t, t)]);
        if q.is_zero() {
            continue;
        }
        let neg = -q;
        a.add_col_multiple(j, t, &neg, t);
        tr.add_col(j, t, &neg);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(a: &IntMatrix) -> SnfDecomposition {
        let d = smith_normal_form(a);
        assert_eq!(d.u.mul(a).mul(&d.v), d.s);
        assert_eq!(d.u.mul(&d.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(d.v.mul(&d.v_inv), IntMatrix::identity(a.cols()));
        d
    }

    #[test]
    fn two_by_two() {
        let a = IntMatrix::from_rows(&[[2, 4], [6, 8]]);
        let d = check(&a);
        assert_eq!(d.invariant_factors(), bi(&[2, 4]).as_slice());
        assert_eq!(d.s, IntMatrix::diagonal(2, 2, &bi(&[2, 4])));
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntMatrix::identity(4);
        let d = check(&a);
        assert_eq!(d.s, a);
        assert_eq!(d.u, a);
        assert_eq!(d.v, a);
    }

    #[test]
    fn zero_matrix() {
        let a = IntMatrix::zeros(3, 2);
        let d = check(&a);
        assert!(d.s.is_zero());
        assert_eq!(d.u, IntMatrix::identity(3));
        assert_eq!(d.v, IntMatrix::identity(2));
        assert_eq!(d.rank(), 0);
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let d = check(&IntMatrix::zeros(r, c));
            assert_eq!(d.rank(), 0);
        }
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) is not in normal form; expect diag(1, 6)
        let a = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        let d = check(&a);
        assert_eq!(d.invariant_factors(), bi(&[1, 6]).as_slice());
    }

    #[test]
    fn negative_pivots_made_positive() {
        let a = IntMatrix::from_rows(&[[-3, 0, 0], [0, -6, 0]]);
        let d = check(&a);
        assert_eq!(d.invariant_factors(), bi(&[3, 6]).as_slice());
    }

    #[test]
    fn left_only_matches_full() {
        let a = IntMatrix::from_rows(&[[4, 6, 2], [2, 2, 8], [1, 0, -3]]);
        let full = smith_normal_form(&a);
        let left = left_snf(&a);
        assert_eq!(left.diag, full.invariant_factors());
        assert_eq!(left.u, full.u);
        assert_eq!(diagonal_only(&a), full.invariant_factors());
    }
}
