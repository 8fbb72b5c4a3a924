//! Exact linear algebra over ℚ: ranks, products and powers of small matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Dense matrix over ℚ.
#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Q>> = (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        rank_q(rows)
    }
}

/// Rank of a list of rational row vectors.
pub fn rank_q(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = &rows[r][c] / &pivot;
            for j in c..cols {
                let v = &rows[rank][j] * &f;
                rows[r][j] -= v;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of an integer matrix by fraction-free elimination with primitive rows.
/// Falls back to big integers on overflow.
pub fn rank_int(rows: &[Vec<i64>]) -> usize {
    match rank_i128(rows) {
        Some(r) => r,
        None => rank_big(rows),
    }
}

fn rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        // Prefer the sparsest row with a unit pivot to limit growth.
        let pick = (rank..m.len())
            .filter(|&r| m[r][c] != 0)
            .min_by_key(|&r| (m[r][c].abs() != 1, m[r].iter().filter(|&&x| x != 0).count()));
        let Some(p) = pick else { continue };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let piv_row = &head[rank];
        let a = piv_row[c];
        for row in tail.iter_mut() {
            let b = row[c];
            if b == 0 {
                continue;
            }
            let g = a.gcd(&b);
            let (fa, fb) = (a / g, b / g);
            let mut content = 0i128;
            for j in c..cols {
                let v = row[j].checked_mul(fa)?.checked_sub(piv_row[j].checked_mul(fb)?)?;
                row[j] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for x in row[c..].iter_mut() {
                    *x /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_big(rows: &[Vec<i64>]) -> usize {
    rank_q(
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect(),
    )
}

/// Basis of the column space's orthogonal data: row-reduced basis of the span of `vectors`.
pub fn row_reduce(mut rows: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for x in rows[rank].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][c].is_zero() {
                continue;
            }
            let f = rows[r][c].clone();
            for j in 0..cols {
                let v = &rows[rank][j] * &f;
                rows[r][j] -= v;
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Pivot column of each row of a reduced row echelon form.
pub fn pivots(rref: &[Vec<Q>]) -> Vec<usize> {
    rref.iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect()
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
/// Multiplicity of `j` is `rk N^{j−1} − 2 rk N^j + rk N^{j+1}`.
pub fn nilpotent_jordan_type(n: &QMatrix) -> Option<crate::partitions::Partition> {
    let size = n.rows();
    let mut ranks = vec![size];
    let mut power = QMatrix::identity(size);
    loop {
        power = power.mul(n);
        let r = power.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
        if ranks.len() > size + 1 {
            return None;
        }
    }
    ranks.push(0);
    let mut parts = Vec::new();
    for j in 1..ranks.len() - 1 {
        let mult = ranks[j - 1] + ranks[j + 1] - 2 * ranks[j];
        parts.extend(std::iter::repeat(j).take(mult));
    }
    Some(crate::partitions::Partition::new(parts))
}

/// Least common multiple of the denominators in a row; used to clear fractions.
pub fn clear_denominators(row: &[Q]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| (x * Q::from_integer(l.clone())).to_integer())
        .collect()
}

pub fn abs_max(row: &[Q]) -> Q {
    row.iter().map(|x| x.abs()).fold(Q::zero(), |a, b| if b > a { b } else { a })
}
