//! Lattice models for the minimal reduction type.
//!
//! For an elliptic slope `d/m` the homogeneous element `ψ = c·t^{d/m}` acts on
//! the special fibre `Λ/tΛ` of a lattice in the skeleton. Its Jordan type is
//! the descriptor of the generic orbit, and minimizing over Lagrangians `L`
//! recovers the threshold orbit independently of the tables.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{nilpotent_jordan_type, pivots, q, rank_q, row_reduce, QMatrix, Q};
use crate::partitions::{dominance_le, Partition};
use crate::root_data::{Family, LieType, RootDataError, Slope};

#[derive(Debug, Error)]
pub enum SkeletonError {
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("{0} has no lattice model; only classical types are supported")]
    NotClassical(LieType),
    #[error("m = {m} is not elliptic for {ty}")]
    NotElliptic { ty: LieType, m: u64 },
}

/// The quadratic space `Q` carrying the Lagrangian datum.
///
/// Coordinates are the lines `e_1, …, e_ℓ` on which `ψ` acts by `c_j t^{d/m}`,
/// preceded in the odd case by one extra line killed by `ψ`.
#[derive(Debug, Clone)]
pub struct QuadSpace {
    pub extra_line: bool,
    pub ell: usize,
    pub form: Vec<Q>,
}

impl QuadSpace {
    pub fn dim(&self) -> usize {
        self.ell + usize::from(self.extra_line)
    }

    /// The eigenvalue `c_j` of each coordinate, with `0` on the extra line.
    pub fn scalars(&self) -> Vec<Q> {
        let shift = usize::from(self.extra_line);
        (0..self.dim())
            .map(|i| if i < shift { Q::zero() } else { q((i + 1 - shift) as i64) })
            .collect()
    }

    /// Form values `1/∏_{k≠j}(γ_j − γ_k)` with `γ_j = c_j^m`, so that the all-ones
    /// vector `x` satisfies `(x, γ^i x) = 0` for `i ≤ dim Q − 2`.
    pub fn seeded(extra_line: bool, ell: usize, m: u64) -> Self {
        let mut space = QuadSpace { extra_line, ell, form: Vec::new() };
        let gammas: Vec<Q> = space.scalars().iter().map(|c| pow(c, m)).collect();
        space.form = (0..gammas.len())
            .map(|j| {
                let prod = (0..gammas.len())
                    .filter(|&k| k != j)
                    .fold(Q::one(), |acc, k| acc * (&gammas[j] - &gammas[k]));
                Q::one() / prod
            })
            .collect();
        space
    }

    /// Alternating `+1, −1` form; it is split over the rationals.
    pub fn split(extra_line: bool, ell: usize) -> Self {
        let dim = ell + usize::from(extra_line);
        let form = (0..dim).map(|i| if i % 2 == 0 { q(1) } else { q(-1) }).collect();
        QuadSpace { extra_line, ell, form }
    }

    pub fn pairing(&self, a: &[Q], b: &[Q]) -> Q {
        a.iter().zip(b).zip(&self.form).fold(Q::zero(), |acc, ((x, y), f)| acc + x * y * f)
    }

    pub fn is_lagrangian(&self, basis: &[Vec<Q>]) -> bool {
        2 * basis.len() == self.dim()
            && rank_q(basis.to_vec()) == basis.len()
            && basis
                .iter()
                .all(|a| basis.iter().all(|b| self.pairing(a, b).is_zero()))
    }

    /// A random Lagrangian for the split form: the graph of a skew map between
    /// the two standard isotropic halves.
    pub fn random_lagrangian<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Vec<Q>> {
        let k = self.dim() / 2;
        let mut skew = vec![vec![0i64; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let v = rng.gen_range(-5..=5);
                skew[a][b] = v;
                skew[b][a] = -v;
            }
        }
        let half = Q::new(1.into(), 2.into());
        (0..k)
            .map(|a| {
                let mut v = vec![Q::zero(); self.dim()];
                v[2 * a] = q(1);
                v[2 * a + 1] = q(1);
                for (b, &s) in skew[a].iter().enumerate() {
                    v[2 * b] += q(s) * &half;
                    v[2 * b + 1] -= q(s) * &half;
                }
                v
            })
            .collect()
    }
}

fn pow(x: &Q, e: u64) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * x)
}

/// Projection onto `Q/L`, using the non-pivot coordinates of `L` in echelon form.
struct Quotient {
    rref: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl Quotient {
    fn new(basis: &[Vec<Q>], dim: usize) -> Self {
        let rref: Vec<Vec<Q>> =
            row_reduce(basis.to_vec()).into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
        let pivots = pivots(&rref);
        let free = (0..dim).filter(|i| !pivots.contains(i)).collect();
        Quotient { rref, pivots, free }
    }

    fn project(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (row, &p) in self.rref.iter().zip(&self.pivots) {
            let coef = v[p].clone();
            if !coef.is_zero() {
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &coef * r;
                }
            }
        }
        self.free.iter().map(|&i| v[i].clone()).collect()
    }
}

/// `ψ` on a graded quotient `Λ/tΛ`.
#[derive(Debug, Clone, Serialize)]
pub struct GradedModel {
    pub lie_type: LieType,
    pub m: u64,
    pub d: u64,
    /// `(degree, dimension)` in basis order; degree `−1` is `L`, `m − 1` is `Q/L`.
    pub pieces: Vec<(i64, usize)>,
    #[serde(skip)]
    pub lagrangian: Option<Vec<Vec<Q>>>,
    #[serde(skip)]
    pub operator: QMatrix,
    /// Trivial summands outside the model where `ψ` vanishes.
    pub fixed_ones: usize,
}

impl GradedModel {
    /// `copies` chains `u^0, …, u^{len−1}` with `ψ = c_j u^d`; types A and C.
    pub fn chains(t: LieType, s: Slope, len: usize, copies: usize) -> Self {
        let d = s.d() as usize;
        let size = len * copies;
        let mut op = QMatrix::zeros(size, size);
        for i in 0..len {
            for j in 0..copies {
                if i + d < len {
                    op.set((i + d) * copies + j, i * copies + j, q(j as i64 + 1));
                }
            }
        }
        GradedModel {
            lie_type: t,
            m: s.m(),
            d: s.d(),
            pieces: (0..len as i64).map(|i| (i, copies)).collect(),
            lagrangian: None,
            operator: op,
            fixed_ones: 0,
        }
    }

    /// The orthogonal model with pieces `L`, `u^i Q⁰` for `0 ≤ i ≤ m − 2`, and `Q/L`.
    pub fn orthogonal(t: LieType, s: Slope, space: &QuadSpace, l: Vec<Vec<Q>>, fixed_ones: usize) -> Self {
        let (m, d) = (s.m() as i64, s.d() as i64);
        let dim_q = space.dim();
        let ell = space.ell;
        let shift = usize::from(space.extra_line);
        let k = l.len();
        let quot = Quotient::new(&l, dim_q);
        let mid = (m - 1) as usize;
        let size = k + mid * ell + (dim_q - k);
        let offset = |deg: i64| -> usize {
            if deg < 0 {
                0
            } else {
                k + deg as usize * ell
            }
        };
        let c = space.scalars();
        let mut op = QMatrix::zeros(size, size);
        // Image of a Q⁰ vector `w` (already multiplied by c) landing in degree `deg`.
        let mut place = |col: usize, deg: i64, w: &[Q]| {
            if deg <= m - 2 {
                for (j, x) in w.iter().enumerate() {
                    if !x.is_zero() {
                        op.set(offset(deg) + j, col, x.clone());
                    }
                }
            } else if deg == m - 1 {
                let mut full = vec![Q::zero(); dim_q];
                full[shift..].clone_from_slice(w);
                for (j, x) in quot.project(&full).into_iter().enumerate() {
                    if !x.is_zero() {
                        op.set(offset(m - 1) + j, col, x);
                    }
                }
            }
        };
        for (col, b) in l.iter().enumerate() {
            let w: Vec<Q> = (shift..dim_q).map(|i| &b[i] * &c[i]).collect();
            place(col, d - 1, &w);
        }
        for deg in 0..m - 1 {
            for j in 0..ell {
                let mut w = vec![Q::zero(); ell];
                w[j] = c[shift + j].clone();
                place(offset(deg) + j, deg + d, &w);
            }
        }
        let mut pieces = vec![(-1, k)];
        pieces.extend((0..m - 1).map(|i| (i, ell)));
        pieces.push((m - 1, dim_q - k));
        GradedModel {
            lie_type: t,
            m: s.m(),
            d: s.d(),
            pieces,
            lagrangian: Some(l),
            operator: op,
            fixed_ones,
        }
    }

    pub fn dim(&self) -> usize {
        self.operator.rows() + self.fixed_ones
    }
}

/// Jordan type of `ψ` from the ranks of its powers, with the fixed trivial summands.
pub fn jordan_type(model: &GradedModel) -> Partition {
    let blocks = nilpotent_jordan_type(&model.operator).expect("ψ is nilpotent on Λ/tΛ");
    blocks.with_ones(model.fixed_ones)
}

/// Rank of `c = ψ^m/t` from `L` to `Q/L`.
pub fn c_rank(space: &QuadSpace, l: &[Vec<Q>], m: u64) -> usize {
    let quot = Quotient::new(l, space.dim());
    let gammas: Vec<Q> = space.scalars().iter().map(|c| pow(c, m)).collect();
    let images = l
        .iter()
        .map(|b| quot.project(&b.iter().zip(&gammas).map(|(x, g)| x * g).collect::<Vec<_>>()))
        .collect();
    rank_q(images)
}

/// `span(x, cx, …, c^{k−1}x)` for the all-ones `x` in the seeded space.
pub fn seed_lagrangian(space: &QuadSpace, m: u64) -> Vec<Vec<Q>> {
    let gammas: Vec<Q> = space.scalars().iter().map(|c| pow(c, m)).collect();
    let mut v = vec![Q::one(); space.dim()];
    let mut out = Vec::new();
    for _ in 0..space.dim() / 2 {
        out.push(v.clone());
        v = v.iter().zip(&gammas).map(|(x, g)| x * g).collect();
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleResult {
    pub lie_type: LieType,
    pub slope: Slope,
    pub partition: Partition,
    pub certified: bool,
    /// Rank of `c_L` for the chosen Lagrangian, when the model has one.
    pub s_rank: Option<usize>,
    pub samples: usize,
}

enum Shape {
    Chains { len: usize, copies: usize },
    Orthogonal { extra_line: bool, ell: usize, fixed_ones: usize },
}

fn shape(t: &LieType, s: Slope) -> Result<Shape, SkeletonError> {
    if !t.is_classical() {
        return Err(SkeletonError::NotClassical(*t));
    }
    let m = s.m();
    if !t.is_elliptic_regular(m)? {
        return Err(SkeletonError::NotElliptic { ty: *t, m });
    }
    let n = t.n();
    let mu = m as usize;
    Ok(match t.family() {
        Family::A => Shape::Chains { len: n, copies: 1 },
        Family::C => Shape::Chains { len: mu, copies: 2 * n / mu },
        Family::B => {
            let ell = 2 * n / mu;
            if ell % 2 == 0 {
                Shape::Orthogonal { extra_line: false, ell, fixed_ones: 1 }
            } else {
                Shape::Orthogonal { extra_line: true, ell, fixed_ones: 0 }
            }
        }
        _ => {
            if n % mu == 0 {
                Shape::Orthogonal { extra_line: false, ell: 2 * n / mu, fixed_ones: 0 }
            } else {
                Shape::Orthogonal { extra_line: true, ell: (2 * n - 2) / mu, fixed_ones: 1 }
            }
        }
    })
}

fn check_block_bounds(model: &GradedModel, blocks: &Partition) {
    let (m, d) = (model.m as usize, model.d as usize);
    let lo = (m - 1) / d;
    let hi = (m + 1).div_ceil(d);
    let inside = blocks.parts().iter().all(|&p| lo <= p && p <= hi);
    assert!(inside, "{} at {}/{}: blocks {} outside [{}, {}]", model.lie_type, d, m, blocks, lo, hi);
}

fn orthogonal_type(model: &GradedModel) -> Partition {
    let blocks = nilpotent_jordan_type(&model.operator).expect("ψ is nilpotent on Λ/tΛ");
    check_block_bounds(model, &blocks);
    blocks.with_ones(model.fixed_ones)
}

fn lower(a: Partition, b: Partition) -> Partition {
    if dominance_le(&b, &a).unwrap_or(false) {
        b
    } else {
        a
    }
}

/// Minimal Jordan type of `ψ` over the skeleton.
///
/// Types A and C have a single lattice. For B and D with `d > 1` three random
/// Lagrangians are compared; for `d = 1` the seeded Lagrangian is tried first
/// and random ones follow until `c_L` has rank one or the budget runs out.
pub fn minimal_jordan_type(t: &LieType, s: Slope, budget: usize, seed: u64) -> Result<OracleResult, SkeletonError> {
    let result = |partition, certified, s_rank, samples| OracleResult {
        lie_type: *t,
        slope: s,
        partition,
        certified,
        s_rank,
        samples,
    };
    let (extra_line, ell, fixed_ones) = match shape(t, s)? {
        Shape::Chains { len, copies } => {
            let model = GradedModel::chains(*t, s, len, copies);
            return Ok(result(jordan_type(&model), true, None, 0));
        }
        Shape::Orthogonal { extra_line, ell, fixed_ones } => (extra_line, ell, fixed_ones),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let split = QuadSpace::split(extra_line, ell);
    let m = s.m();

    if s.d() > 1 {
        let mut best: Option<Partition> = None;
        let mut agree = true;
        let mut s_rank = None;
        for _ in 0..3 {
            let l = split.random_lagrangian(&mut rng);
            s_rank.get_or_insert_with(|| c_rank(&split, &l, m));
            let p = orthogonal_type(&GradedModel::orthogonal(*t, s, &split, l, fixed_ones));
            best = Some(match best {
                None => p,
                Some(b) => {
                    agree &= b == p;
                    lower(b, p)
                }
            });
        }
        return Ok(result(best.expect("three samples"), agree, s_rank, 3));
    }

    let seeded = QuadSpace::seeded(extra_line, ell, m);
    let l = seed_lagrangian(&seeded, m);
    debug_assert!(seeded.is_lagrangian(&l));
    let rank = c_rank(&seeded, &l, m);
    let mut best = orthogonal_type(&GradedModel::orthogonal(*t, s, &seeded, l, fixed_ones));
    if rank == 1 {
        return Ok(result(best, true, Some(1), 1));
    }
    let mut best_rank = rank;
    let mut samples = 1;
    while samples < budget && best_rank > 1 {
        let l = split.random_lagrangian(&mut rng);
        let r = c_rank(&split, &l, m);
        let p = orthogonal_type(&GradedModel::orthogonal(*t, s, &split, l, fixed_ones));
        best = lower(best, p);
        best_rank = best_rank.min(r);
        samples += 1;
    }
    Ok(result(best, best_rank == 1, Some(best_rank), samples))
}
