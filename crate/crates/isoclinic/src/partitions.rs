//! Integer partitions, dominance order, evenly distributed partitions and
//! the B/C/D parity classes with their collapses.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partitions have different totals ({0} vs {1})")]
    TotalMismatch(usize, usize),
    #[error("no partition of {n} with {r} parts other than the evenly distributed one")]
    NoTilde { n: usize, r: usize },
    #[error("the {r}-part partitions of {n} other than the evenly distributed one have no unique minimum")]
    TildeNotUnique { n: usize, r: usize },
    #[error("total {total} has the wrong parity for class {class:?}")]
    WrongParity { total: usize, class: ParityClass },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts descending and drops zero parts.
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `k` copies of the part `part`.
    pub fn rectangle(part: usize, k: usize) -> Self {
        Partition::new(vec![part; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    pub fn count_odd(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect::<Vec<_>>();
        Partition { parts }
    }

    /// Multiset union, written `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Appends `k` parts equal to 1.
    pub fn with_ones(&self, k: usize) -> Partition {
        self.union(&Partition::rectangle(1, k))
    }

    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Σ (λ′_i)², the dimension of the centralizer in `gl`.
    pub fn sum_sq_transpose(&self) -> usize {
        self.transpose().parts.iter().map(|c| c * c).sum()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Vec::<usize>::deserialize(d).map(Partition::new)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// `p ≼ q` in the dominance order.
pub fn dominance_le(p: &Partition, q: &Partition) -> Result<bool, PartitionError> {
    if p.total() != q.total() {
        return Err(PartitionError::TotalMismatch(p.total(), q.total()));
    }
    let (mut sp, mut sq) = (0, 0);
    for i in 0..p.len().max(q.len()) {
        sp += p.part(i);
        sq += q.part(i);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dominance for partitions known to share a total.
pub(crate) fn dom(p: &Partition, q: &Partition) -> bool {
    dominance_le(p, q).expect("partitions of equal total")
}

/// λ^{n,r}: the partition of `n` into at most `r` parts, as even as possible.
pub fn lambda_evenly(n: usize, r: usize) -> Partition {
    assert!(r > 0, "lambda_evenly needs r ≥ 1");
    let (k, extra) = (n / r, n % r);
    let mut parts = vec![k + 1; extra];
    parts.extend(std::iter::repeat(k).take(r - extra));
    Partition::new(parts)
}

/// λ̃^{n,r}: the dominance-minimum among `r`-part partitions of `n` other than λ^{n,r}.
pub fn lambda_tilde(n: usize, r: usize) -> Result<Partition, PartitionError> {
    if let Some(p) = lambda_tilde_closed_form(n, r) {
        return Ok(p);
    }
    lambda_tilde_brute(n, r)
}

/// Closed form `((k+1)^{d′+1}, k^{r−d′−2}, k−1)` for `n = kr + d′`, used when
/// `k ≥ 2` and `d′ ≤ 1`. For `2 ≤ d′ ≤ r − 2` there are two minimal candidates
/// and no λ̃ exists.
pub fn lambda_tilde_closed_form(n: usize, r: usize) -> Option<Partition> {
    if r < 2 {
        return None;
    }
    let (k, dp) = (n / r, n % r);
    if k < 2 || dp > 1 || dp + 2 > r {
        return None;
    }
    let mut parts = vec![k + 1; dp + 1];
    parts.extend(std::iter::repeat(k).take(r - dp - 2));
    parts.push(k - 1);
    Some(Partition::new(parts))
}

pub fn lambda_tilde_brute(n: usize, r: usize) -> Result<Partition, PartitionError> {
    if r == 0 || n <= r {
        return Err(PartitionError::NoTilde { n, r });
    }
    let flat = lambda_evenly(n, r);
    let others: Vec<Partition> = partitions_with_len(n, r)
        .into_iter()
        .filter(|p| *p != flat)
        .collect();
    if others.is_empty() {
        return Err(PartitionError::NoTilde { n, r });
    }
    others
        .iter()
        .find(|p| others.iter().all(|q| dom(p, q)))
        .cloned()
        .ok_or(PartitionError::TildeNotUnique { n, r })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityClass {
    B,
    C,
    D,
}

impl ParityClass {
    /// Parts with this parity must occur with even multiplicity.
    fn restricted_parity(self) -> usize {
        match self {
            ParityClass::B | ParityClass::D => 0,
            ParityClass::C => 1,
        }
    }

    fn total_is_legal(self, total: usize) -> bool {
        match self {
            ParityClass::B => total % 2 == 1,
            ParityClass::C | ParityClass::D => total % 2 == 0,
        }
    }
}

pub fn is_valid(p: &Partition, c: ParityClass) -> bool {
    c.total_is_legal(p.total()) && first_violation(p.parts(), c).is_none()
}

/// All parts even. Only meaningful for class D.
pub fn is_very_even(p: &Partition) -> bool {
    p.parts().iter().all(|&x| x % 2 == 0)
}

/// Largest part of the restricted parity with odd multiplicity.
fn first_violation(parts: &[usize], c: ParityClass) -> Option<usize> {
    let bad = c.restricted_parity();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let run = parts[i..].iter().take_while(|&&x| x == v).count();
        if v > 0 && v % 2 == bad && run % 2 == 1 {
            return Some(v);
        }
        i += run;
    }
    None
}

/// The largest `c`-valid partition dominated by `p`.
///
/// Repairs the largest offending part `q`: its last occurrence drops to
/// `q − 1` and the first later part below `q − 1` grows by one.
pub fn collapse(p: &Partition, c: ParityClass) -> Result<Partition, PartitionError> {
    if !c.total_is_legal(p.total()) {
        return Err(PartitionError::WrongParity { total: p.total(), class: c });
    }
    let mut parts = p.parts().to_vec();
    while let Some(q) = first_violation(&parts, c) {
        let last = parts.iter().rposition(|&x| x == q).expect("violating part is present");
        parts[last] -= 1;
        match parts[last + 1..].iter().position(|&x| x + 2 <= q) {
            Some(off) => parts[last + 1 + off] += 1,
            None => parts.push(1),
        }
        parts.retain(|&x| x > 0);
    }
    Ok(Partition::new(parts))
}

/// Exhaustive-search collapse: the dominance-maximum valid partition below `p`.
pub fn collapse_brute(p: &Partition, c: ParityClass) -> Option<Partition> {
    let below: Vec<Partition> = partitions_of(p.total())
        .into_iter()
        .filter(|q| is_valid(q, c) && dom(q, p))
        .collect();
    below.iter().find(|q| below.iter().all(|x| dom(x, q))).cloned()
}

/// Componentwise sum `(Σλ^j_1, Σλ^j_2, …)`.
pub fn sum_parts<'a>(ps: impl IntoIterator<Item = &'a Partition>) -> Partition {
    let mut acc: Vec<usize> = Vec::new();
    for p in ps {
        if acc.len() < p.len() {
            acc.resize(p.len(), 0);
        }
        for (a, x) in acc.iter_mut().zip(p.parts()) {
            *a += x;
        }
    }
    Partition::new(acc)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen(n, n, usize::MAX, &mut cur, &mut out);
    out
}

/// All partitions of `n` with at most `r` parts.
pub fn partitions_at_most(n: usize, r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen(n, n, r, &mut cur, &mut out);
    out
}

/// All partitions of `n` with exactly `r` parts.
pub fn partitions_with_len(n: usize, r: usize) -> Vec<Partition> {
    partitions_at_most(n, r)
        .into_iter()
        .filter(|p| p.len() == r)
        .collect()
}

fn gen(rest: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        gen(rest - p, p, slots.saturating_sub(1), cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[2, 2, 2]).transpose(), p(&[3, 3]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_le(&p(&[2, 2, 1]), &p(&[3, 1, 1])).unwrap());
        assert!(!dominance_le(&p(&[3, 1, 1]), &p(&[2, 2, 1])).unwrap());
        assert!(dominance_le(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert!(dominance_le(&p(&[2, 2]), &p(&[3])).is_err());
    }

    #[test]
    fn evenly_examples() {
        assert_eq!(lambda_evenly(5, 3), p(&[2, 2, 1]));
        assert_eq!(lambda_evenly(21, 5), p(&[5, 4, 4, 4, 4]));
        assert_eq!(lambda_evenly(7, 9), p(&[1; 7]));
        assert_eq!(lambda_evenly(0, 3), Partition::empty());
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(lambda_tilde(6, 2).unwrap(), p(&[4, 2]));
        assert_eq!(lambda_tilde(4, 2).unwrap(), p(&[3, 1]));
        assert_eq!(lambda_tilde(9, 3).unwrap(), p(&[4, 3, 2]));
        assert!(lambda_tilde(3, 3).is_err());
        assert!(lambda_tilde(4, 3).is_err());
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid(&p(&[2, 2, 1]), ParityClass::B));
        assert!(!is_valid(&p(&[3, 2, 1]), ParityClass::C));
        assert!(is_valid(&p(&[4, 4]), ParityClass::D) && is_very_even(&p(&[4, 4])));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(&p(&[4, 3, 2]), ParityClass::B).unwrap(), p(&[3, 3, 3]));
        assert_eq!(collapse(&p(&[3, 2, 1]), ParityClass::C).unwrap(), p(&[2, 2, 2]));
        assert_eq!(collapse(&p(&[2, 2, 1]), ParityClass::B).unwrap(), p(&[2, 2, 1]));
        assert!(collapse(&p(&[2, 2]), ParityClass::B).is_err());
    }

    #[test]
    fn sum_parts_examples() {
        assert_eq!(sum_parts(&[p(&[1, 1]), p(&[2, 1])]), p(&[3, 2]));
        assert_eq!(sum_parts(&[p(&[3])]), p(&[3]));
        assert_eq!(sum_parts(&[p(&[2, 2]), p(&[2, 2]), p(&[1])]), p(&[5, 4]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn evenly_is_minimal_with_bounded_length() {
        for n in 0..=14 {
            for r in 1..=n.max(1) {
                let even = lambda_evenly(n, r);
                assert!(even.len() <= r);
                for q in partitions_at_most(n, r) {
                    assert!(dom(&even, &q), "λ^({n},{r}) = {even} not below {q}");
                }
            }
        }
    }

    #[test]
    fn tilde_matches_characterization() {
        for n in 2..=16 {
            for r in 1..n {
                let t = lambda_tilde_brute(n, r);
                let (k, dp) = (n / r, n % r);
                if r == 1 || n == r + 1 {
                    assert_eq!(t, Err(PartitionError::NoTilde { n, r }));
                    continue;
                }
                if k >= 2 && dp >= 2 && dp + 2 <= r {
                    assert_eq!(t, Err(PartitionError::TildeNotUnique { n, r }));
                    continue;
                }
                let t = t.unwrap();
                assert_eq!(t.len(), r);
                assert_ne!(t, lambda_evenly(n, r));
                for q in partitions_with_len(n, r) {
                    if q != lambda_evenly(n, r) {
                        assert!(dom(&t, &q));
                    }
                }
                if let Some(fast) = lambda_tilde_closed_form(n, r) {
                    assert_eq!(fast, t, "closed form disagrees at ({n},{r})");
                }
            }
        }
    }

    #[test]
    fn collapse_matches_exhaustive_search() {
        for n in 0..=12 {
            for c in [ParityClass::B, ParityClass::C, ParityClass::D] {
                if !c.total_is_legal(n) {
                    continue;
                }
                for q in partitions_of(n) {
                    assert_eq!(Some(collapse(&q, c).unwrap()), collapse_brute(&q, c), "{q} {c:?}");
                }
            }
        }
    }

    fn arb_partition(max_n: usize) -> impl Strategy<Value = Partition> {
        (0..=max_n).prop_flat_map(|n| {
            let all = partitions_of(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn transpose_is_involution(q in arb_partition(16)) {
            prop_assert_eq!(q.transpose().transpose(), q);
        }

        #[test]
        fn dominance_is_antisymmetric_and_transitive(n in 1usize..=12, i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
            let all = partitions_of(n);
            let (a, b, c) = (&all[i % all.len()], &all[j % all.len()], &all[k % all.len()]);
            prop_assert!(dom(a, a));
            if dom(a, b) && dom(b, a) { prop_assert_eq!(a, b); }
            if dom(a, b) && dom(b, c) { prop_assert!(dom(a, c)); }
        }

        #[test]
        fn collapse_is_idempotent_and_monotone(n in 1usize..=14, i in 0usize..1000, j in 0usize..1000) {
            let all = partitions_of(n);
            let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
            for c in [ParityClass::B, ParityClass::C, ParityClass::D] {
                if !c.total_is_legal(n) { continue; }
                let ca = collapse(a, c).unwrap();
                prop_assert!(is_valid(&ca, c));
                prop_assert_eq!(collapse(&ca, c).unwrap(), ca.clone());
                if dom(a, b) {
                    prop_assert!(dom(&ca, &collapse(b, c).unwrap()));
                }
                if c == ParityClass::B {
                    prop_assert!(ca.len() <= a.len() + 1);
                }
            }
        }

        #[test]
        fn sum_parts_preserves_total(a in arb_partition(10), b in arb_partition(10)) {
            prop_assert_eq!(sum_parts([&a, &b]).total(), a.total() + b.total());
        }
    }
}
