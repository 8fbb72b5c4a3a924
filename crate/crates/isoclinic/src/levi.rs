//! Levi subdiagrams: decoding a set of simple roots into irreducible factors,
//! spelling Bala–Carter labels, and computing the centralizer dimension of a
//! Levi-regular nilpotent from its characteristic grading.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use crate::root_data::{positive_roots, root_length_weights, Family, LieType};

/// Shape of one connected component of a subdiagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    /// One of `A`, `~A`, `B`, `C`, `D`, `E`, `F`, `G`.
    pub kind: &'static str,
    pub rank: usize,
    pub nodes: Vec<usize>,
}

impl Factor {
    fn order_key(&self) -> (std::cmp::Reverse<usize>, usize) {
        let k = ["E", "D", "F", "C", "B", "G", "A", "~A"]
            .iter()
            .position(|&x| x == self.kind)
            .expect("known kind");
        (std::cmp::Reverse(self.rank), k)
    }

    fn spelled(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }
}

/// Connected components of `j` (1-based simple nodes) with their types.
pub fn factors(t: &LieType, j: &BTreeSet<usize>) -> Vec<Factor> {
    let dia = t.affine_diagram();
    let a = &dia.cartan;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in j {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for nb in dia.neighbours(i) {
                if j.contains(&nb) && seen.insert(nb) {
                    comp.push(nb);
                    stack.push(nb);
                }
            }
        }
        comp.sort_unstable();
        out.push(classify(&comp, a, &dia.long));
    }
    out.sort_by_key(Factor::order_key);
    out
}

fn classify(comp: &[usize], a: &[Vec<i64>], long: &[bool]) -> Factor {
    let k = comp.len();
    let nodes = comp.to_vec();
    let bond = |x: usize, y: usize| a[x - 1][y - 1] * a[y - 1][x - 1];
    let mut max_bond = 0;
    let mut degree = vec![0usize; k];
    for (p, &x) in comp.iter().enumerate() {
        for &y in comp {
            if x != y && a[x - 1][y - 1] != 0 {
                degree[p] += 1;
                max_bond = max_bond.max(bond(x, y));
            }
        }
    }
    let n_long = comp.iter().filter(|&&x| long[x - 1]).count();
    let kind = match max_bond {
        3 => "G",
        2 if k == 4 && n_long == 2 => "F",
        2 if k == 2 || n_long + 1 == k => "B",
        2 => "C",
        _ => {
            if let Some(branch) = degree.iter().position(|&d| d >= 3) {
                let mut arms = arm_lengths(comp, comp[branch], a);
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => "D",
                    _ => "E",
                }
            } else if n_long == 0 && long.iter().any(|&l| !l) {
                "~A"
            } else {
                "A"
            }
        }
    };
    Factor { kind, rank: k, nodes }
}

fn arm_lengths(comp: &[usize], centre: usize, a: &[Vec<i64>]) -> Vec<usize> {
    let adjacent = |x: usize, y: usize| x != y && a[x - 1][y - 1] != 0;
    comp.iter()
        .filter(|&&y| adjacent(centre, y))
        .map(|&first| {
            let (mut prev, mut cur, mut len) = (centre, first, 1);
            loop {
                let next = comp.iter().copied().find(|&z| z != prev && adjacent(cur, z));
                match next {
                    Some(z) => {
                        prev = cur;
                        cur = z;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect()
}

/// Bala–Carter style spelling without E7 primes: `2A2+2A1`, `A2+~A1`, `0` for ∅.
pub fn base_label(t: &LieType, j: &BTreeSet<usize>) -> String {
    let fs = factors(t, j);
    if fs.is_empty() {
        return "0".to_string();
    }
    let mut pieces: Vec<(String, usize)> = Vec::new();
    for f in &fs {
        let s = f.spelled();
        match pieces.last_mut() {
            Some((last, count)) if *last == s => *count += 1,
            _ => pieces.push((s, 1)),
        }
    }
    pieces
        .into_iter()
        .map(|(s, c)| if c == 1 { s } else { format!("{}{}", c, s) })
        .collect::<Vec<_>>()
        .join("+")
}

/// Full label, resolving the E7 prime ambiguity: a subdiagram type whose
/// Levi-regular orbits split into two classes gets `′` for the class that
/// occurs inside the E6 subdiagram `{1,…,6}` and `″` otherwise.
pub fn label(t: &LieType, j: &BTreeSet<usize>) -> String {
    let base = base_label(t, j);
    if t.family() != Family::E7 {
        return base;
    }
    match e7_primed().get(&base) {
        Some(&inner_dim) => {
            let mark = if levi_centralizer_dim(t, j) == inner_dim { "'" } else { "''" };
            format!("({}){}", base, mark)
        }
        None => base,
    }
}

/// For each E7 subdiagram type with two classes: the centralizer dimension of the E6-contained class.
pub fn e7_primed() -> &'static BTreeMap<String, usize> {
    static CELL: OnceLock<BTreeMap<String, usize>> = OnceLock::new();
    CELL.get_or_init(|| {
        let t = LieType::exceptional(Family::E7);
        let mut dims: BTreeMap<String, BTreeSet<usize>> = BTreeMap::new();
        let mut inner: BTreeMap<String, usize> = BTreeMap::new();
        for mask in 0u32..(1 << 7) {
            let j: BTreeSet<usize> = (1..=7).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let base = base_label(&t, &j);
            let dim = levi_centralizer_dim(&t, &j);
            dims.entry(base.clone()).or_default().insert(dim);
            if !j.contains(&7) {
                inner.insert(base, dim);
            }
        }
        dims.into_iter()
            .filter(|(_, ds)| ds.len() > 1)
            .map(|(base, _)| {
                let d = inner[&base];
                (base, d)
            })
            .collect()
    })
}

/// dim C(e) for `e` regular nilpotent in the Levi with simple roots `j`:
/// with `h = 2ρ_L^∨` the characteristic, dim C(e) = dim 𝔤₀ + dim 𝔤₁.
pub fn levi_centralizer_dim(t: &LieType, j: &BTreeSet<usize>) -> usize {
    let cartan = t.cartan_matrix();
    let r = cartan.len();
    let w = root_length_weights(&cartan);
    // S_ij = d_i a_ij is twice the symmetric form on simple roots.
    let s: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|k| w[i] * cartan[i][k]).collect())
        .collect();
    let form = |x: &[i64], y: &[i64]| -> i64 {
        (0..r)
            .map(|i| (0..r).map(|k| x[i] * s[i][k] * y[k]).sum::<i64>())
            .sum()
    };
    let pos = positive_roots(&cartan);
    let levi: Vec<&Vec<i64>> = pos
        .iter()
        .filter(|b| (0..r).all(|i| b[i] == 0 || j.contains(&(i + 1))))
        .collect();
    let norms: Vec<i64> = levi.iter().map(|b| form(b, b)).collect();
    let h_value = |alpha: &[i64]| -> i64 {
        levi.iter()
            .zip(&norms)
            .map(|(b, nb)| {
                let num = 2 * form(alpha, b);
                debug_assert_eq!(num % nb, 0);
                num / nb
            })
            .sum()
    };
    let mut count = r;
    for alpha in &pos {
        let v = h_value(alpha);
        // α and −α contribute when their grading degree is 0 or 1.
        for deg in [v, -v] {
            if deg == 0 || deg == 1 {
                count += 1;
            }
        }
    }
    count
}
