//! Nilpotent and adjoint orbits: validity, centralizer dimensions (closed form
//! and a matrix-kernel oracle), Lusztig–Spaltenstein induction and closure order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::Rng;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::exceptional;
use crate::linalg::rank_int;
use crate::partitions::{collapse, dom, is_valid, is_very_even, sum_parts, ParityClass, Partition};
use crate::root_data::{Family, LieType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("{partition} is not a nilpotent orbit of {ty}")]
    InvalidPartition { ty: LieType, partition: Partition },
    #[error("{ty} is exceptional; a Bala–Carter label is required")]
    NeedsLabel { ty: LieType },
    #[error("{ty} is classical; a partition is required")]
    NeedsPartition { ty: LieType },
    #[error("very even partition {0} needs a label I or II")]
    MissingVeryEvenLabel(Partition),
    #[error("label I/II only applies to very even partitions in type D")]
    UnexpectedVeryEvenLabel,
    #[error("no data for orbit `{label}` in {ty}")]
    UnknownLabel { ty: LieType, label: String },
    #[error("orbits live in different types ({0} vs {1})")]
    TypeMismatch(LieType, LieType),
    #[error("closure order for {0} needs Hasse data")]
    UnsupportedComparison(LieType),
    #[error("{0} is not classical")]
    NotClassical(LieType),
    #[error("invalid adjoint orbit: {0}")]
    BadAdjoint(String),
    #[error("invalid Hasse data: {0}")]
    BadHasse(String),
    #[error("total {total} exceeds the oracle bound {bound}")]
    OracleBound { total: usize, bound: usize },
}

/// Which of the two orbits with a given very even partition in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VeryEven {
    I,
    II,
}

impl FromStr for VeryEven {
    type Err = OrbitError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "I" | "1" => Ok(VeryEven::I),
            "II" | "2" => Ok(VeryEven::II),
            _ => Err(OrbitError::UnexpectedVeryEvenLabel),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Descriptor {
    /// `very_even` is `None` for a very even partition only when the orbit came
    /// out of an induction that cannot tell the two classes apart.
    Partition { partition: Partition, very_even: Option<VeryEven> },
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NilpotentOrbit {
    ty: LieType,
    descriptor: Descriptor,
}

fn check_partition(ty: LieType, p: &Partition) -> Result<(), OrbitError> {
    let dim = ty.natural_dim().ok_or(OrbitError::NeedsLabel { ty })?;
    let ok = p.total() == dim && ty.parity_class().map_or(true, |c| is_valid(p, c));
    if ok {
        Ok(())
    } else {
        Err(OrbitError::InvalidPartition { ty, partition: p.clone() })
    }
}

fn needs_very_even_label(ty: LieType, p: &Partition) -> bool {
    ty.family() == Family::D && is_very_even(p)
}

impl NilpotentOrbit {
    /// A classical orbit from its Jordan type. Very even type-D partitions need
    /// [`NilpotentOrbit::very_even`].
    pub fn classical(ty: LieType, partition: Partition) -> Result<Self, OrbitError> {
        check_partition(ty, &partition)?;
        if needs_very_even_label(ty, &partition) {
            return Err(OrbitError::MissingVeryEvenLabel(partition));
        }
        Ok(NilpotentOrbit { ty, descriptor: Descriptor::Partition { partition, very_even: None } })
    }

    pub fn very_even(ty: LieType, partition: Partition, label: VeryEven) -> Result<Self, OrbitError> {
        check_partition(ty, &partition)?;
        if !needs_very_even_label(ty, &partition) {
            return Err(OrbitError::UnexpectedVeryEvenLabel);
        }
        Ok(NilpotentOrbit { ty, descriptor: Descriptor::Partition { partition, very_even: Some(label) } })
    }

    /// Classical orbit with the very even label left open.
    pub(crate) fn unlabelled(ty: LieType, partition: Partition) -> Self {
        debug_assert!(check_partition(ty, &partition).is_ok());
        NilpotentOrbit { ty, descriptor: Descriptor::Partition { partition, very_even: None } }
    }

    /// An exceptional orbit by Bala–Carter label; the label must have embedded data.
    pub fn exceptional(ty: LieType, label: &str) -> Result<Self, OrbitError> {
        if ty.is_classical() {
            return Err(OrbitError::NeedsPartition { ty });
        }
        let label = exceptional::normalize_label(label);
        if exceptional::dim_centralizer(ty.family(), &label).is_none() {
            return Err(OrbitError::UnknownLabel { ty, label });
        }
        Ok(NilpotentOrbit { ty, descriptor: Descriptor::Label(label) })
    }

    /// Exceptional orbit whose label is only checked for syntax; used with user Hasse data.
    pub fn labelled_unchecked(ty: LieType, label: &str) -> Self {
        NilpotentOrbit { ty, descriptor: Descriptor::Label(exceptional::normalize_label(label)) }
    }

    pub fn zero(ty: LieType) -> Self {
        match ty.natural_dim() {
            Some(n) => NilpotentOrbit::unlabelled(ty, Partition::new(vec![1; n])),
            None => NilpotentOrbit { ty, descriptor: Descriptor::Label("0".into()) },
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn partition(&self) -> Option<&Partition> {
        match &self.descriptor {
            Descriptor::Partition { partition, .. } => Some(partition),
            Descriptor::Label(_) => None,
        }
    }

    pub fn label(&self) -> Option<&str> {
        match &self.descriptor {
            Descriptor::Label(l) => Some(l),
            Descriptor::Partition { .. } => None,
        }
    }

    pub fn very_even_label(&self) -> Option<VeryEven> {
        match &self.descriptor {
            Descriptor::Partition { very_even, .. } => *very_even,
            Descriptor::Label(_) => None,
        }
    }

    /// A very even type-D partition whose class is not known.
    pub fn is_unresolved_very_even(&self) -> bool {
        match &self.descriptor {
            Descriptor::Partition { partition, very_even } => {
                very_even.is_none() && needs_very_even_label(self.ty, partition)
            }
            Descriptor::Label(_) => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.descriptor {
            Descriptor::Partition { partition, .. } => partition.parts().iter().all(|&x| x == 1),
            Descriptor::Label(l) => l == "0",
        }
    }
}

impl fmt::Display for NilpotentOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.descriptor {
            Descriptor::Partition { partition, very_even } => {
                write!(f, "{}", partition)?;
                if let Some(v) = very_even {
                    write!(f, "{:?}", v)?;
                }
                Ok(())
            }
            Descriptor::Label(l) => f.write_str(l),
        }
    }
}

/// Partitions serialize as arrays, labels as strings, labelled very even
/// partitions as `{"partition":[…],"very_even":"I"}`.
impl Serialize for NilpotentOrbit {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Labelled<'a> {
            partition: &'a Partition,
            very_even: VeryEven,
        }
        match &self.descriptor {
            Descriptor::Partition { partition, very_even: None } => partition.serialize(s),
            Descriptor::Partition { partition, very_even: Some(v) } => {
                Labelled { partition, very_even: *v }.serialize(s)
            }
            Descriptor::Label(l) => s.serialize_str(l),
        }
    }
}

/// dim C(𝒪) from the transpose partition, or the embedded table.
pub fn dim_centralizer(o: &NilpotentOrbit) -> Result<usize, OrbitError> {
    match &o.descriptor {
        Descriptor::Partition { partition, .. } => {
            let sq = partition.sum_sq_transpose();
            let odd = partition.count_odd();
            Ok(match o.ty.family() {
                Family::A => sq - 1,
                Family::C => (sq + odd) / 2,
                _ => (sq - odd) / 2,
            })
        }
        Descriptor::Label(l) => exceptional::dim_centralizer(o.ty.family(), l)
            .ok_or_else(|| OrbitError::UnknownLabel { ty: o.ty, label: l.clone() }),
    }
}

pub const ORACLE_BOUND: usize = 14;

/// Basis vectors of Jordan chains: `e` sends chain position `i` to `i + 1`.
struct Chains {
    /// `(start index, length)` per block.
    blocks: Vec<(usize, usize)>,
    size: usize,
}

impl Chains {
    fn new(p: &Partition) -> Self {
        let mut blocks = Vec::new();
        let mut at = 0;
        for &k in p.parts() {
            blocks.push((at, k));
            at += k;
        }
        Chains { blocks, size: at }
    }

    fn nilpotent(&self) -> Vec<Vec<i64>> {
        let mut e = vec![vec![0i64; self.size]; self.size];
        for &(s, k) in &self.blocks {
            for i in 0..k.saturating_sub(1) {
                e[s + i + 1][s + i] = 1;
            }
        }
        e
    }

    /// Gram matrix of a form making `e` skew: symmetric (`sign = 1`) or alternating (`sign = −1`).
    /// Blocks whose own parity fits are self-paired; the rest are paired with an equal block.
    fn form(&self, sign: i64) -> Vec<Vec<i64>> {
        let n = self.size;
        let mut g = vec![vec![0i64; n]; n];
        let self_paired = |k: usize| if sign == 1 { k % 2 == 1 } else { k % 2 == 0 };
        let mut pending: BTreeMap<usize, usize> = BTreeMap::new();
        for &(s, k) in &self.blocks {
            if self_paired(k) {
                for i in 0..k {
                    g[s + i][s + k - 1 - i] = if i % 2 == 0 { 1 } else { -1 };
                }
            } else if let Some(w) = pending.remove(&k) {
                for i in 0..k {
                    let v = if i % 2 == 0 { 1 } else { -1 };
                    g[w + i][s + k - 1 - i] = v;
                    g[s + k - 1 - i][w + i] = sign * v;
                }
            } else {
                pending.insert(k, s);
            }
        }
        assert!(pending.is_empty(), "unpaired Jordan block");
        g
    }
}

/// dim C(e) computed as the kernel of `X ↦ [X, e]` on the matrix Lie algebra.
///
/// For B/C/D the algebra is `{G⁻¹S}` with `S` alternating (orthogonal) or
/// symmetric (symplectic); since `Gᵉ = −eᵀG`, the centralizer condition becomes
/// `S e + eᵀ S = 0`, free of `G⁻¹`.
pub fn dim_centralizer_oracle(o: &NilpotentOrbit) -> Result<usize, OrbitError> {
    dim_centralizer_oracle_bounded(o, ORACLE_BOUND)
}

pub fn dim_centralizer_oracle_bounded(o: &NilpotentOrbit, bound: usize) -> Result<usize, OrbitError> {
    let p = o.partition().ok_or(OrbitError::NotClassical(o.ty))?;
    if p.total() > bound {
        return Err(OrbitError::OracleBound { total: p.total(), bound });
    }
    let chains = Chains::new(p);
    let e = chains.nilpotent();
    let n = chains.size;
    let idx = |i: usize, j: usize| i * n + j;
    if o.ty.family() == Family::A {
        // Unknowns X (n²); rows: entries of Xe − eX, then the trace.
        let mut rows = Vec::with_capacity(n * n + 1);
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![0i64; n * n];
                for k in 0..n {
                    row[idx(i, k)] += e[k][j];
                    row[idx(k, j)] -= e[i][k];
                }
                rows.push(row);
            }
        }
        rows.push((0..n * n).map(|k| i64::from(k / n == k % n)).collect());
        return Ok(n * n - rank_int(&rows));
    }
    let symmetric = o.ty.family() == Family::C;
    // Basis of S: E_ij ± E_ji.
    let basis: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| symmetric || i < j)
        .collect();
    let s_of = |(i, j): (usize, usize)| {
        let mut s = vec![vec![0i64; n]; n];
        s[i][j] += 1;
        if symmetric {
            if i != j {
                s[j][i] += 1;
            }
        } else {
            s[j][i] -= 1;
        }
        s
    };
    // Column per basis element: entries of S e + eᵀ S.
    let cols: Vec<Vec<i64>> = basis
        .iter()
        .map(|&b| {
            let s = s_of(b);
            let mut out = Vec::with_capacity(n * n);
            for r in 0..n {
                for c in 0..n {
                    let v: i64 = (0..n).map(|k| s[r][k] * e[k][c] + e[k][r] * s[k][c]).sum();
                    out.push(v);
                }
            }
            out
        })
        .collect();
    Ok(basis.len() - rank_int(&cols))
}

/// `e` is skew for the form built alongside it; exposed for tests.
pub fn oracle_form_is_invariant(p: &Partition, c: ParityClass) -> bool {
    let chains = Chains::new(p);
    let e = chains.nilpotent();
    let g = chains.form(if c == ParityClass::C { -1 } else { 1 });
    let n = chains.size;
    (0..n).all(|i| {
        (0..n).all(|j| {
            let eg: i64 = (0..n).map(|k| e[k][i] * g[k][j]).sum();
            let ge: i64 = (0..n).map(|k| g[i][k] * e[k][j]).sum();
            eg + ge == 0 && g[i][j] == if c == ParityClass::C { -g[j][i] } else { g[j][i] }
        })
    }) && crate::linalg::rank_int(&g) == n
}

/// One class of nonzero eigenvalues: `eig` names the value (or the pair ±a in B/C/D).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenBlock {
    pub eig: String,
    pub mult: usize,
    pub partition: Partition,
}

impl EigenBlock {
    /// The tag as an exact rational, when it parses as one.
    pub fn value(&self) -> Option<Ratio<i64>> {
        parse_rational(&self.eig)
    }
}

pub fn parse_rational(s: &str) -> Option<Ratio<i64>> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
            (b != 0).then(|| Ratio::new(a, b))
        }
        None => s.parse::<i64>().ok().map(Ratio::from_integer),
    }
}

/// A classical adjoint orbit: nilpotent parts per eigenvalue class of a
/// semisimple element, with the zero-eigenvalue factor kept separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointOrbit {
    ty: LieType,
    blocks: Vec<EigenBlock>,
    zero_block: Partition,
}

impl AdjointOrbit {
    pub fn new(ty: LieType, blocks: Vec<EigenBlock>, zero_block: Partition) -> Result<Self, OrbitError> {
        let bad = |s: String| Err(OrbitError::BadAdjoint(s));
        let dim = ty.natural_dim().ok_or(OrbitError::NotClassical(ty))?;
        let mut tags = BTreeSet::new();
        for b in &blocks {
            if b.mult == 0 || b.partition.total() != b.mult {
                return bad(format!("block `{}` has partition {} of the wrong size", b.eig, b.partition));
            }
            if !tags.insert(b.eig.trim().to_string()) {
                return bad(format!("eigenvalue `{}` repeated", b.eig));
            }
        }
        let values: Vec<Ratio<i64>> = blocks.iter().filter_map(EigenBlock::value).collect();
        for (i, a) in values.iter().enumerate() {
            if *a == Ratio::from_integer(0) {
                return bad("zero belongs in the zero block".into());
            }
            for b in &values[i + 1..] {
                if a == b || (ty.family() != Family::A && *a == -*b) {
                    return bad(format!("eigenvalues {} and {} coincide up to sign", a, b));
                }
            }
        }
        let nonzero: usize = blocks.iter().map(|b| b.mult).sum();
        let total = if ty.family() == Family::A { nonzero } else { 2 * nonzero } + zero_block.total();
        if total != dim {
            return bad(format!("multiplicities fill {} of {} dimensions", total, dim));
        }
        if let Some(c) = ty.parity_class() {
            let legal = if zero_block.is_empty() { c != ParityClass::B } else { is_valid(&zero_block, c) };
            if !legal {
                return bad(format!("zero block {} is not a {:?} partition", zero_block, c));
            }
        }
        Ok(AdjointOrbit { ty, blocks, zero_block })
    }

    /// The nilpotent orbit itself as an adjoint orbit with only a zero block.
    pub fn from_nilpotent(o: &NilpotentOrbit) -> Result<Self, OrbitError> {
        let p = o.partition().ok_or(OrbitError::NotClassical(o.ty))?;
        AdjointOrbit::new(o.ty, Vec::new(), p.clone())
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn blocks(&self) -> &[EigenBlock] {
        &self.blocks
    }

    pub fn zero_block(&self) -> &Partition {
        &self.zero_block
    }

    pub fn is_nilpotent(&self) -> bool {
        self.blocks.is_empty()
    }
}

fn random_partition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Partition {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    Partition::new(parts)
}

/// A random adjoint orbit of a classical type, with distinct rational eigenvalue tags.
pub fn random_adjoint<R: Rng + ?Sized>(ty: LieType, rng: &mut R) -> AdjointOrbit {
    let dim = ty.natural_dim().expect("classical type");
    let class = ty.parity_class();
    let zero = loop {
        let z = rng.gen_range(0..=dim);
        let ok = match class {
            None => true,
            Some(ParityClass::B) => z % 2 == 1,
            Some(_) => z % 2 == 0,
        };
        if ok {
            break z;
        }
    };
    let zero_block = match class {
        Some(c) if zero > 0 => collapse(&random_partition(zero, rng), c).expect("parity checked"),
        _ => random_partition(zero, rng),
    };
    let mut left = if class.is_some() { (dim - zero) / 2 } else { dim - zero };
    let mut blocks = Vec::new();
    let mut next = 0;
    while left > 0 {
        let mult = rng.gen_range(1..=left);
        left -= mult;
        next += rng.gen_range(1..4);
        blocks.push(EigenBlock { eig: format!("{}/7", next), mult, partition: random_partition(mult, rng) });
    }
    AdjointOrbit::new(ty, blocks, zero_block).expect("sampled orbit is valid")
}

/// 𝒪^nil by Lusztig–Spaltenstein induction from the Levi of the semisimple part.
pub fn ls_induction(a: &AdjointOrbit) -> NilpotentOrbit {
    let parts: Vec<&Partition> = a.blocks.iter().map(|b| &b.partition).collect();
    let partition = match a.ty.parity_class() {
        None => sum_parts(parts.into_iter().chain([&a.zero_block])),
        Some(c) => {
            let d = sum_parts(parts);
            let f = &a.zero_block;
            let len = d.len().max(f.len());
            let p = Partition::new((0..len).map(|i| 2 * d.part(i) + f.part(i)).collect::<Vec<_>>());
            collapse(&p, c).expect("total has the right parity")
        }
    };
    NilpotentOrbit::unlabelled(a.ty, partition)
}

/// `o_target ⊂ Cone(𝒪) ∩ 𝒩`, i.e. `o_target ≼ 𝒪^nil`.
pub fn cone_contains(target: &NilpotentOrbit, a: &AdjointOrbit) -> Result<bool, OrbitError> {
    closure_le(target, &ls_induction(a))
}

/// `o1 ⊂ closure(o2)`, using embedded Hasse data for G2 and F4.
pub fn closure_le(o1: &NilpotentOrbit, o2: &NilpotentOrbit) -> Result<bool, OrbitError> {
    closure_le_with(o1, o2, None)
}

/// As [`closure_le`], with optional Hasse data for exceptional types.
pub fn closure_le_with(
    o1: &NilpotentOrbit,
    o2: &NilpotentOrbit,
    hasse: Option<&HasseDiagram>,
) -> Result<bool, OrbitError> {
    if o1.ty != o2.ty {
        return Err(OrbitError::TypeMismatch(o1.ty, o2.ty));
    }
    match (&o1.descriptor, &o2.descriptor) {
        (
            Descriptor::Partition { partition: p1, very_even: v1 },
            Descriptor::Partition { partition: p2, very_even: v2 },
        ) => {
            if p1 == p2 {
                return Ok(match (v1, v2) {
                    (Some(a), Some(b)) => a == b,
                    _ => true,
                });
            }
            Ok(dom(p1, p2))
        }
        (Descriptor::Label(l1), Descriptor::Label(l2)) => {
            if l1 == l2 {
                return Ok(true);
            }
            let embedded;
            let h = match hasse {
                Some(h) => h,
                None => {
                    embedded = HasseDiagram::embedded(o1.ty.family()).ok_or(OrbitError::UnsupportedComparison(o1.ty))?;
                    &embedded
                }
            };
            h.le(l1, l2)
        }
        _ => Err(OrbitError::TypeMismatch(o1.ty, o2.ty)),
    }
}

/// Closure order on exceptional orbits: covering relations and centralizer dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    orbits: BTreeSet<String>,
    edges: Vec<(String, String)>,
    dims: BTreeMap<String, usize>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum HasseEntry {
    Edge {
        from: String,
        to: String,
    },
    Dim {
        label: String,
        #[serde(rename = "dimC")]
        dim_c: usize,
    },
}

impl HasseDiagram {
    pub fn new(edges: Vec<(String, String)>, dims: BTreeMap<String, usize>) -> Result<Self, OrbitError> {
        let norm = exceptional::normalize_label;
        let edges: Vec<(String, String)> = edges.into_iter().map(|(a, b)| (norm(&a), norm(&b))).collect();
        let dims: BTreeMap<String, usize> = dims.into_iter().map(|(k, v)| (norm(&k), v)).collect();
        let mut orbits: BTreeSet<String> = dims.keys().cloned().collect();
        for (a, b) in &edges {
            orbits.insert(a.clone());
            orbits.insert(b.clone());
            if let (Some(da), Some(db)) = (dims.get(a), dims.get(b)) {
                if da <= db {
                    return Err(OrbitError::BadHasse(format!(
                        "dim C must drop from {} ({}) to {} ({})",
                        a, da, b, db
                    )));
                }
            }
        }
        let h = HasseDiagram { orbits, edges, dims };
        if h.has_cycle() {
            return Err(OrbitError::BadHasse("covering relations contain a cycle".into()));
        }
        Ok(h)
    }

    /// The G2 and F4 diagrams with embedded dimensions.
    pub fn embedded(family: Family) -> Option<Self> {
        let edges = exceptional::hasse_edges(family)?;
        let dims = exceptional::labels(family)
            .into_iter()
            .map(|l| (l.to_string(), exceptional::dim_centralizer(family, l).expect("embedded")))
            .collect();
        let edges = edges.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        Some(HasseDiagram::new(edges, dims).expect("embedded Hasse data is consistent"))
    }

    /// Parses `[{"from":…,"to":…}, {"label":…,"dimC":…}, …]`.
    pub fn from_json(s: &str) -> Result<Self, OrbitError> {
        let entries: Vec<HasseEntry> =
            serde_json::from_str(s).map_err(|e| OrbitError::BadHasse(e.to_string()))?;
        let mut edges = Vec::new();
        let mut dims = BTreeMap::new();
        for e in entries {
            match e {
                HasseEntry::Edge { from, to } => edges.push((from, to)),
                HasseEntry::Dim { label, dim_c } => {
                    dims.insert(label, dim_c);
                }
            }
        }
        HasseDiagram::new(edges, dims)
    }

    pub fn orbits(&self) -> impl Iterator<Item = &str> {
        self.orbits.iter().map(String::as_str)
    }

    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    pub fn dim_c(&self, label: &str) -> Option<usize> {
        self.dims.get(&exceptional::normalize_label(label)).copied()
    }

    fn up(&self, a: &str) -> impl Iterator<Item = &str> {
        let a = a.to_string();
        self.edges.iter().filter(move |(x, _)| *x == a).map(|(_, y)| y.as_str())
    }

    fn has_cycle(&self) -> bool {
        // Kahn's algorithm.
        let mut indeg: BTreeMap<&str, usize> = self.orbits.iter().map(|o| (o.as_str(), 0)).collect();
        for (_, b) in &self.edges {
            *indeg.get_mut(b.as_str()).expect("known") += 1;
        }
        let mut ready: Vec<&str> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&o, _)| o).collect();
        let mut seen = 0;
        while let Some(o) = ready.pop() {
            seen += 1;
            for b in self.up(o) {
                let d = indeg.get_mut(b).expect("known");
                *d -= 1;
                if *d == 0 {
                    ready.push(b);
                }
            }
        }
        seen != self.orbits.len()
    }

    /// Reachability along covering relations.
    pub fn le(&self, a: &str, b: &str) -> Result<bool, OrbitError> {
        let (a, b) = (exceptional::normalize_label(a), exceptional::normalize_label(b));
        for x in [&a, &b] {
            if !self.orbits.contains(x) {
                return Err(OrbitError::BadHasse(format!("orbit `{}` missing from Hasse data", x)));
            }
        }
        let mut stack = vec![a.as_str()];
        let mut seen = BTreeSet::new();
        while let Some(x) = stack.pop() {
            if x == b {
                return Ok(true);
            }
            if seen.insert(x.to_string()) {
                stack.extend(self.up(x));
            }
        }
        Ok(false)
    }
}

/// Orbit input as read from JSON or the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OrbitSpec {
    Nilpotent {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        partition: Option<Partition>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        very_even: Option<VeryEven>,
    },
    Adjoint {
        blocks: Vec<EigenBlock>,
        zero_block: Partition,
    },
}

/// A resolved orbit of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orbit {
    Nilpotent(NilpotentOrbit),
    Adjoint(AdjointOrbit),
}

impl Orbit {
    pub fn lie_type(&self) -> LieType {
        match self {
            Orbit::Nilpotent(o) => o.lie_type(),
            Orbit::Adjoint(a) => a.lie_type(),
        }
    }
}

impl OrbitSpec {
    pub fn partition(p: Partition) -> Self {
        OrbitSpec::Nilpotent { partition: Some(p), label: None, very_even: None }
    }

    pub fn label(l: &str) -> Self {
        OrbitSpec::Nilpotent { partition: None, label: Some(l.to_string()), very_even: None }
    }

    /// Accepts full JSON, a bare partition `[3,1,1]` (optionally suffixed `I`/`II`), or a label.
    pub fn parse(s: &str) -> Result<Self, OrbitError> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| OrbitError::BadAdjoint(e.to_string()));
        }
        if s.starts_with('[') {
            let close = s.rfind(']').ok_or_else(|| OrbitError::BadAdjoint(format!("unterminated `{}`", s)))?;
            let partition: Partition =
                serde_json::from_str(&s[..=close]).map_err(|e| OrbitError::BadAdjoint(e.to_string()))?;
            let rest = s[close + 1..].trim();
            let very_even = if rest.is_empty() { None } else { Some(rest.parse()?) };
            return Ok(OrbitSpec::Nilpotent { partition: Some(partition), label: None, very_even });
        }
        Ok(OrbitSpec::label(s))
    }

    pub fn resolve(&self, ty: LieType) -> Result<Orbit, OrbitError> {
        match self {
            OrbitSpec::Nilpotent { partition: Some(p), very_even, .. } => {
                if !ty.is_classical() {
                    return Err(OrbitError::NeedsLabel { ty });
                }
                let o = match very_even {
                    Some(v) => NilpotentOrbit::very_even(ty, p.clone(), *v)?,
                    None => NilpotentOrbit::classical(ty, p.clone())?,
                };
                Ok(Orbit::Nilpotent(o))
            }
            OrbitSpec::Nilpotent { partition: None, label: Some(l), .. } => {
                Ok(Orbit::Nilpotent(NilpotentOrbit::exceptional(ty, l)?))
            }
            OrbitSpec::Nilpotent { .. } => Err(OrbitError::BadAdjoint("nilpotent orbit needs a partition or label".into())),
            OrbitSpec::Adjoint { blocks, zero_block } => {
                Ok(Orbit::Adjoint(AdjointOrbit::new(ty, blocks.clone(), zero_block.clone())?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use proptest::prelude::*;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn nil(t: &str, p: &[usize]) -> NilpotentOrbit {
        NilpotentOrbit::classical(ty(t), Partition::new(p.to_vec())).unwrap()
    }

    fn block(eig: &str, p: &[usize]) -> EigenBlock {
        let partition = Partition::new(p.to_vec());
        EigenBlock { eig: eig.into(), mult: partition.total(), partition }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(dim_centralizer(&nil("A3", &[4])).unwrap(), 3);
        assert_eq!(dim_centralizer(&nil("B2", &[2, 2, 1])).unwrap(), 6);
        assert_eq!(dim_centralizer(&nil("C2", &[4])).unwrap(), 2);
        assert_eq!(dim_centralizer(&nil("C3", &[2, 2, 2])).unwrap(), 9);
        assert_eq!(dim_centralizer(&nil("B2", &[3, 1, 1])).unwrap(), 4);
        let a1 = NilpotentOrbit::exceptional(LieType::exceptional(Family::F4), "A1").unwrap();
        assert_eq!(dim_centralizer(&a1).unwrap(), 36);
    }

    #[test]
    fn oracle_examples() {
        for (t, p, want) in [
            ("C2", &[4][..], 2),
            ("C3", &[2, 2, 2], 9),
            ("B2", &[3, 1, 1], 4),
            ("B2", &[2, 2, 1], 6),
            ("D4", &[3, 3, 1, 1], 10),
            ("A3", &[2, 1, 1], 9),
        ] {
            assert_eq!(dim_centralizer_oracle(&nil(t, p)).unwrap(), want, "{t} {p:?}");
        }
    }

    #[test]
    fn oracle_forms_are_invariant() {
        for n in 1..=8 {
            for p in partitions_of(n) {
                for c in [ParityClass::B, ParityClass::C, ParityClass::D] {
                    if is_valid(&p, c) {
                        assert!(oracle_form_is_invariant(&p, c), "{p} {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn induction_examples() {
        let a = AdjointOrbit::new(ty("A3"), vec![block("a", &[1, 1]), block("b", &[2])], Partition::empty()).unwrap();
        assert_eq!(ls_induction(&a).partition().unwrap(), &Partition::new(vec![3, 1]));
        let b = AdjointOrbit::new(ty("B4"), vec![block("a", &[2])], Partition::new(vec![3, 1, 1])).unwrap();
        assert_eq!(ls_induction(&b).partition().unwrap(), &Partition::new(vec![7, 1, 1]));
        let n = AdjointOrbit::new(ty("B4"), vec![], Partition::new(vec![3, 3, 1, 1, 1])).unwrap();
        assert_eq!(ls_induction(&n).partition().unwrap(), &Partition::new(vec![3, 3, 1, 1, 1]));
    }

    #[test]
    fn cone_examples() {
        let a = AdjointOrbit::new(ty("A3"), vec![block("a", &[1, 1]), block("b", &[2])], Partition::empty()).unwrap();
        assert!(cone_contains(&nil("A3", &[3, 1]), &a).unwrap());
        let b = AdjointOrbit::new(ty("B2"), vec![], Partition::new(vec![3, 1, 1])).unwrap();
        assert!(cone_contains(&nil("B2", &[2, 2, 1]), &b).unwrap());
        assert!(!cone_contains(&nil("B2", &[5]), &b).unwrap());
    }

    #[test]
    fn adjoint_validation() {
        assert!(AdjointOrbit::new(ty("C2"), vec![block("1/2", &[1]), block("-1/2", &[1])], Partition::empty()).is_err());
        assert!(AdjointOrbit::new(ty("C2"), vec![block("a", &[1]), block("a", &[1])], Partition::empty()).is_err());
        assert!(AdjointOrbit::new(ty("B2"), vec![block("a", &[2])], Partition::empty()).is_err());
        assert!(AdjointOrbit::new(ty("B2"), vec![block("a", &[2])], Partition::new(vec![1])).is_ok());
        assert!(AdjointOrbit::new(ty("C2"), vec![block("a", &[1])], Partition::new(vec![1, 1])).is_ok());
    }

    #[test]
    fn closure_examples() {
        let f4 = LieType::exceptional(Family::F4);
        let o = |l: &str| NilpotentOrbit::exceptional(f4, l).unwrap();
        assert!(closure_le(&o("A1"), &o("Ã1")).unwrap());
        assert!(!closure_le(&o("B3"), &o("C3")).unwrap());
        assert!(!closure_le(&o("C3"), &o("B3")).unwrap());
        let d4 = ty("D4");
        let i = NilpotentOrbit::very_even(d4, Partition::new(vec![4, 4]), VeryEven::I).unwrap();
        let ii = NilpotentOrbit::very_even(d4, Partition::new(vec![4, 4]), VeryEven::II).unwrap();
        assert!(!closure_le(&i, &ii).unwrap());
        assert!(closure_le(&nil("D4", &[3, 3, 1, 1]), &i).unwrap());
        let e6 = LieType::exceptional(Family::E6);
        let x = NilpotentOrbit::exceptional(e6, "A1").unwrap();
        let y = NilpotentOrbit::exceptional(e6, "2A1").unwrap();
        assert_eq!(closure_le(&x, &y), Err(OrbitError::UnsupportedComparison(e6)));
    }

    #[test]
    fn very_even_labels_enforced() {
        assert!(matches!(
            NilpotentOrbit::classical(ty("D4"), Partition::new(vec![4, 4])),
            Err(OrbitError::MissingVeryEvenLabel(_))
        ));
        assert!(NilpotentOrbit::very_even(ty("C4"), Partition::new(vec![4, 4]), VeryEven::I).is_err());
    }

    #[test]
    fn f4_closure_is_edge_transitive_closure() {
        let h = HasseDiagram::embedded(Family::F4).unwrap();
        let labels: Vec<&str> = h.orbits().collect();
        assert_eq!(labels.len(), 16);
        // Floyd–Warshall over the covering relation.
        let n = labels.len();
        let pos = |l: &str| labels.iter().position(|&x| x == l).unwrap();
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in h.edges() {
            reach[pos(a)][pos(b)] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(h.le(labels[i], labels[j]).unwrap(), reach[i][j]);
            }
        }
    }

    #[test]
    fn hasse_json() {
        let h = HasseDiagram::from_json(
            r#"[{"from":"0","to":"A1"},{"from":"A1","to":"2A1"},{"label":"0","dimC":78},{"label":"A1","dimC":56},{"label":"2A1","dimC":46}]"#,
        )
        .unwrap();
        assert!(h.le("0", "2A1").unwrap());
        assert!(!h.le("2A1", "A1").unwrap());
        assert!(HasseDiagram::from_json(r#"[{"from":"a","to":"b"},{"from":"b","to":"a"}]"#).is_err());
        assert!(HasseDiagram::from_json(r#"[{"from":"a","to":"b"},{"label":"a","dimC":2},{"label":"b","dimC":4}]"#).is_err());
    }

    #[test]
    fn orbit_spec_json() {
        let s: OrbitSpec = serde_json::from_str(r#"{"kind":"nilpotent","partition":[3,1,1]}"#).unwrap();
        assert_eq!(s, OrbitSpec::partition(Partition::new(vec![3, 1, 1])));
        let s: OrbitSpec = serde_json::from_str(r#"{"kind":"nilpotent","label":"A2+Ã1"}"#).unwrap();
        let f4 = LieType::exceptional(Family::F4);
        assert!(matches!(s.resolve(f4).unwrap(), Orbit::Nilpotent(o) if o.label() == Some("A2+~A1")));
        let s: OrbitSpec = serde_json::from_str(
            r#"{"kind":"adjoint","blocks":[{"eig":"a1","mult":2,"partition":[2]}],"zero_block":[3,1,1]}"#,
        )
        .unwrap();
        assert!(matches!(s.resolve(ty("B4")).unwrap(), Orbit::Adjoint(_)));
        assert_eq!(OrbitSpec::parse("[4,4] II").unwrap(), OrbitSpec::Nilpotent {
            partition: Some(Partition::new(vec![4, 4])),
            label: None,
            very_even: Some(VeryEven::II),
        });
    }

    fn classical_type() -> impl Strategy<Value = LieType> {
        prop_oneof![
            (1usize..=7).prop_map(|r| LieType::of(Family::A, r)),
            (2usize..=8).prop_map(|r| LieType::of(Family::B, r)),
            (2usize..=8).prop_map(|r| LieType::of(Family::C, r)),
            (4usize..=8).prop_map(|r| LieType::of(Family::D, r)),
        ]
    }

    /// Random adjoint orbit: split the rank into block multiplicities, random partitions.
    fn adjoint(t: LieType, cuts: &[usize], seeds: &[usize]) -> AdjointOrbit {
        let n = t.n();
        let mut mults = Vec::new();
        let mut left = n;
        for &c in cuts {
            if left == 0 {
                break;
            }
            let m = 1 + c % left;
            mults.push(m);
            left -= m;
        }
        let pick = |total: usize, seed: usize, class: Option<ParityClass>| {
            let all: Vec<Partition> = partitions_of(total)
                .into_iter()
                .filter(|p| class.map_or(true, |c| is_valid(p, c)))
                .collect();
            all[seed % all.len()].clone()
        };
        let blocks: Vec<EigenBlock> = mults
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let partition = pick(m, seeds[i % seeds.len()], None);
                EigenBlock { eig: format!("a{}", i), mult: m, partition }
            })
            .collect();
        let zero_total = t.natural_dim().unwrap() - if t.family() == Family::A { n - left } else { 2 * (n - left) };
        let zero = if zero_total == 0 { Partition::empty() } else { pick(zero_total, seeds[0] + 7, t.parity_class()) };
        AdjointOrbit::new(t, blocks, zero).unwrap()
    }

    proptest! {
        #[test]
        fn induction_is_parity_valid(t in classical_type(), cuts in prop::collection::vec(0usize..8, 0..4), seeds in prop::collection::vec(0usize..1000, 1..5)) {
            let a = adjoint(t, &cuts, &seeds);
            let o = ls_induction(&a);
            prop_assert!(check_partition(t, o.partition().unwrap()).is_ok());
        }

        #[test]
        fn induction_is_monotone(t in classical_type(), cuts in prop::collection::vec(0usize..8, 0..4), seeds in prop::collection::vec(0usize..1000, 1..5), which in 0usize..8) {
            let a = adjoint(t, &cuts, &seeds);
            let base = ls_induction(&a);
            // Enlarge one block partition to any partition above it.
            let mut blocks = a.blocks().to_vec();
            let mut zero = a.zero_block().clone();
            let slot = which % (blocks.len() + 1);
            let class = if slot == blocks.len() { t.parity_class() } else { None };
            let current = if slot == blocks.len() { zero.clone() } else { blocks[slot].partition.clone() };
            if current.is_empty() {
                return Ok(());
            }
            for bigger in partitions_of(current.total()) {
                if !dom(&current, &bigger) || !class.map_or(true, |c| is_valid(&bigger, c)) {
                    continue;
                }
                if slot == blocks.len() {
                    zero = bigger;
                } else {
                    blocks[slot].partition = bigger;
                }
                let b = AdjointOrbit::new(t, blocks.clone(), zero.clone()).unwrap();
                prop_assert!(dom(base.partition().unwrap(), ls_induction(&b).partition().unwrap()));
            }
        }
    }
}
