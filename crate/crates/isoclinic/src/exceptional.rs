//! Embedded data for exceptional types: centralizer dimensions, the G2 and
//! F4 closure orders, and the published Coxeter, F4 and rigidity rows.

use crate::root_data::{Family, Slope};

/// Canonical ASCII spelling of a Bala–Carter label: `Ã1` → `~A1`, primes as
/// apostrophes, underscores and whitespace dropped.
pub fn normalize_label(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            'Ã' => out.push_str("~A"),
            '\u{0303}' => {
                // combining tilde after a letter: move it in front of the letter
                if let Some(last) = out.pop() {
                    out.push('~');
                    out.push(last);
                }
            }
            '′' => out.push('\''),
            '″' => out.push_str("''"),
            '_' | ' ' | '\t' => {}
            c => out.push(c),
        }
    }
    out
}

/// dim C(𝒪) for every orbit in the embedded tables.
pub fn dim_centralizer(family: Family, label: &str) -> Option<usize> {
    let label = normalize_label(label);
    let (table, ambient): (&[(&str, usize)], usize) = match family {
        Family::G2 => (G2_DIM_C, 0),
        Family::F4 => (F4_DIM_C, 0),
        Family::E6 => (E6_ORBIT_DIM, 78),
        Family::E7 => (E7_ORBIT_DIM, 133),
        Family::E8 => (E8_ORBIT_DIM, 248),
        _ => return None,
    };
    table
        .iter()
        .find(|(l, _)| *l == label)
        .map(|&(_, v)| if ambient == 0 { v } else { ambient - v })
}

/// All labels with embedded data.
pub fn labels(family: Family) -> Vec<&'static str> {
    let table: &[(&str, usize)] = match family {
        Family::G2 => G2_DIM_C,
        Family::F4 => F4_DIM_C,
        Family::E6 => E6_ORBIT_DIM,
        Family::E7 => E7_ORBIT_DIM,
        Family::E8 => E8_ORBIT_DIM,
        _ => &[],
    };
    table.iter().map(|(l, _)| *l).collect()
}

const G2_DIM_C: &[(&str, usize)] = &[("0", 14), ("A1", 8), ("~A1", 6), ("G2(a1)", 4), ("G2", 2)];

const F4_DIM_C: &[(&str, usize)] = &[
    ("0", 52),
    ("A1", 36),
    ("~A1", 30),
    ("A1+~A1", 24),
    ("A2", 22),
    ("~A2", 22),
    ("A2+~A1", 18),
    ("B2", 16),
    ("~A2+A1", 16),
    ("C3(a1)", 14),
    ("F4(a3)", 12),
    ("B3", 10),
    ("C3", 10),
    ("F4(a2)", 8),
    ("F4(a1)", 6),
    ("F4", 4),
];

/// Orbit dimensions; dim C = dim 𝔤 − dim 𝒪.
const E6_ORBIT_DIM: &[(&str, usize)] = &[
    ("0", 0),
    ("A1", 22),
    ("2A1", 32),
    ("3A1", 40),
    ("A2", 42),
    ("A2+A1", 46),
    ("2A2", 48),
    ("A2+2A1", 50),
    ("A3", 52),
    ("2A2+A1", 54),
    ("A3+A1", 56),
    ("D4(a1)", 58),
    ("A4", 60),
    ("D4", 60),
    ("A4+A1", 62),
    ("A5", 64),
    ("D5(a1)", 64),
    ("E6(a3)", 66),
    ("D5", 68),
    ("E6(a1)", 70),
    ("E6", 72),
];

const E7_ORBIT_DIM: &[(&str, usize)] = &[
    ("0", 0),
    ("A1", 34),
    ("2A1", 52),
    ("(3A1)''", 54),
    ("(3A1)'", 64),
    ("A2", 66),
    ("4A1", 70),
    ("A2+A1", 76),
    ("A2+2A1", 82),
    ("A3", 84),
    ("2A2", 84),
    ("A2+3A1", 84),
    ("(A3+A1)''", 86),
    ("2A2+A1", 90),
    ("(A3+A1)'", 92),
    ("D4(a1)", 94),
    ("A3+2A1", 94),
    ("D4", 96),
    ("D4(a1)+A1", 96),
    ("A3+A2", 98),
    ("A4", 100),
    ("A3+A2+A1", 100),
    ("(A5)''", 102),
    ("D4+A1", 102),
    ("A4+A1", 104),
    ("D5(a1)", 106),
    ("A4+A2", 106),
    ("(A5)'", 108),
    ("A5+A1", 108),
    ("D5(a1)+A1", 108),
    ("D6(a2)", 110),
    ("E6(a3)", 110),
    ("D5", 112),
    ("E7(a5)", 112),
    ("A6", 114),
    ("D5+A1", 114),
    ("D6(a1)", 114),
    ("E7(a4)", 116),
    ("D6", 118),
    ("E6(a1)", 118),
    ("E6", 120),
    ("E7(a3)", 120),
    ("E7(a2)", 122),
    ("E7(a1)", 124),
    ("E7", 126),
];

const E8_ORBIT_DIM: &[(&str, usize)] = &[
    ("0", 0),
    ("A1", 58),
    ("2A1", 92),
    ("3A1", 112),
    ("A2", 114),
    ("4A1", 128),
    ("A2+A1", 136),
    ("A2+2A1", 146),
    ("A3", 148),
    ("A2+3A1", 154),
    ("2A2", 156),
    ("2A2+A1", 162),
    ("A3+A1", 164),
    ("D4(a1)", 166),
    ("D4", 168),
    ("2A2+2A1", 168),
    ("A3+2A1", 172),
    ("D4(a1)+A1", 176),
    ("A3+A2", 178),
    ("A4", 180),
    ("A3+A2+A1", 182),
    ("D4+A1", 184),
    ("D4(a1)+A2", 184),
    ("A4+A1", 188),
    ("2A3", 188),
    ("D5(a1)", 190),
    ("A4+2A1", 192),
    ("A4+A2", 194),
    ("A5", 196),
    ("D5(a1)+A1", 196),
    ("A4+A2+A1", 196),
    ("D4+A2", 198),
    ("E6(a3)", 198),
    ("D5", 200),
    ("A4+A3", 200),
    ("A5+A1", 202),
    ("D5(a1)+A2", 202),
    ("D6(a2)", 204),
    ("E6(a3)+A1", 204),
    ("E7(a5)", 206),
    ("D5+A1", 208),
    ("E8(a7)", 208),
    ("A6", 210),
    ("D6(a1)", 210),
    ("A6+A1", 212),
    ("E7(a4)", 212),
    ("E6(a1)", 214),
    ("D5+A2", 214),
    ("D6", 216),
    ("E6", 216),
    ("D7(a2)", 216),
    ("A7", 218),
    ("E6(a1)+A1", 218),
    ("E7(a3)", 220),
    ("E8(b6)", 220),
    ("D7(a1)", 222),
    ("E6+A1", 222),
    ("E7(a2)", 224),
    ("E8(a6)", 224),
    ("D7", 226),
    ("E8(b5)", 226),
    ("E7(a1)", 228),
    ("E8(a5)", 228),
    ("E8(b4)", 230),
    ("E7", 232),
    ("E8(a4)", 232),
    ("E8(a3)", 234),
    ("E8(a2)", 236),
    ("E8(a1)", 238),
    ("E8", 240),
];

/// Covering relations `(lower, upper)` of the closure order.
pub fn hasse_edges(family: Family) -> Option<&'static [(&'static str, &'static str)]> {
    match family {
        Family::G2 => Some(G2_EDGES),
        Family::F4 => Some(F4_EDGES),
        _ => None,
    }
}

const G2_EDGES: &[(&str, &str)] = &[("0", "A1"), ("A1", "~A1"), ("~A1", "G2(a1)"), ("G2(a1)", "G2")];

const F4_EDGES: &[(&str, &str)] = &[
    ("0", "A1"),
    ("A1", "~A1"),
    ("~A1", "A1+~A1"),
    ("A1+~A1", "A2"),
    ("A1+~A1", "~A2"),
    ("A2", "A2+~A1"),
    ("~A2", "~A2+A1"),
    ("A2+~A1", "B2"),
    ("A2+~A1", "~A2+A1"),
    ("B2", "C3(a1)"),
    ("~A2+A1", "C3(a1)"),
    ("C3(a1)", "F4(a3)"),
    ("F4(a3)", "B3"),
    ("F4(a3)", "C3"),
    ("B3", "F4(a2)"),
    ("C3", "F4(a2)"),
    ("F4(a2)", "F4(a1)"),
    ("F4(a1)", "F4"),
];

/// Threshold orbits and Δ for `ν = d/h`, exceptional types.
pub const EXC_COXETER: &[(Family, u64, &str, u64)] = &[
    (Family::E6, 1, "E6", 0),
    (Family::E6, 5, "A2+2A1", 1),
    (Family::E6, 7, "3A1", 2),
    (Family::E6, 11, "A1", 5),
    (Family::E7, 1, "E7", 0),
    (Family::E7, 5, "A3+A2+A1", 1),
    (Family::E7, 7, "A2+3A1", 0),
    (Family::E7, 11, "(3A1)'", 4),
    (Family::E7, 13, "2A1", 5),
    (Family::E7, 17, "A1", 10),
    (Family::E8, 1, "E8", 0),
    (Family::E8, 7, "A4+A2+A1", 2),
    (Family::E8, 11, "2A2+2A1", 4),
    (Family::E8, 13, "A2+3A1", 5),
    (Family::E8, 17, "4A1", 8),
    (Family::E8, 19, "3A1", 8),
    (Family::E8, 23, "2A1", 14),
    (Family::E8, 29, "A1", 21),
    (Family::G2, 1, "G2", 0),
    (Family::G2, 5, "A1", 1),
    (Family::F4, 1, "F4", 0),
    (Family::F4, 5, "A2+~A1", 1),
    (Family::F4, 7, "A1+~A1", 2),
    (Family::F4, 11, "A1", 4),
];

pub fn exc_coxeter_row(family: Family, d: u64) -> Option<(&'static str, u64)> {
    EXC_COXETER
        .iter()
        .find(|r| r.0 == family && r.1 == d)
        .map(|r| (r.2, r.3))
}

/// F4 non-Coxeter slopes: `(d, m, 𝒪_ν, Δ_ν)`.
pub const F4_SLOPES: &[(u64, u64, &str, u64)] = &[(5, 6, "A1", 2), (5, 8, "~A1", 0), (7, 8, "A1", 3)];

pub fn f4_row(s: Slope) -> Option<(&'static str, u64)> {
    F4_SLOPES
        .iter()
        .find(|r| r.0 == s.d() && r.1 == s.m())
        .map(|r| (r.2, r.3))
}

/// A row of the exceptional rigidity-numerics table.
#[derive(Debug, Clone, Copy)]
pub struct NumericsRow {
    pub family: Family,
    pub d: u64,
    pub m: u64,
    pub label: &'static str,
    /// `Some(true)` / `Some(false)` when existence is settled, `None` when open.
    pub exists: Option<bool>,
    /// The row as printed, when it differs from the corrected one.
    pub printed: Option<&'static str>,
}

const fn row(family: Family, d: u64, m: u64, label: &'static str, exists: Option<bool>) -> NumericsRow {
    NumericsRow { family, d, m, label, exists, printed: None }
}

/// Orbits satisfying `ν|Φ| = dim C(𝒪)` for elliptic `m` and `1 < d < m`.
pub const RIGID_NUMERICS: &[NumericsRow] = &[
    row(Family::G2, 2, 3, "A1", None),
    NumericsRow {
        family: Family::F4,
        d: 3,
        m: 4,
        label: "A1",
        exists: None,
        printed: Some("3/4 B4"),
    },
    row(Family::F4, 3, 8, "A2+~A1", None),
    row(Family::F4, 5, 8, "~A1", Some(true)),
    row(Family::E6, 2, 9, "A4+A1", None),
    row(Family::E6, 4, 9, "A2+A1", None),
    row(Family::E6, 7, 9, "A1", None),
    row(Family::E6, 5, 12, "2A2", Some(false)),
    row(Family::E7, 3, 14, "D5(a1)", None),
    row(Family::E7, 3, 14, "A4+A2", None),
    NumericsRow {
        family: Family::E7,
        d: 9,
        m: 14,
        label: "2A1",
        exists: None,
        printed: Some("9/15 2A1"),
    },
    row(Family::E7, 11, 14, "A1", None),
    row(Family::E7, 5, 18, "A3+A2", Some(false)),
    row(Family::E7, 7, 18, "2A2", Some(false)),
    row(Family::E7, 7, 18, "A2+3A1", Some(true)),
    row(Family::E8, 3, 10, "D4(a1)+A1", None),
    row(Family::E8, 5, 12, "A3", None),
    row(Family::E8, 2, 15, "D6", None),
    row(Family::E8, 2, 15, "E6", None),
    row(Family::E8, 2, 15, "D7(a2)", None),
    row(Family::E8, 4, 15, "D4+A1", None),
    row(Family::E8, 4, 15, "D4(a1)+A2", None),
    row(Family::E8, 7, 15, "A2+A1", None),
    row(Family::E8, 3, 20, "A6+A1", None),
    row(Family::E8, 3, 20, "E7(a4)", None),
    row(Family::E8, 7, 20, "A3+A1", None),
    row(Family::E8, 13, 20, "2A1", None),
    row(Family::E8, 5, 24, "D4+A2", None),
    row(Family::E8, 5, 24, "E6(a3)", None),
    row(Family::E8, 7, 24, "A3+A2", None),
    row(Family::E8, 19, 24, "A1", None),
    row(Family::E8, 7, 30, "A4+2A1", Some(false)),
    row(Family::E8, 17, 30, "3A1", Some(false)),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(normalize_label("A2+Ã1"), "A2+~A1");
        assert_eq!(normalize_label("A_2 + \u{00C3}_1"), "A2+~A1");
        assert_eq!(normalize_label("(3A1)′"), "(3A1)'");
        assert_eq!(normalize_label("(A5)″"), "(A5)''");
    }

    #[test]
    fn lookups() {
        assert_eq!(dim_centralizer(Family::F4, "A1"), Some(36));
        assert_eq!(dim_centralizer(Family::F4, "Ã1"), Some(30));
        assert_eq!(dim_centralizer(Family::E7, "(3A1)'"), Some(69));
        assert_eq!(dim_centralizer(Family::E8, "A4+2A1"), Some(56));
        assert_eq!(dim_centralizer(Family::F4, "B4"), None);
    }

    #[test]
    fn every_hasse_label_has_a_dimension() {
        for f in [Family::G2, Family::F4] {
            for (a, b) in hasse_edges(f).unwrap() {
                let (da, db) = (dim_centralizer(f, a).unwrap(), dim_centralizer(f, b).unwrap());
                assert!(da > db, "{a} -> {b}");
            }
        }
    }

    #[test]
    fn levi_type_dims_match_the_grading_count() {
        use crate::levi::{label, levi_centralizer_dim};
        use crate::root_data::LieType;
        use std::collections::BTreeSet;
        for f in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
            let t = LieType::exceptional(f);
            let r = t.rank();
            for mask in 0u32..(1 << r) {
                let j: BTreeSet<usize> = (1..=r).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let l = label(&t, &j);
                assert_eq!(dim_centralizer(f, &l), Some(levi_centralizer_dim(&t, &j)), "{f} {l}");
            }
        }
    }

    #[test]
    fn coxeter_and_f4_rows_satisfy_the_delta_identity() {
        use crate::root_data::LieType;
        for &(f, d, l, delta) in EXC_COXETER {
            let r = LieType::exceptional(f).rank() as u64;
            assert_eq!(d * r - 2 * delta, dim_centralizer(f, l).unwrap() as u64, "{f} {d}");
        }
        for &(d, m, l, delta) in F4_SLOPES {
            assert_eq!(48 * d / m - 2 * delta, dim_centralizer(Family::F4, l).unwrap() as u64);
        }
    }

    #[test]
    fn numerics_rows_satisfy_the_rigidity_equation() {
        use crate::root_data::LieType;
        for row in RIGID_NUMERICS {
            let phi = LieType::exceptional(row.family).phi_count() as u64;
            assert_eq!(phi * row.d % row.m, 0);
            assert_eq!(phi * row.d / row.m, dim_centralizer(row.family, row.label).unwrap() as u64, "{:?}", row);
        }
    }
}
