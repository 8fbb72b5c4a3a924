//! Minimal Jordan types from the lattice models, against the threshold table.
use isoclinic::root_data::LieType;
use isoclinic::skeleton::minimal_jordan_type;
use isoclinic::solver::o_nu;

fn main() {
    for (t, s) in [("C4", "3/8"), ("B4", "1/4"), ("D4", "1/4"), ("B2", "3/4"), ("D6", "1/10"), ("A5", "5/6")] {
        let t: LieType = t.parse().unwrap();
        let s = s.parse().unwrap();
        let r = minimal_jordan_type(&t, s, 1000, 7).unwrap();
        println!(
            "{} {}: {} certified={} s={:?}, table {}",
            t,
            s,
            r.partition,
            r.certified,
            r.s_rank,
            o_nu(&t, s).unwrap().orbit
        );
    }
}
