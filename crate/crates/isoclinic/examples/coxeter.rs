//! Threshold orbits for ν = d/h from d-allowable subsets of the affine diagram.
use isoclinic::coxeter::{coxeter_closed_form, coxeter_solve, enumerate_d_allowable};
use isoclinic::root_data::LieType;

fn main() {
    let c3: LieType = "C3".parse().unwrap();
    for s in enumerate_d_allowable(&c3, 5).iter().filter(|s| s.is_minimal) {
        println!("C3, d = 5: minimal allowable {:?} with weights {:?}", s.nodes, s.witness);
    }
    for (t, d) in [("C3", 5), ("D5", 7), ("F4", 7), ("E8", 7)] {
        let t: LieType = t.parse().unwrap();
        match coxeter_solve(&t, d) {
            Ok(sol) => println!("{} d = {}: {} ({}), closed form {:?}", t, d, sol.orbit, sol.path, coxeter_closed_form(&t, d)),
            Err(e) => println!("{} d = {}: {}", t, d, e),
        }
    }
}
