//! Index of rigidity and the rigid slopes of a family.
use isoclinic::orbits::OrbitSpec;
use isoclinic::rigidity::{closed_form_delta, report, scan_rigid};
use isoclinic::root_data::{Family, LieType, Slope};

fn main() {
    let f4: LieType = "F4".parse().unwrap();
    let s: Slope = "5/6".parse().unwrap();
    let a1 = OrbitSpec::label("A1").resolve(f4).unwrap();
    println!("F4 5/6 A1: {}", serde_json::to_string(&report(&f4, s, &a1).unwrap()).unwrap());
    let c4: LieType = "C4".parse().unwrap();
    println!("C4 3/4 closed-form Δ = {}", closed_form_delta(&c4, "3/4".parse().unwrap()).unwrap());
    for row in scan_rigid(Family::D, 6) {
        println!("rigid: {} {} {}", row.lie_type, row.slope, row.orbit);
    }
}
