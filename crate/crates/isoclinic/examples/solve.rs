//! Threshold orbit and verdict for a nilpotent and an adjoint orbit.
use isoclinic::orbits::OrbitSpec;
use isoclinic::root_data::{LieType, Slope};
use isoclinic::solver::{ds_solve, o_nu};

fn main() {
    let t: LieType = "B2".parse().unwrap();
    let s: Slope = "3/4".parse().unwrap();
    let th = o_nu(&t, s).unwrap();
    println!("𝒪_ν for {} at {} = {} via {}", t, s, th.orbit, th.path);
    for spec in ["[3,1,1]", "[2,2,1]", "[1,1,1,1,1]"] {
        let orbit = OrbitSpec::parse(spec).unwrap().resolve(t).unwrap();
        let ans = ds_solve(&t, s, &orbit).unwrap();
        println!("{}: {}", spec, serde_json::to_string(&ans).unwrap());
    }
}
