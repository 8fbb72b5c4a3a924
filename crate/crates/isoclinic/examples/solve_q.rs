//! The verdict read off from a fixed characteristic polynomial.
use isoclinic::orbits::{random_adjoint, Orbit};
use isoclinic::root_data::{LieType, Slope};
use isoclinic::solver::{ds_solve, ds_solve_q, q_candidates};
use rand::SeedableRng;

fn main() {
    let t: LieType = "D5".parse().unwrap();
    let s: Slope = "1/4".parse().unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..4 {
        let a = random_adjoint(t, &mut rng);
        let (cands, row) = q_candidates(&t, s, &a).unwrap();
        let q = ds_solve_q(&t, s, &a).unwrap().affirmative;
        let nil = ds_solve(&t, s, &Orbit::Adjoint(a.clone())).unwrap().affirmative;
        println!("{:?} zero block {}: {} candidates from {}, verdict {:?} (induced route {:?})", 
            a.blocks().iter().map(|b| b.partition.to_string()).collect::<Vec<_>>(), a.zero_block(), cands.len(), row, q, nil);
    }
}
