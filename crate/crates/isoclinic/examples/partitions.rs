//! Dominance order, even distributions and the B/C/D collapse.
use isoclinic::partitions::{collapse, dominance_le, lambda_evenly, lambda_tilde, Partition, ParityClass};

fn main() {
    let p = Partition::new(vec![4, 2, 2, 1]);
    for c in [ParityClass::B, ParityClass::C, ParityClass::D] {
        match collapse(&p, c) {
            Ok(q) => println!("{:?}-collapse of {} = {}", c, p, q),
            Err(e) => println!("{:?}: {}", c, e),
        }
    }
    let (even, tilde) = (lambda_evenly(12, 4), lambda_tilde(12, 4).unwrap());
    println!("λ^(12,4) = {}, λ̃^(12,4) = {}, λ ≤ λ̃: {}", even, tilde, dominance_le(&even, &tilde).unwrap());
}
