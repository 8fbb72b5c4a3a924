//! Induced nilpotent orbit of an adjoint orbit and centralizer dimensions.
use isoclinic::orbits::{dim_centralizer, dim_centralizer_oracle, ls_induction, AdjointOrbit, EigenBlock};
use isoclinic::partitions::Partition;

fn main() {
    let c3 = "C3".parse().unwrap();
    let blocks = vec![EigenBlock { eig: "1/3".into(), mult: 2, partition: Partition::new(vec![1, 1]) }];
    let a = AdjointOrbit::new(c3, blocks, Partition::new(vec![2])).unwrap();
    let nil = ls_induction(&a);
    println!("𝒪^nil = {}", nil);
    println!("dim C = {} (kernel computation: {})", dim_centralizer(&nil).unwrap(), dim_centralizer_oracle(&nil).unwrap());
}
