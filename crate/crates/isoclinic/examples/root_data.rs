//! Exponents, Coxeter numbers and regular numbers.
use isoclinic::root_data::{Family, LieType};

fn main() {
    for t in ["A4", "B3", "C4", "D5", "G2", "F4", "E6", "E7", "E8"] {
        let t: LieType = t.parse().unwrap();
        let elliptic: Vec<u64> = t.regular_numbers().into_iter().filter(|&m| t.is_elliptic_regular(m).unwrap()).collect();
        println!(
            "{}: h = {}, exponents {:?}, regular {:?}, elliptic {:?}",
            t,
            t.coxeter_number(),
            t.exponents(),
            t.regular_numbers(),
            elliptic
        );
    }
    println!("affine marks of E8: {:?}", LieType::exceptional(Family::E8).affine_diagram().marks);
}
