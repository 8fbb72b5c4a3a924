//! Regenerates a table as CSV and runs the cross-validation sweeps.
use isoclinic::checks;
use isoclinic::root_data::Family;
use isoclinic::tables::{render, TableName, TableRequest};

fn main() {
    print!("{}", render(&TableRequest::new(TableName::ClCox, Some(Family::B), 4)).unwrap());
    print!("{}", render(&TableRequest::new(TableName::DsSolnF4, None, 0)).unwrap());
    for c in checks::run_all() {
        println!("{}", c.line());
    }
}
