pub mod checks;
pub mod cli;
pub mod coxeter;
pub mod exceptional;
pub mod levi;
pub mod linalg;
pub mod orbits;
pub mod partitions;
pub mod rigidity;
pub mod root_data;
pub mod skeleton;
pub mod solver;
pub mod tables;
