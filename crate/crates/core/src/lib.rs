pub mod algebra;
pub mod error;
pub mod field;
pub mod io;
pub mod linalg;
pub mod report;
pub mod tables;
pub mod tensor;
pub mod representation;
pub mod unified;
pub mod extension;
pub mod matched;
pub mod bialgebra;
pub mod ybe;
