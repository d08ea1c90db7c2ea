pub mod base;
pub mod circle;
pub mod error;
pub mod expr;
pub mod fibre;
pub mod system;
pub mod estimate;
pub mod mean;
pub mod config;
pub mod cli;
