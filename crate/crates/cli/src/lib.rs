//! Library portion of the command-line tool, exposed so integration tests
//! can drive the experiments without spawning processes.

pub mod app;
pub mod experiments;
pub mod shape_arg;

pub use app::reference_point;
