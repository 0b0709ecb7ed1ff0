//! One module per subcommand.

pub mod census;
pub mod critical;
pub mod empirical;
pub mod ensemble;
pub mod generate;
pub mod rank;
pub mod simulate;
