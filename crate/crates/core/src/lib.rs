pub mod arrangement;
pub mod complex;
pub mod polyseries;
pub mod shelling;
pub mod graphmodels;
pub mod io;
pub mod identities;
pub mod cli;
