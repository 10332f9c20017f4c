pub mod exactlin;
pub mod fixtures;
pub mod homology;
pub mod hopf;
pub mod liealg;
pub mod lincomb;
pub mod smash;
pub mod uea;
