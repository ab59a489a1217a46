//! Syzygy ideal, minimal free resolution of the invariant ring over `S`,
//! Hilbert series and regularity data.

mod betti;
mod koszul;
mod schreyer;
mod syzygy;
mod tmodules;

pub use betti::{hilbert_series_from_betti, BettiEntry, BettiTable, HilbertData};
pub use koszul::koszul_betti;
pub use schreyer::{minimal_resolution, GradedMatrix, ResolutionData};
pub use syzygy::{minimal_generator_degrees, minimal_subset, presentation_ring, syzygy_ideal, SyzygyIdeal};
pub use tmodules::{first_syzygies_over_t, regularity_hilbert_ideal};
