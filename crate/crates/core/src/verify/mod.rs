//! Net, sequence, Riemann–Roch block and discrepancy verification, and the
//! leading discrepancy constants.

mod bounds;
mod discrepancy;
mod lemma;
mod net;

pub use bounds::{
    bound_comparison, c_fk, c_tez, c_tez_upper, ratio_lower_bound, tez_bound_is_better,
    BoundsReport,
};
pub use discrepancy::{
    star_discrepancy, star_discrepancy_1d, star_discrepancy_exact, star_discrepancy_grid,
    MAX_DISCREPANCY_DIMENSION,
};
pub use lemma::{lemma1_check, Lemma1Report, MAX_LEMMA_BLOCK};
pub use net::{
    admissible_depths, check_net, check_sequence, minimal_u, t_from_u, BlockReport, IntervalShape,
    NetReport, SequenceReport, Witness, MAX_NET_POINTS,
};
