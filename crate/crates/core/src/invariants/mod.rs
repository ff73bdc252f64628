//! Structure coefficients, capacities and embedding criteria.

pub mod capacity;
pub mod obstruct;
pub mod polydisk;
pub mod rseep;
pub mod sd;
pub mod table;

pub use capacity::{gb_capacity_ellipsoid, gb_capacity_with, spectral_invariant, CapacityWord};
pub use obstruct::{obstruct_ellipsoid, ObstructionVerdict, ScanBounds, ScanMode};
pub use polydisk::{ball_normalizer, nonzero_coeff_polydisk, PolydiskVariant};
pub use rseep::{at_least_tau4, is_maximal_short_orbit, rseep_check, RseepVerdict};
pub use sd::{s_d, s_d_with, solve_k, structure_coefficient, structure_coefficient_with};
pub use table::{evaluate_rows, stable_sequence, table_inputs, TableEntry, TABLE_ROWS};
