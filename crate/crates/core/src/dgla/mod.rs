//! The DGLA V, its bar complex, homology and persistence.

pub mod bar;
pub mod generator;
pub mod homology;
pub mod order;

pub use bar::{bar_differential, bar_differential_word, BarElement, Word};
pub use generator::{bracket, differential, from_barred, to_barred, Element, Family, Generator};
pub use homology::{barcode, homology_rank, Bar, Barcode, FilteredDegree, Space, Truncation};
pub use order::{is_maximal_generator, partial_order_leq};
