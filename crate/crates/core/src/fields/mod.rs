//! Exact arithmetic over ℚ and quadratic fields ℚ(√d): square classes,
//! Hilbert symbols and the norm-group decision.

pub mod hilbert;
pub mod norm;
pub mod quad;
pub mod rat;
pub mod square_class;

pub use hilbert::{hilbert_symbol, relevant_places, Place};
pub use norm::{bounded_rationals, find_norm_witness, is_norm, is_norm_oracle, norm_report, NormReport};
pub use quad::{QuadElem, QuadField};
pub use rat::{format_rat, int, parse_rat, rat, rat_sqrt, Rat};
pub use square_class::{squarefree_part, SquareClass};
