//! Box diagrams and the combinatorial objects indexed by them: nonattacking
//! fillings, queue tableaux, pipe dreams, alcove walks and column strict
//! tableaux.

mod counts;
mod cst;
mod fillings;
mod stats;
mod walks;

pub use counts::{
    count, count_aw, count_c, count_cst, count_naf, count_r, count_t, naf_special_counts, orbit_size,
    qt_special_counts, CountKind, QtShape,
};
pub use cst::{
    column_strict_tableaux, cst_expand, cst_expand_poly, is_horizontal_strip, psi_strip, ColumnStrictTableau,
};
pub use fillings::{enumerate_fillings, pipedream_convert, pipedream_invert, Filling, FillingKind, PipeDream};
pub use stats::{
    attack, box_stats, boxes_in_cylindrical_order, conj_at, conjugate, narm_formula, narm_set, nleg_formula,
    nleg_set, u_stat, BoxPos, BoxStat, BoxStats, Diagram,
};
pub use walks::{enumerate_walks, rho, walk_geometry, AlcoveWalk, PathRealization, Segment, SegmentKind, Step};
