//! Indexing objects: partitions, cells, ribbons, Dyck paths, tableaux and words.

pub mod dyck;
pub mod partition;
pub mod shape;
pub mod tableau;
pub mod word;

pub use dyck::{cells_from_dyck, dyck_from_cells, DyckPath, UnicellularTuple};
pub use partition::{format_cells, parse_cells, partitions, Cell, CellStats, Partition};
pub use shape::{reverse_row_descents, ribbon_tuple, Ribbon, ShapeTuple, SkewShape};
pub use tableau::{enumerate_fillings, inv_count, standard_tableaux, syt_maj, syt_maj_gf, Filling};
pub use word::{enumerate_words, enumerate_words_starting, Word};
