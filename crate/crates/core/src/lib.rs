//! Branched covers of the sphere over three points: enumeration of
//! constellations, strong and weak Hurwitz numbers, closed-form counts for the
//! odd-degree family `[2,...,2,1], [2,...,2,2h+1], pi`, a character-theoretic
//! tuple-count oracle and a realizability scanner.

pub mod cache;
pub mod characters;
pub mod cli;
pub mod constellation;
pub mod dessin;
pub mod enumerate;
pub mod equivalence;
pub mod error;
pub mod formulas;
pub mod partition;
pub mod perm;
pub mod report;
pub mod scanner;
pub mod text;
pub mod union_find;

pub use characters::{frobenius_tuple_count, CharacterTable};
pub use constellation::{genus_of, Constellation};
pub use enumerate::{count_product_one_triples, enumerate_strong, iterate_class, transitive_hits, StrongClassSet};
pub use equivalence::{apply_move, duality_partner, weak_count, Move, MoveWord, WeakClassSet};
pub use error::{Error, Result};
pub use partition::{
    heart_datum, is_compatible, partitions_of, zieve_status, BranchDatum, HeartParams, Partition,
    ZieveStatus,
};
pub use perm::{is_transitive, Permutation};
