pub mod ackermann;
pub mod alternation;
pub mod l2;
pub mod lis;
pub mod reference;

pub use ackermann::{ackermann, ackermann_diag, alpha, default_cap, inverse_ackermann, AckValue};
pub use alternation::{
    block_sequence, contains_alternation, ds_max_length, find_alternation,
    max_alternation_free_subsequence, SearchBound, SymbolSequence,
};
pub use l2::{l2, l2_of, split_score, SplitScore};
pub use lis::{
    circular_monotone_positions, lds, lis, lis_positions, longest_circular_monotone,
    random_permutation, random_permutation_with, Patience, Permutation,
};
