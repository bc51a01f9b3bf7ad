//! Bijections between the combinatorial models: tableaux, the
//! associativity map and the commuter.

pub mod associate;
pub mod commute;
pub mod tableau;

pub use associate::{associate, associate_functional, associate_inverse};
pub use commute::{
    com_prime, commute, commute_sp, gamma_array, hk_wall_h, reversed_second_block, rho1,
    rho2_prime, to_antistandard, to_standard,
};
pub use tableau::{
    dtight_to_ssyt, is_yamanouchi, lr_tableau_to_pair, pair_to_lr_tableau, ssyt_to_dtight,
    LrTableau, Ssyt,
};
