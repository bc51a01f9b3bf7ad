pub mod array;
pub mod bijections;
pub mod condense;
pub mod error;
pub mod gen;
pub mod hive;
pub mod json;
pub mod lr;
pub mod octahedron;
pub mod scalar;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/arrays.md")]
    mod arrays {}
    #[doc = include_str!("../../../book/src/condensation.md")]
    mod condensation {}
    #[doc = include_str!("../../../book/src/hives.md")]
    mod hives {}
    #[doc = include_str!("../../../book/src/octahedron.md")]
    mod octahedron {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/lr.md")]
    mod lr {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
