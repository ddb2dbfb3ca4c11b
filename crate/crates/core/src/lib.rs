pub mod barnes_integral;
pub mod complex_sf;
pub mod coxeter_d6;
pub mod error;
pub mod group_core;
pub mod hyper_eval;
pub mod mk_cosets;
pub mod relation_engine;
pub mod sampler;
pub mod suites;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hyperplane.md")]
    mod hyperplane {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/labels.md")]
    mod labels {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/barnes.md")]
    mod barnes {}
    #[doc = include_str!("../../../book/src/relations.md")]
    mod relations {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
