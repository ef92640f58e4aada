pub mod abacus;
pub mod error;
pub mod extensions;
pub mod laurent;
pub mod multiset;
pub mod partition;
pub mod roots;
pub mod scan;
pub mod schur;
pub mod weight;

pub use error::{Error, Result};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    pub mod partitions {}
    #[doc = include_str!("../../../book/src/abacus.md")]
    pub mod abacus {}
    #[doc = include_str!("../../../book/src/weight.md")]
    pub mod weight {}
    #[doc = include_str!("../../../book/src/schur.md")]
    pub mod schur {}
    #[doc = include_str!("../../../book/src/extensions.md")]
    pub mod extensions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
