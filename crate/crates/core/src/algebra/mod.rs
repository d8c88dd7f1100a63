//! PBW normal forms and the multiplication kernel.

mod element;
mod kernel;
mod monomial;
mod params;

pub use element::AlgebraElement;
pub use kernel::{Algebra, Strategy};
pub use monomial::{Generator, Parity, PbwMonomial};
pub use params::Params;
