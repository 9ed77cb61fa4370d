//! Characters of finite-dimensional simple modules over osp(m,2n) via weight
//! diagrams, the labeled move graph and Euler characteristics.

pub mod charlib;
pub mod diagrams;
pub mod error;
pub mod kdengine;
pub mod matrix;
pub mod moves;
pub mod oracle;
pub mod poly;
pub mod rootdata;
pub mod text;

pub use diagrams::{Cell, Diagram, Direction, Sign};
pub use error::{Error, Result};
pub use kdengine::Block;
pub use matrix::IntMatrix;
pub use moves::{MoveEdge, MoveKind};
pub use oracle::Oracle;
pub use poly::{LaurentPoly, ZPoly};
pub use rootdata::{Algebra, Family, Reduced, Weight};
