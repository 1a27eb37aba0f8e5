//! Chromogeometry: planar rational trigonometry in three metrics.
//!
//! Blue is the Euclidean form `x^2 + y^2`; red `x^2 - y^2` and green `2xy`
//! are relativistic. Everything is computed exactly over the rationals or a
//! prime field `F_p` (`p` odd): quadrances and spreads, the laws of rational
//! trigonometry, the coloured orthocenters, circumcenters and nine-point
//! centers with their Euler lines, and the coloured circles through them.
//!
//! ```
//! use chromogeometry::{centers, Colour, FieldSpec, Triangle};
//!
//! let t = Triangle::from_i64([(0, 0), (6, 1), (2, 3)], FieldSpec::RATIONAL).unwrap();
//! assert_eq!(centers::orthocenter(Colour::Blue, &t).to_string(), "[15/8, 15/4]");
//! ```

pub mod affine;
pub mod centers;
pub mod circle;
pub mod error;
pub mod laws;
pub mod metric;
pub mod scalar;
pub mod verify;

pub use affine::{BracketSet, Line, Point, Triangle};
pub use centers::{CenterSet, ColourCenters, OmegaTriangle};
pub use circle::{Circle, IncidenceCheck, Outcome};
pub use error::{Error, Result};
pub use laws::TriangleMeasures;
pub use metric::{Colour, FootCoefficients};
pub use scalar::{FieldSpec, Scalar};
pub use verify::{CheckFamily, Record, Verdict};
