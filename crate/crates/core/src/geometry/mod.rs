//! Lines and points in the dual and double planes.
//!
//! A point `(x, y)` is identified with `(x₁, x₂, y₁, y₂) ∈ ℝ⁴`. A non-degenerate
//! line is then a 2-flat and two lines meet in the empty set, a point, a line
//! of ℝ⁴, or coincide. [`classify_intersection`] decides which with closed
//! formulas; [`r4_oracle`] does the same by elimination and serves as the
//! reference.

pub mod constructions;
pub mod family;
pub mod flat;
pub mod incidence;
pub mod intersect;
pub mod line;
pub mod partition;
pub mod rich;

pub use family::{detect_families, family_hyperplane, LineFamily};
pub use flat::AffineFlat4;
pub use incidence::{count_incidences, incidence_report, IncidenceReport, PointIndex};
pub use intersect::{classify_intersection, r4_oracle, FamilySign, IntersectionKind};
pub use line::{incident, Line2, LineForm, Point2};
pub use partition::{line_multiplicity, partition_multiplicity_one};
pub use rich::{rich_points, RealLine};
