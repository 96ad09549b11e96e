//! Exact computation around chromatic quasisymmetric functions of unit
//! interval graphs.
//!
//! The crate computes the function `X(e;q)` of a unit interval graph by
//! brute-force proper-coloring enumeration, converts it exactly to the
//! elementary symmetric basis, runs a growth process on standard Young
//! tableaux whose transition weights reproduce the same coefficients as
//! probabilities over `Q(q)`, and ships executable verification suites for
//! the identities connecting the two sides.
//!
//! - [`qalg`]: exact arithmetic in `Z[q]` and `Q(q)`, q-integers and
//!   q-factorials.
//! - [`tableaux`]: partitions, compositions and standard Young tableaux.
//! - [`graphs`]: area sequences, Hessenberg functions, the induced oriented
//!   graphs and the three-term relation triples.
//! - [`csf`]: the coloring generating function and its basis conversions.
//! - [`growth`]: color sequences, transition weights and the tableau growth
//!   process.
//! - [`verify`]: subspace membership and the verification suites.
//!
//! ```
//! use csq::graphs::AreaSequence;
//! use csq::growth::shape_probability_from_expansion;
//! use csq::tableaux::Partition;
//! use csq::{elementary_expansion, growth_distribution, monomial_expansion};
//!
//! // The path graph on three vertices, encoded by its area sequence.
//! let e: AreaSequence = "0,0,1".parse()?;
//! let table = elementary_expansion(&monomial_expansion(&e))?;
//! assert_eq!(table.coefficient(&"2,1".parse()?).to_string(), "q");
//! assert_eq!(table.coefficient(&"3".parse()?).to_string(), "1+q+q^2");
//!
//! // Growing tableaux box by box along e reproduces the same coefficients
//! // as an exact probability distribution on shapes.
//! let dist = growth_distribution(&e);
//! assert!(dist.total_mass().is_one());
//! for shape in Partition::all(3) {
//!     assert_eq!(
//!         dist.shape_mass(&shape),
//!         shape_probability_from_expansion(&e, &shape, &table),
//!     );
//! }
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod csf;
pub mod graphs;
pub mod growth;
mod linalg;
pub mod qalg;
pub mod tableaux;
pub mod verify;

pub use csf::{elementary_expansion, monomial_expansion, Basis, ExpansionTable};
pub use graphs::{
    modular_triples, AreaSequence, HessenbergFunction, ModularTriple, OrientedGraph, TripleKind,
};
pub use growth::{growth_distribution, ColorSequence, TableauDistribution};
pub use qalg::{qfact, qint, QPoly, QRat};
pub use tableaux::{standard_tableaux, standard_tableaux_of_size, Composition, Partition, Tableau};
pub use verify::{SampleMode, SubspaceSpec, VerificationReport};
