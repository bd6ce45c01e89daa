//! Finite commutative monoids: congruences, varieties, zigzags, pushouts and
//! dominions, with an exhaustive law-checking harness over small monoids.

pub mod enumeration;
pub mod laws;
pub mod monoid;
pub mod morphisms;
pub mod pushout;
pub mod text;
pub mod varieties;
pub mod zigzag;

pub use enumeration::{enumerate_monoids, EnumerationConfig, EnumerationError};
pub use laws::{LawError, LawReport};
pub use monoid::{ElementClass, ElementId, FiniteMonoid, MonoidError};
pub use morphisms::{Congruence, Homomorphism, MorphismError, SubmonoidEmbedding};
pub use pushout::{DominionMethod, DominionReport, PushoutResult};
pub use text::{parse_monoid, render_monoid, ParseError};
pub use varieties::VarietySignature;
pub use zigzag::{ZigzagError, ZigzagWitness};
