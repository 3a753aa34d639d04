use alloc::string::String;
use core::fmt;

/// Errors raised by the constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex or edge identifier was declared twice.
    DuplicateId(String),
    /// An edge endpoint is not a declared vertex.
    DanglingEdge {
        edge: String,
        vertex: String,
    },
    UnknownVertex(String),
    UnknownEdge(String),
    UnknownObject(String),
    UnknownMorphism(String),
    /// The cyclic family starts at one vertex.
    EmptyCycle,
    /// Two parts of a proposed closed cover miss part of the ambient graph.
    NotACover {
        missing: String,
    },
    /// A proposed sub-digraph contains an edge without its endpoints.
    NotASubgraph {
        edge: String,
    },
    /// Source and target of two morphisms do not match.
    Incomposable,
    /// A morphism violates its defining invariant.
    InvalidMorphism(String),
    /// `h∘(g∘f)` and `(h∘g)∘f` differ.
    NotAssociative {
        f: String,
        g: String,
        h: String,
    },
    MissingIdentity(String),
    /// `g∘f` is undefined, or lands outside `Hom(src f, tgt g)`.
    BadComposite {
        g: String,
        f: String,
    },
    /// A functor fails to preserve identities, endpoints or composition.
    NotAFunctor(String),
    /// A representation does not live over the expected graph or category.
    Incompatible(String),
    EdgeNotFound(String),
    /// An excision site whose cut vertices do not have the required valence.
    InvalidSite(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateId(id) => write!(f, "identifier `{id}` declared twice"),
            Error::DanglingEdge { edge, vertex } => {
                write!(f, "edge `{edge}` refers to undeclared vertex `{vertex}`")
            }
            Error::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            Error::UnknownEdge(e) => write!(f, "unknown edge `{e}`"),
            Error::UnknownObject(x) => write!(f, "unknown object `{x}`"),
            Error::UnknownMorphism(m) => write!(f, "unknown morphism `{m}`"),
            Error::EmptyCycle => write!(f, "the cyclic graph needs at least one vertex"),
            Error::NotACover { missing } => {
                write!(f, "not a cover: `{missing}` is in neither part")
            }
            Error::NotASubgraph { edge } => {
                write!(f, "edge `{edge}` is included without one of its endpoints")
            }
            Error::Incomposable => write!(f, "morphisms are not composable"),
            Error::InvalidMorphism(why) => write!(f, "invalid morphism: {why}"),
            Error::NotAssociative { f: a, g, h } => {
                write!(f, "composition is not associative on ({h}, {g}, {a})")
            }
            Error::MissingIdentity(x) => write!(f, "object `{x}` has no two-sided identity"),
            Error::BadComposite { g, f: a } => write!(f, "bad or missing composite {g}∘{a}"),
            Error::NotAFunctor(why) => write!(f, "not a functor: {why}"),
            Error::Incompatible(why) => write!(f, "incompatible data: {why}"),
            Error::EdgeNotFound(e) => write!(f, "edge `{e}` not found"),
            Error::InvalidSite(why) => write!(f, "invalid excision site: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
