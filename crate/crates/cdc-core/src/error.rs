use core::fmt;

/// Errors for graph construction and the operations that validate their
/// preconditions. Violations of structural facts that the constructions
/// guarantee internally are bugs and panic instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An endpoint index is not a vertex of the graph.
    EndpointOutOfRange { edge: (usize, usize), n: usize },
    /// A loop was supplied to a graph built without loop support.
    LoopNotAllowed { vertex: usize },
    /// Two edge sets (or cycles) do not live on the same parent graph.
    ParentMismatch,
    /// An edge id does not exist in the parent graph.
    UnknownEdge { edge: usize, m: usize },
    /// The edge set violates the invariant of the requested type
    /// (2-regular connected for cycles, all-even for even subgraphs).
    NotACycle,
    NotEven,
    /// Face tracing found a face count that contradicts Euler's formula,
    /// so the rotation system is not a sphere embedding.
    NotGenusZero { vertices: usize, edges: usize, faces: usize },
    /// The operand graph must be connected.
    Disconnected,
    /// Vertex degree differs from what the operation requires.
    WrongDegree { vertex: usize, degree: usize, expected: usize },
    /// A parameter is outside the documented range.
    ParameterRange(&'static str),
    /// The operation does not apply to this input (not an error of the
    /// input itself); e.g. a dual neighbourhood that is not induced, or
    /// the excluded exponent in the antiprism count bound.
    NotApplicable(&'static str),
    /// A rotation system was rejected before face tracing: some edge end
    /// is missing or listed twice.
    BadRotation(&'static str),
    /// A cycle passed to verification does not belong to the graph.
    ForeignCycle,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EndpointOutOfRange { edge, n } => {
                write!(f, "edge ({}, {}) has an endpoint outside 0..{}", edge.0, edge.1, n)
            }
            Error::LoopNotAllowed { vertex } => {
                write!(f, "loop at vertex {vertex} in a graph built without loops")
            }
            Error::ParentMismatch => write!(f, "edge sets belong to different parent graphs"),
            Error::UnknownEdge { edge, m } => write!(f, "edge id {edge} out of range 0..{m}"),
            Error::NotACycle => write!(f, "edge set is not a connected 2-regular subgraph"),
            Error::NotEven => write!(f, "edge set has a vertex of odd degree"),
            Error::NotGenusZero { vertices, edges, faces } => write!(
                f,
                "rotation system is not planar: {vertices} - {edges} + {faces} != 2"
            ),
            Error::Disconnected => write!(f, "graph must be connected"),
            Error::WrongDegree { vertex, degree, expected } => {
                write!(f, "vertex {vertex} has degree {degree}, expected {expected}")
            }
            Error::ParameterRange(what) => write!(f, "parameter out of range: {what}"),
            Error::NotApplicable(what) => write!(f, "not applicable: {what}"),
            Error::BadRotation(what) => write!(f, "invalid rotation system: {what}"),
            Error::ForeignCycle => write!(f, "cycle does not belong to this graph"),
        }
    }
}

#[cfg(any(test, feature = "std"))]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
