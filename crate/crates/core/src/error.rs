use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A closed-form route is singular at this input; the caller should use
    /// another route (the polynomial oracle is defined everywhere).
    #[error("route `{route}` unavailable: {locus}")]
    RouteUnavailable { route: &'static str, locus: String },

    /// An integrand produced NaN or infinity at a quadrature node.
    #[error("non-finite integrand value at node {index} (theta={theta}, phi={phi}, psi={psi})")]
    NonFinite {
        index: usize,
        theta: f64,
        phi: f64,
        psi: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn unavailable(route: &'static str, locus: impl Into<String>) -> Self {
        Error::RouteUnavailable {
            route,
            locus: locus.into(),
        }
    }
}
