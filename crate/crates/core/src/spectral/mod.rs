//! Characteristic polynomials, numeric and certified spectra, the
//! clique-graph spectrum transfer and eigenvalue bounds.

mod bounds;
mod charpoly;
mod eigen;
mod poly;
mod spectrum;
mod transfer;

pub use bounds::{
    check_line_bound, degree_bounds, interlacing_bounds, line_graph_extremes, EigenBounds,
};
pub use charpoly::{
    berkowitz, char_poly_exact, char_poly_exact_with_limit, exact_limit, DEFAULT_EXACT_LIMIT,
};
pub use eigen::symmetric_eigenvalues;
pub use poly::Polynomial;
pub use spectrum::{
    certify_spectrum, group_eigenvalues, spectrum_exact, spectrum_numeric, Eigenvalue, Spectrum,
    DEFAULT_TOL,
};
pub use transfer::{
    clique_graph_order, predicted_clique_charpoly, predicted_clique_spectrum,
    predicted_clique_values,
};
