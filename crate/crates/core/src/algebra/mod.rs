//! Exact polynomial arithmetic over the rationals.

mod grading;
pub mod linalg;
mod monomial;
mod order;
mod polynomial;
mod ring;
mod series;
mod text;

pub use grading::{multidegree_of_polynomial, MultiGrading, PolyDegree};
pub use monomial::{minimalize, Monomial};
pub use order::TermOrder;
pub use polynomial::{variable_map, Polynomial, Term};
pub use ring::{Ring, Variable};
pub use series::TruncatedSeries;
pub use text::{
    format_monomial, format_polynomial, format_series, parse_expression, parse_polynomial, parse_series, Expr,
};

pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
