//! Exact Gröbner bases, Gröbner fans and characteristic varieties for almost
//! centralizing extensions of polynomial rings over the rationals.
//!
//! The Weyl algebra `A_n`, commutative polynomial rings and `U(sl_2)` ship as
//! ready-made presentations; other rings are given by their relation tables.

pub mod charvar;
pub mod error;
pub mod fan;
pub mod filtration;
pub mod groebner;
pub mod hilbert;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod polyhedral;
pub mod rees;
pub mod ring;

pub use charvar::{char_ideal, gk_dim, verify_component_bound, CharIdeal, ComponentReport, Verdict};
pub use error::{Error, Result};
pub use fan::{cone_of, enumerate_fan, walk, FanIdeal, GroebnerCone, GroebnerFan};
pub use filtration::{
    degree, initial_form, pr_contains, pr_halfspaces, pr_sample_positive, HalfspaceSystem,
    LinearForm, WeightVector,
};
pub use groebner::{
    buchberger, initial_ideal_order, initial_ideal_weight, normal_form, GbConfig, GroebnerBasis,
    Route,
};
pub use hilbert::{hilbert_series_monomial, quasi_poly_degree, HilbertSeries, QuasiPolynomial};
pub use monomial::MonomialIdeal;
pub use order::{BaseOrder, MonomialOrder};
pub use parse::{parse_ideal, parse_poly, parse_weight, ProblemFile};
pub use poly::{rat, rat_frac, Monomial, Poly, Rat};
pub use rees::{dehomogenize, homogenize, rees_presentation, ReesPresentation};
pub use ring::{multiply, normalize_word, validate_presentation, Multiplier, RingPresentation};
