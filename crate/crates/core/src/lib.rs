//! Exact arithmetic in Frobenius nilCoxeter, polynomial and nilHecke
//! superalgebras built over a finite-dimensional Frobenius superalgebra `A`.
//!
//! All coefficients are exact rationals. Every algebra is represented on an
//! explicit basis, and every product is returned in normal form:
//!
//! * [`nilcoxeter`]: `N_n(A)`, basis `a u_w`
//! * [`polynomial`]: `P_n(A)`, basis `a x^k`, with the divided differences `∂_i`
//! * [`nilhecke`]: `NH_n(A)`, basis `a x^k u_w`
//! * [`cliffordodd`]: `ONH_n ⊗ Cl^{⊗n}` and its isomorphism with `NH_n(Cl)`
//!
//! ```
//! use frobnil::frobenius::{Builtin, FrobeniusSuperalgebra};
//! use frobnil::nilhecke::NilHecke;
//!
//! let cl = FrobeniusSuperalgebra::builtin(Builtin::CliffordOdd);
//! let nh = NilHecke::new(cl, 2).unwrap();
//! let e = nh.mul(&nh.u(1), &nh.x(2));
//! assert_eq!(nh.format(&e), "x1*u1 + c[1] - c[2]");
//! ```

mod error;

pub mod cliffordodd;
pub mod frobenius;
pub mod linear;
pub mod nilcoxeter;
pub mod nilhecke;
pub mod polynomial;
pub mod presentation;
pub mod report;
pub mod suites;
pub mod symgroup;
pub mod textio;

pub use error::Error;
