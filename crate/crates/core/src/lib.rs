//! Linear complexity of periodic binary sequences.
//!
//! A sequence of period `N` is represented by one period as a
//! [`CyclicSeq`]. Its linear complexity is the degree of its minimal
//! polynomial, the least-degree `f` over GF(2) with `f(E) s = 0` where `E`
//! is the left shift. [`solve`] picks an algorithm from the shape of `N`
//! and reports the result together with a bit-operation count.
//!
//! ```
//! use lincomplex::{solve, CyclicSeq};
//!
//! let s: CyclicSeq = "10011010".parse().unwrap();
//! let r = solve(&s);
//! assert_eq!(r.complexity, 7);
//! assert_eq!(r.min_poly.to_string(), "x^7+x^6+x^5+x^4+x^3+x^2+x+1");
//! ```

mod bits;
pub mod cyclicseq;
pub mod error;
pub mod gf2poly;
pub mod lincomplex;
pub mod oracle;

pub use cyclicseq::{CyclicSeq, OpMeter};
pub use error::{Error, Result};
pub use gf2poly::{factor_xn_minus_1, Factor, Factorization, Poly2};
pub use lincomplex::{choose, solve, AlgorithmChoice};
pub use oracle::{berlekamp_massey, gcd_method, AlgorithmTag, LcResult};
