//! Binary quadratic forms of nested discriminants.
//!
//! Integer forms `ax^2 + bxy + cy^2` under the right action of integer 2x2
//! matrices, Gauss reduction and class enumeration for definite forms, and
//! the passage between discriminants `D` and `D f^2` for an odd prime `f`:
//! lift matrices `R_g`, descent, semi-equivalence and fibers.
//!
//! ```
//! use nestforms::{nesting, Form};
//!
//! let big_q: Form = "(1, 0, 9)".parse().unwrap();
//! let r = nesting::descend(&big_q, 3).unwrap();
//! assert_eq!(r.base.to_string(), "(1, 0, 1)");
//! assert_eq!(r.base.act(&r.lift).unwrap(), big_q);
//! ```

pub mod arith;
pub mod error;
pub mod form;
pub mod nesting;
pub mod oracle;
pub mod par;
pub mod reduction;
pub mod sweep;

pub use arith::{Discriminant, Int};
pub use error::{Error, Result};
pub use form::{Form, IntMatrix2};
pub use nesting::{DescentResult, FiberClass, LiftIndex};
pub use par::Execution;
pub use reduction::{ClassSet, EquivWitness, ReducedForm};
