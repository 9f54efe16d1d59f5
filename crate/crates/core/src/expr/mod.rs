//! Text surface for geometric numbers: parsing, evaluation and canonical
//! formatting.
//!
//! ```text
//! expr    := sum
//! sum     := dot (('+' | '-') dot)*
//! dot     := wedge ('|' wedge)*
//! wedge   := product ('^' product)*
//! product := unary ('*' unary)*
//! unary   := '-' unary | atom '†'*
//! atom    := number | blade | 'i' | call | '(' expr ')'
//! call    := ('rev' | 'inv' | 'conj' | 'mag') '(' expr ')'
//!          | 'sp' '(' expr ',' expr ')'
//!          | 'grade' '(' expr ',' integer ')'
//! number  := digits ('.' digits)? ('/' digits)?
//! blade   := 'e' index+ ('f' index+)? | 'f' index+
//! index   := digit | '[' digits ']'
//! ```

mod eval;
mod format;
mod lexer;
mod parser;

pub use eval::eval;
pub use format::format;
pub use parser::{parse, Expr, Func};

use crate::error::Result;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Signature;

/// Parses and evaluates in one step.
pub fn evaluate<S: Scalar>(text: &str, sig: Signature) -> Result<Multivector<S>> {
    eval(&parse(text, sig)?, sig)
}
