use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::expr::parser::{Expr, Func};
use crate::multivector::{vector_kvector_split, Multivector};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// Evaluates a parsed expression in `sig` over the scalar type `S`.
pub fn eval<S: Scalar>(ast: &Expr, sig: Signature) -> Result<Multivector<S>> {
    let sig = sig.with_field(S::FIELD);
    Evaluator { sig }.eval(ast)
}

struct Evaluator {
    sig: Signature,
}

/// Left operand a vector and right operand homogeneous: the graded split applies.
fn splits<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>) -> bool {
    a.homogeneous_grade() == Some(1) && (b.is_zero() || b.homogeneous_grade().is_some())
}

impl Evaluator {
    fn eval<S: Scalar>(&self, ast: &Expr) -> Result<Multivector<S>> {
        Ok(match ast {
            Expr::Scalar(r) => Multivector::scalar(self.sig, S::from_rational(r)),
            Expr::Imaginary => {
                let i = S::imaginary_unit().ok_or_else(|| {
                    Error::Eval("the imaginary unit needs a complex algebra".into())
                })?;
                Multivector::scalar(self.sig, i)
            }
            Expr::BladeLit { e, f } => {
                Multivector::from_blade(self.sig, Blade::from_indices(&self.sig, e, f)?, S::one())
            }
            Expr::Neg(x) => -self.eval::<S>(x)?,
            Expr::Add(a, b) => self.eval::<S>(a)?.try_add(&self.eval(b)?)?,
            Expr::Sub(a, b) => self.eval::<S>(a)?.try_sub(&self.eval(b)?)?,
            Expr::Mul(a, b) => self.eval::<S>(a)?.geometric_product(&self.eval(b)?)?,
            Expr::Wedge(a, b) => {
                let (a, b) = (self.eval::<S>(a)?, self.eval::<S>(b)?);
                if splits(&a, &b) {
                    vector_kvector_split(&a, &b)?.1
                } else {
                    a.antisymmetric_part(&b)?
                }
            }
            Expr::Dot(a, b) => {
                let (a, b) = (self.eval::<S>(a)?, self.eval::<S>(b)?);
                if splits(&a, &b) {
                    vector_kvector_split(&a, &b)?.0
                } else {
                    a.symmetric_part(&b)?
                }
            }
            Expr::Grade(x, k) => self.eval::<S>(x)?.grade_project(*k)?,
            Expr::Call(func, args) => {
                let x = self.eval::<S>(&args[0])?;
                match func {
                    Func::Rev => x.reverse(),
                    Func::Inv => x.inversion(),
                    Func::Conj => x.mixed(),
                    Func::Mag => {
                        let m = x.exact_magnitude().ok_or_else(|| {
                            Error::Eval(format!(
                                "magnitude {} is not exactly representable",
                                x.magnitude()
                            ))
                        })?;
                        Multivector::scalar(self.sig, m)
                    }
                    Func::Sp => {
                        let y = self.eval::<S>(&args[1])?;
                        Multivector::scalar(self.sig, x.scalar_product(&y)?)
                    }
                    Func::Grade => unreachable!("grade is parsed into Expr::Grade"),
                }
            }
        })
    }
}
