use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Canonical text: `1 + 2*e1 - 3*f12 + 4*e12f3`, terms in standard-basis order.
pub fn format<S: Scalar>(g: &Multivector<S>) -> String {
    let sig = g.sig();
    let mut out = String::new();
    for (i, (blade, coeff)) in g.terms().enumerate() {
        let (negative, text) = coeff.sign_and_text();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&text);
        if !blade.is_scalar() {
            out.push('*');
            out.push_str(&blade.literal(&sig));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
