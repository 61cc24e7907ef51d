//! Canonical JSON encoding of [`OperatorPolynomial`].
//!
//! The document is an array of
//! `{"chi_order":k,"exponents":[p,q,r,s,t,u],"coeff":{"num_re":..,"den_re":..,"num_im":..,"den_im":..}}`
//! records in canonical term order, one record per line. Numerators and
//! denominators are exact integers of any size, fractions are reduced and
//! denominators positive, so equal polynomials encode to identical bytes.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;

use super::monomial::BosonMonomial;
use super::polynomial::{OperatorPolynomial, TermKey};
use crate::error::FormatError;
use crate::scalar::GaussianRational;

#[derive(Deserialize)]
struct TermRecord {
    chi_order: u32,
    exponents: [u32; 6],
    coeff: CoeffRecord,
}

#[derive(Deserialize)]
struct CoeffRecord {
    num_re: serde_json::Number,
    den_re: serde_json::Number,
    num_im: serde_json::Number,
    den_im: serde_json::Number,
}

fn big(n: &serde_json::Number) -> Result<BigInt, FormatError> {
    BigInt::from_str(&n.to_string()).map_err(|_| FormatError::NotAnInteger(n.to_string()))
}

fn fraction(num: &serde_json::Number, den: &serde_json::Number) -> Result<BigRational, FormatError> {
    let den = big(den)?;
    if den.is_zero() {
        return Err(FormatError::ZeroDenominator);
    }
    Ok(BigRational::new(big(num)?, den))
}

pub fn to_json(p: &OperatorPolynomial) -> String {
    let mut out = String::from("[\n");
    let n = p.len();
    for (i, (k, c)) in p.iter().enumerate() {
        let e = k.monomial.exponents();
        out.push_str(&format!(
            "{{\"chi_order\":{},\"exponents\":[{},{},{},{},{},{}],\"coeff\":{{\"num_re\":{},\"den_re\":{},\"num_im\":{},\"den_im\":{}}}}}",
            k.order,
            e[0],
            e[1],
            e[2],
            e[3],
            e[4],
            e[5],
            c.re.numer(),
            c.re.denom(),
            c.im.numer(),
            c.im.denom()
        ));
        out.push_str(if i + 1 < n { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}

/// Parse a polynomial document. Duplicate keys are rejected rather than summed.
pub fn from_json(text: &str) -> Result<OperatorPolynomial, FormatError> {
    let records: Vec<TermRecord> = serde_json::from_str(text)?;
    let mut p = OperatorPolynomial::zero();
    let mut seen = std::collections::HashSet::new();
    for r in records {
        let key = TermKey { order: r.chi_order, monomial: BosonMonomial::new(r.exponents) };
        if !seen.insert(key) {
            return Err(FormatError::DuplicateTerm(format!("χ^{} {}", key.order, key.monomial)));
        }
        let c = GaussianRational::new(fraction(&r.coeff.num_re, &r.coeff.den_re)?, fraction(&r.coeff.num_im, &r.coeff.den_im)?);
        p.add_term(key, c);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::heisenberg;
    use crate::algebra::Mode;

    #[test]
    fn encodes_first_order_signal() {
        let text = to_json(&heisenberg(Mode::A, 1).unwrap());
        assert_eq!(
            text,
            "[\n{\"chi_order\":0,\"exponents\":[0,1,0,0,0,0],\"coeff\":{\"num_re\":1,\"den_re\":1,\"num_im\":0,\"den_im\":1}},\n\
             {\"chi_order\":1,\"exponents\":[0,0,1,0,0,1],\"coeff\":{\"num_re\":0,\"den_re\":1,\"num_im\":-1,\"den_im\":1}}\n]\n"
        );
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(
            from_json(r#"[{"chi_order":0,"exponents":[0,1,0,0,0,0],"coeff":{"num_re":1,"den_re":0,"num_im":0,"den_im":1}}]"#),
            Err(FormatError::ZeroDenominator)
        ));
        let dup = r#"[{"chi_order":0,"exponents":[0,1,0,0,0,0],"coeff":{"num_re":1,"den_re":1,"num_im":0,"den_im":1}},
                      {"chi_order":0,"exponents":[0,1,0,0,0,0],"coeff":{"num_re":1,"den_re":1,"num_im":0,"den_im":1}}]"#;
        assert!(matches!(from_json(dup), Err(FormatError::DuplicateTerm(_))));
        assert!(from_json("{}").is_err());
    }

    #[test]
    fn huge_integers_survive() {
        let text = r#"[{"chi_order":15,"exponents":[0,1,0,0,7,7],"coeff":{"num_re":123456789012345678901234567890,"den_re":1307674368000,"num_im":0,"den_im":1}}]"#;
        let p = from_json(text).unwrap();
        assert_eq!(from_json(&to_json(&p)).unwrap(), p);
    }
}
