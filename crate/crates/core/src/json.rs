//! Polynomial JSON: `{"vars": [...], "terms": [{"e": [...], "c": "n/d"}]}`
//! with terms in canonical order.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::PolyError;
use crate::monomial::{Exp, Monomial, Vars};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<Exp>,
    pub c: String,
}

impl<C: Scalar> From<&MultiPoly<C>> for PolyJson {
    fn from(p: &MultiPoly<C>) -> Self {
        PolyJson {
            vars: p.vars().names().to_vec(),
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| TermJson {
                    e: m.exps().to_vec(),
                    c: c.to_coeff_string(),
                })
                .collect(),
        }
    }
}

impl PolyJson {
    pub fn to_poly<C: Scalar>(&self, domain: &C::Domain) -> Result<MultiPoly<C>, PolyError> {
        let vars = Vars::new(&self.vars);
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.e.len() != vars.len() {
                return Err(PolyError::Domain("exponent vector length".into()));
            }
            terms.push((Monomial::from_exps(&t.e), C::parse_coeff(domain, &t.c)?));
        }
        Ok(MultiPoly::from_terms(&vars, domain, terms))
    }
}

pub fn poly_to_value<C: Scalar>(p: &MultiPoly<C>) -> Value {
    serde_json::to_value(PolyJson::from(p)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fp, Rational};

    #[test]
    fn rational_roundtrip() {
        let v = Vars::new(&["x", "y"]);
        let g = MultiPoly::<Rational>::gens(&v, &());
        let p = &(&g[0] * &g[0]).scale(&Rational::new(-3, 4)) + &g[1];
        let j = PolyJson::from(&p);
        assert_eq!(j.terms[0].c, "-3/4");
        assert_eq!(j.terms[0].e, vec![2, 0]);
        let text = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_poly::<Rational>(&()).unwrap(), p);
    }

    #[test]
    fn prime_field_coefficients_are_decimal() {
        let v = Vars::new(&["x"]);
        let p = MultiPoly::<Fp>::var(&v, &101, 0).scale(&Fp::new(-1, 101));
        let j = PolyJson::from(&p);
        assert_eq!(j.terms[0].c, "100");
        assert_eq!(j.to_poly::<Fp>(&101).unwrap(), p);
    }
}
