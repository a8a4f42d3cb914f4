use std::collections::HashSet;
use std::sync::Arc;

use super::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// `k[vars]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        field: FieldSpec,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a ring needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::InvalidArgument(format!("bad variable name `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{v}`")));
            }
        }
        order.validate(vars.len())?;
        Ok(Arc::new(PolyRing { vars, field, order }))
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        PolyRing::new(self.vars.iter().cloned(), self.field, order)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.arity())
    }

    pub fn scalar(&self, v: i64) -> Scalar {
        self.field.from_i64(v)
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        Polynomial::monomial(self, self.field.one(), Monomial::var(self.arity(), i, 1))
    }

    /// The variable called `name`.
    pub fn var_named(self: &Arc<Self>, name: &str) -> Result<Polynomial> {
        let i = self
            .var_index(name)
            .ok_or_else(|| Error::InvalidArgument(format!("no variable `{name}` in ring")))?;
        Ok(self.var(i))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_rings() {
        let f = FieldSpec::Rationals;
        assert!(PolyRing::new(Vec::<String>::new(), f, MonomialOrder::Lex).is_err());
        assert!(PolyRing::new(["x", "x"], f, MonomialOrder::Lex).is_err());
        assert!(PolyRing::new(["x", "2y"], f, MonomialOrder::Lex).is_err());
        assert!(PolyRing::new(["x", "y"], f, MonomialOrder::BlockElim(2)).is_err());
        assert!(PolyRing::new(["x", "y"], f, MonomialOrder::BlockElim(1)).is_ok());
    }
}
