use std::fmt;

use super::{Field, Fq, GfError};

/// An element of `F_q` bundled with its field, for callers that cannot track
/// field handles themselves.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    field: Fq,
    value: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElem {
    pub fn new(field: &Fq, coeffs: &[u64]) -> Result<Self, GfError> {
        Ok(Self {
            field: field.clone(),
            value: field.from_coeffs(coeffs)?,
        })
    }

    pub fn from_packed(field: &Fq, value: u32) -> Result<Self, GfError> {
        if !field.contains(value) {
            return Err(GfError::CoefficientOutOfRange(value as u64));
        }
        Ok(Self {
            field: field.clone(),
            value,
        })
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn packed(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.coeffs(self.value)
    }

    pub fn absolute_trace(&self) -> u64 {
        self.field.absolute_trace(&self.value)
    }

    pub fn pth_root(&self) -> Self {
        Self {
            field: self.field.clone(),
            value: self.field.pth_root(&self.value),
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        Self {
            field: self.field.clone(),
            value: self.field.pow(&self.value, e),
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(&self.value))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(&self.value))
    }
}

pub fn arith(a: &FieldElem, b: &FieldElem, op: ArithOp) -> Result<FieldElem, GfError> {
    if a.field != b.field {
        return Err(GfError::MismatchedFields);
    }
    let f = &a.field;
    let value = match op {
        ArithOp::Add => f.add(&a.value, &b.value),
        ArithOp::Sub => f.sub(&a.value, &b.value),
        ArithOp::Mul => f.mul(&a.value, &b.value),
        ArithOp::Div => f.mul(&a.value, &f.inv(&b.value).ok_or(GfError::DivisionByZero)?),
    };
    Ok(FieldElem {
        field: f.clone(),
        value,
    })
}
