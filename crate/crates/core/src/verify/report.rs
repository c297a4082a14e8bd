use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use num_bigint::BigInt;

use crate::weights::{first_difference, GradedCharacter, HalfInt, Weight};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

/// The smallest piece of evidence for a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// First term, in `(grade, weight)` order, where two characters differ.
    CharacterTerm { weight: Weight, grade: HalfInt, left: BigInt, right: BigInt },
    Integers { left: BigInt, right: BigInt },
    Decomposition { weight: Weight, left: BigInt, right: BigInt },
    Matrix { instance: String, determinant: String },
    IndexSet { r: HalfInt, s: HalfInt, k: usize, detail: String },
    Relation { expected: String, found: String },
    Error(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::CharacterTerm { weight, grade, left, right } => {
                write!(f, "e({weight}) at grade {grade}: {left} vs {right}")
            }
            Witness::Integers { left, right } => write!(f, "{left} vs {right}"),
            Witness::Decomposition { weight, left, right } => {
                write!(f, "V({weight}): multiplicity {left} vs {right}")
            }
            Witness::Matrix { instance, determinant } => write!(f, "{instance}: det {determinant}"),
            Witness::IndexSet { r, s, k, detail } => write!(f, "r={r} s={s} k={k}: {detail}"),
            Witness::Relation { expected, found } => write!(f, "expected {expected}, found {found}"),
            Witness::Error(e) => write!(f, "error: {e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub params: Vec<(String, String)>,
    pub status: Status,
    /// Present exactly when the status is `Fail`.
    pub witness: Option<Witness>,
    /// Filled in by callers that can read a clock.
    pub timing: Option<Duration>,
    pub details: Vec<String>,
}

impl VerificationReport {
    pub fn new(check: &str) -> Self {
        VerificationReport {
            check: check.to_string(),
            params: Vec::new(),
            status: Status::Pass,
            witness: None,
            timing: None,
            details: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn detail(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    /// Records a failure; the first witness is kept.
    pub fn fail(&mut self, witness: Witness) {
        if self.status != Status::Fail {
            self.status = Status::Fail;
            self.witness = Some(witness);
        }
    }

    pub fn skip(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped(reason.into());
        self
    }

    pub fn error(mut self, e: Error) -> Self {
        self.fail(Witness::Error(e.to_string()));
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// `check(k1=v1, k2=v2)`, used as the sort key when aggregating.
    pub fn case_id(&self) -> String {
        let mut s = self.check.clone();
        s.push('(');
        for (k, (key, v)) in self.params.iter().enumerate() {
            if k > 0 {
                s.push_str(", ");
            }
            s.push_str(key);
            s.push('=');
            s.push_str(v);
        }
        s.push(')');
        s
    }

    pub(crate) fn compare_characters(&mut self, left: &GradedCharacter, right: &GradedCharacter) {
        if let Some((weight, grade, l, r)) = first_difference(left, right) {
            self.fail(Witness::CharacterTerm { weight, grade, left: l, right: r });
        }
    }

    pub(crate) fn compare_integers(&mut self, left: &BigInt, right: &BigInt) {
        if left != right {
            self.fail(Witness::Integers { left: left.clone(), right: right.clone() });
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match &self.status {
            Status::Pass => "pass".to_string(),
            Status::Fail => "FAIL".to_string(),
            Status::Skipped(r) => alloc::format!("skipped ({r})"),
        };
        write!(f, "{} {}", self.case_id(), status)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn failure_keeps_first_witness() {
        let a = GradedCharacter::monomial(0, Weight::new(vec![1]), HalfInt::ZERO);
        let b = GradedCharacter::monomial(0, Weight::new(vec![-1]), HalfInt::ZERO);
        let mut rep = VerificationReport::new("x").param("n", 1);
        rep.compare_characters(&a, &a);
        assert!(rep.passed());
        rep.compare_characters(&a, &b);
        rep.compare_integers(&BigInt::from(1), &BigInt::from(2));
        assert!(rep.failed());
        assert!(matches!(rep.witness, Some(Witness::CharacterTerm { .. })));
        assert_eq!(rep.case_id(), "x(n=1)");
    }
}
