//! The dichotomy decision, the "works" predicates, certificates and the
//! polynomial condition systems behind the hardness proofs.

pub mod certificate;
pub mod conditions;
pub mod falsify;
pub mod forms;
mod walk;

use std::fmt;

use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arith::{ratio_is_root_of_unity, Rat, RouCondition};
use crate::grid::degenerate_holant_vanishes;
use crate::planar::family_params;
use crate::signature::{classify_form, SigClass, SymSig3};

pub use certificate::{certificate_check, replay, Certificate, GadgetOutput, ReplayFailure, Step};
pub use conditions::{eval_condition, verify_paper_solutions, ConditionSystemId, MatrixGadget, Point, SolutionsReport};
pub use falsify::{falsify_emptiness, FalsifyReport, FalsifySystem};
pub use forms::SpecialForm;

/// Why a matrix gadget fails to work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WorksFailure {
    Singular,
    RootOfUnity(RouCondition),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WorksReport {
    pub works: bool,
    pub failing: Option<WorksFailure>,
}

impl fmt::Display for WorksReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.failing {
            None => f.write_str("works"),
            Some(WorksFailure::Singular) => f.write_str("fails: singular matrix"),
            Some(WorksFailure::RootOfUnity(c)) => write!(f, "fails: eigenvalue ratio is a root of unity ({c})"),
        }
    }
}

/// A matrix gadget works when it is nonsingular and its eigenvalue ratio is
/// not a root of unity.
pub fn g_works(gadget: MatrixGadget, f: &SymSig3) -> WorksReport {
    let m = gadget.matrix(f);
    let fail = |failing| WorksReport {
        works: false,
        failing: Some(failing),
    };
    if m.det().is_zero() {
        return fail(WorksFailure::Singular);
    }
    match ratio_is_root_of_unity(&m) {
        Ok(r) if r.is_root => fail(WorksFailure::RootOfUnity(r.matched.expect("matched condition"))),
        Ok(_) => WorksReport {
            works: true,
            failing: None,
        },
        Err(_) => fail(WorksFailure::Singular),
    }
}

pub const ZERO_NOTE: &str = "Holant identically 0";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    PTime { class: SigClass, note: Option<&'static str> },
    SharpPHard { certificate: Certificate },
    SharpPHardButPlanarPTime { a: Rat, b: Rat, certificate: Certificate },
}

impl Verdict {
    pub fn is_ptime(&self) -> bool {
        matches!(self, Verdict::PTime { .. })
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::PTime { .. } => None,
            Verdict::SharpPHard { certificate } | Verdict::SharpPHardButPlanarPTime { certificate, .. } => {
                Some(certificate)
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::PTime { .. } => "PTime",
            Verdict::SharpPHard { .. } => "SharpPHard",
            Verdict::SharpPHardButPlanarPTime { .. } => "SharpPHardButPlanarPTime",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::PTime { class, note } => {
                write!(f, "P-time ({})", class.name())?;
                if let Some(n) = note {
                    write!(f, "; {n}")?;
                }
                Ok(())
            }
            Verdict::SharpPHard { .. } => f.write_str("#P-hard"),
            Verdict::SharpPHardButPlanarPTime { a, b, .. } => write!(f, "#P-hard; planar P-time (a={a}, b={b})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("kind", self.kind())?;
        match self {
            Verdict::PTime { class, note } => {
                m.serialize_entry("class", class.name())?;
                m.serialize_entry("reason", class)?;
                m.serialize_entry("note", note)?;
            }
            Verdict::SharpPHard { certificate } => m.serialize_entry("certificate", certificate)?,
            Verdict::SharpPHardButPlanarPTime { a, b, certificate } => {
                m.serialize_entry("a", &a.to_string())?;
                m.serialize_entry("b", &b.to_string())?;
                m.serialize_entry("certificate", certificate)?;
            }
        }
        m.end()
    }
}

/// Builds the certificate for `f`: a single classification step when `f` is
/// a tractable form, otherwise the flowchart walk.
pub fn certify(f: &SymSig3) -> Certificate {
    let mut w = walk::Walker::new();
    if w.classify(f) {
        w.walk(f, 0);
    }
    Certificate {
        input: f.clone(),
        steps: w.steps,
    }
}

pub fn dichotomy(f: &SymSig3) -> Verdict {
    let class = classify_form(f);
    if class.is_tractable() {
        let note = (f.is_zero() || degenerate_holant_vanishes(f)).then_some(ZERO_NOTE);
        return Verdict::PTime { class, note };
    }
    let certificate = certify(f);
    match family_params(f) {
        Some((a, b)) if !a.is_zero() => Verdict::SharpPHardButPlanarPTime { a, b, certificate },
        _ => Verdict::SharpPHard { certificate },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn s(v: [i64; 4]) -> SymSig3 {
        SymSig3::from_ints(v)
    }

    #[test]
    fn works_examples() {
        assert!(g_works(MatrixGadget::G1, &s([1, 2, 3, 5])).works);
        for (a, b) in [(2, 3), (-1, 5), (4, 4)] {
            let r = g_works(MatrixGadget::G1, &s([1, a, b, a * b]));
            assert_eq!(r.failing, Some(WorksFailure::Singular));
        }
        let r = g_works(MatrixGadget::G1, &s([1, 1, -1, 1]));
        let Some(WorksFailure::RootOfUnity(c)) = r.failing else {
            panic!("{r}")
        };
        assert_eq!(c.g1_line(), "2ab + c^2 + 1 = 0");
    }

    #[test]
    fn spec_verdicts() {
        assert!(matches!(
            dichotomy(&s([1, 2, 4, 8])),
            Verdict::PTime {
                class: SigClass::Degenerate(_),
                note: None
            }
        ));
        let v = dichotomy(&s([3, -1, -1, 3]));
        assert!(!v.is_ptime());
        assert!(matches!(v, Verdict::SharpPHardButPlanarPTime { ref a, ref b, .. } if *a == int(1) && b.is_zero()));
        match dichotomy(&s([1, 0, -1, 2])) {
            Verdict::SharpPHardButPlanarPTime { a, b, .. } => assert_eq!((a, b), (rat(1, 2), rat(-1, 2))),
            v => panic!("{v}"),
        }
        assert!(matches!(
            dichotomy(&s([0, 0, 0, 0])),
            Verdict::PTime {
                note: Some(ZERO_NOTE),
                ..
            }
        ));
        assert!(matches!(
            dichotomy(&s([1, 1, -1, -1])),
            Verdict::PTime {
                class: SigClass::Affine(_),
                ..
            }
        ));
        assert_eq!(
            dichotomy(&s([1, 0, -1, 2])).to_string(),
            "#P-hard; planar P-time (a=1/2, b=-1/2)"
        );
    }

    #[test]
    fn double_g4_chain() {
        let cert = certify(&s([1, 1, -1, 1]));
        assert!(certificate_check(&cert), "{cert}");
        assert!(cert.is_grounded(), "{cert}");
        let chain: Vec<_> = cert.gadget_chain().into_iter().filter(|(n, _)| *n == "G4").collect();
        assert_eq!(chain.len(), 2, "{cert}");
        assert_eq!(*chain[1].1, s([1, 1, -1, 3]));
        let reached = cert.steps.iter().any(|st| matches!(st, Step::Normalize { output, .. } if *output == s([1, 1, -5, 19])));
        assert!(reached, "{cert}");

        let other = certify(&s([1, -1, 1, 1]));
        assert!(certificate_check(&other) && other.is_grounded(), "{other}");
    }

    #[test]
    fn tampering_breaks_replay() {
        let mut cert = certify(&s([1, 1, -1, 1]));
        let idx = cert
            .steps
            .iter()
            .position(|st| matches!(st, Step::Normalize { .. }))
            .expect("normalize step");
        if let Step::Normalize { scalar, .. } = &mut cert.steps[idx] {
            *scalar += int(1);
        }
        assert!(!certificate_check(&cert));
    }

    #[test]
    fn tractable_certificate_is_one_step() {
        let cert = certify(&s([1, -1, 1, -1]));
        assert_eq!(cert.steps.len(), 1);
        assert!(certificate_check(&cert));
    }

    #[test]
    fn g3_interpolation_chain() {
        let cert = certify(&s([1, -1, 0, 0]));
        assert!(certificate_check(&cert) && cert.is_grounded(), "{cert}");
        assert!(cert
            .steps
            .iter()
            .any(|st| matches!(st, Step::Works { gadget: MatrixGadget::G3, sig, report } if *sig == s([1, -1, 0, 2]) && report.works)));
    }

    #[test]
    fn branch_examples_are_grounded() {
        let cases: [[i64; 4]; 10] = [
            [0, 1, 2, 0],
            [0, 2, 2, 0],
            [0, 1, 0, 0],
            [1, 0, 2, 0],
            [1, 2, 0, 0],
            [1, 2, 0, 3],
            [1, 2, 0, 1],
            [3, -1, -1, 3],
            [1, -2, 2, -4],
            [1, 2, -2, -1],
        ];
        for v in cases {
            let cert = certify(&s(v));
            assert!(certificate_check(&cert), "{cert}");
            assert!(cert.is_grounded(), "{cert}");
        }
    }

    #[test]
    fn verdict_flip_and_scale_invariance() {
        use crate::signature::flip;
        for v in [[1, 2, 3, 5], [1, 0, -1, 2], [2, 1, 1, 2], [1, 1, -1, -1]] {
            let f = s(v);
            let k = dichotomy(&f).kind();
            assert_eq!(dichotomy(&flip(&f)).kind(), k);
            assert_eq!(dichotomy(&f.scale(&rat(7, 3))).kind(), k);
        }
    }
}
