//! Certificates: ordered, individually replayable classification steps.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::conditions::{eval_condition, ConditionSystemId, MatrixGadget, Point};
use super::forms::SpecialForm;
use super::{g_works, WorksReport};
use crate::arith::{Mat2, QuadExt, Rat};
use crate::gadget::gadget_by_name;
use crate::signature::{
    binary_tractable, classify_form, flip, sym3_transform_row, BinaryVerdict, SigClass, SymSig2, SymSig3, Unary,
};

pub(crate) fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// A gadget contraction result: straddled gadgets give a matrix, ternary ones a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetOutput {
    Matrix(Mat2),
    Ternary(SymSig3),
}

impl fmt::Display for GadgetOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetOutput::Matrix(m) => write!(f, "{m}"),
            GadgetOutput::Ternary(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for GadgetOutput {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GadgetOutput::Ternary(t) => t.serialize(s),
            GadgetOutput::Matrix(m) => s.collect_str(m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    /// `classify_form(sig) = class`.
    Classify { sig: SymSig3, class: SigClass },
    Flip { input: SymSig3, output: SymSig3 },
    /// `input = scalar · output`.
    Normalize {
        input: SymSig3,
        #[serde(serialize_with = "ser_display")]
        scalar: Rat,
        output: SymSig3,
    },
    /// The named gadget contracted with `input` equals `scalar · output`.
    Gadget {
        name: String,
        input: SymSig3,
        output: GadgetOutput,
        #[serde(serialize_with = "ser_display")]
        scalar: Rat,
    },
    /// `input · H^⊗3 = output` for the Hadamard matrix `H`.
    Hadamard { input: SymSig3, output: SymSig3 },
    Condition {
        system: ConditionSystemId,
        point: Point,
        holds: bool,
    },
    Works {
        gadget: MatrixGadget,
        sig: SymSig3,
        report: WorksReport,
    },
    Form {
        form: SpecialForm,
        sig: SymSig3,
        member: bool,
    },
    /// A unary connected to one edge of `sig`, leaving the binary `output`.
    Connect {
        unary: Unary,
        sig: SymSig3,
        output: SymSig2,
    },
    BinaryVerdict { sig: SymSig2, verdict: BinaryVerdict },
    /// A hardness fact taken as given, stated in words.
    LemmaCite { claim: String },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Classify { sig, class } => write!(f, "classify {sig}: {class}"),
            Step::Flip { input, output } => write!(f, "flip {input} -> {output}"),
            Step::Normalize { input, scalar, output } => write!(f, "normalize {input} = {scalar} * {output}"),
            Step::Gadget {
                name,
                input,
                output,
                scalar,
            } => write!(f, "{name}({input}) = {scalar} * {output}"),
            Step::Hadamard { input, output } => write!(f, "Hadamard {input} -> {output}"),
            Step::Condition { system, point, holds } => write!(f, "{system} at {point}: {holds}"),
            Step::Works { gadget, sig, report } => write!(f, "{gadget} on {sig}: {report}"),
            Step::Form { form, sig, member } => write!(f, "{sig} in {form}: {member}"),
            Step::Connect { unary, sig, output } => write!(f, "connect {unary} to {sig} -> {output}"),
            Step::BinaryVerdict { sig, verdict } => write!(f, "binary {sig}: {verdict}"),
            Step::LemmaCite { claim } => write!(f, "cite: {claim}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub input: SymSig3,
    pub steps: Vec<Step>,
}

/// Claim text of the fallback used when no flowchart branch applies.
pub const UNRESOLVED: &str = "no flowchart branch applied";

impl Certificate {
    pub fn cites(&self) -> impl Iterator<Item = &str> {
        self.steps.iter().filter_map(|s| match s {
            Step::LemmaCite { claim } => Some(claim.as_str()),
            _ => None,
        })
    }

    /// `false` when the walk fell through to the unresolved fallback.
    pub fn is_grounded(&self) -> bool {
        !self.cites().any(|c| c.starts_with(UNRESOLVED))
    }

    pub fn gadget_chain(&self) -> Vec<(&str, &SymSig3)> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                Step::Gadget { name, input, .. } => Some((name.as_str(), input)),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate for {}", self.input)?;
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "  {i:>2}. {s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayFailure {
    pub index: usize,
    pub reason: String,
}

impl fmt::Display for ReplayFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.index, self.reason)
    }
}

pub fn connect_unary(u: &Unary, f: &SymSig3) -> SymSig2 {
    let v = |i: usize| QuadExt::from(f.get(i));
    let [u0, u1] = &u.0;
    SymSig2::new(u0 * v(0) + u1 * v(1), u0 * v(1) + u1 * v(2), u0 * v(2) + u1 * v(3))
}

pub fn hadamard_image(f: &SymSig3) -> Option<SymSig3> {
    let w = sym3_transform_row(f, &Mat2::hadamard());
    let r: Option<Vec<Rat>> = w.iter().map(|x| x.as_rat().cloned()).collect();
    let r = r?;
    Some(SymSig3::new(r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone()))
}

struct Replay {
    known: Vec<SymSig3>,
    binaries: Vec<SymSig2>,
}

impl Replay {
    fn require(&self, s: &SymSig3, what: &str) -> Result<(), String> {
        if self.known.contains(s) {
            Ok(())
        } else {
            Err(format!("{what} {s} was not derived by an earlier step"))
        }
    }

    fn step(&mut self, step: &Step) -> Result<(), String> {
        let expect = |ok: bool, msg: String| if ok { Ok(()) } else { Err(msg) };
        match step {
            Step::Classify { sig, class } => {
                self.require(sig, "classified signature")?;
                let got = classify_form(sig);
                expect(got == *class, format!("classify_form gives {got}"))
            }
            Step::Flip { input, output } => {
                self.require(input, "flip input")?;
                expect(flip(input) == *output, "flip mismatch".into())?;
                self.known.push(output.clone());
                Ok(())
            }
            Step::Normalize { input, scalar, output } => {
                self.require(input, "normalize input")?;
                expect(!scalar.is_zero() && output.scale(scalar) == *input, "scalar mismatch".into())?;
                self.known.push(output.clone());
                Ok(())
            }
            Step::Gadget {
                name,
                input,
                output,
                scalar,
            } => {
                self.require(input, "gadget input")?;
                let g = gadget_by_name(name, None).map_err(|e| e.to_string())?;
                let got = g.contract(input).map_err(|e| e.to_string())?;
                let s = QuadExt::from(scalar);
                let ok = match output {
                    GadgetOutput::Matrix(m) => got.as_matrix() == Some(m.scale(&s)),
                    GadgetOutput::Ternary(t) => got.as_sym3() == Some(t.scale(scalar)),
                };
                expect(ok, format!("contraction gives {got}"))?;
                if let GadgetOutput::Ternary(t) = output {
                    self.known.push(t.clone());
                }
                Ok(())
            }
            Step::Hadamard { input, output } => {
                self.require(input, "transform input")?;
                expect(hadamard_image(input).as_ref() == Some(output), "transform mismatch".into())?;
                self.known.push(output.clone());
                Ok(())
            }
            Step::Condition { system, point, holds } => {
                self.require(&point.signature(), "condition point")?;
                expect(eval_condition(*system, point) == *holds, "condition value mismatch".into())
            }
            Step::Works { gadget, sig, report } => {
                self.require(sig, "works input")?;
                expect(g_works(*gadget, sig) == *report, "works report mismatch".into())
            }
            Step::Form { form, sig, member } => {
                self.require(sig, "form input")?;
                expect(form.params(sig).is_some() == *member, "form membership mismatch".into())
            }
            Step::Connect { unary, sig, output } => {
                self.require(sig, "connect input")?;
                expect(connect_unary(unary, sig) == *output, "connection mismatch".into())?;
                self.binaries.push(output.clone());
                Ok(())
            }
            Step::BinaryVerdict { sig, verdict } => {
                expect(self.binaries.contains(sig), format!("binary {sig} was not derived"))?;
                expect(binary_tractable(sig) == *verdict, "binary verdict mismatch".into())
            }
            Step::LemmaCite { .. } => Ok(()),
        }
    }
}

/// Replays every step in order; the first step must classify the input.
pub fn replay(cert: &Certificate) -> Result<(), ReplayFailure> {
    let fail = |index: usize, reason: String| ReplayFailure { index, reason };
    match cert.steps.first() {
        Some(Step::Classify { sig, .. }) if *sig == cert.input => {}
        _ => return Err(fail(0, "the first step must classify the input".into())),
    }
    let mut r = Replay {
        known: vec![cert.input.clone()],
        binaries: Vec::new(),
    };
    for (i, s) in cert.steps.iter().enumerate() {
        r.step(s).map_err(|reason| fail(i, reason))?;
    }
    let hard = matches!(cert.steps[0], Step::Classify { class: SigClass::NotTractableForm, .. });
    if hard && cert.steps.len() == 1 {
        return Err(fail(0, "a hardness certificate needs more than the classification".into()));
    }
    Ok(())
}

pub fn certificate_check(cert: &Certificate) -> bool {
    replay(cert).is_ok()
}
