//! Certificate generation by walking the proof flowchart.
//!
//! Each branch either ends in a binary verdict, a cited lemma whose side
//! conditions were recorded as replayable checks, or a gadget image that
//! is itself hard and walked recursively.

use num_traits::{One, Zero};

use super::certificate::{connect_unary, hadamard_image, GadgetOutput, Step, UNRESOLVED};
use super::conditions::{ConditionSystemId, MatrixGadget, Point};
use super::forms::SpecialForm;
use super::{g_works, WorksFailure, WorksReport};
use crate::arith::{eigen2, int, Mat2, Rat, Spectrum};
use crate::gadget::{g4_apply, gaux_apply};
use crate::signature::{binary_tractable, classify_form, flip, BinaryCase, BinaryVerdict, SymSig2, SymSig3, Unary};

const MAX_DEPTH: usize = 6;

pub(crate) struct Walker {
    pub steps: Vec<Step>,
}

fn unary(u0: Rat, u1: Rat) -> Unary {
    Unary::from_rats(u0, u1)
}

impl Walker {
    pub fn new() -> Self {
        Walker { steps: Vec::new() }
    }

    fn push(&mut self, s: Step) {
        self.steps.push(s);
    }

    /// Records the classification and returns `true` when `f` is not a tractable form.
    pub fn classify(&mut self, f: &SymSig3) -> bool {
        let class = classify_form(f);
        let hard = !class.is_tractable();
        self.push(Step::Classify { sig: f.clone(), class });
        hard
    }

    fn cite(&mut self, claim: impl Into<String>) {
        self.push(Step::LemmaCite { claim: claim.into() });
    }

    fn unresolved(&mut self, f: &SymSig3) -> bool {
        self.cite(format!("{UNRESOLVED} for {f}"));
        false
    }

    fn flip(&mut self, f: &SymSig3) -> SymSig3 {
        let output = flip(f);
        self.push(Step::Flip {
            input: f.clone(),
            output: output.clone(),
        });
        output
    }

    fn normalize(&mut self, f: &SymSig3, scalar: &Rat) -> SymSig3 {
        if scalar.is_one() {
            return f.clone();
        }
        let output = f.scale(&scalar.recip());
        self.push(Step::Normalize {
            input: f.clone(),
            scalar: scalar.clone(),
            output: output.clone(),
        });
        output
    }

    fn works(&mut self, gadget: MatrixGadget, f: &SymSig3) -> WorksReport {
        let report = g_works(gadget, f);
        self.push(Step::Works {
            gadget,
            sig: f.clone(),
            report: report.clone(),
        });
        report
    }

    fn form(&mut self, form: SpecialForm, f: &SymSig3) -> Option<Rat> {
        let p = form.params(f);
        self.push(Step::Form {
            form,
            sig: f.clone(),
            member: p.is_some(),
        });
        p
    }

    fn condition(&mut self, system: ConditionSystemId, point: &Point) -> bool {
        let holds = super::conditions::eval_condition(system, point);
        self.push(Step::Condition {
            system,
            point: point.clone(),
            holds,
        });
        holds
    }

    fn ternary(&mut self, name: &str, f: &SymSig3) -> SymSig3 {
        let out = match name {
            "G4" => g4_apply(f),
            "Gaux" => gaux_apply(f),
            _ => unreachable!("ternary gadgets are G4 and Gaux"),
        };
        self.push(Step::Gadget {
            name: name.to_string(),
            input: f.clone(),
            output: GadgetOutput::Ternary(out.clone()),
            scalar: Rat::one(),
        });
        out
    }

    fn matrix(&mut self, gadget: MatrixGadget, f: &SymSig3) -> Mat2 {
        let m = gadget.matrix(f);
        self.push(Step::Gadget {
            name: gadget.name().to_string(),
            input: f.clone(),
            output: GadgetOutput::Matrix(m.clone()),
            scalar: Rat::one(),
        });
        m
    }

    fn hadamard(&mut self, f: &SymSig3) {
        let output = hadamard_image(f).expect("rational input has a rational image");
        self.push(Step::Hadamard {
            input: f.clone(),
            output,
        });
    }

    fn connect(&mut self, u: Unary, f: &SymSig3) -> SymSig2 {
        let output = connect_unary(&u, f);
        self.push(Step::Connect {
            unary: u,
            sig: f.clone(),
            output: output.clone(),
        });
        output
    }

    fn binary(&mut self, g: &SymSig2) -> BinaryVerdict {
        let verdict = binary_tractable(g);
        self.push(Step::BinaryVerdict { sig: g.clone(), verdict });
        verdict
    }

    /// Applies a ternary gadget and walks its image when that image is hard;
    /// rolls the steps back otherwise.
    fn descend(&mut self, name: &str, f: &SymSig3, depth: usize) -> bool {
        if depth >= MAX_DEPTH {
            return false;
        }
        let mark = self.steps.len();
        let g = self.ternary(name, f);
        if self.classify(&g) && self.walk(&g, depth + 1) {
            return true;
        }
        self.steps.truncate(mark);
        false
    }

    /// Walks a signature already classified as not tractable.
    pub fn walk(&mut self, f: &SymSig3, depth: usize) -> bool {
        let [f0, _, _, f3] = f.entries();
        if f0.is_zero() && f3.is_zero() {
            return self.zero_ends(f, depth);
        }
        let f = if f0.is_zero() { self.flip(f) } else { f.clone() };
        let n = self.normalize(&f, f.get(0));
        let [_, a, b, c] = n.entries();
        if c.is_zero() {
            self.c_zero(&n, depth)
        } else if a.is_zero() || b.is_zero() {
            self.ab_zero(&n, depth)
        } else {
            self.general(&n, depth)
        }
    }

    fn zero_ends(&mut self, f: &SymSig3, depth: usize) -> bool {
        let (a, b) = (f.get(1).clone(), f.get(2).clone());
        if !a.is_zero() && !b.is_zero() {
            if a == b {
                let n = self.normalize(f, &a);
                if self.descend("Gaux", &n, depth) {
                    return true;
                }
            } else if self.descend("G4", f, depth) {
                return true;
            }
            return self.unresolved(f);
        }
        let g = if a.is_zero() { self.flip(f) } else { f.clone() };
        self.normalize(&g, g.get(1));
        self.cite("[0,1,0,0] counts exact covers of 3-regular 3-uniform set systems, which is #P-hard");
        true
    }

    fn c_zero(&mut self, n: &SymSig3, depth: usize) -> bool {
        let [_, a, b, _] = n.entries().clone();
        if !a.is_zero() && !b.is_zero() {
            if let Some(done) = self.special_forms(n, depth) {
                return done;
            }
            let r = self.works(MatrixGadget::G1, n);
            if r.works {
                return self.g1_works_end();
            }
            self.record_failure(n, &r);
            return self.descend("G4", n, depth) || self.unresolved(n);
        }
        if b.is_zero() {
            if a == int(-1) {
                let mark = self.steps.len();
                if self.minus_one_chain(n) {
                    return true;
                }
                self.steps.truncate(mark);
            }
            return self.descend("G4", n, depth) || self.unresolved(n);
        }
        self.matrix(MatrixGadget::G1, n);
        self.cite(
            "the rank-one G1 matrix [[1, b], [0, 0]] splits into [1,0] on the LHS, absorbed by =3, and [1,b] on the RHS",
        );
        let g = self.connect(unary(Rat::one(), b), n);
        self.binary(&g).is_hard() || self.unresolved(n)
    }

    /// `[1, −1, 0, 0]`: G4, then the explicit G3 interpolation on `[1, −1, 0, 2]`.
    fn minus_one_chain(&mut self, n: &SymSig3) -> bool {
        let g = self.ternary("G4", n);
        if !self.classify(&g) {
            return false;
        }
        let fl = self.flip(&g);
        let m = self.normalize(&fl, fl.get(0));
        if !self.classify(&m) || !self.works(MatrixGadget::G3, &m).works {
            return false;
        }
        let mat = self.matrix(MatrixGadget::G3, &m);
        let Ok(Spectrum::Real(e)) = eigen2(&mat) else {
            return false;
        };
        let Some(x) = e.x else {
            return false;
        };
        self.cite("G3 works, so the eigenvector unary [1,x] is interpolated on the RHS");
        let g = self.connect(Unary::one_x(x), &m);
        self.binary(&g).is_hard()
    }

    fn ab_zero(&mut self, n: &SymSig3, depth: usize) -> bool {
        let n = if n.get(1).is_zero() {
            let fl = self.flip(n);
            self.normalize(&fl, fl.get(0))
        } else {
            n.clone()
        };
        let [_, a, _, c] = n.entries().clone();
        if c.is_one() || c == int(-1) {
            return self.descend("G4", &n, depth) || self.unresolved(&n);
        }
        if !self.works(MatrixGadget::G1, &n).works {
            return self.unresolved(&n);
        }
        self.cite("G1 works with eigenvalues 1 and c, so [1,0] is obtained on the RHS by interpolation");
        let g = self.connect(unary(Rat::one(), Rat::zero()), &n);
        debug_assert_eq!(g, SymSig2::from_rats([Rat::one(), a, Rat::zero()]));
        self.binary(&g).is_hard() || self.unresolved(&n)
    }

    fn general(&mut self, n: &SymSig3, depth: usize) -> bool {
        let p = Point::of(n).expect("normalized");
        if self.form(SpecialForm::ProductLast, n).is_some() {
            return self.product_last(n, depth);
        }
        if let Some(done) = self.special_forms(n, depth) {
            return done;
        }
        let r = self.works(MatrixGadget::G1, n);
        if r.works {
            return self.g1_works_end();
        }
        self.record_failure(n, &r);
        if p == Point::ints(1, -1, 1) || p == Point::ints(-1, 1, 1) {
            let mark = self.steps.len();
            if self.double_g4(n, depth) {
                return true;
            }
            self.steps.truncate(mark);
        }
        if self.form(SpecialForm::AntiMiddle, n).is_some() && self.descend("G4", n, depth) {
            return true;
        }
        self.condition(ConditionSystemId::S(None), &p);
        self.condition(ConditionSystemId::T(None), &p);
        self.descend("Gaux", n, depth) || self.descend("G4", n, depth) || self.unresolved(n)
    }

    fn record_failure(&mut self, n: &SymSig3, r: &WorksReport) {
        let p = Point::of(n).expect("normalized");
        match r.failing {
            Some(WorksFailure::RootOfUnity(c)) => {
                self.condition(ConditionSystemId::C1eq(c), &p);
            }
            Some(WorksFailure::Singular) => {
                self.condition(ConditionSystemId::Singular(MatrixGadget::G1), &p);
            }
            None => {}
        }
    }

    fn special_forms(&mut self, n: &SymSig3, _depth: usize) -> Option<bool> {
        if let Some(a) = self.form(SpecialForm::EqualMiddle, n) {
            return Some(self.equal_middle(n, &a));
        }
        if self.form(SpecialForm::PlanarFamily, n).is_some() {
            self.hadamard(n);
            self.cite(
                "under the Hadamard transform [1,a,-2a-1,3a+2] with a != -1 becomes a weight-two signature \
                 against [1,0,1,0], which reduces from counting perfect matchings of 3-regular bipartite graphs",
            );
            return Some(true);
        }
        None
    }

    fn g1_works_end(&mut self) -> bool {
        self.cite(
            "G1 works on [1,a,b,c] with ab != 0 and the signature is neither [1,a,a,1] nor [1,a,-2a-1,3a+2], \
             so it is #P-hard unless degenerate, Gen-Eq or affine",
        );
        true
    }

    fn equal_middle(&mut self, n: &SymSig3, _a: &Rat) -> bool {
        if !self.works(MatrixGadget::G1, n).works {
            return self.unresolved(n);
        }
        self.cite("G1 works with x = y = +-1, so two copies of [y,1] on =3 give [1,1] on the RHS");
        let g = self.connect(unary(Rat::one(), Rat::one()), n);
        if self.binary(&g).is_hard() {
            return true;
        }
        self.hadamard(n);
        self.cite(
            "under the Hadamard transform [3,-1,-1,3] becomes [0,0,1,0] against [1,0,1,0], \
             which counts perfect matchings of 3-regular bipartite graphs",
        );
        true
    }

    fn product_last(&mut self, n: &SymSig3, depth: usize) -> bool {
        let [_, a, b, _] = n.entries().clone();
        self.matrix(MatrixGadget::G1, n);
        self.cite(
            "G1 is the rank-one matrix [1,a]^T [1,b]; absorbing [1,a] with factor 1+a^3 or \
             1+3a^3+3a^2b^2+a^5b^2 leaves [1,b] on the RHS",
        );
        if let Some(b) = self.form(SpecialForm::NegSquareCube, n) {
            self.cite(
                "[1,-b^2] is obtained on the LHS, three copies of [1,b] absorb with factor 1-b^6, \
                 and two copies of [1,-b^2] on =3 give [1,b^4] on the RHS",
            );
            let g = self.connect(unary(Rat::one(), num_traits::pow(b, 4)), n);
            return self.binary(&g).is_hard() || self.unresolved(n);
        }
        let g = self.connect(unary(Rat::one(), b.clone()), n);
        match self.binary(&g) {
            BinaryVerdict::Hard => true,
            BinaryVerdict::Tractable(BinaryCase::XIsOne) if b.is_one() => {
                self.descend("Gaux", n, depth) || self.unresolved(n)
            }
            BinaryVerdict::Tractable(BinaryCase::XAndZZero) => {
                if self.form(SpecialForm::InverseMiddle, n).is_none() || !self.works(MatrixGadget::G2, n).works {
                    return self.unresolved(n);
                }
                self.cite("G2 works with eigenvalue ratio 1/2, so [1,-1/a^2] is interpolated on the RHS");
                let x = -(&a * &a).recip();
                let g = self.connect(unary(Rat::one(), x), n);
                self.binary(&g).is_hard() || self.unresolved(n)
            }
            _ => self.unresolved(n),
        }
    }

    /// `[1, 1, −1, 1]` and `[1, −1, 1, 1]`: G4 to `[1, 1, −1, 3]`, then G4 again.
    fn double_g4(&mut self, n: &SymSig3, depth: usize) -> bool {
        let target = SymSig3::from_ints([1, 1, -1, 3]);
        let g = self.ternary("G4", n);
        if !self.classify(&g) {
            return false;
        }
        let g = if g.proportional_to(&target).is_some() { g } else { self.flip(&g) };
        let m = self.normalize(&g, g.get(0));
        m == target && self.classify(&m) && self.descend("G4", &m, depth)
    }
}
