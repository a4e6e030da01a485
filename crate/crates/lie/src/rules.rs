//! The bracket on `HH¹(TA)` as an explicit list of rules keyed by the kinds
//! of the two arguments.

use crate::hh1::CohomologyBracket;
use crate::LieError;
use gentle_bases::{trivial_extension_hh1_basis, CohomologyElement, Summand};
use gentle_cochain::DualFirstHomology;
use gentle_core::linalg::{solve_combination, Coordinates};
use gentle_core::{Field, GentlePresentation, Pair, Path, Scalar, SparseVector};
use std::collections::BTreeSet;
use CohomologyElement::*;

/// An element of `Z(A) ⊕ HH₁(A)* ⊕ HH¹(A) ⊕ Alt_A(DA)` given by
/// representatives in the ambient coordinate spaces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Mixed {
    /// In `K(Q₀||B)`.
    pub center: SparseVector<Pair>,
    /// In `K(Q₁⊙B*)`.
    pub dual: SparseVector<Pair>,
    /// In `K(Q₁||B)`.
    pub h1: SparseVector<Pair>,
    /// `(p, r)` means `p* ↦ r`.
    pub alt: SparseVector<Pair>,
}

impl Mixed {
    pub fn zero() -> Mixed {
        Mixed::default()
    }

    pub fn of(e: &CohomologyElement, g: &GentlePresentation, field: Field) -> Mixed {
        let mut m = Mixed::zero();
        match e.summand() {
            Summand::Center => m.center = e.center_vector(g, field).expect("centre element"),
            Summand::H1Dual => m.dual = e.dual_chain(g, field).expect("dual element"),
            Summand::H1 => m.h1 = e.cochain(g, field).expect("HH¹ element"),
            Summand::Alt => m.alt = e.alt_map(g, field).expect("Alt element"),
        }
        m
    }

    pub fn scaled(&self, c: &Scalar) -> Mixed {
        Mixed {
            center: self.center.scaled(c),
            dual: self.dual.scaled(c),
            h1: self.h1.scaled(c),
            alt: self.alt.scaled(c),
        }
    }

    pub fn plus(&self, other: &Mixed) -> Mixed {
        Mixed {
            center: self.center.plus(&other.center),
            dual: self.dual.plus(&other.dual),
            h1: self.h1.plus(&other.h1),
            alt: self.alt.plus(&other.alt),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.center.is_zero() && self.dual.is_zero() && self.h1.is_zero() && self.alt.is_zero()
    }
}

/// What a rule may consult besides its two arguments.
pub struct RuleContext<'g> {
    pub g: &'g GentlePresentation,
    pub field: Field,
}

impl RuleContext<'_> {
    fn element(&self, e: CohomologyElement) -> Mixed {
        Mixed::of(&e, self.g, self.field)
    }

    fn arrow(&self, a: usize) -> Path {
        self.g.quiver().arrow_path(a)
    }

    fn center_pair(&self, e: usize, p: Path, c: Scalar) -> Mixed {
        Mixed { center: SparseVector::from_terms([((Path::vertex(e), p), c)]), ..Mixed::zero() }
    }

    fn h1_pair(&self, a: usize, p: Path, c: Scalar) -> Mixed {
        Mixed { h1: SparseVector::from_terms([((self.arrow(a), p), c)]), ..Mixed::zero() }
    }

    fn dual_pair(&self, a: usize, p: Path, c: Scalar) -> Mixed {
        Mixed { dual: SparseVector::from_terms([((self.arrow(a), p), c)]), ..Mixed::zero() }
    }

    fn int(&self, n: i64) -> Scalar {
        self.field.from_i64(n)
    }
}

pub type Cell = fn(&RuleContext, &CohomologyElement, &CohomologyElement) -> Mixed;

/// `[left, right]` for elements of the two named kinds.
pub struct Rule {
    pub left: &'static str,
    pub right: &'static str,
    pub cell: Cell,
}

fn zero(_: &RuleContext, _: &CohomologyElement, _: &CohomologyElement) -> Mixed {
    Mixed::zero()
}

fn identity_fixes(cx: &RuleContext, _: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    cx.element(y.clone())
}

fn identity_negates(cx: &RuleContext, _: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    cx.element(y.clone()).scaled(&cx.int(-1))
}

/// `[(e, p), (a', e')] = −(e, p^{(a', e')})`.
fn cycle_char2_loop(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (CentralCycle(p), Char2Loop(a)) = (x, y) else { unreachable!() };
    let e = Path::vertex(cx.g.quiver().arrow(*a).source);
    cx.g
        .substitution_terms(p, *a, &e)
        .into_iter()
        .fold(Mixed::zero(), |m, t| m.plus(&cx.center_pair(p.source(), t, cx.int(-1))))
}

/// `[(e, p), (a', a')] = −(e, p)` when `a'` occurs in `p`.
fn cycle_fund(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (CentralCycle(p), FundCycle(a)) = (x, y) else { unreachable!() };
    if p.contains_arrow(*a) {
        cx.center_pair(p.source(), p.clone(), cx.int(-1))
    } else {
        Mixed::zero()
    }
}

/// `[(e, p), (a', a'*)] = (p, e*)` when `p = a'`.
fn cycle_char2_loop_dual(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (CentralCycle(p), Char2LoopDual(a)) = (x, y) else { unreachable!() };
    if p.single_arrow() == Some(*a) {
        cx.dual_pair(*a, Path::vertex(p.source()), cx.int(1))
    } else {
        Mixed::zero()
    }
}

/// `[(a, a), (a', e*)] = −(a, e*)` when `a = a'`.
fn fund_loop_idempotent(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (FundCycle(a), LoopAtIdempotent(b, e)) = (x, y) else { unreachable!() };
    if a == b {
        cx.dual_pair(*a, Path::vertex(*e), cx.int(-1))
    } else {
        Mixed::zero()
    }
}

/// `[(a, a), (a', b'*) − (b', a'*)] = −((a', b'*) − (b', a'*))` when `a ∈ {a', b'}`.
fn fund_skew_pair(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (FundCycle(a), SkewPair(b, c)) = (x, y) else { unreachable!() };
    if a == b || a == c {
        cx.element(y.clone()).scaled(&cx.int(-1))
    } else {
        Mixed::zero()
    }
}

/// `[(a, e), (a', e'*)] = −(a, a*)` when `a = a'` and `e = e'`.
fn char2_loop_loop_idempotent(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (Char2Loop(a), LoopAtIdempotent(b, e)) = (x, y) else { unreachable!() };
    if a == b && cx.g.quiver().arrow(*a).source == *e {
        cx.dual_pair(*a, cx.arrow(*a), cx.int(-1))
    } else {
        Mixed::zero()
    }
}

/// `[(e, p), ψ_{e', p'}] = −ψ_{p, p}` when `p = p'`.
fn cycle_psi_ep(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (CentralCycle(p), PsiEP(_, r)) = (x, y) else { unreachable!() };
    if p == r {
        cx.element(PsiPP(p.clone())).scaled(&cx.int(-1))
    } else {
        Mixed::zero()
    }
}

/// `[(a, a), φ_{p', q'}] = φ_{p', q'}` when `a` occurs in `p'` or `q'`.
fn fund_phi(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (FundCycle(a), Phi(p, r)) = (x, y) else { unreachable!() };
    if p.contains_arrow(*a) || r.contains_arrow(*a) {
        cx.element(y.clone())
    } else {
        Mixed::zero()
    }
}

/// `[(a, a), ψ_{e, p'}] = ψ_{e, p'}` when `a` occurs in `p'`.
fn fund_psi_ep(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (FundCycle(a), PsiEP(_, p)) = (x, y) else { unreachable!() };
    if p.contains_arrow(*a) {
        cx.element(y.clone())
    } else {
        Mixed::zero()
    }
}

/// `[(a, e), ψ_{p', p'}] = ψ_{e, a}` when `a = p'`.
fn char2_loop_psi_pp(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (Char2Loop(a), PsiPP(p)) = (x, y) else { unreachable!() };
    if p.single_arrow() == Some(*a) {
        cx.element(PsiEP(p.source(), p.clone()))
    } else {
        Mixed::zero()
    }
}

/// `[(a, b*) − (b, a*), φ_{p', q'}] = 2(a, a)` when `(a, b) = (p', q')`,
/// `−2(b, b)` when `(a, b) = (q', p')`.
fn skew_pair_phi(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (SkewPair(a, b), Phi(p, r)) = (x, y) else { unreachable!() };
    let (a_path, b_path) = (cx.arrow(*a), cx.arrow(*b));
    if *p == a_path && *r == b_path {
        cx.h1_pair(*a, a_path, cx.int(2))
    } else if *p == b_path && *r == a_path {
        cx.h1_pair(*b, b_path, cx.int(-2))
    } else {
        Mixed::zero()
    }
}

/// `[(a, e*), ψ_{p', p'}] = (e, a)` when `a = p'`.
fn loop_idempotent_psi_pp(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (LoopAtIdempotent(a, e), PsiPP(p)) = (x, y) else { unreachable!() };
    if p.single_arrow() == Some(*a) {
        cx.center_pair(*e, p.clone(), cx.int(1))
    } else {
        Mixed::zero()
    }
}

/// `[(a, e*), ψ_{e', p'}] = (e, e) − (a, a)` when `a = p'` and `e = e'`.
fn loop_idempotent_psi_ep(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (LoopAtIdempotent(a, e), PsiEP(f, p)) = (x, y) else { unreachable!() };
    if p.single_arrow() == Some(*a) && e == f {
        cx.center_pair(*e, Path::vertex(*e), cx.int(1)).plus(&cx.h1_pair(*a, cx.arrow(*a), cx.int(-1)))
    } else {
        Mixed::zero()
    }
}

/// `[(a, a*), ψ_{p', p'}] = −(a, a)` when `a = p'`.
fn char2_loop_dual_psi_pp(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (Char2LoopDual(a), PsiPP(p)) = (x, y) else { unreachable!() };
    if p.single_arrow() == Some(*a) {
        cx.h1_pair(*a, cx.arrow(*a), cx.int(-1))
    } else {
        Mixed::zero()
    }
}

/// `[(a, a*), ψ_{e, p'}] = −(a, e)` when `a = p'`.
fn char2_loop_dual_psi_ep(cx: &RuleContext, x: &CohomologyElement, y: &CohomologyElement) -> Mixed {
    let (Char2LoopDual(a), PsiEP(e, p)) = (x, y) else { unreachable!() };
    if p.single_arrow() == Some(*a) {
        cx.h1_pair(*a, Path::vertex(*e), cx.int(-1))
    } else {
        Mixed::zero()
    }
}

macro_rules! rules {
    ($($left:literal, $right:literal => $cell:expr;)*) => {
        &[$(Rule { left: $left, right: $right, cell: $cell }),*]
    };
}

/// Every bracket between different summands, keyed by argument kinds.
pub static RULES: &[Rule] = rules! {
    // centre with HH¹(A)
    "Identity", "Char2Loop" => zero;
    "Identity", "FundCycle" => zero;
    "Identity", "Deviation" => zero;
    "Identity", "Shortcut" => zero;
    "CentralCycle", "Char2Loop" => cycle_char2_loop;
    "CentralCycle", "FundCycle" => cycle_fund;
    "CentralCycle", "Deviation" => zero;
    "CentralCycle", "Shortcut" => zero;
    // centre with HH₁(A)*
    "Identity", "Char2LoopDual" => identity_fixes;
    "Identity", "LoopAtIdempotent" => identity_fixes;
    "Identity", "SkewPair" => identity_fixes;
    "CentralCycle", "Char2LoopDual" => cycle_char2_loop_dual;
    "CentralCycle", "LoopAtIdempotent" => zero;
    "CentralCycle", "SkewPair" => zero;
    // HH¹(A) with HH₁(A)*
    "Shortcut", "Char2LoopDual" => zero;
    "Shortcut", "LoopAtIdempotent" => zero;
    "Shortcut", "SkewPair" => zero;
    "Deviation", "Char2LoopDual" => zero;
    "Deviation", "LoopAtIdempotent" => zero;
    "Deviation", "SkewPair" => zero;
    "FundCycle", "Char2LoopDual" => zero;
    "FundCycle", "LoopAtIdempotent" => fund_loop_idempotent;
    "FundCycle", "SkewPair" => fund_skew_pair;
    "Char2Loop", "Char2LoopDual" => zero;
    "Char2Loop", "LoopAtIdempotent" => char2_loop_loop_idempotent;
    "Char2Loop", "SkewPair" => zero;
    // centre with Alt
    "CentralCycle", "Phi" => zero;
    "CentralCycle", "Psi_PP" => zero;
    "CentralCycle", "Psi_eP" => cycle_psi_ep;
    "Identity", "Phi" => identity_negates;
    "Identity", "Psi_PP" => identity_negates;
    "Identity", "Psi_eP" => identity_negates;
    // HH¹(A) with Alt
    "Shortcut", "Phi" => zero;
    "Shortcut", "Psi_PP" => zero;
    "Shortcut", "Psi_eP" => zero;
    "Deviation", "Phi" => zero;
    "Deviation", "Psi_PP" => zero;
    "Deviation", "Psi_eP" => zero;
    "FundCycle", "Phi" => fund_phi;
    "FundCycle", "Psi_PP" => zero;
    "FundCycle", "Psi_eP" => fund_psi_ep;
    "Char2Loop", "Phi" => zero;
    "Char2Loop", "Psi_PP" => char2_loop_psi_pp;
    "Char2Loop", "Psi_eP" => zero;
    // HH₁(A)* with Alt
    "SkewPair", "Phi" => skew_pair_phi;
    "SkewPair", "Psi_PP" => zero;
    "SkewPair", "Psi_eP" => zero;
    "LoopAtIdempotent", "Phi" => zero;
    "LoopAtIdempotent", "Psi_PP" => loop_idempotent_psi_pp;
    "LoopAtIdempotent", "Psi_eP" => loop_idempotent_psi_ep;
    "Char2LoopDual", "Phi" => zero;
    "Char2LoopDual", "Psi_PP" => char2_loop_dual_psi_pp;
    "Char2LoopDual", "Psi_eP" => char2_loop_dual_psi_ep;
};

pub fn find_rule(left: &str, right: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.left == left && r.right == right)
}

/// Coordinates of mixed representatives in a basis of `HH¹(TA)`.
pub struct TaCoordinates<'g> {
    g: &'g GentlePresentation,
    field: Field,
    basis: Vec<CohomologyElement>,
    hh1: CohomologyBracket<'g>,
    dual: DualFirstHomology,
}

impl<'g> TaCoordinates<'g> {
    pub fn new(g: &'g GentlePresentation, field: Field, basis: Vec<CohomologyElement>) -> Self {
        TaCoordinates { g, field, basis, hh1: CohomologyBracket::new(g, field), dual: DualFirstHomology::new(g, field) }
    }

    pub fn basis(&self) -> &[CohomologyElement] {
        &self.basis
    }

    pub fn hh1(&self) -> &CohomologyBracket<'g> {
        &self.hh1
    }

    fn members(&self, s: Summand) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].summand() == s).collect()
    }

    /// Solves in the span of plain vectors (centre and Alt).
    fn solve_plain(&self, target: &SparseVector<Pair>, reps: &[SparseVector<Pair>]) -> Option<Vec<Scalar>> {
        let keys: BTreeSet<Pair> = reps.iter().flat_map(|r| r.keys().cloned()).chain(target.keys().cloned()).collect();
        let coords = Coordinates::new(keys.into_iter().collect());
        let columns: Vec<Vec<Scalar>> = reps.iter().map(|r| coords.dense(r, self.field)).collect();
        solve_combination(self.field, &columns, &coords.dense(target, self.field))
    }

    pub fn coordinates(&self, m: &Mixed) -> Result<Vec<Scalar>, LieError> {
        let (g, field) = (self.g, self.field);
        let mut out = vec![field.zero(); self.basis.len()];
        for s in [Summand::Center, Summand::H1Dual, Summand::H1, Summand::Alt] {
            let idx = self.members(s);
            let solved = match s {
                Summand::Center => {
                    let reps: Vec<_> = idx.iter().map(|&i| self.basis[i].center_vector(g, field).unwrap()).collect();
                    self.solve_plain(&m.center, &reps)
                }
                Summand::Alt => {
                    let reps: Vec<_> = idx.iter().map(|&i| self.basis[i].alt_map(g, field).unwrap()).collect();
                    self.solve_plain(&m.alt, &reps)
                }
                Summand::H1 => {
                    let reps: Vec<_> = idx.iter().map(|&i| self.basis[i].cochain(g, field).unwrap()).collect();
                    self.hh1.complex().space.coordinates(&m.h1, &reps)
                }
                Summand::H1Dual => {
                    let reps: Vec<_> = idx.iter().map(|&i| self.basis[i].dual_chain(g, field).unwrap()).collect();
                    self.dual.space.coordinates(&m.dual, &reps)
                }
            };
            let solved = solved.ok_or(LieError::OutsideSpan)?;
            for (i, c) in idx.into_iter().zip(solved) {
                out[i] = c;
            }
        }
        Ok(out)
    }

    /// `[x, y]` as a mixed representative, by rule lookup.
    pub fn bracket_mixed(&self, x: &CohomologyElement, y: &CohomologyElement) -> Result<Mixed, LieError> {
        let cx = RuleContext { g: self.g, field: self.field };
        let (sx, sy) = (x.summand(), y.summand());
        if sx == sy {
            return match sx {
                Summand::H1 => {
                    let h1 = self.hh1.bracket(&x.cochain(self.g, self.field).unwrap(), &y.cochain(self.g, self.field).unwrap())?;
                    Ok(Mixed { h1, ..Mixed::zero() })
                }
                _ => Ok(Mixed::zero()),
            };
        }
        if let Some(rule) = find_rule(x.kind(), y.kind()) {
            return Ok((rule.cell)(&cx, x, y));
        }
        if let Some(rule) = find_rule(y.kind(), x.kind()) {
            return Ok((rule.cell)(&cx, y, x).scaled(&self.field.from_i64(-1)));
        }
        Err(LieError::UnknownTagPair(x.kind(), y.kind()))
    }

    /// Coordinates of `[x, y]` in the basis.
    pub fn bracket(&self, x: &CohomologyElement, y: &CohomologyElement) -> Result<Vec<Scalar>, LieError> {
        self.coordinates(&self.bracket_mixed(x, y)?)
    }
}

/// `[x, y]` in the canonical basis of `HH¹(TA)`.
pub fn bracket_tga(
    x: &CohomologyElement,
    y: &CohomologyElement,
    g: &GentlePresentation,
    field: Field,
) -> Result<SparseVector<CohomologyElement>, LieError> {
    let coords = TaCoordinates::new(g, field, trivial_extension_hh1_basis(g, field));
    let c = coords.bracket(x, y)?;
    Ok(coords.basis().iter().cloned().zip(c).filter(|(_, c)| !c.is_zero()).collect())
}
