//! Two-variable invertible polynomials and the stacky curves attached to
//! their admissible symmetry groups.
//!
//! Kinds: loop `x^p y + y^q x` (with `p ≥ q`), chain `x^p y + y^q`, and
//! Brieskorn–Pham `x^p + y^q`. The transpose of a chain, `x^p + x y^q`, is
//! carried as a chain with `transposed` set.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::AbelianError;
use crate::bside::{CurveComponent, CurveShape, NodeData, StackyCurveSpec};
use crate::surface::{Multiset, SurfaceInvariants};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvertibleError {
    #[error("exponents must be at least 2, got p = {p}, q = {q}")]
    Exponent { p: u64, q: u64 },
    #[error("loop polynomials are taken with p >= q, got p = {p}, q = {q}")]
    LoopOrder { p: u64, q: u64 },
    #[error("bp:2,2 is degenerate: its mirror annulus has no stops")]
    Degenerate,
    #[error("index {ell} is not admissible: it must be a positive divisor of {d}")]
    Inadmissible { ell: u64, d: u64 },
    #[error("cannot parse polynomial {0:?}; expected loop:p,q, chain:p,q or bp:p,q")]
    Parse(String),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyKind {
    Loop,
    Chain,
    Bp,
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolyKind::Loop => "loop",
            PolyKind::Chain => "chain",
            PolyKind::Bp => "bp",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvertiblePoly {
    pub kind: PolyKind,
    pub p: u64,
    pub q: u64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub transposed: bool,
}

/// Weights `(d1, d2)` of `x, y`, degree `h`, and the weight `d0 = h − d1 − d2`
/// of the extra variable `z` in `w + xyz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightSystem {
    pub d0: i64,
    pub d1: i64,
    pub d2: i64,
    pub h: i64,
}

/// Invariants predicted by the closed formulas of each family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub euler: i64,
    pub boundary_count: usize,
    pub windings: Multiset,
    pub genus: i64,
}

impl ClosedForm {
    pub fn matches(&self, inv: &SurfaceInvariants) -> bool {
        self.euler == inv.euler
            && self.boundary_count == inv.boundary_count
            && self.windings == inv.windings
            && Some(self.genus) == inv.genus
    }
}

impl fmt::Display for InvertiblePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = if self.transposed { "T" } else { "" };
        write!(f, "{}{t}:{},{}", self.kind, self.p, self.q)
    }
}

impl FromStr for InvertiblePoly {
    type Err = InvertibleError;

    /// Accepts `loop:p,q`, `chain:p,q`, `bp:p,q`, and `chainT:p,q` for a
    /// transposed chain.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || InvertibleError::Parse(s.to_string());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let (p, q) = rest.split_once(',').ok_or_else(bad)?;
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        let (kind, transposed) = match kind.trim() {
            "loop" => (PolyKind::Loop, false),
            "chain" => (PolyKind::Chain, false),
            "chainT" => (PolyKind::Chain, true),
            "bp" => (PolyKind::Bp, false),
            _ => return Err(bad()),
        };
        let w = InvertiblePoly::new(kind, p, q)?;
        Ok(if transposed { w.transpose() } else { w })
    }
}

impl InvertiblePoly {
    pub fn new(kind: PolyKind, p: u64, q: u64) -> Result<Self, InvertibleError> {
        if p < 2 || q < 2 {
            return Err(InvertibleError::Exponent { p, q });
        }
        if kind == PolyKind::Loop && p < q {
            return Err(InvertibleError::LoopOrder { p, q });
        }
        Ok(InvertiblePoly {
            kind,
            p,
            q,
            transposed: false,
        })
    }

    pub fn loop_(p: u64, q: u64) -> Result<Self, InvertibleError> {
        Self::new(PolyKind::Loop, p, q)
    }

    pub fn chain(p: u64, q: u64) -> Result<Self, InvertibleError> {
        Self::new(PolyKind::Chain, p, q)
    }

    pub fn bp(p: u64, q: u64) -> Result<Self, InvertibleError> {
        Self::new(PolyKind::Bp, p, q)
    }

    /// Berglund–Hübsch transpose. Loop and Brieskorn–Pham matrices are
    /// symmetric; a chain flips orientation.
    pub fn transpose(&self) -> Self {
        InvertiblePoly {
            transposed: self.kind == PolyKind::Chain && !self.transposed,
            ..*self
        }
    }

    /// Rows are the exponent vectors of the two monomials.
    pub fn exponent_matrix(&self) -> [[i64; 2]; 2] {
        let (p, q) = (self.p as i64, self.q as i64);
        match (self.kind, self.transposed) {
            (PolyKind::Loop, _) => [[p, 1], [1, q]],
            (PolyKind::Chain, false) => [[p, 1], [0, q]],
            (PolyKind::Chain, true) => [[p, 0], [1, q]],
            (PolyKind::Bp, _) => [[p, 0], [0, q]],
        }
    }

    /// The unique primitive positive solution of `A·(d1, d2)ᵀ = (h, h)ᵀ`.
    pub fn weight_system(&self) -> WeightSystem {
        let [[a, b], [c, d]] = self.exponent_matrix();
        let det = a * d - b * c;
        let sign = det.signum();
        let (d1, d2, h) = ((d - b) * sign, (a - c) * sign, det.abs());
        let g = d1.gcd(&d2).gcd(&h);
        let (d1, d2, h) = (d1 / g, d2 / g, h / g);
        WeightSystem {
            d0: h - d1 - d2,
            d1,
            d2,
            h,
        }
    }

    /// `∏ (h/dᵢ − 1)`, the dimension of the Jacobian algebra.
    pub fn milnor_number(&self) -> u64 {
        let w = self.weight_system();
        // (h − d1)(h − d2) / (d1 d2) is an integer for invertible polynomials.
        ((w.h - w.d1) * (w.h - w.d2) / (w.d1 * w.d2)) as u64
    }

    /// The curve data below is stated for `x^p y + y^q`, `x^p + y^q` and
    /// `x^p y + y^q x`; a transposed chain is the chain `(q, p)` after
    /// swapping variables.
    fn normalized(&self) -> InvertiblePoly {
        if self.transposed {
            InvertiblePoly {
                kind: PolyKind::Chain,
                p: self.q,
                q: self.p,
                transposed: false,
            }
        } else {
            *self
        }
    }

    /// `d` with admissible indices the divisors of `d`.
    pub fn d(&self) -> u64 {
        let w = self.normalized();
        match w.kind {
            PolyKind::Loop => (w.p - 1).gcd(&(w.q - 1)),
            PolyKind::Chain => w.p.gcd(&(w.q - 1)),
            PolyKind::Bp => w.p.gcd(&w.q),
        }
    }

    pub fn admissible_indices(&self) -> Vec<u64> {
        let d = self.d();
        (1..=d).filter(|l| d.is_multiple_of(*l)).collect()
    }

    fn check_ell(&self, ell: u64) -> Result<InvertiblePoly, InvertibleError> {
        let w = self.normalized();
        if w.kind == PolyKind::Bp && (w.p, w.q) == (2, 2) {
            return Err(InvertibleError::Degenerate);
        }
        let d = self.d();
        if ell == 0 || !d.is_multiple_of(ell) {
            return Err(InvertibleError::Inadmissible { ell, d });
        }
        Ok(w)
    }

    pub fn bside_curve(&self, ell: u64) -> Result<StackyCurveSpec, InvertibleError> {
        let w = self.check_ell(ell)?;
        match w.kind {
            PolyKind::Loop => {
                let (m, n) = loop_bezout(w.p, w.q);
                loop_curve(w.p, w.q, ell, m, n)
            }
            PolyKind::Chain => chain_curve(w.p, w.q, ell),
            PolyKind::Bp => bp_curve(w.p, w.q, ell),
        }
    }

    /// Loop curve built from a caller-chosen Bézout pair
    /// `m(p−1) + n(q−1) = gcd(p−1, q−1)`.
    pub fn loop_curve_with_bezout(
        &self,
        ell: u64,
        m: i64,
        n: i64,
    ) -> Result<StackyCurveSpec, InvertibleError> {
        let w = self.check_ell(ell)?;
        assert_eq!(
            w.kind,
            PolyKind::Loop,
            "Bézout choice only exists for loops"
        );
        let d = self.d() as i64;
        assert_eq!(
            m * (w.p as i64 - 1) + n * (w.q as i64 - 1),
            d,
            "not a Bézout pair"
        );
        loop_curve(w.p, w.q, ell, m, n)
    }

    pub fn closed_form_invariants(&self, ell: u64) -> Result<ClosedForm, InvertibleError> {
        let w = self.check_ell(ell)?;
        let (p, q, l) = (w.p as i64, w.q as i64, ell as i64);
        let gcd = |a: i64, b: i64| a.gcd(&b);
        Ok(match w.kind {
            PolyKind::Loop => {
                let cycles = gcd(q - 1, (p + q - 2) / l);
                let long = 2 * (p - 1) * (q - 1) / gcd(l * (q - 1), p + q - 2);
                ClosedForm {
                    euler: -(p * q - 1) / l,
                    boundary_count: 2 + cycles as usize,
                    windings: Multiset::from_pairs([
                        (-2 * (p - 1) / l, 1),
                        (-2 * (q - 1) / l, 1),
                        (-long, cycles as usize),
                    ]),
                    genus: (p * q - 1 - gcd(l * (q - 1), p + q - 2)) / (2 * l),
                }
            }
            PolyKind::Chain => {
                let cycles = gcd(q, (p + q - 1) / l);
                let long = 2 * (p - 1) * (q - 1) / gcd(l * q, p + q - 1);
                ClosedForm {
                    euler: -p * (q - 1) / l,
                    boundary_count: 1 + cycles as usize,
                    windings: Multiset::from_pairs([
                        (-2 * (q - 1) / l, 1),
                        (-long, cycles as usize),
                    ]),
                    genus: (p * q - p + l - gcd(l * q, p + q - 1)) / (2 * l),
                }
            }
            PolyKind::Bp => {
                let n = (p - 1) * (q - 1) - 1;
                let cycles = gcd(q, (p + q) / l);
                ClosedForm {
                    euler: -n / l,
                    boundary_count: cycles as usize,
                    windings: Multiset::from_pairs([(-2 * n / gcd(l * q, p + q), cycles as usize)]),
                    genus: (2 * l - 1 + (p - 1) * (q - 1) - gcd(l * q, p + q)) / (2 * l),
                }
            }
        })
    }

    /// Rank of `H₁` of the mirror surface, `1 − χ`.
    pub fn mirror_rank_h1(&self, ell: u64) -> Result<u64, InvertibleError> {
        Ok((1 - self.closed_form_invariants(ell)?.euler) as u64)
    }
}

/// Bézout pair `m(p−1) + n(q−1) = gcd(p−1, q−1)` with `0 ≤ n < (p−1)/d`.
pub fn loop_bezout(p: u64, q: u64) -> (i64, i64) {
    let (a, b) = (p as i64 - 1, q as i64 - 1);
    let e = a.extended_gcd(&b);
    let d = e.gcd;
    let period = a / d;
    let n = e.y.rem_euclid(period);
    let m = (d - n * b) / a;
    debug_assert_eq!(m * a + n * b, d);
    (m, n)
}

fn node(
    moduli: &[u64],
    r_plus: &[i64],
    d_plus: &[i64],
    r_minus: &[i64],
    d_minus: &[i64],
) -> Result<NodeData, InvertibleError> {
    Ok(NodeData::from_coords(
        moduli, r_plus, d_plus, r_minus, d_minus,
    )?)
}

fn loop_curve(
    p: u64,
    q: u64,
    ell: u64,
    m: i64,
    n: i64,
) -> Result<StackyCurveSpec, InvertibleError> {
    let d = (p - 1).gcd(&(q - 1));
    let (a, b) = ((p - 1) / ell, (q - 1) / ell);
    let big = (p - 1) * (q - 1) / d;
    let r3 = [((p - 1) / d) as i64, -n];
    let r1 = [((q - 1) / d) as i64, m];
    let spec = StackyCurveSpec {
        shape: CurveShape::Cycle,
        components: vec![
            CurveComponent::new((p - 1) as usize, 1, b as usize),
            CurveComponent::new(b as usize, a as usize, 1),
            CurveComponent::new(1, (q - 1) as usize, a as usize),
        ],
        nodes: vec![
            node(&[b], &[0], &[1], &[1], &[0])?,
            node(&[a], &[1], &[0], &[0], &[-1])?,
            node(&[big, d / ell], &r3, &[-r1[0], -r1[1]], &r1, &r3)?,
        ],
    };
    Ok(spec)
}

fn chain_curve(p: u64, q: u64, ell: u64) -> Result<StackyCurveSpec, InvertibleError> {
    let b = (q - 1) / ell;
    let big = (p - 1) * (q - 1) / ell;
    Ok(StackyCurveSpec {
        shape: CurveShape::Cycle,
        components: vec![
            CurveComponent::new((p - 1) as usize, 1, b as usize),
            CurveComponent::new(b as usize, big as usize, 1),
        ],
        nodes: vec![
            node(&[b], &[0], &[-1], &[1], &[0])?,
            node(&[big], &[1], &[0], &[(q - 1) as i64], &[1])?,
        ],
    })
}

fn bp_curve(p: u64, q: u64, ell: u64) -> Result<StackyCurveSpec, InvertibleError> {
    let n = ((p - 1) * (q - 1) - 1) / ell;
    Ok(StackyCurveSpec {
        shape: CurveShape::Cycle,
        components: vec![CurveComponent::new(n as usize, n as usize, 1)],
        nodes: vec![node(&[n], &[(q - 1) as i64], &[0], &[1], &[0])?],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ws(d0: i64, d1: i64, d2: i64, h: i64) -> WeightSystem {
        WeightSystem { d0, d1, d2, h }
    }

    #[test]
    fn parse_and_display() {
        let w: InvertiblePoly = "loop:5,5".parse().unwrap();
        assert_eq!(w, InvertiblePoly::loop_(5, 5).unwrap());
        assert_eq!(w.to_string(), "loop:5,5");
        let t: InvertiblePoly = "chainT:2,3".parse().unwrap();
        assert_eq!(t, InvertiblePoly::chain(2, 3).unwrap().transpose());
        assert_eq!(t.to_string().parse::<InvertiblePoly>().unwrap(), t);
        assert!(matches!(
            "loop:2,5".parse::<InvertiblePoly>(),
            Err(InvertibleError::LoopOrder { .. })
        ));
        assert!(matches!(
            "fermat:2,5".parse::<InvertiblePoly>(),
            Err(InvertibleError::Parse(_))
        ));
        assert!(matches!(
            "bp:1,5".parse::<InvertiblePoly>(),
            Err(InvertibleError::Exponent { .. })
        ));
    }

    #[test]
    fn transposes() {
        let l = InvertiblePoly::loop_(5, 5).unwrap();
        assert_eq!(l.transpose(), l);
        let b = InvertiblePoly::bp(3, 2).unwrap();
        assert_eq!(b.transpose(), b);
        let c = InvertiblePoly::chain(2, 3).unwrap();
        assert!(c.transpose().transposed);
        assert_eq!(c.transpose().exponent_matrix(), [[2, 0], [1, 3]]);
        assert_eq!(c.transpose().transpose(), c);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(
            InvertiblePoly::loop_(2, 2).unwrap().weight_system(),
            ws(1, 1, 1, 3)
        );
        // 2·d1 + d2 = h = 3·d2
        assert_eq!(
            InvertiblePoly::chain(2, 3).unwrap().weight_system(),
            ws(1, 1, 1, 3)
        );
        assert_eq!(
            InvertiblePoly::bp(3, 2).unwrap().weight_system(),
            ws(1, 2, 3, 6)
        );
        assert_eq!(
            InvertiblePoly::bp(4, 6).unwrap().weight_system(),
            ws(7, 3, 2, 12)
        );
        // 2·d1 = h = d1 + 3·d2
        assert_eq!(
            InvertiblePoly::chain(2, 3)
                .unwrap()
                .transpose()
                .weight_system(),
            ws(2, 3, 1, 6)
        );
    }

    #[test]
    fn admissible_examples() {
        assert_eq!(
            InvertiblePoly::loop_(5, 5).unwrap().admissible_indices(),
            vec![1, 2, 4]
        );
        assert_eq!(
            InvertiblePoly::chain(2, 3).unwrap().admissible_indices(),
            vec![1, 2]
        );
        assert_eq!(
            InvertiblePoly::bp(3, 2).unwrap().admissible_indices(),
            vec![1]
        );
    }

    #[test]
    fn closed_form_examples() {
        let cf = InvertiblePoly::loop_(5, 5)
            .unwrap()
            .closed_form_invariants(2)
            .unwrap();
        assert_eq!((cf.euler, cf.boundary_count, cf.genus), (-12, 6, 4));
        let cf = InvertiblePoly::chain(2, 3)
            .unwrap()
            .closed_form_invariants(1)
            .unwrap();
        assert_eq!((cf.euler, cf.boundary_count, cf.genus), (-4, 2, 2));
        assert_eq!(cf.windings, Multiset::from_values([-4, -4]));
        let cf = InvertiblePoly::bp(3, 2)
            .unwrap()
            .closed_form_invariants(1)
            .unwrap();
        assert_eq!((cf.euler, cf.boundary_count, cf.genus), (-1, 1, 1));
        assert_eq!(cf.windings, Multiset::from_values([-2]));
    }

    #[test]
    fn inadmissible_and_degenerate() {
        let w = InvertiblePoly::loop_(5, 5).unwrap();
        assert_eq!(
            w.bside_curve(3).unwrap_err(),
            InvertibleError::Inadmissible { ell: 3, d: 4 }
        );
        assert_eq!(
            w.bside_curve(0).unwrap_err(),
            InvertibleError::Inadmissible { ell: 0, d: 4 }
        );
        let b = InvertiblePoly::bp(2, 2).unwrap();
        assert_eq!(b.bside_curve(1).unwrap_err(), InvertibleError::Degenerate);
    }

    #[test]
    fn loop_node_three() {
        let curve = InvertiblePoly::loop_(5, 5).unwrap().bside_curve(2).unwrap();
        let n3 = &curve.nodes[2];
        assert_eq!(n3.group.moduli(), &[4, 2]);
        assert_eq!(n3.chi_r_plus.coords(), &[1, 0]);
        assert_eq!(n3.chi_r_minus.coords(), &[1, 1]);
        curve.validate().unwrap();
    }

    #[test]
    fn small_mirrors() {
        let curve = InvertiblePoly::bp(3, 2).unwrap().bside_curve(1).unwrap();
        let s = curve.mirror_surface_spec().unwrap();
        assert_eq!(s.gluings[0].len(), 1);
        let inv = s.invariants();
        assert_eq!((inv.genus, inv.boundary_count), (Some(1), 1));

        let curve = InvertiblePoly::chain(2, 3).unwrap().bside_curve(1).unwrap();
        let s = curve.mirror_surface_spec().unwrap();
        let cols: Vec<_> = s.columns.iter().map(|c| (c.l, c.r, c.d)).collect();
        assert_eq!(cols, vec![(1, 1, 2), (2, 2, 1)]);
        assert!(s.gluings.iter().all(|g| g.is_identity()));
        assert_eq!(
            curve.nodes[1]
                .stop_labels()
                .iter()
                .map(|c| c.coords()[0])
                .collect::<Vec<_>>(),
            vec![0, 1]
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(
            InvertiblePoly::loop_(2, 2)
                .unwrap()
                .mirror_rank_h1(1)
                .unwrap(),
            4
        );
        assert_eq!(
            InvertiblePoly::chain(2, 3)
                .unwrap()
                .mirror_rank_h1(1)
                .unwrap(),
            5
        );
        for (p, q) in [(3, 2), (5, 3), (7, 7)] {
            let w = InvertiblePoly::bp(p, q).unwrap();
            assert_eq!(w.mirror_rank_h1(1).unwrap(), (p - 1) * (q - 1));
        }
    }

    proptest! {
        #[test]
        fn bezout_is_canonical(p in 2u64..40, q in 2u64..40) {
            let (p, q) = (p.max(q), p.min(q));
            let (m, n) = loop_bezout(p, q);
            let d = (p - 1).gcd(&(q - 1)) as i64;
            prop_assert_eq!(m * (p as i64 - 1) + n * (q as i64 - 1), d);
            prop_assert!(0 <= n && n < (p as i64 - 1) / d);
        }

        #[test]
        fn weights_solve_the_system(kind in 0usize..3, p in 2u64..30, q in 2u64..30, t: bool) {
            let kind = [PolyKind::Loop, PolyKind::Chain, PolyKind::Bp][kind];
            let (p, q) = if kind == PolyKind::Loop { (p.max(q), p.min(q)) } else { (p, q) };
            let mut w = InvertiblePoly::new(kind, p, q).unwrap();
            if t { w = w.transpose(); }
            let ws = w.weight_system();
            let a = w.exponent_matrix();
            prop_assert!(ws.d1 > 0 && ws.d2 > 0);
            prop_assert_eq!(a[0][0] * ws.d1 + a[0][1] * ws.d2, ws.h);
            prop_assert_eq!(a[1][0] * ws.d1 + a[1][1] * ws.d2, ws.h);
            prop_assert_eq!(ws.d1.gcd(&ws.d2).gcd(&ws.h), 1);
        }

        #[test]
        fn symbolic_weights(p in 2i64..30, q in 2i64..30) {
            let g = p.gcd(&q);
            let b = InvertiblePoly::bp(p as u64, q as u64).unwrap().weight_system();
            prop_assert_eq!((b.d1, b.d2, b.h), (q / g, p / g, p * q / g));
            // chain: d2 = h/q and d1 = h(q−1)/(pq), scaled to be primitive.
            let c = InvertiblePoly::chain(p as u64, q as u64).unwrap().weight_system();
            prop_assert_eq!(c.d2 * q, c.h);
            prop_assert_eq!(c.d1 * p * q, c.h * (q - 1));
        }

        #[test]
        fn transpose_is_an_involution(kind in 0usize..3, p in 2u64..20, q in 2u64..20) {
            let kind = [PolyKind::Loop, PolyKind::Chain, PolyKind::Bp][kind];
            let (p, q) = if kind == PolyKind::Loop { (p.max(q), p.min(q)) } else { (p, q) };
            let w = InvertiblePoly::new(kind, p, q).unwrap();
            prop_assert_eq!(w.transpose().transpose(), w);
            if kind != PolyKind::Chain {
                prop_assert_eq!(w.transpose(), w);
            }
        }

        #[test]
        fn gcd_identities(p in 2i64..60, q in 2i64..60) {
            let (lp, lq) = (p.max(q), p.min(q));
            let d = (lp - 1).gcd(&(lq - 1));
            for l in (1..=d).filter(|l| d % l == 0) {
                let s = (lp + lq - 2) / l;
                prop_assert_eq!((lq - 1).gcd(&s), (lp - 1).gcd(&s));
            }
            let d = p.gcd(&q);
            for l in (1..=d).filter(|l| d % l == 0) {
                let s = (p + q) / l;
                prop_assert_eq!(q.gcd(&s), p.gcd(&s));
            }
        }

        #[test]
        fn rank_is_transpose_milnor_number(kind in 0usize..3, p in 2u64..15, q in 2u64..15) {
            let kind = [PolyKind::Loop, PolyKind::Chain, PolyKind::Bp][kind];
            let (p, q) = if kind == PolyKind::Loop { (p.max(q), p.min(q)) } else { (p, q) };
            prop_assume!(!(kind == PolyKind::Bp && (p, q) == (2, 2)));
            let w = InvertiblePoly::new(kind, p, q).unwrap();
            prop_assert_eq!(w.mirror_rank_h1(1).unwrap(), w.transpose().milnor_number());
        }
    }
}
