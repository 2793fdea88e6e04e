//! Cycles and chains of stacky projective lines, described by the isotropy
//! group and characters at each node, and the surface and quiver they
//! determine.
//!
//! Node `i` joins the `+` end of component `i` to the `−` end of component
//! `i + 1` (cyclically for a cycle). At a node with group `H`, the `+` side
//! has orbifold order `r₊ = ord(χ_r+)` and gerbe order `d₊ = |H| / r₊`, and
//! likewise on the `−` side.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{valid_twist_characters, AbelianError, Character, FinAbGroup, WeightSolver};
use crate::perms::Permutation;
use crate::quiver::{
    generating_quiver, quiver_equal, ArrowKind, Quiver, QuiverMismatch, SurfaceVertex,
};
use crate::surface::{Column, GluedSurfaceSpec, GluingMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BsideError {
    #[error("curve has no components")]
    NoComponents,
    #[error("{shape} of {components} components needs {expected} nodes, got {found}")]
    NodeCount {
        shape: CurveShape,
        components: usize,
        expected: usize,
        found: usize,
    },
    #[error("component {0} has d = 0")]
    ZeroGerbe(usize),
    #[error("component {component} has {side} orbifold order 0 at a node")]
    ZeroOrbifoldOrder {
        component: usize,
        side: &'static str,
    },
    #[error(
        "node {node}: {side} side of component {component} expects r = {expected_r}, d = {expected_d}, characters give r = {r}, d = {d}"
    )]
    SideMismatch {
        node: usize,
        component: usize,
        side: &'static str,
        expected_r: usize,
        expected_d: usize,
        r: usize,
        d: usize,
    },
    #[error("node {node}, {side} side: {source}")]
    Characters {
        node: usize,
        side: &'static str,
        source: AbelianError,
    },
    #[error("invalid node data: {0}")]
    Abelian(#[from] AbelianError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveShape {
    Cycle,
    Chain,
}

impl fmt::Display for CurveShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveShape::Cycle => "cycle",
            CurveShape::Chain => "chain",
        })
    }
}

/// A component `P_{r₋, r₊}` with generic stabiliser `μ_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveComponent {
    pub r_minus: usize,
    pub r_plus: usize,
    pub d: usize,
}

impl CurveComponent {
    pub fn new(r_minus: usize, r_plus: usize, d: usize) -> Self {
        CurveComponent { r_minus, r_plus, d }
    }
}

/// Isotropy group of a node with the characters of its two sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawNode", into = "RawNode")]
pub struct NodeData {
    pub group: FinAbGroup,
    pub chi_r_plus: Character,
    pub chi_d_plus: Character,
    pub chi_r_minus: Character,
    pub chi_d_minus: Character,
}

#[derive(Serialize, Deserialize)]
struct RawNode {
    group: Vec<u64>,
    chi_r_plus: Vec<i64>,
    chi_d_plus: Vec<i64>,
    chi_r_minus: Vec<i64>,
    chi_d_minus: Vec<i64>,
}

impl TryFrom<RawNode> for NodeData {
    type Error = AbelianError;

    fn try_from(raw: RawNode) -> Result<Self, Self::Error> {
        NodeData::from_coords(
            &raw.group,
            &raw.chi_r_plus,
            &raw.chi_d_plus,
            &raw.chi_r_minus,
            &raw.chi_d_minus,
        )
    }
}

impl From<NodeData> for RawNode {
    fn from(n: NodeData) -> Self {
        let coords = |c: &Character| c.coords().iter().map(|&x| x as i64).collect();
        RawNode {
            group: n.group.moduli().to_vec(),
            chi_r_plus: coords(&n.chi_r_plus),
            chi_d_plus: coords(&n.chi_d_plus),
            chi_r_minus: coords(&n.chi_r_minus),
            chi_d_minus: coords(&n.chi_d_minus),
        }
    }
}

impl NodeData {
    pub fn from_coords(
        moduli: &[u64],
        chi_r_plus: &[i64],
        chi_d_plus: &[i64],
        chi_r_minus: &[i64],
        chi_d_minus: &[i64],
    ) -> Result<Self, AbelianError> {
        let group = FinAbGroup::new(moduli.to_vec())?;
        Ok(NodeData {
            chi_r_plus: group.element(chi_r_plus)?,
            chi_d_plus: group.element(chi_d_plus)?,
            chi_r_minus: group.element(chi_r_minus)?,
            chi_d_minus: group.element(chi_d_minus)?,
            group,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order() as usize
    }

    /// `(r₊, d₊)`.
    pub fn plus_side(&self) -> (usize, usize) {
        let r = self.chi_r_plus.order() as usize;
        (r, self.order() / r)
    }

    /// `(r₋, d₋)`.
    pub fn minus_side(&self) -> (usize, usize) {
        let r = self.chi_r_minus.order() as usize;
        (r, self.order() / r)
    }

    /// Inverts `(m, k) ↦ −m·χ_r+ + k·χ_d+`.
    pub fn plus_solver(&self) -> Result<WeightSolver, AbelianError> {
        let (r, d) = self.plus_side();
        WeightSolver::new(&self.chi_r_plus, &self.chi_d_plus, r, d)
    }

    /// Inverts `(j, k) ↦ −j·χ_r− + k·χ_d−`.
    pub fn minus_solver(&self) -> Result<WeightSolver, AbelianError> {
        let (r, d) = self.minus_side();
        WeightSolver::new(&self.chi_r_minus, &self.chi_d_minus, r, d)
    }

    /// Character attached to each stop on the `+` side: position `k·r₊ + m`
    /// carries `k·χ_d+ − m·χ_r+`.
    pub fn stop_labels(&self) -> Vec<Character> {
        let (r, d) = self.plus_side();
        (0..d)
            .flat_map(|k| (0..r).map(move |m| (k, m)))
            .map(|(k, m)| {
                self.chi_d_plus
                    .combine(k as i64, &self.chi_r_plus, -(m as i64))
                    .expect("same group")
            })
            .collect()
    }

    /// Sends stop `k₊r₊ + m` to `k₋r₋ + (−j mod r₋)`, where `(j, k₋)` solves
    /// `−j·χ_r− + k₋·χ_d− = k₊·χ_d+ − m·χ_r+`.
    pub fn derive_gluing_permutation(&self) -> Result<Permutation, AbelianError> {
        let solver = self.minus_solver()?;
        let (r_minus, _) = self.minus_side();
        let images = self
            .stop_labels()
            .iter()
            .map(|label| {
                let (j, k) = solver.solve(label)?;
                Ok(k * r_minus + (r_minus - j) % r_minus)
            })
            .collect::<Result<Vec<_>, AbelianError>>()?;
        Ok(Permutation::from_images(images).expect("solver is a bijection"))
    }

    /// Every valid replacement for `χ_d+`, and every one for `χ_d−`.
    pub fn twist_alternatives(&self) -> (Vec<Character>, Vec<Character>) {
        let (rp, dp) = self.plus_side();
        let (rm, dm) = self.minus_side();
        (
            valid_twist_characters(&self.chi_r_plus, rp, dp),
            valid_twist_characters(&self.chi_r_minus, rm, dm),
        )
    }

    /// Same node with `χ_d+` and `χ_d−` replaced.
    pub fn with_twists(&self, chi_d_plus: Character, chi_d_minus: Character) -> NodeData {
        NodeData {
            chi_d_plus,
            chi_d_minus,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StackyCurveSpec {
    pub shape: CurveShape,
    pub components: Vec<CurveComponent>,
    pub nodes: Vec<NodeData>,
}

impl StackyCurveSpec {
    /// Components `(plus, minus)` joined at node `i`.
    pub fn node_components(&self, i: usize) -> (usize, usize) {
        (i, (i + 1) % self.components.len())
    }

    pub fn validate(&self) -> Result<(), BsideError> {
        let n = self.components.len();
        if n == 0 {
            return Err(BsideError::NoComponents);
        }
        let expected = match self.shape {
            CurveShape::Cycle => n,
            CurveShape::Chain => n - 1,
        };
        if self.nodes.len() != expected {
            return Err(BsideError::NodeCount {
                shape: self.shape,
                components: n,
                expected,
                found: self.nodes.len(),
            });
        }
        if let Some(c) = self.components.iter().position(|c| c.d == 0) {
            return Err(BsideError::ZeroGerbe(c));
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let (plus, minus) = self.node_components(i);
            if self.components[plus].r_plus == 0 {
                return Err(BsideError::ZeroOrbifoldOrder {
                    component: plus,
                    side: "+",
                });
            }
            if self.components[minus].r_minus == 0 {
                return Err(BsideError::ZeroOrbifoldOrder {
                    component: minus,
                    side: "-",
                });
            }
            let sides = [
                ("+", plus, node.plus_side(), self.components[plus].r_plus),
                (
                    "-",
                    minus,
                    node.minus_side(),
                    self.components[minus].r_minus,
                ),
            ];
            for (side, component, (r, d), expected_r) in sides {
                let expected_d = self.components[component].d;
                if (r, d) != (expected_r, expected_d) {
                    return Err(BsideError::SideMismatch {
                        node: i,
                        component,
                        side,
                        expected_r,
                        expected_d,
                        r,
                        d,
                    });
                }
            }
            node.plus_solver()
                .map_err(|source| BsideError::Characters {
                    node: i,
                    side: "+",
                    source,
                })?;
            node.minus_solver()
                .map_err(|source| BsideError::Characters {
                    node: i,
                    side: "-",
                    source,
                })?;
        }
        Ok(())
    }

    pub fn gluing_permutations(&self) -> Result<Vec<Permutation>, BsideError> {
        self.nodes
            .iter()
            .map(|n| n.derive_gluing_permutation().map_err(BsideError::from))
            .collect()
    }

    /// Columns `A(r₋, r₊; d)` glued along the derived permutations.
    pub fn mirror_surface_spec(&self) -> Result<GluedSurfaceSpec, BsideError> {
        self.validate()?;
        let columns = self
            .components
            .iter()
            .map(|c| Column::new(c.r_minus, c.r_plus, c.d))
            .collect();
        let mode = match self.shape {
            CurveShape::Cycle => GluingMode::Circular,
            CurveShape::Chain => GluingMode::Linear,
        };
        Ok(GluedSurfaceSpec::new(
            mode,
            columns,
            self.gluing_permutations()?,
        ))
    }

    /// Canonical label of `𝒫_i(j, m, k)`; the top of the `j` chain is the
    /// top of the `m` chain when both are nonempty.
    pub fn projective(&self, component: usize, j: usize, m: i64, k: usize) -> CurveVertex {
        let c = self.components[component];
        if m == -1 && j == c.r_minus && j > 0 && c.r_plus > 0 {
            CurveVertex::P {
                component,
                j: 0,
                m: c.r_plus as i64 - 1,
                k,
            }
        } else {
            CurveVertex::P { component, j, m, k }
        }
    }

    /// Quiver of the exceptional collection with `j_i = 0`, `m_i = −1`.
    ///
    /// The simple `𝒮_i{χ}` at node `i` has an arrow `a` to `𝒫_i(0, m−1, k₊)`
    /// and an arrow `b` to `𝒫_{i+1}(j−1 mod r₋, −1, k₋)`, where
    /// `χ = −m·χ_r+ + k₊·χ_d+ = −j·χ_r− + k₋·χ_d−`.
    pub fn exceptional_quiver(&self) -> Result<Quiver<CurveVertex>, BsideError> {
        self.validate()?;
        let mut q = Quiver::new();
        let mut x_from = std::collections::BTreeMap::new();
        let mut y_from = std::collections::BTreeMap::new();
        for (i, c) in self.components.iter().enumerate() {
            for k in 0..c.d {
                for j in 0..=c.r_minus {
                    q.add_vertex(self.projective(i, j, -1, k));
                }
                for m in -1..c.r_plus as i64 {
                    q.add_vertex(self.projective(i, 0, m, k));
                }
                for j in 0..c.r_minus {
                    let s = self.projective(i, j, -1, k);
                    let t = self.projective(i, j + 1, -1, k);
                    let id = q
                        .add_arrow(ArrowKind::X, format!("x{i}({j},{k})"), s.clone(), t)
                        .expect("vertices added above");
                    x_from.insert(s, id);
                }
                for m in -1..c.r_plus as i64 - 1 {
                    let s = self.projective(i, 0, m, k);
                    let t = self.projective(i, 0, m + 1, k);
                    let id = q
                        .add_arrow(ArrowKind::Y, format!("y{i}({m},{k})"), s.clone(), t)
                        .expect("vertices added above");
                    y_from.insert(s, id);
                }
            }
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let (plus, minus) = self.node_components(i);
            let plus_solver = node.plus_solver()?;
            let minus_solver = node.minus_solver()?;
            let (r_minus, _) = node.minus_side();
            for chi in node.group.elements() {
                let (m, k_plus) = plus_solver.solve(&chi)?;
                let (j, k_minus) = minus_solver.solve(&chi)?;
                let s = CurveVertex::S {
                    node: i,
                    character: chi.coords().to_vec(),
                };
                q.add_vertex(s.clone());
                let a_target = self.projective(plus, 0, m as i64 - 1, k_plus);
                let b_target = self.projective(minus, (j + r_minus - 1) % r_minus, -1, k_minus);
                let a = q
                    .add_arrow(
                        ArrowKind::A,
                        format!("a{i}{chi}"),
                        s.clone(),
                        a_target.clone(),
                    )
                    .expect("targets exist");
                let b = q
                    .add_arrow(ArrowKind::B, format!("b{i}{chi}"), s, b_target.clone())
                    .expect("targets exist");
                if let Some(&y) = y_from.get(&a_target) {
                    q.add_relation(a, y).expect("composable");
                }
                if let Some(&x) = x_from.get(&b_target) {
                    q.add_relation(b, x).expect("composable");
                }
            }
        }
        Ok(q)
    }

    /// Image of a generating-collection object of the mirror surface.
    pub fn dictionary(&self, v: &SurfaceVertex) -> Option<CurveVertex> {
        let get = |i: usize| self.components.get(i).copied();
        Some(match *v {
            SurfaceVertex::Corner { column, annulus } => {
                get(column)?;
                self.projective(column, 0, -1, annulus)
            }
            SurfaceVertex::Minus { column, j, annulus } => {
                get(column)?;
                self.projective(column, j, -1, annulus)
            }
            SurfaceVertex::Plus { column, m, annulus } => {
                get(column)?;
                self.projective(column, 0, m as i64 - 1, annulus)
            }
            SurfaceVertex::Apex { column, annulus } => {
                let c = get(column)?;
                self.projective(column, 0, c.r_plus as i64 - 1, annulus)
            }
            SurfaceVertex::Strip { interface, stop } => {
                let label = self.nodes.get(interface)?.stop_labels().get(stop)?.clone();
                CurveVertex::S {
                    node: interface,
                    character: label.coords().to_vec(),
                }
            }
        })
    }

    /// Compares the exceptional quiver with the generating quiver of the
    /// mirror surface under [`StackyCurveSpec::dictionary`].
    pub fn check_mirror_quivers(&self) -> Result<Result<(), QuiverMismatch>, BsideError> {
        let surface = self.mirror_surface_spec()?;
        let generating = generating_quiver(&surface);
        let exceptional = self.exceptional_quiver()?;
        Ok(quiver_equal(&generating, &exceptional, |v| {
            self.dictionary(v)
        }))
    }
}

/// Objects of the exceptional collection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CurveVertex {
    /// `𝒫_component(j, m, k)`.
    P {
        component: usize,
        j: usize,
        m: i64,
        k: usize,
    },
    /// `𝒮_node{χ}`.
    S { node: usize, character: Vec<u64> },
}

impl fmt::Display for CurveVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveVertex::P { component, j, m, k } => write!(f, "P{component}({j},{m},{k})"),
            CurveVertex::S { node, character } => {
                let coords: Vec<String> = character.iter().map(u64::to_string).collect();
                write!(f, "S{node}{{{}}}", coords.join(","))
            }
        }
    }
}
