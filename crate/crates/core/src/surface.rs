//! Surfaces glued from columns of annuli.
//!
//! A column `A(l, r; d)` is `d` annuli stacked top to bottom, each with `l`
//! stops on its left boundary and `r` on its right. Stops on a side of the
//! column are numbered top to bottom, annulus by annulus, so stop `x` on
//! the right of a column lies on annulus `x / r` at position `x % r`. A
//! gluing permutation `σ` attaches a strip from right stop `x` of one column
//! to left stop `σ(x)` of the next.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perms::{boundary_permutation, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("a glued surface needs at least one column")]
    NoColumns,
    #[error("column {column} has no annuli")]
    EmptyColumn { column: usize },
    #[error("{mode} gluing of {columns} columns needs {expected} permutations, got {found}")]
    GluingCount {
        mode: GluingMode,
        columns: usize,
        expected: usize,
        found: usize,
    },
    #[error(
        "interface {interface} (column {from} -> column {to}): r*d = {right} but next l*d = {left}"
    )]
    SizeMismatch {
        interface: usize,
        from: usize,
        to: usize,
        right: usize,
        left: usize,
    },
    #[error("interface {interface}: permutation acts on {found} points, expected {expected}")]
    PermutationSize {
        interface: usize,
        expected: usize,
        found: usize,
    },
    #[error("interface {interface}: column {column} has no {side} stops at a glued side")]
    NoStops {
        interface: usize,
        column: usize,
        side: &'static str,
    },
    #[error("surface has {0} connected components; genus is only defined per component")]
    Disconnected(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GluingMode {
    Circular,
    Linear,
}

impl std::fmt::Display for GluingMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GluingMode::Circular => "circular",
            GluingMode::Linear => "linear",
        })
    }
}

/// `A(l, r; d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Column {
    pub l: usize,
    pub r: usize,
    pub d: usize,
}

impl Column {
    pub fn new(l: usize, r: usize, d: usize) -> Self {
        Column { l, r, d }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluedSurfaceSpec {
    pub mode: GluingMode,
    pub columns: Vec<Column>,
    pub gluings: Vec<Permutation>,
}

/// One glued interface: strips from the right of `from` to the left of `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interface {
    pub index: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundaryKind {
    /// A cycle of the interface's boundary permutation.
    Interface { interface: usize, cycle: Vec<usize> },
    /// Left boundary of an annulus in the first column of a linear gluing.
    LeftEnd { annulus: usize },
    /// Right boundary of an annulus in the last column of a linear gluing.
    RightEnd { annulus: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryComponent {
    #[serde(flatten)]
    pub kind: BoundaryKind,
    pub winding: i64,
    pub stops: usize,
}

/// Multiset of `(value, multiplicity)` pairs, sorted by value.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Multiset(Vec<(i64, usize)>);

impl Multiset {
    pub fn from_values(values: impl IntoIterator<Item = i64>) -> Self {
        let mut counts = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_insert(0usize) += 1;
        }
        Multiset(counts.into_iter().collect())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        Multiset::from_values(
            pairs
                .into_iter()
                .flat_map(|(v, n)| std::iter::repeat_n(v, n)),
        )
    }

    pub fn pairs(&self) -> &[(i64, usize)] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&(_, n)| n).sum()
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().flat_map(|&(v, n)| std::iter::repeat_n(v, n))
    }
}

impl std::fmt::Display for Multiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, (v, n)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *n == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{n}")?;
            }
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub euler: i64,
    pub boundary_count: usize,
    pub windings: Multiset,
    /// `None` when the surface is disconnected.
    pub genus: Option<i64>,
    pub h0: usize,
    pub h1: i64,
    /// Number of stops on each boundary component, as a multiset.
    pub stop_signature: Multiset,
    pub total_stops: usize,
}

impl GluedSurfaceSpec {
    pub fn new(mode: GluingMode, columns: Vec<Column>, gluings: Vec<Permutation>) -> Self {
        GluedSurfaceSpec {
            mode,
            columns,
            gluings,
        }
    }

    pub fn interface_count(&self) -> usize {
        match self.mode {
            GluingMode::Circular => self.columns.len(),
            GluingMode::Linear => self.columns.len().saturating_sub(1),
        }
    }

    pub fn interfaces(&self) -> impl Iterator<Item = Interface> + '_ {
        let n = self.columns.len();
        (0..self.interface_count()).map(move |i| Interface {
            index: i,
            from: i,
            to: (i + 1) % n,
        })
    }

    pub fn validate(&self) -> Result<(), SurfaceError> {
        if self.columns.is_empty() {
            return Err(SurfaceError::NoColumns);
        }
        if let Some(column) = self.columns.iter().position(|c| c.d == 0) {
            return Err(SurfaceError::EmptyColumn { column });
        }
        let expected = self.interface_count();
        if self.gluings.len() != expected {
            return Err(SurfaceError::GluingCount {
                mode: self.mode,
                columns: self.columns.len(),
                expected,
                found: self.gluings.len(),
            });
        }
        for iface in self.interfaces() {
            let from = self.columns[iface.from];
            let to = self.columns[iface.to];
            if from.r == 0 {
                return Err(SurfaceError::NoStops {
                    interface: iface.index,
                    column: iface.from,
                    side: "right",
                });
            }
            if to.l == 0 {
                return Err(SurfaceError::NoStops {
                    interface: iface.index,
                    column: iface.to,
                    side: "left",
                });
            }
            let right = from.r * from.d;
            let left = to.l * to.d;
            if right != left {
                return Err(SurfaceError::SizeMismatch {
                    interface: iface.index,
                    from: iface.from,
                    to: iface.to,
                    right,
                    left,
                });
            }
            let found = self.gluings[iface.index].len();
            if found != right {
                return Err(SurfaceError::PermutationSize {
                    interface: iface.index,
                    expected: right,
                    found,
                });
            }
        }
        Ok(())
    }

    /// Number of attaching strips.
    pub fn strip_count(&self) -> usize {
        self.interfaces()
            .map(|i| self.columns[i.from].r * self.columns[i.from].d)
            .sum()
    }

    pub fn annulus_count(&self) -> usize {
        self.columns.iter().map(|c| c.d).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        -(self.strip_count() as i64)
    }

    pub fn interface_boundary_permutation(&self, iface: Interface) -> Permutation {
        let from = self.columns[iface.from];
        let to = self.columns[iface.to];
        boundary_permutation(&self.gluings[iface.index], to.l, to.d, from.r, from.d)
            .expect("validated spec")
    }

    /// Every boundary circle with its winding number and stop count.
    ///
    /// An interface cycle of length `L` has winding `−2L` and carries `2L`
    /// stops (one per strip side it runs along). Distinguished ends of a
    /// linear gluing cross no strips and have winding 0.
    pub fn boundary_components(&self) -> Vec<BoundaryComponent> {
        let mut out = Vec::new();
        if self.mode == GluingMode::Linear {
            let first = self.columns[0];
            out.extend((0..first.d).map(|annulus| BoundaryComponent {
                kind: BoundaryKind::LeftEnd { annulus },
                winding: 0,
                stops: first.l,
            }));
        }
        for iface in self.interfaces() {
            for cycle in self.interface_boundary_permutation(iface).cycles() {
                let len = cycle.len();
                out.push(BoundaryComponent {
                    kind: BoundaryKind::Interface {
                        interface: iface.index,
                        cycle,
                    },
                    winding: -2 * len as i64,
                    stops: 2 * len,
                });
            }
        }
        if self.mode == GluingMode::Linear {
            let last = *self.columns.last().expect("non-empty");
            out.extend((0..last.d).map(|annulus| BoundaryComponent {
                kind: BoundaryKind::RightEnd { annulus },
                winding: 0,
                stops: last.r,
            }));
        }
        out
    }

    pub fn boundary_profile(&self) -> Multiset {
        Multiset::from_values(self.boundary_components().iter().map(|b| b.winding))
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_components().len()
    }

    pub fn homology_ranks(&self) -> (usize, i64) {
        let h0 = self.ribbon_graph().component_count();
        (h0, h0 as i64 - self.euler_characteristic())
    }

    pub fn genus(&self) -> Result<i64, SurfaceError> {
        let h0 = self.ribbon_graph().component_count();
        if h0 != 1 {
            return Err(SurfaceError::Disconnected(h0));
        }
        Ok(genus_from(
            self.euler_characteristic(),
            self.boundary_count(),
        ))
    }

    pub fn invariants(&self) -> SurfaceInvariants {
        let boundary = self.boundary_components();
        let euler = self.euler_characteristic();
        let h0 = self.ribbon_graph().component_count();
        let b = boundary.len();
        SurfaceInvariants {
            euler,
            boundary_count: b,
            windings: Multiset::from_values(boundary.iter().map(|c| c.winding)),
            genus: (h0 == 1).then(|| genus_from(euler, b)),
            h0,
            h1: h0 as i64 - euler,
            stop_signature: Multiset::from_values(boundary.iter().map(|c| c.stops as i64)),
            total_stops: boundary.iter().map(|c| c.stops).sum(),
        }
    }

    pub fn ribbon_graph(&self) -> RibbonGraph {
        RibbonGraph::from_spec(self)
    }
}

fn genus_from(euler: i64, boundary: usize) -> i64 {
    let twice = 2 - euler - boundary as i64;
    debug_assert!(twice >= 0 && twice % 2 == 0, "χ={euler}, b={boundary}");
    twice / 2
}

/// Which end of the retracted annulus a half-edge leaves from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    LoopTop,
    LoopBottom,
    Left(usize),
    Right(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RibbonVertex {
    pub column: usize,
    pub annulus: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Loop,
    Strip { interface: usize, stop: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RibbonEdge {
    pub kind: EdgeKind,
    /// Half-edge ids of the two ends.
    pub ends: [usize; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfEdge {
    pub vertex: usize,
    pub slot: Slot,
    pub edge: usize,
}

/// Fat graph the glued surface retracts onto: one vertex per annulus, one
/// loop per annulus closing it up, and one edge per attaching strip.
///
/// The cyclic order at a vertex walks the annulus boundary counterclockwise:
/// loop top, left stops top to bottom, loop bottom, right stops bottom to top.
#[derive(Debug, Clone)]
pub struct RibbonGraph {
    pub vertices: Vec<RibbonVertex>,
    pub edges: Vec<RibbonEdge>,
    pub half_edges: Vec<HalfEdge>,
    /// Half-edge ids around each vertex in cyclic order.
    pub rotation: Vec<Vec<usize>>,
}

impl RibbonGraph {
    pub fn from_spec(spec: &GluedSurfaceSpec) -> Self {
        let mut vertices = Vec::new();
        let mut vertex_index = BTreeMap::new();
        for (column, c) in spec.columns.iter().enumerate() {
            for annulus in 0..c.d {
                vertex_index.insert((column, annulus), vertices.len());
                vertices.push(RibbonVertex { column, annulus });
            }
        }

        let mut half_edges: Vec<HalfEdge> = Vec::new();
        let mut edges = Vec::new();
        let mut slots: BTreeMap<(usize, Slot), usize> = BTreeMap::new();
        let mut add_edge = |kind, a: (usize, Slot), b: (usize, Slot)| {
            let e = edges.len();
            let ha = half_edges.len();
            half_edges.push(HalfEdge {
                vertex: a.0,
                slot: a.1,
                edge: e,
            });
            half_edges.push(HalfEdge {
                vertex: b.0,
                slot: b.1,
                edge: e,
            });
            slots.insert(a, ha);
            slots.insert(b, ha + 1);
            edges.push(RibbonEdge {
                kind,
                ends: [ha, ha + 1],
            });
        };

        for (v, _) in vertices.iter().enumerate() {
            add_edge(EdgeKind::Loop, (v, Slot::LoopTop), (v, Slot::LoopBottom));
        }
        for iface in spec.interfaces() {
            let from = spec.columns[iface.from];
            let to = spec.columns[iface.to];
            let sigma = &spec.gluings[iface.index];
            for stop in 0..from.r * from.d {
                let target = sigma.apply(stop);
                let a = vertex_index[&(iface.from, stop / from.r)];
                let b = vertex_index[&(iface.to, target / to.l)];
                add_edge(
                    EdgeKind::Strip {
                        interface: iface.index,
                        stop,
                    },
                    (a, Slot::Right(stop % from.r)),
                    (b, Slot::Left(target % to.l)),
                );
            }
        }

        let rotation = vertices
            .iter()
            .enumerate()
            .map(|(v, rv)| {
                let c = spec.columns[rv.column];
                let mut order = vec![Slot::LoopTop];
                order.extend((0..c.l).map(Slot::Left));
                order.push(Slot::LoopBottom);
                order.extend((0..c.r).rev().map(Slot::Right));
                order
                    .into_iter()
                    .filter_map(|s| slots.get(&(v, s)).copied())
                    .collect()
            })
            .collect();

        RibbonGraph {
            vertices,
            edges,
            half_edges,
            rotation,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    fn partner(&self, h: usize) -> usize {
        h ^ 1
    }

    fn next_around_vertex(&self) -> Vec<usize> {
        let mut next = vec![0; self.half_edges.len()];
        for ring in &self.rotation {
            for (i, &h) in ring.iter().enumerate() {
                next[h] = ring[(i + 1) % ring.len()];
            }
        }
        next
    }

    /// Connected component label of every vertex, numbered from 0 in order
    /// of first appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let a = find(&mut parent, self.half_edges[e.ends[0]].vertex);
            let b = find(&mut parent, self.half_edges[e.ends[1]].vertex);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut roots = BTreeMap::new();
        (0..n)
            .map(|v| {
                let root = find(&mut parent, v);
                let next = roots.len();
                *roots.entry(root).or_insert(next)
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_labels()
            .into_iter()
            .max()
            .map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Boundary cycles of the thickened graph, as half-edge sequences.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let next = self.next_around_vertex();
        let mut seen = vec![false; self.half_edges.len()];
        let mut faces = Vec::new();
        for start in 0..self.half_edges.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                face.push(h);
                h = next[self.partner(h)];
            }
            faces.push(face);
        }
        faces
    }

    /// Winding of each face, counted as minus the strips it runs along.
    pub fn face_windings(&self) -> Multiset {
        Multiset::from_values(self.faces().iter().map(|face| {
            -(face
                .iter()
                .filter(|&&h| {
                    matches!(
                        self.edges[self.half_edges[h].edge].kind,
                        EdgeKind::Strip { .. }
                    )
                })
                .count() as i64)
        }))
    }

    /// Genus of each connected component from `V − E + F = 2 − 2g`.
    pub fn component_genera(&self) -> Vec<i64> {
        let labels = self.component_labels();
        let count = self.component_count();
        let mut v = vec![0i64; count];
        let mut e = vec![0i64; count];
        let mut f = vec![0i64; count];
        for (i, _) in self.vertices.iter().enumerate() {
            v[labels[i]] += 1;
        }
        for edge in &self.edges {
            e[labels[self.half_edges[edge.ends[0]].vertex]] += 1;
        }
        for face in self.faces() {
            f[labels[self.half_edges[face[0]].vertex]] += 1;
        }
        (0..count).map(|c| (2 - v[c] + e[c] - f[c]) / 2).collect()
    }

    /// Graphviz rendering. Loops are self-edges; each vertex lists its cyclic
    /// half-edge order in a `rotation` attribute.
    pub fn to_dot(&self) -> String {
        let name = |v: usize| {
            let rv = self.vertices[v];
            format!("a{}_{}", rv.column, rv.annulus)
        };
        let mut out = String::from("graph ribbon {\n");
        for (v, ring) in self.rotation.iter().enumerate() {
            let rv = self.vertices[v];
            let order: Vec<String> = ring
                .iter()
                .map(|&h| match self.half_edges[h].slot {
                    Slot::LoopTop => "top".to_string(),
                    Slot::LoopBottom => "bottom".to_string(),
                    Slot::Left(c) => format!("L{c}"),
                    Slot::Right(c) => format!("R{c}"),
                })
                .collect();
            let _ = writeln!(
                out,
                "  {} [label=\"A{}.{}\", rotation=\"{}\"];",
                name(v),
                rv.column,
                rv.annulus,
                order.join(" ")
            );
        }
        for e in &self.edges {
            let a = name(self.half_edges[e.ends[0]].vertex);
            let b = name(self.half_edges[e.ends[1]].vertex);
            let label = match e.kind {
                EdgeKind::Loop => "loop".to_string(),
                EdgeKind::Strip { interface, stop } => format!("s{interface}.{stop}"),
            };
            let _ = writeln!(out, "  {a} -- {b} [label=\"{label}\"];");
        }
        out.push_str("}\n");
        out
    }
}
