//! Quivers with length-two monomial relations, and the quiver of the
//! generating collection of a glued surface.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Display, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::surface::GluedSurfaceSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowKind {
    X,
    Y,
    A,
    B,
}

impl Display for ArrowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArrowKind::X => "x",
            ArrowKind::Y => "y",
            ArrowKind::A => "a",
            ArrowKind::B => "b",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow<V> {
    pub kind: ArrowKind,
    pub name: String,
    pub source: V,
    pub target: V,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("arrow endpoint {0} is not a vertex")]
    UnknownVertex(String),
    #[error("arrow index {0} out of range")]
    UnknownArrow(usize),
    #[error("relation ({first}, {second}) is not composable")]
    NotComposable { first: String, second: String },
}

/// A quiver whose relations are pairs `(α, β)` with `βα = 0`.
///
/// Vertices are kept sorted, so iteration and rendering are deterministic.
#[derive(Debug, Clone)]
pub struct Quiver<V> {
    vertices: BTreeSet<V>,
    arrows: Vec<Arrow<V>>,
    relations: BTreeSet<(usize, usize)>,
}

impl<V> Default for Quiver<V> {
    fn default() -> Self {
        Quiver {
            vertices: BTreeSet::new(),
            arrows: Vec::new(),
            relations: BTreeSet::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum GentleViolation {
    InValence {
        vertex: String,
        count: usize,
    },
    OutValence {
        vertex: String,
        count: usize,
    },
    /// More than one `β` with `βα = 0`.
    ZeroAfter {
        arrow: String,
        count: usize,
    },
    /// More than one `γ` with `γα` not a relation.
    NonzeroAfter {
        arrow: String,
        count: usize,
    },
    /// More than one `α` with `βα = 0`.
    ZeroBefore {
        arrow: String,
        count: usize,
    },
    /// More than one `γ` with `βγ` not a relation.
    NonzeroBefore {
        arrow: String,
        count: usize,
    },
}

impl Display for GentleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GentleViolation::InValence { vertex, count } => {
                write!(f, "{count} arrows end at {vertex}")
            }
            GentleViolation::OutValence { vertex, count } => {
                write!(f, "{count} arrows start at {vertex}")
            }
            GentleViolation::ZeroAfter { arrow, count } => {
                write!(f, "{count} arrows kill {arrow} from the left")
            }
            GentleViolation::NonzeroAfter { arrow, count } => {
                write!(f, "{count} arrows compose nontrivially after {arrow}")
            }
            GentleViolation::ZeroBefore { arrow, count } => {
                write!(f, "{count} arrows kill {arrow} from the right")
            }
            GentleViolation::NonzeroBefore { arrow, count } => {
                write!(f, "{count} arrows compose nontrivially before {arrow}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuiverStats {
    pub vertices: usize,
    pub arrows: usize,
    pub relations: usize,
    pub gentle: bool,
}

impl<V: Ord + Clone + Display> Quiver<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: V) {
        self.vertices.insert(v);
    }

    /// Adds an arrow and returns its index. Endpoints must already exist.
    pub fn add_arrow(
        &mut self,
        kind: ArrowKind,
        name: impl Into<String>,
        source: V,
        target: V,
    ) -> Result<usize, QuiverError> {
        for v in [&source, &target] {
            if !self.vertices.contains(v) {
                return Err(QuiverError::UnknownVertex(v.to_string()));
            }
        }
        self.arrows.push(Arrow {
            kind,
            name: name.into(),
            source,
            target,
        });
        Ok(self.arrows.len() - 1)
    }

    /// Records `second ∘ first = 0`.
    pub fn add_relation(&mut self, first: usize, second: usize) -> Result<(), QuiverError> {
        let a = self
            .arrows
            .get(first)
            .ok_or(QuiverError::UnknownArrow(first))?;
        let b = self
            .arrows
            .get(second)
            .ok_or(QuiverError::UnknownArrow(second))?;
        if a.target != b.source {
            return Err(QuiverError::NotComposable {
                first: a.name.clone(),
                second: b.name.clone(),
            });
        }
        self.relations.insert((first, second));
        Ok(())
    }

    pub fn remove_relation(&mut self, first: usize, second: usize) -> bool {
        self.relations.remove(&(first, second))
    }

    pub fn vertices(&self) -> impl Iterator<Item = &V> {
        self.vertices.iter()
    }

    pub fn arrows(&self) -> &[Arrow<V>] {
        &self.arrows
    }

    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.relations.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn contains_vertex(&self, v: &V) -> bool {
        self.vertices.contains(v)
    }

    pub fn out_arrows<'a>(&'a self, v: &'a V) -> impl Iterator<Item = usize> + 'a {
        (0..self.arrows.len()).filter(move |&i| &self.arrows[i].source == v)
    }

    pub fn in_arrows<'a>(&'a self, v: &'a V) -> impl Iterator<Item = usize> + 'a {
        (0..self.arrows.len()).filter(move |&i| &self.arrows[i].target == v)
    }

    /// Every violated gentle axiom; empty iff the bound path algebra is gentle.
    pub fn gentle_violations(&self) -> Vec<GentleViolation> {
        let mut out_of: BTreeMap<&V, Vec<usize>> = BTreeMap::new();
        let mut into: BTreeMap<&V, Vec<usize>> = BTreeMap::new();
        for (i, a) in self.arrows.iter().enumerate() {
            out_of.entry(&a.source).or_default().push(i);
            into.entry(&a.target).or_default().push(i);
        }
        let mut violations = Vec::new();
        for v in &self.vertices {
            let n_in = into.get(v).map_or(0, Vec::len);
            let n_out = out_of.get(v).map_or(0, Vec::len);
            if n_in > 2 {
                violations.push(GentleViolation::InValence {
                    vertex: v.to_string(),
                    count: n_in,
                });
            }
            if n_out > 2 {
                violations.push(GentleViolation::OutValence {
                    vertex: v.to_string(),
                    count: n_out,
                });
            }
        }
        let empty = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            let after = out_of.get(&a.target).unwrap_or(&empty);
            let zero = after
                .iter()
                .filter(|&&j| self.relations.contains(&(i, j)))
                .count();
            let nonzero = after.len() - zero;
            if zero > 1 {
                violations.push(GentleViolation::ZeroAfter {
                    arrow: a.name.clone(),
                    count: zero,
                });
            }
            if nonzero > 1 {
                violations.push(GentleViolation::NonzeroAfter {
                    arrow: a.name.clone(),
                    count: nonzero,
                });
            }
            let before = into.get(&a.source).unwrap_or(&empty);
            let zero = before
                .iter()
                .filter(|&&j| self.relations.contains(&(j, i)))
                .count();
            let nonzero = before.len() - zero;
            if zero > 1 {
                violations.push(GentleViolation::ZeroBefore {
                    arrow: a.name.clone(),
                    count: zero,
                });
            }
            if nonzero > 1 {
                violations.push(GentleViolation::NonzeroBefore {
                    arrow: a.name.clone(),
                    count: nonzero,
                });
            }
        }
        violations
    }

    pub fn is_gentle(&self) -> bool {
        self.gentle_violations().is_empty()
    }

    pub fn stats(&self) -> QuiverStats {
        QuiverStats {
            vertices: self.vertex_count(),
            arrows: self.arrow_count(),
            relations: self.relation_count(),
            gentle: self.is_gentle(),
        }
    }

    /// Graphviz rendering; relations appear as dashed edges between the
    /// midpoints of the two arrows they join.
    pub fn to_dot(&self) -> String {
        let ids: BTreeMap<&V, usize> = self.vertices.iter().zip(0..).collect();
        let mut out = String::from("digraph quiver {\n");
        for (v, id) in &ids {
            let _ = writeln!(out, "  v{id} [label=\"{v}\"];");
        }
        let mut order: Vec<usize> = (0..self.arrows.len()).collect();
        order.sort_by(|&i, &j| {
            let (a, b) = (&self.arrows[i], &self.arrows[j]);
            (&a.source, &a.target, a.kind, &a.name).cmp(&(&b.source, &b.target, b.kind, &b.name))
        });
        for i in order {
            let a = &self.arrows[i];
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{}\"];",
                ids[&a.source], ids[&a.target], a.name
            );
        }
        for &(first, second) in &self.relations {
            let (a, b) = (&self.arrows[first], &self.arrows[second]);
            let _ = writeln!(
                out,
                "  v{} -> v{} [style=dashed, constraint=false, label=\"{}{}=0\"];",
                ids[&a.source], ids[&b.target], b.name, a.name
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Why two quivers differ under a vertex dictionary.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverMismatch {
    #[error("vertex {0} has no image under the dictionary")]
    Untranslated(String),
    #[error("vertices {0} and {1} have the same image")]
    NotInjective(String, String),
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCount(usize, usize),
    #[error("image {0} is not a vertex of the second quiver")]
    MissingVertex(String),
    #[error("arrow {kind} {from} -> {to} occurs {left} times vs {right}")]
    Arrows {
        kind: ArrowKind,
        from: String,
        to: String,
        left: usize,
        right: usize,
    },
    #[error("relation {0} has no counterpart")]
    Relation(String),
}

type ArrowKey<W> = (ArrowKind, W, W);

/// Checks that `dictionary` induces an isomorphism of bound quivers that
/// preserves arrow kinds. Arrows are matched by `(kind, source, target)`.
pub fn quiver_equal<V, W>(
    q1: &Quiver<V>,
    q2: &Quiver<W>,
    dictionary: impl Fn(&V) -> Option<W>,
) -> Result<(), QuiverMismatch>
where
    V: Ord + Clone + Display,
    W: Ord + Clone + Display,
{
    let mut image: BTreeMap<&V, W> = BTreeMap::new();
    let mut preimage: BTreeMap<W, &V> = BTreeMap::new();
    for v in q1.vertices() {
        let w = dictionary(v).ok_or_else(|| QuiverMismatch::Untranslated(v.to_string()))?;
        if !q2.contains_vertex(&w) {
            return Err(QuiverMismatch::MissingVertex(w.to_string()));
        }
        if let Some(prev) = preimage.insert(w.clone(), v) {
            return Err(QuiverMismatch::NotInjective(
                prev.to_string(),
                v.to_string(),
            ));
        }
        image.insert(v, w);
    }
    if q1.vertex_count() != q2.vertex_count() {
        return Err(QuiverMismatch::VertexCount(
            q1.vertex_count(),
            q2.vertex_count(),
        ));
    }

    let key1 = |a: &Arrow<V>| -> ArrowKey<W> {
        (a.kind, image[&a.source].clone(), image[&a.target].clone())
    };
    let key2 = |a: &Arrow<W>| -> ArrowKey<W> { (a.kind, a.source.clone(), a.target.clone()) };

    let mut counts: BTreeMap<ArrowKey<W>, (usize, usize)> = BTreeMap::new();
    for a in q1.arrows() {
        counts.entry(key1(a)).or_default().0 += 1;
    }
    for a in q2.arrows() {
        counts.entry(key2(a)).or_default().1 += 1;
    }
    if let Some(((kind, s, t), (l, r))) = counts.iter().find(|(_, (l, r))| l != r) {
        return Err(QuiverMismatch::Arrows {
            kind: *kind,
            from: s.to_string(),
            to: t.to_string(),
            left: *l,
            right: *r,
        });
    }

    let rel1: BTreeMap<(ArrowKey<W>, ArrowKey<W>), String> = q1
        .relations()
        .map(|(i, j)| {
            let (a, b) = (&q1.arrows()[i], &q1.arrows()[j]);
            ((key1(a), key1(b)), format!("{}{}", b.name, a.name))
        })
        .collect();
    let rel2: BTreeMap<(ArrowKey<W>, ArrowKey<W>), String> = q2
        .relations()
        .map(|(i, j)| {
            let (a, b) = (&q2.arrows()[i], &q2.arrows()[j]);
            ((key2(a), key2(b)), format!("{}{}", b.name, a.name))
        })
        .collect();
    if let Some((_, name)) = rel1.iter().find(|(k, _)| !rel2.contains_key(*k)) {
        return Err(QuiverMismatch::Relation(name.clone()));
    }
    if let Some((_, name)) = rel2.iter().find(|(k, _)| !rel1.contains_key(*k)) {
        return Err(QuiverMismatch::Relation(name.clone()));
    }
    Ok(())
}

/// Objects of the generating collection of a glued surface.
///
/// Along annulus `(i, k)` the objects `P⁻(i, j, k)` for `0 ≤ j ≤ l` and
/// `P⁺(i, m, k)` for `0 ≤ m ≤ r` form two chains. Their bottoms coincide in
/// [`SurfaceVertex::Corner`], and when both sides carry stops their tops
/// coincide in [`SurfaceVertex::Apex`]. Use [`SurfaceVertex::minus`] and
/// [`SurfaceVertex::plus`] to get canonical labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SurfaceVertex {
    Corner {
        column: usize,
        annulus: usize,
    },
    Minus {
        column: usize,
        j: usize,
        annulus: usize,
    },
    Plus {
        column: usize,
        m: usize,
        annulus: usize,
    },
    Apex {
        column: usize,
        annulus: usize,
    },
    Strip {
        interface: usize,
        stop: usize,
    },
}

impl SurfaceVertex {
    pub fn minus(spec: &GluedSurfaceSpec, column: usize, j: usize, annulus: usize) -> Self {
        let c = spec.columns[column];
        if j == 0 {
            SurfaceVertex::Corner { column, annulus }
        } else if j == c.l && c.r > 0 {
            SurfaceVertex::Apex { column, annulus }
        } else {
            SurfaceVertex::Minus { column, j, annulus }
        }
    }

    pub fn plus(spec: &GluedSurfaceSpec, column: usize, m: usize, annulus: usize) -> Self {
        let c = spec.columns[column];
        if m == 0 {
            SurfaceVertex::Corner { column, annulus }
        } else if m == c.r && c.l > 0 {
            SurfaceVertex::Apex { column, annulus }
        } else {
            SurfaceVertex::Plus { column, m, annulus }
        }
    }
}

impl Display for SurfaceVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SurfaceVertex::Corner { column, annulus } => write!(f, "P0({column},{annulus})"),
            SurfaceVertex::Minus { column, j, annulus } => {
                write!(f, "P-({column},{j},{annulus})")
            }
            SurfaceVertex::Plus { column, m, annulus } => {
                write!(f, "P+({column},{m},{annulus})")
            }
            SurfaceVertex::Apex { column, annulus } => write!(f, "Ptop({column},{annulus})"),
            SurfaceVertex::Strip { interface, stop } => write!(f, "S({interface},{stop})"),
        }
    }
}

/// Quiver of the endomorphism algebra of the generating collection.
///
/// Each annulus contributes its two chains of `x` and `y` arrows. The strip
/// from right stop `j = k₊r + c₊` to left stop `σ(j) = k₋l' + c₋` gives an
/// object `S(i, j)` with arrows `a` to `P⁺(i, c₊, k₊)` and `b` to
/// `P⁻(i+1, l'−1−c₋, k₋)`, killed by the `y` and `x` leaving those targets.
///
/// The spec must be valid.
pub fn generating_quiver(spec: &GluedSurfaceSpec) -> Quiver<SurfaceVertex> {
    let mut q = Quiver::new();
    let mut x_from: BTreeMap<SurfaceVertex, usize> = BTreeMap::new();
    let mut y_from: BTreeMap<SurfaceVertex, usize> = BTreeMap::new();

    for (i, c) in spec.columns.iter().enumerate() {
        for k in 0..c.d {
            for j in 0..=c.l {
                q.add_vertex(SurfaceVertex::minus(spec, i, j, k));
            }
            for m in 0..=c.r {
                q.add_vertex(SurfaceVertex::plus(spec, i, m, k));
            }
            for j in 0..c.l {
                let s = SurfaceVertex::minus(spec, i, j, k);
                let t = SurfaceVertex::minus(spec, i, j + 1, k);
                let id = q
                    .add_arrow(ArrowKind::X, format!("x({i},{j},{k})"), s.clone(), t)
                    .expect("vertices added above");
                x_from.insert(s, id);
            }
            for m in 0..c.r {
                let s = SurfaceVertex::plus(spec, i, m, k);
                let t = SurfaceVertex::plus(spec, i, m + 1, k);
                let id = q
                    .add_arrow(ArrowKind::Y, format!("y({i},{m},{k})"), s.clone(), t)
                    .expect("vertices added above");
                y_from.insert(s, id);
            }
        }
    }

    for iface in spec.interfaces() {
        let from = spec.columns[iface.from];
        let to = spec.columns[iface.to];
        let sigma = &spec.gluings[iface.index];
        for stop in 0..from.r * from.d {
            let (k_plus, c_plus) = (stop / from.r, stop % from.r);
            let image = sigma.apply(stop);
            let (k_minus, c_minus) = (image / to.l, image % to.l);
            let s = SurfaceVertex::Strip {
                interface: iface.index,
                stop,
            };
            q.add_vertex(s.clone());
            let a_target = SurfaceVertex::plus(spec, iface.from, c_plus, k_plus);
            let b_target = SurfaceVertex::minus(spec, iface.to, to.l - 1 - c_minus, k_minus);
            let a = q
                .add_arrow(
                    ArrowKind::A,
                    format!("a({},{stop})", iface.index),
                    s.clone(),
                    a_target.clone(),
                )
                .expect("targets exist");
            let b = q
                .add_arrow(
                    ArrowKind::B,
                    format!("b({},{stop})", iface.index),
                    s,
                    b_target.clone(),
                )
                .expect("targets exist");
            if let Some(&y) = y_from.get(&a_target) {
                q.add_relation(a, y).expect("composable");
            }
            if let Some(&x) = x_from.get(&b_target) {
                q.add_relation(b, x).expect("composable");
            }
        }
    }
    q
}
