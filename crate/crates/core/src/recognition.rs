//! Induced-pattern search and class labels for the hereditary classes the
//! solvers cover.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::vertex_set::VertexSet;

/// The fixed small graphs used as forbidden induced subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    P4,
    P1P3,
    ThreeP1P2,
    FiveP1,
    /// `s` disjoint edges.
    SP2(u8),
    ThreeP1,
    P3,
    TwoP2,
    Paw,
    Triangle,
    P1P2,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::P4 => f.write_str("P4"),
            PatternKind::P1P3 => f.write_str("P1+P3"),
            PatternKind::ThreeP1P2 => f.write_str("3P1+P2"),
            PatternKind::FiveP1 => f.write_str("5P1"),
            PatternKind::SP2(s) => write!(f, "{s}P2"),
            PatternKind::ThreeP1 => f.write_str("3P1"),
            PatternKind::P3 => f.write_str("P3"),
            PatternKind::TwoP2 => f.write_str("2P2"),
            PatternKind::Paw => f.write_str("paw"),
            PatternKind::Triangle => f.write_str("K3"),
            PatternKind::P1P2 => f.write_str("P1+P2"),
        }
    }
}

/// A pattern graph on vertices `0..n` together with symmetry-breaking
/// constraints `(i, j)` meaning the image of `i` precedes the image of `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub kind: PatternKind,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    order: Vec<(usize, usize)>,
}

/// Order, edges, and symmetry-breaking order constraints.
type Layout = (usize, Vec<(usize, usize)>, Vec<(usize, usize)>);

impl Pattern {
    pub fn new(kind: PatternKind) -> Pattern {
        // Linear forests are laid out component by component.
        let (n, edges, order): Layout = match kind {
            PatternKind::P4 => (4, vec![(0, 1), (1, 2), (2, 3)], vec![(0, 3)]),
            PatternKind::P3 => (3, vec![(0, 1), (1, 2)], vec![(0, 2)]),
            PatternKind::P1P3 => (4, vec![(1, 2), (2, 3)], vec![(1, 3)]),
            PatternKind::P1P2 => (3, vec![(1, 2)], vec![(1, 2)]),
            PatternKind::ThreeP1 => (3, vec![], vec![(0, 1), (1, 2)]),
            PatternKind::FiveP1 => (5, vec![], vec![(0, 1), (1, 2), (2, 3), (3, 4)]),
            PatternKind::ThreeP1P2 => (5, vec![(3, 4)], vec![(0, 1), (1, 2), (3, 4)]),
            PatternKind::TwoP2 => return Pattern::new(PatternKind::SP2(2)),
            PatternKind::SP2(s) => {
                let s = s as usize;
                let edges: Vec<_> = (0..s).map(|i| (2 * i, 2 * i + 1)).collect();
                let mut order = edges.clone();
                order.extend((1..s).map(|i| (2 * i - 2, 2 * i)));
                (2 * s, edges, order)
            }
            PatternKind::Triangle => (3, vec![(0, 1), (1, 2), (0, 2)], vec![(0, 1), (1, 2)]),
            PatternKind::Paw => (4, vec![(0, 1), (1, 2), (0, 2), (2, 3)], vec![(0, 1)]),
        };
        Pattern { kind, n, edges, order }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }

    fn degree(&self, a: usize) -> usize {
        self.edges.iter().filter(|&&(x, y)| x == a || y == a).count()
    }
}

/// Finds an induced copy of `pattern` in `inst`, returned as the image of
/// pattern vertices `0..pattern.n` in order.
pub fn contains_induced(inst: &Instance, pattern: &Pattern) -> Option<Vec<usize>> {
    contains_induced_within(inst, &inst.vertices(), pattern)
}

/// As [`contains_induced`], restricted to `G[within]`.
pub fn contains_induced_within(inst: &Instance, within: &VertexSet, pattern: &Pattern) -> Option<Vec<usize>> {
    let k = pattern.n;
    if k == 0 {
        return Some(Vec::new());
    }
    if within.len() < k {
        return None;
    }
    let adj: Vec<Vec<bool>> = (0..k)
        .map(|a| (0..k).map(|b| pattern.adjacent(a, b)).collect())
        .collect();
    let deg: Vec<usize> = (0..k).map(|a| pattern.degree(a)).collect();
    let mut search = Search {
        inst,
        within,
        adj,
        deg,
        order: &pattern.order,
        image: Vec::with_capacity(k),
    };
    if search.extend() {
        Some(search.image)
    } else {
        None
    }
}

struct Search<'a> {
    inst: &'a Instance,
    within: &'a VertexSet,
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
    order: &'a [(usize, usize)],
    image: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let i = self.image.len();
        if i == self.adj.len() {
            return true;
        }
        let mut cand = self.within.clone();
        for (j, &u) in self.image.iter().enumerate() {
            cand.remove(u);
            if self.adj[i][j] {
                cand.intersect_with(self.inst.adjacency(u));
            } else {
                cand.difference_with(self.inst.adjacency(u));
            }
        }
        let lower = self
            .order
            .iter()
            .filter(|&&(a, b)| b == i && a < i)
            .map(|&(a, _)| self.image[a])
            .max();
        for v in &cand {
            if lower.is_some_and(|lo| v <= lo) {
                continue;
            }
            if self.inst.adjacency(v).intersection_len(self.within) < self.deg[i] {
                continue;
            }
            self.image.push(v);
            if self.extend() {
                return true;
            }
            self.image.pop();
        }
        false
    }
}

pub fn is_free(inst: &Instance, kind: PatternKind) -> bool {
    contains_induced(inst, &Pattern::new(kind)).is_none()
}

/// Errors with the embedding if `inst` contains `kind`.
pub fn require_free(inst: &Instance, kind: PatternKind) -> Result<()> {
    match contains_induced(inst, &Pattern::new(kind)) {
        None => Ok(()),
        Some(witness) => Err(Error::ClassViolation { pattern: kind, witness }),
    }
}

/// Class labels in dispatch priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    P4Free,
    P1P3Free,
    ThreeP1P2Free,
    SP2Free(u8),
    Unsupported,
}

impl ClassLabel {
    /// The pattern this label excludes, if any.
    pub fn pattern(self) -> Option<PatternKind> {
        match self {
            ClassLabel::P4Free => Some(PatternKind::P4),
            ClassLabel::P1P3Free => Some(PatternKind::P1P3),
            ClassLabel::ThreeP1P2Free => Some(PatternKind::ThreeP1P2),
            ClassLabel::SP2Free(s) => Some(PatternKind::SP2(s)),
            ClassLabel::Unsupported => None,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::P4Free => f.write_str("P4free"),
            ClassLabel::P1P3Free => f.write_str("P1P3free"),
            ClassLabel::ThreeP1P2Free => f.write_str("ThreeP1P2free"),
            ClassLabel::SP2Free(s) => write!(f, "sP2free({s})"),
            ClassLabel::Unsupported => f.write_str("Unsupported"),
        }
    }
}

impl FromStr for ClassLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        let label = match lower.as_str() {
            "p4free" | "p4" => ClassLabel::P4Free,
            "p1p3free" | "p1p3" => ClassLabel::P1P3Free,
            "threep1p2free" | "3p1p2free" | "3p1p2" => ClassLabel::ThreeP1P2Free,
            "unsupported" => ClassLabel::Unsupported,
            other => {
                let digits = other
                    .strip_prefix("sp2free(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| other.strip_suffix("p2free"));
                match digits.and_then(|d| d.parse::<u8>().ok()) {
                    Some(s) if (1..=4).contains(&s) => ClassLabel::SP2Free(s),
                    _ => return Err(format!("unknown class `{s}`")),
                }
            }
        };
        Ok(label)
    }
}

/// First matching label in the order P4-free, (P1+P3)-free,
/// (3P1+P2)-free, sP2-free for the smallest s in 1..=4.
pub fn classify(inst: &Instance) -> ClassLabel {
    let order = [
        ClassLabel::P4Free,
        ClassLabel::P1P3Free,
        ClassLabel::ThreeP1P2Free,
        ClassLabel::SP2Free(1),
        ClassLabel::SP2Free(2),
        ClassLabel::SP2Free(3),
        ClassLabel::SP2Free(4),
    ];
    order
        .into_iter()
        .find(|l| is_free(inst, l.pattern().unwrap()))
        .unwrap_or(ClassLabel::Unsupported)
}

/// Embeddings of the three patterns defining the tractable classes.
pub fn witnesses(inst: &Instance) -> Vec<(PatternKind, Vec<usize>)> {
    [PatternKind::P4, PatternKind::P1P3, PatternKind::ThreeP1P2]
        .into_iter()
        .filter_map(|k| contains_induced(inst, &Pattern::new(k)).map(|w| (k, w)))
        .collect()
}
