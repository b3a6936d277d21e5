//! Finite simplicial complexes on the vertex set `1..=n`.
//!
//! A complex is stored as its inclusion-maximal facets; face membership is
//! computed by subset scans. The empty face is a first-class face of every
//! nonvoid complex (the augmented convention), so the degree `-1` cochain
//! group exists and pair cohomology against the empty face is reduced
//! cohomology. The void complex (no faces at all) and the empty complex
//! (only the empty face) are distinct.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A face: strictly increasing vertex labels from `1..=n`. The empty vector
/// is the empty face, of dimension -1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face {
    vertices: Vec<u32>,
}

impl Face {
    /// Builds a face from arbitrary labels; sorts and rejects zero or
    /// duplicate labels.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::ParamRange(format!("repeated vertex {}", w[0])));
            }
        }
        if vertices.first() == Some(&0) {
            return Err(Error::VertexOutOfRange { label: 0, n: 0 });
        }
        Ok(Face { vertices })
    }

    pub fn empty() -> Self {
        Face { vertices: vec![] }
    }

    pub fn singleton(v: u32) -> Self {
        Face { vertices: vec![v] }
    }

    /// Infallible constructor for labels already known to be valid and sorted.
    pub(crate) fn from_sorted(vertices: Vec<u32>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Number of vertices, |F|.
    pub fn card(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension |F| - 1; the empty face has dimension -1.
    pub fn dim(&self) -> i32 {
        self.vertices.len() as i32 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        let mut it = other.vertices.iter();
        self.vertices
            .iter()
            .all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let merged: Vec<u32> = self
            .vertices
            .iter()
            .merge(other.vertices.iter())
            .dedup()
            .copied()
            .collect();
        Face { vertices: merged }
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face {
            vertices: self
                .vertices
                .iter()
                .filter(|v| !other.contains_vertex(**v))
                .copied()
                .collect(),
        }
    }

    pub fn with_vertex(&self, v: u32) -> Face {
        if self.contains_vertex(v) {
            return self.clone();
        }
        let mut vs = self.vertices.clone();
        vs.push(v);
        vs.sort_unstable();
        Face { vertices: vs }
    }

    pub fn is_disjoint_from(&self, other: &Face) -> bool {
        self.vertices.iter().all(|v| !other.contains_vertex(*v))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertices.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{{}}}", self.vertices.iter().join(","))
    }
}

/// A simplicial complex given by its facets, normalized so that no facet
/// contains another. All other faces are implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Normalizing constructor: sorts facet vertices, drops duplicate and
    /// dominated facets. Rejects `n == 0` and labels outside `1..=n`.
    ///
    /// `from_facets(n, [])` is the void complex; a single empty facet gives
    /// the empty complex `{∅}`.
    pub fn from_facets<I, V>(n: u32, raw_facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: IntoIterator<Item = u32>,
    {
        if n == 0 {
            return Err(Error::ZeroVertexCount);
        }
        let mut candidates: Vec<Face> = Vec::new();
        for raw in raw_facets {
            let mut vs: Vec<u32> = raw.into_iter().collect();
            vs.sort_unstable();
            vs.dedup();
            for &v in &vs {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { label: v, n });
                }
            }
            candidates.push(Face::from_sorted(vs));
        }
        candidates.sort();
        candidates.dedup();
        let facets: Vec<Face> = candidates
            .iter()
            .filter(|f| {
                !candidates
                    .iter()
                    .any(|g| g.card() > f.card() && f.is_subset_of(g))
            })
            .cloned()
            .collect();
        Ok(SimplicialComplex { n, facets })
    }

    /// Parses the facet-list text format: one facet per line as
    /// whitespace-separated positive integers, `#` starts a comment, and an
    /// optional header line `n <count>` fixes the vertex count (default: the
    /// maximum label seen).
    pub fn parse(text: &str) -> Result<Self> {
        let mut declared_n: Option<u32> = None;
        let mut facets: Vec<(usize, Vec<u32>)> = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let first = tokens.next().unwrap();
            if first == "n" {
                if declared_n.is_some() || !facets.is_empty() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "header 'n <count>' must appear once, before facets".into(),
                    });
                }
                let count = tokens.next().ok_or(Error::Parse {
                    line: lineno,
                    msg: "header 'n' needs a count".into(),
                })?;
                let value: u32 = count.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad vertex count '{count}'"),
                })?;
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "trailing tokens after header".into(),
                    });
                }
                declared_n = Some(value);
                continue;
            }
            let mut verts = Vec::new();
            for tok in std::iter::once(first).chain(tokens) {
                let v: u32 = tok.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad vertex label '{tok}'"),
                })?;
                if v == 0 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "vertex labels start at 1".into(),
                    });
                }
                verts.push(v);
            }
            facets.push((lineno, verts));
        }
        let max_seen = facets
            .iter()
            .flat_map(|(_, vs)| vs.iter().copied())
            .max()
            .unwrap_or(0);
        let n = declared_n.unwrap_or(max_seen);
        if n == 0 {
            return Err(Error::ZeroVertexCount);
        }
        for (lineno, vs) in &facets {
            if let Some(&v) = vs.iter().find(|&&v| v > n) {
                return Err(Error::Parse {
                    line: *lineno,
                    msg: format!("vertex label {v} exceeds declared count {n}"),
                });
            }
        }
        Self::from_facets(n, facets.into_iter().map(|(_, vs)| vs))
    }

    /// Renders in the facet-list text format accepted by [`Self::parse`].
    pub fn to_facet_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for f in &self.facets {
            if f.is_empty() {
                continue;
            }
            out.push_str(&f.vertices().iter().join(" "));
            out.push('\n');
        }
        out
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// No faces at all.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Exactly the empty face.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Max facet dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    /// Krull dimension of the face ring: `dim Δ + 1` (0 for the empty
    /// complex; also 0 for the void complex, which callers reject earlier).
    pub fn d(&self) -> usize {
        self.dim().map_or(0, |d| (d + 1) as usize)
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .iter()
            .map(|f| f.dim())
            .all(|d| Some(d) == self.dim())
    }

    pub fn is_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|g| face.is_subset_of(g))
    }

    /// lk F = {G : F ∩ G = ∅, F ∪ G ∈ Δ}, on the same ambient vertex count.
    /// The link of a facet is the empty complex, never the void complex.
    pub fn link(&self, face: &Face) -> Result<SimplicialComplex> {
        if !self.is_face(face) {
            return Err(Error::FaceNotInComplex(face.to_string()));
        }
        let link_facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| face.is_subset_of(g))
            .map(|g| g.difference(face))
            .collect();
        SimplicialComplex::from_facets(self.n, link_facets.into_iter().map(|f| f.vertices().to_vec()))
    }

    /// All k-dimensional faces in lexicographic order on the vertex lists.
    /// For `k == -1` this is `[∅]` on any nonvoid complex.
    pub fn faces(&self, k: i32) -> Vec<Face> {
        if self.is_void() || k < -1 {
            return vec![];
        }
        if k == -1 {
            return vec![Face::empty()];
        }
        let size = (k + 1) as usize;
        let mut out: BTreeSet<Face> = BTreeSet::new();
        for facet in &self.facets {
            if facet.card() < size {
                continue;
            }
            for combo in facet.vertices().iter().copied().combinations(size) {
                out.insert(Face::from_sorted(combo));
            }
        }
        out.into_iter().collect()
    }

    /// All faces including the empty face, ordered by dimension then
    /// lexicographically.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        if let Some(d) = self.dim() {
            for k in -1..=d {
                out.extend(self.faces(k));
            }
        }
        out
    }

    /// The k-faces containing `face`, in lexicographic order. This is the
    /// degree-k cochain basis of the pair (Δ, cost F): cochains vanishing on
    /// the contrastar are exactly those supported on faces containing F.
    pub fn faces_containing(&self, face: &Face, k: i32) -> Vec<Face> {
        self.faces(k)
            .into_iter()
            .filter(|g| face.is_subset_of(g))
            .collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "complex(n={}, facets=[{}])",
            self.n,
            self.facets.iter().join(", ")
        )
    }
}
