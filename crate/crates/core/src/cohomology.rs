//! Simplicial cohomology of pairs (Δ, cost F) and the inclusion-induced maps
//! between them.
//!
//! Relative cochains are realized as cochains supported on faces containing
//! F: these form a sub-cochain-complex of C^*(Δ) on the nose, so the map
//! induced by cost τ ⊆ cost σ is a plain coordinate inclusion followed by
//! reduction modulo coboundaries. The empty face is present in degree -1,
//! making H^*(Δ, cost ∅) reduced cohomology.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};

/// A computed basis of H^i(Δ, cost F) with representative cocycles and the
/// data needed to express arbitrary cocycles in it.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub face: Face,
    pub degree: i32,
    /// dim_k H^i(Δ, cost F).
    pub dim: usize,
    /// Cochain basis of C^i(Δ, cost F): the i-faces containing F, in
    /// lexicographic order.
    pub cochain_faces: Vec<Face>,
    /// Columns are the chosen representative cocycles (echelon pivots of the
    /// kernel extended past the coboundary image), in cochain coordinates.
    pub representatives: Matrix,
    /// [representatives | δ_{i-1}]; solving against it splits a cocycle into
    /// basis coefficients plus a coboundary.
    decomposer: Matrix,
    field: FieldSpec,
}

impl CohomologyBasis {
    /// Expresses the cocycle `z` (in cochain coordinates) as coefficients in
    /// this basis, discarding the coboundary part. Returns `None` when `z`
    /// is not a cocycle modulo coboundaries of the pair.
    pub fn decompose(&self, z: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(z.len(), self.cochain_faces.len());
        let x = self.decomposer.solve(z)?;
        Some(x[..self.dim].to_vec())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

type BasisKey = (Face, i32);
type InducedKey = (Face, Face, i32);

/// Memoizing context for one (complex, field) pair.
///
/// Reads are concurrent; insertions are atomic per key (the first computed
/// value wins, and values are deterministic, so racing recomputation is
/// harmless). Links get their own nested workspaces on demand.
pub struct Workspace {
    complex: SimplicialComplex,
    field: FieldSpec,
    bases: RwLock<HashMap<BasisKey, Arc<CohomologyBasis>>>,
    induced: RwLock<HashMap<InducedKey, Arc<Matrix>>>,
    links: RwLock<HashMap<Face, Arc<Workspace>>>,
}

impl Workspace {
    pub fn new(complex: SimplicialComplex, field: FieldSpec) -> Self {
        Workspace {
            complex,
            field,
            bases: RwLock::new(HashMap::new()),
            induced: RwLock::new(HashMap::new()),
            links: RwLock::new(HashMap::new()),
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Matrix of δ: C^i(Δ, cost F) -> C^{i+1}(Δ, cost F) in the
    /// lexicographic face bases, with the standard alternating signs. At
    /// i = -1 and F = ∅ this is the augmentation dual (an all-ones column).
    pub fn pair_coboundary(&self, face: &Face, i: i32) -> Result<Matrix> {
        if !self.complex.is_face(face) {
            return Err(Error::FaceNotInComplex(face.to_string()));
        }
        Ok(self.coboundary_unchecked(face, i))
    }

    fn coboundary_unchecked(&self, face: &Face, i: i32) -> Matrix {
        let domain = self.complex.faces_containing(face, i);
        let codomain = self.complex.faces_containing(face, i + 1);
        let mut m = Matrix::zeros(self.field, codomain.len(), domain.len());
        for (r, sigma) in codomain.iter().enumerate() {
            for (pos, &v) in sigma.vertices().iter().enumerate() {
                if face.contains_vertex(v) {
                    continue;
                }
                let tau = sigma.difference(&Face::singleton(v));
                if let Ok(c) = domain.binary_search(&tau) {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    m.set(r, c, self.field.from_i64(sign));
                }
            }
        }
        m
    }

    /// Basis of H^i(Δ, cost F), memoized per (F, i).
    pub fn basis(&self, face: &Face, i: i32) -> Result<Arc<CohomologyBasis>> {
        if !self.complex.is_face(face) {
            return Err(Error::FaceNotInComplex(face.to_string()));
        }
        let key = (face.clone(), i);
        if let Some(b) = self.bases.read().unwrap().get(&key) {
            return Ok(b.clone());
        }
        let computed = Arc::new(self.compute_basis(face, i));
        let mut map = self.bases.write().unwrap();
        Ok(map.entry(key).or_insert(computed).clone())
    }

    fn compute_basis(&self, face: &Face, i: i32) -> CohomologyBasis {
        let cochain_faces = self.complex.faces_containing(face, i);
        let delta_i = self.coboundary_unchecked(face, i);
        let delta_prev = self.coboundary_unchecked(face, i - 1);
        let kernel = delta_i.kernel_basis();
        // Pick the kernel columns that extend im(δ_{i-1}) to ker(δ_i): pivot
        // columns of [δ_{i-1} | kernel] falling in the kernel part.
        let combined = Matrix::hconcat(&[&delta_prev, &kernel]);
        let (_, pivots) = combined.rref();
        let img_cols = delta_prev.cols();
        let selected: Vec<usize> = pivots
            .iter()
            .filter(|&&c| c >= img_cols)
            .map(|&c| c - img_cols)
            .collect();
        let dim = selected.len();
        let mut representatives = Matrix::zeros(self.field, cochain_faces.len(), dim);
        for (j, &kc) in selected.iter().enumerate() {
            for r in 0..cochain_faces.len() {
                representatives.set(r, j, kernel.at(r, kc).clone());
            }
        }
        let decomposer = Matrix::hconcat(&[&representatives, &delta_prev]);
        CohomologyBasis {
            face: face.clone(),
            degree: i,
            dim,
            cochain_faces,
            representatives,
            decomposer,
            field: self.field,
        }
    }

    /// dim_k H^i(Δ, cost F).
    pub fn cohomology_dim(&self, face: &Face, i: i32) -> Result<usize> {
        Ok(self.basis(face, i)?.dim)
    }

    /// dim_k of reduced cohomology H̃^i(Δ; k) = H^i(Δ, cost ∅).
    pub fn reduced_dim(&self, i: i32) -> Result<usize> {
        self.cohomology_dim(&Face::empty(), i)
    }

    /// Matrix of ι*: H^i(Δ, cost σ) -> H^i(Δ, cost τ) for τ ⊆ σ, with
    /// respect to the two memoized bases. Shape: dim(τ-basis) × dim(σ-basis).
    pub fn induced_map(&self, sigma: &Face, tau: &Face, i: i32) -> Result<Arc<Matrix>> {
        if !tau.is_subset_of(sigma) {
            return Err(Error::ParamRange(format!(
                "{tau} is not a subface of {sigma}"
            )));
        }
        let key = (sigma.clone(), tau.clone(), i);
        if let Some(m) = self.induced.read().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let src = self.basis(sigma, i)?;
        let dst = self.basis(tau, i)?;
        let mut m = Matrix::zeros(self.field, dst.dim, src.dim);
        for j in 0..src.dim {
            let mut embedded = vec![self.field.zero(); dst.cochain_faces.len()];
            for (r, f) in src.cochain_faces.iter().enumerate() {
                let v = src.representatives.at(r, j);
                if !self.field.is_zero(v) {
                    let pos = dst
                        .cochain_faces
                        .binary_search(f)
                        .expect("σ-supported face missing from τ cochain basis");
                    embedded[pos] = v.clone();
                }
            }
            let coeffs = dst
                .decompose(&embedded)
                .expect("included cocycle must decompose in target basis");
            for (r, c) in coeffs.into_iter().enumerate() {
                m.set(r, j, c);
            }
        }
        let arc = Arc::new(m);
        let mut map = self.induced.write().unwrap();
        Ok(map.entry(key).or_insert(arc).clone())
    }

    /// Memoized workspace for lk F over the same field.
    pub fn link_workspace(&self, face: &Face) -> Result<Arc<Workspace>> {
        if let Some(ws) = self.links.read().unwrap().get(face) {
            return Ok(ws.clone());
        }
        let link = self.complex.link(face)?;
        let ws = Arc::new(Workspace::new(link, self.field));
        let mut map = self.links.write().unwrap();
        Ok(map.entry(face.clone()).or_insert(ws).clone())
    }

    /// Checks dim H^i(Δ, cost F) = dim H̃^{i-|F|}(lk F; k), the dimension
    /// form of the contrastar/link isomorphism.
    pub fn link_iso_check(&self, face: &Face, i: i32) -> Result<bool> {
        let lhs = self.cohomology_dim(face, i)?;
        let rhs = self
            .link_workspace(face)?
            .reduced_dim(i - face.card() as i32)?;
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap()
    }

    fn bowtie() -> SimplicialComplex {
        SimplicialComplex::from_facets(5, vec![vec![1, 2, 3], vec![1, 4, 5]]).unwrap()
    }

    fn ws(c: SimplicialComplex) -> Workspace {
        Workspace::new(c, FieldSpec::Rationals)
    }

    #[test]
    fn coboundary_augmentation_is_all_ones() {
        let w = ws(triangle());
        let m = w.pair_coboundary(&Face::empty(), -1).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 1));
        for r in 0..3 {
            assert_eq!(m.at(r, 0), &FieldSpec::Rationals.one());
        }
    }

    #[test]
    fn coboundary_of_vertex_pair() {
        let w = ws(triangle());
        let m = w.pair_coboundary(&Face::singleton(1), 0).unwrap();
        // two edges through vertex 1, one 0-cochain basis face {1}
        assert_eq!((m.rows(), m.cols()), (2, 1));
        let w2 = ws(bowtie());
        let m2 = w2
            .pair_coboundary(&Face::new(vec![1, 2]).unwrap(), 2)
            .unwrap();
        assert_eq!((m2.rows(), m2.cols()), (0, 1));
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let w = ws(bowtie());
        for face in w.complex().all_faces() {
            for i in -1..=2 {
                let d_i = w.pair_coboundary(&face, i).unwrap();
                let d_next = w.pair_coboundary(&face, i + 1).unwrap();
                assert!(d_next.matmul(&d_i).is_zero(), "δδ != 0 at F={face}, i={i}");
            }
        }
    }

    #[test]
    fn basis_dims_match_known_cohomology() {
        let w = ws(triangle());
        assert_eq!(w.reduced_dim(1).unwrap(), 1); // circle
        assert_eq!(w.reduced_dim(0).unwrap(), 0);

        let wb = ws(bowtie());
        assert_eq!(wb.cohomology_dim(&Face::singleton(1), 1).unwrap(), 1);
        assert_eq!(wb.reduced_dim(1).unwrap(), 0); // contractible
    }

    #[test]
    fn representatives_decompose_to_standard_vectors() {
        let w = ws(triangle());
        let b = w.basis(&Face::empty(), 1).unwrap();
        assert_eq!(b.dim, 1);
        for j in 0..b.dim {
            let col: Vec<Scalar> = (0..b.cochain_faces.len())
                .map(|r| b.representatives.at(r, j).clone())
                .collect();
            let coeffs = b.decompose(&col).unwrap();
            for (k, c) in coeffs.iter().enumerate() {
                let expected = if k == j {
                    FieldSpec::Rationals.one()
                } else {
                    FieldSpec::Rationals.zero()
                };
                assert_eq!(c, &expected);
            }
        }
    }

    #[test]
    fn induced_map_examples() {
        let w = ws(bowtie());
        let f1 = Face::singleton(1);
        // σ = τ gives the identity
        let id = w.induced_map(&f1, &f1, 1).unwrap();
        assert_eq!(*id, Matrix::identity(FieldSpec::Rationals, 1));
        // target H^1(Δ, ∅) has dim 0
        let to_empty = w.induced_map(&f1, &Face::empty(), 1).unwrap();
        assert_eq!((to_empty.rows(), to_empty.cols()), (0, 1));
        // source of dimension 0
        let f2 = Face::singleton(2);
        let z = w.induced_map(&f2, &Face::empty(), 1).unwrap();
        assert_eq!(z.cols(), 0);
    }

    #[test]
    fn link_iso_examples() {
        let w = ws(triangle());
        assert!(w.link_iso_check(&Face::new(vec![1, 2]).unwrap(), 1).unwrap());
        assert_eq!(w.cohomology_dim(&Face::new(vec![1, 2]).unwrap(), 1).unwrap(), 1);

        let wb = ws(bowtie());
        assert!(wb.link_iso_check(&Face::singleton(1), 1).unwrap());
        assert!(wb.link_iso_check(&Face::empty(), 1).unwrap());
    }

    #[test]
    fn empty_complex_has_reduced_dim_in_degree_minus_one() {
        let empty = SimplicialComplex::from_facets(2, vec![vec![]]).unwrap();
        let w = ws(empty);
        assert_eq!(w.reduced_dim(-1).unwrap(), 1);
        assert_eq!(w.reduced_dim(0).unwrap(), 0);
    }
}
