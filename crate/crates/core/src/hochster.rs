//! Graded dimensions of the local cohomology of the face ring, singularity
//! dimension, and the Cohen-Macaulay / Buchsbaum predicates.
//!
//! The graded dimension of H^l_m(k[Δ]) in Z-degree j is zero for j >= 1,
//! the reduced cohomology dimension at j = 0, and for j = -(i+1) the sum
//! over nonempty faces of C(i, |F|-1) · dim H^{l-1}(Δ, cost F).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::Workspace;
use crate::combinat::{binom, binomial_basis_to_polynomial, render_polynomial};
use crate::complex::Face;
use crate::error::{Error, Result};

/// Largest dimension of a singular face; `NegInfinity` when every face is
/// nonsingular (the Cohen-Macaulay case). Kept as a distinct variant so that
/// "singularity dimension < m" is true for every m >= 0 in that case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularityDimension {
    NegInfinity,
    Dim(i32),
}

impl SingularityDimension {
    pub fn is_less_than(&self, m: usize) -> bool {
        match self {
            SingularityDimension::NegInfinity => true,
            SingularityDimension::Dim(s) => (*s as i64) < m as i64,
        }
    }

    pub fn is_at_most(&self, bound: i32) -> bool {
        match self {
            SingularityDimension::NegInfinity => true,
            SingularityDimension::Dim(s) => *s <= bound,
        }
    }
}

impl std::fmt::Display for SingularityDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SingularityDimension::NegInfinity => write!(f, "-inf"),
            SingularityDimension::Dim(s) => write!(f, "{s}"),
        }
    }
}

/// One singular face together with a degree below the top where its link has
/// nonvanishing reduced cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularWitness {
    pub face: Face,
    pub degree: i32,
    pub link_cohomology_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityVerdict {
    pub dimension: SingularityDimension,
    pub witnesses: Vec<SingularWitness>,
}

/// dim_k H^l_m(k[Δ])_j.
pub fn lc_graded_dim(ws: &Workspace, l: usize, j: i64) -> Result<usize> {
    let d = ws.complex().d();
    if ws.complex().is_void() {
        return Err(Error::VoidComplex);
    }
    if l > d {
        return Err(Error::ParamRange(format!("l={l} exceeds d={d}")));
    }
    if j >= 1 {
        return Ok(0);
    }
    let l_deg = l as i32 - 1;
    if j == 0 {
        return ws.reduced_dim(l_deg);
    }
    let i = -j - 1;
    let mut total = 0usize;
    for face in ws.complex().all_faces() {
        if face.is_empty() {
            continue;
        }
        let b = binom(i, face.card() as i64 - 1);
        if b > 0 {
            total += b as usize * ws.cohomology_dim(&face, l_deg)?;
        }
    }
    Ok(total)
}

/// Row of a graded dimension table for one cohomological degree l.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDimRow {
    pub l: usize,
    /// dim at j = 0 (equals dim H̃^{l-1}(Δ)); all j >= 1 entries vanish.
    pub degree_zero: usize,
    /// Explicit dims at j = -1, ..., -(max_i+1).
    pub window: Vec<WindowEntry>,
    /// Coefficient of C(i, k) in the degree -(i+1) closed form, indexed by k.
    pub tail_binom_coefficients: Vec<u64>,
    /// The same closed form expanded as a polynomial in i.
    pub tail_polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowEntry {
    pub j: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDimTable {
    pub field: String,
    pub d: usize,
    pub rows: Vec<GradedDimRow>,
}

/// Builds the full table for l in 0..=d with a degree window down to
/// j = -(max_i + 1).
pub fn graded_dim_table(ws: &Workspace, max_i: u32, l_filter: Option<usize>) -> Result<GradedDimTable> {
    if ws.complex().is_void() {
        return Err(Error::VoidComplex);
    }
    let d = ws.complex().d();
    let mut rows = Vec::new();
    for l in 0..=d {
        if l_filter.is_some_and(|want| want != l) {
            continue;
        }
        let degree_zero = lc_graded_dim(ws, l, 0)?;
        let mut window = Vec::new();
        for i in 0..=max_i as i64 {
            let j = -(i + 1);
            window.push(WindowEntry {
                j,
                dim: lc_graded_dim(ws, l, j)?,
            });
        }
        let coeffs = tail_binom_coefficients(ws, l)?;
        let poly = binomial_basis_to_polynomial(&coeffs, 0);
        rows.push(GradedDimRow {
            l,
            degree_zero,
            window,
            tail_binom_coefficients: coeffs,
            tail_polynomial: render_polynomial(&poly),
        });
    }
    Ok(GradedDimTable {
        field: ws.field().label(),
        d,
        rows,
    })
}

/// Coefficients c_k = Σ_{|F| = k+1} dim H^{l-1}(Δ, cost F), so that the
/// degree -(i+1) dimension is Σ_k c_k C(i, k).
fn tail_binom_coefficients(ws: &Workspace, l: usize) -> Result<Vec<u64>> {
    let d = ws.complex().d();
    let mut coeffs = vec![0u64; d.max(1)];
    for face in ws.complex().all_faces() {
        if face.is_empty() {
            continue;
        }
        let h = ws.cohomology_dim(&face, l as i32 - 1)?;
        if h > 0 {
            coeffs[face.card() - 1] += h as u64;
        }
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// Scans every face (including ∅) for nonvanishing reduced link cohomology
/// below the top dimension. Faces are examined in parallel; the witness list
/// order is the deterministic face order.
pub fn singularity_dimension(ws: &Workspace) -> Result<SingularityVerdict> {
    if ws.complex().is_void() {
        return Err(Error::VoidComplex);
    }
    let d = ws.complex().d() as i32;
    let faces = ws.complex().all_faces();
    let per_face: Vec<Vec<SingularWitness>> = faces
        .par_iter()
        .map(|face| -> Result<Vec<SingularWitness>> {
            let link_ws = ws.link_workspace(face)?;
            let top = d - 1 - face.card() as i32;
            let mut found = Vec::new();
            for i in -1..top {
                let h = link_ws.reduced_dim(i)?;
                if h > 0 {
                    found.push(SingularWitness {
                        face: face.clone(),
                        degree: i,
                        link_cohomology_dim: h,
                    });
                }
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?;
    let witnesses: Vec<SingularWitness> = per_face.into_iter().flatten().collect();
    let dimension = witnesses
        .iter()
        .map(|w| w.face.dim())
        .max()
        .map_or(SingularityDimension::NegInfinity, SingularityDimension::Dim);
    Ok(SingularityVerdict {
        dimension,
        witnesses,
    })
}

/// Reisner: the face ring is Cohen-Macaulay iff every link (including the
/// whole complex) is nonsingular.
pub fn is_cohen_macaulay(ws: &Workspace) -> Result<bool> {
    Ok(singularity_dimension(ws)?.dimension == SingularityDimension::NegInfinity)
}

/// Schenzel: a pure complex is Buchsbaum iff only the empty face may be
/// singular. Errors on non-pure input, since the criterion assumes purity.
pub fn is_buchsbaum(ws: &Workspace) -> Result<bool> {
    if !ws.complex().is_pure() {
        return Err(Error::PurityRequired);
    }
    Ok(singularity_dimension(ws)?.dimension.is_at_most(-1))
}
