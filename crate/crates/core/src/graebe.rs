//! The graded module structure of H^*_m(k[Δ]) made explicit: graded pieces
//! indexed by exponent vectors, multiplication maps by generic linear forms,
//! and brute-force kernel intersections with their binomial closed forms.

use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::cohomology::Workspace;
use crate::combinat::{binom, compositions};
use crate::complex::Face;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};

/// The genericity certifier checks every square minor; it refuses to run
/// past this many rows rather than grind through 2^n subsets.
pub const CERTIFIER_MAX_ROWS: usize = 16;

/// How many incremented seeds to try before giving up on certification.
pub const MAX_CERTIFY_ATTEMPTS: u32 = 16;

/// How the coefficient matrix of the linear forms was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixStrategy {
    /// a_{t,p} = t^{p-1}; over Q every minor is automatically nonzero.
    Vandermonde,
    /// Entries sampled uniformly from the nonzero elements (or a bounded
    /// integer range over Q) with the given seed; certified, resampling
    /// with incremented seeds on failure.
    Seeded(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixProvenance {
    Vandermonde,
    Seeded { requested: u64, accepted: u64 },
}

impl std::fmt::Display for MatrixProvenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixProvenance::Vandermonde => write!(f, "vandermonde"),
            MatrixProvenance::Seeded {
                requested,
                accepted,
            } => write!(f, "seeded({requested}->{accepted})"),
        }
    }
}

/// The n×d coefficient matrix A = (a_{t,p}) of linear forms
/// θ_p = Σ_t a_{t,p} x_t, with a certification flag: `certified` is true only
/// after every square submatrix has been verified nonsingular.
#[derive(Clone, Debug)]
pub struct GenericMatrix {
    n: usize,
    d: usize,
    entries: Matrix,
    provenance: MatrixProvenance,
    certified: bool,
}

impl GenericMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    /// a_{t,p} with 1-based vertex t and form index p.
    pub fn coefficient(&self, t: usize, p: usize) -> &Scalar {
        self.entries.at(t - 1, p - 1)
    }

    pub fn provenance(&self) -> MatrixProvenance {
        self.provenance
    }

    pub fn certified(&self) -> bool {
        self.certified
    }

    pub fn field(&self) -> FieldSpec {
        self.entries.field()
    }

    /// Samples a seeded matrix without running the certifier. Exists for
    /// differential experiments (the Lemma 2 inequality holds generically
    /// even without certification); the kernel operations that demand a
    /// certified matrix reject these.
    pub fn sample_uncertified(n: usize, d: usize, field: FieldSpec, seed: u64) -> Result<Self> {
        check_shape(n, d)?;
        Ok(GenericMatrix {
            n,
            d,
            entries: sample_entries(n, d, field, seed),
            provenance: MatrixProvenance::Seeded {
                requested: seed,
                accepted: seed,
            },
            certified: false,
        })
    }
}

fn check_shape(n: usize, d: usize) -> Result<()> {
    if d < 1 || d > n {
        return Err(Error::ParamRange(format!(
            "need 1 <= d <= n, got n={n} d={d}"
        )));
    }
    Ok(())
}

fn sample_entries(n: usize, d: usize, field: FieldSpec, seed: u64) -> Matrix {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut m = Matrix::zeros(field, n, d);
    for r in 0..n {
        for c in 0..d {
            let v = match field {
                // Nonzero residues; zero entries would fail 1x1 minors anyway.
                FieldSpec::Prime(p) => field.from_i64(rng.gen_range(1..p) as i64),
                FieldSpec::Rationals => field.from_i64(rng.gen_range(1..=1_000_003i64)),
            };
            m.set(r, c, v);
        }
    }
    m
}

fn vandermonde_entries(n: usize, d: usize, field: FieldSpec) -> Matrix {
    let mut m = Matrix::zeros(field, n, d);
    for t in 1..=n {
        let mut acc = field.one();
        let base = field.from_i64(t as i64);
        for p in 1..=d {
            m.set(t - 1, p - 1, acc.clone());
            acc = field.mul(&acc, &base);
        }
    }
    m
}

/// Verifies that every k×k submatrix (k up to the column count) is
/// nonsingular. Refuses matrices with more than [`CERTIFIER_MAX_ROWS`] rows.
pub fn verify_generic_minors(entries: &Matrix) -> Result<bool> {
    let n = entries.rows();
    let d = entries.cols();
    if n > CERTIFIER_MAX_ROWS {
        return Err(Error::CertifierRefused {
            n,
            max: CERTIFIER_MAX_ROWS,
        });
    }
    let field = entries.field();
    for k in 1..=d.min(n) {
        for rows in (0..n).combinations(k) {
            for cols in (0..d).combinations(k) {
                let sub = entries.submatrix(&rows, &cols);
                if field.is_zero(&sub.determinant()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Produces a certified generic coefficient matrix.
///
/// The Vandermonde strategy is deterministic; over Q its minors are nonzero
/// by total positivity, and the certifier is run anyway as a cross-check.
/// Over F_p the certification may genuinely fail (small fields), which is an
/// error since there is nothing to resample. The seeded strategy retries
/// with incremented seeds up to [`MAX_CERTIFY_ATTEMPTS`] and records the
/// accepted seed.
pub fn generic_matrix(
    n: usize,
    d: usize,
    field: FieldSpec,
    strategy: MatrixStrategy,
) -> Result<GenericMatrix> {
    check_shape(n, d)?;
    match strategy {
        MatrixStrategy::Vandermonde => {
            let entries = vandermonde_entries(n, d, field);
            if !verify_generic_minors(&entries)? {
                return Err(Error::CertificationExhausted {
                    n,
                    d,
                    field: field.label(),
                    attempts: 1,
                });
            }
            Ok(GenericMatrix {
                n,
                d,
                entries,
                provenance: MatrixProvenance::Vandermonde,
                certified: true,
            })
        }
        MatrixStrategy::Seeded(seed) => {
            for attempt in 0..MAX_CERTIFY_ATTEMPTS as u64 {
                let trial = seed.wrapping_add(attempt);
                let entries = sample_entries(n, d, field, trial);
                if verify_generic_minors(&entries)? {
                    return Ok(GenericMatrix {
                        n,
                        d,
                        entries,
                        provenance: MatrixProvenance::Seeded {
                            requested: seed,
                            accepted: trial,
                        },
                        certified: true,
                    });
                }
            }
            Err(Error::CertificationExhausted {
                n,
                d,
                field: field.label(),
                attempts: MAX_CERTIFY_ATTEMPTS,
            })
        }
    }
}

/// One direct summand of a graded piece: the exponent vector U, its support
/// face, and the dimension of H^{l-1}(Δ, cost s(U)).
#[derive(Clone, Debug)]
pub struct PieceBlock {
    pub exponents: Vec<u32>,
    pub support: Face,
    pub dim: usize,
    pub offset: usize,
}

/// H^l_m(k[Δ]) in Z-degree -r, presented as the lex-ordered direct sum over
/// exponent vectors U with |U| = r and s(U) ∈ Δ.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub l: usize,
    pub r: u32,
    pub blocks: Vec<PieceBlock>,
    pub total_dim: usize,
}

impl GradedPiece {
    /// Index of the block with the given exponent vector, if present.
    pub fn block_index(&self, exponents: &[u32]) -> Option<usize> {
        self.blocks
            .binary_search_by(|b| b.exponents.as_slice().cmp(exponents))
            .ok()
    }
}

/// Enumerates the graded piece of H^l_m(k[Δ]) in degree -r.
pub fn graded_piece(ws: &Workspace, l: usize, r: u32) -> Result<GradedPiece> {
    let n = ws.complex().n() as usize;
    let mut raw: Vec<(Vec<u32>, Face)> = Vec::new();
    for face in ws.complex().all_faces() {
        for comp in compositions(r, face.card()) {
            let mut u = vec![0u32; n];
            for (&v, &e) in face.vertices().iter().zip(comp.iter()) {
                u[v as usize - 1] = e;
            }
            raw.push((u, face.clone()));
        }
    }
    raw.sort_by(|a, b| a.0.cmp(&b.0));
    let mut blocks = Vec::with_capacity(raw.len());
    let mut offset = 0usize;
    for (exponents, support) in raw {
        let dim = ws.cohomology_dim(&support, l as i32 - 1)?;
        blocks.push(PieceBlock {
            exponents,
            support,
            dim,
            offset,
        });
        offset += dim;
    }
    Ok(GradedPiece {
        l,
        r,
        blocks,
        total_dim: offset,
    })
}

/// Matrix of (·θ_p)* : H^l_m(k[Δ])_{-(i+1)} -> H^l_m(k[Δ])_{-i} in the
/// graded piece bases. Block (T, T+e_t) is a_{t,p} · Φ_{s(T+e_t), s(T)};
/// everything else is zero. Requires a certified coefficient matrix.
pub fn theta_action(
    ws: &Workspace,
    l: usize,
    i: u32,
    p: usize,
    a: &GenericMatrix,
) -> Result<Matrix> {
    if !a.certified() {
        return Err(Error::UncertifiedMatrix);
    }
    theta_action_unchecked(ws, l, i, p, a)
}

/// Same as [`theta_action`] without demanding certification; used for
/// differential experiments with deliberately uncertified matrices.
pub fn theta_action_unchecked(
    ws: &Workspace,
    l: usize,
    i: u32,
    p: usize,
    a: &GenericMatrix,
) -> Result<Matrix> {
    if a.n() != ws.complex().n() as usize {
        return Err(Error::ParamRange(format!(
            "coefficient matrix has {} rows but the complex has {} vertices",
            a.n(),
            ws.complex().n()
        )));
    }
    if p < 1 || p > a.d() {
        return Err(Error::ParamRange(format!(
            "form index p={p} outside 1..={}",
            a.d()
        )));
    }
    let domain = graded_piece(ws, l, i + 1)?;
    let codomain = graded_piece(ws, l, i)?;
    let field = ws.field();
    let mut m = Matrix::zeros(field, codomain.total_dim, domain.total_dim);
    for tb in &codomain.blocks {
        if tb.dim == 0 {
            continue;
        }
        let mut u = tb.exponents.clone();
        for t in 1..=ws.complex().n() as usize {
            u[t - 1] += 1;
            if let Some(ub_idx) = domain.block_index(&u) {
                let ub = &domain.blocks[ub_idx];
                if ub.dim > 0 {
                    let phi = ws.induced_map(&ub.support, &tb.support, l as i32 - 1)?;
                    let block = phi.scale(a.coefficient(t, p));
                    m.set_block(tb.offset, ub.offset, &block);
                }
            }
            u[t - 1] -= 1;
        }
    }
    Ok(m)
}

/// Result of one kernel-intersection computation: the brute-force dimension
/// of ker^l_{m,i}, the binomial closed form it must equal for generic forms,
/// and whether ·θ_{m+1} maps it onto ker^l_{m,i-1}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub l: usize,
    pub m: usize,
    pub i: u32,
    pub brute_dim: usize,
    pub closed_form_dim: usize,
    /// None when i = m (no previous kernel) or when the coefficient matrix
    /// has no (m+1)-th column to restrict.
    pub surjective_onto_previous: Option<bool>,
    pub field: String,
    pub matrix_provenance: MatrixProvenance,
    pub certified: bool,
}

/// Brute-force and closed-form dimensions of ker^l_{m,i} with a certified
/// coefficient matrix.
pub fn kernel_dims(
    ws: &Workspace,
    l: usize,
    m: usize,
    i: u32,
    a: &GenericMatrix,
) -> Result<KernelReport> {
    if !a.certified() {
        return Err(Error::UncertifiedMatrix);
    }
    kernel_dims_unchecked(ws, l, m, i, a)
}

/// [`kernel_dims`] without the certification gate, for differential tests
/// against deliberately uncertified matrices.
pub fn kernel_dims_unchecked(
    ws: &Workspace,
    l: usize,
    m: usize,
    i: u32,
    a: &GenericMatrix,
) -> Result<KernelReport> {
    let d = ws.complex().d();
    if ws.complex().is_void() {
        return Err(Error::VoidComplex);
    }
    if l > d || m > d {
        return Err(Error::ParamRange(format!(
            "need l <= d and m <= d, got l={l} m={m} d={d}"
        )));
    }
    if (i as usize) < m {
        return Err(Error::ParamRange(format!("need i >= m, got i={i} m={m}")));
    }
    if a.d() < m {
        return Err(Error::ParamRange(format!(
            "coefficient matrix provides {} forms, need {m}",
            a.d()
        )));
    }
    let kernel = intersection_kernel_basis(ws, l, m, i, a)?;
    let brute_dim = kernel.cols();
    let closed_form_dim = closed_form(ws, l, m, i)?;
    let surjective_onto_previous = if i as usize >= m + 1 && a.d() >= m + 1 {
        let prev = intersection_kernel_basis(ws, l, m, i - 1, a)?;
        let theta_next = theta_action_unchecked(ws, l, i, m + 1, a)?;
        let image = theta_next.matmul(&kernel);
        let contained = Matrix::hconcat(&[&prev, &image]).rank() == prev.cols();
        let onto = image.rank() == prev.cols();
        Some(contained && onto)
    } else {
        None
    };
    Ok(KernelReport {
        l,
        m,
        i,
        brute_dim,
        closed_form_dim,
        surjective_onto_previous,
        field: ws.field().label(),
        matrix_provenance: a.provenance(),
        certified: a.certified(),
    })
}

/// Basis of ∩_{p<=m} ker (·θ_p)* inside the degree -(i+1) piece, as columns
/// in piece coordinates. For m = 0 this is the identity on the whole piece.
fn intersection_kernel_basis(
    ws: &Workspace,
    l: usize,
    m: usize,
    i: u32,
    a: &GenericMatrix,
) -> Result<Matrix> {
    let domain = graded_piece(ws, l, i + 1)?;
    if m == 0 {
        return Ok(Matrix::identity(ws.field(), domain.total_dim));
    }
    let mats: Vec<Matrix> = (1..=m)
        .map(|p| theta_action_unchecked(ws, l, i, p, a))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Matrix> = mats.iter().collect();
    Ok(Matrix::vstack(&refs).kernel_basis())
}

/// Σ_F C(i-m, |F|-m-1) · dim H^{l-1}(Δ, cost F), the Lemma 3 value.
fn closed_form(ws: &Workspace, l: usize, m: usize, i: u32) -> Result<usize> {
    let mut total = 0usize;
    for face in ws.complex().all_faces() {
        let b = binom(i as i64 - m as i64, face.card() as i64 - m as i64 - 1);
        if b > 0 {
            total += b as usize * ws.cohomology_dim(&face, l as i32 - 1)?;
        }
    }
    Ok(total)
}

/// Exponent vectors U with support exactly F, |U| = r, and the first m
/// support coordinates pinned to 1, in lexicographic order. The count is
/// C(r-1-m, |F|-m-1).
pub fn enumerate_w(n: u32, face: &Face, m: usize, r: u32) -> Result<Vec<Vec<u32>>> {
    if face.card() <= m {
        return Err(Error::ParamRange(format!(
            "need |F| > m, got |F|={} m={m}",
            face.card()
        )));
    }
    let mut out = Vec::new();
    for comp in compositions(r, face.card()) {
        if comp.iter().take(m).any(|&e| e != 1) {
            continue;
        }
        let mut u = vec![0u32; n as usize];
        for (&v, &e) in face.vertices().iter().zip(comp.iter()) {
            u[v as usize - 1] = e;
        }
        out.push(u);
    }
    out.sort();
    Ok(out)
}

/// Counts |{U ∈ N^n : s(U) = F, |U| = r}| directly, for consistency checks
/// against C(r-1, |F|-1).
pub fn count_exponent_vectors(face: &Face, r: u32) -> u64 {
    compositions(r, face.card()).len() as u64
}
