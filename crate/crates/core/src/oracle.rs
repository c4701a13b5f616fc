//! Brute-force dense-matrix engines used to cross-check the closed forms.
//!
//! Everything here works on plain real 4x4 matrices and knows nothing about X
//! structure: a cyclic Jacobi eigen-solver for symmetric matrices, the
//! eigenvalues of `rho * rho_tilde` by shifted QR on its Hessenberg form,
//! Gibbs-state assembly from
//! eigenpairs, and the Bloch-vector algebra of projective qubit measurements.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::xstate::{h2, shannon_entropy};

/// Jacobi stops once the off-diagonal Frobenius norm is below this.
pub const JACOBI_TOLERANCE: f64 = 1e-14;
pub const JACOBI_MAX_SWEEPS: usize = 100;
pub const QR_MAX_ITERATIONS: usize = 500;
/// Eigenvalues of `rho * rho_tilde` above `-PRODUCT_CLAMP` are clamped to zero.
pub const PRODUCT_CLAMP: f64 = 1e-10;

/// A real 4x4 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dense4 {
    m: [[f64; 4]; 4],
    symmetric: bool,
}

impl Dense4 {
    pub fn general(m: [[f64; 4]; 4]) -> Self {
        Dense4 { m, symmetric: false }
    }

    /// Fails unless `m[i][j] == m[j][i]` exactly.
    pub fn symmetric(m: [[f64; 4]; 4]) -> Result<Self> {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if m[i][j] != m[j][i] {
                    return Err(Error::Numerical(format!(
                        "matrix not symmetric at ({i}, {j}): {} vs {}",
                        m[i][j], m[j][i]
                    )));
                }
            }
        }
        Ok(Dense4 { m, symmetric: true })
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn rows(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    pub fn trace(&self) -> f64 {
        (0..4).map(|i| self.m[i][i]).sum()
    }

    pub fn mul(&self, other: &Dense4) -> Dense4 {
        Dense4::general(matmul(&self.m, &other.m))
    }

    /// Reduced state of the second qubit (traces out the first tensor factor).
    pub fn trace_out_first(&self) -> [[f64; 2]; 2] {
        let mut r = [[0.0; 2]; 2];
        for (b, row) in r.iter_mut().enumerate() {
            for (bp, x) in row.iter_mut().enumerate() {
                *x = self.m[b][bp] + self.m[2 + b][2 + bp];
            }
        }
        r
    }

    /// Reduced state of the first qubit.
    pub fn trace_out_second(&self) -> [[f64; 2]; 2] {
        let mut r = [[0.0; 2]; 2];
        for (a, row) in r.iter_mut().enumerate() {
            for (ap, x) in row.iter_mut().enumerate() {
                *x = self.m[2 * a][2 * ap] + self.m[2 * a + 1][2 * ap + 1];
            }
        }
        r
    }

    /// `(sigma_y x sigma_y) rho* (sigma_y x sigma_y)` for a real matrix.
    ///
    /// `sigma_y x sigma_y` is the anti-diagonal `(-1, 1, 1, -1)`, so the result is a
    /// signed index reversal of the entries.
    pub fn spin_flipped(&self) -> Dense4 {
        const SIGN: [f64; 4] = [-1.0, 1.0, 1.0, -1.0];
        let mut r = [[0.0; 4]; 4];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = SIGN[i] * SIGN[j] * self.m[3 - i][3 - j];
            }
        }
        Dense4 {
            m: r,
            symmetric: self.symmetric,
        }
    }

    /// `S rho S` with `S` the qubit swap permutation.
    pub fn qubits_swapped(&self) -> Dense4 {
        const P: [usize; 4] = [0, 2, 1, 3];
        let mut r = [[0.0; 4]; 4];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = self.m[P[i]][P[j]];
            }
        }
        Dense4 {
            m: r,
            symmetric: self.symmetric,
        }
    }
}

fn matmul(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut r = [[0.0; 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            for j in 0..4 {
                r[i][j] += aik * b[k][j];
            }
        }
    }
    r
}

/// Eigenvalues of a symmetric matrix, nonincreasing, by cyclic-by-rows Jacobi rotations.
pub fn jacobi_eigenvalues(m: &Dense4) -> Result<[f64; 4]> {
    if !m.symmetric {
        return Err(Error::Numerical("Jacobi requires a symmetric matrix".into()));
    }
    let mut a = m.m;
    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) < JACOBI_TOLERANCE {
            converged = true;
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                rotate(&mut a, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) >= JACOBI_TOLERANCE {
        return Err(Error::NoConvergence {
            routine: "jacobi",
            iterations: JACOBI_MAX_SWEEPS,
        });
    }
    let mut ev = [a[0][0], a[1][1], a[2][2], a[3][3]];
    ev.sort_by(|x, y| y.total_cmp(x));
    Ok(ev)
}

fn off_diagonal_norm(a: &[[f64; 4]; 4]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x * x;
            }
        }
    }
    s.sqrt()
}

// Annihilates a[p][q] with a plane rotation applied from both sides.
fn rotate(a: &mut [[f64; 4]; 4], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for r in 0..4 {
        if r == p || r == q {
            continue;
        }
        let arp = a[r][p];
        let arq = a[r][q];
        a[r][p] = c * arp - s * arq;
        a[p][r] = a[r][p];
        a[r][q] = s * arp + c * arq;
        a[q][r] = a[r][q];
    }
}

/// Von Neumann entropy in bits of a symmetric density matrix, via Jacobi.
pub fn dense_entropy(m: &Dense4) -> Result<f64> {
    let ev = jacobi_eigenvalues(m)?;
    Ok(shannon_entropy(&ev.map(|x| x.max(0.0))))
}

/// Eigenvalues of a real symmetric 2x2 matrix, larger first.
pub fn symmetric2_eigenvalues(m: &[[f64; 2]; 2]) -> (f64, f64) {
    let mean = 0.5 * (m[0][0] + m[1][1]);
    let radius = (0.5 * (m[0][0] - m[1][1])).hypot(0.5 * (m[0][1] + m[1][0]));
    (mean + radius, mean - radius)
}

/// Entropy in bits of a real symmetric 2x2 density matrix.
pub fn qubit_entropy(m: &[[f64; 2]; 2]) -> f64 {
    let (a, b) = symmetric2_eigenvalues(m);
    shannon_entropy(&[a.max(0.0), b.max(0.0)])
}

/// Eigenvalues of `rho * rho_tilde`, nonincreasing and clamped at zero.
///
/// Route: Givens reduction to Hessenberg form, shifted QR, then Newton
/// polishing of each root against the product matrix. QR runs on the product
/// itself rather than on a companion matrix of its characteristic polynomial:
/// the product is diagonalizable, so repeated eigenvalues stay accurate to
/// O(eps), whereas a companion matrix turns a k-fold root into a Jordan block
/// and splits it by eps^(1/k).
pub fn product_eigenvalues(rho: &Dense4) -> Result<[f64; 4]> {
    let product = rho.mul(&rho.spin_flipped());
    let roots = polish_roots(&product.m, hessenberg_real_eigenvalues(hessenberg_form(&product.m))?);
    let mut out = [0.0; 4];
    for (o, r) in out.iter_mut().zip(roots) {
        if r < -PRODUCT_CLAMP {
            return Err(Error::Numerical(format!(
                "negative eigenvalue {r:e} of rho * rho_tilde"
            )));
        }
        *o = r.max(0.0);
    }
    out.sort_by(|x, y| y.total_cmp(x));
    Ok(out)
}

/// Newton on `det(A - x I)`, whose logarithmic derivative is `-tr((A - x I)^-1)`.
/// A step that would move a root more than half-way to its nearest neighbour is
/// rejected, so clustered roots stay where QR put them.
fn polish_roots(a: &[[f64; 4]; 4], roots: [f64; 4]) -> [f64; 4] {
    let mut out = roots;
    for k in 0..4 {
        let separation = (0..4)
            .filter(|&j| j != k)
            .map(|j| (roots[j] - roots[k]).abs())
            .fold(f64::INFINITY, f64::min);
        if separation == 0.0 {
            continue;
        }
        let mut x = roots[k];
        for _ in 0..8 {
            let Some(tr) = resolvent_trace(a, x) else { break };
            if tr == 0.0 || !tr.is_finite() {
                break;
            }
            let step = 1.0 / tr;
            if (x + step - roots[k]).abs() > 0.5 * separation {
                break;
            }
            x += step;
            if step.abs() <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
                break;
            }
        }
        out[k] = x;
    }
    out
}

/// `tr((A - x I)^-1)` by LU with partial pivoting; `None` if exactly singular.
fn resolvent_trace(a: &[[f64; 4]; 4], x: f64) -> Option<f64> {
    let mut lu = *a;
    for (i, row) in lu.iter_mut().enumerate() {
        row[i] -= x;
    }
    let mut perm = [0usize, 1, 2, 3];
    for col in 0..4 {
        let pivot = (col..4).max_by(|&i, &j| lu[i][col].abs().total_cmp(&lu[j][col].abs()))?;
        if lu[pivot][col] == 0.0 {
            return None;
        }
        lu.swap(col, pivot);
        perm.swap(col, pivot);
        for r in (col + 1)..4 {
            let f = lu[r][col] / lu[col][col];
            lu[r][col] = f;
            for c in (col + 1)..4 {
                lu[r][c] -= f * lu[col][c];
            }
        }
    }
    let mut trace = 0.0;
    for i in 0..4 {
        // solve (A - xI) z = e_i, keep z_i
        let mut z = [0.0; 4];
        for r in 0..4 {
            let mut v = if perm[r] == i { 1.0 } else { 0.0 };
            for c in 0..r {
                v -= lu[r][c] * z[c];
            }
            z[r] = v;
        }
        for r in (0..4).rev() {
            let mut v = z[r];
            for c in (r + 1)..4 {
                v -= lu[r][c] * z[c];
            }
            z[r] = v / lu[r][r];
        }
        trace += z[i];
    }
    Some(trace)
}

/// Orthogonal similarity to upper Hessenberg form by Givens rotations.
fn hessenberg_form(a: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut h = *a;
    for col in 0..2 {
        for row in ((col + 2)..4).rev() {
            let (c, s) = givens(h[row - 1][col], h[row][col]);
            for j in 0..4 {
                let x = h[row - 1][j];
                let y = h[row][j];
                h[row - 1][j] = c * x + s * y;
                h[row][j] = -s * x + c * y;
            }
            for r in h.iter_mut() {
                let x = r[row - 1];
                let y = r[row];
                r[row - 1] = c * x + s * y;
                r[row] = -s * x + c * y;
            }
            h[row][col] = 0.0;
        }
    }
    h
}

/// Real parts of the eigenvalues of an upper Hessenberg matrix.
///
/// Single-shift QR with Wilkinson shifts and deflation. A 2x2 block with a
/// complex pair contributes its real part twice.
fn hessenberg_real_eigenvalues(mut h: [[f64; 4]; 4]) -> Result<[f64; 4]> {
    let scale = h.iter().flatten().map(|x| x.abs()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let mut out = [0.0; 4];
    let mut found = 0;
    let mut hi = 4;
    let mut iterations = 0;
    let mut since_deflation = 0;

    while hi > 0 {
        let mut lo = hi - 1;
        while lo > 0 {
            let mut s = h[lo - 1][lo - 1].abs() + h[lo][lo].abs();
            if s == 0.0 {
                s = scale;
            }
            if h[lo][lo - 1].abs() <= f64::EPSILON * s {
                h[lo][lo - 1] = 0.0;
                break;
            }
            lo -= 1;
        }

        match hi - lo {
            1 => {
                out[found] = h[lo][lo];
                found += 1;
                hi -= 1;
                since_deflation = 0;
                continue;
            }
            2 => {
                let (a, b) = real2_eigenvalues(h[lo][lo], h[lo][lo + 1], h[lo + 1][lo], h[lo + 1][lo + 1]);
                out[found] = a;
                out[found + 1] = b;
                found += 2;
                hi -= 2;
                since_deflation = 0;
                continue;
            }
            _ => {}
        }

        iterations += 1;
        since_deflation += 1;
        if iterations > QR_MAX_ITERATIONS {
            return Err(Error::NoConvergence {
                routine: "Hessenberg QR",
                iterations: QR_MAX_ITERATIONS,
            });
        }

        let n = hi - 1;
        let shift = if since_deflation % 11 == 0 {
            // exceptional shift to break cycles
            h[n][n] + 0.75 * h[n][n - 1].abs()
        } else {
            wilkinson_shift(h[n - 1][n - 1], h[n - 1][n], h[n][n - 1], h[n][n])
        };

        for (i, row) in h.iter_mut().enumerate().take(hi).skip(lo) {
            row[i] -= shift;
        }
        let mut rotations = [(1.0, 0.0); 3];
        for k in lo..(hi - 1) {
            let (c, s) = givens(h[k][k], h[k + 1][k]);
            for j in k..hi {
                let a = h[k][j];
                let b = h[k + 1][j];
                h[k][j] = c * a + s * b;
                h[k + 1][j] = -s * a + c * b;
            }
            rotations[k - lo] = (c, s);
        }
        for k in lo..(hi - 1) {
            let (c, s) = rotations[k - lo];
            for row in h.iter_mut().take((k + 2).min(hi)).skip(lo) {
                let a = row[k];
                let b = row[k + 1];
                row[k] = c * a + s * b;
                row[k + 1] = -s * a + c * b;
            }
        }
        for (i, row) in h.iter_mut().enumerate().take(hi).skip(lo) {
            row[i] += shift;
        }
    }
    Ok(out)
}

fn givens(a: f64, b: f64) -> (f64, f64) {
    let r = a.hypot(b);
    if r == 0.0 {
        (1.0, 0.0)
    } else {
        (a / r, b / r)
    }
}

fn real2_eigenvalues(a: f64, b: f64, c: f64, d: f64) -> (f64, f64) {
    let mean = 0.5 * (a + d);
    let half_diff = 0.5 * (a - d);
    let disc = half_diff * half_diff + b * c;
    if disc >= 0.0 {
        let r = disc.sqrt();
        (mean + r, mean - r)
    } else {
        (mean, mean)
    }
}

fn wilkinson_shift(a: f64, b: f64, c: f64, d: f64) -> f64 {
    let (x, y) = real2_eigenvalues(a, b, c, d);
    if (x - d).abs() <= (y - d).abs() {
        x
    } else {
        y
    }
}

/// `(1/Z) sum_i exp(-E_i / T) |psi_i><psi_i|` assembled from outer products, without
/// any energy shift.
pub fn gibbs_dense(levels: &[(f64, [f64; 4])], temperature: f64) -> Result<Dense4> {
    if temperature <= 0.0 || !temperature.is_finite() {
        return Err(Error::InvalidParams {
            name: "temperature",
            value: temperature,
        });
    }
    let mut m = [[0.0; 4]; 4];
    let mut z = 0.0;
    for (energy, ket) in levels {
        let weight = (-energy / temperature).exp();
        z += weight;
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] += weight * ket[i] * ket[j];
            }
        }
    }
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x /= z;
        }
    }
    // outer products of real kets are symmetric up to rounding order; enforce it
    for i in 0..4 {
        for j in (i + 1)..4 {
            m[j][i] = m[i][j];
        }
    }
    Dense4::symmetric(m)
}

/// Pauli decomposition `rho = (I + a.s x I + I x b.s + sum T_ij s_i x s_j) / 4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochForm {
    /// Local Bloch vector of the first qubit.
    pub first: [f64; 3],
    /// Local Bloch vector of the second qubit.
    pub second: [f64; 3],
    /// Correlation tensor, `correlations[i][j] = tr(rho s_i x s_j)`.
    pub correlations: [[f64; 3]; 3],
}

const PAULI_I: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, 1.0]];
const PAULI_X: [[f64; 2]; 2] = [[0.0, 1.0], [1.0, 0.0]];
const PAULI_Z: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, -1.0]];
// sigma_y = i * J
const PAULI_J: [[f64; 2]; 2] = [[0.0, -1.0], [1.0, 0.0]];

fn kron(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 4]; 4] {
    let mut r = [[0.0; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    r[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    r
}

fn trace_product(rho: &[[f64; 4]; 4], op: &[[f64; 4]; 4]) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            s += rho[i][j] * op[j][i];
        }
    }
    s
}

impl BlochForm {
    /// Decomposes a real symmetric density matrix.
    ///
    /// For such matrices every expectation containing a single `sigma_y` vanishes,
    /// and `sigma_y x sigma_y = -(J x J)` with real `J`.
    pub fn from_dense(rho: &Dense4) -> Result<Self> {
        if !rho.symmetric {
            return Err(Error::Numerical("Bloch form requires a real symmetric matrix".into()));
        }
        let m = &rho.m;
        let t = |a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]| trace_product(m, &kron(a, b));
        let first = [t(&PAULI_X, &PAULI_I), 0.0, t(&PAULI_Z, &PAULI_I)];
        let second = [t(&PAULI_I, &PAULI_X), 0.0, t(&PAULI_I, &PAULI_Z)];
        let correlations = [
            [t(&PAULI_X, &PAULI_X), 0.0, t(&PAULI_X, &PAULI_Z)],
            [0.0, -t(&PAULI_J, &PAULI_J), 0.0],
            [t(&PAULI_Z, &PAULI_X), 0.0, t(&PAULI_Z, &PAULI_Z)],
        ];
        Ok(BlochForm {
            first,
            second,
            correlations,
        })
    }

    /// Average entropy of the first qubit after measuring the second along the
    /// Bloch direction `(theta, phi)`: `sum_k p_k S(rho_A|k)`.
    pub fn conditional_entropy_after_measuring_second(&self, theta: f64, phi: f64) -> f64 {
        let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
        let bn = dot(&self.second, &n);
        let tn = [
            dot(&self.correlations[0], &n),
            dot(&self.correlations[1], &n),
            dot(&self.correlations[2], &n),
        ];
        let mut total = 0.0;
        for sign in [1.0, -1.0] {
            let weight = 1.0 + sign * bn;
            let p = 0.5 * weight;
            if p <= 0.0 {
                continue;
            }
            let v = [
                self.first[0] + sign * tn[0],
                self.first[1] + sign * tn[1],
                self.first[2] + sign * tn[2],
            ];
            let r = (norm(&v) / weight).min(1.0);
            total += p * h2(0.5 * (1.0 + r));
        }
        total
    }

    pub fn first_entropy(&self) -> f64 {
        h2(0.5 * (1.0 + norm(&self.first).min(1.0)))
    }

    pub fn second_entropy(&self) -> f64 {
        h2(0.5 * (1.0 + norm(&self.second).min(1.0)))
    }
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(a: &[f64; 3]) -> f64 {
    dot(a, a).sqrt()
}
