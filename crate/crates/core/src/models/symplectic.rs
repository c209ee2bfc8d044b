//! Symplectic diagonalization of an elliptic quadratic Hamiltonian in two
//! degrees of freedom, with interval-verified postconditions.
//!
//! The construction follows the classical eigenplane recipe: for each
//! eigenvalue `i nu` of `A = J Hess`, an eigenvector enclosure is obtained by
//! interval Gaussian elimination on a nonsingular 3x3 subsystem, the real and
//! imaginary parts are normalized by the symplectic pairing, and the column
//! signs are fixed by checking the two postconditions (`C^T J C = J` and a
//! diagonal transformed form) rigorously.

use crate::rigor::{ComplexInterval, Interval};

pub type Mat4 = [[Interval; 4]; 4];

#[derive(Debug, thiserror::Error)]
pub enum SymplecticError {
    #[error("not an elliptic equilibrium: {0}")]
    NotElliptic(String),
    #[error("diagonalization failed: {0}")]
    Failed(String),
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[Interval::ZERO; 4]; 4];
    for (i, row) in a.iter().enumerate() {
        for j in 0..4 {
            let mut acc = Interval::ZERO;
            for (k, aik) in row.iter().enumerate() {
                acc = acc.add(&aik.mul(&b[k][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn mat_transpose(a: &Mat4) -> Mat4 {
    let mut out = [[Interval::ZERO; 4]; 4];
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out[j][i] = *v;
        }
    }
    out
}

/// Poisson matrix for the variable order `(y1, y2, x1, x2)` (momenta first).
pub fn poisson_matrix() -> Mat4 {
    let mut j = [[Interval::ZERO; 4]; 4];
    j[0][2] = Interval::point(-1.0);
    j[1][3] = Interval::point(-1.0);
    j[2][0] = Interval::ONE;
    j[3][1] = Interval::ONE;
    j
}

fn mat_sub(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[Interval::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j].sub(&b[i][j]);
        }
    }
    out
}

/// Solve the 3x3 complex interval system by Gaussian elimination with
/// midpoint-magnitude pivoting; encloses the solution for every matrix in the
/// interval family.
fn solve3(
    mut m: [[ComplexInterval; 3]; 3],
    mut rhs: [ComplexInterval; 3],
) -> Result<[ComplexInterval; 3], SymplecticError> {
    let mut order = [0usize, 1, 2];
    for col in 0..3 {
        // Pick the row with the largest pivot midpoint modulus.
        let (best, _) = (col..3)
            .map(|r| {
                let c = &m[order[r]][col];
                let mag = c.re.mid().hypot(c.im.mid());
                (r, mag)
            })
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        order.swap(col, best);
        let pivot = m[order[col]][col];
        let pivot_mod = pivot.modulus();
        if pivot_mod.lo() <= 0.0 {
            return Err(SymplecticError::Failed("singular pivot".into()));
        }
        for r in (col + 1)..3 {
            let row = order[r];
            let factor = m[row][col].div(&pivot);
            for c in col..3 {
                let delta = factor.mul(&m[order[col]][c]);
                m[row][c] = m[row][c].sub(&delta);
            }
            rhs[row] = rhs[row].sub(&factor.mul(&rhs[order[col]]));
        }
    }
    let mut x = [ComplexInterval::ZERO; 3];
    for col in (0..3).rev() {
        let mut acc = rhs[order[col]];
        for c in (col + 1)..3 {
            acc = acc.sub(&m[order[col]][c].mul(&x[c]));
        }
        x[col] = acc.div(&m[order[col]][col]);
    }
    Ok(x)
}

/// Enclosure of an eigenvector of `a` for eigenvalue `i nu`: one component is
/// pinned to 1, the others solved; the dropped equation is verified to contain
/// zero afterwards.
fn eigenvector(a: &Mat4, nu: &Interval) -> Result<[ComplexInterval; 4], SymplecticError> {
    let inu = ComplexInterval::new(Interval::ZERO, *nu);
    // B = A - i nu I as complex intervals.
    let mut b = [[ComplexInterval::ZERO; 4]; 4];
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            b[i][j] = ComplexInterval::from_re(*v);
            if i == j {
                b[i][j] = b[i][j].sub(&inu);
            }
        }
    }
    for pin in 0..4 {
        for drop_row in 0..4 {
            let rows: Vec<usize> = (0..4).filter(|&r| r != drop_row).collect();
            let cols: Vec<usize> = (0..4).filter(|&c| c != pin).collect();
            let mut m = [[ComplexInterval::ZERO; 3]; 3];
            let mut rhs = [ComplexInterval::ZERO; 3];
            for (ri, &r) in rows.iter().enumerate() {
                for (ci, &c) in cols.iter().enumerate() {
                    m[ri][ci] = b[r][c];
                }
                rhs[ri] = b[r][pin].neg();
            }
            let solved = match solve3(m, rhs) {
                Ok(x) => x,
                Err(_) => continue,
            };
            let mut v = [ComplexInterval::ZERO; 4];
            v[pin] = ComplexInterval::from_re(Interval::ONE);
            for (ci, &c) in cols.iter().enumerate() {
                v[c] = solved[ci];
            }
            // Verify the dropped equation.
            let mut residual = ComplexInterval::ZERO;
            for (c, vc) in v.iter().enumerate() {
                residual = residual.add(&b[drop_row][c].mul(vc));
            }
            if residual.contains_zero() {
                return Ok(v);
            }
        }
    }
    Err(SymplecticError::Failed("no consistent eigenvector enclosure".into()))
}

fn quadratic_matrix_apply(q: &Mat4, c: &Mat4) -> Mat4 {
    mat_mul(&mat_transpose(c), &mat_mul(q, c))
}

fn contains_zero_offdiag(m: &Mat4) -> bool {
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j && !v.contains_zero() {
                return false;
            }
        }
    }
    true
}

fn is_symplectic(c: &Mat4) -> bool {
    let j = poisson_matrix();
    let prod = mat_mul(&mat_transpose(c), &mat_mul(&j, c));
    let dev = mat_sub(&prod, &j);
    dev.iter().all(|row| row.iter().all(Interval::contains_zero))
}

/// Result of the diagonalization: the transform, the deviation `C^T J C - J`
/// (every entry encloses zero) and the recovered frequency enclosures.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    pub transform: Mat4,
    pub symplectic_deviation: Mat4,
    pub frequencies: [Interval; 2],
}

/// Diagonalize the elliptic quadratic form `H2 = 1/2 v^T Q v` into
/// `sum_j nu_j (x_j^2 + y_j^2)/2`: returns `C` with `v = C u`,
/// `u = (y1, y2, x1, x2)`, `C^T J C = J` verified entrywise.
///
/// `nu` supplies the expected frequency enclosures (signs included); they pin
/// the pairing order of the eigenplanes.
pub fn symplectic_diagonalize(q: &Mat4, nu: &[Interval; 2]) -> Result<Diagonalization, SymplecticError> {
    for j in 0..2 {
        if nu[j].contains_zero() {
            return Err(SymplecticError::NotElliptic(format!(
                "frequency {} enclosure touches zero",
                j + 1
            )));
        }
    }
    let jmat = poisson_matrix();
    let a = mat_mul(&jmat, q);
    let mut columns = [[Interval::ZERO; 4]; 4]; // column-major staging
    for (j, nu_j) in nu.iter().enumerate() {
        let v = eigenvector(&a, nu_j)?;
        let re: Vec<Interval> = v.iter().map(|c| c.re).collect();
        let im: Vec<Interval> = v.iter().map(|c| c.im).collect();
        // kappa = Re(v)^T J Im(v)
        let mut kappa = Interval::ZERO;
        let jm = poisson_matrix();
        for (r, re_r) in re.iter().enumerate() {
            for (c, im_c) in im.iter().enumerate() {
                kappa = kappa.add(&re_r.mul(&jm[r][c]).mul(im_c));
            }
        }
        if kappa.contains_zero() {
            return Err(SymplecticError::Failed("degenerate symplectic pairing".into()));
        }
        let scale = Interval::ONE.div(&kappa.abs().sqrt());
        let (ya, xa): (Vec<Interval>, Vec<Interval>) = if kappa.hi() < 0.0 {
            (im.iter().map(|v| v.mul(&scale)).collect(), re.iter().map(|v| v.mul(&scale)).collect())
        } else {
            (re.iter().map(|v| v.mul(&scale)).collect(), im.iter().map(|v| v.mul(&scale)).collect())
        };
        for r in 0..4 {
            columns[j][r] = ya[r];
            columns[j + 2][r] = xa[r];
        }
    }
    // Try the sign combinations on the x-columns until both postconditions
    // verify; the y/x split above fixes the pairing orientation up to signs.
    for mask in 0..4u8 {
        let mut c = [[Interval::ZERO; 4]; 4];
        for col in 0..4 {
            let flip = col >= 2 && (mask >> (col - 2)) & 1 == 1;
            for r in 0..4 {
                c[r][col] = if flip { columns[col][r].neg() } else { columns[col][r] };
            }
        }
        if !is_symplectic(&c) {
            continue;
        }
        let d = quadratic_matrix_apply(q, &c);
        if !contains_zero_offdiag(&d) {
            continue;
        }
        // Diagonal must carry the frequencies: d = diag(nu1, nu2, nu1, nu2).
        let mut ok = true;
        for j in 0..2 {
            let pair_ok = d[j][j].hull(&d[j + 2][j + 2]);
            if pair_ok.lo() > nu[j].hi() || pair_ok.hi() < nu[j].lo() {
                ok = false;
            }
        }
        if !ok {
            continue;
        }
        let jm = poisson_matrix();
        let dev = mat_sub(&mat_mul(&mat_transpose(&c), &mat_mul(&jm, &c)), &jm);
        return Ok(Diagonalization {
            transform: c,
            symplectic_deviation: dev,
            frequencies: [d[0][0].hull(&d[2][2]), d[1][1].hull(&d[3][3])],
        });
    }
    Err(SymplecticError::Failed("no sign assignment satisfies the postconditions".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_diagonal_form() {
        // Q = diag(w1, w2, w1, w2): the transform is the identity up to signs.
        let w1 = 1.0;
        let w2 = -0.62;
        let mut q = [[Interval::ZERO; 4]; 4];
        q[0][0] = Interval::point(w1);
        q[1][1] = Interval::point(w2);
        q[2][2] = Interval::point(w1);
        q[3][3] = Interval::point(w2);
        let nu = [Interval::point(w1), Interval::point(w2)];
        let d = symplectic_diagonalize(&q, &nu).unwrap();
        assert!(d.frequencies[0].contains(w1));
        assert!(d.frequencies[1].contains(w2));
        for row in &d.symplectic_deviation {
            for v in row {
                assert!(v.contains_zero());
                assert!(v.width() < 1e-12);
            }
        }
        // Identity up to sign/permutation inside each eigenplane: columns stay
        // in their plane and have unit length there.
        for col in 0..4 {
            let plane = col % 2;
            let mut sq = Interval::ZERO;
            for row in 0..4 {
                let v = d.transform[row][col];
                if row % 2 == plane {
                    sq = sq.add(&v.mul(&v));
                } else {
                    assert!(v.contains_zero(), "col {col} leaks out of its plane");
                }
            }
            assert!(sq.contains(1.0), "column {col} not normalized: {sq:?}");
        }
    }

    #[test]
    fn coupled_elliptic_form() {
        // A mildly coupled positive/negative pair, diagonalized and verified.
        let mut q = [[Interval::ZERO; 4]; 4];
        let entries = [
            (0, 0, 1.0),
            (1, 1, -0.5),
            (2, 2, 1.0),
            (3, 3, -0.5),
            (2, 3, 0.05),
            (3, 2, 0.05),
        ];
        for (i, j, v) in entries {
            q[i][j] = Interval::point(v);
        }
        // Eigenvalues of the x-block pencil: computed from the 2x2 blocks; use
        // loose enclosures and let the verification tighten the claim.
        let nu = [Interval::new(0.99, 1.01), Interval::new(-0.52, -0.49)];
        let d = symplectic_diagonalize(&q, &nu).unwrap();
        for row in &d.symplectic_deviation {
            for v in row {
                assert!(v.contains_zero());
            }
        }
    }
}
