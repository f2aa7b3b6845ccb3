//! Legendre basis on the unit zone `[-1/2, 1/2]` and the exact stencil fits
//! used by every WENO kernel.
//!
//! A polynomial is stored in modal form, `P(xi) = sum_k c_k L_k(xi)`. The fits
//! map point values at zone centres to modal coefficients through fixed
//! rational tables.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Highest basis degree used by the schemes (ninth order needs degree 8).
pub const MAX_DEGREE: usize = 8;
const NB: usize = MAX_DEGREE + 1;

/// Monomial coefficients of `L_k`, as (numerator, denominator), lowest power first.
const LEGENDRE_MONOMIALS: [&[(i64, i64)]; NB] = [
    &[(1, 1)],
    &[(0, 1), (1, 1)],
    &[(-1, 12), (0, 1), (1, 1)],
    &[(0, 1), (-3, 20), (0, 1), (1, 1)],
    &[(3, 560), (0, 1), (-3, 14), (0, 1), (1, 1)],
    &[(0, 1), (5, 336), (0, 1), (-5, 18), (0, 1), (1, 1)],
    &[(-5, 14784), (0, 1), (5, 176), (0, 1), (-15, 44), (0, 1), (1, 1)],
    &[(0, 1), (-35, 27456), (0, 1), (105, 2288), (0, 1), (-21, 52), (0, 1), (1, 1)],
    &[(7, 329472), (0, 1), (-7, 2288), (0, 1), (7, 104), (0, 1), (-7, 15), (0, 1), (1, 1)],
];

/// Exact monomial coefficients of `L_k`.
pub fn legendre_monomial_exact(k: usize) -> Result<Vec<BigRational>> {
    let row = LEGENDRE_MONOMIALS
        .get(k)
        .ok_or_else(|| Error::usage(format!("Legendre degree {k} exceeds {MAX_DEGREE}")))?;
    Ok(row
        .iter()
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect())
}

struct BasisTables {
    /// `monomial[k][n]`: coefficient of `xi^n` in `L_k`.
    monomial: [[f64; NB]; NB],
    /// `gram[j][k] = sum_{m>=1} int L_j^(m) L_k^(m)`.
    gram: [[f64; NB]; NB],
    /// `L_k(-1/2)` and `L_k(1/2)`.
    at_left: [f64; NB],
    at_right: [f64; NB],
    /// `deriv_at_zero[n][k] = L_k^(n)(0)`.
    deriv_at_zero: [[f64; NB]; NB],
}

fn tables() -> &'static BasisTables {
    static TABLES: OnceLock<BasisTables> = OnceLock::new();
    TABLES.get_or_init(build_tables)
}

fn build_tables() -> BasisTables {
    let mut monomial = [[0.0; NB]; NB];
    for (k, row) in LEGENDRE_MONOMIALS.iter().enumerate() {
        for (n, &(num, den)) in row.iter().enumerate() {
            monomial[k][n] = num as f64 / den as f64;
        }
    }
    let gram_exact = smoothness_gram_exact();
    let mut gram = [[0.0; NB]; NB];
    for j in 0..NB {
        for k in 0..NB {
            gram[j][k] = gram_exact[j][k].to_f64().unwrap_or(f64::NAN);
        }
    }
    let mut at_left = [0.0; NB];
    let mut at_right = [0.0; NB];
    let mut deriv_at_zero = [[0.0; NB]; NB];
    for k in 0..NB {
        at_left[k] = horner(&monomial[k], 0, -0.5);
        at_right[k] = horner(&monomial[k], 0, 0.5);
        for (n, row) in deriv_at_zero.iter_mut().enumerate() {
            row[k] = horner(&monomial[k], n, 0.0);
        }
    }
    BasisTables {
        monomial,
        gram,
        at_left,
        at_right,
        deriv_at_zero,
    }
}

/// `d^n/dxi^n` of a monomial-form polynomial, evaluated at `xi`.
fn horner(mono: &[f64; NB], n: usize, xi: f64) -> f64 {
    if n > MAX_DEGREE {
        return 0.0;
    }
    let mut acc = 0.0;
    for p in (n..NB).rev() {
        let mut fall = 1.0;
        for q in 0..n {
            fall *= (p - q) as f64;
        }
        acc = acc * xi + fall * mono[p];
    }
    acc
}

/// Exact Gram matrix of the smoothness functional on the Legendre basis.
pub fn smoothness_gram_exact() -> Vec<Vec<BigRational>> {
    let polys: Vec<Vec<BigRational>> = (0..NB)
        .map(|k| {
            let mut v = legendre_monomial_exact(k).expect("degree in range");
            v.resize(NB, BigRational::zero());
            v
        })
        .collect();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    // int_{-1/2}^{1/2} xi^n
    let moment = |n: usize| -> BigRational {
        if n % 2 == 1 {
            BigRational::zero()
        } else {
            let mut p = BigRational::from_integer(BigInt::from(2));
            for _ in 0..=n {
                p *= &half;
            }
            p / BigRational::from_integer(BigInt::from(n as i64 + 1))
        }
    };
    let deriv = |c: &[BigRational], m: usize| -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); NB];
        for p in m..NB {
            let mut fall = BigInt::from(1);
            for q in 0..m {
                fall *= BigInt::from((p - q) as i64);
            }
            out[p - m] = &c[p] * BigRational::from_integer(fall);
        }
        out
    };
    let mut gram = vec![vec![BigRational::zero(); NB]; NB];
    for m in 1..NB {
        let d: Vec<Vec<BigRational>> = polys.iter().map(|c| deriv(c, m)).collect();
        for j in 0..NB {
            for k in 0..NB {
                let mut s = BigRational::zero();
                for a in 0..NB {
                    if d[j][a].is_zero() {
                        continue;
                    }
                    for b in 0..NB {
                        if d[k][b].is_zero() {
                            continue;
                        }
                        s += &d[j][a] * &d[k][b] * moment(a + b);
                    }
                }
                gram[j][k] += s;
            }
        }
    }
    gram
}

/// `L_k(xi)`.
pub fn eval_legendre(k: usize, xi: f64) -> Result<f64> {
    if k > MAX_DEGREE {
        return Err(Error::usage(format!(
            "Legendre degree {k} exceeds {MAX_DEGREE}"
        )));
    }
    Ok(horner(&tables().monomial[k], 0, xi))
}

/// Polynomial in modal form on the unit zone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModalPolynomial {
    coeffs: [f64; NB],
    degree: usize,
}

impl ModalPolynomial {
    pub fn new(coeffs: &[f64]) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > NB {
            return Err(Error::usage(format!(
                "modal polynomial needs 1..={NB} coefficients, got {}",
                coeffs.len()
            )));
        }
        let mut c = [0.0; NB];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(Self {
            coeffs: c,
            degree: coeffs.len() - 1,
        })
    }

    pub fn zero(degree: usize) -> Self {
        Self {
            coeffs: [0.0; NB],
            degree: degree.min(MAX_DEGREE),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..=self.degree]
    }

    /// `self += a * other`; the degree grows to cover both.
    pub fn add_scaled(&mut self, a: f64, other: &ModalPolynomial) {
        for k in 0..=other.degree {
            self.coeffs[k] += a * other.coeffs[k];
        }
        self.degree = self.degree.max(other.degree);
    }

    pub fn scaled(&self, a: f64) -> Self {
        let mut out = *self;
        for c in out.coeffs.iter_mut() {
            *c *= a;
        }
        out
    }

    pub fn eval(&self, xi: f64) -> f64 {
        self.derivative(0, xi)
    }

    /// `P^(n)(xi)`.
    pub fn derivative(&self, n: usize, xi: f64) -> f64 {
        let t = tables();
        let mut mono = [0.0; NB];
        for k in 0..=self.degree {
            for p in 0..=k {
                mono[p] += self.coeffs[k] * t.monomial[k][p];
            }
        }
        horner(&mono, n, xi)
    }

    pub fn at_left_face(&self) -> f64 {
        let t = tables();
        (0..=self.degree).map(|k| self.coeffs[k] * t.at_left[k]).sum()
    }

    pub fn at_right_face(&self) -> f64 {
        let t = tables();
        (0..=self.degree).map(|k| self.coeffs[k] * t.at_right[k]).sum()
    }

    /// `P^(n)(0)`.
    pub fn derivative_at_zero(&self, n: usize) -> f64 {
        if n > MAX_DEGREE {
            return 0.0;
        }
        let row = &tables().deriv_at_zero[n];
        (n..=self.degree).map(|k| self.coeffs[k] * row[k]).sum()
    }

    /// Smoothness indicator: sum over derivative orders of `int (P^(m))^2`.
    pub fn smoothness(&self) -> f64 {
        let g = &tables().gram;
        let mut beta = 0.0;
        for j in 1..=self.degree {
            let mut row = 0.0;
            for k in 1..=self.degree {
                row += g[j][k] * self.coeffs[k];
            }
            beta += self.coeffs[j] * row;
        }
        beta
    }
}

/// Convenience wrapper around [`ModalPolynomial::derivative`].
pub fn eval_poly(p: &ModalPolynomial, n: usize, xi: f64) -> f64 {
    p.derivative(n, xi)
}

/// Smoothness indicator of a modal polynomial.
pub fn smoothness_indicator(p: &ModalPolynomial) -> f64 {
    p.smoothness()
}

/// Named stencils. Centre stencils use offsets relative to the zone being
/// reconstructed; boundary stencils use offsets relative to the zone on the
/// left of the boundary, whose centre sits at `xi = -1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StencilId {
    CenterL3,
    CenterC3,
    CenterR3,
    Center5,
    Center7,
    Center9,
    BoundaryL3,
    BoundaryR3,
    BoundaryC4,
    BoundaryC6,
    BoundaryC8,
}

struct StencilTable {
    offsets: &'static [i32],
    /// One row per modal coefficient: numerators by ascending offset, then denominator.
    rows: &'static [(&'static [i64], i64)],
}

const CL3: StencilTable = StencilTable {
    offsets: &[-2, -1, 0],
    rows: &[(&[1, -2, 25], 24), (&[1, -4, 3], 2), (&[1, -2, 1], 2)],
};
const CC3: StencilTable = StencilTable {
    offsets: &[-1, 0, 1],
    rows: &[(&[1, 22, 1], 24), (&[-1, 0, 1], 2), (&[1, -2, 1], 2)],
};
const CR3: StencilTable = StencilTable {
    offsets: &[0, 1, 2],
    rows: &[(&[25, -2, 1], 24), (&[-3, 4, -1], 2), (&[1, -2, 1], 2)],
};
const C5: StencilTable = StencilTable {
    offsets: &[-2, -1, 0, 1, 2],
    rows: &[
        (&[-17, 308, 5178, 308, -17], 5760),
        (&[17, -154, 0, 154, -17], 240),
        (&[-11, 212, -402, 212, -11], 336),
        (&[-1, 2, 0, -2, 1], 12),
        (&[1, -4, 6, -4, 1], 24),
    ],
};
const C7: StencilTable = StencilTable {
    offsets: &[-3, -2, -1, 0, 1, 2, 3],
    rows: &[
        (&[367, -5058, 57249, 862564, 57249, -5058, 367], 967680),
        (&[-367, 3372, -19083, 0, 19083, -3372, 367], 26880),
        (&[111, -1546, 18625, -34380, 18625, -1546, 111], 26880),
        (&[17, -140, 229, 0, -229, 140, -17], 864),
        (&[-41, 510, -1671, 2404, -1671, 510, -41], 6336),
        (&[-1, 4, -5, 0, 5, -4, 1], 240),
        (&[1, -6, 15, -20, 15, -6, 1], 720),
    ],
};
const C9: StencilTable = StencilTable {
    offsets: &[-4, -3, -2, -1, 0, 1, 2, 3, 4],
    rows: &[
        (
            &[
                -27859, 399032, -3207892, 29039624, 412080590, 29039624, -3207892, 399032,
                -27859,
            ],
            464486400,
        ),
        (
            &[
                27859, -299274, 1603946, -7259906, 0, 7259906, -1603946, 299274, -27859,
            ],
            9676800,
        ),
        (
            &[
                -13789, 198224, -1610524, 15523184, -28194190, 15523184, -1610524, 198224,
                -13789,
            ],
            21288960,
        ),
        (
            &[
                -10223, 106218, -512722, 747682, 0, -747682, 512722, -106218, 10223,
            ],
            2280960,
        ),
        (
            &[
                7243, -100584, 733204, -2143448, 3007170, -2143448, 733204, -100584, 7243,
            ],
            6589440,
        ),
        (&[101, -918, 2662, -2974, 0, 2974, -2662, 918, -101], 74880),
        (&[-29, 352, -1532, 3424, -4430, 3424, -1532, 352, -29], 86400),
        (&[-1, 6, -14, 14, 0, -14, 14, -6, 1], 10080),
        (&[1, -8, 28, -56, 70, -56, 28, -8, 1], 40320),
    ],
};
const ZL3: StencilTable = StencilTable {
    offsets: &[-1, 0, 1],
    rows: &[(&[-1, 8, 5], 12), (&[0, -1, 1], 1), (&[1, -2, 1], 2)],
};
const ZR3: StencilTable = StencilTable {
    offsets: &[0, 1, 2],
    rows: &[(&[5, 8, -1], 12), (&[-1, 1, 0], 1), (&[1, -2, 1], 2)],
};
const ZC4: StencilTable = StencilTable {
    offsets: &[-1, 0, 1, 2],
    rows: &[
        (&[-1, 13, 13, -1], 24),
        (&[1, -63, 63, -1], 60),
        (&[1, -1, -1, 1], 4),
        (&[-1, 3, -3, 1], 6),
    ],
};
const ZC6: StencilTable = StencilTable {
    offsets: &[-2, -1, 0, 1, 2, 3],
    rows: &[
        (&[11, -93, 802, 802, -93, 11], 1440),
        (&[-3, 43, -1794, 1794, -43, 3], 1680),
        (&[-4, 33, -29, -29, 33, -4], 84),
        (&[1, -14, 37, -37, 14, -1], 54),
        (&[1, -3, 2, 2, -3, 1], 48),
        (&[-1, 5, -10, 10, -5, 1], 120),
    ],
};
const ZC8: StencilTable = StencilTable {
    offsets: &[-3, -2, -1, 0, 1, 2, 3, 4],
    rows: &[
        (&[-191, 1879, -9531, 68323, 68323, -9531, 1879, -191], 120960),
        (&[79, -1093, 9399, -325685, 325685, -9399, 1093, -79], 302400),
        (&[67, -655, 3243, -2655, -2655, 3243, -655, 67], 6720),
        (&[-391, 5377, -45171, 111365, -111365, 45171, -5377, 391], 142560),
        (&[-37, 317, -729, 449, 449, -729, 317, -37], 6336),
        (&[31, -373, 1431, -2645, 2645, -1431, 373, -31], 18720),
        (&[1, -5, 9, -5, -5, 9, -5, 1], 1440),
        (&[-1, 7, -21, 35, -35, 21, -7, 1], 5040),
    ],
};

impl StencilId {
    pub const ALL: [StencilId; 11] = [
        StencilId::CenterL3,
        StencilId::CenterC3,
        StencilId::CenterR3,
        StencilId::Center5,
        StencilId::Center7,
        StencilId::Center9,
        StencilId::BoundaryL3,
        StencilId::BoundaryR3,
        StencilId::BoundaryC4,
        StencilId::BoundaryC6,
        StencilId::BoundaryC8,
    ];

    fn table(self) -> &'static StencilTable {
        match self {
            StencilId::CenterL3 => &CL3,
            StencilId::CenterC3 => &CC3,
            StencilId::CenterR3 => &CR3,
            StencilId::Center5 => &C5,
            StencilId::Center7 => &C7,
            StencilId::Center9 => &C9,
            StencilId::BoundaryL3 => &ZL3,
            StencilId::BoundaryR3 => &ZR3,
            StencilId::BoundaryC4 => &ZC4,
            StencilId::BoundaryC6 => &ZC6,
            StencilId::BoundaryC8 => &ZC8,
        }
    }

    pub fn is_boundary(self) -> bool {
        matches!(
            self,
            StencilId::BoundaryL3
                | StencilId::BoundaryR3
                | StencilId::BoundaryC4
                | StencilId::BoundaryC6
                | StencilId::BoundaryC8
        )
    }

    pub fn offsets(self) -> &'static [i32] {
        self.table().offsets
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.offsets().len()
    }

    pub fn degree(self) -> usize {
        self.len() - 1
    }

    /// Local coordinate of each node.
    pub fn nodes(self) -> Vec<f64> {
        let shift = if self.is_boundary() { -0.5 } else { 0.0 };
        self.offsets().iter().map(|&o| o as f64 + shift).collect()
    }

    /// Fit coefficients as exact rationals: `coeff[k][j]` multiplies value `j`.
    pub fn exact_rows(self) -> Vec<Vec<BigRational>> {
        self.table()
            .rows
            .iter()
            .map(|(nums, den)| {
                nums.iter()
                    .map(|&n| BigRational::new(BigInt::from(n), BigInt::from(*den)))
                    .collect()
            })
            .collect()
    }
}

/// Fit point values (ordered by ascending offset) to a modal polynomial.
pub fn fit_stencil(id: StencilId, values: &[f64]) -> Result<ModalPolynomial> {
    if values.len() != id.len() {
        return Err(Error::usage(format!(
            "stencil {id:?} takes {} values, got {}",
            id.len(),
            values.len()
        )));
    }
    Ok(fit_unchecked(id, values))
}

pub(crate) fn fit_unchecked(id: StencilId, values: &[f64]) -> ModalPolynomial {
    let t = id.table();
    let mut c = [0.0; NB];
    for (k, (nums, den)) in t.rows.iter().enumerate() {
        let mut s = 0.0;
        for (n, v) in nums.iter().zip(values) {
            s += *n as f64 * v;
        }
        c[k] = s / *den as f64;
    }
    ModalPolynomial {
        coeffs: c,
        degree: t.rows.len() - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Exact Gauss-Jordan solve of the Legendre-Vandermonde system, independent
    /// of the stored tables.
    fn vandermonde_fit(nodes: &[BigRational]) -> Vec<Vec<BigRational>> {
        let n = nodes.len();
        let eval = |k: usize, x: &BigRational| -> BigRational {
            let mono = legendre_monomial_exact(k).unwrap();
            let mut acc = BigRational::zero();
            for c in mono.iter().rev() {
                acc = acc * x + c;
            }
            acc
        };
        // rows j: sum_k c_k L_k(x_j) = f_j; invert V to express c in f.
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|j| {
                let mut row: Vec<BigRational> = (0..n).map(|k| eval(k, &nodes[j])).collect();
                for q in 0..n {
                    row.push(if q == j { rat(1, 1) } else { rat(0, 1) });
                }
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).unwrap();
            a.swap(col, piv);
            let p = a[col][col].clone();
            for v in a[col].iter_mut() {
                *v = &*v / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for q in 0..2 * n {
                        let sub = &f * &a[col][q];
                        a[r][q] -= sub;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[n..].to_vec()).collect()
    }

    #[test]
    fn tables_match_exact_vandermonde_solve() {
        for id in StencilId::ALL {
            let shift = if id.is_boundary() { rat(-1, 2) } else { rat(0, 1) };
            let nodes: Vec<BigRational> = id
                .offsets()
                .iter()
                .map(|&o| rat(o as i64, 1) + &shift)
                .collect();
            assert_eq!(vandermonde_fit(&nodes), id.exact_rows(), "{id:?}");
        }
    }

    #[test]
    fn basis_is_orthogonal() {
        let mut x = Vec::new();
        let m = 400;
        for q in 0..m {
            x.push(-0.5 + (q as f64 + 0.5) / m as f64);
        }
        for j in 0..NB {
            for k in 0..j {
                // midpoint rule is exact enough to see orthogonality
                let s: f64 = x
                    .iter()
                    .map(|&t| eval_legendre(j, t).unwrap() * eval_legendre(k, t).unwrap())
                    .sum::<f64>()
                    / m as f64;
                assert!(s.abs() < 1e-5, "L{j} L{k}: {s}");
            }
        }
    }

    #[test]
    fn degree_out_of_range() {
        assert!(eval_legendre(9, 0.0).is_err());
        assert!(ModalPolynomial::new(&[0.0; 10]).is_err());
        assert!(fit_stencil(StencilId::Center5, &[1.0; 4]).is_err());
    }

    #[test]
    fn centered_five_point_examples() {
        let p = fit_stencil(StencilId::Center5, &[4.0, 1.0, 0.0, 1.0, 4.0]).unwrap();
        let want = [1.0 / 12.0, 0.0, 1.0, 0.0, 0.0];
        for (a, b) in p.coeffs().iter().zip(want) {
            assert!((a - b).abs() < 1e-14, "{a} vs {b}");
        }
        let p = fit_stencil(StencilId::Center5, &[-2.0, -1.0, 0.0, 1.0, 2.0]).unwrap();
        assert!((p.coeffs()[1] - 1.0).abs() < 1e-14);
        assert!((p.smoothness() - 1.0).abs() < 1e-12);
        // cubic through (-3/2,1), (-1/2,1), (1/2,2), (3/2,2)
        let p = fit_stencil(StencilId::BoundaryC4, &[1.0, 1.0, 2.0, 2.0]).unwrap();
        assert!((p.derivative_at_zero(1) - 13.0 / 12.0).abs() < 1e-12);
        assert!((p.coeffs()[1] - 31.0 / 30.0).abs() < 1e-12);
        let p = fit_stencil(StencilId::CenterC3, &[0.0, 1.0, 4.0]).unwrap();
        for (a, b) in p.coeffs().iter().zip([13.0 / 12.0, 2.0, 1.0]) {
            assert!((a - b).abs() < 1e-14);
        }
        let p = fit_stencil(StencilId::CenterL3, &[4.0, 1.0, 0.0]).unwrap();
        for (a, b) in p.coeffs().iter().zip([1.0 / 12.0, 0.0, 1.0]) {
            assert!((a - b).abs() < 1e-14);
        }
        assert!((ModalPolynomial::new(&[0.0, 0.0, 1.0]).unwrap().smoothness() - 13.0 / 3.0).abs() < 1e-14);
        assert!((eval_legendre(2, 0.5).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        let l3 = ModalPolynomial::new(&[0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!((eval_poly(&l3, 1, 0.0) + 3.0 / 20.0).abs() < 1e-15);
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn smoothness_matches_direct_quadrature() {
        // Gauss-Legendre 8-point on [-1/2,1/2] integrates degree-15 exactly.
        let gx = [
            0.183434642495649_8,
            0.525532409916329_0,
            0.796666477413626_7,
            0.960289856497536_3,
        ];
        let gw = [
            0.362683783378362_0,
            0.313706645877887_3,
            0.222381034453374_5,
            0.101228536290376_3,
        ];
        let c = [0.3, -1.2, 0.7, 2.1, -0.4, 0.9, 1.3, -0.8, 0.25];
        let p = ModalPolynomial::new(&c).unwrap();
        let mut beta = 0.0;
        for m in 1..=8 {
            for (x, w) in gx.iter().zip(gw) {
                for s in [-1.0, 1.0] {
                    let d = p.derivative(m, 0.5 * s * x);
                    beta += 0.5 * w * d * d;
                }
            }
        }
        assert!((beta - p.smoothness()).abs() < 1e-10 * beta);
    }

    #[test]
    fn face_and_centre_helpers_agree_with_eval() {
        let p = ModalPolynomial::new(&[0.1, 0.2, -0.3, 0.4, 0.5, -0.6, 0.7]).unwrap();
        assert!((p.at_left_face() - p.eval(-0.5)).abs() < 1e-14);
        assert!((p.at_right_face() - p.eval(0.5)).abs() < 1e-14);
        for n in 0..=8 {
            assert!((p.derivative_at_zero(n) - p.derivative(n, 0.0)).abs() < 1e-12);
        }
    }
}
