//! Quadrature rules used across the crate.
//!
//! Gauss-Legendre and Gauss-Laguerre nodes are generated by Newton
//! iteration on the recurrence-evaluated polynomials; no lookup tables.
//! Semi-infinite integrals are handled by rational or square mappings of
//! the unit interval, with node doubling until a relative tolerance holds.

/// Gauss-Legendre nodes and weights on `(-1, 1)`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_pair(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Value and derivative of the Legendre polynomial `P_n` at `x`.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss-Legendre nodes and weights mapped onto `(a, b)`.
pub fn gauss_legendre_ab(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    let c = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    (
        x.iter().map(|&t| mid + c * t).collect(),
        w.iter().map(|&wi| wi * c).collect(),
    )
}

/// Gauss-Laguerre nodes and weights for `int_0^inf f(x) e^{-x} dx`.
pub fn gauss_laguerre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let mut x = 0.0_f64;
    for i in 0..n {
        // Stroud & Secrest initial guesses.
        x = if i == 0 {
            3.0 / (1.0 + 2.4 * n as f64)
        } else if i == 1 {
            x + 15.0 / (1.0 + 2.5 * n as f64)
        } else {
            let ifl = i as f64;
            x + (1.0 + 2.55 * (ifl - 1.0)) / (1.9 * (ifl - 1.0)) * (x - nodes[i - 2])
        };
        let mut dl = 0.0;
        for _ in 0..200 {
            let (l, d) = laguerre_pair(n, x);
            dl = d;
            let dx = l / d;
            x -= dx;
            if dx.abs() < 1e-14 * x.max(1e-300) {
                break;
            }
        }
        nodes[i] = x;
        let (lnm1, _) = laguerre_pair(n - 1, x);
        // at a root, (n+1) L_{n+1} = -n L_{n-1}, so the usual weight
        // x / ((n+1) L_{n+1})^2 becomes x / (n L_{n-1})^2
        let _ = dl;
        weights[i] = x / (n as f64 * lnm1).powi(2);
    }
    (nodes, weights)
}

/// Value and derivative of the Laguerre polynomial `L_n` at `x`.
fn laguerre_pair(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut l0 = 1.0;
    let mut l1 = 1.0 - x;
    for k in 2..=n {
        let kf = k as f64;
        let l2 = ((2.0 * kf - 1.0 - x) * l1 - (kf - 1.0) * l0) / kf;
        l0 = l1;
        l1 = l2;
    }
    let d = n as f64 * (l1 - l0) / x;
    (l1, d)
}

/// Semi-infinite integral of a smooth decaying function via the square of
/// the rational map: `y = (s/(1-s))^2`, Gauss-Legendre in `s`, doubling the
/// node count until the relative change drops below `rel_tol`.
///
/// The squared map removes 1/sqrt(y) endpoint singularities of the
/// integrand, which is what the kernel transforms produce.
pub fn integrate_zero_inf<F: Fn(f64) -> f64>(
    f: F,
    rel_tol: f64,
    start_nodes: usize,
    max_nodes: usize,
) -> Result<(f64, usize, f64), (f64, usize, f64)> {
    let mut n = start_nodes.max(4);
    let mut prev = mapped_sum(&f, n);
    loop {
        n *= 2;
        let cur = mapped_sum(&f, n);
        let scale = cur.abs().max(1e-300);
        let rel = (cur - prev).abs() / scale;
        if rel <= rel_tol {
            return Ok((cur, n, rel));
        }
        if n >= max_nodes {
            return Err((cur, n, rel));
        }
        prev = cur;
    }
}

fn mapped_sum<F: Fn(f64) -> f64>(f: &F, n: usize) -> f64 {
    let (s, w) = gauss_legendre(n);
    let mut acc = 0.0;
    for (&si, &wi) in s.iter().zip(&w) {
        let s01 = 0.5 * (si + 1.0);
        let w01 = 0.5 * wi;
        let u = s01 / (1.0 - s01);
        let du = 1.0 / ((1.0 - s01) * (1.0 - s01));
        let y = u * u;
        let dy = 2.0 * u * du;
        acc += f(y) * dy * w01;
    }
    acc
}

/// Nodes and weights for `int_0^kmax f(k) dk` using the tangent map
/// `k = scale * tan(pi u / 2)` truncated at `kmax`, Gauss-Legendre in `u`.
pub fn tan_map_nodes(n: usize, scale: f64, kmax: f64) -> (Vec<f64>, Vec<f64>) {
    let u_max = (kmax / scale).atan() * 2.0 / std::f64::consts::PI;
    let (u, wu) = gauss_legendre_ab(n, 0.0, u_max);
    let mut k = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    let half_pi = 0.5 * std::f64::consts::PI;
    for (&ui, &wi) in u.iter().zip(&wu) {
        let t = (half_pi * ui).tan();
        k.push(scale * t);
        w.push(wi * scale * half_pi * (1.0 + t * t));
    }
    (k, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn legendre_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre_ab(8, 0.0, 1.0);
        // degree 15 is exact for 8 nodes
        let val: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * xi.powi(15)).sum();
        assert_abs_diff_eq!(val, 1.0 / 16.0, epsilon = 1e-14);
        let val3: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * xi.powi(3)).sum();
        assert_abs_diff_eq!(val3, 0.25, epsilon = 1e-14);
    }

    #[test]
    fn legendre_weights_sum_to_interval() {
        for n in [1, 2, 5, 16, 64, 257] {
            let (_, w) = gauss_legendre(n);
            let s: f64 = w.iter().sum();
            assert_abs_diff_eq!(s, 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn laguerre_integrates_against_exponential() {
        let (x, w) = gauss_laguerre(16);
        // int_0^inf x^2 e^-x = 2
        let v: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * xi * xi).sum();
        assert_abs_diff_eq!(v, 2.0, epsilon = 1e-10);
        // int_0^inf sin(x) e^-x = 1/2
        let v2: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * xi.sin()).sum();
        assert_abs_diff_eq!(v2, 0.5, epsilon = 1e-8);
    }

    #[test]
    fn zero_inf_gaussian_tail() {
        // int_0^inf e^{-y} dy = 1, integrand has no endpoint singularity
        let (v, _, _) = integrate_zero_inf(|y| (-y).exp(), 1e-10, 8, 4096).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-9);
        // 1/sqrt(y) singularity: int_0^inf e^{-y}/sqrt(y) = sqrt(pi)
        let (v2, _, _) =
            integrate_zero_inf(|y| (-y).exp() / y.sqrt(), 1e-10, 8, 4096).unwrap();
        assert_abs_diff_eq!(v2, std::f64::consts::PI.sqrt(), epsilon = 1e-9);
    }

    #[test]
    fn tan_map_covers_decaying_integrand() {
        let (k, w) = tan_map_nodes(24, 1.0, 40.0);
        // int_0^inf e^{-k} dk = 1 (truncation error e^-40)
        let v: f64 = k.iter().zip(&w).map(|(&ki, &wi)| wi * (-ki).exp()).sum();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-6);
    }
}
