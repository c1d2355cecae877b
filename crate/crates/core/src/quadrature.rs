//! One-dimensional Gauss rules used by the sphere and radial quadratures.

use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, exact for polynomials of
/// degree `2n - 1`. Nodes are returned in increasing order.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "Gauss-Legendre rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
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

/// Gauss rule for the weight `sqrt(1 - t^2)` on `[-1, 1]` (Chebyshev of the
/// second kind), exact for polynomials of degree `2n - 1`.
pub fn gauss_chebyshev_second(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "Gauss-Chebyshev rule needs at least one node");
    let step = PI / (n as f64 + 1.0);
    (1..=n)
        .rev()
        .map(|i| {
            let a = i as f64 * step;
            (a.cos(), step * a.sin().powi(2))
        })
        .unzip()
}

/// Maps a rule on `[-1, 1]` onto `[a, b]`.
pub fn map_to_interval(nodes: &[f64], weights: &[f64], a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    nodes
        .iter()
        .zip(weights)
        .map(|(&x, &w)| (mid + half * x, half * w))
        .unzip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_integrates_monomials_exactly() {
        for n in 1..=24 {
            let (x, w) = gauss_legendre(n);
            for p in 0..(2 * n) {
                let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(p as i32)).sum();
                let exact = if p % 2 == 1 { 0.0 } else { 2.0 / (p as f64 + 1.0) };
                assert!((got - exact).abs() < 1e-13, "n={n} p={p}: {got} vs {exact}");
            }
        }
    }

    #[test]
    fn legendre_nodes_are_sorted_and_symmetric() {
        let (x, w) = gauss_legendre(7);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
        for i in 0..7 {
            assert!((x[i] + x[6 - i]).abs() < 1e-15);
            assert!((w[i] - w[6 - i]).abs() < 1e-15);
        }
    }

    #[test]
    fn chebyshev_second_kind_moments() {
        // int_{-1}^{1} t^{2m} sqrt(1-t^2) dt = pi (2m)! / (2^{2m} m! (m+1)!) / 2 ... via recursion
        // I_0 = pi/2, I_{2m} = I_{2m-2} * (2m-1)/(2m+2).
        let (x, w) = gauss_chebyshev_second(6);
        let mut exact = PI / 2.0;
        for m in 0..6 {
            let p = 2 * m;
            if m > 0 {
                exact *= (2.0 * m as f64 - 1.0) / (2.0 * m as f64 + 2.0);
            }
            let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(p)).sum();
            assert!((got - exact).abs() < 1e-14, "p={p}");
        }
    }
}
