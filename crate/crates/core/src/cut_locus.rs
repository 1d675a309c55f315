//! Maxwell time and point, the quotient exponential-map Jacobian, its
//! factorization, root isolation, first conjugate time and cut time.
//!
//! In the rescaled time `tau = C t` the Jacobian of the quotient
//! exponential map factors as
//!
//! ```text
//! J(tau) = -4 (tau - sin tau)^2 (tau sin tau + 2 cos tau - 2)
//! ```
//!
//! whose first positive zero is `tau = 2 pi`. Maxwell time, first
//! conjugate time and cut time all coincide at `T = 2 pi / C`.

use crate::error::{Error, Result};
use crate::geodesic::GeodesicParams;
use crate::group::GroupElement;
use crate::quaternion::Quaternion;
use std::f64::consts::PI;

/// Default lower cutoff excluding the `tau = 0` root from the search.
pub const DEFAULT_TAU_MIN: f64 = 1e-3;

/// First time at which the pure-d rotation orbit of the geodesic
/// refocuses: `T = 2 pi / C`.
pub fn maxwell_time(gp: &GeodesicParams) -> Result<f64> {
    gp.period().ok_or(Error::Degenerate)
}

/// The common point of the orbit at the Maxwell time: `b = 0`,
/// `a = -(2 pi D / C^3)(C5, C6, C7)`.
pub fn maxwell_point(gp: &GeodesicParams) -> Result<GroupElement> {
    if gp.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let c = gp.frequency();
    let factor = -2.0 * PI * gp.speed_sq() / (c * c * c);
    let [c5, c6, c7] = gp.c567();
    Ok(GroupElement::new(
        Quaternion::ZERO,
        [factor * c5, factor * c6, factor * c7],
    ))
}

/// Cut time of the geodesic; coincides with the Maxwell time and the
/// first conjugate time, `2 pi / C`. Degenerate (straight-line) geodesics
/// have no cut time.
pub fn cut_time(gp: &GeodesicParams) -> Result<f64> {
    maxwell_time(gp)
}

/// The inner factor `f(tau) = tau sin tau + 2 cos tau - 2` of the
/// factored Jacobian. Even; vanishes at `tau = 2 k pi` and once more
/// between consecutive even multiples; `f((2k+1) pi) = -4`.
pub fn jacobian_inner_factor(tau: f64) -> f64 {
    tau * tau.sin() + 2.0 * tau.cos() - 2.0
}

/// The Jacobian in factored form,
/// `-4 (tau - sin tau)^2 (tau sin tau + 2 cos tau - 2)`.
pub fn jacobian_factored(tau: f64) -> f64 {
    let r = tau - tau.sin();
    -4.0 * r * r * jacobian_inner_factor(tau)
}

/// The Jacobian expanded into its eleven trigonometric monomials; agrees
/// with [`jacobian_factored`] identically.
pub fn jacobian_expanded(tau: f64) -> f64 {
    let (s, c) = tau.sin_cos();
    let t2 = tau * tau;
    -4.0 * t2 * tau * s - 8.0 * t2 * c * c + 4.0 * tau * c * c * s - 8.0 * t2 * c
        + 16.0 * tau * c * s
        + 16.0 * t2
        + 8.0 * c * c * c
        - 20.0 * tau * s
        - 8.0 * c * c
        - 8.0 * c
        + 8.0
}

/// An isolated root of the inner factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootReport {
    /// Bracketing interval at the end of the search.
    pub interval: (f64, f64),
    pub root: f64,
    /// `f(root)`.
    pub residual: f64,
    /// 1 for a transversal sign change (estimated from a finite-difference
    /// derivative), larger when the crossing looks degenerate.
    pub multiplicity_hint: u32,
}

/// Isolate the smallest zero of the Jacobian above [`DEFAULT_TAU_MIN`].
///
/// Works on the inner factor `f`, which crosses zero transversally at
/// `2 pi` (`f'(2 pi) = 2 pi`), rather than on `J` itself whose zeros at
/// even multiples of pi sit against the squared factor and need not
/// produce a usable sign change.
pub fn first_conjugate_tau(tolerance: f64) -> Result<RootReport> {
    first_conjugate_tau_from(DEFAULT_TAU_MIN, tolerance)
}

/// Same as [`first_conjugate_tau`] with a configurable lower cutoff.
pub fn first_conjugate_tau_from(tau_min: f64, tolerance: f64) -> Result<RootReport> {
    if tolerance <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    if tau_min <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tau_min must be positive, got {tau_min}"
        )));
    }

    // walk a coarse grid until f changes sign
    let step = 1e-2;
    let mut lo = tau_min;
    let mut f_lo = jacobian_inner_factor(lo);
    let (mut hi, mut f_hi);
    loop {
        hi = lo + step;
        f_hi = jacobian_inner_factor(hi);
        if f_lo == 0.0 {
            // landed on the root exactly
            return Ok(RootReport {
                interval: (lo, lo),
                root: lo,
                residual: 0.0,
                multiplicity_hint: 1,
            });
        }
        if f_lo.signum() != f_hi.signum() {
            break;
        }
        lo = hi;
        f_lo = f_hi;
        if lo > 1e3 {
            return Err(Error::InvalidArgument(
                "no sign change found below tau = 1000".into(),
            ));
        }
    }
    let bracket = (lo, hi);

    // bisect down to the tolerance, then one secant polish
    while hi - lo > tolerance * 1e-2 {
        let mid = 0.5 * (lo + hi);
        let f_mid = jacobian_inner_factor(mid);
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    let mut root = if f_hi != f_lo {
        lo - f_lo * (hi - lo) / (f_hi - f_lo)
    } else {
        0.5 * (lo + hi)
    };
    if !(lo..=hi).contains(&root) {
        root = 0.5 * (lo + hi);
    }

    let h = 1e-6;
    let derivative =
        (jacobian_inner_factor(root + h) - jacobian_inner_factor(root - h)) / (2.0 * h);
    Ok(RootReport {
        interval: bracket,
        root,
        residual: jacobian_inner_factor(root),
        multiplicity_hint: if derivative.abs() > 1e-3 { 1 } else { 2 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::reference_params;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_params(rng: &mut impl Rng) -> GeodesicParams {
        let h: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.5..1.5));
        let mut c: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.5..1.5));
        if c.iter().map(|x| x * x).sum::<f64>() < 0.01 {
            c[1] -= 1.0;
        }
        GeodesicParams::from_covector(h, c)
    }

    #[test]
    fn maxwell_time_values() {
        assert_abs_diff_eq!(maxwell_time(&reference_params()).unwrap(), 2.0 * PI);
        let gp = GeodesicParams::from_covector([1.0, 0.0, 0.0, 0.0], [0.0, 2.0, 0.0]);
        assert_abs_diff_eq!(maxwell_time(&gp).unwrap(), PI);
        let degenerate = GeodesicParams::from_covector([1.0, 0.0, 0.0, 0.0], [0.0; 3]);
        assert!(maxwell_time(&degenerate).is_err());
    }

    #[test]
    fn horizontal_block_vanishes_at_maxwell_time() {
        let mut rng = ChaCha8Rng::seed_from_u64(179);
        for _ in 0..200 {
            let gp = random_params(&mut rng);
            let t = maxwell_time(&gp).unwrap();
            assert!(gp.point(t).b.norm() < 1e-12 * (1.0 + gp.speed_sq()));
        }
    }

    #[test]
    fn maxwell_point_values() {
        let p = maxwell_point(&reference_params()).unwrap();
        assert_abs_diff_eq!(
            p.coords()[..],
            [-2.0 * PI, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0][..],
            epsilon = 1e-14
        );

        let gp = GeodesicParams::from_covector([1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 1.0]);
        let p = maxwell_point(&gp).unwrap();
        assert_abs_diff_eq!(p.a[..], [0.0, 0.0, -2.0 * PI][..], epsilon = 1e-14);
    }

    #[test]
    fn maxwell_point_matches_the_curve() {
        let mut rng = ChaCha8Rng::seed_from_u64(181);
        for _ in 0..200 {
            let gp = random_params(&mut rng);
            let formula = maxwell_point(&gp).unwrap().coords();
            let curve = gp.point(maxwell_time(&gp).unwrap()).coords();
            for i in 0..7 {
                assert!((formula[i] - curve[i]).abs() < 1e-11 * (1.0 + formula[i].abs()));
            }
        }
    }

    #[test]
    fn jacobian_pinned_values() {
        assert!(jacobian_factored(2.0 * PI).abs() < 1e-12);
        assert!(jacobian_expanded(0.0).abs() < 1e-14);
        assert!(jacobian_factored(0.0).abs() < 1e-14);
        assert!(jacobian_inner_factor(0.0).abs() < 1e-14);

        assert_abs_diff_eq!(jacobian_inner_factor(PI), -4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(jacobian_inner_factor(3.0 * PI), -4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(jacobian_factored(PI), 16.0 * PI * PI, epsilon = 1e-12);
        assert_abs_diff_eq!(jacobian_expanded(PI), 16.0 * PI * PI, epsilon = 1e-12);
    }

    #[test]
    fn expanded_and_factored_forms_agree() {
        let mut tau = 0.0;
        while tau <= 20.0 {
            let delta = (jacobian_expanded(tau) - jacobian_factored(tau)).abs();
            assert!(
                delta < 1e-9 * (1.0 + tau.powi(4)),
                "forms disagree at tau = {tau}: {delta}"
            );
            tau += 1e-3;
        }
    }

    #[test]
    fn jacobian_is_positive_before_the_first_zero() {
        let mut tau = 0.05;
        while tau < 2.0 * PI - 0.05 {
            assert!(jacobian_factored(tau) > 0.0, "J({tau}) <= 0");
            tau += 0.01;
        }
    }

    #[test]
    fn inner_factor_is_even_and_negative_up_to_two_pi() {
        let mut rng = ChaCha8Rng::seed_from_u64(191);
        for _ in 0..200 {
            let tau = rng.gen_range(0.0..20.0);
            assert_eq!(jacobian_inner_factor(tau), jacobian_inner_factor(-tau));
        }
        // no sign change in (pi, 2 pi); f stays negative
        let mut tau = PI;
        while tau < 2.0 * PI - 1e-3 {
            assert!(jacobian_inner_factor(tau) < 0.0);
            tau += 1e-3;
        }
    }

    #[test]
    fn first_conjugate_root_is_two_pi() {
        let report = first_conjugate_tau(1e-10).unwrap();
        assert!((report.root - 2.0 * PI).abs() < 1e-10, "root = {}", report.root);
        assert!(report.residual.abs() < 1e-9);
        assert_eq!(report.multiplicity_hint, 1);
        assert!(report.interval.0 < report.root && report.root < report.interval.1);

        // transversality: finite-difference derivative near 2 pi
        let h = 1e-6;
        let d = (jacobian_inner_factor(2.0 * PI + h) - jacobian_inner_factor(2.0 * PI - h)) / (2.0 * h);
        assert_abs_diff_eq!(d, 2.0 * PI, epsilon = 1e-5);
    }

    #[test]
    fn first_conjugate_rejects_bad_tolerance() {
        assert!(first_conjugate_tau(0.0).is_err());
        assert!(first_conjugate_tau(-1.0).is_err());
        assert!(first_conjugate_tau_from(0.0, 1e-8).is_err());
    }

    #[test]
    fn zero_set_structure_on_the_sampled_range() {
        // All roots of f (hence of J besides tau = 0) in (0, 20]: the even
        // multiples of pi and one root between each extremum tau = tan(tau)
        // and the following odd multiple of pi. Expected values frozen from
        // an independent high-precision bracketing solve.
        let bisect = |g: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64| -> f64 {
            let mut g_lo = g(lo);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let g_mid = g(mid);
                if g_mid == 0.0 {
                    return mid;
                }
                if g_mid.signum() == g_lo.signum() {
                    lo = mid;
                    g_lo = g_mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };

        let mut roots = Vec::new();
        let step = 1e-3;
        let mut tau = 1e-3;
        let mut prev = jacobian_inner_factor(tau);
        while tau < 20.0 {
            let next_tau = tau + step;
            let next = jacobian_inner_factor(next_tau);
            if prev == 0.0 {
                roots.push(tau);
            } else if prev.signum() != next.signum() {
                roots.push(bisect(&jacobian_inner_factor, tau, next_tau));
            }
            tau = next_tau;
            prev = next;
        }

        let expected = [
            2.0 * PI,
            8.986818915818, // in (tau_2^E, 3 pi)
            4.0 * PI,
            15.450503673875, // in (tau_4^E, 5 pi)
            6.0 * PI,
        ];
        assert_eq!(roots.len(), expected.len(), "roots: {roots:?}");
        for (root, want) in roots.iter().zip(expected) {
            assert!((root - want).abs() < 1e-6, "{root} vs {want}");
        }
        assert!((roots[0] - 2.0 * PI).abs() < 1e-9, "2 pi is the smallest root");

        // the proof's interval bounds: each extra root sits strictly between
        // the extremum solving tau = tan(tau) and the next odd multiple of pi
        let derivative = |t: f64| t * t.cos() - t.sin();
        for (k, &root) in [(1usize, &roots[1]), (2, &roots[3])] {
            let lo = 2.0 * k as f64 * PI + 1e-6;
            let hi = (2.0 * k as f64 + 0.5) * PI - 1e-6;
            let extremum = bisect(&derivative, lo, hi);
            let odd_pi = (2 * k + 1) as f64 * PI;
            assert!(extremum < root && root < odd_pi, "root {root} outside ({extremum}, {odd_pi})");
        }
    }

    #[test]
    fn cut_time_values_and_composition() {
        assert_abs_diff_eq!(cut_time(&reference_params()).unwrap(), 2.0 * PI);
        let gp = GeodesicParams::from_covector([1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 4.0]);
        assert_abs_diff_eq!(cut_time(&gp).unwrap(), PI / 2.0);

        let mut rng = ChaCha8Rng::seed_from_u64(193);
        let tau_root = first_conjugate_tau(1e-12).unwrap().root;
        for _ in 0..100 {
            let gp = random_params(&mut rng);
            let ct = cut_time(&gp).unwrap();
            assert_eq!(ct, maxwell_time(&gp).unwrap());
            assert!((ct - tau_root / gp.frequency()).abs() < 1e-10 * (1.0 + ct));
        }

        let degenerate = GeodesicParams::from_covector([1.0, 0.0, 0.0, 0.0], [0.0; 3]);
        assert!(matches!(cut_time(&degenerate), Err(Error::Degenerate)));
    }

    #[test]
    fn distinct_rotations_stay_distinct_before_the_cut_time() {
        // before t = 2 pi / C two distinct pure-d images differ by exactly
        // |d1 - d2| |b(t)|, which is positive while sin(Ct/2) != 0
        let mut rng = ChaCha8Rng::seed_from_u64(197);
        for _ in 0..50 {
            let gp = random_params(&mut rng);
            let t = rng.gen_range(0.05..0.95) * gp.period().unwrap();
            let d1 = {
                let q: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0f64..1.0));
                let q = Quaternion::from_array(q);
                q.scale(1.0 / q.norm().max(1e-2))
            };
            let d1 = d1.scale(1.0 / d1.norm());
            let d2 = Quaternion::ONE;
            let r1 = crate::symmetry::RotationPair::from_d(d1).unwrap();
            let g1 = crate::symmetry::act_geodesic(r1, &gp).unwrap().point(t);
            let g2 = gp.point(t);
            let dist = (g1.b - g2.b).norm();
            let expected = (d1 - d2).norm() * g2.b.norm();
            assert!((dist - expected).abs() < 1e-12 * (1.0 + expected));
            if (d1 - d2).norm() > 1e-3 {
                assert!(dist > 0.0);
            }
            // vertical parts agree exactly
            assert_eq!(g1.a, g2.a);
        }
    }
}
