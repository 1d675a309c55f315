//! Independent numerical oracle: fixed-step RK4 integration of the full
//! 14-dimensional extremal system (7 base + 7 fiber coordinates), used to
//! validate every closed form.

use crate::error::{Error, Result};
use crate::geodesic::GeodesicParams;
use crate::group::GroupElement;
use crate::quaternion::Quaternion;

/// State of the extremal system: base point `(a2, a3, a4, b1..b4)` and
/// fiber covector `(h1..h7)`. Along the exact flow the Hamiltonian
/// `K = (h1^2+..+h4^2)/2` and the vertical components `h5, h6, h7` are
/// constant.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PmpState {
    pub base: [f64; 7],
    pub fiber: [f64; 7],
}

impl PmpState {
    /// Origin state with fiber initialized from the covector data.
    pub fn initial(h0: [f64; 4], c567: [f64; 3]) -> Self {
        Self {
            base: [0.0; 7],
            fiber: [h0[0], h0[1], h0[2], h0[3], c567[0], c567[1], c567[2]],
        }
    }

    pub fn group_element(&self) -> GroupElement {
        GroupElement::from_coords(self.base)
    }

    pub fn horizontal_covector(&self) -> [f64; 4] {
        [self.fiber[0], self.fiber[1], self.fiber[2], self.fiber[3]]
    }

    /// The Hamiltonian `K = (h1^2 + .. + h4^2) / 2`.
    pub fn hamiltonian(&self) -> f64 {
        0.5 * self.fiber[..4].iter().map(|x| x * x).sum::<f64>()
    }

    fn axpy(&self, scale: f64, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..7 {
            out.base[i] += scale * other.base[i];
            out.fiber[i] += scale * other.fiber[i];
        }
        out
    }
}

/// Right-hand side of the extremal system:
/// `b' = h`, `a' = Im(conj(h) b)`, `h' = h (h5 I + h6 J + h7 K)` on the
/// horizontal fiber block, `h5' = h6' = h7' = 0`.
pub fn rhs(s: &PmpState) -> PmpState {
    let h = Quaternion::from_array(s.horizontal_covector());
    let b = Quaternion::new(s.base[3], s.base[4], s.base[5], s.base[6]);
    let gamma = Quaternion::from_imag([s.fiber[4], s.fiber[5], s.fiber[6]]);

    let db = h;
    let da = (h.conj() * b).imag();
    let dh = h * gamma;

    PmpState {
        base: [
            da[0], da[1], da[2],
            db.q1, db.q2, db.q3, db.q4,
        ],
        fiber: [dh.q1, dh.q2, dh.q3, dh.q4, 0.0, 0.0, 0.0],
    }
}

/// A time-sampled integration result.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<PmpState>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last(&self) -> (&f64, &PmpState) {
        (
            self.times.last().expect("nonempty"),
            self.states.last().expect("nonempty"),
        )
    }

    /// Rows in the geodesic table schema
    /// `t, b1..b4, a2..a4, h1..h4, |b|^2`.
    pub fn to_table(&self) -> crate::io::Table {
        let mut table = crate::io::Table::new(&[
            "t", "b1", "b2", "b3", "b4", "a2", "a3", "a4", "h1", "h2", "h3", "h4", "b_sq",
        ]);
        for (t, state) in self.times.iter().zip(&self.states) {
            let b = &state.base[3..7];
            let a = &state.base[0..3];
            let h = state.horizontal_covector();
            let b_sq: f64 = b.iter().map(|x| x * x).sum();
            table.push(vec![
                *t, b[0], b[1], b[2], b[3], a[0], a[1], a[2], h[0], h[1], h[2], h[3], b_sq,
            ]);
        }
        table
    }
}

fn rk4_step(state: &PmpState, dt: f64) -> PmpState {
    let k1 = rhs(state);
    let k2 = rhs(&state.axpy(0.5 * dt, &k1));
    let k3 = rhs(&state.axpy(0.5 * dt, &k2));
    let k4 = rhs(&state.axpy(dt, &k3));
    let mut out = state.axpy(dt / 6.0, &k1);
    out = out.axpy(dt / 3.0, &k2);
    out = out.axpy(dt / 3.0, &k3);
    out.axpy(dt / 6.0, &k4)
}

/// Classical fixed-step RK4 from the origin over `[0, t_final]`; returns
/// `steps + 1` rows (a single row for `t_final = 0`).
pub fn integrate(h0: [f64; 4], c567: [f64; 3], t_final: f64, steps: usize) -> Result<Trajectory> {
    if !t_final.is_finite() || t_final < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "integration time must be finite and nonnegative, got {t_final}"
        )));
    }
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }

    let start = PmpState::initial(h0, c567);
    if t_final == 0.0 {
        return Ok(Trajectory {
            times: vec![0.0],
            states: vec![start],
        });
    }

    let dt = t_final / steps as f64;
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    times.push(0.0);
    states.push(start);
    let mut state = start;
    for k in 1..=steps {
        state = rk4_step(&state, dt);
        times.push(k as f64 * dt);
        states.push(state);
    }
    Ok(Trajectory { times, states })
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Maximum deviation over the sampled trajectory between the RK4
/// integration and the closed forms (all 7 base coordinates and the 4
/// horizontal fiber coordinates).
pub fn max_deviation(gp: &GeodesicParams, t_final: f64, steps: usize) -> Result<f64> {
    let trajectory = integrate(gp.h0(), gp.c567(), t_final, steps)?;
    let mut worst = 0.0f64;
    for (t, state) in trajectory.times.iter().zip(&trajectory.states) {
        worst = worst.max(max_abs_diff(&state.base, &gp.point(*t).coords()));
        worst = worst.max(max_abs_diff(&state.fiber[..4], &gp.vertical(*t)));
    }
    Ok(worst)
}
