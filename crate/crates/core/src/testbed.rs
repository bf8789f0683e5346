//! The seven benchmark objectives with their search boxes and known optima.

use std::f64::consts::PI;

use crate::domain::SearchBox;
use crate::error::{Error, Result};
use crate::objective::Objective;

/// Smallest and largest valid function id.
pub const IDS: std::ops::RangeInclusive<u8> = 1..=7;

/// One benchmark objective.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    id: u8,
    name: &'static str,
    dimension: usize,
    default_box: SearchBox,
    minimizers: Vec<Vec<f64>>,
    minimum: f64,
    smoothness: &'static str,
}

impl TestFunction {
    pub fn id(&self) -> u8 {
        self.id
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn default_box(&self) -> &SearchBox {
        &self.default_box
    }

    /// Known global minimizer(s).
    pub fn minimizers(&self) -> &[Vec<f64>] {
        &self.minimizers
    }

    pub fn minimum(&self) -> f64 {
        self.minimum
    }

    pub fn smoothness(&self) -> &'static str {
        self.smoothness
    }

    /// Whether the formula is defined at `x` (functions 2, 6 and 7 have
    /// restricted domains).
    pub fn in_domain(&self, x: &[f64]) -> bool {
        x.len() == self.dimension
            && match self.id {
                2 => x[0] != 0.0,
                6 => x.iter().all(|&v| v > 2.0 && v < 10.0),
                7 => self.default_box.contains(x),
                _ => true,
            }
    }
}

impl Objective for TestFunction {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn evaluate(&self, x: &[f64]) -> Result<f64> {
        evaluate(self.id, x)
    }

    fn is_feasible(&self, x: &[f64]) -> bool {
        self.in_domain(x)
    }
}

fn dimension_of(id: u8) -> Result<usize> {
    Ok(match id {
        1 | 5 | 7 => 2,
        2 => 3,
        3 | 4 => 4,
        6 => 10,
        _ => return Err(Error::invalid(format!("unknown test function {id}"))),
    })
}

/// Evaluates test function `id` at `x`.
pub fn evaluate(id: u8, x: &[f64]) -> Result<f64> {
    let dim = dimension_of(id)?;
    if x.len() != dim {
        return Err(Error::invalid(format!(
            "function {id} takes {dim} arguments, got {}",
            x.len()
        )));
    }
    match id {
        1 => Ok(rosenbrock(x)),
        2 => fletcher_powell(x),
        3 => Ok(powell(x)),
        4 => Ok(wood(x)),
        5 => Ok(x[0] * x[0] + x[1] * x[1] - (18.0 * x[0]).cos() - (18.0 * x[1]).cos()),
        6 => himmelblau10(x),
        7 => drive_design(x),
        _ => unreachable!(),
    }
}

fn rosenbrock(x: &[f64]) -> f64 {
    100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2)
}

// Helical valley with theta scaled by 1/pi (not the textbook 1/(2 pi)).
// Undefined on the plane x1 = 0.
fn fletcher_powell(x: &[f64]) -> Result<f64> {
    let (x1, x2, x3) = (x[0], x[1], x[2]);
    let theta = if x1 > 0.0 {
        (x2 / x1).atan() / PI
    } else if x1 < 0.0 {
        1.0 + (x2 / x1).atan() / PI
    } else {
        return Err(Error::domain("Fletcher-Powell theta is undefined at x1 = 0"));
    };
    let radius = x1.hypot(x2);
    Ok(100.0 * ((x3 - 5.0 * theta).powi(2) + (radius - 1.0).powi(2)) + x3 * x3)
}

fn powell(x: &[f64]) -> f64 {
    (x[0] + 10.0 * x[1]).powi(2)
        + 5.0 * (x[2] - x[3]).powi(2)
        + (x[1] - 2.0 * x[2]).powi(4)
        + 10.0 * (x[0] - x[3]).powi(4)
}

fn wood(x: &[f64]) -> f64 {
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    100.0 * (x2 - x1 * x1).powi(2)
        + (1.0 - x1).powi(2)
        + 90.0 * (x4 - x3 * x3).powi(2)
        + (1.0 - x3).powi(2)
        + 10.1 * ((x2 - 1.0).powi(2) + (x4 - 1.0).powi(2))
        + 19.8 * (x2 - 1.0) * (x4 - 1.0)
}

fn himmelblau10(x: &[f64]) -> Result<f64> {
    if let Some(v) = x.iter().find(|&&v| !(v > 2.0 && v < 10.0)) {
        return Err(Error::domain(format!("Himmelblau logs need 2 < x < 10, got {v}")));
    }
    let logs: f64 = x
        .iter()
        .map(|&v| (v - 2.0).ln().powi(2) + (10.0 - v).ln().powi(2))
        .sum();
    let product: f64 = x.iter().product();
    Ok(logs - product.powf(0.2))
}

// Drive-design objective, read as
//   (1 + x1) / (x1 x2^2) * (25 (1 + x1) + 0.5 sqrt(S))^2
// with the square on the bracket only. This reading gives 27845.37 at
// (1.49955, 6.12384) and 27845.02 at (1.50398, 6.14608); squaring the whole
// product or only the first term does not come near those values.
fn drive_design(x: &[f64]) -> Result<f64> {
    let (x1, x2) = (x[0], x[1]);
    if !((0.1..=5.0).contains(&x1) && (0.1..=10.0).contains(&x2)) {
        return Err(Error::domain(format!(
            "drive-design function needs 0.1 <= x1 <= 5, 0.1 <= x2 <= 10, got ({x1}, {x2})"
        )));
    }
    let x2sq = x2 * x2;
    let s =
        0.133e7 + 40931.68 * x1 * x1 + 999.44 * x2sq * x2sq - 32613.30 * x2sq + 12543.58 * x1 * x2sq - 122795.04 * x1;
    if s < 0.0 {
        return Err(Error::domain("negative radicand in drive-design function"));
    }
    Ok((1.0 + x1) / (x1 * x2sq) * (25.0 * (1.0 + x1) + 0.5 * s.sqrt()).powi(2))
}

/// Stationary point of the symmetric Himmelblau objective on the diagonal.
const HIMMELBLAU_X: f64 = 9.350_265_833_069_385;
const HIMMELBLAU_F: f64 = -45.778_469_707_446_27;

/// Test function `id` (1..=7).
pub fn function(id: u8) -> Result<TestFunction> {
    let dimension = dimension_of(id)?;
    let cube = |a: f64, b: f64| SearchBox::cube(a, b, dimension).expect("valid box");
    let boxed = |lo: Vec<f64>, hi: Vec<f64>| SearchBox::new(lo, hi).expect("valid box");
    let (name, default_box, minimizers, minimum, smoothness) = match id {
        1 => (
            "Rosenbrock",
            cube(-2.0, 2.0),
            vec![vec![1.0, 1.0]],
            0.0,
            "smooth, curved parabolic valley",
        ),
        2 => (
            "Fletcher-Powell",
            boxed(vec![-1.0, 0.0, 0.0], vec![1.0, 2.0, 2.0]),
            vec![vec![1.0, 0.0, 0.0]],
            0.0,
            "helical valley; first partials piecewise continuous, undefined at x1 = 0",
        ),
        3 => (
            "Powell",
            cube(-1.0, 2.0),
            vec![vec![0.0; 4]],
            0.0,
            "smooth; singular Hessian at the minimum",
        ),
        4 => (
            "Wood",
            cube(0.0, 3.0),
            vec![vec![1.0; 4]],
            0.0,
            "smooth, has non-global stationary points",
        ),
        5 => (
            "Cosine-perturbed sphere",
            boxed(vec![-3.0, -1.0], vec![1.0, 3.0]),
            vec![vec![0.0, 0.0]],
            -2.0,
            "smooth, highly multimodal",
        ),
        6 => (
            "Himmelblau (10 variables)",
            cube(2.002, 9.998),
            vec![vec![HIMMELBLAU_X; 10]],
            HIMMELBLAU_F,
            "smooth on the open domain 2 < x_i < 10, undefined outside",
        ),
        7 => (
            "Drive design",
            boxed(vec![0.1, 0.1], vec![5.0, 10.0]),
            vec![vec![1.499_702_429_042_025_3, 6.140_217_169_082_264]],
            27_844.902_583_569_58,
            "smooth inside its box, undefined outside",
        ),
        _ => unreachable!(),
    };
    Ok(TestFunction {
        id,
        name,
        dimension,
        default_box,
        minimizers,
        minimum,
        smoothness,
    })
}

/// All seven functions, ordered by id.
pub fn suite() -> Vec<TestFunction> {
    IDS.map(|id| function(id).expect("valid id")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(evaluate(1, &[1.0, 1.0]).unwrap(), 0.0);
        assert_eq!(evaluate(1, &[0.0, 0.0]).unwrap(), 1.0);
        assert_eq!(evaluate(2, &[1.0, 0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(evaluate(3, &[0.0; 4]).unwrap(), 0.0);
        assert_eq!(evaluate(4, &[1.0; 4]).unwrap(), 0.0);
        assert_eq!(evaluate(5, &[0.0, 0.0]).unwrap(), -2.0);
        assert!((evaluate(6, &[9.351; 10]).unwrap() - (-45.778)).abs() < 1e-3);
    }

    #[test]
    fn known_minima_evaluate_to_known_values() {
        for f in suite() {
            let tol = if f.id() == 7 { 1e-2 } else { 1e-6 };
            for x in f.minimizers() {
                let v = f.evaluate(x).unwrap();
                assert!((v - f.minimum()).abs() < tol, "function {}: {v}", f.id());
            }
        }
    }

    #[test]
    fn drive_design_anchor_points() {
        let a = evaluate(7, &[1.49955, 6.12384]).unwrap();
        let b = evaluate(7, &[1.50398, 6.14608]).unwrap();
        assert!((a - 27845.37).abs() < 5e-3, "{a}");
        assert!((b - 27845.02).abs() < 5e-3, "{b}");
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(evaluate(2, &[0.0, 1.0, 0.0]), Err(Error::Domain(_))));
        assert!(matches!(
            evaluate(6, &[[5.0; 9].as_slice(), &[2.0]].concat()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(evaluate(6, &[10.0; 10]), Err(Error::Domain(_))));
        assert!(evaluate(6, &[2.001; 10]).is_ok());
        assert!(matches!(evaluate(7, &[0.0, 5.0]), Err(Error::Domain(_))));
        assert!(matches!(evaluate(7, &[-1.0, 5.0]), Err(Error::Domain(_))));
        assert!(matches!(evaluate(7, &[1.0, 10.5]), Err(Error::Domain(_))));
        assert!(evaluate(7, &[0.1, 0.1]).is_ok());
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(evaluate(0, &[]), Err(Error::InvalidArgument(_))));
        assert!(matches!(evaluate(8, &[1.0, 1.0]), Err(Error::InvalidArgument(_))));
        assert!(matches!(evaluate(1, &[1.0]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn suite_metadata() {
        let s = suite();
        assert_eq!(s.len(), 7);
        assert_eq!(s[0].dimension(), 2);
        assert_eq!(s[4].minimum(), -2.0);
        assert_eq!(s[6].default_box().lower(), &[0.1, 0.1]);
        assert_eq!(s[6].default_box().upper(), &[5.0, 10.0]);
        assert_eq!(s[1].default_box().lower(), &[-1.0, 0.0, 0.0]);
        assert_eq!(s[1].default_box().upper(), &[1.0, 2.0, 2.0]);
        assert_eq!(s[2].default_box(), &SearchBox::cube(-1.0, 2.0, 4).unwrap());
        assert_eq!(s[3].default_box(), &SearchBox::cube(0.0, 3.0, 4).unwrap());
        assert_eq!(s[4].default_box().lower(), &[-3.0, -1.0]);
        assert_eq!(s[4].default_box().upper(), &[1.0, 3.0]);
        assert_eq!(s[5].default_box(), &SearchBox::cube(2.002, 9.998, 10).unwrap());
        for (k, f) in s.iter().enumerate() {
            assert_eq!(f.id() as usize, k + 1);
            assert_eq!(f.default_box().dimension(), f.dimension());
            assert!(!f.name().is_empty() && !f.smoothness().is_empty());
        }
    }

    #[test]
    fn fletcher_powell_branches_are_finite_near_the_seam() {
        for &x2 in &[0.1, 0.5, 1.0] {
            for &eps in &[1e-3, 1e-6, 1e-9] {
                let right = evaluate(2, &[eps, x2, 0.3]).unwrap();
                let left = evaluate(2, &[-eps, x2, 0.3]).unwrap();
                assert!(right.is_finite() && left.is_finite());
                // For x2 > 0 both branches tend to theta = 1/2 at the seam, and
                // theta differs between the sides by O(eps / x2).
                assert!((right - left).abs() < 5e3 * eps / x2, "{left} vs {right}");
            }
            assert!(matches!(evaluate(2, &[0.0, x2, 0.3]), Err(Error::Domain(_))));
        }
    }

    /// Strict local minima of `f` on an `n x n` grid over `[lo, hi]^2`,
    /// comparing each interior node with its eight neighbours.
    fn grid_local_minima(f: impl Fn(f64, f64) -> f64, lo: f64, hi: f64, n: usize) -> usize {
        let h = (hi - lo) / (n - 1) as f64;
        let vals: Vec<f64> = (0..n * n)
            .map(|k| f(lo + (k / n) as f64 * h, lo + (k % n) as f64 * h))
            .collect();
        let mut count = 0;
        for r in 1..n - 1 {
            for c in 1..n - 1 {
                let v = vals[r * n + c];
                let strict = (-1i64..=1)
                    .flat_map(|dr| (-1i64..=1).map(move |dc| (dr, dc)))
                    .filter(|&d| d != (0, 0))
                    .all(|(dr, dc)| v < vals[(r as i64 + dr) as usize * n + (c as i64 + dc) as usize]);
                count += strict as usize;
            }
        }
        count
    }

    #[test]
    fn cosine_sphere_local_minima_census() {
        let f5 = |a: f64, b: f64| evaluate(5, &[a, b]).unwrap();
        // x^2 - cos(18x) has a minimum near every 2 pi k / 18; nineteen of them
        // lie in [-pi, pi] and five in [-1, 1].
        assert_eq!(grid_local_minima(f5, -PI, PI, 1201), 19 * 19);
        assert_eq!(grid_local_minima(f5, -1.0, 1.0, 801), 25);
    }
}
