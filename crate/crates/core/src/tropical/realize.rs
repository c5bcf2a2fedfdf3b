//! Exact realization of combinatorial types.
//!
//! Unknowns are the vertex positions (constrained to the affine hull of
//! each vertex's face) and the internal edge lengths. Equations are edge
//! continuity `head − tail = length·derivative` and the labeled-end
//! constraints `position = pᵢ`. The deformation dimension is the kernel
//! dimension of this equality system; length positivity and open-face
//! conditions then cut the solution set.

use num_traits::Zero;

use crate::complex::{Domain, Face, Mode};
use crate::error::Error;
use crate::lattice::{rat_int, IntVec2, Rat, RatPoint};
use crate::linalg::{eval_affine, Reducer};
use crate::lp;
use crate::Result;

use super::CombinatorialType;

/// Exact positions and lengths solving the continuity system.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    pub positions: Vec<RatPoint>,
    pub lengths: Vec<Rat>,
    pub deformation_dim: usize,
}

/// Result of [`realize`]: the deformation dimension of the equality system
/// (zero when the system is inconsistent) and a realization with positive
/// lengths when one exists.
#[derive(Clone, Debug)]
pub struct RealizeOutcome {
    pub realization: Option<Realization>,
    pub deformation_dim: usize,
    pub consistent: bool,
}

struct VertexVars {
    base: RatPoint,
    dirs: Vec<IntVec2>,
    start: usize,
}

/// Solve the continuity system for `t` through the labeled points.
pub fn realize(
    t: &CombinatorialType,
    domain: &Domain,
    points: &[RatPoint],
) -> Result<RealizeOutcome> {
    t.validate()?;
    if t.ends.len() != points.len() {
        return Err(Error::InvalidInput(format!(
            "{} labeled ends but {} points",
            t.ends.len(),
            points.len()
        )));
    }
    match domain.mode {
        Mode::Triangle => {
            if !t.rays.is_empty() {
                return Err(Error::InvalidCurve(
                    "unbounded rays are not allowed in the compact complex".into(),
                ));
            }
        }
        Mode::Plane => {
            if t.vertices.iter().any(|v| v.face != Face::Int) {
                return Err(Error::InvalidCurve(
                    "plane mode has no boundary faces".into(),
                ));
            }
        }
    }
    // labeled-end targets must classify to the vertex's assigned face
    for (i, (&v, p)) in t.ends.iter().zip(points).enumerate() {
        let face = domain.classify_point(p)?;
        if face != t.vertices[v].face {
            return Err(Error::InvalidCurve(format!(
                "end {} targets {} on face {} but its vertex is assigned to {}",
                i + 1,
                p,
                face,
                t.vertices[v].face
            )));
        }
    }

    // variable layout: per-vertex face parameters, then edge lengths
    let mut vars: Vec<VertexVars> = Vec::with_capacity(t.n_vertices());
    let mut n_vars = 0usize;
    for v in &t.vertices {
        let (base, dirs) = match (domain.mode, v.face) {
            (Mode::Plane, _) | (Mode::Triangle, Face::Int) => (
                RatPoint::origin(),
                vec![IntVec2::new(1, 0), IntVec2::new(0, 1)],
            ),
            (Mode::Triangle, f) if f.is_corner() => (f.corner_position().unwrap(), vec![]),
            (Mode::Triangle, f) => {
                let (alpha, _) = crate::complex::side_frame(f).unwrap();
                let base = match f {
                    Face::S12 | Face::S13 => RatPoint::from_ints(0, 0),
                    Face::S23 => RatPoint::from_ints(1, 0),
                    _ => unreachable!(),
                };
                (base, vec![alpha])
            }
        };
        vars.push(VertexVars {
            base,
            dirs,
            start: n_vars,
        });
        n_vars += vars.last().unwrap().dirs.len();
    }
    let length_start = n_vars;
    n_vars += t.edges.len();

    // position of vertex v as an affine form over the variables
    let pos_form = |v: usize, coord: usize| -> (Vec<Rat>, Rat) {
        let mut row = vec![Rat::zero(); n_vars];
        let vv = &vars[v];
        for (k, d) in vv.dirs.iter().enumerate() {
            row[vv.start + k] = rat_int(if coord == 0 { d.x } else { d.y });
        }
        let c = if coord == 0 {
            vv.base.x.clone()
        } else {
            vv.base.y.clone()
        };
        (row, c)
    };

    let mut reducer = Reducer::new(n_vars);
    for (ei, e) in t.edges.iter().enumerate() {
        for coord in 0..2 {
            let (mut row, c) = pos_form(e.head, coord);
            let (row_t, c_t) = pos_form(e.tail, coord);
            for (a, b) in row.iter_mut().zip(&row_t) {
                *a = &*a - b;
            }
            let d = if coord == 0 {
                e.derivative.x
            } else {
                e.derivative.y
            };
            row[length_start + ei] = &row[length_start + ei] - rat_int(d);
            reducer.push(row, &c_t - &c);
        }
    }
    for (&v, p) in t.ends.iter().zip(points) {
        let (row, c) = pos_form(v, 0);
        reducer.push(row, &p.x - &c);
        let (row, c) = pos_form(v, 1);
        reducer.push(row, &p.y - &c);
    }

    if !reducer.is_consistent() {
        return Ok(RealizeOutcome {
            realization: None,
            deformation_dim: 0,
            consistent: false,
        });
    }
    let dim = reducer.kernel_dim();

    // strict inequalities: positive lengths and open-face conditions
    let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for ei in 0..t.edges.len() {
        let mut row = vec![Rat::zero(); n_vars];
        row[length_start + ei] = Rat::from_integer(1.into());
        ineqs.push((row, Rat::zero()));
    }
    if domain.mode == Mode::Triangle {
        for (v, vd) in t.vertices.iter().enumerate() {
            let s = vars[v].start;
            match vd.face {
                Face::Int => {
                    for k in 0..2 {
                        let mut row = vec![Rat::zero(); n_vars];
                        row[s + k] = Rat::from_integer(1.into());
                        ineqs.push((row, Rat::zero()));
                    }
                    let mut row = vec![Rat::zero(); n_vars];
                    row[s] = rat_int(-1);
                    row[s + 1] = rat_int(-1);
                    ineqs.push((row, rat_int(1)));
                }
                f if f.is_side() => {
                    let mut row = vec![Rat::zero(); n_vars];
                    row[s] = Rat::from_integer(1.into());
                    ineqs.push((row, Rat::zero()));
                    let mut row = vec![Rat::zero(); n_vars];
                    row[s] = rat_int(-1);
                    ineqs.push((row, rat_int(1)));
                }
                _ => {}
            }
        }
    }

    let assignment: Option<Vec<Rat>> = if dim == 0 {
        let x = reducer.solve_unique().expect("consistent full-rank system");
        let ok = ineqs
            .iter()
            .all(|(row, c)| eval_affine(row, c, &x) > Rat::zero());
        ok.then_some(x)
    } else {
        let (x0, kernel) = reducer.solution_space().expect("consistent system");
        // substitute x = x0 + K·s and look for a strictly interior s
        let reduced: Vec<(Vec<Rat>, Rat)> = ineqs
            .iter()
            .map(|(row, c)| {
                let coeffs: Vec<Rat> = kernel
                    .iter()
                    .map(|k| {
                        let mut acc = Rat::zero();
                        for (a, b) in row.iter().zip(k) {
                            if !a.is_zero() {
                                acc += a * b;
                            }
                        }
                        acc
                    })
                    .collect();
                (coeffs, eval_affine(row, c, &x0))
            })
            .collect();
        lp::strict_interior(dim, &reduced).map(|s| {
            let mut x = x0;
            for (k, si) in kernel.iter().zip(&s) {
                for (xi, ki) in x.iter_mut().zip(k) {
                    if !ki.is_zero() {
                        *xi = &*xi + si * ki;
                    }
                }
            }
            x
        })
    };

    let realization = assignment.map(|x| {
        let positions: Vec<RatPoint> = (0..t.n_vertices())
            .map(|v| {
                let (rx, cx) = pos_form(v, 0);
                let (ry, cy) = pos_form(v, 1);
                RatPoint::new(eval_affine(&rx, &cx, &x), eval_affine(&ry, &cy, &x))
            })
            .collect();
        let lengths: Vec<Rat> = (0..t.edges.len())
            .map(|ei| x[length_start + ei].clone())
            .collect();
        if cfg!(debug_assertions) {
            for (e, len) in t.edges.iter().zip(&lengths) {
                let dx = &positions[e.head].x - &positions[e.tail].x;
                let dy = &positions[e.head].y - &positions[e.tail].y;
                debug_assert_eq!(dx, len * rat_int(e.derivative.x));
                debug_assert_eq!(dy, len * rat_int(e.derivative.y));
            }
        }
        Realization {
            positions,
            lengths,
            deformation_dim: dim,
        }
    });

    Ok(RealizeOutcome {
        realization,
        deformation_dim: dim,
        consistent: true,
    })
}

/// A type is rigid for a configuration iff it realizes with deformation
/// dimension zero.
pub fn is_rigid(t: &CombinatorialType, domain: &Domain, points: &[RatPoint]) -> Result<bool> {
    let out = realize(t, domain, points)?;
    Ok(out.consistent && out.deformation_dim == 0 && out.realization.is_some())
}
