//! Parameterized fixture links, polygonalized with `n` vertices per
//! component.

use std::f64::consts::TAU;

use super::{PolyLink, Vec3};
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 5] = ["circle", "hopf", "borromean", "torus_link", "separated_circles"];

fn polygon(n: usize, f: impl Fn(f64) -> Vec3) -> Vec<Vec3> {
    (0..n).map(|k| f(TAU * k as f64 / n as f64)).collect()
}

fn check_resolution(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::BadParams(format!("need at least 3 vertices, got {n}")));
    }
    Ok(())
}

/// Regular `n`-gon of circumradius `r` in the `xy` plane, counterclockwise
/// seen from `+z`.
pub fn circle(r: f64, n: usize) -> PolyLink {
    PolyLink::new(vec![polygon(n.max(3), |t| Vec3::new(r * t.cos(), r * t.sin(), 0.0))])
        .expect("regular polygon is valid")
        .with_name(Some("circle".into()))
}

/// Two unit circles: one in the `xy` plane about the origin, one in the
/// `xz` plane about `(s, 0, 0)`. For `s = 1` each passes through the
/// other's center. Linked with linking number +1 for `0 < s < 2`.
pub fn hopf(s: f64, n: usize) -> Result<PolyLink> {
    check_resolution(n)?;
    let a = polygon(n, |t| Vec3::new(t.cos(), t.sin(), 0.0));
    let b = polygon(n, |t| Vec3::new(s + t.cos(), 0.0, -t.sin()));
    Ok(PolyLink::new(vec![a, b])?.with_name(Some("hopf".into())))
}

/// Three mutually perpendicular ellipses with semi-axes `a > b`.
pub fn borromean(a: f64, b: f64, n: usize) -> Result<PolyLink> {
    check_resolution(n)?;
    if !(a > b && b > 0.0) {
        return Err(Error::BadParams(format!("borromean needs a > b > 0, got a={a}, b={b}")));
    }
    let e1 = polygon(n, |t| Vec3::new(a * t.cos(), b * t.sin(), 0.0));
    let e2 = polygon(n, |t| Vec3::new(0.0, a * t.cos(), b * t.sin()));
    let e3 = polygon(n, |t| Vec3::new(b * t.sin(), 0.0, a * t.cos()));
    Ok(PolyLink::new(vec![e1, e2, e3])?.with_name(Some("borromean".into())))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// The `(p, q)` torus link on the torus with radii 2 and 1: each of the
/// `gcd(p, q)` components winds `p / gcd` times along the core circle and
/// `q / gcd` times around the tube.
pub fn torus_link(p: u32, q: u32, n: usize) -> Result<PolyLink> {
    check_resolution(n)?;
    if p == 0 || q == 0 {
        return Err(Error::BadParams("torus_link needs p, q >= 1".into()));
    }
    let g = gcd(p, q);
    let (p1, q1) = ((p / g) as f64, (q / g) as f64);
    let comps = (0..g)
        .map(|c| {
            let shift = TAU * c as f64 / (g as f64 * p1);
            polygon(n, |s| {
                let phi = p1 * s;
                let theta = q1 * s + shift;
                let rho = 2.0 + theta.cos();
                Vec3::new(rho * phi.cos(), rho * phi.sin(), theta.sin())
            })
        })
        .collect();
    Ok(PolyLink::new(comps)?.with_name(Some(format!("torus_link({p},{q})"))))
}

/// Two coaxial unit circles in the planes `z = 0` and `z = d`.
pub fn separated_circles(d: f64, n: usize) -> Result<PolyLink> {
    check_resolution(n)?;
    if d <= 0.0 {
        return Err(Error::BadParams(format!("separation must be positive, got {d}")));
    }
    let a = polygon(n, |t| Vec3::new(t.cos(), t.sin(), 0.0));
    let b = polygon(n, |t| Vec3::new(t.cos(), t.sin(), d));
    Ok(PolyLink::new(vec![a, b])?.with_name(Some("separated_circles".into())))
}

/// A spatial realization of the closure of a braid word on `strands`
/// strands, with the letter conventions and component order of
/// [`braid_closure`](crate::diagram::braid_closure). Strands run down the
/// `-y` axis one unit apart in `x`; at each crossing the over strand rises
/// to `z = 0.3` and the under strand dips to `z = -0.3`. The closing arcs
/// are nested rectangles in the plane `z = 0` to the right of the braid, so
/// viewed from `+z` the projection is the standard closure diagram.
pub fn braid_link(strands: usize, word: &[i32]) -> Result<PolyLink> {
    if strands == 0 {
        return Err(Error::BadParams("braid needs at least one strand".into()));
    }
    if let Some(l) = word.iter().find(|l| **l == 0 || l.unsigned_abs() as usize >= strands) {
        return Err(Error::BadParams(format!("letter {l} invalid for {strands} strands")));
    }
    let s = strands as f64;
    let len = word.len() as f64;
    let mut done = vec![false; strands];
    let mut comps = Vec::new();
    for start in 0..strands {
        if done[start] {
            continue;
        }
        let mut pts: Vec<Vec3> = Vec::new();
        let mut push = |v: Vec3| {
            if pts.last() != Some(&v) {
                pts.push(v);
            }
        };
        let mut pos = start;
        loop {
            done[pos] = true;
            push(Vec3::new(pos as f64, 0.0, 0.0));
            for (k, &l) in word.iter().enumerate() {
                let p = l.unsigned_abs() as usize - 1;
                if pos != p && pos != p + 1 {
                    continue;
                }
                let moving_left = pos == p + 1;
                let next = if moving_left { p } else { p + 1 };
                let z = if moving_left == (l > 0) { 0.3 } else { -0.3 };
                let y = -(k as f64);
                push(Vec3::new(pos as f64, y, 0.0));
                push(Vec3::new(p as f64 + 0.5, y - 0.5, z));
                push(Vec3::new(next as f64, y - 1.0, 0.0));
                pos = next;
            }
            let (x, off) = (pos as f64, s - pos as f64);
            push(Vec3::new(x, -len, 0.0));
            push(Vec3::new(x, -len - off, 0.0));
            push(Vec3::new(s + off, -len - off, 0.0));
            push(Vec3::new(s + off, off, 0.0));
            push(Vec3::new(x, off, 0.0));
            if pos == start {
                break;
            }
        }
        comps.push(pts);
    }
    Ok(PolyLink::new(comps)?.with_name(Some("braid_closure".into())))
}

/// Looks up a fixture by name. Missing parameters take defaults:
/// circle(1), hopf(1), borromean(2, 1), torus_link(2, 4),
/// separated_circles(4).
pub fn builtin_link(name: &str, params: &[f64], n: usize) -> Result<PolyLink> {
    let get = |i: usize, default: f64| params.get(i).copied().unwrap_or(default);
    let expect = |max: usize| {
        if params.len() > max {
            Err(Error::BadParams(format!("{name} takes at most {max} parameters")))
        } else {
            Ok(())
        }
    };
    match name {
        "circle" => {
            expect(1)?;
            check_resolution(n)?;
            Ok(circle(get(0, 1.0), n))
        }
        "hopf" => {
            expect(1)?;
            hopf(get(0, 1.0), n)
        }
        "borromean" => {
            expect(2)?;
            borromean(get(0, 2.0), get(1, 1.0), n)
        }
        "torus_link" => {
            expect(2)?;
            let (p, q) = (get(0, 2.0), get(1, 4.0));
            if p.fract() != 0.0 || q.fract() != 0.0 || p < 1.0 || q < 1.0 {
                return Err(Error::BadParams("torus_link needs positive integers".into()));
            }
            torus_link(p as u32, q as u32, n)
        }
        "separated_circles" => {
            expect(1)?;
            separated_circles(get(0, 4.0), n)
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::segment_distance;

    #[test]
    fn circle_vertices_on_radius() {
        let c = circle(1.0, 360);
        assert_eq!(c.components()[0].len(), 360);
        assert!(c.components()[0].iter().all(|v| (v.norm() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn borromean_components_are_disjoint() {
        let b = borromean(2.0, 1.0, 120).unwrap();
        let segs: Vec<_> = b.segments().collect();
        let mut min = f64::INFINITY;
        for &(c1, _, s) in &segs {
            for &(c2, _, t) in &segs {
                if c1 < c2 {
                    min = min.min(segment_distance(s, t));
                }
            }
        }
        assert!(min > 0.1, "min distance {min}");
    }

    #[test]
    fn torus_link_component_count() {
        assert_eq!(torus_link(2, 4, 90).unwrap().n_components(), 2);
        assert_eq!(torus_link(2, 3, 90).unwrap().n_components(), 1);
        assert_eq!(torus_link(3, 3, 90).unwrap().n_components(), 3);
    }

    #[test]
    fn braid_link_projects_to_closure_diagram() {
        use crate::diagram::braid_closure;
        use crate::geometry::project;
        for (n, w) in [(2, vec![1, 1]), (3, vec![1, -2, 1, -2, 1, -2]), (2, vec![1, 1, 1]), (4, vec![1, 2, -3, 2, 2, -1, 3])] {
            let p = braid_link(n, &w).unwrap();
            let d = project(&p, Vec3::new(1e-4, 2e-4, 1.0)).unwrap().diagram;
            assert_eq!(d, braid_closure(n, &w).unwrap(), "{w:?}");
        }
    }

    #[test]
    fn lookup() {
        assert!(builtin_link("hopf", &[], 60).is_ok());
        assert!(matches!(builtin_link("trefoil", &[], 60), Err(Error::UnknownName(_))));
        assert!(matches!(builtin_link("circle", &[1.0, 2.0], 60), Err(Error::BadParams(_))));
        assert!(matches!(builtin_link("torus_link", &[2.5, 3.0], 60), Err(Error::BadParams(_))));
        assert!(matches!(builtin_link("borromean", &[1.0, 2.0], 60), Err(Error::BadParams(_))));
    }
}
