//! Closed polygonal links in space: metrics, projections to Gauss
//! diagrams, Gauss integrals and direction averages of crossing counts.

mod average;
mod builtin;
mod integral;
mod project;
mod vec3;

pub use average::{average_counts, AverageCounts, Sampler, MIN_SAMPLES};
pub use builtin::{braid_link, builtin_link, circle, hopf, borromean, separated_circles, torus_link, BUILTIN_NAMES};
pub use integral::{gauss_pair_integral, GaussIntegral, DEFAULT_RESOLUTION, MIN_RESOLUTION};
pub use project::{project, project_generic, PairCounts, ProjectionDiagram};
pub use vec3::Vec3;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for degeneracy checks, in units of the unit-ball
/// normalized link.
pub const EPS_GEOM: f64 = 1e-9;

/// A link made of closed polygons, one per component. The last vertex of
/// each polygon connects back to the first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPolyLink", into = "RawPolyLink")]
pub struct PolyLink {
    components: Vec<Vec<Vec3>>,
    name: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct RawPolyLink {
    components: Vec<Vec<Vec3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl TryFrom<RawPolyLink> for PolyLink {
    type Error = Error;
    fn try_from(raw: RawPolyLink) -> Result<PolyLink> {
        PolyLink::new(raw.components).map(|p| p.with_name(raw.name))
    }
}

impl From<PolyLink> for RawPolyLink {
    fn from(p: PolyLink) -> RawPolyLink {
        RawPolyLink {
            components: p.components,
            name: p.name,
        }
    }
}

/// A segment as (start, end).
pub(crate) type Segment = (Vec3, Vec3);

/// Closest points of two segments, returned as parameters in `[0, 1]`.
pub(crate) fn closest_parameters(s: Segment, t: Segment) -> (f64, f64) {
    let d1 = s.1 - s.0;
    let d2 = t.1 - t.0;
    let r = s.0 - t.0;
    let a = d1.dot(d1);
    let e = d2.dot(d2);
    let f = d2.dot(r);
    let c = d1.dot(r);
    let b = d1.dot(d2);
    let denom = a * e - b * b;
    let mut u = if denom > 1e-300 {
        ((b * f - c * e) / denom).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let mut w = (b * u + f) / e;
    if w < 0.0 {
        w = 0.0;
        u = (-c / a).clamp(0.0, 1.0);
    } else if w > 1.0 {
        w = 1.0;
        u = ((b - c) / a).clamp(0.0, 1.0);
    }
    (u, w)
}

pub(crate) fn segment_distance(s: Segment, t: Segment) -> f64 {
    let (u, w) = closest_parameters(s, t);
    (s.0.lerp(s.1, u) - t.0.lerp(t.1, w)).norm()
}

fn circumradius(a: Vec3, b: Vec3, c: Vec3) -> f64 {
    let ab = (b - a).norm();
    let bc = (c - b).norm();
    let ca = (a - c).norm();
    let twice_area = (b - a).cross(c - a).norm();
    if twice_area == 0.0 {
        f64::INFINITY
    } else {
        ab * bc * ca / (2.0 * twice_area)
    }
}

/// Scalar summaries of a polygonal link.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Metrics {
    pub lengths: Vec<f64>,
    pub total_length: f64,
    pub thickness: f64,
    pub ropelength: f64,
    /// Thickness after moving the link into the unit ball.
    pub embedding_thickness: f64,
}

impl PolyLink {
    /// Validates vertex counts, edge lengths and that no two segments meet.
    pub fn new(components: Vec<Vec<Vec3>>) -> Result<PolyLink> {
        if components.is_empty() {
            return Err(Error::NoComponents);
        }
        for (c, poly) in components.iter().enumerate() {
            if poly.len() < 3 {
                return Err(Error::DegenerateGeometry(format!(
                    "component {} has {} vertices, need at least 3",
                    c + 1,
                    poly.len()
                )));
            }
            if poly.iter().any(|v| !v.is_finite()) {
                return Err(Error::DegenerateGeometry(format!(
                    "component {} has a non-finite coordinate",
                    c + 1
                )));
            }
        }
        let link = PolyLink {
            components,
            name: None,
        };
        let tol = EPS_GEOM * link.bounding_radius().max(f64::MIN_POSITIVE);
        for c in 0..link.n_components() {
            for k in 0..link.components[c].len() {
                let (a, b) = link.segment(c, k);
                if (b - a).norm() <= tol {
                    return Err(Error::DegenerateGeometry(format!(
                        "component {} has a zero-length edge at vertex {}",
                        c + 1,
                        k + 1
                    )));
                }
            }
        }
        link.check_disjoint(tol)?;
        Ok(link)
    }

    pub fn with_name(mut self, name: Option<String>) -> PolyLink {
        self.name = name;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn from_json(text: &str) -> Result<PolyLink> {
        serde_json::from_str(text).map_err(|e| Error::DegenerateGeometry(format!("polylink: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polylink serializes")
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Vec3>] {
        &self.components
    }

    pub(crate) fn segment(&self, c: usize, k: usize) -> Segment {
        let poly = &self.components[c];
        (poly[k], poly[(k + 1) % poly.len()])
    }

    pub(crate) fn segments(&self) -> impl Iterator<Item = (usize, usize, Segment)> + '_ {
        (0..self.n_components())
            .flat_map(move |c| (0..self.components[c].len()).map(move |k| (c, k, self.segment(c, k))))
    }

    fn adjacent(&self, c: usize, k: usize, l: usize) -> bool {
        let n = self.components[c].len();
        (k + 1) % n == l || (l + 1) % n == k || k == l
    }

    fn check_disjoint(&self, tol: f64) -> Result<()> {
        let segs: Vec<_> = self.segments().collect();
        for (x, &(c1, k1, s1)) in segs.iter().enumerate() {
            for &(c2, k2, s2) in &segs[x + 1..] {
                if c1 == c2 && self.adjacent(c1, k1, k2) {
                    continue;
                }
                if segment_distance(s1, s2) <= tol {
                    return Err(Error::DegenerateGeometry(format!(
                        "segment {} of component {} meets segment {} of component {}",
                        k1 + 1,
                        c1 + 1,
                        k2 + 1,
                        c2 + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Uniformly scaled copy.
    pub fn scaled(&self, factor: f64) -> PolyLink {
        self.map(|v| v * factor)
    }

    pub fn translated(&self, offset: Vec3) -> PolyLink {
        self.map(|v| v + offset)
    }

    fn map(&self, f: impl Fn(Vec3) -> Vec3) -> PolyLink {
        PolyLink {
            components: self
                .components
                .iter()
                .map(|poly| poly.iter().map(|&v| f(v)).collect())
                .collect(),
            name: self.name.clone(),
        }
    }

    /// Center of the axis-aligned bounding box.
    pub fn center(&self) -> Vec3 {
        let mut lo = Vec3::splat(f64::INFINITY);
        let mut hi = Vec3::splat(f64::NEG_INFINITY);
        for v in self.components.iter().flatten() {
            lo = lo.min(*v);
            hi = hi.max(*v);
        }
        (lo + hi) * 0.5
    }

    /// Largest distance of a vertex from [`PolyLink::center`].
    pub fn bounding_radius(&self) -> f64 {
        let c = self.center();
        self.components
            .iter()
            .flatten()
            .map(|v| (*v - c).norm())
            .fold(0.0, f64::max)
    }

    /// Copy translated and scaled so that it lies in the closed unit ball.
    pub fn normalized_to_unit_ball(&self) -> PolyLink {
        let c = self.center();
        let r = self.bounding_radius();
        self.map(|v| (v - c) * (1.0 / r))
    }

    pub fn component_length(&self, c: usize) -> f64 {
        (0..self.components[c].len())
            .map(|k| {
                let (a, b) = self.segment(c, k);
                (b - a).norm()
            })
            .sum()
    }

    /// Polygonal thickness estimate.
    ///
    /// The smallest of: circumradii of consecutive vertex triples, half the
    /// distance between segments of different components, and half the
    /// distance between segments of one component whose closest points are
    /// critical for the distance along both curves (so that points that are
    /// merely close in arc length do not count).
    pub fn thickness(&self) -> f64 {
        let mut r = f64::INFINITY;
        for poly in &self.components {
            let n = poly.len();
            for k in 0..n {
                r = r.min(circumradius(poly[(k + n - 1) % n], poly[k], poly[(k + 1) % n]));
            }
        }
        let segs: Vec<_> = self.segments().collect();
        for (x, &(c1, k1, s1)) in segs.iter().enumerate() {
            for &(c2, k2, s2) in &segs[x + 1..] {
                if c1 != c2 {
                    r = r.min(segment_distance(s1, s2) / 2.0);
                    continue;
                }
                if self.adjacent(c1, k1, k2) {
                    continue;
                }
                let (u, w) = closest_parameters(s1, s2);
                let p = s1.0.lerp(s1.1, u);
                let q = s2.0.lerp(s2.1, w);
                let d = (p - q).norm();
                if d / 2.0 < r && self.critical(c1, k1, u, q) && self.critical(c2, k2, w, p) {
                    r = d / 2.0;
                }
            }
        }
        r
    }

    /// Whether the point at parameter `u` of segment `k` is a critical point
    /// of the distance to `q` along component `c`.
    fn critical(&self, c: usize, k: usize, u: f64, q: Vec3) -> bool {
        let n = self.components[c].len();
        let (vertex, before, after) = if u <= 0.0 {
            (self.segment(c, k).0, self.segment(c, (k + n - 1) % n), self.segment(c, k))
        } else if u >= 1.0 {
            (self.segment(c, k).1, self.segment(c, k), self.segment(c, (k + 1) % n))
        } else {
            return true;
        };
        let to = vertex - q;
        to.dot(before.1 - before.0) * to.dot(after.1 - after.0) <= 0.0
    }

    pub fn metrics(&self) -> Metrics {
        let lengths: Vec<f64> = (0..self.n_components()).map(|c| self.component_length(c)).collect();
        let total_length: f64 = lengths.iter().sum();
        let thickness = self.thickness();
        Metrics {
            total_length,
            thickness,
            ropelength: total_length / thickness,
            embedding_thickness: thickness / self.bounding_radius(),
            lengths,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closest_points_of_crossed_segments() {
        let s = (Vec3::new(-1.0, 0.0, 0.0), Vec3::new(1.0, 0.0, 0.0));
        let t = (Vec3::new(0.0, -1.0, 2.0), Vec3::new(0.0, 1.0, 2.0));
        assert_eq!(closest_parameters(s, t), (0.5, 0.5));
        assert!((segment_distance(s, t) - 2.0).abs() < 1e-15);
        let parallel = (Vec3::new(3.0, 1.0, 0.0), Vec3::new(5.0, 1.0, 0.0));
        assert!((segment_distance(s, parallel) - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn circle_metrics() {
        let m = circle(1.0, 360).metrics();
        assert!((m.total_length - 2.0 * std::f64::consts::PI).abs() / (2.0 * std::f64::consts::PI) < 1e-3);
        assert!((m.thickness - 1.0).abs() < 1e-3);
        assert!((m.embedding_thickness - m.thickness).abs() < 1e-12);
    }

    #[test]
    fn parallel_circles_thickness() {
        let p = separated_circles(4.0, 360).unwrap();
        assert!((p.thickness() - 1.0).abs() < 0.05);
    }

    #[test]
    fn ropelength_is_scale_invariant() {
        let p = hopf(1.0, 120).unwrap();
        let a = p.metrics().ropelength;
        let b = p.scaled(2.0).metrics().ropelength;
        assert!((a - b).abs() / a < 1e-12);
    }

    #[test]
    fn rejects_bad_polygons() {
        let z = Vec3::ZERO;
        let x = Vec3::new(1.0, 0.0, 0.0);
        let y = Vec3::new(0.0, 1.0, 0.0);
        assert!(PolyLink::new(vec![vec![z, x]]).is_err());
        assert!(PolyLink::new(vec![vec![z, x, x, y]]).is_err());
        // two triangles sharing a vertex
        let w = Vec3::new(0.0, -1.0, 0.0);
        assert!(PolyLink::new(vec![vec![z, x, y], vec![z, w, -x]]).is_err());
        assert!(PolyLink::new(vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = circle(1.0, 8).with_name(Some("octagon".into()));
        let q = PolyLink::from_json(&p.to_json()).unwrap();
        assert_eq!(p, q);
        assert!(PolyLink::from_json(r#"{"components":[[[0,0,0],[1,0,0]]]}"#).is_err());
    }
}
