//! Orthogonal projection of a polygonal link to a Gauss diagram.
//!
//! The viewer looks along `-v`, so the strand with the larger coordinate
//! along `v` is over. A crossing is positive when `det[u_over, u_under, v]`
//! is positive, `u` being strand directions along the orientation. Base
//! points sit at the first vertex of each component. Segment parameters are
//! half-open, and a direction is rejected as non-generic when a crossing
//! comes within the tolerance of a vertex, another crossing, or a depth tie.

use serde::Serialize;

use super::{PolyLink, Vec3, EPS_GEOM};
use crate::diagram::{GaussDiagram, RawEndpoint, RawGauss, Role, Sign};
use crate::error::{Error, Result};

/// Crossing counts of one projection, indexed by component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCounts {
    /// `ov[i][j]`: crossings where component `i` passes over `j`. The
    /// diagonal holds self-crossings.
    pub ov: Vec<Vec<usize>>,
    /// Sum of crossing signs with `i` over `j`.
    pub signed: Vec<Vec<i64>>,
}

impl PairCounts {
    /// `cr_{i,j} = ov_{i,j} + ov_{j,i}` for `i != j`, self-crossings of `i`
    /// for `i == j`.
    pub fn cr(&self, i: usize, j: usize) -> usize {
        if i == j {
            self.ov[i][i]
        } else {
            self.ov[i][j] + self.ov[j][i]
        }
    }

    /// Half the signed count of crossings between `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> f64 {
        (self.signed[i][j] + self.signed[j][i]) as f64 / 2.0
    }

    pub fn total_crossings(&self) -> usize {
        self.ov.iter().flatten().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectionDiagram {
    pub direction: Vec3,
    #[serde(serialize_with = "as_gauss_code")]
    pub diagram: GaussDiagram,
    pub pair_counts: PairCounts,
}

fn as_gauss_code<S: serde::Serializer>(g: &GaussDiagram, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::diagram::emit_gauss_code(g))
}

struct Seg {
    comp: usize,
    index: usize,
    a: (f64, f64),
    b: (f64, f64),
    depth: (f64, f64),
    len: f64,
}

struct Crossing {
    over: (usize, usize, f64),
    under: (usize, usize, f64),
    at: (f64, f64),
    sign: Sign,
}

fn cross2(p: (f64, f64), q: (f64, f64)) -> f64 {
    p.0 * q.1 - p.1 * q.0
}

fn sub2(p: (f64, f64), q: (f64, f64)) -> (f64, f64) {
    (p.0 - q.0, p.1 - q.1)
}

fn non_generic(what: String) -> Error {
    Error::NonGenericDirection(format!("{what}; perturb the direction slightly and retry"))
}

pub fn project(p: &PolyLink, v: Vec3) -> Result<ProjectionDiagram> {
    let norm = v.norm();
    if !(norm > 0.0) || !v.is_finite() {
        return Err(Error::BadParams("projection direction must be a nonzero vector".into()));
    }
    let v = v * (1.0 / norm);
    let (e1, e2) = v.orthonormal_frame();
    let center = p.center();
    let scale = p.bounding_radius();
    let eps = EPS_GEOM * scale;
    let flat = |x: Vec3| {
        let y = x - center;
        ((y.dot(e1), y.dot(e2)), y.dot(v))
    };
    let mut segs = Vec::new();
    for (comp, index, (s, t)) in p.segments() {
        let (a, da) = flat(s);
        let (b, db) = flat(t);
        let d = sub2(b, a);
        let len = d.0.hypot(d.1);
        if len <= eps {
            return Err(non_generic(format!(
                "segment {} of component {} is parallel to the direction",
                index + 1,
                comp + 1
            )));
        }
        segs.push(Seg { comp, index, a, b, depth: (da, db), len });
    }
    let crossings = find_crossings(p, &segs, eps)?;
    check_separated(&crossings, eps)?;
    let n = p.n_components();
    let mut ov = vec![vec![0usize; n]; n];
    let mut signed = vec![vec![0i64; n]; n];
    let mut seqs: Vec<Vec<(usize, f64, RawEndpoint)>> = vec![Vec::new(); n];
    for (label, c) in crossings.iter().enumerate() {
        ov[c.over.0][c.under.0] += 1;
        signed[c.over.0][c.under.0] += c.sign.value();
        for (slot, role) in [(c.over, Role::Tail), (c.under, Role::Head)] {
            seqs[slot.0].push((
                slot.1,
                slot.2,
                RawEndpoint { label: label as u32 + 1, role, sign: c.sign },
            ));
        }
    }
    let components = seqs
        .into_iter()
        .map(|mut s| {
            s.sort_by(|x, y| (x.0, x.1).partial_cmp(&(y.0, y.1)).expect("finite parameters"));
            s.into_iter().map(|(_, _, e)| e).collect()
        })
        .collect();
    let diagram = GaussDiagram::validate(&RawGauss { components })?;
    Ok(ProjectionDiagram {
        direction: v,
        diagram,
        pair_counts: PairCounts { ov, signed },
    })
}

fn find_crossings(p: &PolyLink, segs: &[Seg], eps: f64) -> Result<Vec<Crossing>> {
    let xmin = |s: &Seg| s.a.0.min(s.b.0);
    let xmax = |s: &Seg| s.a.0.max(s.b.0);
    let mut order: Vec<usize> = (0..segs.len()).collect();
    order.sort_by(|&i, &j| xmin(&segs[i]).total_cmp(&xmin(&segs[j])));
    let mut active: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for &i in &order {
        let s = &segs[i];
        active.retain(|&j| xmax(&segs[j]) >= xmin(s) - eps);
        for &j in &active {
            let t = &segs[j];
            let (ymin_s, ymax_s) = (s.a.1.min(s.b.1), s.a.1.max(s.b.1));
            if t.a.1.max(t.b.1) < ymin_s - eps || t.a.1.min(t.b.1) > ymax_s + eps {
                continue;
            }
            let (first, second) = if (s.comp, s.index) < (t.comp, t.index) { (s, t) } else { (t, s) };
            if let Some(c) = intersect(p, first, second, eps)? {
                out.push(c);
            }
        }
        active.push(i);
    }
    Ok(out)
}

fn intersect(p: &PolyLink, s: &Seg, t: &Seg, eps: f64) -> Result<Option<Crossing>> {
    let r = sub2(s.b, s.a);
    let q = sub2(t.b, t.a);
    let denom = cross2(r, q);
    let adjacent = s.comp == t.comp && p.adjacent(s.comp, s.index, t.index);
    let where_ = || {
        format!(
            "segments {}:{} and {}:{}",
            s.comp + 1,
            s.index + 1,
            t.comp + 1,
            t.index + 1
        )
    };
    if denom.abs() <= eps * s.len * t.len {
        // parallel in projection: fine unless they overlap
        let off = cross2(sub2(t.a, s.a), r) / s.len;
        if off.abs() > eps {
            return Ok(None);
        }
        let proj = |x: (f64, f64)| {
            let d = sub2(x, s.a);
            (d.0 * r.0 + d.1 * r.1) / (s.len * s.len)
        };
        let (u0, u1) = (proj(t.a), proj(t.b));
        let (lo, hi) = (u0.min(u1), u0.max(u1));
        let overlap = hi.min(1.0) - lo.max(0.0);
        if overlap * s.len > eps {
            return Err(non_generic(format!("{} overlap in projection", where_())));
        }
        return Ok(None);
    }
    if adjacent {
        return Ok(None);
    }
    let w = sub2(t.a, s.a);
    let ts = cross2(w, q) / denom;
    let tt = cross2(w, r) / denom;
    let (hs, ht) = (eps / s.len, eps / t.len);
    if ts < -hs || ts > 1.0 + hs || tt < -ht || tt > 1.0 + ht {
        return Ok(None);
    }
    if ts.abs() <= hs || (ts - 1.0).abs() <= hs || tt.abs() <= ht || (tt - 1.0).abs() <= ht {
        return Err(non_generic(format!("{} cross at a projected vertex", where_())));
    }
    let ds = s.depth.0 + ts * (s.depth.1 - s.depth.0);
    let dt = t.depth.0 + tt * (t.depth.1 - t.depth.0);
    if (ds - dt).abs() <= eps {
        return Err(non_generic(format!("{} are at equal depth where they cross", where_())));
    }
    let at = (s.a.0 + ts * r.0, s.a.1 + ts * r.1);
    let (over, under, uo, uu) = if ds > dt {
        ((s.comp, s.index, ts), (t.comp, t.index, tt), r, q)
    } else {
        ((t.comp, t.index, tt), (s.comp, s.index, ts), q, r)
    };
    let sign = if cross2(uo, uu) > 0.0 { Sign::Pos } else { Sign::Neg };
    Ok(Some(Crossing { over, under, at, sign }))
}

fn check_separated(crossings: &[Crossing], eps: f64) -> Result<()> {
    let mut idx: Vec<usize> = (0..crossings.len()).collect();
    idx.sort_by(|&i, &j| crossings[i].at.0.total_cmp(&crossings[j].at.0));
    for (k, &i) in idx.iter().enumerate() {
        for &j in &idx[k + 1..] {
            let (a, b) = (crossings[i].at, crossings[j].at);
            if b.0 - a.0 > eps {
                break;
            }
            if (b.1 - a.1).abs() <= eps {
                return Err(non_generic("two crossings coincide in projection".into()));
            }
        }
    }
    Ok(())
}

const DIRECTIONS: [Vec3; 4] = [
    Vec3::new(0.2134, -0.3771, 0.9012),
    Vec3::new(-0.5521, 0.1873, 0.8127),
    Vec3::new(0.7093, 0.6011, -0.3681),
    Vec3::new(0.1009, -0.9322, -0.3476),
];

/// Projection along the first of a few fixed directions that is generic
/// for `p`.
pub fn project_generic(p: &PolyLink) -> Result<ProjectionDiagram> {
    let mut last = None;
    for v in DIRECTIONS {
        match project(p, v) {
            Ok(d) => return Ok(d),
            Err(e @ Error::NonGenericDirection(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("directions tried"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{borromean, circle, hopf, torus_link};
    use crate::invariants::linking_number;

    fn generic() -> Vec3 {
        Vec3::new(0.2134, -0.3771, 0.9012)
    }

    #[test]
    fn circle_seen_from_above_has_no_crossings() {
        let d = project(&circle(1.0, 360), Vec3::new(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(d.diagram.n_arrows(), 0);
    }

    #[test]
    fn circle_seen_edge_on_is_rejected() {
        let e = project(&circle(1.0, 12), Vec3::new(1.0, 0.0, 0.0));
        assert!(matches!(e, Err(Error::NonGenericDirection(_))));
    }

    #[test]
    fn hopf_projection() {
        let h = hopf(1.0, 120).unwrap();
        let d = project(&h, generic()).unwrap();
        assert_eq!(d.pair_counts.cr(0, 1), 2);
        assert_eq!(d.pair_counts.linking_number(0, 1), 1.0);
        assert_eq!(linking_number(&d.diagram, 0, 1).unwrap(), 1);
    }

    #[test]
    fn torus_link_linking_number() {
        let t = torus_link(2, 4, 150).unwrap();
        let d = project(&t, generic()).unwrap();
        assert_eq!(d.pair_counts.linking_number(0, 1).abs(), 2.0);
        assert_eq!(linking_number(&d.diagram, 0, 1).unwrap(), d.pair_counts.linking_number(0, 1) as i64);
    }

    #[test]
    fn borromean_pairwise_unlinked() {
        let b = borromean(2.0, 1.0, 120).unwrap();
        let d = project(&b, generic()).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(linking_number(&d.diagram, i, j).unwrap(), 0);
        }
        let pc = &d.pair_counts;
        assert_eq!(pc.total_crossings(), d.diagram.n_arrows());
    }
}
