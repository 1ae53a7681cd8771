//! Classical diagrams as planar-diagram (PD) codes, face tracing, and
//! emission of the crossing equations.
//!
//! A PD crossing lists its four half-edge slots counterclockwise starting
//! from the incoming under-strand. The under-strand exits through slot 2;
//! with sign `+1` the over-strand enters at slot 3 and exits at slot 1,
//! with sign `-1` the other way (so the stored sign is the usual oriented
//! crossing sign).
//!
//! Crossing equations are attached in the orientation-canonical frame:
//! rotate the crossing so both strands exit northward and read the regions
//! at (south, west, east, north) = (a, b, c, d). A positive crossing
//! imposes `[a,b,c] = d`; a negative crossing imposes `[d,c,b] = a`.
//! Reversing both strands rotates the frame by a half turn while keeping
//! the sign, which turns `TriEq(a,b,c,d)` into `TriEq(d,c,b,a)`; combined
//! with a crossing change (mirror) the emitted equation is unchanged. The
//! convention is pinned by those two behaviours together with the bundled
//! anchor counts, not by any particular drawing.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colorsys::{EquationSystem, TriEq};

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("edge {edge} occurs {count} times, want exactly 2")]
    EdgeOccurrence { edge: usize, count: usize },
    #[error("edge {edge} does not carry a consistent direction")]
    FlowInconsistent { edge: usize },
    #[error("diagram is disconnected; only connected PD codes are supported")]
    Disconnected,
    #[error("face tracing found {faces} regions for {crossings} crossings; code is not planar-consistent")]
    NotPlanar { faces: usize, crossings: usize },
    #[error("PD code has no crossings")]
    Empty,
    #[error("crossing sign must be +1 or -1, got {0}")]
    BadSign(i8),
    #[error("edge index {0} out of range")]
    BadEdgeIndex(usize),
    #[error("parse: {0}")]
    Parse(#[from] serde_json::Error),
}

/// One PD crossing: oriented sign and four half-edge ids, counterclockwise
/// from the incoming under-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCrossing {
    pub sign: i8,
    pub slots: [usize; 4],
}

impl PdCrossing {
    /// Is the half-edge at `slot` directed out of the crossing?
    fn is_out(&self, slot: usize) -> bool {
        match slot {
            0 => false,
            2 => true,
            1 => self.sign > 0,
            3 => self.sign < 0,
            _ => unreachable!(),
        }
    }
}

/// A planar diagram code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode {
    pub crossings: Vec<PdCrossing>,
}

impl PdCode {
    pub fn parse(json: &str) -> Result<Self, DiagramError> {
        let pd: PdCode = serde_json::from_str(json)?;
        Ok(pd)
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialize pd")
    }
}

/// Which side of an oriented edge a kink bulges into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KinkSide {
    Left,
    Right,
}

/// A crossing of a region-annotated diagram, stored in the
/// orientation-canonical frame (both strands exiting north).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadCrossing {
    pub sign: i8,
    pub south: usize,
    pub west: usize,
    pub east: usize,
    pub north: usize,
}

/// An oriented edge with the regions on its two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadEdge {
    pub left: usize,
    pub right: usize,
}

/// A region-annotated diagram: all a coloring count needs to know.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rad {
    pub region_count: usize,
    pub crossings: Vec<RadCrossing>,
    pub edges: Vec<RadEdge>,
}

impl Rad {
    /// Crossingless unknot: two regions, the circle oriented with the
    /// bounded region on its left.
    pub fn unknot() -> Rad {
        Rad { region_count: 2, crossings: Vec::new(), edges: vec![RadEdge { left: 1, right: 0 }] }
    }
}

/// Map from crossing wedges to region ids; wedge `i` of a crossing lies
/// between slots `i` and `i+1 (mod 4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceMap {
    pub wedge_region: Vec<[usize; 4]>,
    pub region_count: usize,
}

/// Walks the corners of a PD code, closing each complementary region, and
/// returns the region-annotated diagram.
///
/// Fails on codes whose edges do not glue consistently, on disconnected
/// diagrams, and on codes whose face count differs from `crossings + 2`
/// (the Euler count for a connected 4-valent planar graph).
pub fn trace_faces(pd: &PdCode) -> Result<(Rad, FaceMap), DiagramError> {
    let v = pd.crossings.len();
    if v == 0 {
        return Err(DiagramError::Empty);
    }
    if let Some(c) = pd.crossings.iter().find(|c| c.sign != 1 && c.sign != -1) {
        return Err(DiagramError::BadSign(c.sign));
    }

    // occurrences[edge] = list of (crossing, slot)
    let mut occurrences: std::collections::BTreeMap<usize, Vec<(usize, usize)>> = Default::default();
    for (ci, crossing) in pd.crossings.iter().enumerate() {
        for (si, &edge) in crossing.slots.iter().enumerate() {
            occurrences.entry(edge).or_default().push((ci, si));
        }
    }
    let mut mate = vec![[(0usize, 0usize); 4]; v];
    for (&edge, occ) in &occurrences {
        if occ.len() != 2 {
            return Err(DiagramError::EdgeOccurrence { edge, count: occ.len() });
        }
        let (a, b) = (occ[0], occ[1]);
        let outs = [pd.crossings[a.0].is_out(a.1), pd.crossings[b.0].is_out(b.1)];
        if outs[0] == outs[1] {
            return Err(DiagramError::FlowInconsistent { edge });
        }
        mate[a.0][a.1] = b;
        mate[b.0][b.1] = a;
    }

    // connectivity over crossings through shared edges
    let mut reached = vec![false; v];
    let mut stack = vec![0usize];
    reached[0] = true;
    while let Some(c) = stack.pop() {
        for s in 0..4 {
            let (c2, _) = mate[c][s];
            if !reached[c2] {
                reached[c2] = true;
                stack.push(c2);
            }
        }
    }
    if reached.iter().any(|r| !r) {
        return Err(DiagramError::Disconnected);
    }

    // face orbits: from wedge (c, i), leave along slot i+1 and continue in
    // the wedge counterclockwise of the mate slot
    let mut wedge_region = vec![[usize::MAX; 4]; v];
    let mut region_count = 0;
    for c0 in 0..v {
        for w0 in 0..4 {
            if wedge_region[c0][w0] != usize::MAX {
                continue;
            }
            let region = region_count;
            region_count += 1;
            let (mut c, mut w) = (c0, w0);
            loop {
                if wedge_region[c][w] != usize::MAX {
                    // a corner may be consumed only once
                    return Err(DiagramError::NotPlanar { faces: region_count, crossings: v });
                }
                wedge_region[c][w] = region;
                let (c2, s2) = mate[c][(w + 1) % 4];
                (c, w) = (c2, s2);
                if (c, w) == (c0, w0) {
                    break;
                }
            }
        }
    }
    if region_count != v + 2 {
        return Err(DiagramError::NotPlanar { faces: region_count, crossings: v });
    }

    // classify each wedge by the directions of its bounding half-edges
    let mut crossings = Vec::with_capacity(v);
    for (ci, crossing) in pd.crossings.iter().enumerate() {
        let (mut south, mut west, mut east, mut north) = (0, 0, 0, 0);
        for w in 0..4 {
            let here = crossing.is_out(w);
            let next = crossing.is_out((w + 1) % 4);
            let region = wedge_region[ci][w];
            match (here, next) {
                (false, false) => south = region,
                (true, true) => north = region,
                (true, false) => west = region,
                (false, true) => east = region,
            }
        }
        crossings.push(RadCrossing { sign: crossing.sign, south, west, east, north });
    }

    // edge flanks: at the out-going end, left is the wedge counterclockwise
    // of the slot
    let mut edges = Vec::new();
    for occ in occurrences.values() {
        let &(c, s) = occ.iter().find(|&&(c, s)| pd.crossings[c].is_out(s)).expect("one out end");
        edges.push(RadEdge {
            left: wedge_region[c][s],
            right: wedge_region[c][(s + 3) % 4],
        });
    }

    let rad = Rad { region_count, crossings, edges };
    Ok((rad, FaceMap { wedge_region, region_count }))
}

/// The crossing equation in the canonical frame.
pub fn crossing_equation(c: &RadCrossing) -> TriEq {
    if c.sign > 0 {
        TriEq::new(c.south, c.west, c.east, c.north)
    } else {
        TriEq::new(c.north, c.east, c.west, c.south)
    }
}

/// One `TriEq` per crossing, over one variable per region.
pub fn emit_equations(rad: &Rad) -> EquationSystem {
    let mut sys = EquationSystem::new(rad.region_count);
    for c in &rad.crossings {
        sys.tri_eqs.push(crossing_equation(c));
    }
    sys
}

/// Crossing change at every crossing plus reversal of every strand: the
/// canonical frame of each crossing rotates a half turn and the sign
/// flips, so the emitted equation system is unchanged. Involutive.
pub fn mirror_reverse(rad: &Rad) -> Rad {
    Rad {
        region_count: rad.region_count,
        crossings: rad
            .crossings
            .iter()
            .map(|c| RadCrossing {
                sign: -c.sign,
                south: c.north,
                west: c.east,
                east: c.west,
                north: c.south,
            })
            .collect(),
        edges: rad.edges.iter().map(|e| RadEdge { left: e.right, right: e.left }).collect(),
    }
}

/// Inserts a single kink on `edge`, bulging into the given side, with the
/// given crossing sign. The loop region is fresh and its color is
/// determined by the other three, so coloring counts are unchanged.
pub fn add_r1_kink(rad: &Rad, edge: usize, side: KinkSide, sign: i8) -> Result<Rad, DiagramError> {
    if sign != 1 && sign != -1 {
        return Err(DiagramError::BadSign(sign));
    }
    let Some(&RadEdge { left, right }) = rad.edges.get(edge) else {
        return Err(DiagramError::BadEdgeIndex(edge));
    };
    let mut out = rad.clone();
    let fresh = out.region_count;
    out.region_count += 1;
    match side {
        KinkSide::Right => {
            out.crossings.push(RadCrossing { sign, south: right, west: left, east: fresh, north: right });
            out.edges.push(RadEdge { left: right, right: fresh });
        }
        KinkSide::Left => {
            out.crossings.push(RadCrossing { sign, south: left, west: fresh, east: right, north: left });
            out.edges.push(RadEdge { left: fresh, right: left });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::colorsys::{brute_force_count, count_colorings};
    use num_bigint::BigUint;

    fn trefoil_pd() -> PdCode {
        PdCode::parse(catalog::bundled_file("pd/trefoil.json").unwrap()).unwrap()
    }

    fn kink_pd() -> PdCode {
        PdCode::parse(catalog::bundled_file("pd/kinked_unknot.json").unwrap()).unwrap()
    }

    #[test]
    fn trefoil_has_five_regions() {
        let (rad, faces) = trace_faces(&trefoil_pd()).unwrap();
        assert_eq!(rad.region_count, 5);
        assert_eq!(faces.region_count, 5);
        // every corner consumed exactly once
        let mut per_region = vec![0usize; 5];
        for wedges in &faces.wedge_region {
            for &r in wedges {
                per_region[r] += 1;
            }
        }
        assert_eq!(per_region.iter().sum::<usize>(), 12);
        assert!(per_region.iter().all(|&c| c > 0));
    }

    #[test]
    fn kinked_unknot_has_three_regions() {
        let (rad, _) = trace_faces(&kink_pd()).unwrap();
        assert_eq!(rad.region_count, 3);
        assert_eq!(count_colorings(&emit_equations(&rad), &catalog::dehn_z(3)).0, BigUint::from(9u32));
        assert_eq!(count_colorings(&emit_equations(&rad), &catalog::x4()).0, BigUint::from(16u32));
    }

    #[test]
    fn trefoil_pd_system_counts() {
        let (rad, _) = trace_faces(&trefoil_pd()).unwrap();
        let sys = emit_equations(&rad);
        assert_eq!(sys.var_count, 5);
        assert_eq!(sys.tri_eqs.len(), 3);
        // a knotted sphere or classical knot colors |A|^2 ways over an
        // abelian Dehn tribracket
        for n in 2..=5 {
            let t = catalog::dehn_z(n);
            let (count, _) = count_colorings(&sys, &t);
            assert_eq!(count, BigUint::from((n * n) as u32));
        }
        // over x4 the diagram system must agree with the bundled trefoil
        // equations (independent brute-force on both routes)
        let x4 = catalog::x4();
        let table = catalog::system("8_1").unwrap();
        let direct = brute_force_count(&sys, &x4, 100_000).unwrap();
        assert_eq!(direct, brute_force_count(&table, &x4, 100_000).unwrap());
        assert_eq!(count_colorings(&sys, &x4).0, direct);
        assert_eq!(direct, BigUint::from(16u32));
    }

    /// The bundled table tensor is not a quasigroup, and counting with it
    /// is not a diagram invariant: the planar trefoil diagram disagrees
    /// with the bundled trefoil equations.
    #[test]
    fn table_tensor_is_not_diagram_invariant() {
        let x3 = catalog::x3();
        let (rad, _) = trace_faces(&trefoil_pd()).unwrap();
        let diagram_count = count_colorings(&emit_equations(&rad), &x3).0;
        let table_count = count_colorings(&catalog::system("8_1").unwrap(), &x3).0;
        assert_eq!(table_count, BigUint::from(15u32));
        assert_eq!(diagram_count, BigUint::from(8u32));
    }

    #[test]
    fn unknot_rad_counts_squared() {
        let sys = emit_equations(&Rad::unknot());
        // no crossings, so this holds for any tensor, valid or not
        assert_eq!(count_colorings(&sys, &catalog::x3()).0, BigUint::from(9u32));
        assert_eq!(count_colorings(&sys, &catalog::x4()).0, BigUint::from(16u32));
    }

    #[test]
    fn mirror_reverse_preserves_equations_exactly() {
        let (rad, _) = trace_faces(&trefoil_pd()).unwrap();
        let mirrored = mirror_reverse(&rad);
        let mut a = emit_equations(&rad).tri_eqs;
        let mut b = emit_equations(&mirrored).tri_eqs;
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert!(mirrored.crossings.iter().zip(&rad.crossings).all(|(m, o)| m.sign == -o.sign));
        assert_eq!(mirror_reverse(&mirrored), rad);
    }

    #[test]
    fn mirror_reverse_of_unknot_is_identity_system() {
        let rad = Rad::unknot();
        assert_eq!(emit_equations(&mirror_reverse(&rad)), emit_equations(&rad));
    }

    #[test]
    fn r1_kink_preserves_counts() {
        let unknot = Rad::unknot();
        for t in [catalog::x4(), catalog::dehn_z(3), catalog::dehn_z(4)] {
            let squared = BigUint::from(t.size() * t.size());
            for side in [KinkSide::Left, KinkSide::Right] {
                for sign in [1, -1] {
                    let kinked = add_r1_kink(&unknot, 0, side, sign).unwrap();
                    assert_eq!(kinked.crossings.len(), 1);
                    assert_eq!(kinked.region_count, 3);
                    let sys = emit_equations(&kinked);
                    assert_eq!(count_colorings(&sys, &t).0, squared);
                    assert_eq!(brute_force_count(&sys, &t, 1000).unwrap(), squared);
                }
            }
        }
    }

    #[test]
    fn r1_kink_on_trefoil_preserves_counts() {
        let (rad, _) = trace_faces(&trefoil_pd()).unwrap();
        for t in [catalog::x4(), catalog::dehn_z(3)] {
            let base = count_colorings(&emit_equations(&rad), &t).0;
            for edge in 0..rad.edges.len() {
                for side in [KinkSide::Left, KinkSide::Right] {
                    for sign in [1, -1] {
                        let kinked = add_r1_kink(&rad, edge, side, sign).unwrap();
                        let (count, _) = count_colorings(&emit_equations(&kinked), &t);
                        assert_eq!(count, base, "edge {edge}");
                    }
                }
            }
        }
    }

    #[test]
    fn two_opposite_kinks_preserve_counts() {
        let x4 = catalog::x4();
        let once = add_r1_kink(&Rad::unknot(), 0, KinkSide::Left, 1).unwrap();
        let twice = add_r1_kink(&once, once.edges.len() - 1, KinkSide::Right, -1).unwrap();
        assert_eq!(twice.crossings.len(), 2);
        let sys = emit_equations(&twice);
        assert_eq!(count_colorings(&sys, &x4).0, BigUint::from(16u32));
    }

    #[test]
    fn alternate_trefoil_diagrams_agree() {
        // the same knot through three stored diagrams: reduced, with a
        // kink, and with an extra cancelling crossing pair
        let diagrams: Vec<Rad> = ["pd/trefoil.json", "pd/trefoil_kinked.json", "pd/trefoil_r2.json"]
            .iter()
            .map(|p| {
                let pd = PdCode::parse(catalog::bundled_file(p).unwrap()).unwrap();
                trace_faces(&pd).unwrap().0
            })
            .collect();
        assert_eq!(diagrams[0].crossings.len(), 3);
        assert_eq!(diagrams[1].crossings.len(), 4);
        assert_eq!(diagrams[2].crossings.len(), 5);
        let mut tensors = vec![catalog::x4()];
        for n in 2..=5 {
            tensors.push(catalog::dehn_z(n));
        }
        for t in &tensors {
            let counts: Vec<BigUint> = diagrams
                .iter()
                .map(|rad| count_colorings(&emit_equations(rad), t).0)
                .collect();
            assert_eq!(counts[0], counts[1], "size {}", t.size());
            assert_eq!(counts[0], counts[2], "size {}", t.size());
        }
    }

    #[test]
    fn kink_rejects_bad_edge() {
        assert!(matches!(
            add_r1_kink(&Rad::unknot(), 7, KinkSide::Left, 1),
            Err(DiagramError::BadEdgeIndex(7))
        ));
    }

    #[test]
    fn trace_rejects_bad_edge_multiplicity() {
        let pd = PdCode {
            crossings: vec![PdCrossing { sign: 1, slots: [0, 1, 2, 3] }],
        };
        assert!(matches!(trace_faces(&pd), Err(DiagramError::EdgeOccurrence { .. })));
    }

    #[test]
    fn trace_rejects_inconsistent_flow() {
        // edge 0 is outgoing at both ends
        let pd = PdCode {
            crossings: vec![
                PdCrossing { sign: 1, slots: [1, 0, 2, 3] },
                PdCrossing { sign: 1, slots: [2, 0, 1, 3] },
            ],
        };
        assert!(matches!(trace_faces(&pd), Err(DiagramError::FlowInconsistent { .. })));
    }

    #[test]
    fn trace_rejects_disconnected() {
        // two disjoint kinked unknots
        let pd = PdCode {
            crossings: vec![
                PdCrossing { sign: -1, slots: [0, 1, 1, 0] },
                PdCrossing { sign: -1, slots: [2, 3, 3, 2] },
            ],
        };
        assert!(matches!(trace_faces(&pd), Err(DiagramError::Disconnected)));
    }

    #[test]
    fn trace_rejects_empty() {
        let pd = PdCode { crossings: vec![] };
        assert!(matches!(trace_faces(&pd), Err(DiagramError::Empty)));
    }
}
