//! Surface-link presentations: triplane and multiplane diagrams built from
//! trivial tangles in plat normal form, marked-vertex diagrams, and the
//! spun-knot triplane generator.
//!
//! A trivial tangle on `b` strands is stored as a braid word on `2b`
//! strands followed by caps joining consecutive top positions
//! `(1,2), (3,4), ..` — reading the word from the tangle boundary inward.
//! Letter `+j` crosses the strand at position `j` over the strand at
//! `j+1`; `-j` crosses it under.
//!
//! Compiling a multiplane diagram to an equation system sweeps each tangle
//! from the boundary: the `2b` boundary gap regions (with the single outer
//! region shared by the extreme gaps) are variables shared by every
//! tangle, each crossing introduces one fresh region variable and one
//! crossing equation, and each cap merges the two regions flanking it.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colorsys::EquationSystem;
use crate::diagrams::{crossing_equation, PdCode, PdCrossing, Rad, RadCrossing};

#[derive(Debug, Error)]
pub enum SurfaceError {
    #[error("braid generator {letter} out of range for {strands} strands")]
    BadGenerator { letter: i32, strands: usize },
    #[error("endpoint signs must be +-1 and of length {want}, got {got}")]
    BadSigns { want: usize, got: usize },
    #[error("diagram needs at least 3 tangles, got {0}")]
    TooFewTangles(usize),
    #[error("tangle strand counts disagree")]
    MixedBridges,
    #[error("diagram orientation is invalid: some strand joins equal signs")]
    InvalidOrientation,
    #[error("1-bridge diagrams admit no braid transposition")]
    NoGenerators,
    #[error("plat closure has {0} components; a knot is required")]
    MultiComponent(usize),
    #[error("coloring count must be positive")]
    ZeroCount,
    #[error("tribracket size must be at least 2")]
    TinyTribracket,
    #[error("smoothing choices: got {got}, want {want}")]
    ChoiceCount { got: usize, want: usize },
    #[error("parse: {0}")]
    Parse(#[from] serde_json::Error),
}

fn check_braid(braid: &[i32], strands: usize) -> Result<(), SurfaceError> {
    for &letter in braid {
        let j = letter.unsigned_abs() as usize;
        if letter == 0 || j >= strands {
            return Err(SurfaceError::BadGenerator { letter, strands });
        }
    }
    Ok(())
}

/// A trivial tangle in plat normal form: braid word plus consecutive caps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialTangle {
    pub braid: Vec<i32>,
}

impl TrivialTangle {
    /// The involution pairing boundary punctures through the tangle.
    fn matching(&self, bridges: usize) -> Vec<usize> {
        let n = 2 * bridges;
        let mut occupant: Vec<usize> = (0..n).collect();
        for &letter in &self.braid {
            let p = letter.unsigned_abs() as usize - 1;
            occupant.swap(p, p + 1);
        }
        let mut mate = vec![0; n];
        for cap in 0..bridges {
            let (a, b) = (occupant[2 * cap], occupant[2 * cap + 1]);
            mate[a] = b;
            mate[b] = a;
        }
        mate
    }
}

/// An oriented `(b; c_1, .., c_n)` multiplane diagram (`n = 3` is a
/// triplane). Endpoint signs are shared by all tangles: `-1` marks a
/// source (the strand leaves the bridge sphere), `+1` a sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriplaneDiagram {
    pub bridges: usize,
    pub endpoint_signs: Vec<i8>,
    pub tangles: Vec<TrivialTangle>,
}

impl TriplaneDiagram {
    pub fn check_well_formed(&self) -> Result<(), SurfaceError> {
        if self.tangles.len() < 3 {
            return Err(SurfaceError::TooFewTangles(self.tangles.len()));
        }
        let want = 2 * self.bridges;
        if self.endpoint_signs.len() != want
            || self.endpoint_signs.iter().any(|&s| s != 1 && s != -1)
        {
            return Err(SurfaceError::BadSigns { want, got: self.endpoint_signs.len() });
        }
        for tangle in &self.tangles {
            check_braid(&tangle.braid, want)?;
        }
        Ok(())
    }

    pub fn tangle_count(&self) -> usize {
        self.tangles.len()
    }
}

/// Checks that every strand of every tangle joins a `+1` endpoint to a
/// `-1` endpoint.
pub fn validate_orientation(tp: &TriplaneDiagram) -> Result<bool, SurfaceError> {
    tp.check_well_formed()?;
    for tangle in &tp.tangles {
        let mate = tangle.matching(tp.bridges);
        for p in 0..2 * tp.bridges {
            if tp.endpoint_signs[p] != -tp.endpoint_signs[mate[p]] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sweeps one tangle, appending fresh region variables and constraints to
/// `sys`. `sector[i]` starts as the shared boundary variables.
fn sweep_tangle(
    sys: &mut EquationSystem,
    tangle: &TrivialTangle,
    bridges: usize,
    signs: &[i8],
) {
    let n = 2 * bridges;
    // sector i lies left of strand position i; both extremes are the outer region
    let mut sector: Vec<usize> = (0..n).chain(std::iter::once(0)).collect();
    let mut up: Vec<bool> = signs.iter().map(|&s| s == -1).collect();
    for &letter in &tangle.braid {
        let p = letter.unsigned_abs() as usize - 1;
        let eps: i8 = if letter > 0 { 1 } else { -1 };
        let fresh = sys.var_count;
        sys.var_count += 1;
        let (s, w, e, nn) = (sector[p + 1], sector[p], sector[p + 2], fresh);
        let sign = if up[p] == up[p + 1] { eps } else { -eps };
        let c = match (up[p], up[p + 1]) {
            (true, true) => RadCrossing { sign, south: s, west: w, east: e, north: nn },
            (false, false) => RadCrossing { sign, south: nn, west: e, east: w, north: s },
            (true, false) => RadCrossing { sign, south: w, west: nn, east: s, north: e },
            (false, true) => RadCrossing { sign, south: e, west: s, east: nn, north: w },
        };
        sys.tri_eqs.push(crossing_equation(&c));
        sector[p + 1] = fresh;
        up.swap(p, p + 1);
    }
    for cap in 0..bridges {
        debug_assert_ne!(up[2 * cap], up[2 * cap + 1], "cap joins opposing strands");
        sys.push_eq(sector[2 * cap], sector[2 * cap + 2]);
    }
}

/// Compiles an oriented multiplane diagram to its region-equation system.
/// Variables `0..2b` are the shared boundary regions (0 is the outer
/// region); the rest are tangle-interior regions.
pub fn triplane_to_system(tp: &TriplaneDiagram) -> Result<EquationSystem, SurfaceError> {
    if !validate_orientation(tp)? {
        return Err(SurfaceError::InvalidOrientation);
    }
    let mut sys = EquationSystem::new(2 * tp.bridges);
    for tangle in &tp.tangles {
        sweep_tangle(&mut sys, tangle, tp.bridges, &tp.endpoint_signs);
    }
    Ok(sys)
}

/// Patch numbers: `c_i` counts the components of the union of tangle `i`
/// with the mirror of tangle `i+1`, i.e. the cycles of the two strand
/// matchings overlaid.
pub fn patch_numbers(tp: &TriplaneDiagram) -> Result<Vec<usize>, SurfaceError> {
    tp.check_well_formed()?;
    let matchings: Vec<Vec<usize>> =
        tp.tangles.iter().map(|t| t.matching(tp.bridges)).collect();
    let n = tp.tangles.len();
    let punctures = 2 * tp.bridges;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let (a, b) = (&matchings[i], &matchings[(i + 1) % n]);
        let mut seen = vec![false; punctures];
        let mut cycles = 0;
        for start in 0..punctures {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            loop {
                seen[at] = true;
                let step = b[a[at]];
                seen[a[at]] = true;
                at = step;
                if at == start {
                    break;
                }
            }
        }
        out.push(cycles);
    }
    Ok(out)
}

/// `chi(F) = (2 - n) b + sum c_i`; reduces to `c1 + c2 + c3 - b` for
/// triplanes.
pub fn euler_characteristic(tp: &TriplaneDiagram) -> Result<i64, SurfaceError> {
    let c = patch_numbers(tp)?;
    let n = tp.tangles.len() as i64;
    Ok((2 - n) * tp.bridges as i64 + c.iter().map(|&x| x as i64).sum::<i64>())
}

/// Exact evaluation of the two coloring inequalities of a multiplane
/// presentation. Logs are never taken: `-1 + log_q(col) <= m` is decided
/// as `col <= q^(m+1)` by integer power comparison.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub count: String,
    pub tribracket_size: usize,
    pub patch_numbers: Vec<usize>,
    pub bridges: usize,
    pub euler_characteristic: i64,
    /// `min(c_i) - (-1 + ceil(log_q count))`; inequality (i) holds iff >= 0.
    pub slack_patch: i64,
    /// `(n-2) b - (-n - chi + n ceil_log_q(count))`; inequality (ii) holds iff >= 0.
    pub slack_bridge: i64,
    pub satisfied: bool,
}

/// Smallest `t >= 0` with `q^t >= m` (for `m >= 1`).
fn ceil_log(q: usize, m: &BigUint) -> i64 {
    let q = BigUint::from(q);
    let mut power = BigUint::from(1u32);
    let mut t = 0i64;
    while power < *m {
        power *= &q;
        t += 1;
    }
    t
}

pub fn bounds_report(
    tp: &TriplaneDiagram,
    count: &BigUint,
    x_size: usize,
) -> Result<BoundsReport, SurfaceError> {
    if x_size < 2 {
        return Err(SurfaceError::TinyTribracket);
    }
    if *count == BigUint::ZERO {
        return Err(SurfaceError::ZeroCount);
    }
    let patches = patch_numbers(tp)?;
    let chi = euler_characteristic(tp)?;
    let n = tp.tangles.len() as i64;
    let b = tp.bridges as i64;
    let min_c = *patches.iter().min().expect("at least 3 tangles") as i64;
    let log_count = ceil_log(x_size, count);
    let log_count_n = ceil_log(x_size, &count.pow(n as u32));
    let slack_patch = min_c + 1 - log_count;
    let slack_bridge = (n - 2) * b + n + chi - log_count_n;
    Ok(BoundsReport {
        count: count.to_string(),
        tribracket_size: x_size,
        patch_numbers: patches,
        bridges: tp.bridges,
        euler_characteristic: chi,
        slack_patch,
        slack_bridge,
        satisfied: slack_patch >= 0 && slack_bridge >= 0,
    })
}

/// Appends the same transposition `sigma_j^sign` at the boundary end of
/// every tangle and transposes the endpoint signs. Coloring counts are
/// preserved: all tangles gain the same equation and the fresh region is
/// determined.
pub fn mutual_braid_transposition(
    tp: &TriplaneDiagram,
    j: usize,
    sign: i8,
) -> Result<TriplaneDiagram, SurfaceError> {
    tp.check_well_formed()?;
    if tp.bridges < 2 {
        return Err(SurfaceError::NoGenerators);
    }
    if j == 0 || j >= 2 * tp.bridges {
        return Err(SurfaceError::BadGenerator { letter: j as i32, strands: 2 * tp.bridges });
    }
    let letter = if sign >= 0 { j as i32 } else { -(j as i32) };
    let mut out = tp.clone();
    for tangle in &mut out.tangles {
        tangle.braid.insert(0, letter);
    }
    out.endpoint_signs.swap(j - 1, j);
    Ok(out)
}

/// A marked vertex, regions listed clockwise from north.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkedVertex {
    pub north: usize,
    pub east: usize,
    pub south: usize,
    pub west: usize,
}

/// Which smoothing replaces a marked vertex: `A` joins north to south,
/// `B` joins east to west.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothing {
    A,
    B,
}

/// A planar diagram with classical crossings and marked (saddle) vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedVertexDiagram {
    pub region_count: usize,
    pub crossings: Vec<RadCrossing>,
    pub marked: Vec<MarkedVertex>,
}

/// Crossings contribute their crossing equations; each marked vertex
/// merges north with south and east with west, so a coloring induces
/// colorings of both smoothed diagrams.
pub fn marked_vertex_to_system(mvd: &MarkedVertexDiagram) -> EquationSystem {
    let mut sys = EquationSystem::new(mvd.region_count);
    for c in &mvd.crossings {
        sys.tri_eqs.push(crossing_equation(c));
    }
    for v in &mvd.marked {
        sys.push_eq(v.north, v.south);
        sys.push_eq(v.east, v.west);
    }
    sys
}

/// Replaces each marked vertex by the chosen smoothing, merging the
/// corresponding region pair. The result is a classical diagram (with no
/// edge table).
pub fn smooth(
    mvd: &MarkedVertexDiagram,
    choices: &[Smoothing],
) -> Result<Rad, SurfaceError> {
    if choices.len() != mvd.marked.len() {
        return Err(SurfaceError::ChoiceCount { got: choices.len(), want: mvd.marked.len() });
    }
    let mut parent: Vec<usize> = (0..mvd.region_count).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            parent[i] = find(parent, parent[i]);
        }
        parent[i]
    }
    for (v, choice) in mvd.marked.iter().zip(choices) {
        let (a, b) = match choice {
            Smoothing::A => (v.north, v.south),
            Smoothing::B => (v.east, v.west),
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut compact = vec![usize::MAX; mvd.region_count];
    let mut next = 0;
    for r in 0..mvd.region_count {
        let root = find(&mut parent, r);
        if compact[root] == usize::MAX {
            compact[root] = next;
            next += 1;
        }
        compact[r] = compact[root];
    }
    Ok(Rad {
        region_count: next,
        crossings: mvd
            .crossings
            .iter()
            .map(|c| RadCrossing {
                sign: c.sign,
                south: compact[c.south],
                west: compact[c.west],
                east: compact[c.east],
                north: compact[c.north],
            })
            .collect(),
        edges: Vec::new(),
    })
}

/// A knot written as a `2k`-strand braid closed by consecutive caps at
/// both ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatPresentation {
    pub bridges: usize,
    pub braid: Vec<i32>,
}

/// Circle structure of a plat closure: strand directions and component
/// count.
struct PlatWalk {
    components: usize,
    /// direction of the braid strand starting at each bottom position
    /// (`true` = oriented away from the bottom cups)
    bottom_up: Vec<bool>,
}

fn walk_plat(plat: &PlatPresentation) -> Result<PlatWalk, SurfaceError> {
    let n = 2 * plat.bridges;
    check_braid(&plat.braid, n)?;
    // token = bottom position; find each token's top position
    let mut occupant: Vec<usize> = (0..n).collect();
    for &letter in &plat.braid {
        let p = letter.unsigned_abs() as usize - 1;
        occupant.swap(p, p + 1);
    }
    let mut top_of = vec![0; n];
    for (pos, &token) in occupant.iter().enumerate() {
        top_of[token] = pos;
    }
    let mut token_at_top = vec![0; n];
    for token in 0..n {
        token_at_top[top_of[token]] = token;
    }
    let mut bottom_up = vec![false; n];
    let mut visited = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        components += 1;
        let (mut token, mut going_up) = (start, true);
        loop {
            visited[token] = true;
            bottom_up[token] = going_up;
            token = if going_up {
                // over the top cap, then downward
                token_at_top[top_of[token] ^ 1]
            } else {
                // around the bottom cup, then upward
                token ^ 1
            };
            going_up = !going_up;
            if token == start && going_up {
                break;
            }
        }
    }
    Ok(PlatWalk { components, bottom_up })
}

impl PlatPresentation {
    /// Number of link components of the plat closure.
    pub fn components(&self) -> Result<usize, SurfaceError> {
        Ok(walk_plat(self)?.components)
    }

    /// The PD code of the plat closure of a knot. Fails on multi-component
    /// closures and on crossingless plats (a PD code needs a crossing).
    pub fn to_pd(&self) -> Result<PdCode, SurfaceError> {
        let walk = walk_plat(self)?;
        if walk.components != 1 {
            return Err(SurfaceError::MultiComponent(walk.components));
        }
        let n = 2 * self.bridges;
        // edge union-find: caps merge the edges they join
        let mut edge_parent: Vec<usize> = Vec::new();
        let fresh_edge = |parents: &mut Vec<usize>| {
            parents.push(parents.len());
            parents.len() - 1
        };
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                parent[i] = find(parent, parent[i]);
            }
            parent[i]
        }

        let mut occupant: Vec<usize> = (0..n).collect();
        let mut up: Vec<bool> = (0..n).map(|p| walk.bottom_up[p]).collect();
        let mut current: Vec<usize> = Vec::with_capacity(n);
        for cup in 0..self.bridges {
            let e = fresh_edge(&mut edge_parent);
            current.push(e);
            current.push(e);
            let _ = cup;
        }
        // crossings as (sign, slots); slots hold provisional edge ids
        let mut crossings: Vec<(i8, [usize; 4])> = Vec::new();
        for &letter in &self.braid {
            let p = letter.unsigned_abs() as usize - 1;
            let eps: i8 = if letter > 0 { 1 } else { -1 };
            let sw = current[p];
            let se = current[p + 1];
            let nw = fresh_edge(&mut edge_parent);
            let ne = fresh_edge(&mut edge_parent);
            // the under-arc's incoming end fixes slot 0; slots then run
            // counterclockwise: NE -> NW -> SW -> SE
            let under_left = eps < 0; // sigma^+ crosses the left strand over
            let under_up = if under_left { up[p] } else { up[p + 1] };
            let slots = match (under_left, under_up) {
                // under-arc occupies SW/NE
                (true, true) => [sw, se, ne, nw],
                (true, false) => [ne, nw, sw, se],
                // under-arc occupies SE/NW
                (false, true) => [se, ne, nw, sw],
                (false, false) => [nw, sw, se, ne],
            };
            let sign = if up[p] == up[p + 1] { eps } else { -eps };
            crossings.push((sign, slots));
            current[p] = nw;
            current[p + 1] = ne;
            occupant.swap(p, p + 1);
            up.swap(p, p + 1);
        }
        for cap in 0..self.bridges {
            let (a, b) = (current[2 * cap], current[2 * cap + 1]);
            let (ra, rb) = (find(&mut edge_parent, a), find(&mut edge_parent, b));
            if ra != rb {
                edge_parent[ra.max(rb)] = ra.min(rb);
            }
        }
        // compact edge ids
        let mut compact = std::collections::BTreeMap::new();
        let mut pd = Vec::with_capacity(crossings.len());
        for (sign, slots) in crossings {
            let mut mapped = [0usize; 4];
            for (i, slot) in slots.into_iter().enumerate() {
                let root = find(&mut edge_parent, slot);
                let next = compact.len();
                mapped[i] = *compact.entry(root).or_insert(next);
            }
            pd.push(PdCrossing { sign, slots: mapped });
        }
        if pd.is_empty() {
            return Err(SurfaceError::MultiComponent(1));
        }
        Ok(PdCode { crossings: pd })
    }

    /// Region-coloring count of the plat closure as a classical diagram.
    pub fn classical_count(&self, t: &crate::tribracket::Tribracket) -> Result<BigUint, SurfaceError> {
        let walk = walk_plat(self)?;
        if self.braid.is_empty() {
            // crossingless unlink: independent regions count components + 1
            return Ok(BigUint::from(t.size()).pow(walk.components as u32 + 1));
        }
        if walk.components != 1 {
            return Err(SurfaceError::MultiComponent(walk.components));
        }
        let pd = self.to_pd()?;
        let (rad, _) = crate::diagrams::trace_faces(&pd)
            .expect("plat closures trace to connected planar diagrams");
        Ok(crate::colorsys::count_colorings(&crate::diagrams::emit_equations(&rad), t).0)
    }
}

/// Local tangle patterns replacing one interior plat minimum. The six new
/// punctures of a minimum are matched three different ways, rotating which
/// pair continues into the braid box; pairwise the patterns close into a
/// single cycle, which keeps every patch number equal to the bridge number
/// of the input plat.
///
/// Offsets are relative to the first puncture of the group: `feed` rises
/// into the braid box, `arcs` are capped off (outer one first).
const MIN_PATTERNS: [([usize; 2], [[usize; 2]; 2]); 3] = [
    ([0, 5], [[1, 4], [2, 3]]),
    ([0, 1], [[2, 5], [3, 4]]),
    ([4, 5], [[0, 3], [1, 2]]),
];

/// Builds the triplane diagram of the spun knot of a plat-presented knot.
///
/// The spun surface has bridge number `3k - 2`: the leftmost minimum of
/// the plat becomes punctures 1 and 2, every other minimum becomes six
/// consecutive punctures, and each tangle carries a copy of the plat's
/// braid word. The coloring count of the output equals the classical
/// count of the input for every tribracket.
pub fn spun_triplane(plat: &PlatPresentation) -> Result<TriplaneDiagram, SurfaceError> {
    let walk = walk_plat(plat)?;
    if walk.components != 1 {
        return Err(SurfaceError::MultiComponent(walk.components));
    }
    let k = plat.bridges;
    let b = 3 * k - 2;
    let punctures = 2 * b;
    let sign_of = |up: bool| if up { -1i8 } else { 1 };

    let mut endpoint_signs = vec![0i8; punctures];
    endpoint_signs[0] = sign_of(walk.bottom_up[0]);
    endpoint_signs[1] = sign_of(walk.bottom_up[1]);
    for g in 1..k {
        let base = 2 + 6 * (g - 1);
        let s = sign_of(walk.bottom_up[2 * g]);
        for i in 0..6 {
            endpoint_signs[base + i] = if i % 2 == 0 { s } else { -s };
        }
    }

    let mut tangles = Vec::with_capacity(3);
    for (feed_off, arcs_off) in MIN_PATTERNS {
        // targets: feeds to the braid box positions 0..2k in puncture
        // order, arcs to consecutive capped pairs after them
        let mut target = vec![usize::MAX; punctures];
        let mut depth = vec![0u8; punctures];
        target[0] = 0;
        target[1] = 1;
        let mut arc_slot = 2 * k;
        for g in 1..k {
            let base = 2 + 6 * (g - 1);
            target[base + feed_off[0]] = 2 * g;
            target[base + feed_off[1]] = 2 * g + 1;
            for (nesting, arc) in arcs_off.iter().enumerate() {
                for &end in arc {
                    target[base + end] = arc_slot;
                    arc_slot += 1;
                    depth[base + end] = nesting as u8 + 1;
                }
            }
        }
        debug_assert!(target.iter().all(|&t| t != usize::MAX));

        // route by selection sort; at each swap the deeper strand (inner
        // arcs deepest, feeds on top) passes under
        let mut braid = Vec::new();
        let mut order: Vec<usize> = (0..punctures).collect();
        for t in 0..punctures {
            let mut col = order.iter().position(|&p| target[p] == t).expect("some strand");
            while col > t {
                let (left, right) = (order[col - 1], order[col]);
                debug_assert_ne!(depth[left], depth[right]);
                let j = col as i32;
                braid.push(if depth[left] > depth[right] { -j } else { j });
                order.swap(col - 1, col);
                col -= 1;
            }
        }
        braid.extend_from_slice(&plat.braid);
        tangles.push(TrivialTangle { braid });
    }

    Ok(TriplaneDiagram { bridges: b, endpoint_signs, tangles })
}

/// JSON form of a multiplane file; caps are implicitly consecutive.
#[derive(Debug, Serialize, Deserialize)]
pub struct TriplaneFile {
    pub bridges: usize,
    pub signs: Vec<i8>,
    pub tangles: Vec<TrivialTangle>,
}

impl TriplaneFile {
    pub fn parse(json: &str) -> Result<TriplaneDiagram, SurfaceError> {
        let file: TriplaneFile = serde_json::from_str(json)?;
        let tp = TriplaneDiagram {
            bridges: file.bridges,
            endpoint_signs: file.signs,
            tangles: file.tangles,
        };
        tp.check_well_formed()?;
        Ok(tp)
    }

    pub fn render(tp: &TriplaneDiagram) -> String {
        let file = TriplaneFile {
            bridges: tp.bridges,
            signs: tp.endpoint_signs.clone(),
            tangles: tp.tangles.clone(),
        };
        serde_json::to_string_pretty(&file).expect("serialize triplane")
    }
}

/// JSON form of a plat file.
impl PlatPresentation {
    pub fn parse(json: &str) -> Result<Self, SurfaceError> {
        let plat: PlatPresentation = serde_json::from_str(json)?;
        check_braid(&plat.braid, 2 * plat.bridges)?;
        Ok(plat)
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialize plat")
    }
}

/// JSON forms of marked-vertex files.
#[derive(Debug, Serialize, Deserialize)]
struct MvdFileCrossing {
    sign: i8,
    /// regions at (south, west, east, north) of the canonical frame
    swen: [usize; 4],
}

#[derive(Debug, Serialize, Deserialize)]
struct MvdFileVertex {
    nesw: [usize; 4],
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MvdFile {
    regions: usize,
    crossings: Vec<MvdFileCrossing>,
    marked: Vec<MvdFileVertex>,
}

impl MvdFile {
    pub fn parse(json: &str) -> Result<MarkedVertexDiagram, SurfaceError> {
        let file: MvdFile = serde_json::from_str(json)?;
        Ok(MarkedVertexDiagram {
            region_count: file.regions,
            crossings: file
                .crossings
                .iter()
                .map(|c| RadCrossing {
                    sign: c.sign,
                    south: c.swen[0],
                    west: c.swen[1],
                    east: c.swen[2],
                    north: c.swen[3],
                })
                .collect(),
            marked: file
                .marked
                .iter()
                .map(|v| MarkedVertex {
                    north: v.nesw[0],
                    east: v.nesw[1],
                    south: v.nesw[2],
                    west: v.nesw[3],
                })
                .collect(),
        })
    }
}
