use crate::diagram::Diagram;
use crate::dsu::Dsu;
use crate::error::DiagramError;
use crate::half::HalfDiagram;
use combinatorics::Perm;

/// Result of stacking two diagrams: the boundary-connectivity diagram plus
/// the interior component counts that carry the scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub diagram: Diagram,
    pub loops: usize,
    pub paths: usize,
}

/// Stacks `top` on top of `bottom`, gluing `top`'s bottom row to `bottom`'s
/// top row. In the algebra, `x * y` is `compose(top = y, bottom = x)`.
///
/// An interior component is a loop when every middle vertex in it lies in a
/// block of size at least two on both constituents; otherwise (some vertex
/// sits in a singleton block on one side) it is a path. On diagrams whose
/// blocks all have at most two vertices this is the familiar closed-cycle /
/// open-strand distinction.
pub fn compose(top: &Diagram, bottom: &Diagram) -> Result<Composition, DiagramError> {
    let n = top.n();
    if bottom.n() != n {
        return Err(DiagramError::Dimension(format!(
            "cannot compose sizes {} and {}",
            top.n(),
            bottom.n()
        )));
    }
    // Slots: 0..n result top, n..2n the glued middle row, 2n..3n result bottom.
    let mut dsu = Dsu::new(3 * n);
    for block in top.blocks() {
        for w in block.windows(2) {
            dsu.union(w[0], w[1]);
        }
    }
    for block in bottom.blocks() {
        for w in block.windows(2) {
            dsu.union(w[0] + n, w[1] + n);
        }
    }
    let top_idx = top.block_index();
    let bottom_idx = bottom.block_index();
    let mut blocks = Vec::new();
    let mut loops = 0;
    let mut paths = 0;
    for comp in dsu.components() {
        let boundary: Vec<usize> = comp
            .iter()
            .filter(|&&s| s < n || s >= 2 * n)
            .map(|&s| if s < n { s } else { s - n })
            .collect();
        if !boundary.is_empty() {
            blocks.push(boundary);
            continue;
        }
        let closed = comp.iter().all(|&s| {
            let m = s - n;
            top.blocks()[top_idx[n + m]].len() >= 2 && bottom.blocks()[bottom_idx[m]].len() >= 2
        });
        if closed {
            loops += 1;
        } else {
            paths += 1;
        }
    }
    Ok(Composition {
        diagram: Diagram::new(n, blocks)?,
        loops,
        paths,
    })
}

/// A diagram cut into its two rows: `lower` on the top-row vertices, `upper`
/// on the bottom-row vertices, and the permutation wiring defect `i` of the
/// lower half to defect `perm(i)` of the upper half (defects ordered by
/// least vertex on each side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitData {
    pub lower: HalfDiagram,
    pub upper: HalfDiagram,
    pub perm: Perm,
}

pub fn split(d: &Diagram) -> SplitData {
    let n = d.n();
    let mut lower_blocks = Vec::new();
    let mut lower_defect = Vec::new();
    let mut upper_blocks = Vec::new();
    let mut upper_defect = Vec::new();
    // (least lower vertex, least upper vertex) of each propagating block
    let mut wiring: Vec<(usize, usize)> = Vec::new();
    for block in d.blocks() {
        let lows: Vec<usize> = block.iter().copied().filter(|&s| s < n).collect();
        let highs: Vec<usize> = block.iter().copied().filter(|&s| s >= n).map(|s| s - n).collect();
        let propagating = !lows.is_empty() && !highs.is_empty();
        if propagating {
            wiring.push((lows[0], highs[0]));
        }
        if !lows.is_empty() {
            lower_blocks.push(lows);
            lower_defect.push(propagating);
        }
        if !highs.is_empty() {
            upper_blocks.push(highs);
            upper_defect.push(propagating);
        }
    }
    let lower = HalfDiagram::new(n, lower_blocks, lower_defect).expect("valid lower half");
    let upper = HalfDiagram::new(n, upper_blocks, upper_defect).expect("valid upper half");
    let mut lower_mins: Vec<usize> = wiring.iter().map(|&(l, _)| l).collect();
    let mut upper_mins: Vec<usize> = wiring.iter().map(|&(_, u)| u).collect();
    lower_mins.sort_unstable();
    upper_mins.sort_unstable();
    let mut images = vec![0; wiring.len()];
    for &(l, u) in &wiring {
        let i = lower_mins.binary_search(&l).expect("lower defect present");
        let j = upper_mins.binary_search(&u).expect("upper defect present");
        images[i] = j;
    }
    let perm = Perm::from_images(images).expect("defect wiring is a bijection");
    SplitData { lower, upper, perm }
}

pub fn join(s: &SplitData) -> Result<Diagram, DiagramError> {
    let n = s.lower.n();
    if s.upper.n() != n {
        return Err(DiagramError::Dimension(format!(
            "halves have sizes {} and {}",
            s.lower.n(),
            s.upper.n()
        )));
    }
    let k = s.lower.defect_count();
    if s.upper.defect_count() != k || s.perm.degree() != k {
        return Err(DiagramError::Defect(format!(
            "defect counts {} / {} with permutation of degree {}",
            k,
            s.upper.defect_count(),
            s.perm.degree()
        )));
    }
    let lower_defects = s.lower.defect_blocks();
    let upper_defects = s.upper.defect_blocks();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, block) in s.lower.blocks().iter().enumerate() {
        if !s.lower.is_defect(i) {
            blocks.push(block.clone());
        }
    }
    for (j, block) in s.upper.blocks().iter().enumerate() {
        if !s.upper.is_defect(j) {
            blocks.push(block.iter().map(|&v| v + n).collect());
        }
    }
    for (i, &lb) in lower_defects.iter().enumerate() {
        let ub = upper_defects[s.perm.apply(i)];
        let mut merged = s.lower.blocks()[lb].clone();
        merged.extend(s.upper.blocks()[ub].iter().map(|&v| v + n));
        blocks.push(merged);
    }
    Diagram::new(n, blocks)
}

/// Nonzero outcome of gluing two halves vertexwise (the Gram pairing).
/// Defect slot `i` of `t` lands in the same component as defect slot
/// `perm(i)` of `u`; interior components are counted as for `compose`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPairing {
    pub loops: usize,
    pub paths: usize,
    pub perm: Perm,
}

/// Glues `t` and `u` along their common row. Returns `None` (the pairing is
/// zero) unless every component contains exactly one defect of each half or
/// none at all.
pub fn pair_halves(
    t: &HalfDiagram,
    u: &HalfDiagram,
) -> Result<Option<HalfPairing>, DiagramError> {
    let n = t.n();
    if u.n() != n {
        return Err(DiagramError::Dimension(format!(
            "halves have sizes {} and {}",
            t.n(),
            u.n()
        )));
    }
    let mut dsu = Dsu::new(n);
    for block in t.blocks().iter().chain(u.blocks()) {
        for w in block.windows(2) {
            dsu.union(w[0], w[1]);
        }
    }
    let t_idx = t.block_index();
    let u_idx = u.block_index();
    let t_defects = t.defect_blocks();
    let u_defects = u.defect_blocks();
    let mut loops = 0;
    let mut paths = 0;
    let mut images = vec![usize::MAX; t_defects.len()];
    for comp in dsu.components() {
        let mut t_blocks: Vec<usize> = comp.iter().map(|&v| t_idx[v]).collect();
        let mut u_blocks: Vec<usize> = comp.iter().map(|&v| u_idx[v]).collect();
        t_blocks.sort_unstable();
        t_blocks.dedup();
        u_blocks.sort_unstable();
        u_blocks.dedup();
        let td: Vec<usize> = t_blocks.iter().copied().filter(|&b| t.is_defect(b)).collect();
        let ud: Vec<usize> = u_blocks.iter().copied().filter(|&b| u.is_defect(b)).collect();
        match (td.len(), ud.len()) {
            (0, 0) => {
                let closed = comp
                    .iter()
                    .all(|&v| t.blocks()[t_idx[v]].len() >= 2 && u.blocks()[u_idx[v]].len() >= 2);
                if closed {
                    loops += 1;
                } else {
                    paths += 1;
                }
            }
            (1, 1) => {
                let i = t_defects.binary_search(&td[0]).expect("defect index");
                let j = u_defects.binary_search(&ud[0]).expect("defect index");
                images[i] = j;
            }
            _ => return Ok(None),
        }
    }
    if t_defects.len() != u_defects.len() {
        return Ok(None);
    }
    let perm = Perm::from_images(images).expect("component rule yields a bijection");
    Ok(Some(HalfPairing { loops, paths, perm }))
}

/// Nonzero outcome of a diagram acting on a half. The surviving half is on
/// the diagram's bottom row; defect slot `i` of the input becomes defect
/// slot `perm(i)` of the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfAction {
    pub half: HalfDiagram,
    pub perm: Perm,
    pub loops: usize,
    pub paths: usize,
}

/// Acts on a half diagram by gluing `d`'s top row to it; the module element
/// lives above, `d` is appended from below, so iterated actions realize left
/// multiplication. Returns `None` when a defect strand dies or two defects
/// merge (the image falls into lower cells, i.e. the action is zero).
pub fn glue_onto_half(
    d: &Diagram,
    h: &HalfDiagram,
) -> Result<Option<HalfAction>, DiagramError> {
    let n = d.n();
    if h.n() != n {
        return Err(DiagramError::Dimension(format!(
            "diagram size {} acting on half of size {}",
            d.n(),
            h.n()
        )));
    }
    // Slots: 0..n the glued row (d's top), n..2n the result row (d's bottom).
    let mut dsu = Dsu::new(2 * n);
    for block in d.blocks() {
        for w in block.windows(2) {
            dsu.union(w[0], w[1]);
        }
    }
    for block in h.blocks() {
        for w in block.windows(2) {
            dsu.union(w[0], w[1]);
        }
    }
    let d_idx = d.block_index();
    let h_idx = h.block_index();
    let h_defects = h.defect_blocks();
    let mut loops = 0;
    let mut paths = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut defect: Vec<bool> = Vec::new();
    // (input defect slot, least result vertex of its component)
    let mut landed: Vec<(usize, usize)> = Vec::new();
    for comp in dsu.components() {
        let result: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&s| s >= n)
            .map(|s| s - n)
            .collect();
        let mut defects_here = Vec::new();
        for &s in comp.iter().filter(|&&s| s < n) {
            let b = h_idx[s];
            if h.is_defect(b) && h.blocks()[b][0] == s {
                defects_here.push(b);
            }
        }
        match defects_here.len() {
            0 => {
                if result.is_empty() {
                    let closed = comp.iter().all(|&s| {
                        d.blocks()[d_idx[s]].len() >= 2 && h.blocks()[h_idx[s]].len() >= 2
                    });
                    if closed {
                        loops += 1;
                    } else {
                        paths += 1;
                    }
                } else {
                    blocks.push(result);
                    defect.push(false);
                }
            }
            1 => {
                if result.is_empty() {
                    return Ok(None);
                }
                let slot = h_defects
                    .binary_search(&defects_here[0])
                    .expect("defect index");
                landed.push((slot, result[0]));
                blocks.push(result);
                defect.push(true);
            }
            _ => return Ok(None),
        }
    }
    let half = HalfDiagram::new(n, blocks, defect).expect("valid result half");
    let result_defects = half.defect_blocks();
    let mut images = vec![0; landed.len()];
    for &(slot, least) in &landed {
        let j = result_defects
            .iter()
            .position(|&b| half.blocks()[b][0] == least)
            .expect("landed defect present");
        images[slot] = j;
    }
    let perm = Perm::from_images(images).expect("defects map bijectively");
    Ok(Some(HalfAction {
        half,
        perm,
        loops,
        paths,
    }))
}
