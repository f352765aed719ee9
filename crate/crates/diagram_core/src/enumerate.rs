//! Exhaustive generators for set partitions, partial matchings, and
//! noncrossing partitions, visitor-style so large families need not be
//! materialized. All visitors receive blocks in canonical order (sorted
//! inside blocks, blocks by least element).

use crate::diagram::Diagram;

/// Visits every set partition of `{0..k}`.
pub fn for_each_set_partition(k: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
    fn rec(i: usize, k: usize, blocks: &mut Vec<Vec<usize>>, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if i == k {
            visit(blocks);
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, k, blocks, visit);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, k, blocks, visit);
        blocks.pop();
    }
    rec(0, k, &mut Vec::new(), visit);
}

pub fn set_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_set_partition(k, &mut |blocks| out.push(blocks.to_vec()));
    out
}

/// Visits every partition of `{0..k}` into blocks of size at most two
/// (perfect matchings only when `perfect` is set).
pub fn for_each_partial_matching(
    k: usize,
    perfect: bool,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    fn rec(
        used: &mut Vec<bool>,
        perfect: bool,
        blocks: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some(e) = used.iter().position(|&u| !u) else {
            visit(blocks);
            return;
        };
        used[e] = true;
        if !perfect {
            blocks.push(vec![e]);
            rec(used, perfect, blocks, visit);
            blocks.pop();
        }
        for p in e + 1..used.len() {
            if used[p] {
                continue;
            }
            used[p] = true;
            blocks.push(vec![e, p]);
            rec(used, perfect, blocks, visit);
            blocks.pop();
            used[p] = false;
        }
        used[e] = false;
    }
    rec(&mut vec![false; k], perfect, &mut Vec::new(), visit);
}

/// Visits every noncrossing partition of `{0..k}` whose blocks all satisfy
/// `may_close`; partial blocks are pruned as soon as `may_grow` rejects
/// them. `may_grow` must accept every proper prefix of an acceptable block.
pub fn for_each_noncrossing_partition(
    k: usize,
    may_grow: &dyn Fn(&[usize]) -> bool,
    may_close: &dyn Fn(&[usize]) -> bool,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    struct State<'a> {
        // intervals lo..hi of untouched elements, innermost last
        pending: Vec<(usize, usize)>,
        acc: Vec<Vec<usize>>,
        may_grow: &'a dyn Fn(&[usize]) -> bool,
        may_close: &'a dyn Fn(&[usize]) -> bool,
        visit: &'a mut dyn FnMut(&[Vec<usize>]),
    }

    fn regions(st: &mut State) {
        let Some((lo, hi)) = st.pending.pop() else {
            let mut out = st.acc.clone();
            out.sort_unstable_by_key(|b| b[0]);
            (st.visit)(&out);
            return;
        };
        if lo >= hi {
            regions(st);
        } else {
            let mut block = vec![lo];
            if (st.may_grow)(&block) {
                extend(lo + 1, hi, &mut block, st);
            }
        }
        st.pending.push((lo, hi));
    }

    // `block` occupies everything chosen so far; candidates are `from..hi`.
    fn extend(from: usize, hi: usize, block: &mut Vec<usize>, st: &mut State) {
        if (st.may_close)(block) {
            st.acc.push(block.clone());
            st.pending.push((from, hi));
            regions(st);
            st.pending.pop();
            st.acc.pop();
        }
        for c in from..hi {
            block.push(c);
            if (st.may_grow)(block) {
                st.pending.push((from, c));
                extend(c + 1, hi, block, st);
                st.pending.pop();
            }
            block.pop();
        }
    }

    let mut st = State {
        pending: vec![(0, k)],
        acc: Vec::new(),
        may_grow,
        may_close,
        visit,
    };
    regions(&mut st);
}

pub fn noncrossing_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_noncrossing_partition(k, &|_| true, &|_| true, &mut |blocks| {
        out.push(blocks.to_vec())
    });
    out
}

/// Visits every planar diagram on two rows of `n` vertices whose blocks all
/// satisfy `may_close`. Predicates receive partially built blocks as sorted
/// internal slot sets (`0..n` top, `n..2n` bottom); prefixes grow along the
/// boundary cycle, i.e. top vertices left to right then bottom vertices
/// right to left.
pub fn for_each_planar_diagram(
    n: usize,
    may_grow: &dyn Fn(&[usize]) -> bool,
    may_close: &dyn Fn(&[usize]) -> bool,
    visit: &mut dyn FnMut(&Diagram),
) {
    let to_slots = |positions: &[usize]| -> Vec<usize> {
        let mut slots: Vec<usize> = positions
            .iter()
            .map(|&p| if p < n { p } else { n + (2 * n - 1 - p) })
            .collect();
        slots.sort_unstable();
        slots
    };
    for_each_noncrossing_partition(
        2 * n,
        &|block| may_grow(&to_slots(block)),
        &|block| may_close(&to_slots(block)),
        &mut |blocks| {
            let slot_blocks = blocks.iter().map(|b| to_slots(b)).collect();
            let d = Diagram::new(n, slot_blocks).expect("generated blocks partition the slots");
            visit(&d);
        },
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use combinatorics::{bell, catalan, partial_matching_count, Int};

    #[test]
    fn set_partition_counts_are_bell() {
        for k in 0..=7 {
            let mut count = 0u64;
            for_each_set_partition(k, &mut |_| count += 1);
            assert_eq!(Int::from(count), bell(k));
        }
    }

    #[test]
    fn set_partitions_are_canonical() {
        for p in set_partitions(5) {
            for b in &p {
                assert!(b.windows(2).all(|w| w[0] < w[1]));
            }
            assert!(p.windows(2).all(|w| w[0][0] < w[1][0]));
        }
    }

    #[test]
    fn matching_counts() {
        for k in 0..=8 {
            let mut count = 0u64;
            for_each_partial_matching(k, false, &mut |_| count += 1);
            assert_eq!(Int::from(count), partial_matching_count(k));
        }
        let mut perfect = 0u64;
        for_each_partial_matching(6, true, &mut |_| perfect += 1);
        assert_eq!(perfect, 15);
        for_each_partial_matching(5, true, &mut |_| panic!("odd size has no perfect matching"));
    }

    #[test]
    fn noncrossing_counts_are_catalan() {
        for k in 0..=9 {
            let mut count = 0u64;
            for_each_noncrossing_partition(k, &|_| true, &|_| true, &mut |_| count += 1);
            assert_eq!(Int::from(count), catalan(k));
        }
    }

    #[test]
    fn noncrossing_agrees_with_filtering() {
        for k in 0..=6 {
            let mut direct: Vec<Vec<Vec<usize>>> = noncrossing_partitions(k);
            let mut filtered: Vec<Vec<Vec<usize>>> = Vec::new();
            for_each_set_partition(k, &mut |blocks| {
                let mut at = vec![usize::MAX; k];
                for (i, b) in blocks.iter().enumerate() {
                    for &v in b {
                        at[v] = i;
                    }
                }
                if crate::diagram::noncrossing_sweep(&at) {
                    filtered.push(blocks.to_vec());
                }
            });
            direct.sort();
            filtered.sort();
            assert_eq!(direct, filtered);
        }
    }

    #[test]
    fn pruned_generation_matches_filtered() {
        // blocks of even size only
        for k in [4usize, 6, 8] {
            let mut pruned = 0u64;
            for_each_noncrossing_partition(
                k,
                &|_| true,
                &|b| b.len() % 2 == 0,
                &mut |_| pruned += 1,
            );
            let mut filtered = 0u64;
            for_each_noncrossing_partition(k, &|_| true, &|_| true, &mut |blocks| {
                if blocks.iter().all(|b| b.len() % 2 == 0) {
                    filtered += 1;
                }
            });
            assert_eq!(pruned, filtered);
        }
    }

    #[test]
    fn planar_diagram_enumeration_counts() {
        for n in 0..=3 {
            let mut count = 0u64;
            for_each_planar_diagram(n, &|_| true, &|_| true, &mut |d| {
                assert!(d.is_planar());
                count += 1;
            });
            assert_eq!(Int::from(count), catalan(2 * n));
        }
    }
}
