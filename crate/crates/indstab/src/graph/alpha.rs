//! Maximum independent set size by branch and bound on bitmasks.

use super::Graph;

/// alpha(G): size of the largest independent set.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    bb(g.adj(), g.full_mask(), 0, &mut best);
    best
}

fn bb(adj: &[u64], mut p: u64, mut cur: usize, best: &mut usize) {
    loop {
        if p == 0 {
            if cur > *best {
                *best = cur;
            }
            return;
        }
        if cur + p.count_ones() as usize <= *best {
            return;
        }
        // vertices of degree <= 1 in the candidate set always join some
        // maximum solution; take them without branching
        let mut max_deg = 0u32;
        let mut max_v = usize::MAX;
        let mut reduced = false;
        let mut it = p;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let d = (adj[v] & p).count_ones();
            if d <= 1 {
                p &= !(adj[v] | (1u64 << v));
                cur += 1;
                reduced = true;
                break;
            }
            if d > max_deg || max_v == usize::MAX {
                max_deg = d;
                max_v = v;
            }
        }
        if reduced {
            continue;
        }
        // include the max-degree vertex, then loop as the exclude branch
        let v = max_v;
        bb(adj, p & !(adj[v] | (1u64 << v)), cur + 1, best);
        p &= !(1u64 << v);
    }
}
