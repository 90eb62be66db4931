//! Canonical forms for isomorphism dedup, capped at 16 vertices.
//!
//! Color refinement plus individualization; branches inside a cell collapse
//! when vertices are linked by twin transpositions (which are automorphisms,
//! so the skipped branches cannot improve the minimum).

use super::Graph;
use crate::error::{Error, Result};

pub const CANON_CAP: usize = 16;

/// Canonical byte string: equal iff the graphs are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    let key = canonical_key(g)?;
    Ok(key.to_be_bytes().to_vec())
}

/// Canonical form packed into a u128: order in the top byte, then the
/// upper-triangle adjacency bits of the minimal relabeling.
pub fn canonical_key(g: &Graph) -> Result<u128> {
    let n = g.n();
    if n > CANON_CAP {
        return Err(Error::CanonCapExceeded(n));
    }
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    refine(g, &mut colors);
    let mut best: Option<u128> = None;
    search(g, colors, &mut best);
    let bits = best.expect("at least one leaf");
    Ok(((n as u128) << 120) | bits)
}

/// 1-WL refinement: repeatedly augment colors with sorted neighbor colors.
fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = g.n();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = super::mask_vertices(g.neighbors(v))
                    .map(|u| colors[u])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0u32; n];
        let mut c = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let classes_before = count_classes(colors);
        let classes_after = (c + 1) as usize;
        *colors = next;
        if classes_after == classes_before || classes_after == n {
            return;
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<u128>) {
    let n = g.n();
    // find the smallest-colored non-singleton cell
    let mut cell: Option<(u32, Vec<usize>)> = None;
    for c in 0..n as u32 {
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == c).collect();
        if members.len() > 1 {
            cell = Some((c, members));
            break;
        }
        if members.is_empty() {
            break;
        }
    }
    let Some((_, members)) = cell else {
        // discrete: colors form a permutation
        let code = code_for(g, &colors);
        if best.map_or(true, |b| code < b) {
            *best = Some(code);
        }
        return;
    };
    for &v in representatives(g, &members).iter() {
        let mut next = colors.clone();
        // individualize v: order-preserving spread, v lands just below its cell
        let old = next[v];
        for c in next.iter_mut() {
            *c = *c * 2 + 2;
        }
        next[v] = old * 2 + 1;
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// One vertex per twin-transposition component of the cell.
fn representatives(g: &Graph, members: &[usize]) -> Vec<usize> {
    let k = members.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..k {
        for j in i + 1..k {
            let (u, v) = (members[i], members[j]);
            let strip = !((1u64 << u) | (1u64 << v));
            if g.neighbors(u) & strip == g.neighbors(v) & strip {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    // smallest member of each component represents it
    let mut out = Vec::new();
    let mut seen = vec![false; k];
    for i in 0..k {
        let r = find(&mut parent, i);
        if !seen[r] {
            seen[r] = true;
            out.push(members[i]);
        }
    }
    out
}

/// Upper-triangle bits under the relabeling v -> colors[v], packed into u128.
fn code_for(g: &Graph, colors: &[u32]) -> u128 {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for v in 0..n {
        pos[colors[v] as usize] = v;
    }
    let mut bits: u128 = 0;
    for i in 0..n {
        for j in i + 1..n {
            bits <<= 1;
            if g.has_edge(pos[i], pos[j]) {
                bits |= 1;
            }
        }
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn relabel_invariance() {
        let p3 = FamilySpec::path(3).build().unwrap();
        let relabeled = p3.relabel(&[2, 0, 1]);
        assert_eq!(canonical_code(&p3).unwrap(), canonical_code(&relabeled).unwrap());
        let k3 = FamilySpec::complete(3).build().unwrap();
        assert_ne!(canonical_code(&p3).unwrap(), canonical_code(&k3).unwrap());
    }

    #[test]
    fn two_vertex_classes() {
        let a = Graph::empty(2).unwrap();
        let b = Graph::new(2, &[(0, 1)]).unwrap();
        assert_ne!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::empty(17).unwrap();
        assert!(matches!(canonical_code(&g), Err(Error::CanonCapExceeded(17))));
    }

    #[test]
    fn invariant_under_many_random_relabelings() {
        // >= 100 permutations per corpus graph
        let corpus = [
            FamilySpec::path(6).build().unwrap(),
            FamilySpec::cycle(7).build().unwrap(),
            FamilySpec::star(5).build().unwrap(),
            FamilySpec::complete_multipartite(vec![2, 2, 2]).build().unwrap(),
            FamilySpec::complete(6).build().unwrap(),
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ];
        let mut state = 0xdeadbeefcafef00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for g in &corpus {
            let code = canonical_key(g).unwrap();
            for _ in 0..100 {
                let n = g.n();
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    let j = (next() % (i as u64 + 1)) as usize;
                    perm.swap(i, j);
                }
                assert_eq!(canonical_key(&g.relabel(&perm)).unwrap(), code);
            }
        }
    }

    #[test]
    fn hard_symmetric_cases_are_fast_and_stable() {
        // unions of equal cliques exercise the twin compression
        let k4 = FamilySpec::complete(4).build().unwrap();
        let g = k4.disjoint_union(&k4).unwrap().disjoint_union(&k4).unwrap();
        let code = canonical_key(&g).unwrap();
        let perm: Vec<usize> = (0..12).map(|v| (v + 5) % 12).collect();
        assert_eq!(canonical_key(&g.relabel(&perm)).unwrap(), code);
        assert_eq!(canonical_key(&FamilySpec::empty(12).build().unwrap()).unwrap(),
                   canonical_key(&Graph::empty(12).unwrap()).unwrap());
    }
}
