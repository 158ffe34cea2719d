//! Brute-force oracles: direct enumeration, independent of the library's
//! counting and search paths.

use btr_core::Graph;

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

/// Distinct 4-cycles: for each 4-subset, each of the three pairings into
/// opposite pairs gives a potential cycle.
pub fn c4_count(g: &Graph) -> u64 {
    let mut count = 0;
    for s in subsets_of_size(g.order(), 4) {
        let (a, b, c, d) = (s[0], s[1], s[2], s[3]);
        // Cycle a-b-c-d-a, a-b-d-c-a, a-c-b-d-a.
        for (p, q, r, t) in [(a, b, c, d), (a, b, d, c), (a, c, b, d)] {
            if g.has_edge(p, q) && g.has_edge(q, r) && g.has_edge(r, t) && g.has_edge(t, p) {
                count += 1;
            }
        }
    }
    count
}

pub fn triangle_count(g: &Graph) -> u64 {
    let mut count = 0;
    for s in subsets_of_size(g.order(), 3) {
        if g.has_edge(s[0], s[1]) && g.has_edge(s[1], s[2]) && g.has_edge(s[0], s[2]) {
            count += 1;
        }
    }
    count
}

pub fn independent_set_count(g: &Graph, size: usize) -> u128 {
    let mut count = 0;
    'outer: for s in subsets_of_size(g.order(), size) {
        for i in 0..s.len() {
            for j in (i + 1)..s.len() {
                if g.has_edge(s[i], s[j]) {
                    continue 'outer;
                }
            }
        }
        count += 1;
    }
    count
}

pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    for size in (1..=g.order()).rev() {
        'subset: for s in subsets_of_size(g.order(), size) {
            for i in 0..s.len() {
                for j in (i + 1)..s.len() {
                    if !g.has_edge(s[i], s[j]) {
                        continue 'subset;
                    }
                }
            }
            best = size;
            break;
        }
        if best == size {
            break;
        }
    }
    best
}

fn common_degree(g: &Graph, xs: &[usize]) -> usize {
    (0..g.order())
        .filter(|&w| xs.iter().all(|&x| g.has_edge(x, w)))
        .count()
}

pub fn pair_degree_moment(g: &Graph, k: u32) -> u128 {
    let mut total: u128 = 0;
    for s in subsets_of_size(g.order(), 2) {
        total += (common_degree(g, &s) as u128).pow(k);
    }
    total
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

pub fn k2s_count(g: &Graph, s: usize) -> u128 {
    let mut total = 0;
    for pair in subsets_of_size(g.order(), 2) {
        total += binomial(common_degree(g, &pair) as u128, s as u128);
    }
    total
}

pub fn independent_pair_degree_sum(g: &Graph, s: usize) -> u128 {
    let mut total = 0;
    'outer: for set in subsets_of_size(g.order(), s) {
        for i in 0..set.len() {
            for j in (i + 1)..set.len() {
                if g.has_edge(set[i], set[j]) {
                    continue 'outer;
                }
            }
        }
        let d = common_degree(g, &set) as u128;
        total += d * d.saturating_sub(1) / 2;
    }
    total
}

/// Closed 4-walks by the definition: ordered vertex sequences
/// `v0 v1 v2 v3 v0` along edges.
pub fn closed_walks_4(g: &Graph) -> u128 {
    let n = g.order();
    let mut total: u128 = 0;
    for a in 0..n {
        for b in 0..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in 0..n {
                if !g.has_edge(b, c) {
                    continue;
                }
                for d in 0..n {
                    if g.has_edge(c, d) && g.has_edge(d, a) {
                        total += 1;
                    }
                }
            }
        }
    }
    total
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Embedding check by full enumeration of injections (host subsets ×
/// permutations). Exponential; for tiny patterns and hosts only.
pub fn contains_pattern(host: &Graph, pattern: &Graph, induced: bool) -> bool {
    let np = pattern.order();
    if np > host.order() {
        return false;
    }
    for subset in subsets_of_size(host.order(), np) {
        for perm in permutations(&subset) {
            let mut ok = true;
            'pairs: for i in 0..np {
                for j in (i + 1)..np {
                    let pat = pattern.has_edge(i, j);
                    let host_adj = host.has_edge(perm[i], perm[j]);
                    if pat && !host_adj {
                        ok = false;
                        break 'pairs;
                    }
                    if induced && !pat && host_adj {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            if ok {
                return true;
            }
        }
    }
    false
}
