//! Reference implementations used as test oracles. None of them call into
//! the library's algorithms.

#![allow(dead_code, clippy::needless_range_loop)]

pub const INF: u32 = u32::MAX;

/// SplitMix64, for drawing test inputs independently of the library RNG.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Random spanning tree plus each other pair with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut SplitMix) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.below(v);
        edges.push((u, v));
        present[u][v] = true;
        present[v][u] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.unit() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Erdos-Renyi G(n, p).
pub fn gnp(n: usize, p: f64, rng: &mut SplitMix) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.unit() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Floyd-Warshall hop distances; `INF` for unreachable pairs.
pub fn all_pairs(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        if u != v {
            d[u][v] = 1;
            d[v][u] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i][k];
            if dik == INF {
                continue;
            }
            for j in 0..n {
                let dkj = d[k][j];
                if dkj != INF && dik + dkj < d[i][j] {
                    d[i][j] = dik + dkj;
                }
            }
        }
    }
    d
}

pub fn eccentricities(d: &[Vec<u32>]) -> Vec<u32> {
    d.iter().map(|row| *row.iter().max().unwrap()).collect()
}

/// Levels from the distance matrix: 1 + distance to the nearest center node.
pub fn levels(d: &[Vec<u32>]) -> Vec<u32> {
    let ecc = eccentricities(d);
    let radius = *ecc.iter().min().unwrap();
    let center: Vec<usize> = (0..ecc.len()).filter(|&v| ecc[v] == radius).collect();
    (0..ecc.len())
        .map(|v| 1 + center.iter().map(|&c| d[c][v]).min().unwrap())
        .collect()
}

/// (p2c, p2p) counts from levels, rejecting any edge spanning more than one level.
pub fn class_counts(levels: &[u32], edges: &[(usize, usize)]) -> (usize, usize) {
    let (mut p2c, mut p2p) = (0, 0);
    for &(u, v) in edges {
        match levels[u].abs_diff(levels[v]) {
            0 => p2p += 1,
            1 => p2c += 1,
            gap => panic!("edge {u}-{v} spans {gap} levels"),
        }
    }
    (p2c, p2p)
}

/// Union-find component sizes, largest first.
pub fn component_sizes(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
        }
    }
    let mut sizes = vec![0; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        sizes[r] += 1;
    }
    let mut sizes: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Two-pass Pearson correlation.
pub fn pearson(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    sxy / (sxx * syy).sqrt()
}

/// Fraction of positive samples that are >= k, by direct counting.
pub fn ccdf_at(degrees: &[u32], k: u32) -> f64 {
    let positive = degrees.iter().filter(|&&d| d > 0).count();
    degrees.iter().filter(|&&d| d >= k && d > 0).count() as f64 / positive as f64
}

/// Hop distances from every node by plain queue BFS on an adjacency list.
pub fn all_pairs_bfs(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u != v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    (0..n)
        .map(|s| {
            let mut dist = vec![INF; n];
            let mut queue = std::collections::VecDeque::from([s]);
            dist[s] = 0;
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if dist[v] == INF {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect()
}
