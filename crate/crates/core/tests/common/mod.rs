//! Deliberately naive reference implementations, independent of the library:
//! orders by repeated addition, dense adjacency matrices, exhaustive searches.
#![allow(dead_code)]

pub fn order(a: u64, n: u64) -> u64 {
    let mut k = 1;
    let mut x = a % n;
    while x != 0 {
        x = (x + a) % n;
        k += 1;
    }
    k
}

pub fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).count() as u64
}

pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(n: u64) -> Self {
        let orders: Vec<u64> = (0..n).map(|a| order(a, n)).collect();
        let n = n as usize;
        let adj = (0..n)
            .map(|a| (0..n).map(|b| a != b && orders[a] != orders[b]).collect())
            .collect();
        Naive { n, adj }
    }

    pub fn degree(&self, a: usize) -> u64 {
        self.adj[a].iter().filter(|&&x| x).count() as u64
    }

    pub fn edge_count(&self) -> u64 {
        let mut m = 0;
        for a in 0..self.n {
            for b in a + 1..self.n {
                m += u64::from(self.adj[a][b]);
            }
        }
        m
    }

    fn distances(&self) -> Vec<Vec<u64>> {
        const INF: u64 = u64::MAX / 4;
        let mut d = vec![vec![INF; self.n]; self.n];
        for a in 0..self.n {
            d[a][a] = 0;
            for b in 0..self.n {
                if self.adj[a][b] {
                    d[a][b] = 1;
                }
            }
        }
        for k in 0..self.n {
            for i in 0..self.n {
                for j in 0..self.n {
                    let via = d[i][k] + d[k][j];
                    if via < d[i][j] {
                        d[i][j] = via;
                    }
                }
            }
        }
        d
    }

    /// `None` when disconnected.
    pub fn diameter(&self) -> Option<u64> {
        let d = self.distances();
        let max = d.iter().flatten().copied().max().unwrap();
        (max < u64::MAX / 4).then_some(max)
    }

    /// Shortest cycle through edge (u, v) is 1 + dist(u, v) with that edge removed.
    pub fn girth(&self) -> Option<u64> {
        let mut best: Option<u64> = None;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u][v] {
                    continue;
                }
                let mut dist = vec![u64::MAX; self.n];
                let mut queue = std::collections::VecDeque::from([u]);
                dist[u] = 0;
                while let Some(x) = queue.pop_front() {
                    for y in 0..self.n {
                        if self.adj[x][y] && !(x == u && y == v) && dist[y] == u64::MAX {
                            dist[y] = dist[x] + 1;
                            queue.push_back(y);
                        }
                    }
                }
                if dist[v] != u64::MAX {
                    let len = dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        // exhaustive 2-colorings
        assert!(self.n <= 20);
        (0u32..1 << self.n).any(|mask| self.is_proper(&|v| (mask >> v) & 1))
    }

    fn is_proper(&self, color: &dyn Fn(usize) -> u32) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| !self.adj[a][b] || color(a) != color(b)))
    }

    /// Subset enumeration.
    pub fn clique_number(&self) -> u64 {
        assert!(self.n <= 20);
        let mut best = 0;
        for mask in 0u32..1 << self.n {
            let members: Vec<usize> = (0..self.n).filter(|&v| (mask >> v) & 1 == 1).collect();
            if members.len() as u64 <= best {
                continue;
            }
            if members.iter().enumerate().all(|(i, &a)| members[i + 1..].iter().all(|&b| self.adj[a][b])) {
                best = members.len() as u64;
            }
        }
        best
    }

    /// Tries every assignment of k colors for increasing k.
    pub fn chromatic_number(&self) -> u64 {
        assert!(self.n <= 10);
        for k in 1..=self.n as u64 {
            let total = k.pow(self.n as u32);
            for code in 0..total {
                let color = |v: usize| ((code / k.pow(v as u32)) % k) as u32;
                if self.is_proper(&color) {
                    return k;
                }
            }
        }
        self.n as u64
    }

    /// Tries every permutation fixing vertex 0 first.
    pub fn is_hamiltonian(&self) -> bool {
        if self.n < 3 {
            return false;
        }
        let mut rest: Vec<usize> = (1..self.n).collect();
        permute(&mut rest, 0, &mut |p| {
            let mut prev = 0;
            for &v in p {
                if !self.adj[prev][v] {
                    return false;
                }
                prev = v;
            }
            self.adj[prev][0]
        })
    }
}

fn permute(v: &mut Vec<usize>, k: usize, check: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == v.len() {
        return check(v);
    }
    for i in k..v.len() {
        v.swap(k, i);
        if permute(v, k + 1, check) {
            v.swap(k, i);
            return true;
        }
        v.swap(k, i);
    }
    false
}
