use std::collections::HashMap;
use std::time::Instant;

type W = Vec<u8>;

fn multiset_perms(parts: &[usize]) -> Vec<W> {
    let mut out = Vec::new();
    let mut freq = parts.to_vec();
    let n: usize = parts.iter().sum();
    let mut cur = Vec::new();
    fn rec(freq: &mut [usize], cur: &mut W, n: usize, out: &mut Vec<W>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..freq.len() {
            if freq[i] > 0 {
                freq[i] -= 1;
                cur.push(i as u8 + 1);
                rec(freq, cur, n, out);
                cur.pop();
                freq[i] += 1;
            }
        }
    }
    rec(&mut freq, &mut cur, n, &mut out);
    out
}

fn neighbors(w: &W) -> Vec<W> {
    let mut out = Vec::new();
    for i in 0..w.len() - 1 {
        if w[i] != w[i + 1] {
            let mut v = w.clone();
            v.swap(i, i + 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

struct Search {
    adj: Vec<Vec<u32>>,
    n: usize,
    warnsdorff: bool,
    prune: bool,
    budget: u64,
    nodes: u64,
}

impl Search {
    fn dead(&self, visited: &[bool], cur: u32, end: u32) -> bool {
        let n = self.n;
        let mut reached = vec![false; n];
        let mut stack = vec![cur];
        reached[cur as usize] = true;
        let mut seen = 0usize;
        while let Some(w) = stack.pop() {
            for &u in &self.adj[w as usize] {
                if !visited[u as usize] && !reached[u as usize] {
                    let avail = self.adj[u as usize]
                        .iter()
                        .filter(|&&x| !visited[x as usize] || x == cur)
                        .count();
                    if avail == 0 || (avail == 1 && u != end) {
                        return true;
                    }
                    reached[u as usize] = true;
                    seen += 1;
                    stack.push(u);
                }
            }
        }
        seen < visited.iter().filter(|&&v| !v).count()
    }

    fn dfs(&mut self, visited: &mut [bool], path: &mut Vec<u32>, end: u32) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let cur = *path.last().unwrap();
        if path.len() == self.n {
            return cur == end;
        }
        let mut cands: Vec<(usize, u32)> = Vec::new();
        for &w in &self.adj[cur as usize] {
            if visited[w as usize] {
                continue;
            }
            if w == end && path.len() != self.n - 1 {
                continue;
            }
            let onward = self.adj[w as usize]
                .iter()
                .filter(|&&u| !visited[u as usize])
                .count();
            if onward == 0 && path.len() != self.n - 1 {
                continue;
            }
            cands.push((if self.warnsdorff { onward } else { 0 }, w));
        }
        cands.sort();
        for (_, w) in cands {
            visited[w as usize] = true;
            path.push(w);
            if path.len() == self.n || !self.prune || !self.dead(visited, w, end) {
                if self.dfs(visited, path, end) {
                    return true;
                }
            }
            visited[w as usize] = false;
            path.pop();
        }
        false
    }
}

fn main() {
    for parts in [vec![2usize, 2, 3, 1], vec![4, 3, 2], vec![2, 4, 3, 1]] {
        let verts = multiset_perms(&parts);
        let idx: HashMap<W, u32> = verts.iter().cloned().zip(0u32..).collect();
        let adj: Vec<Vec<u32>> = verts
            .iter()
            .map(|w| neighbors(w).iter().map(|u| idx[u]).collect())
            .collect();
        let n = verts.len();
        for (warnsdorff, prune) in [(true, true), (false, true), (true, false), (false, false)] {
            let t = Instant::now();
            let mut found = false;
            let mut total = 0u64;
            'ends: for &end in &adj[0] {
                let mut s = Search {
                    adj: adj.clone(),
                    n,
                    warnsdorff,
                    prune,
                    budget: 3_000_000,
                    nodes: 0,
                };
                let mut visited = vec![false; n];
                visited[0] = true;
                let mut path = vec![0u32];
                let ok = s.dfs(&mut visited, &mut path, end);
                total += s.nodes;
                if ok {
                    found = true;
                    break 'ends;
                }
            }
            println!(
                "{parts:?} n={n} warnsdorff={warnsdorff} prune={prune}: found={found} nodes={total} in {:?}",
                t.elapsed()
            );
        }
    }
}
