//! Depth-first Hamilton path/cycle search over small implicit graphs.
//!
//! The searches are deterministic: candidates are ordered by fewest onward
//! moves first (Warnsdorff rule) with lexicographic tie-break, and the first
//! solution is returned. Budgets count expanded nodes.

use crate::word::Word;

pub enum Outcome {
    Found(Vec<Word>),
    Exhausted,
    BudgetExceeded,
}

enum Goal<'a> {
    /// Path must end exactly at this vertex.
    EndAt(&'a Word),
    /// Path must end at a neighbor of this vertex.
    CloseTo(&'a Word),
}

/// Hamilton path over `n` vertices from `start` to `end`.
pub fn ham_path<I, N>(
    n: usize,
    index_of: I,
    neighbors: N,
    start: &Word,
    end: &Word,
    budget: u64,
) -> Option<Vec<Word>>
where
    I: Fn(&Word) -> u64,
    N: Fn(&Word) -> Vec<Word>,
{
    match dfs(n, &index_of, &neighbors, start, Goal::EndAt(end), budget) {
        Outcome::Found(p) => Some(p),
        _ => None,
    }
}

/// Hamilton cycle through `start`, returned as a vertex list starting there.
pub fn ham_cycle<I, N>(
    n: usize,
    index_of: I,
    neighbors: N,
    start: &Word,
    budget: u64,
) -> Option<Vec<Word>>
where
    I: Fn(&Word) -> u64,
    N: Fn(&Word) -> Vec<Word>,
{
    match dfs(n, &index_of, &neighbors, start, Goal::CloseTo(start), budget) {
        Outcome::Found(p) => Some(p),
        _ => None,
    }
}

fn dfs<I, N>(n: usize, index_of: &I, neighbors: &N, start: &Word, goal: Goal, budget: u64) -> Outcome
where
    I: Fn(&Word) -> u64,
    N: Fn(&Word) -> Vec<Word>,
{
    if n == 0 {
        return Outcome::Exhausted;
    }
    if n == 1 {
        return match goal {
            Goal::EndAt(e) if index_of(e) == index_of(start) => Outcome::Found(vec![start.clone()]),
            Goal::CloseTo(_) => Outcome::Exhausted,
            _ => Outcome::Exhausted,
        };
    }
    let end_idx = match goal {
        Goal::EndAt(e) => Some(index_of(e)),
        Goal::CloseTo(_) => None,
    };
    let close_idx = match goal {
        Goal::CloseTo(v) => Some(index_of(v)),
        Goal::EndAt(_) => None,
    };
    let mut visited = vec![false; n];
    visited[index_of(start) as usize] = true;
    let mut path = vec![start.clone()];
    // Stack of candidate lists, one per path level.
    let mut stack: Vec<std::vec::IntoIter<Word>> =
        vec![ordered_candidates(neighbors, &visited, index_of, start, end_idx, n, path.len())];
    let mut nodes = 0u64;

    while let Some(iter) = stack.last_mut() {
        match iter.next() {
            Some(next) => {
                nodes += 1;
                if nodes > budget {
                    return Outcome::BudgetExceeded;
                }
                visited[index_of(&next) as usize] = true;
                path.push(next.clone());
                if path.len() == n {
                    let done = match goal {
                        Goal::EndAt(e) => index_of(&next) == index_of(e),
                        Goal::CloseTo(v) => neighbors(&next).iter().any(|u| index_of(u) == index_of(v)),
                    };
                    if done {
                        return Outcome::Found(path);
                    }
                    visited[index_of(&next) as usize] = false;
                    path.pop();
                    continue;
                }
                if dead_position(n, index_of, neighbors, &visited, &next, end_idx, close_idx) {
                    visited[index_of(&next) as usize] = false;
                    path.pop();
                    continue;
                }
                stack.push(ordered_candidates(
                    neighbors,
                    &visited,
                    index_of,
                    &next,
                    end_idx,
                    n,
                    path.len(),
                ));
            }
            None => {
                stack.pop();
                if let Some(v) = path.pop() {
                    visited[index_of(&v) as usize] = false;
                }
            }
        }
    }
    Outcome::Exhausted
}

/// Prunes positions from which no Hamilton completion can exist: the
/// unvisited region must be reachable from the current vertex, and no
/// unvisited vertex may lack the connections to be passed through (or to
/// serve as the unique final vertex).
fn dead_position<I, N>(
    n: usize,
    index_of: &I,
    neighbors: &N,
    visited: &[bool],
    current: &Word,
    end_idx: Option<u64>,
    close_idx: Option<u64>,
) -> bool
where
    I: Fn(&Word) -> u64,
    N: Fn(&Word) -> Vec<Word>,
{
    let cur_idx = index_of(current) as usize;
    let mut reached = vec![false; n];
    let mut queue: Vec<Word> = vec![current.clone()];
    reached[cur_idx] = true;
    let mut seen = 0usize;
    let mut low_degree = 0usize;
    while let Some(w) = queue.pop() {
        for u in neighbors(&w) {
            let ui = index_of(&u) as usize;
            if !visited[ui] && !reached[ui] {
                reached[ui] = true;
                seen += 1;
                // Number of ways in and out of u among unvisited vertices
                // and the current path head.
                let avail = neighbors(&u)
                    .iter()
                    .filter(|x| {
                        let xi = index_of(x) as usize;
                        !visited[xi] || xi == cur_idx
                    })
                    .count();
                if avail == 0 {
                    return true;
                }
                if avail == 1 {
                    match end_idx {
                        // A degree-1 vertex must be the designated end.
                        Some(e) => {
                            if ui as u64 != e {
                                return true;
                            }
                        }
                        // For a cycle it must be able to close back.
                        None => {
                            low_degree += 1;
                            let closes = close_idx.map_or(false, |c| {
                                neighbors(&u).iter().any(|x| index_of(x) == c)
                            });
                            if low_degree > 1 || !closes {
                                return true;
                            }
                        }
                    }
                }
                queue.push(u);
            }
        }
    }
    let unvisited_total = visited.iter().filter(|&&v| !v).count();
    seen < unvisited_total
}

/// Unvisited neighbors ordered by onward free degree, then lexicographically.
/// A designated end vertex is only offered at the final level.
fn ordered_candidates<I, N>(
    neighbors: &N,
    visited: &[bool],
    index_of: &I,
    from: &Word,
    end_idx: Option<u64>,
    n: usize,
    depth: usize,
) -> std::vec::IntoIter<Word>
where
    I: Fn(&Word) -> u64,
    N: Fn(&Word) -> Vec<Word>,
{
    let last_level = depth == n - 1;
    let mut cands: Vec<(usize, Word)> = Vec::new();
    for w in neighbors(from) {
        let idx = index_of(&w);
        if visited[idx as usize] {
            continue;
        }
        if !last_level {
            if end_idx == Some(idx) {
                continue;
            }
            let onward = neighbors(&w)
                .iter()
                .filter(|u| !visited[index_of(u) as usize])
                .count();
            if onward == 0 {
                continue;
            }
            cands.push((onward, w));
        } else {
            cands.push((0, w));
        }
    }
    cands.sort();
    cands.into_iter().map(|(_, w)| w).collect::<Vec<_>>().into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid_neighbors(cols: usize, rows: usize) -> impl Fn(&Word) -> Vec<Word> {
        move |w: &Word| {
            let (x, y) = (w[0] as i32, w[1] as i32);
            let mut out = Vec::new();
            for (dx, dy) in [(-1, 0), (1, 0), (0, -1), (0, 1)] {
                let (nx, ny) = (x + dx, y + dy);
                if nx >= 0 && ny >= 0 && (nx as usize) < cols && (ny as usize) < rows {
                    out.push(Word::new(vec![nx as u32, ny as u32]));
                }
            }
            out.sort();
            out
        }
    }

    #[test]
    fn grid_ham_path() {
        let (c, r) = (4, 3);
        let idx = move |w: &Word| (w[1] as u64) * c as u64 + w[0] as u64;
        let p = ham_path(
            c * r,
            idx,
            grid_neighbors(c, r),
            &Word::new(vec![0, 0]),
            &Word::new(vec![3, 0]),
            1_000_000,
        )
        .unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(p[0], Word::new(vec![0, 0]));
        assert_eq!(p[11], Word::new(vec![3, 0]));
    }

    #[test]
    fn grid_ham_cycle() {
        let (c, r) = (4, 4);
        let idx = move |w: &Word| (w[1] as u64) * c as u64 + w[0] as u64;
        let cyc = ham_cycle(
            c * r,
            idx,
            grid_neighbors(c, r),
            &Word::new(vec![0, 0]),
            1_000_000,
        )
        .unwrap();
        assert_eq!(cyc.len(), 16);
    }

    #[test]
    fn infeasible_is_exhausted_not_hang() {
        // 3x3 grid has no Hamilton cycle (odd bipartite imbalance).
        let idx = |w: &Word| (w[1] as u64) * 3 + w[0] as u64;
        assert!(ham_cycle(9, idx, grid_neighbors(3, 3), &Word::new(vec![0, 0]), 1_000_000).is_none());
    }
}
