//! The E8 root system in simple-root coordinates (Bourbaki numbering:
//! chain 1-3-4-5-6-7-8, node 2 attached to node 4).

use std::collections::HashMap;

pub const RANK: usize = 8;
pub type RootVec = [i8; RANK];

/// Bourbaki E8 Cartan matrix.
pub fn cartan_matrix() -> [[i8; RANK]; RANK] {
    let edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
    let mut c = [[0i8; RANK]; RANK];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    c
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan: [[i8; RANK]; RANK],
    /// Positive roots first (sorted by height, then coefficients), then
    /// their negatives in the same order.
    pub roots: Vec<RootVec>,
    index: HashMap<RootVec, usize>,
}

pub fn height(r: &RootVec) -> i32 {
    r.iter().map(|&c| c as i32).sum()
}

pub fn neg(r: &RootVec) -> RootVec {
    let mut out = *r;
    for c in out.iter_mut() {
        *c = -*c;
    }
    out
}

pub fn add(a: &RootVec, b: &RootVec) -> RootVec {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o += x;
    }
    out
}

impl RootSystem {
    pub fn e8() -> RootSystem {
        let cartan = cartan_matrix();
        let mut pos: Vec<RootVec> = Vec::new();
        let mut seen: std::collections::HashSet<RootVec> = std::collections::HashSet::new();
        let mut frontier: Vec<RootVec> = (0..RANK)
            .map(|i| {
                let mut r = [0i8; RANK];
                r[i] = 1;
                r
            })
            .collect();
        for r in &frontier {
            seen.insert(*r);
        }
        while !frontier.is_empty() {
            pos.extend(frontier.iter().copied());
            let mut next = Vec::new();
            for r in &frontier {
                for i in 0..RANK {
                    let mut s = *r;
                    s[i] += 1;
                    if inner_with(&cartan, &s, &s) == 2 && seen.insert(s) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        pos.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(neg));
        let index = roots.iter().enumerate().map(|(k, r)| (*r, k)).collect();
        RootSystem { cartan, roots, index }
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn index_of(&self, r: &RootVec) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.num_positive()
    }

    /// Index of `-roots[k]`.
    pub fn negative_of(&self, k: usize) -> usize {
        let n = self.num_positive();
        if k < n {
            k + n
        } else {
            k - n
        }
    }

    pub fn inner(&self, a: &RootVec, b: &RootVec) -> i32 {
        inner_with(&self.cartan, a, b)
    }

    pub fn highest_root(&self) -> RootVec {
        self.roots[self.num_positive() - 1]
    }
}

fn inner_with(c: &[[i8; RANK]; RANK], a: &RootVec, b: &RootVec) -> i32 {
    let mut s = 0i32;
    for i in 0..RANK {
        if a[i] == 0 {
            continue;
        }
        for j in 0..RANK {
            s += a[i] as i32 * c[i][j] as i32 * b[j] as i32;
        }
    }
    s
}

/// One simple component of a finite root system, e.g. `('D', 5)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct SimpleType {
    pub family: char,
    pub rank: usize,
}

impl std::fmt::Display for SimpleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Classifies a Cartan matrix (entries `<a_i, a_j^vee>`) into simple
/// components, sorted.
pub fn classify_cartan(c: &[Vec<i64>]) -> Result<Vec<SimpleType>, String> {
    let n = c.len();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![s];
        comp[s] = id;
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in 0..n {
                if w != v && c[v][w] != 0 && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort();
        comps.push(members);
    }
    let mut out = Vec::new();
    for m in comps {
        out.push(classify_connected(c, &m)?);
    }
    out.sort();
    Ok(out)
}

fn classify_connected(c: &[Vec<i64>], nodes: &[usize]) -> Result<SimpleType, String> {
    let r = nodes.len();
    let t = |family| Ok(SimpleType { family, rank: r });
    let mut edges = 0;
    let mut multi: Option<(usize, usize, i64)> = None;
    let mut degree = vec![0usize; r];
    for (a, &i) in nodes.iter().enumerate() {
        if c[i][i] != 2 {
            return Err("diagonal entry is not 2".into());
        }
        for (b, &j) in nodes.iter().enumerate() {
            if a < b && c[i][j] != 0 {
                edges += 1;
                degree[a] += 1;
                degree[b] += 1;
                let prod = c[i][j] * c[j][i];
                if !(1..=3).contains(&prod) {
                    return Err("not a Cartan matrix of finite type".into());
                }
                if prod > 1 {
                    if multi.is_some() {
                        return Err("two multiple bonds".into());
                    }
                    multi = Some((a, b, prod));
                }
            }
        }
    }
    if edges != r - 1 {
        return Err("Dynkin diagram is not a tree".into());
    }
    if let Some((a, b, prod)) = multi {
        if degree.iter().any(|&d| d > 2) {
            return Err("branch node with multiple bond".into());
        }
        // With entries <a_i, a_j^vee>, a long root a_i has |c[i][j]| = 2.
        let (i, j) = (nodes[a], nodes[b]);
        let a_long = c[i][j].abs() == 2;
        let ends = |x: usize| degree[x] == 1;
        return match prod {
            3 if r == 2 => t('G'),
            2 if r == 2 => t('B'),
            2 if r == 4 && !ends(a) && !ends(b) => t('F'),
            2 => {
                // Multiple bond at the end of the chain.
                let short_at_end = if a_long { ends(b) } else { ends(a) };
                if short_at_end {
                    t('B')
                } else {
                    t('C')
                }
            }
            _ => Err("not of finite type".into()),
        };
    }
    let branches: Vec<usize> = (0..r).filter(|&v| degree[v] == 3).collect();
    match branches.len() {
        0 => t('A'),
        1 => {
            // Arm lengths from the branch node.
            let bnode = branches[0];
            let mut arms = Vec::new();
            for (w, _) in nodes.iter().enumerate().filter(|&(w, &j)| w != bnode && c[nodes[bnode]][j] != 0) {
                let mut len = 1;
                let (mut prev, mut cur) = (bnode, w);
                loop {
                    let next = (0..r).find(|&x| x != prev && x != cur && c[nodes[cur]][nodes[x]] != 0);
                    match next {
                        Some(x) => {
                            len += 1;
                            prev = cur;
                            cur = x;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => t('D'),
                [1, 2, 2] => t('E'),
                [1, 2, 3] => t('E'),
                [1, 2, 4] => t('E'),
                _ => Err("not of finite type".into()),
            }
        }
        _ => Err("not of finite type".into()),
    }
}

/// `D5+A3`, `2A1+A2`, empty string for no components.
pub fn format_type(types: &[SimpleType]) -> String {
    // Non-A families first by decreasing rank, then type A by increasing rank.
    let mut sorted = types.to_vec();
    sorted.sort_by_key(|t| if t.family == 'A' { (1, t.rank as i64, 'A') } else { (0, -(t.rank as i64), t.family) });
    // Group equal components: A1, A1 -> 2A1.
    let mut out: Vec<(usize, SimpleType)> = Vec::new();
    for t in sorted {
        match out.last_mut() {
            Some((k, last)) if *last == t => *k += 1,
            _ => out.push((1, t)),
        }
    }
    out.iter()
        .map(|(k, t)| if *k == 1 { t.to_string() } else { format!("{k}{t}") })
        .collect::<Vec<_>>()
        .join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e8_has_240_roots() {
        let rs = RootSystem::e8();
        assert_eq!(rs.roots.len(), 240);
        assert_eq!(rs.highest_root(), [2, 3, 4, 6, 5, 4, 3, 2]);
        assert!(rs.roots.iter().all(|r| rs.inner(r, r) == 2));
        for k in 0..240 {
            assert_eq!(rs.roots[rs.negative_of(k)], neg(&rs.roots[k]));
        }
    }

    #[test]
    fn classify_examples() {
        let to = |m: [[i8; 8]; 8]| m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect::<Vec<Vec<i64>>>();
        assert_eq!(classify_cartan(&to(cartan_matrix())).unwrap(), vec![SimpleType { family: 'E', rank: 8 }]);
        // Nodes 1, 2 long and node 3 short.
        let b3 = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        assert_eq!(classify_cartan(&b3).unwrap()[0].family, 'B');
        let c3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]];
        assert_eq!(classify_cartan(&c3).unwrap()[0].family, 'C');
        let a2a1 = vec![vec![2, -1, 0], vec![-1, 2, 0], vec![0, 0, 2]];
        let t = classify_cartan(&a2a1).unwrap();
        assert_eq!(format_type(&t), "A1+A2");
    }
}
