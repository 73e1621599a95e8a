use crate::tree::Forest;

/// Independence number of a forest with a maximum independent set.
///
/// Each component is rooted at its lowest vertex and solved by the usual
/// include/exclude recurrence. On ties a vertex is excluded, which makes the
/// witness deterministic.
pub fn alpha_forest(g: &Forest) -> (usize, Vec<usize>) {
    let n = g.order();
    let mut take = vec![0usize; n];
    let mut skip = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut chosen = vec![false; n];

    for comp in g.components() {
        let root = comp[0];
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &w in g.neighbors(v) {
                if w != parent[v] {
                    parent[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
        for &v in order.iter().rev() {
            take[v] = 1;
            skip[v] = 0;
            for &c in g.neighbors(v) {
                if c != parent[v] {
                    take[v] += skip[c];
                    skip[v] += take[c].max(skip[c]);
                }
            }
        }
        for &v in &order {
            let parent_chosen = parent[v] != usize::MAX && chosen[parent[v]];
            chosen[v] = !parent_chosen && take[v] > skip[v];
        }
    }

    let set: Vec<usize> = (0..n).filter(|&v| chosen[v]).collect();
    (set.len(), set)
}

pub fn is_independent_in(g: &Forest, set: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|(u, v)| !(set.contains(u) && set.contains(v)))
}
