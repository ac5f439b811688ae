use super::Graph;
use crate::ideal::VarContext;

/// One representative of every isomorphism class of graphs on `n` vertices
/// named `x1..xn`, for `n <= 7`.  Each class is represented by its
/// edge-mask-minimal member.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let index = |a: usize, b: usize| -> usize {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).expect("pair exists")
    };
    let perms = permutations(n);
    // image[p][e] is the pair index that edge e is sent to by permutation p.
    let image: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect())
        .collect();

    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let ctx = VarContext::numbered("x", n);
    let mut out = Vec::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for img in &image {
            let mut m = 0usize;
            for (e, &t) in img.iter().enumerate() {
                if mask >> e & 1 == 1 {
                    m |= 1 << t;
                }
            }
            seen[m] = true;
        }
        let edges = (0..pairs.len())
            .filter(|e| mask >> e & 1 == 1)
            .map(|e| pairs[e])
            .collect();
        out.push(Graph::new(&ctx, edges).expect("enumerated edges are valid"));
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            let j = if k % 2 == 0 { i } else { 0 };
            current.swap(j, k - 1);
        }
    }
    heap(n, &mut current, &mut out);
    out
}
