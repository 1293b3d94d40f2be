use serde::{Deserialize, Serialize};

use super::RootSystem;

/// A permutation of Dynkin nodes preserving the Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramAutomorphism {
    /// `node_permutation[i]` is the image of node `i` (0-based).
    pub node_permutation: Vec<usize>,
    /// Sign of the permutation, `+1` or `-1`.
    pub parity: i8,
}

impl DiagramAutomorphism {
    pub fn is_identity(&self) -> bool {
        self.node_permutation.iter().enumerate().all(|(i, &s)| i == s)
    }

    pub fn is_even(&self) -> bool {
        self.parity == 1
    }

    /// Cycle decomposition, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.node_permutation.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut k = self.node_permutation[start];
            while k != start {
                seen[k] = true;
                cycle.push(k);
                k = self.node_permutation[k];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

/// Sign of a permutation by counting inversions.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Every node permutation `σ` with `cartan[σ(i)][σ(j)] = cartan[i][j]`,
/// identity first, in lexicographic order of the permutation.
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<DiagramAutomorphism> {
    let a = rs.cartan();
    let n = a.len();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, 0, &mut perm, &mut used, &mut out);
    out.sort();
    out.into_iter()
        .map(|p| DiagramAutomorphism {
            parity: permutation_sign(&p),
            node_permutation: p,
        })
        .collect()
}

fn extend(a: &[Vec<i64>], i: usize, perm: &mut [usize], used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let n = a.len();
    if i == n {
        out.push(perm.to_vec());
        return;
    }
    for target in 0..n {
        if used[target] || a[target][target] != a[i][i] {
            continue;
        }
        let consistent = (0..i).all(|j| a[target][perm[j]] == a[i][j] && a[perm[j]][target] == a[j][i]);
        if !consistent {
            continue;
        }
        perm[i] = target;
        used[target] = true;
        extend(a, i + 1, perm, used, out);
        used[target] = false;
        perm[i] = usize::MAX;
    }
}
