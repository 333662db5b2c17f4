//! Prüfer codes on `{0, …, n-1}`.

/// Decodes a Prüfer sequence of length `n - 2` into `n - 1` edges.
///
/// `degree` is scratch space of length `n`; `edges` is cleared first. Runs in
/// linear time and never allocates once the buffers are warm.
pub fn decode_into(seq: &[u32], n: usize, degree: &mut [u32], edges: &mut Vec<(u32, u32)>) {
    edges.clear();
    if n < 2 {
        return;
    }
    debug_assert_eq!(seq.len(), n - 2);
    degree[..n].fill(1);
    for &x in seq {
        degree[x as usize] += 1;
    }
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf as u32, v));
        degree[v as usize] -= 1;
        if degree[v as usize] == 1 && (v as usize) < ptr {
            leaf = v as usize;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf as u32, n as u32 - 1));
}

pub fn decode(seq: &[u32], n: usize) -> Vec<(u32, u32)> {
    let mut degree = vec![0; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    decode_into(seq, n, &mut degree, &mut edges);
    edges
}

/// Encodes a tree on `{0, …, n-1}` given by its edges.
pub fn encode(n: usize, edges: &[(u32, u32)]) -> Vec<u32> {
    if n < 3 {
        return Vec::new();
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a as usize].push(b as usize);
        adj[b as usize].push(a as usize);
    }
    let mut removed = vec![false; n];
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut seq = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = (0..n).find(|&v| !removed[v] && deg[v] == 1).expect("a tree has a leaf");
        let nb = adj[leaf].iter().copied().find(|&w| !removed[w]).expect("leaf has a neighbour");
        seq.push(nb as u32);
        removed[leaf] = true;
        deg[nb] -= 1;
    }
    seq
}

/// Odometer over `{0, …, base-1}^len`, starting at all zeros.
#[derive(Clone, Debug)]
pub struct Odometer {
    digits: Vec<u32>,
    base: u32,
    fresh: bool,
}

impl Odometer {
    pub fn new(len: usize, base: u32) -> Self {
        Odometer {
            digits: vec![0; len],
            base,
            fresh: true,
        }
    }

    /// Advances and returns the next word, or `None` once exhausted.
    pub fn next_word(&mut self) -> Option<&[u32]> {
        if self.fresh {
            self.fresh = false;
            return (self.base > 0 || self.digits.is_empty()).then_some(&self.digits[..]);
        }
        for k in (0..self.digits.len()).rev() {
            self.digits[k] += 1;
            if self.digits[k] < self.base {
                return Some(&self.digits);
            }
            self.digits[k] = 0;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn normalized(mut e: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
        for p in &mut e {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        e.sort_unstable();
        e
    }

    #[test]
    fn small_cases() {
        assert!(decode(&[], 1).is_empty());
        assert_eq!(decode(&[], 2), vec![(0, 1)]);
        // star centred at 0
        assert_eq!(normalized(decode(&[0, 0], 4)), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn odometer_counts() {
        let mut o = Odometer::new(3, 4);
        let mut k = 0;
        while o.next_word().is_some() {
            k += 1;
        }
        assert_eq!(k, 64);
        let mut empty = Odometer::new(0, 1);
        assert!(empty.next_word().is_some());
        assert!(empty.next_word().is_none());
    }

    proptest! {
        #[test]
        fn round_trip(n in 3usize..12, raw in prop::collection::vec(0u32..1000, 10)) {
            let seq: Vec<u32> = raw[..n - 2].iter().map(|x| x % n as u32).collect();
            let edges = decode(&seq, n);
            prop_assert_eq!(edges.len(), n - 1);
            prop_assert_eq!(encode(n, &edges), seq);
        }
    }
}
