use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::rep::SetRepresentation;
use serde::{Deserialize, Serialize};

mod b64 {
    use base64::engine::general_purpose::STANDARD;
    use base64::Engine as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(data: &[u8], s: S) -> Result<S::Ok, S::Error> {
        STANDARD.encode(data).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u8>, D::Error> {
        let text = String::deserialize(d)?;
        STANDARD.decode(text).map_err(serde::de::Error::custom)
    }
}

/// Dense 0/1 matrix, row-major, each row padded to a whole byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    #[serde(with = "b64")]
    data: Vec<u8>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> BitMatrix {
        BitMatrix {
            rows,
            cols,
            data: vec![0; rows * cols.div_ceil(8)],
        }
    }

    fn stride(&self) -> usize {
        self.cols.div_ceil(8)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.rows && c < self.cols);
        let stride = self.stride();
        self.data[r * stride + c / 8] |= 1 << (c % 8);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride() + c / 8] >> (c % 8) & 1 == 1
    }

    pub fn row_ones(&self, r: usize) -> usize {
        let stride = self.stride();
        self.data[r * stride..(r + 1) * stride]
            .iter()
            .map(|b| b.count_ones() as usize)
            .sum()
    }

    /// |row r of self \ row s of other|
    pub fn row_diff(&self, r: usize, other: &BitMatrix, s: usize) -> usize {
        debug_assert_eq!(self.cols, other.cols);
        let stride = self.stride();
        let a = &self.data[r * stride..(r + 1) * stride];
        let b = &other.data[s * stride..(s + 1) * stride];
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x & !y).count_ones() as usize)
            .sum()
    }

    /// Valid iff the byte buffer has exactly the row-major padded length
    /// and no padding bit is set.
    fn well_formed(&self) -> bool {
        if self.data.len() != self.rows * self.stride() {
            return false;
        }
        if self.cols % 8 != 0 && self.stride() > 0 {
            let mask = !0u8 << (self.cols % 8);
            for r in 0..self.rows {
                if self.data[(r + 1) * self.stride() - 1] & mask != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Size-sorted matrix form of a pair of set families on a common ground
/// set: row i of m1 is the characteristic vector of the family-A set with
/// the i-th smallest size (stably), and pi[i] names which original set
/// that is; likewise rho/m2 for family B.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteEncoding {
    pub pi: Vec<u32>,
    pub rho: Vec<u32>,
    pub m1: BitMatrix,
    pub m2: BitMatrix,
}

impl BipartiteEncoding {
    pub fn n(&self) -> usize {
        self.pi.len()
    }

    pub fn ground_size(&self) -> usize {
        self.m1.cols()
    }

    /// Row sums non-decreasing in both matrices.
    pub fn p1_holds(&self) -> bool {
        for m in [&self.m1, &self.m2] {
            for r in 1..m.rows() {
                if m.row_ones(r - 1) > m.row_ones(r) {
                    return false;
                }
            }
        }
        true
    }

    /// Consecutive rows differ forward by at most k-1 in both matrices:
    /// |row_i \ row_{i+1}| <= k-1. Holds for rank-k families whose
    /// members are pairwise non-adjacent in min mode, e.g. the two sides
    /// of a bipartite graph.
    pub fn p2_holds(&self, k: usize) -> bool {
        for m in [&self.m1, &self.m2] {
            for r in 1..m.rows() {
                if m.row_diff(r - 1, m, r) > k.saturating_sub(1) {
                    return false;
                }
            }
        }
        true
    }
}

fn size_sort(rep: &SetRepresentation) -> Vec<u32> {
    let mut order: Vec<u32> = (0..rep.n() as u32).collect();
    order.sort_by_key(|&v| rep.set(v as usize).len());
    order
}

fn characteristic_matrix(rep: &SetRepresentation, order: &[u32]) -> BitMatrix {
    let mut m = BitMatrix::new(order.len(), rep.ground_size());
    for (row, &v) in order.iter().enumerate() {
        for &x in rep.set(v as usize) {
            m.set(row, x as usize);
        }
    }
    m
}

/// Packs the two halves of a representation into permutations plus
/// characteristic matrices with rows sorted by set size (stable, so
/// equal sizes stay in original order). The sorting is what makes the
/// monotone-row property hold unconditionally.
pub fn encode_bipartite(
    rep_a: &SetRepresentation,
    rep_b: &SetRepresentation,
) -> Result<BipartiteEncoding> {
    if rep_a.n() != rep_b.n() {
        return Err(Error::parameter(format!(
            "side sizes differ: {} vs {}",
            rep_a.n(),
            rep_b.n()
        )));
    }
    if rep_a.ground_size() != rep_b.ground_size() {
        return Err(Error::parameter(format!(
            "ground sizes differ: {} vs {}",
            rep_a.ground_size(),
            rep_b.ground_size()
        )));
    }
    let pi = size_sort(rep_a);
    let rho = size_sort(rep_b);
    let enc = BipartiteEncoding {
        m1: characteristic_matrix(rep_a, &pi),
        m2: characteristic_matrix(rep_b, &rho),
        pi,
        rho,
    };
    debug_assert!(enc.p1_holds());
    Ok(enc)
}

/// Rebuilds the bipartite graph the encoded representation induces in
/// min mode at rank k: left u ~ right v iff both set differences between
/// u's and v's sets have size >= k. The permutations restore original
/// vertex labels.
pub fn decode_bipartite(enc: &BipartiteEncoding, k: usize) -> Result<BipartiteGraph> {
    if k == 0 {
        return Err(Error::parameter("rank must be at least 1"));
    }
    let n = enc.pi.len();
    if enc.rho.len() != n || enc.m1.rows() != n || enc.m2.rows() != n {
        return Err(Error::parameter(format!(
            "inconsistent row counts: pi {}, rho {}, m1 {}, m2 {}",
            n,
            enc.rho.len(),
            enc.m1.rows(),
            enc.m2.rows()
        )));
    }
    if enc.m1.cols() != enc.m2.cols() {
        return Err(Error::parameter(format!(
            "matrix widths differ: {} vs {}",
            enc.m1.cols(),
            enc.m2.cols()
        )));
    }
    if !enc.m1.well_formed() || !enc.m2.well_formed() {
        return Err(Error::Format(
            "bit matrix bytes do not match the declared shape".into(),
        ));
    }
    for perm in [&enc.pi, &enc.rho] {
        let mut seen = vec![false; n];
        for &v in perm {
            if v as usize >= n || seen[v as usize] {
                return Err(Error::parameter(format!(
                    "permutation entry {v} repeats or exceeds {n}"
                )));
            }
            seen[v as usize] = true;
        }
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let d_ab = enc.m1.row_diff(a, &enc.m2, b);
            let d_ba = enc.m2.row_diff(b, &enc.m1, a);
            if d_ab.min(d_ba) >= k {
                edges.push((enc.pi[a] as usize, enc.rho[b] as usize));
            }
        }
    }
    BipartiteGraph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(ground: usize, sets: Vec<Vec<u32>>) -> SetRepresentation {
        SetRepresentation::new(ground, sets).unwrap()
    }

    #[test]
    fn stable_size_sort() {
        let a = rep(6, vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        let b = rep(6, vec![vec![], vec![], vec![0]]);
        let enc = encode_bipartite(&a, &b).unwrap();
        assert_eq!(enc.pi, vec![1, 2, 0]);
        assert_eq!(enc.rho, vec![0, 1, 2]);
        assert!(enc.p1_holds());
        assert_eq!(enc.m1.row_ones(0), 1);
        assert_eq!(enc.m1.row_ones(2), 3);
        assert!(enc.m1.get(0, 3));
        assert!(enc.m2.get(2, 0));
    }

    #[test]
    fn all_empty_sets_encode_to_zero_matrices() {
        let a = rep(3, vec![vec![], vec![], vec![]]);
        let enc = encode_bipartite(&a, &a).unwrap();
        assert_eq!(enc.pi, vec![0, 1, 2]);
        assert_eq!(enc.rho, vec![0, 1, 2]);
        for r in 0..3 {
            assert_eq!(enc.m1.row_ones(r), 0);
            assert_eq!(enc.m2.row_ones(r), 0);
        }
        let g = decode_bipartite(&enc, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn hand_built_two_by_two_decodes_to_k22() {
        let a = rep(4, vec![vec![0], vec![0, 1]]);
        let b = rep(4, vec![vec![2], vec![2, 3]]);
        let enc = encode_bipartite(&a, &b).unwrap();
        let g = decode_bipartite(&enc, 1).unwrap();
        assert_eq!(g.edge_count(), 4);
        for l in 0..2 {
            for r in 0..2 {
                assert!(g.has_edge(l, r));
            }
        }
    }

    #[test]
    fn encode_rejects_mismatched_inputs() {
        let a = rep(3, vec![vec![0]]);
        let b = rep(3, vec![vec![0], vec![1]]);
        assert!(encode_bipartite(&a, &b).is_err());
        let c = rep(4, vec![vec![0]]);
        assert!(encode_bipartite(&a, &c).is_err());
    }

    #[test]
    fn decode_rejects_malformed_encodings() {
        let a = rep(3, vec![vec![0], vec![1, 2]]);
        let good = encode_bipartite(&a, &a).unwrap();
        assert!(decode_bipartite(&good, 0).is_err());

        let mut bad = good.clone();
        bad.pi = vec![0, 0];
        assert!(decode_bipartite(&bad, 1).is_err());

        let mut bad = good.clone();
        bad.rho = vec![0];
        assert!(decode_bipartite(&bad, 1).is_err());

        let mut bad = good.clone();
        bad.m2 = BitMatrix::new(2, 5);
        assert!(decode_bipartite(&bad, 1).is_err());
    }

    #[test]
    fn json_round_trip_preserves_the_encoding() {
        let a = rep(10, vec![vec![0, 9], vec![1], vec![2, 3, 4]]);
        let b = rep(10, vec![vec![], vec![5, 6, 7, 8], vec![0, 5]]);
        let enc = encode_bipartite(&a, &b).unwrap();
        let text = serde_json::to_string(&enc).unwrap();
        assert!(text.contains("\"pi\""));
        let back: BipartiteEncoding = serde_json::from_str(&text).unwrap();
        assert_eq!(back, enc);
    }

    #[test]
    fn well_formed_rejects_stray_padding_bits() {
        let mut m = BitMatrix::new(2, 3);
        m.set(1, 2);
        assert!(m.well_formed());
        m.data[0] |= 0b1000; // bit 3 of a 3-column row is padding
        assert!(!m.well_formed());
    }

    #[test]
    fn p2_example() {
        // chains have zero forward difference, so P2 holds even at k=1
        let a = rep(4, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
        let enc = encode_bipartite(&a, &a).unwrap();
        assert!(enc.p2_holds(1));
        // reversing membership breaks it: {0} -> {1} differs forward by 1
        let b = rep(4, vec![vec![0], vec![1], vec![0, 1, 2]]);
        let enc = encode_bipartite(&b, &b).unwrap();
        assert!(!enc.p2_holds(1));
        assert!(enc.p2_holds(2));
    }
}
