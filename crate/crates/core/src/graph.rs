//! Qudit graphs, graph states, the X-Z rule as pure `Z_D` combinatorics,
//! Pauli-distance tables, and the diagonal distance.
//!
//! A graph basis state is labelled by an n-tuple `a` over `Z_D`; a Pauli
//! product `X^mu Z^nu` maps `|G>` to the basis state labelled
//! `nu + Gamma mu` up to a unit-modulus phase, which makes distance
//! computations exact integer arithmetic.

use crate::dense::{self, CVector, C64};
use crate::error::{Error, Result};
use crate::modring::ModMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuditGraph {
    n: usize,
    modulus: u64,
    gamma: ModMatrix,
}

impl QuditGraph {
    pub fn empty(n: usize, modulus: u64) -> Self {
        assert!(n > 0 && modulus >= 2);
        QuditGraph { n, modulus, gamma: ModMatrix::zero(n, n, modulus) }
    }

    /// Build from weighted edges `(u, v, w)`, 0-based vertices. Duplicate
    /// edges are summed mod `D`; self loops are rejected.
    pub fn from_edges(n: usize, modulus: u64, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut g = Self::empty(n, modulus);
        for &(u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("self loop at vertex {u}")));
            }
            let cur = g.gamma.get(u, v);
            let w = (cur + w) % modulus;
            g.gamma.set(u, v, w);
            g.gamma.set(v, u, w);
        }
        Ok(g)
    }

    /// Parse the text format: header `n D`, then lines `u v w` with 0-based
    /// vertices and `1 <= w < D`. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<QuditGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match graph {
                None => {
                    if fields.len() != 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "expected header `n D`".into(),
                        });
                    }
                    let n: usize = fields[0].parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("bad vertex count `{}`", fields[0]),
                    })?;
                    let d: u64 = fields[1].parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("bad modulus `{}`", fields[1]),
                    })?;
                    if n == 0 || d < 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "need n >= 1 and D >= 2".into(),
                        });
                    }
                    graph = Some(QuditGraph::empty(n, d));
                }
                Some(ref mut g) => {
                    if fields.len() != 3 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "expected edge `u v w`".into(),
                        });
                    }
                    let parse_field = |s: &str| -> Result<u64> {
                        s.parse().map_err(|_| Error::Parse {
                            line: line_no,
                            msg: format!("bad number `{s}`"),
                        })
                    };
                    let u = parse_field(fields[0])? as usize;
                    let v = parse_field(fields[1])? as usize;
                    let w = parse_field(fields[2])?;
                    if u >= g.n || v >= g.n {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("vertex out of range in `{line}`"),
                        });
                    }
                    if u == v {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("self loop at vertex {u}"),
                        });
                    }
                    if w == 0 || w >= g.modulus {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("weight {w} outside 1..{}", g.modulus),
                        });
                    }
                    let cur = g.gamma.get(u, v);
                    let w = (cur + w) % g.modulus;
                    g.gamma.set(u, v, w);
                    g.gamma.set(v, u, w);
                }
            }
        }
        graph.ok_or(Error::Parse { line: 0, msg: "empty graph file".into() })
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.modulus);
        for u in 0..self.n {
            for v in u + 1..self.n {
                let w = self.gamma.get(u, v);
                if w != 0 {
                    out.push_str(&format!("{u} {v} {w}\n"));
                }
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn gamma(&self) -> &ModMatrix {
        &self.gamma
    }

    pub fn weight(&self, u: usize, v: usize) -> u64 {
        self.gamma.get(u, v)
    }

    /// Number of neighbors of `v` (vertices joined by any edge).
    pub fn neighbor_count(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.gamma.get(v, u) != 0).count()
    }

    /// `b = nu + Gamma mu` mod `D`: the graph-basis label reached from
    /// `|G>`'s orbit by `X^mu Z^nu`.
    pub fn pauli_image_index(&self, mu: &[u64], nu: &[u64]) -> Result<Vec<u64>> {
        if mu.len() != self.n || nu.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "tuples of length {} and {} vs {} vertices",
                mu.len(),
                nu.len(),
                self.n
            )));
        }
        let d = self.modulus;
        let gm = self.gamma.row_vec_mul(mu)?;
        Ok(nu.iter().zip(gm).map(|(&nv, gv)| (nv % d + gv) % d).collect())
    }

    /// Dense graph state: controlled-phase gates per adjacency multiplicity
    /// applied to `|+>^n`, i.e. amplitudes `w^{sum_{l<m} Gamma_lm j_l j_m}`.
    pub fn graph_state_vector(&self, cap: usize) -> Result<CVector> {
        let d = self.modulus;
        let dim = dense::hilbert_dim(d, self.n, cap)?;
        let norm = 1.0 / (dim as f64).sqrt();
        let mut v = CVector::zeros(dim);
        for idx in 0..dim {
            let digits = dense::index_to_digits(idx, d, self.n);
            let mut expo: u64 = 0;
            for l in 0..self.n {
                for m in l + 1..self.n {
                    expo = (expo + self.gamma.get(l, m) * digits[l] % d * digits[m]) % d;
                }
            }
            v[idx] = dense::root_of_unity(d, expo as i64) * norm;
        }
        Ok(v)
    }

    /// Graph basis state `Z^a |G>`.
    pub fn basis_state_vector(&self, a: &[u64], cap: usize) -> Result<CVector> {
        let g = self.graph_state_vector(cap)?;
        Ok(dense::apply_pauli_xz(&g, &vec![0; self.n], a, self.modulus))
    }

    /// Diagonal distance: minimum size of a nontrivial Pauli product fixing
    /// `|G>` up to phase, `min_{mu != 0} |supp(mu) u supp(Gamma mu)|`.
    pub fn diagonal_distance(&self) -> usize {
        let d = self.modulus;
        let n = self.n;
        let total = (d as u128).pow(n as u32);
        let mut best = n + 1;
        let mut mu = vec![0u64; n];
        for code in 1..total {
            let mut c = code;
            for m in mu.iter_mut() {
                *m = (c % d as u128) as u64;
                c /= d as u128;
            }
            let img = self.gamma.row_vec_mul(&mu).expect("length checked");
            let size = (0..n).filter(|&l| mu[l] != 0 || img[l] != 0).count();
            if size < best {
                best = size;
                if best == 1 {
                    break;
                }
            }
        }
        best.min(n)
    }

    /// Distance oracle for `Delta(0, a)`; builds a full lookup table when it
    /// fits the budget, otherwise answers per-pair queries by minimizing
    /// over `mu`.
    pub fn distance_oracle(&self, budget: TableBudget) -> DistanceOracle {
        DistanceOracle::new(self.clone(), budget)
    }
}

/// Budget for the distance lookup table: the table is built only when the
/// index space `D^n` fits `max_entries` and the size-ordered enumeration
/// stays under `max_ops` operator visits.
#[derive(Clone, Copy, Debug)]
pub struct TableBudget {
    pub max_entries: usize,
    pub max_ops: u64,
}

impl Default for TableBudget {
    fn default() -> Self {
        TableBudget { max_entries: 1 << 16, max_ops: 1 << 26 }
    }
}

#[derive(Clone, Debug)]
enum OracleMode {
    Table(Vec<u8>),
    PerPair,
}

#[derive(Clone, Debug)]
pub struct DistanceOracle {
    graph: QuditGraph,
    mode: OracleMode,
}

impl DistanceOracle {
    fn new(graph: QuditGraph, budget: TableBudget) -> Self {
        let d = graph.modulus();
        let n = graph.n();
        let entries = (d as u128).pow(n as u32);
        if entries <= budget.max_entries as u128 {
            if let Some(table) = Self::build_table(&graph, entries as usize, budget.max_ops) {
                return DistanceOracle { graph, mode: OracleMode::Table(table) };
            }
        }
        DistanceOracle { graph, mode: OracleMode::PerPair }
    }

    /// Size-ordered enumeration: visit every Pauli exponent pair of support
    /// size s = 1, 2, ... and record the first (hence minimal) size reaching
    /// each basis label. Bails out returning `None` when the ops budget is
    /// exhausted before the table is complete.
    fn build_table(graph: &QuditGraph, entries: usize, max_ops: u64) -> Option<Vec<u8>> {
        let d = graph.modulus();
        let n = graph.n();
        let mut table = vec![u8::MAX; entries];
        table[0] = 0;
        let mut filled = 1usize;
        let mut ops: u64 = 0;
        let per_site = (d * d - 1) as usize;

        // Precompute the image labels of single-site generators so that the
        // support loop can accumulate nu + Gamma mu incrementally.
        // site_effect[l][k] for k in 0..per_site: (mu_l, nu_l) = decode(k+1).
        for s in 1..=n {
            if filled == entries {
                break;
            }
            let mut support: Vec<usize> = (0..s).collect();
            loop {
                // enumerate all per-site nonzero assignments on `support`
                let combos = (per_site as u128).pow(s as u32);
                let mut mu = vec![0u64; n];
                let mut nu = vec![0u64; n];
                for combo in 0..combos {
                    ops += 1;
                    if ops > max_ops {
                        return None;
                    }
                    let mut c = combo;
                    for &l in &support {
                        let k = (c % per_site as u128) as u64 + 1;
                        c /= per_site as u128;
                        mu[l] = k % d;
                        nu[l] = k / d;
                    }
                    let b = graph.pauli_image_index(&mu, &nu).expect("length ok");
                    let idx = dense::digits_to_index(&b, d);
                    if table[idx] == u8::MAX {
                        table[idx] = s as u8;
                        filled += 1;
                        if filled == entries {
                            break;
                        }
                    }
                }
                for &l in &support {
                    mu[l] = 0;
                    nu[l] = 0;
                }
                if filled == entries {
                    break;
                }
                // next support subset of size s
                let mut i = s;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if support[i] != i + n - s {
                        support[i] += 1;
                        for j in i + 1..s {
                            support[j] = support[j - 1] + 1;
                        }
                        break;
                    }
                    if i == 0 {
                        support.clear();
                        break;
                    }
                }
                if support.is_empty() {
                    break;
                }
            }
        }
        // Unreached labels cannot occur: nu alone reaches every label.
        debug_assert!(filled == entries);
        Some(table)
    }

    pub fn has_table(&self) -> bool {
        matches!(self.mode, OracleMode::Table(_))
    }

    pub fn graph(&self) -> &QuditGraph {
        &self.graph
    }

    /// `Delta(0, a)` for a label given as an index base `D`.
    pub fn dist0_index(&self, a: usize) -> usize {
        match &self.mode {
            OracleMode::Table(t) => t[a] as usize,
            OracleMode::PerPair => {
                let digits = dense::index_to_digits(a, self.graph.modulus(), self.graph.n());
                self.dist0_per_pair(&digits)
            }
        }
    }

    pub fn dist0(&self, a: &[u64]) -> usize {
        match &self.mode {
            OracleMode::Table(t) => t[dense::digits_to_index(a, self.graph.modulus())] as usize,
            OracleMode::PerPair => self.dist0_per_pair(a),
        }
    }

    /// `Delta(a, b) = Delta(0, b - a)` by translation invariance.
    pub fn dist(&self, a: &[u64], b: &[u64]) -> usize {
        let d = self.graph.modulus();
        let diff: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| (y + d - x) % d).collect();
        self.dist0(&diff)
    }

    fn dist0_per_pair(&self, a: &[u64]) -> usize {
        let d = self.graph.modulus();
        let n = self.graph.n();
        if a.iter().all(|&v| v == 0) {
            return 0;
        }
        let total = (d as u128).pow(n as u32);
        let mut best = n;
        let mut mu = vec![0u64; n];
        for code in 0..total {
            let mut c = code;
            for m in mu.iter_mut() {
                *m = (c % d as u128) as u64;
                c /= d as u128;
            }
            let gm = self.graph.gamma.row_vec_mul(&mu).expect("length ok");
            let mut size = 0;
            for l in 0..n {
                let nu = (a[l] + d - gm[l]) % d;
                if mu[l] != 0 || nu != 0 {
                    size += 1;
                }
            }
            if size < best {
                best = size;
                if best == 1 {
                    break;
                }
            }
        }
        best
    }

    /// Distance table as CSV rows `a_base_D,delta` (only in table mode).
    pub fn table_csv(&self) -> Option<String> {
        let OracleMode::Table(t) = &self.mode else {
            return None;
        };
        let d = self.graph.modulus();
        let n = self.graph.n();
        let mut out = String::from("a_base_D,delta\n");
        for (idx, &dist) in t.iter().enumerate() {
            let digits = dense::index_to_digits(idx, d, n);
            let label: String = digits.iter().map(|&x| digit_char(x)).collect();
            out.push_str(&format!("{label},{dist}\n"));
        }
        Some(out)
    }
}

pub fn digit_char(x: u64) -> char {
    if x < 10 {
        (b'0' + x as u8) as char
    } else {
        (b'a' + (x - 10) as u8) as char
    }
}

// Standard graph families used in tests and searches.

pub fn cycle_graph(n: usize, d: u64) -> QuditGraph {
    let edges: Vec<(usize, usize, u64)> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
    QuditGraph::from_edges(n, d, &edges).expect("valid cycle")
}

/// Cycle with one double edge, the variant that yields the best qutrit codes.
pub fn cycle_graph_with_double_edge(n: usize, d: u64) -> QuditGraph {
    let mut edges: Vec<(usize, usize, u64)> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
    edges[0].2 = 2 % d;
    QuditGraph::from_edges(n, d, &edges).expect("valid cycle")
}

/// Star: vertex 0 is the center, joined by single edges to all others.
pub fn star_graph(n: usize, d: u64) -> QuditGraph {
    let edges: Vec<(usize, usize, u64)> = (1..n).map(|i| (0, i, 1)).collect();
    QuditGraph::from_edges(n, d, &edges).expect("valid star")
}

pub fn complete_graph(n: usize, d: u64) -> QuditGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, 1));
        }
    }
    QuditGraph::from_edges(n, d, &edges).expect("valid complete graph")
}

/// Bar graph: vertices paired (0,1), (2,3), ...; for odd `n` the last vertex
/// joins the final bar making one vertex of degree 2.
pub fn bar_graph(n: usize, d: u64) -> QuditGraph {
    let mut edges = Vec::new();
    let mut i = 0;
    while i + 1 < n {
        edges.push((i, i + 1, 1));
        i += 2;
    }
    if n % 2 == 1 {
        edges.push((n - 1, n - 2, 1));
    }
    QuditGraph::from_edges(n, d, &edges).expect("valid bar graph")
}

/// Hypercube on `2^dim` vertices, edges between binary labels at Hamming
/// distance 1.
pub fn hypercube_graph(dim: u32, d: u64) -> QuditGraph {
    let n = 1usize << dim;
    let mut edges = Vec::new();
    for v in 0..n {
        for bit in 0..dim {
            let u = v ^ (1 << bit);
            if u > v {
                edges.push((v, u, 1));
            }
        }
    }
    QuditGraph::from_edges(n, d, &edges).expect("valid hypercube")
}

/// Wheel: vertex 0 is the hub of a cycle on vertices 1..n.
pub fn wheel_graph(n: usize, d: u64) -> QuditGraph {
    let mut edges: Vec<(usize, usize, u64)> = (1..n).map(|i| (0, i, 1)).collect();
    for i in 1..n {
        let j = if i == n - 1 { 1 } else { i + 1 };
        edges.push((i, j, 1));
    }
    QuditGraph::from_edges(n, d, &edges).expect("valid wheel")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{digits_to_index, index_to_digits, inner, DEFAULT_DENSE_CAP};
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut impl Rng, n: usize, d: u64) -> QuditGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let w = rng.gen_range(0..d);
                if w != 0 {
                    edges.push((u, v, w));
                }
            }
        }
        QuditGraph::from_edges(n, d, &edges).unwrap()
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let g = QuditGraph::parse("3 4\n0 1 2\n1 2 1\n0 1 1\n").unwrap();
        assert_eq!(g.weight(0, 1), 3); // duplicate edges summed mod D
        assert_eq!(g.weight(1, 2), 1);
        let reparsed = QuditGraph::parse(&g.to_file_string()).unwrap();
        assert_eq!(reparsed, g);

        let err = QuditGraph::parse("3 4\n0 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = QuditGraph::parse("3 4\n0 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn z_shift_is_identity_on_labels() {
        let g = cycle_graph(4, 3);
        let a = vec![1, 2, 0, 1];
        let b = g.pauli_image_index(&[0, 0, 0, 0], &a).unwrap();
        assert_eq!(b, a);
    }

    #[test]
    fn x_on_vertex_writes_neighbor_pattern() {
        // Degree-3 vertex: X there lands on Z-pattern Gamma e_v.
        let g = star_graph(4, 4);
        let mut mu = vec![0u64; 4];
        mu[0] = 1;
        let b = g.pauli_image_index(&mu, &[0; 4]).unwrap();
        assert_eq!(b, vec![0, 1, 1, 1]);
    }

    #[test]
    fn single_vertex_state_is_uniform() {
        let g = QuditGraph::empty(1, 5);
        let v = g.graph_state_vector(DEFAULT_DENSE_CAP).unwrap();
        for amp in v.iter() {
            assert!((amp - C64::new(1.0 / 5f64.sqrt(), 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn two_qubit_edge_state() {
        let g = QuditGraph::from_edges(2, 2, &[(0, 1, 1)]).unwrap();
        let v = g.graph_state_vector(16).unwrap();
        let expect = [0.5, 0.5, 0.5, -0.5];
        for (amp, e) in v.iter().zip(expect) {
            assert!((amp - C64::new(e, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn two_qudit_graph_state_is_fourier_kernel() {
        let d = 5u64;
        let g = QuditGraph::from_edges(2, d, &[(0, 1, 1)]).unwrap();
        let v = g.graph_state_vector(64).unwrap();
        for j in 0..d {
            for k in 0..d {
                let idx = digits_to_index(&[j, k], d);
                let expect = dense::root_of_unity(d, (j * k) as i64) / d as f64;
                assert!((v[idx] - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn xz_rule_matches_dense_simulation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..40 {
            let d = rng.gen_range(2..=4);
            let n = rng.gen_range(1..=3);
            let g = random_graph(&mut rng, n, d);
            let mu: Vec<u64> = (0..n).map(|_| rng.gen_range(0..d)).collect();
            let nu: Vec<u64> = (0..n).map(|_| rng.gen_range(0..d)).collect();
            let b = g.pauli_image_index(&mu, &nu).unwrap();
            let gv = g.graph_state_vector(DEFAULT_DENSE_CAP).unwrap();
            let moved = dense::apply_pauli_xz(&gv, &mu, &nu, d);
            let target = g.basis_state_vector(&b, DEFAULT_DENSE_CAP).unwrap();
            let overlap = inner(&target, &moved).norm();
            assert!((overlap - 1.0).abs() < 1e-10, "overlap {overlap}");
        }
    }

    #[test]
    fn empty_graph_distance_is_hamming_weight() {
        let g = QuditGraph::empty(3, 3);
        let oracle = g.distance_oracle(TableBudget::default());
        assert!(oracle.has_table());
        for idx in 0..27usize {
            let digits = index_to_digits(idx, 3, 3);
            let weight = digits.iter().filter(|&&x| x != 0).count();
            assert_eq!(oracle.dist0_index(idx), weight);
        }
    }

    #[test]
    fn five_cycle_realizes_distance_three() {
        let g = cycle_graph(5, 2);
        let oracle = g.distance_oracle(TableBudget::default());
        assert_eq!(oracle.dist0(&[1, 1, 1, 1, 1]), 3);
    }

    #[test]
    fn table_matches_exhaustive_minimum() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for d in 2u64..=4 {
            let n = 3usize;
            let g = random_graph(&mut rng, n, d);
            let oracle = g.distance_oracle(TableBudget::default());
            // independent brute force over all D^{2n} exponent pairs
            let total = (d as usize).pow(n as u32);
            let mut brute = vec![usize::MAX; total];
            brute[0] = 0;
            for mcode in 0..total {
                let mu = index_to_digits(mcode, d, n);
                for ncode in 0..total {
                    let nu = index_to_digits(ncode, d, n);
                    if mcode == 0 && ncode == 0 {
                        continue;
                    }
                    let size = (0..n).filter(|&l| mu[l] != 0 || nu[l] != 0).count();
                    let b = g.pauli_image_index(&mu, &nu).unwrap();
                    let idx = digits_to_index(&b, d);
                    if size < brute[idx] {
                        brute[idx] = size;
                    }
                }
            }
            for idx in 1..total {
                assert_eq!(oracle.dist0_index(idx), brute[idx], "d={d} idx={idx}");
            }
        }
    }

    #[test]
    fn per_pair_agrees_with_table() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..10 {
            let d = rng.gen_range(2..=3);
            let n = 4;
            let g = random_graph(&mut rng, n, d);
            let table = g.distance_oracle(TableBudget::default());
            let per_pair = g.distance_oracle(TableBudget { max_entries: 1, max_ops: 1 });
            assert!(table.has_table());
            assert!(!per_pair.has_table());
            for _ in 0..30 {
                let a: Vec<u64> = (0..n).map(|_| rng.gen_range(0..d)).collect();
                assert_eq!(table.dist0(&a), per_pair.dist0(&a));
            }
        }
    }

    #[test]
    fn distance_translation_invariance_and_symmetry() {
        for d in 2u64..=3 {
            let n = 3;
            let g = cycle_graph(n, d);
            let oracle = g.distance_oracle(TableBudget::default());
            let total = (d as usize).pow(n as u32);
            for ai in 0..total {
                let a = index_to_digits(ai, d, n);
                for bi in 0..total {
                    let b = index_to_digits(bi, d, n);
                    assert_eq!(oracle.dist(&a, &b), oracle.dist(&b, &a));
                    let diff: Vec<u64> =
                        a.iter().zip(&b).map(|(&x, &y)| (y + d - x) % d).collect();
                    assert_eq!(oracle.dist(&a, &b), oracle.dist0(&diff));
                }
            }
        }
    }

    #[test]
    fn diagonal_distance_examples() {
        for n in [3usize, 5, 7] {
            assert_eq!(star_graph(n, 2).diagonal_distance(), 2);
        }
        // isolated vertex: X on it fixes |G>
        let g = QuditGraph::from_edges(3, 2, &[(0, 1, 1)]).unwrap();
        assert_eq!(g.diagonal_distance(), 1);
        // cycles have two neighbors per vertex
        assert_eq!(cycle_graph(5, 2).diagonal_distance(), 3);
    }

    #[test]
    fn coordination_bound_holds() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for &d in &[2u64, 3, 4, 6] {
            for _ in 0..50 {
                let n = rng.gen_range(2..=6);
                let g = random_graph(&mut rng, n, d);
                let nu_min = (0..n).map(|v| g.neighbor_count(v)).min().unwrap();
                assert!(
                    g.diagonal_distance() <= nu_min + 1,
                    "coordination bound violated: {:?}",
                    g
                );
            }
        }
    }

    #[test]
    fn hypercube_diagonal_distance_allows_delta_four() {
        let g = hypercube_graph(4, 2);
        assert_eq!(g.n(), 16);
        let dp = g.diagonal_distance();
        assert!(dp >= 5, "diagonal distance {dp}");
    }
}
