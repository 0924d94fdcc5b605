//! Brute-force oracles, deliberately naive and independent of the library's
//! search code, checked against the library on the fixed configuration and on
//! seeded random graphs.

use std::collections::BTreeSet;

use bkverify_core::canon::{canonical_graph6, is_isomorphic};
use bkverify_core::graph6::{from_graph6, to_graph6};
use bkverify_core::kempe::{self, find_u_phi, lemma_predicates, Outcome, UPhiState};
use bkverify_core::patterns::{
    build_c5_plus, catalog, contains_induced, find_hole, find_induced_path, has_hole, has_induced_path, Tier,
};
use bkverify_core::solvers::{chromatic_number, max_clique};
use bkverify_core::{Graph, Unlimited, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out
}

fn induced_edges(g: &Graph, s: &[usize]) -> usize {
    let mut m = 0;
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            m += g.has_edge(a, b) as usize;
        }
    }
    m
}

fn inner_degree(g: &Graph, s: &[usize], v: usize) -> usize {
    s.iter().filter(|&&w| g.has_edge(v, w)).count()
}

fn connected(g: &Graph, s: &[usize]) -> bool {
    let mut seen = vec![s[0]];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        for &w in s {
            if g.has_edge(v, w) && !seen.contains(&w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    seen.len() == s.len()
}

fn brute_omega(g: &Graph) -> usize {
    (1..=g.n())
        .rev()
        .find(|&k| subsets(g.n(), k).iter().any(|s| induced_edges(g, s) == k * (k - 1) / 2))
        .unwrap_or(0)
}

/// Plain recursive enumeration of colorings in vertex order.
fn brute_colorable(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
    let v = colors.len();
    if v == g.n() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|w| !g.has_edge(v, w) || colors[w] != c) {
            colors.push(c);
            if brute_colorable(g, k, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

fn brute_chi(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| brute_colorable(g, k, &mut Vec::new())).unwrap()
}

fn brute_has_path(g: &Graph, k: usize) -> bool {
    subsets(g.n(), k)
        .iter()
        .any(|s| induced_edges(g, s) == k - 1 && connected(g, s) && s.iter().all(|&v| inner_degree(g, s, v) <= 2))
}

fn brute_has_hole(g: &Graph, k: usize) -> bool {
    subsets(g.n(), k)
        .iter()
        .any(|s| induced_edges(g, s) == k && connected(g, s) && s.iter().all(|&v| inner_degree(g, s, v) == 2))
}

/// Lexicographically first injective tuple that induces `pattern`.
fn brute_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    fn go(host: &Graph, pattern: &Graph, tuple: &mut Vec<usize>) -> bool {
        let p = tuple.len();
        if p == pattern.n() {
            return true;
        }
        for h in 0..host.n() {
            if tuple.contains(&h) {
                continue;
            }
            if (0..p).all(|q| pattern.has_edge(p, q) == host.has_edge(h, tuple[q])) {
                tuple.push(h);
                if go(host, pattern, tuple) {
                    return true;
                }
                tuple.pop();
            }
        }
        false
    }
    let mut tuple = Vec::new();
    go(host, pattern, &mut tuple).then_some(tuple)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && permutations(a.n())
            .iter()
            .any(|p| (0..a.n()).all(|x| (x + 1..a.n()).all(|y| a.has_edge(x, y) == b.has_edge(p[x], p[y]))))
}

/// graph6 written straight from the format description, for `n <= 62`.
fn brute_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j) as u8);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    let mut out = vec![n as u8 + 63];
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b);
        out.push(v + 63);
    }
    out
}

#[test]
fn c5_plus_clique_number_is_four() {
    let g = build_c5_plus();
    assert_eq!(brute_omega(&g), 4);
    assert_eq!(max_clique(&g, &mut Unlimited).unwrap().size(), 4);
}

#[test]
fn c5_plus_chromatic_number_matches_exhaustive_search() {
    let g = build_c5_plus();
    let brute = brute_chi(&g);
    let (chi, col) = chromatic_number(&g, &mut Unlimited).unwrap();
    assert_eq!(chi, brute);
    assert!(col.is_proper(&g));
    println!("chi(C5+) = {chi}");
}

#[test]
fn c5_plus_has_no_induced_c4() {
    let g = build_c5_plus();
    assert!(!brute_has_hole(&g, 4));
    assert!(!has_hole(&g, 4).unwrap());
}

#[test]
fn c5_plus_p6_status_matches_subset_scan() {
    let g = build_c5_plus();
    let brute = brute_has_path(&g, 6);
    assert_eq!(has_induced_path(&g, 6).unwrap(), brute);
    println!("C5+ contains an induced P6: {brute}");
}

#[test]
fn derived_subsets_extract_their_catalog_graphs() {
    let host = build_c5_plus();
    let mut checked = 0;
    for entry in catalog().iter().filter(|e| e.tier == Tier::Derived) {
        let Some(subset) = entry.subset_indices() else {
            continue;
        };
        let extracted = host.induced_subgraph(&subset).unwrap();
        let expected = entry.graph();
        assert!(brute_isomorphic(&extracted, &expected), "{}", entry.key);
        assert!(is_isomorphic(&extracted, &expected), "{}", entry.key);
        checked += 1;
    }
    assert_eq!(checked, 7);
}

#[test]
fn catalog_containment_matches_brute_force() {
    let host = build_c5_plus();
    for entry in catalog() {
        let pattern = entry.graph();
        let brute = brute_embedding(&host, &pattern);
        let fast = contains_induced(&host, &pattern).map(|w| w.mapping);
        assert_eq!(fast, brute, "{}", entry.key);
        println!(
            "{:>10}: {}",
            entry.key,
            if brute.is_some() { "induced" } else { "absent" }
        );
    }
}

#[test]
fn standard_small_patterns_against_c5_plus() {
    let host = build_c5_plus();
    for key in ["diamond", "bull"] {
        let e = catalog().iter().find(|e| e.key == key).unwrap();
        assert!(brute_embedding(&host, &e.graph()).is_some(), "{key}");
    }
    // House contains an induced C4, and no neighborhood of C5+ induces a P4.
    for key in ["house", "gem"] {
        let e = catalog().iter().find(|e| e.key == key).unwrap();
        assert!(brute_embedding(&host, &e.graph()).is_none(), "{key}");
    }
}

#[test]
fn solvers_match_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.random_range(1..=9);
        let p = rng.random_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(max_clique(&g, &mut Unlimited).unwrap().size(), brute_omega(&g));
        let (chi, col) = chromatic_number(&g, &mut Unlimited).unwrap();
        assert_eq!(chi, brute_chi(&g), "{}", String::from_utf8_lossy(&to_graph6(&g)));
        assert!(col.is_proper(&g) && col.is_total());
    }
}

#[test]
fn detectors_match_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rng.random_range(2..=10);
        let p = rng.random_range(0.15..0.7);
        let g = random_graph(&mut rng, n, p);
        for k in 2..=n.min(7) {
            let found = find_induced_path(&g, k).unwrap();
            assert_eq!(found.is_some(), brute_has_path(&g, k));
            if let Some(path) = found {
                let mut s = path.clone();
                s.sort();
                assert_eq!(induced_edges(&g, &s), k - 1);
                assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
            }
        }
        for k in 4..=n.min(7) {
            let found = find_hole(&g, k).unwrap();
            assert_eq!(found.is_some(), brute_has_hole(&g, k));
            if let Some(c) = found {
                assert!((0..k).all(|i| g.has_edge(c[i], c[(i + 1) % k])));
            }
        }
    }
}

#[test]
fn embeddings_match_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..400 {
        let n = rng.random_range(1..=9);
        let p = rng.random_range(0.2..0.8);
        let host = random_graph(&mut rng, n, p);
        let k = rng.random_range(1..=4);
        let pattern = random_graph(&mut rng, k, 0.5);
        let fast = contains_induced(&host, &pattern).map(|w| w.mapping);
        assert_eq!(fast, brute_embedding(&host, &pattern));
    }
}

#[test]
fn canonical_forms_match_brute_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let n = rng.random_range(1..=6);
        let a = random_graph(&mut rng, n, 0.5);
        let b = if rng.random_bool(0.5) {
            let mut order: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                order.swap(i, rng.random_range(0..=i));
            }
            a.permuted(&order).unwrap()
        } else {
            random_graph(&mut rng, n, 0.5)
        };
        let same = canonical_graph6(&a) == canonical_graph6(&b);
        assert_eq!(same, brute_isomorphic(&a, &b));
        assert_eq!(is_isomorphic(&a, &b), same);
    }
}

#[test]
fn graph6_matches_format_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let n = rng.random_range(0..=62);
        let g = random_graph(&mut rng, n, 0.3);
        let enc = to_graph6(&g);
        assert_eq!(enc, brute_graph6(&g));
        assert_eq!(from_graph6(&enc).unwrap(), g);
    }
}

/// Random graphs where vertex 0 has degree 9, kept when a state exists.
fn random_states(seed: u64, want: usize) -> Vec<UPhiState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < want {
        let n = rng.random_range(11..=15);
        let p = rng.random_range(0.2..0.6);
        let mut edges: Vec<(usize, usize)> = (1..=9).map(|v| (0, v)).collect();
        for a in 1..n {
            for b in a + 1..n {
                if rng.random_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if let Some(s) = find_u_phi(&g, &mut Unlimited).unwrap() {
            s.validate().unwrap();
            out.push(s);
        }
    }
    out
}

fn nbr(g: &Graph, v: usize) -> BTreeSet<usize> {
    g.neighbors(v).collect()
}

#[test]
fn lemma_arithmetic_matches_set_operations() {
    for s in random_states(16, 40) {
        let g = s.graph();
        let u7: BTreeSet<usize> = (1..=7).map(|i| s.ui(i)).collect();
        let report = lemma_predicates(&s);
        let outcome = |id: &str| report.clause(id).unwrap().outcome;

        let mut common_ok = true;
        for i in 1..=7 {
            for j in i + 1..=7 {
                if !g.has_edge(s.ui(i), s.ui(j)) {
                    let c: BTreeSet<_> = nbr(g, s.ui(i)).intersection(&nbr(g, s.ui(j))).copied().collect();
                    common_ok &= c.intersection(&u7).count() <= 2;
                }
            }
        }
        assert_eq!(outcome(kempe::COMMON_NEIGHBORS) == Outcome::Holds, common_ok);

        let few = (1..=7).all(|i| (1..=7).filter(|&k| k != i && !g.has_edge(s.ui(i), s.ui(k))).count() <= 2);
        assert_eq!(outcome(kempe::FEW_NONNEIGHBORS) == Outcome::Holds, few);

        let cover: BTreeSet<_> = nbr(g, s.x()).union(&nbr(g, s.y())).copied().collect();
        let cover_ok = cover.intersection(&u7).count() >= 5;
        assert_eq!(outcome(kempe::XY_COVER) == Outcome::Holds, cover_ok);
        assert_eq!(outcome(kempe::NOT_BOTH) == Outcome::Holds, !(few && cover_ok));

        let sees_all = |v: usize| {
            let mut seen: BTreeSet<u32> = g.neighbors(v).filter_map(|w| s.color(w)).collect();
            seen.insert(s.color(v).unwrap());
            seen.len() == 8
        };
        let no_missing = (1..=7).all(|i| sees_all(s.ui(i)));
        assert_eq!(outcome(kempe::UI_NO_MISSING) == Outcome::Holds, no_missing);

        let sparse = (1..=7).any(|i| nbr(g, s.ui(i)).intersection(&u7).count() <= 3);
        match outcome(kempe::SPARSE_UI) {
            Outcome::NotApplicable => {}
            o => assert_eq!(o == Outcome::Holds, sparse),
        }
    }
}

/// Reachability inside the `{i, j}`-colored vertices, by repeated relaxation.
fn brute_reachable(s: &UPhiState, from: usize, to: usize, i: u32, j: u32) -> bool {
    let g = s.graph();
    let ok = |v: usize| matches!(s.color(v), Some(c) if c == i || c == j);
    let mut reach = VertexSet::new();
    reach.insert(from);
    loop {
        let before = reach.len();
        for v in reach.to_vec() {
            for w in g.neighbors(v).filter(|&w| ok(w)) {
                reach.insert(w);
            }
        }
        if reach.len() == before {
            return reach.contains(to);
        }
    }
}

#[test]
fn alternating_paths_match_reachability() {
    for s in random_states(17, 40) {
        for (i, j) in s.nonadjacent_pairs() {
            let fast = kempe::exists_alternating_path(&s, i, j).unwrap();
            assert_eq!(fast, kempe::exists_alternating_path(&s, j, i).unwrap());
            assert_eq!(fast, brute_reachable(&s, s.ui(i), s.ui(j), i as u32, j as u32));
            let path = kempe::alternating_path(&s, i, j).unwrap();
            assert_eq!(path.is_some(), fast);
            if let Some(p) = path {
                let mut sorted = p.clone();
                sorted.sort();
                assert_eq!(induced_edges(s.graph(), &sorted), p.len() - 1);
                assert!(p
                    .iter()
                    .all(|&v| matches!(s.color(v), Some(c) if c == i as u32 || c == j as u32)));
            }
        }
    }
}

#[test]
fn extension_outputs_are_proper_eight_colorings() {
    let mut successes = 0;
    let states = random_states(18, 40);
    for s in &states {
        if let Some(col) = kempe::try_extend_to_u(s) {
            successes += 1;
            assert_eq!(col.len(), s.graph().n());
            assert!(col.is_total() && col.colors_used() <= 8);
            for (a, b) in s.graph().edges() {
                assert_ne!(col.get(a), col.get(b));
            }
        }
    }
    println!("extension succeeded on {successes}/{} states", states.len());
}
