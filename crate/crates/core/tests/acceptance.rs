//! End-to-end acceptance checks. Everything runs inside one test, one
//! criterion after another, so the timing measurements are not disturbed by
//! other tests running in parallel. Each criterion prints a PASS or FAIL line.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use fourecc::cuts3::{enumerate, prepare};
use fourecc::dfs::DfsTree;
use fourecc::four_ecc::{classify_and_size, four_ecc_3ec_rooted, sort_cuts, SplitState};
use fourecc::oracle::{
    brute_3cuts, brute_kecc, brute_min_3cut_count, generate, naive_params, random_permutation, GenSpec, Model,
};
use fourecc::reduction::{auxiliary_graphs, three_ecc_general, two_ecc};
use fourecc::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gen(model: Model, seed: u64) -> MultiGraph {
    generate(&GenSpec { model, seed }).unwrap()
}

fn theta() -> MultiGraph {
    gen(Model::Theta, 0)
}

/// 1000 random 3-edge-connected multigraphs, 2 <= n <= 12.
fn random_3ec_suite() -> Vec<MultiGraph> {
    (0..1000u64)
        .map(|i| {
            let n = 2 + (i % 11) as usize;
            let extra = ((i / 11) % 8) as usize;
            gen(Model::Random3ec { n, extra }, i)
        })
        .collect()
}

/// Small 3-edge-connected blocks (or single vertices) joined by 0 to 3 edges,
/// with an occasional pendant path, at most `max_n` vertices overall.
fn glued(seed: u64, max_n: usize) -> MultiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut n = 0;
    while n < max_n {
        let size = rng.gen_range(1..=5).min(max_n - n);
        let b = gen(Model::Random3ec { n: size, extra: rng.gen_range(0..3) }, rng.gen());
        edges.extend(b.edges().iter().map(|&(u, v)| (u + n, v + n)));
        if let Some(&(start, len)) = blocks.get(rng.gen_range(0..blocks.len().max(1))) {
            for _ in 0..rng.gen_range(0..=3) {
                edges.push((start + rng.gen_range(0..len), n + rng.gen_range(0..size)));
            }
        }
        blocks.push((n, size));
        n += size;
        if blocks.len() >= 3 && rng.gen_bool(0.3) {
            break;
        }
    }
    if n < max_n && rng.gen_bool(0.5) {
        edges.push((rng.gen_range(0..n), n));
        n += 1;
    }
    MultiGraph::new(n, edges).unwrap()
}

/// 1000 general multigraphs with n <= 12: uniform random ones at densities
/// from forests to dense, plus glued blocks.
fn general_suite() -> Vec<MultiGraph> {
    (0..1000u64)
        .map(|i| {
            let n = 1 + (i % 12) as usize;
            if i % 10 < 3 {
                glued(i, n.max(2))
            } else {
                let m = if n < 2 { 0 } else { (i as usize / 12 * 7) % (3 * n + 1) };
                gen(Model::RandomGeneral { n, m }, i)
            }
        })
        .collect()
}

fn triples(cuts: &[ThreeCut]) -> BTreeSet<[usize; 3]> {
    cuts.iter().map(|c| c.edges).collect()
}

fn fixtures_3ec() -> Vec<(String, MultiGraph)> {
    let mut out = vec![
        ("K4".to_string(), gen(Model::Complete { n: 4 }, 0)),
        ("K5".to_string(), gen(Model::Complete { n: 5 }, 0)),
        ("prism".to_string(), gen(Model::Prism, 0)),
        ("W5".to_string(), gen(Model::Wheel { rim: 5 }, 0)),
        ("twin-K5".to_string(), gen(Model::TwinK5, 0)),
    ];
    for (i, a) in auxiliary_graphs(&theta()).into_iter().enumerate() {
        out.push((format!("theta auxiliary {i}"), a.graph));
    }
    out
}

fn criterion_1() -> String {
    let start = Instant::now();
    let mut graphs: Vec<(String, MultiGraph)> = fixtures_3ec();
    graphs.extend(random_3ec_suite().into_iter().enumerate().map(|(i, g)| (format!("random #{i}"), g)));
    // Auxiliary graphs of the general suite are 3-edge-connected as well.
    for (i, g) in general_suite().iter().enumerate() {
        for a in auxiliary_graphs(g) {
            graphs.push((format!("auxiliary of general #{i}"), a.graph));
        }
    }
    let mut total = 0;
    for (name, g) in &graphs {
        let got = triples(&all_3cuts(g).unwrap());
        let want = brute_3cuts(g).unwrap();
        assert_eq!(got, want, "{name}");
        total += got.len();
    }
    let took = start.elapsed();
    assert!(took < Duration::from_secs(60), "took {took:?}");
    format!("{} graphs, {total} cuts, {took:.2?}", graphs.len())
}

fn criterion_2() -> String {
    let start = Instant::now();
    let suite = general_suite();
    let mut disconnected = 0;
    let mut with_bridges = 0;
    for (i, g) in suite.iter().enumerate() {
        assert_eq!(four_ecc_general(g), brute_kecc(g, 4).unwrap(), "general #{i}: {}", g.to_text());
        disconnected += usize::from(connected_components(g).count() > 1);
        with_bridges += usize::from(!two_ecc(g).bridges.is_empty());
    }
    // Larger glued instances, beyond the n <= 12 range.
    for s in 0..200 {
        let g = glued(10_000 + s, 24);
        assert_eq!(four_ecc_general(&g), brute_kecc(&g, 4).unwrap(), "glued {s}: {}", g.to_text());
    }
    assert!(disconnected >= 100 && with_bridges >= 100, "suite too tame: {disconnected} / {with_bridges}");
    let took = start.elapsed();
    assert!(took < Duration::from_secs(60), "took {took:?}");
    format!("{} + 200 graphs ({disconnected} disconnected, {with_bridges} with bridges), {took:.2?}", suite.len())
}

fn criterion_3() -> String {
    // (graph, 3-cuts, 4ecc classes, minimal 3-cut count)
    let cases: [(&str, MultiGraph, Option<usize>, usize, u128); 5] = [
        ("K4", gen(Model::Complete { n: 4 }, 0), Some(4), 4, 4),
        ("prism", gen(Model::Prism, 0), Some(7), 6, 7),
        ("K5", gen(Model::Complete { n: 5 }, 0), Some(0), 1, 0),
        ("twin-K5", gen(Model::TwinK5, 0), Some(1), 2, 1),
        ("theta", theta(), None, 5, 8),
    ];
    for (name, g, cuts, classes, min3) in &cases {
        if let Some(k) = cuts {
            assert_eq!(brute_3cuts(g).unwrap().len(), *k, "{name}: oracle cuts");
            assert_eq!(all_3cuts(g).unwrap().len(), *k, "{name}: cuts");
        }
        let want = brute_kecc(g, 4).unwrap();
        assert_eq!(want.count(), *classes, "{name}: oracle classes");
        assert_eq!(four_ecc_general(g), want, "{name}: classes");
        assert_eq!(brute_min_3cut_count(g).unwrap(), *min3, "{name}: oracle count");
        assert_eq!(count_minimal_3cuts(g), *min3, "{name}: count");
    }
    for name in ["K4", "prism", "theta"] {
        let g = &cases.iter().find(|c| c.0 == name).unwrap().1;
        assert_eq!(four_ecc_general(g), Partition::singletons(g.n()), "{name}: singletons");
    }
    format!("{} fixtures", cases.len())
}

fn criterion_4() -> String {
    let mut total = 0u128;
    for i in 0..500u64 {
        let n = 1 + (i % 10) as usize;
        let g = if i % 3 == 0 {
            glued(50_000 + i, n.max(2))
        } else {
            let m = if n < 2 { 0 } else { (i as usize * 5) % (3 * n + 1) };
            gen(Model::RandomGeneral { n, m }, 50_000 + i)
        };
        let want = brute_min_3cut_count(&g).unwrap();
        assert_eq!(count_minimal_3cuts(&g), want, "graph #{i}: {}", g.to_text());
        total += want;
    }
    format!("500 graphs, {total} minimal 3-cuts in total")
}

fn criterion_5() -> String {
    let mut graphs = Vec::new();
    for i in 0..400u64 {
        let n = 2 + (i % 7) as usize;
        graphs.push(gen(Model::Random3ec { n, extra: (i % 5) as usize }, 70_000 + i));
    }
    for i in 0..400u64 {
        let n = 2 + (i % 7) as usize;
        let g = gen(Model::RandomGeneral { n, m: n - 1 + (i % 9) as usize }, 80_000 + i);
        if connected_components(&g).count() == 1 {
            graphs.push(g);
        }
    }
    let mut checked = 0;
    let (mut null_variants, mut set_variants) = (0, 0);
    for g in &graphs {
        // Every root of every graph.
        for r in 0..g.n() {
            let t = DfsTree::build(g, r).unwrap();
            let p = DfsParams::compute(&t);
            let naive = naive_params(&t);
            if let Some(msg) = naive.first_mismatch(&p) {
                panic!("root {r}: {msg}\n{}", g.to_text());
            }
            for v in 1..t.n() {
                if p.chain.m[v] == NIL {
                    continue;
                }
                for x in [p.variants.m_tilde[v], p.variants.m_low1[v], p.variants.m_low2[v]] {
                    if x == NIL {
                        null_variants += 1;
                    } else {
                        set_variants += 1;
                    }
                }
            }
            checked += 1;
        }
    }
    assert!(null_variants > 0 && set_variants > 0);
    format!("{checked} rooted trees, {null_variants} null and {set_variants} defined M variants")
}

fn criterion_6() -> String {
    const ROUNDS: usize = 7;
    let sizes: Vec<usize> = (17..=20).map(|k| 1usize << k).collect();
    let graphs: Vec<MultiGraph> = sizes.iter().map(|&n| gen(Model::Random3ec { n, extra: n / 2 }, 1)).collect();
    for (g, &n) in graphs.iter().zip(&sizes) {
        assert_eq!(g.m(), 2 * n);
        let cuts = all_3cuts(g).unwrap().len();
        assert!(cuts <= 10 * n, "n={n}: {cuts} cuts");
    }
    // Sizes are interleaved within each round so that a slow stretch of the
    // machine does not land on a single size; each size keeps its best time.
    let mut best = vec![f64::INFINITY; sizes.len()];
    for _ in 0..ROUNDS {
        for (i, g) in graphs.iter().enumerate() {
            let t = Instant::now();
            std::hint::black_box(four_ecc_general(g));
            best[i] = best[i].min(t.elapsed().as_secs_f64());
        }
    }
    let mut report = vec![format!("2^17: {:.2}s", best[0])];
    let mut failures = Vec::new();
    for i in 1..sizes.len() {
        let ratio = best[i] / best[i - 1];
        report.push(format!("2^{}: {:.2}s x{ratio:.2}", 17 + i, best[i]));
        if ratio > 2.5 {
            failures.push(format!("ratio {ratio:.2} at 2^{}", 17 + i));
        }
    }
    if best[3] >= 30.0 {
        failures.push(format!("n=2^20 took {:.2}s", best[3]));
    }
    assert!(failures.is_empty(), "{}; {}", failures.join("; "), report.join(", "));
    report.join(", ")
}

/// Counters of one 3-edge-connected graph, each divided by `n`.
fn counter_ratios(g: &MultiGraph) -> [f64; 3] {
    let (t, p) = prepare(g, 0).unwrap();
    let e = enumerate(&t, &p, g.m());
    let n = g.n() as f64;
    [p.chain.descents as f64 / n, p.variants.descents.iter().sum::<usize>() as f64 / n, e.lowest_w_descents as f64 / n]
}

fn criterion_7() -> String {
    let mut graphs: Vec<MultiGraph> = random_3ec_suite();
    for g in general_suite() {
        graphs.extend(auxiliary_graphs(&g).into_iter().map(|a| a.graph).filter(|a| a.n() >= 2));
    }
    for k in [10, 14, 17] {
        let n = 1 << k;
        graphs.push(gen(Model::Random3ec { n, extra: n / 2 }, 1));
    }
    let mut worst = [0f64; 3];
    for g in graphs.iter().filter(|g| g.n() >= 2) {
        let r = counter_ratios(g);
        for i in 0..3 {
            worst[i] = worst[i].max(r[i]);
        }
        assert!(r.iter().all(|&x| x <= 2.0), "counters/n = {r:?}\n{}", g.to_text());
    }
    format!(
        "{} graphs; worst per n: M chain {:.2}, currentM {:.2}, lowestW {:.2}",
        graphs.len(),
        worst[0],
        worst[1],
        worst[2]
    )
}

/// Runs the split step by hand and checks the edge correspondence it keeps.
fn check_split(g: &MultiGraph, root: usize) -> Partition {
    let (t, p) = prepare(g, root).unwrap();
    let cuts = enumerate(&t, &p, g.m()).cuts;
    let sorted = sort_cuts(cuts.iter().map(|c| classify_and_size(c, &t)).collect(), t.n());
    let mut st = SplitState::new(&t);
    for c in &sorted {
        st.apply(c, &t.ends);
    }
    assert_eq!(st.vertex_count, t.n() + 2 * sorted.len());
    assert_eq!(st.live_edge_count(), g.m() + 3 * sorted.len());
    assert_eq!(st.settled.len(), 3 * sorted.len());
    let by_pre = st.components();
    Partition::from_labels(&(0..g.n()).map(|v| by_pre.label(t.pre[v])).collect::<Vec<_>>())
}

fn criterion_8() -> String {
    let mut graphs = random_3ec_suite();
    graphs.extend(general_suite());
    graphs.extend(fixtures_3ec().into_iter().map(|(_, g)| g));
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut roots = 0;
    for (i, g) in graphs.iter().enumerate() {
        let cc = connected_components(g);
        let two = two_ecc(g).partition;
        let three = three_ecc_general(g);
        let four = four_ecc_general(g);
        assert!(four.refines(&three), "4ecc not inside 3ecc, #{i}");
        assert!(three.refines(&two), "3ecc not inside 2ecc, #{i}");
        assert!(two.refines(&cc), "2ecc not inside cc, #{i}");

        // Relabeling the vertices moves the DFS root of every stage.
        let perm = random_permutation(g.n(), i as u64);
        let q = four_ecc_general(&g.permute_vertices(&perm));
        let back: Vec<usize> = (0..g.n()).map(|v| q.label(perm[v])).collect();
        assert_eq!(Partition::from_labels(&back), four, "relabeling changed the result, #{i}");

        for a in auxiliary_graphs(g).iter().filter(|a| a.graph.n() >= 2) {
            let h = &a.graph;
            let base = four_ecc_3ec_rooted(h, 0).unwrap();
            assert_eq!(check_split(h, 0), base);
            for _ in 0..5 {
                let r = rng.gen_range(0..h.n());
                assert_eq!(four_ecc_3ec_rooted(h, r).unwrap(), base, "root {r} of auxiliary of #{i}");
                assert_eq!(check_split(h, r), base);
                roots += 1;
            }
        }
    }
    format!("{} graphs, {roots} extra roots", graphs.len())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> String); 8] = [
        ("1 3-cut enumeration vs brute force", criterion_1),
        ("2 4ecc vs flow oracle", criterion_2),
        ("3 fixture values", criterion_3),
        ("4 minimal 3-cut count vs brute force", criterion_4),
        ("5 DFS parameters vs naive definitions", criterion_5),
        ("6 cut bound and scaling", criterion_6),
        ("7 amortization counters", criterion_7),
        ("8 structural invariants", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                let first = msg.lines().next().unwrap_or("").to_string();
                println!("FAIL criterion {name}: {first}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
