//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ramsey_witness::enumerate::{connected_graphs, connected_graphs_up_to};
use ramsey_witness::extraction::{
    extract_independence_witness, extract_induced_matching_witness, extract_matching_witness, extract_path_clique_star,
    pendant_extension, ExtractionOutcome,
};
use ramsey_witness::invariants::{
    fractional_matching_number, independence_number, induced_matching_number, maximum_matching,
};
use ramsey_witness::scan::{empirical_threshold_graphs, has_target, scan_invariant_graphs, target_patterns, Theorem};
use ramsey_witness::{generate, parse_graph6, verify_witness, write_graph6, FamilySpec, Graph, VertexSet};

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sandwich_chains() -> Result<String, String> {
    let start = Instant::now();
    let graphs = connected_graphs(8);
    let report = scan_invariant_graphs(&graphs, 4, false).map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    ensure(report.graphs_scanned == 12113, || format!("scanned {} graphs", report.graphs_scanned))?;
    ensure(report.violations == 0, || format!("{:?}", report.violation_details))?;
    ensure(secs < 300.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{} graphs, 0 violations, {secs:.2}s", report.graphs_scanned))
}

fn family_table() -> Result<String, String> {
    let mut checked = 0;
    let mut expect = |spec: FamilySpec, got: usize, oracle: usize, want: usize| {
        checked += 1;
        ensure(got == want && oracle == want, || format!("{}: solver {got}, oracle {oracle}, want {want}", spec.label()))
    };
    for n in 1..=5 {
        for spec in [
            FamilySpec::hairy_clique(n, 2),
            FamilySpec::triangle_clique(n),
            FamilySpec::spider(n, 2),
            FamilySpec::friendship(n),
        ] {
            let g = generate(&spec).unwrap();
            expect(spec, induced_matching_number(&g).0, common::induced_matching(&g).0, n)?;
        }
    }
    for n in 1..=13 {
        let g = generate(&FamilySpec::path(n)).unwrap();
        expect(FamilySpec::path(n), induced_matching_number(&g).0, common::induced_matching(&g).0, (n - 1).div_ceil(3))?;
    }
    for n in 1..=6 {
        for (spec, want) in [
            (FamilySpec::spider(n, 2), n),
            (FamilySpec::friendship(n), n),
            (FamilySpec::clique(n), n / 2),
            (FamilySpec::biclique(n, n), n),
        ] {
            let g = generate(&spec).unwrap();
            expect(spec, maximum_matching(&g).0, common::matching(&g).0, want)?;
        }
    }
    Ok(format!("{checked} entries match"))
}

fn oracle_equivalence() -> Result<String, String> {
    let graphs = connected_graphs(7);
    for g in &graphs {
        let (a, s) = independence_number(g);
        ensure((a, s.into_vec()) == common::independence(g), || format!("independence on {}", write_graph6(g)))?;
        let (m, e) = maximum_matching(g);
        ensure((m, e.as_slice().to_vec()) == common::matching(g), || format!("matching on {}", write_graph6(g)))?;
        let (i, e) = induced_matching_number(g);
        ensure((i, e.as_slice().to_vec()) == common::induced_matching(g), || format!("induced matching on {}", write_graph6(g)))?;
        ensure(fractional_matching_number(g) == common::fractional_cover(g), || format!("fractional on {}", write_graph6(g)))?;
    }
    Ok(format!("{} graphs, four solvers", graphs.len()))
}

fn lemma_soundness() -> Result<String, String> {
    let mut instances = 0;
    for g in connected_graphs(6) {
        let cuts = g.cut_vertices().unwrap();
        for t in common::subsets(g.order()).filter(|t| !t.is_empty()) {
            let tset = VertexSet::from(t.clone());
            let sub = g.induced_subgraph(&tset).unwrap().0;
            if !sub.is_connected() {
                continue;
            }
            let sub_cuts = sub.cut_vertices().unwrap();
            let eligible: Vec<usize> =
                (0..t.len()).filter(|&i| cuts.contains(t[i]) && !sub_cuts.contains(i)).map(|i| t[i]).collect();
            for pick in common::subsets(eligible.len()) {
                let pivots: VertexSet = pick.iter().map(|&i| eligible[i]).collect();
                let out = pendant_extension(&g, &tset, &pivots).map_err(|e| e.to_string())?;
                ensure(g.is_independent(&out), || format!("dependent output on {}", write_graph6(&g)))?;
                for (v, w) in pivots.iter().zip(&out) {
                    let seen: Vec<usize> = t.iter().copied().filter(|&x| g.adjacent(x, *w)).collect();
                    ensure(!tset.contains(*w) && seen == [v], || format!("pivot {v} on {}", write_graph6(&g)))?;
                }
                instances += 1;
            }
        }
    }
    Ok(format!("{instances} instances"))
}

fn random_connected(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.random_range(8..=20);
        let p: f64 = rng.random_range(0.08..0.6);
        let g = Graph::from_fn(n, |_, _| rng.random_bool(p));
        if g.is_connected() {
            return g;
        }
    }
}

fn extraction_soundness() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut graphs: Vec<Graph> = (0..10_000).map(|_| random_connected(&mut rng)).collect();
    graphs.extend(connected_graphs(8));
    let (mut runs, mut found) = (0, 0);
    for g in &graphs {
        for n in 2..=3 {
            let outs = [
                extract_independence_witness(g, n),
                extract_induced_matching_witness(g, n),
                extract_matching_witness(g, n, n),
            ];
            for out in outs {
                let out = out.map_err(|e| format!("{} at n = {n}: {e}", write_graph6(g)))?;
                runs += 1;
                if let Some(w) = out.witness() {
                    found += 1;
                    ensure(verify_witness(g, w), || format!("{} yields unverifiable {w:?}", write_graph6(g)))?;
                }
            }
        }
    }
    Ok(format!("{} graphs, {runs} runs, {found} witnesses, all verified", graphs.len()))
}

/// Hangs `extra` pendant vertices at random spots of `g`.
fn with_noise(g: &Graph, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = g.edges();
    let mut order = g.order();
    for _ in 0..extra {
        edges.push((rng.random_range(0..order), order));
        order += 1;
    }
    Graph::from_edges(order, &edges).unwrap()
}

fn planted_completeness() -> Result<String, String> {
    type Pipeline = fn(&Graph, usize) -> ExtractionOutcome;
    let path_clique_star: Pipeline = |g, n| extract_path_clique_star(g, n).unwrap();
    let independence: Pipeline = |g, n| extract_independence_witness(g, n).unwrap();
    let induced: Pipeline = |g, n| extract_induced_matching_witness(g, n).unwrap();
    let matching: Pipeline = |g, n| extract_matching_witness(g, n, n).unwrap();
    // (family, planted parameter as a function of n, pipeline)
    let plans: [(&str, fn(usize) -> FamilySpec, Pipeline); 9] = [
        ("path", |n| FamilySpec::path(n), induced),
        ("clique", |n| FamilySpec::clique(n), path_clique_star),
        ("star", |n| FamilySpec::star(n), independence),
        ("biclique", |n| FamilySpec::biclique(3 * n, 3 * n), matching),
        ("hairy clique l=1", |n| FamilySpec::hairy_clique(n, 1), independence),
        ("hairy clique l=2", |n| FamilySpec::hairy_clique(n, 2), induced),
        ("triangle clique", |n| FamilySpec::triangle_clique(n), induced),
        ("spider", |n| FamilySpec::spider(n, 2), induced),
        ("friendship", |n| FamilySpec::friendship(n), induced),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut hosts = 0;
    for (name, plant, pipeline) in plans {
        for n in 1..=4 {
            let base = generate(&plant(n)).unwrap();
            for extra in 1..=4 {
                let g = with_noise(&base, extra * n, &mut rng);
                let out = pipeline(&g, n);
                let w = out.witness().ok_or_else(|| format!("{name} n = {n}: {out:?} on {}", write_graph6(&g)))?;
                ensure(verify_witness(&g, w) && w.spec.parameter() >= n, || format!("{name} n = {n}: bad {w:?}"))?;
                hosts += 1;
            }
        }
    }
    Ok(format!("{hosts} noisy hosts over 8 families, n = 1..4"))
}

fn threshold_reproduction() -> Result<String, String> {
    let graphs = connected_graphs(8);
    let report = empirical_threshold_graphs(&graphs, Theorem::InducedMatching, 3, 4).map_err(|e| e.to_string())?;
    ensure(report.empirical_threshold == 2, || format!("threshold {}", report.empirical_threshold))?;
    let mut cliques: Vec<String> = (2..=8).map(|k| write_graph6(&Graph::complete(k))).collect();
    cliques.sort();
    ensure(report.extremal == cliques, || format!("extremal {:?}", report.extremal))?;
    let patterns = target_patterns(Theorem::InducedMatching, 3);
    for code in &report.extremal {
        ensure(!has_target(&parse_graph6(code).unwrap(), &patterns), || format!("{code} has a target"))?;
    }
    Ok("threshold 2, extremal graphs K_2..K_8".into())
}

fn graph6_round_trip() -> Result<String, String> {
    let graphs = connected_graphs(7);
    for g in &graphs {
        let text = write_graph6(g);
        let back = parse_graph6(&text).map_err(|e| e.to_string())?;
        ensure(write_graph6(&back) == text && &back == g, || format!("{text} does not round trip"))?;
    }
    ensure(parse_graph6("Bw").ok() == Some(Graph::complete(3)), || "Bw is not K_3".into())?;
    ensure(write_graph6(&Graph::complete(3)) == "Bw", || "K_3 is not Bw".into())?;
    let counts: Vec<usize> = connected_graphs_up_to(7).iter().map(Vec::len).collect();
    Ok(format!("{} graphs (by order {counts:?}), Bw <-> K_3", graphs.len()))
}

fn determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let catalogue = dir.path().join("c8.g6");
    let bin = env!("CARGO_BIN_EXE_ramsey-witness");
    let run = |args: &[&str]| -> Result<(), String> {
        let status = Command::new(bin).args(args).status().map_err(|e| e.to_string())?;
        ensure(status.success(), || format!("{args:?} exited with {status}"))
    };
    let cat = catalogue.to_str().unwrap();
    run(&["catalogue", "--max-order", "8", "--output", cat])?;
    let mut compared = 0;
    for (theorem, report) in [("matching", "threshold"), ("induced-matching", "threshold"), ("independence", "invariants")] {
        let mut outputs = Vec::new();
        for jobs in ["1", "8"] {
            let out = dir.path().join(format!("{theorem}-{jobs}.json"));
            let o = out.to_str().unwrap();
            run(&["scan", "--theorem", theorem, "--n", "3", "--input", cat, "--jobs", jobs, "--output", o, "--report", report])?;
            outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
        }
        ensure(outputs[0] == outputs[1], || format!("{theorem} {report} reports differ"))?;
        compared += 1;
    }
    Ok(format!("{compared} report pairs byte-identical across --jobs 1 and 8"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 9] = [
        ("sandwich chains on all connected graphs up to 8 vertices", sandwich_chains),
        ("family value table", family_table),
        ("oracle equivalence up to 7 vertices", oracle_equivalence),
        ("pendant extension soundness up to 6 vertices", lemma_soundness),
        ("extraction soundness", extraction_soundness),
        ("planted completeness", planted_completeness),
        ("empirical threshold, induced matching, n = 3", threshold_reproduction),
        ("graph6 round trip", graph6_round_trip),
        ("scan determinism across worker counts", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", 9 - failed, 9);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
