//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the terminal; exits nonzero if any
//! criterion fails.

use std::time::{Duration, Instant};

use graph_discord::block::block_decompose;
use graph_discord::density::{Rational, Sign};
use graph_discord::generators::{
    complete_bipartite, complete_graph, final_example, figure3_h, local_relabel, partially_symmetric_regular,
    random_graph, regular_normal_block, werner_graph, BipartiteLabeling,
};
use graph_discord::graph::{ClusterLabeling, Instance};
use graph_discord::measures::{nn, qd};
use graph_discord::oracle::{
    eigenbasis_discord, exhaustive_equivalence, fixed_basis_discord, oracle_qd, qd_oracle_sweep, sampled_equivalence,
    validate_density,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const QD_H: u64 = 80;

type Verdict = Result<String, String>;

fn qd_both(inst: &Instance) -> [u64; 2] {
    Sign::BOTH.map(|s| qd(&inst.graph, &inst.labeling, s).unwrap().qd_total)
}

fn within(limit: Duration, start: Instant, detail: String) -> Verdict {
    let took = start.elapsed();
    if took <= limit {
        Ok(format!("{detail}; {:.2}s", took.as_secs_f64()))
    } else {
        Err(format!("{detail}; took {:.2}s, limit {}s", took.as_secs_f64(), limit.as_secs()))
    }
}

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let ex = exhaustive_equivalence(3).map_err(|e| e.to_string())?;
    let sa = sampled_equivalence(4..=10, 1500, 0xace1);
    let pairs: u64 = sa.per_order.iter().map(|c| c.pairs).sum();
    let detail = format!(
        "exhaustive n<=3 checked {} ({} mismatches), sampled n=4..10 {} pairs ({} mismatches)",
        ex.checked, ex.mismatches, pairs, sa.mismatches
    );
    if ex.mismatches != 0 || sa.mismatches != 0 || pairs < 10_000 {
        return Err(detail);
    }
    within(Duration::from_secs(30), start, detail)
}

fn qd_oracle_identity() -> Verdict {
    let start = Instant::now();
    let shapes: Vec<(usize, usize)> = (1..=4)
        .flat_map(|m| (1..=4).map(move |n| (m, n)))
        .filter(|(m, n)| m * n >= 2)
        .collect();
    let s = qd_oracle_sweep(&shapes, 600, 0x5eed).map_err(|e| e.to_string())?;
    let graphs = s.checked / 2;
    let detail = format!("{graphs} graphs x 2 signs, {} mismatches", s.mismatches);
    if s.mismatches != 0 || graphs < 500 {
        return Err(detail);
    }
    within(Duration::from_secs(60), start, detail)
}

fn complete_graphs_zero() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let mut checked = 0;
    for m in 2..=5 {
        for n in 2..=5 {
            let k = complete_graph(m, n).unwrap();
            for _ in 0..20 {
                let mut order: Vec<usize> = (0..m * n).collect();
                order.shuffle(&mut rng);
                let lab = ClusterLabeling::from_zero_based(m, n, order).unwrap();
                for s in Sign::BOTH {
                    let q = qd(&k.graph, &lab, s).unwrap().qd_total;
                    if q != 0 {
                        return Err(format!("K_{} with m={m}, n={n}: qd = {q}", m * n));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (graph, labeling, sign) triples all 0"))
}

fn complete_bipartite_zero_and_h() -> Verdict {
    for n in 1..=8 {
        let g = complete_bipartite(n, &BipartiteLabeling::Natural).unwrap();
        if qd_both(&g) != [0, 0] {
            return Err(format!("K_{{{n},{n}}} natural: qd = {:?}", qd_both(&g)));
        }
    }
    let h = figure3_h();
    let dec = block_decompose(&h.graph, &h.labeling).unwrap();
    let ours = qd_both(&h);
    let oracle = Sign::BOTH.map(|s| oracle_qd(&dec, s));
    let detail = format!("K_{{n,n}} natural n<=8 all 0; H: qd = {ours:?}, oracle = {oracle:?}, pinned {QD_H}");
    if ours == oracle && ours == [QD_H, QD_H] {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn regular_families_zero() -> Verdict {
    let mut checked = 0;
    for n in 1..=8 {
        for r in 1..=n {
            for seed in [None, Some(1), Some(2), Some(3)] {
                for (name, inst) in [
                    ("partially_symmetric_regular", partially_symmetric_regular(n, r, seed).unwrap()),
                    ("regular_normal_block", regular_normal_block(n, r, seed).unwrap()),
                ] {
                    let q = qd_both(&inst);
                    if q != [0, 0] {
                        return Err(format!("{name}(n={n}, r={r}, seed={seed:?}): qd = {q:?}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} instances, both signs, all 0"))
}

fn werner_nonzero() -> Verdict {
    let mut parts = Vec::new();
    for d in 2..=6 {
        let w = werner_graph(d).unwrap();
        let dec = block_decompose(&w.graph, &w.labeling).unwrap();
        let max_nn = (0..d)
            .flat_map(|mu| (0..d).map(move |nu| (mu, nu)))
            .filter(|(mu, nu)| mu != nu)
            .map(|(mu, nu)| nn(dec.block(mu, nu)))
            .max()
            .unwrap();
        let q = qd_both(&w);
        if max_nn == 0 || q.contains(&0) {
            return Err(format!("d={d}: max nn {max_nn}, qd {q:?}"));
        }
        parts.push(format!("d={d}: nn {max_nn}, qd {q:?}"));
    }
    Ok(parts.join("; "))
}

fn local_invariance() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut checked = 0;
    for m in 1..=4 {
        for n in 1..=4 {
            if m * n < 2 {
                continue;
            }
            let mut done = 0;
            while done < 100 {
                let base = random_graph(m, n, rng.gen_range(0.1..0.9), rng.gen()).unwrap();
                let mut order: Vec<usize> = (0..m * n).collect();
                order.shuffle(&mut rng);
                let lab = ClusterLabeling::from_zero_based(m, n, order).unwrap();
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                if base.graph.total_degree() == 0 {
                    continue;
                }
                let h = local_relabel(&base.graph, &lab, &perm).unwrap();
                for s in Sign::BOTH {
                    let before = qd(&base.graph, &lab, s).unwrap().qd_total;
                    let after = qd(&h.graph, &h.labeling, s).unwrap().qd_total;
                    if before != after {
                        return Err(format!("m={m}, n={n}, perm {perm:?}: {before} -> {after}"));
                    }
                }
                done += 1;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (graph, permutation) pairs, both signs, all equal"))
}

fn final_example_criterion() -> Verdict {
    let f = final_example();
    let dec = block_decompose(&f.graph, &f.labeling).unwrap();
    let rho = dec.density_matrix(Sign::Laplacian).unwrap();
    let l = [[2, 0, -1, -1], [0, 1, -1, 0], [-1, -1, 2, 0], [-1, 0, 0, 1]];
    let reproduces = (0..4).all(|i| (0..4).all(|j| rho.get(i, j) == Rational::new(l[i][j], 6)));
    let r = qd(&f.graph, &f.labeling, Sign::Laplacian).unwrap();
    let b = &r.breakdown;
    let d = fixed_basis_discord(&rho, 2, 2).map_err(|e| e.to_string())?.discord_fixed_basis;
    let detail = format!(
        "rho = L/6: {reproduces}; prop4 = {}, qd = {}; fixed-basis discord = {d:.6}",
        b.prop4_total, r.qd_total
    );
    if reproduces && b.prop4_total > 0 && r.qd_total > 0 && d > 1e-3 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Every generated instance from the family sweeps, with a name.
fn generated_instances() -> Vec<(String, Instance)> {
    let mut out = Vec::new();
    for m in 2..=5 {
        for n in 2..=5 {
            out.push((format!("complete({m},{n})"), complete_graph(m, n).unwrap()));
        }
    }
    for n in 1..=8 {
        out.push((format!("complete_bipartite({n})"), complete_bipartite(n, &BipartiteLabeling::Natural).unwrap()));
        for r in 1..=n {
            for seed in [None, Some(1)] {
                out.push((
                    format!("partially_symmetric_regular({n},{r},{seed:?})"),
                    partially_symmetric_regular(n, r, seed).unwrap(),
                ));
                out.push((format!("regular_normal_block({n},{r},{seed:?})"), regular_normal_block(n, r, seed).unwrap()));
            }
        }
    }
    for d in 2..=6 {
        out.push((format!("werner({d})"), werner_graph(d).unwrap()));
    }
    out.push(("figure3_H".into(), figure3_h()));
    out.push(("final_example".into(), final_example()));
    for seed in 0..40 {
        let inst = random_graph(2 + (seed as usize % 3), 2 + (seed as usize / 3 % 3), 0.5, seed).unwrap();
        if inst.graph.total_degree() > 0 {
            out.push((format!("random(seed={seed})"), inst));
        }
    }
    out
}

fn density_validation() -> Verdict {
    let all = generated_instances();
    for (name, inst) in &all {
        let dec = block_decompose(&inst.graph, &inst.labeling).unwrap();
        for s in Sign::BOTH {
            let v = validate_density(&dec.density_matrix(s).unwrap(), 1e-9);
            if !v.is_valid() {
                return Err(format!("{name} s={}: {v:?}", s.value()));
            }
        }
    }
    Ok(format!("{} instances x 2 signs valid", all.len()))
}

struct DiscordScan {
    zero_qd: usize,
    over: usize,
    worst: f64,
    worst_name: String,
}

fn scan_zero_qd(discord: impl Fn(&Instance, Sign) -> Result<f64, String>) -> Result<DiscordScan, String> {
    let mut scan = DiscordScan {
        zero_qd: 0,
        over: 0,
        worst: 0.0,
        worst_name: String::new(),
    };
    for (name, inst) in generated_instances() {
        for s in Sign::BOTH {
            if qd(&inst.graph, &inst.labeling, s).unwrap().qd_total != 0 {
                continue;
            }
            scan.zero_qd += 1;
            let d = discord(&inst, s).map_err(|e| format!("{name} s={}: {e}", s.value()))?;
            if d.abs() > 1e-9 {
                scan.over += 1;
            }
            if d.abs() > scan.worst {
                scan.worst = d.abs();
                scan.worst_name = format!("{name} s={}", s.value());
            }
        }
    }
    Ok(scan)
}

fn entropy_cross_check() -> Verdict {
    let scan = scan_zero_qd(|inst, s| {
        let dec = block_decompose(&inst.graph, &inst.labeling).unwrap();
        let rho = dec.density_matrix(s).unwrap();
        fixed_basis_discord(&rho, inst.labeling.m(), inst.labeling.n())
            .map(|r| r.discord_fixed_basis)
            .map_err(|e| e.to_string())
    })?;
    let detail = format!(
        "computational basis: {} of {} zero-QD states exceed 1e-9, worst {:.6} ({})",
        scan.over, scan.zero_qd, scan.worst, scan.worst_name
    );
    if scan.over == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn entropy_cross_check_eigenbasis() -> Verdict {
    let scan = scan_zero_qd(|inst, s| {
        let dec = block_decompose(&inst.graph, &inst.labeling).unwrap();
        let rho = dec.density_matrix(s).unwrap();
        eigenbasis_discord(&rho, inst.labeling.m(), inst.labeling.n())
            .map(|r| r.discord_fixed_basis)
            .map_err(|e| e.to_string())
    })?;
    let detail = format!(
        "joint block eigenbasis: {} of {} zero-QD states exceed 1e-9, worst {:.3e}",
        scan.over, scan.zero_qd, scan.worst
    );
    if scan.over == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() {
    let criteria: [(&str, &str, fn() -> Verdict); 11] = [
        ("AC1", "counting measures equal matrix products", oracle_equivalence),
        ("AC2", "QD equals block commutator sum", qd_oracle_identity),
        ("AC3", "complete graphs have QD 0 under any labeling", complete_graphs_zero),
        ("AC4", "complete bipartite natural is 0, H is pinned", complete_bipartite_zero_and_h),
        ("AC5", "regular bipartite families have QD 0", regular_families_zero),
        ("AC6", "Werner graphs have a non-normal block", werner_nonzero),
        ("AC7", "QD invariant under slot relabeling", local_invariance),
        ("AC8", "two-qubit separable example", final_example_criterion),
        ("AC9a", "density matrices are valid states", density_validation),
        ("AC9b", "zero QD gives zero computational-basis discord", entropy_cross_check),
        ("AC9c", "zero QD gives zero discord in the block eigenbasis", entropy_cross_check_eigenbasis),
    ];
    let mut failed = Vec::new();
    for (id, name, check) in criteria {
        match check() {
            Ok(detail) => println!("{id:<5} PASS  {name}: {detail}"),
            Err(detail) => {
                println!("{id:<5} FAIL  {name}: {detail}");
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
    } else {
        println!("acceptance: {} of {} failed: {}", failed.len(), criteria.len(), failed.join(", "));
        std::process::exit(1);
    }
}
