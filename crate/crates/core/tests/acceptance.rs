//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nakajima_core::correspondence::{
    phi_map, psi, psi_inverse, reverse_bumping_sequence, varphi, varphi_inverse,
};
use nakajima_core::membership::{
    is_member, is_member_theorem, matrices_with_column_sums, pair_decomposition, x_factorize,
};
use nakajima_core::tableaux::highest_tableau;
use nakajima_core::verify::{fuzz_statistics, local_axioms, test_matrix, verify_all};
use nakajima_core::{
    canonical_iso, generate, CartanDatum, Crystal, CrystalGraph, Execution, GenerateOptions,
    Monomial, MonomialCrystal, Orientation, Tableau, TableauCrystal, Weight,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            detail: String::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn monomial_graph(lambda: &Weight) -> CrystalGraph<Monomial> {
    let c = MonomialCrystal::new(lambda.rank()).unwrap();
    let seed = c.highest_weight_monomial(lambda).unwrap();
    generate(&c, seed, GenerateOptions::default()).unwrap()
}

fn tableau_graph(lambda: &Weight) -> CrystalGraph<Tableau> {
    let c = TableauCrystal::new(lambda.rank(), Orientation::Standard);
    generate(
        &c,
        highest_tableau(lambda).unwrap(),
        GenerateOptions::default(),
    )
    .unwrap()
}

type Edges = BTreeSet<(Monomial, usize, Monomial)>;
type GoldenCase<'a> = (&'a [i64], &'a [(&'a str, usize, &'a str)]);
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn golden_graphs() -> Outcome {
    let mut out = Outcome::new();
    let m = |s: &str| Monomial::parse(s, 2).unwrap();
    let cases: [GoldenCase; 3] = [
        (
            &[1, 0],
            &[
                ("Y1(0)", 1, "Y1(1)^-1 Y2(0)"),
                ("Y1(1)^-1 Y2(0)", 2, "Y2(1)^-1"),
            ],
        ),
        (
            &[2, 0],
            &[
                ("Y1(0)^2", 1, "Y1(0) Y1(1)^-1 Y2(0)"),
                ("Y1(0) Y1(1)^-1 Y2(0)", 2, "Y1(0) Y2(1)^-1"),
                ("Y1(0) Y1(1)^-1 Y2(0)", 1, "Y1(1)^-2 Y2(0)^2"),
                ("Y1(0) Y2(1)^-1", 1, "Y1(1)^-1 Y2(0) Y2(1)^-1"),
                ("Y1(1)^-2 Y2(0)^2", 2, "Y1(1)^-1 Y2(0) Y2(1)^-1"),
                ("Y1(1)^-1 Y2(0) Y2(1)^-1", 2, "Y2(1)^-2"),
            ],
        ),
        (
            &[1, 1],
            &[
                ("Y1(0) Y2(0)", 1, "Y1(1)^-1 Y2(0)^2"),
                ("Y1(0) Y2(0)", 2, "Y1(0) Y1(1) Y2(1)^-1"),
                ("Y1(1)^-1 Y2(0)^2", 2, "Y2(0) Y2(1)^-1"),
                ("Y1(0) Y1(1) Y2(1)^-1", 1, "Y1(0) Y1(2)^-1"),
                ("Y2(0) Y2(1)^-1", 2, "Y1(1) Y2(1)^-2"),
                ("Y1(0) Y1(2)^-1", 1, "Y1(1)^-1 Y1(2)^-1 Y2(0)"),
                ("Y1(1) Y2(1)^-2", 1, "Y1(2)^-1 Y2(1)^-1"),
                ("Y1(1)^-1 Y1(2)^-1 Y2(0)", 2, "Y1(2)^-1 Y2(1)^-1"),
            ],
        ),
    ];
    let mut sizes = Vec::new();
    for (lambda, edges) in cases {
        let g = monomial_graph(&Weight::new(lambda.to_vec()));
        let want: Edges = edges.iter().map(|&(a, i, b)| (m(a), i, m(b))).collect();
        let want_nodes: BTreeSet<Monomial> = want
            .iter()
            .flat_map(|(a, _, b)| [a.clone(), b.clone()])
            .collect();
        let got: Edges = g
            .edges()
            .iter()
            .map(|e| (g.node(e.from).clone(), e.color, g.node(e.to).clone()))
            .collect();
        let got_nodes: BTreeSet<Monomial> = g.nodes().iter().cloned().collect();
        // display strings must round-trip to the same node multiset
        let labels: Vec<Monomial> = g.nodes().iter().map(|n| m(&n.to_string())).collect();
        out.require(
            labels.len() == got_nodes.len() && labels.iter().all(|l| got_nodes.contains(l)),
            || format!("labels of {lambda:?} do not round-trip"),
        );
        out.require(
            got == want && got_nodes == want_nodes && g.edges().len() == want.len(),
            || format!("graph of {lambda:?} differs from the golden graph"),
        );
        sizes.push(g.len().to_string());
    }
    out.detail = format!("node counts {}", sizes.join(", "));
    out
}

fn counting() -> Outcome {
    let mut out = Outcome::new();
    let matrix = test_matrix();
    for lambda in &matrix {
        let cartan = CartanDatum::new(lambda.rank()).unwrap();
        let g = monomial_graph(lambda);
        let dim = cartan.weyl_dim(lambda).unwrap();
        out.require(g.len() as u128 == dim, || {
            format!("{lambda}: {} nodes, weyl_dim {dim}", g.len())
        });
    }
    out.detail = format!("{} weights", matrix.len());
    out
}

fn characterization() -> Outcome {
    let mut out = Outcome::new();
    let mut grids = 0;
    for lambda in &test_matrix() {
        let rank = lambda.rank();
        let c = MonomialCrystal::new(rank).unwrap();
        let g = monomial_graph(lambda);
        let bfs: HashSet<&Monomial> = g.nodes().iter().collect();
        let mut accepted = HashSet::new();
        for x in matrices_with_column_sums(lambda) {
            grids += 1;
            let mono = x.to_monomial();
            let member = is_member(&mono, lambda).unwrap();
            if member {
                accepted.insert(mono.clone());
            }
            let by_theorem = is_member_theorem(&pair_decomposition(&x).unwrap(), lambda).unwrap();
            out.require(by_theorem == member, || {
                format!("{lambda}: {mono} theorem {by_theorem}, is_member {member}")
            });
        }
        out.require(
            accepted.len() == bfs.len() && accepted.iter().all(|m| bfs.contains(m)),
            || format!("{lambda}: BFS nodes differ from accepted grids"),
        );
        for b in g.nodes() {
            out.require(is_member(b, lambda).unwrap(), || {
                format!("{lambda}: BFS node {b} rejected")
            });
            for i in 1..=rank {
                for image in [c.f_tilde(b, i), c.e_tilde(b, i)].into_iter().flatten() {
                    out.require(is_member(&image, lambda).unwrap(), || {
                        format!("{lambda}: {image} rejected")
                    });
                }
            }
        }
    }
    out.detail = format!("{grids} candidate grids");
    out
}

fn golden_membership() -> Outcome {
    let mut out = Outcome::new();
    let lambda = Weight::new(vec![1, 2, 1, 0]);
    let m = Monomial::parse("Y1(0)Y1(1)Y1(2)^-1Y2(1)^-1Y3(0)^3", 4).unwrap();
    out.require(is_member(&m, &lambda).unwrap(), || {
        "rank-4 sample member rejected".into()
    });
    let sums = x_factorize(&m, 4).unwrap().column_sums();
    out.require(sums == [4, 3, 1, 0], || format!("column sums {sums:?}"));

    let g = monomial_graph(&lambda);
    let oracle: HashSet<&Monomial> = g.nodes().iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(39);
    let mut accepted = 0;
    for _ in 0..20 {
        let i = rng.random_range(1..=4usize);
        let n = rng.random_range(-1..=4i64);
        let delta = if rng.random_bool(0.5) { 1 } else { -1 };
        let mutation = Monomial::from_factors(4, [(i, n, delta)]).unwrap();
        let mutated = &m * &mutation;
        let member = is_member(&mutated, &lambda).unwrap();
        accepted += member as usize;
        out.require(member == oracle.contains(&mutated), || {
            format!("{mutated}: is_member {member}")
        });
    }
    // A single ±1 exponent change leaves the root-lattice coset of λ, so it
    // is always rejected; shifting by A_i(k)^{±1} keeps the weight class and
    // exercises the grid inequalities as well.
    let c = MonomialCrystal::new(4).unwrap();
    let mut shifted_accepted = 0;
    for _ in 0..20 {
        let i = rng.random_range(1..=4usize);
        let k = rng.random_range(0..=3i64);
        let a = c.a_monomial(i, k).unwrap();
        let mutated = if rng.random_bool(0.5) {
            &m * &a
        } else {
            &m * &a.inverse()
        };
        let member = is_member(&mutated, &lambda).unwrap();
        shifted_accepted += member as usize;
        out.require(member == oracle.contains(&mutated), || {
            format!("{mutated}: is_member {member}")
        });
    }
    out.detail = format!(
        "20 exponent mutations, {accepted} re-accepted; 20 A-shifts, {shifted_accepted} re-accepted"
    );
    out
}

fn golden_maps() -> Outcome {
    let mut out = Outcome::new();
    let lambda = Weight::new(vec![1, 2, 1]);
    let m = Monomial::parse("Y1(3)^-1 Y2(0)^2 Y3(1)^-1", 3).unwrap();
    let s = Tableau::reverse(vec![vec![2, 2, 4, 4], vec![1, 1, 3], vec![2]]);
    let t = Tableau::standard(vec![vec![1, 1, 2, 4], vec![2, 2, 3], vec![4]]);

    let x = x_factorize(&m, 3).unwrap();
    out.require(
        x.m == [vec![0, 2, 0], vec![2, 0, 1], vec![0, 1, 0], vec![2, 0, 0]],
        || format!("X-matrix\n{x}"),
    );
    out.require(psi(&m, &lambda).unwrap() == s, || "ψ differs".into());
    out.require(varphi(&s, 3).unwrap() == t, || "φ differs".into());
    out.require(phi_map(&m, &lambda).unwrap() == t, || "φψ differs".into());
    let seq = reverse_bumping_sequence(&t, 3).unwrap();
    out.require(seq == [2, 3, 4, 1, 4, 1, 2, 2], || {
        format!("reverse bumping gave {seq:?}")
    });
    let back = varphi_inverse(&t, 3).unwrap();
    out.require(back == s, || format!("φ⁻¹ gave {back}"));
    out.require(
        back.columns() == [vec![2, 3, 4], vec![1, 4], vec![1, 2], vec![2]],
        || "recovered columns differ".into(),
    );
    out.require(psi_inverse(&s, 3).unwrap() == m, || "ψ⁻¹ differs".into());
    let column = Tableau::reverse(vec![vec![4], vec![3], vec![2]]);
    let x234 = Monomial::parse("Y1(3)^-1 Y4(0)", 3).unwrap();
    out.require(psi_inverse(&column, 3).unwrap() == x234, || {
        "ψ⁻¹ of the first column differs".into()
    });
    out.detail = "rank-3 sample member".into();
    out
}

fn isomorphism() -> Outcome {
    let mut out = Outcome::new();
    let mut nodes = 0;
    for lambda in &test_matrix() {
        let rank = lambda.rank();
        let mc = MonomialCrystal::new(rank).unwrap();
        let sc = TableauCrystal::new(rank, Orientation::Reverse);
        let gm = monomial_graph(lambda);
        let gt = tableau_graph(lambda);
        let iso = match canonical_iso(&gm, &gt) {
            Ok(iso) => iso,
            Err(e) => {
                out.failures.push(format!("{lambda}: {e}"));
                continue;
            }
        };
        for (id, b) in gm.nodes().iter().enumerate() {
            nodes += 1;
            let t = phi_map(b, lambda).unwrap();
            out.require(t == gt.nodes()[iso[id]], || {
                format!("{lambda}: φψ({b}) = {t}")
            });
            let s = psi(b, lambda).unwrap();
            for i in 1..=rank {
                let f = mc.f_tilde(b, i).map(|x| psi(&x, lambda).unwrap());
                out.require(f == sc.f_tilde(&s, i), || format!("{lambda}: ψ f_{i}({b})"));
                let e = mc.e_tilde(b, i).map(|x| psi(&x, lambda).unwrap());
                out.require(e == sc.e_tilde(&s, i), || format!("{lambda}: ψ e_{i}({b})"));
            }
        }
    }
    out.detail = format!("{nodes} nodes");
    out
}

fn axioms() -> Outcome {
    let mut out = Outcome::new();
    let mut nodes = 0;
    for lambda in &test_matrix() {
        let rank = lambda.rank();
        let mc = MonomialCrystal::new(rank).unwrap();
        let tc = TableauCrystal::new(rank, Orientation::Standard);
        for b in monomial_graph(lambda).nodes() {
            nodes += 1;
            if let Some(msg) = local_axioms(&mc, b) {
                out.failures.push(format!("{lambda}: {msg}"));
            }
        }
        for t in tableau_graph(lambda).nodes() {
            nodes += 1;
            if let Some(msg) = local_axioms(&tc, t) {
                out.failures.push(format!("{lambda}: {msg}"));
            }
        }
    }
    let fuzz = fuzz_statistics(10_000, 0x5eed, Execution::default());
    out.require(fuzz.failures == 0, || {
        format!("fuzz: {:?}", fuzz.first_failure)
    });
    out.detail = format!("{nodes} graph nodes, {} fuzzed monomials", fuzz.checked);
    out
}

fn full_verify() -> Outcome {
    let mut out = Outcome::new();
    let reports = verify_all(Execution::default()).unwrap();
    for r in &reports {
        for c in r.checks.iter().filter(|c| !c.passed()) {
            out.failures.push(format!("{}: {c}", r.lambda));
        }
    }
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    out.detail = format!("{} weights, {checks} checks", reports.len());
    out
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden graphs", Duration::from_secs(1), golden_graphs),
        ("counting", Duration::from_secs(30), counting),
        (
            "characterization equivalence",
            Duration::from_secs(3600),
            characterization,
        ),
        (
            "golden membership",
            Duration::from_secs(3600),
            golden_membership,
        ),
        ("golden maps", Duration::from_secs(1), golden_maps),
        (
            "isomorphism property",
            Duration::from_secs(3600),
            isomorphism,
        ),
        ("crystal axioms", Duration::from_secs(30), axioms),
        ("full verify", Duration::from_secs(60), full_verify),
    ];
    let mut all_ok = true;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < limit;
        let ok = outcome.failures.is_empty() && in_time;
        all_ok &= ok;
        let limit_text = if limit.as_secs() >= 3600 {
            String::new()
        } else {
            format!(", limit {} s", limit.as_secs())
        };
        println!(
            "criterion {}: {:<30} {}  ({}, {:.3} s{limit_text})",
            k + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
        );
        for f in outcome.failures.iter().take(5) {
            println!("    {f}");
        }
        if !in_time {
            println!("    exceeded the time limit");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
