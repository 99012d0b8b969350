//! The full invariant suite for one highest weight, plus a statistics-level
//! fuzzer over free monomials.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::{CartanDatum, Weight};
use crate::correspondence::{phi_map, psi, psi_inverse, varphi, varphi_inverse};
use crate::crystal::{canonical_iso, generate, Crystal, CrystalGraph, GenerateOptions};
use crate::error::Result;
use crate::membership::{
    column_factors, is_member, is_member_fundamental, is_member_fundamental_pairs,
    is_member_theorem, matrices_with_column_sums, matrix_is_member, pair_decomposition,
    x_factorize,
};
use crate::monomial::{Monomial, MonomialCrystal};
use crate::par::{self, Execution};
use crate::tableaux::{
    enumerate_semistandard, shape_of, weight_of_tableau, Orientation, Tableau, TableauCrystal,
};

/// Outcome of one named invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Check {
    fn from_results(name: &'static str, results: Vec<Option<String>>) -> Self {
        let failures = results.iter().filter(|r| r.is_some()).count();
        let first_failure = results.into_iter().flatten().next();
        Check {
            name,
            checked: 0,
            failures,
            first_failure,
        }
    }

    fn single(name: &'static str, failure: Option<String>) -> Self {
        Check {
            name,
            checked: 1,
            failures: failure.is_some() as usize,
            first_failure: failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {:<22} checked={}", self.name, self.checked)?;
        if let Some(msg) = &self.first_failure {
            write!(f, " failures={} first: {msg}", self.failures)?;
        }
        Ok(())
    }
}

/// Every check run for one `λ`.
#[derive(Debug, Clone)]
pub struct Report {
    pub lambda: Weight,
    pub nodes: usize,
    pub weyl_dim: u128,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "A_{} λ = ({}): |M(λ)| = {}, weyl_dim = {}, {:.1} ms",
            self.lambda.rank(),
            self.lambda,
            self.nodes,
            self.weyl_dim,
            self.elapsed.as_secs_f64() * 1e3
        )?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

/// Dominant weights with `n <= 3` and `a_1 + ... + a_n <= 3`, then
/// `Λ_1 + 2Λ_2 + Λ_3` in `A_4`.
pub fn test_matrix() -> Vec<Weight> {
    let mut out: Vec<Weight> = (1..=3)
        .flat_map(|n| CartanDatum::new(n).unwrap().dominant_weights_up_to(3))
        .collect();
    out.push(Weight::new(vec![1, 2, 1, 0]));
    out
}

fn run<T: Sync, F>(name: &'static str, items: &[T], exec: Execution, f: F) -> Check
where
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    let results = par::map_slice(items, exec, f);
    let mut check = Check::from_results(name, results);
    check.checked = items.len();
    check
}

fn err_string<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Local crystal axioms at `b`: `φ - ε = ⟨h_i, wt⟩`, `ẽf̃ = f̃ẽ = id` where
/// defined, weight shift by `α_i`, and string lengths `ε`, `φ`.
pub fn local_axioms<C: Crystal>(c: &C, b: &C::Elem) -> Option<String> {
    let rank = c.rank();
    let cartan = CartanDatum::new(rank).ok()?;
    let wt = c.weight(b);
    for i in 1..=rank {
        let alpha = cartan.simple_root(i).ok()?;
        let (eps, phi) = (c.epsilon(b, i), c.phi(b, i));
        if eps < 0 || phi < 0 {
            return Some(format!("{b}: negative string length for color {i}"));
        }
        if phi - eps != wt.pairing(i).ok()? {
            return Some(format!(
                "{b}: φ_{i} - ε_{i} = {} but pairing is {}",
                phi - eps,
                wt.pairing(i).ok()?
            ));
        }
        match c.f_tilde(b, i) {
            Some(fb) => {
                if c.e_tilde(&fb, i).as_ref() != Some(b) {
                    return Some(format!("{b}: e_{i} f_{i} is not the identity"));
                }
                if c.weight(&fb) != &wt - &alpha {
                    return Some(format!("{b}: f_{i} does not lower the weight by α_{i}"));
                }
                if c.epsilon(&fb, i) != eps + 1 || c.phi(&fb, i) != phi - 1 {
                    return Some(format!("{b}: f_{i} breaks the string statistics"));
                }
            }
            None if phi != 0 => {
                return Some(format!("{b}: f_{i} undefined although φ_{i} = {phi}"))
            }
            None => {}
        }
        match c.e_tilde(b, i) {
            Some(eb) => {
                if c.f_tilde(&eb, i).as_ref() != Some(b) {
                    return Some(format!("{b}: f_{i} e_{i} is not the identity"));
                }
                if c.weight(&eb) != &wt + &alpha {
                    return Some(format!("{b}: e_{i} does not raise the weight by α_{i}"));
                }
            }
            None if eps != 0 => {
                return Some(format!("{b}: e_{i} undefined although ε_{i} = {eps}"))
            }
            None => {}
        }
        let mut steps = 0;
        let mut cur = b.clone();
        while let Some(next) = c.f_tilde(&cur, i) {
            steps += 1;
            if steps > phi {
                break;
            }
            cur = next;
        }
        if steps != phi {
            return Some(format!(
                "{b}: f_{i}-string has length {steps}, φ_{i} = {phi}"
            ));
        }
        let mut steps = 0;
        let mut cur = b.clone();
        while let Some(next) = c.e_tilde(&cur, i) {
            steps += 1;
            if steps > eps {
                break;
            }
            cur = next;
        }
        if steps != eps {
            return Some(format!(
                "{b}: e_{i}-string has length {steps}, ε_{i} = {eps}"
            ));
        }
    }
    None
}

fn closure_failure(mc: &MonomialCrystal, lambda: &Weight, mono: &Monomial) -> Option<String> {
    for i in 1..=lambda.rank() {
        for image in [mc.f_tilde(mono, i), mc.e_tilde(mono, i)]
            .into_iter()
            .flatten()
        {
            match is_member(&image, lambda) {
                Ok(true) => {}
                Ok(false) => return Some(format!("{image} (neighbour of {mono}) rejected")),
                Err(e) => return Some(e.to_string()),
            }
        }
    }
    None
}

fn columns_failure(mono: &Monomial, lambda: &Weight) -> Option<String> {
    let rank = lambda.rank();
    let x = match err_string(x_factorize(mono, rank)) {
        Ok(x) => x,
        Err(e) => return Some(e),
    };
    let cols = match err_string(column_factors(&x)) {
        Ok(c) => c,
        Err(e) => return Some(e),
    };
    let mut product = Monomial::one();
    let mut counts = vec![0i64; rank + 1];
    for (k, factor) in &cols {
        if *k == 0 || *k > rank || !is_member_fundamental(factor, rank, *k).unwrap_or(false) {
            return Some(format!("{mono}: column factor {factor} is not in M(Λ_{k})"));
        }
        counts[*k] += 1;
        product *= factor;
    }
    if product != *mono {
        return Some(format!("{mono}: column factors multiply to {product}"));
    }
    if (1..=rank).any(|k| counts[k] != lambda.coeff(k)) {
        return Some(format!(
            "{mono}: column lengths {counts:?} do not match {lambda}"
        ));
    }
    None
}

/// Runs every invariant for `ℳ(λ)`, `S(λ)` and `T(λ)`.
pub fn verify(lambda: &Weight, exec: Execution) -> Result<Report> {
    let start = Instant::now();
    let rank = lambda.rank();
    let cartan = CartanDatum::new(rank)?;
    cartan.check_weight(lambda)?;
    let weyl_dim = cartan.weyl_dim(lambda)?;
    let opts = GenerateOptions {
        execution: exec,
        ..GenerateOptions::default()
    };

    let mc = MonomialCrystal::new(rank)?;
    let sc = TableauCrystal::new(rank, Orientation::Reverse);
    let tc = TableauCrystal::new(rank, Orientation::Standard);
    let gm = generate(&mc, mc.highest_weight_monomial(lambda)?, opts)?;
    let gs = generate(&sc, sc.highest(lambda)?, opts)?;
    let gt = generate(&tc, tc.highest(lambda)?, opts)?;
    let nodes = gm.nodes();
    let mut checks = Vec::new();

    checks.push(Check::single(
        "count = weyl_dim",
        (gm.len() as u128 != weyl_dim).then(|| format!("{} nodes, weyl_dim {weyl_dim}", gm.len())),
    ));

    checks.push(run("monomial axioms", nodes, exec, |b| {
        local_axioms(&mc, b)
    }));
    checks.push(run("reverse tableau axioms", gs.nodes(), exec, |b| {
        local_axioms(&sc, b)
    }));
    checks.push(run("tableau axioms", gt.nodes(), exec, |b| {
        local_axioms(&tc, b)
    }));

    // Every candidate grid; the members among them must be exactly the BFS nodes.
    let candidates = matrices_with_column_sums(lambda);
    let by_matrix: Vec<Option<bool>> =
        par::map_slice(&candidates, exec, |x| matrix_is_member(x, lambda).ok());
    let bfs: HashSet<&Monomial> = nodes.iter().collect();
    let mut set_failure = None;
    let mut members = 0;
    for (x, verdict) in candidates.iter().zip(&by_matrix) {
        let mono = x.to_monomial();
        let member = verdict.unwrap_or(false);
        members += member as usize;
        if member != bfs.contains(&mono) && set_failure.is_none() {
            set_failure = Some(format!("{mono}: grid test says {member}, BFS disagrees"));
        }
    }
    if members != gm.len() && set_failure.is_none() {
        set_failure = Some(format!("{members} grid members vs {} BFS nodes", gm.len()));
    }
    let mut set_check = Check::single("bfs = members", set_failure);
    set_check.checked = candidates.len();
    checks.push(set_check);

    checks.push(run(
        "is_member on nodes",
        nodes,
        exec,
        |m| match is_member(m, lambda) {
            Ok(true) => None,
            Ok(false) => Some(format!("{m} rejected")),
            Err(e) => Some(e.to_string()),
        },
    ));
    checks.push(run("closure", nodes, exec, |m| {
        closure_failure(&mc, lambda, m)
    }));

    let indices: Vec<usize> = (0..candidates.len()).collect();
    checks.push(run("theorem = grid test", &indices, exec, |&k| {
        let x = &candidates[k];
        let decomposition = match err_string(pair_decomposition(x)) {
            Ok(d) => d,
            Err(e) => return Some(e),
        };
        if decomposition.to_monomial() != x.to_monomial() {
            return Some(format!(
                "pair form of {} does not multiply back",
                x.to_monomial()
            ));
        }
        let by_theorem = is_member_theorem(&decomposition, lambda).ok();
        (by_theorem != by_matrix[k]).then(|| {
            format!(
                "{}: theorem {by_theorem:?}, grid {:?}",
                x.to_monomial(),
                by_matrix[k]
            )
        })
    }));

    checks.push(run("column factors", nodes, exec, |m| {
        columns_failure(m, lambda)
    }));

    if let Some(k) = fundamental_index(lambda) {
        checks.push(run("fundamental forms", &indices, exec, |&idx| {
            let mono = candidates[idx].to_monomial();
            let grid = by_matrix[idx];
            let x_form = is_member_fundamental(&mono, rank, k).ok();
            let pair_form = is_member_fundamental_pairs(&mono, rank, k).ok();
            (x_form != grid || pair_form != grid).then(|| {
                format!("{mono}: grid {grid:?}, X-form {x_form:?}, pair form {pair_form:?}")
            })
        }));
        checks.push(Check::single(
            "S(Λ_k) = T(Λ_k)",
            single_column_failure(&gs, &gt),
        ));
    }

    let shape = shape_of(lambda)?;
    let all_s = enumerate_semistandard(&shape, rank, Orientation::Reverse);
    let all_t = enumerate_semistandard(&shape, rank, Orientation::Standard);
    checks.push(Check::single(
        "tableau graphs",
        tableau_graph_failure(&gs, &all_s, &gt, &all_t),
    ));

    let iso_failure = match canonical_iso(&gm, &gt) {
        Err(e) => Some(format!("{e}")),
        Ok(iso) => {
            let failures = run(
                "",
                &(0..gm.len()).collect::<Vec<_>>(),
                exec,
                |&id| match phi_map(&nodes[id], lambda) {
                    Ok(t) if t == gt.nodes()[iso[id]] => None,
                    Ok(t) => Some(format!(
                        "{}: φψ gives {t}, iso gives {}",
                        nodes[id],
                        gt.nodes()[iso[id]]
                    )),
                    Err(e) => Some(e.to_string()),
                },
            );
            failures.first_failure
        }
    };
    let mut iso_check = Check::single("φψ = canonical iso", iso_failure);
    iso_check.checked = gm.len();
    checks.push(iso_check);

    checks.push(run("ψ commutes", nodes, exec, |m| {
        let s = match err_string(psi(m, lambda)) {
            Ok(s) => s,
            Err(e) => return Some(e),
        };
        for i in 1..=rank {
            let pairs = [
                (mc.f_tilde(m, i), sc.f_tilde(&s, i), "f"),
                (mc.e_tilde(m, i), sc.e_tilde(&s, i), "e"),
            ];
            for (mono_image, tableau_image, op) in pairs {
                let mapped = mono_image.map(|b| psi(&b, lambda)).transpose();
                match mapped {
                    Ok(mapped) if mapped == tableau_image => {}
                    Ok(_) => return Some(format!("{m}: ψ does not commute with {op}_{i}")),
                    Err(e) => return Some(e.to_string()),
                }
            }
        }
        None
    }));

    checks.push(run("round trips", &all_s, exec, |s| {
        round_trip_failure(s, lambda)
    }));
    checks.push(run("φ⁻¹ round trips", &all_t, exec, |t| {
        let back = varphi_inverse(t, rank).and_then(|s| varphi(&s, rank));
        match back {
            Ok(back) if back == *t => None,
            Ok(back) => Some(format!("{t} came back as {back}")),
            Err(e) => Some(e.to_string()),
        }
    }));

    let mut by_content: BTreeMap<Weight, usize> = BTreeMap::new();
    for t in &all_t {
        *by_content.entry(weight_of_tableau(t, rank)).or_default() += 1;
    }
    let from_graph: BTreeMap<Weight, usize> = gm.weight_multiplicities().into_iter().collect();
    let mut mult = Check::single(
        "weight multiplicities",
        (from_graph != by_content).then(|| "graph and brute force disagree".to_owned()),
    );
    mult.checked = by_content.len();
    checks.push(mult);

    Ok(Report {
        lambda: lambda.clone(),
        nodes: gm.len(),
        weyl_dim,
        checks,
        elapsed: start.elapsed(),
    })
}

fn fundamental_index(lambda: &Weight) -> Option<usize> {
    let ones: Vec<usize> = (1..=lambda.rank())
        .filter(|&k| lambda.coeff(k) != 0)
        .collect();
    match ones[..] {
        [k] if lambda.coeff(k) == 1 => Some(k),
        _ => None,
    }
}

fn single_column_failure(gs: &CrystalGraph<Tableau>, gt: &CrystalGraph<Tableau>) -> Option<String> {
    if gs.len() != gt.len() || gs.edges() != gt.edges() {
        return Some("graphs differ in shape".into());
    }
    gs.nodes().iter().zip(gt.nodes()).find_map(|(s, t)| {
        let same = s.columns() == t.columns();
        (!same).then(|| format!("{s} vs {t}"))
    })
}

fn tableau_graph_failure(
    gs: &CrystalGraph<Tableau>,
    all_s: &[Tableau],
    gt: &CrystalGraph<Tableau>,
    all_t: &[Tableau],
) -> Option<String> {
    let set = |nodes: &[Tableau]| nodes.iter().cloned().collect::<HashSet<_>>();
    if set(gs.nodes()) != set(all_s) {
        return Some(format!(
            "S(λ) graph has {} nodes, brute force {}",
            gs.len(),
            all_s.len()
        ));
    }
    if set(gt.nodes()) != set(all_t) {
        return Some(format!(
            "T(λ) graph has {} nodes, brute force {}",
            gt.len(),
            all_t.len()
        ));
    }
    canonical_iso(gs, gt)
        .err()
        .map(|e| format!("S(λ) vs T(λ): {e}"))
}

fn round_trip_failure(s: &Tableau, lambda: &Weight) -> Option<String> {
    let rank = lambda.rank();
    let mono = match err_string(psi_inverse(s, rank)) {
        Ok(m) => m,
        Err(e) => return Some(e),
    };
    match psi(&mono, lambda) {
        Ok(back) if back == *s => {}
        Ok(back) => return Some(format!("ψψ⁻¹({s}) = {back}")),
        Err(e) => return Some(format!("ψ⁻¹({s}) = {mono}: {e}")),
    }
    match varphi(s, rank).and_then(|t| varphi_inverse(&t, rank)) {
        Ok(back) if back == *s => None,
        Ok(back) => Some(format!("φ⁻¹φ({s}) = {back}")),
        Err(e) => Some(e.to_string()),
    }
}

/// Verification of every weight in [`test_matrix`].
pub fn verify_all(exec: Execution) -> Result<Vec<Report>> {
    test_matrix().iter().map(|l| verify(l, exec)).collect()
}

/// Outcome of [`fuzz_statistics`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

/// A random monomial of rank `1..=4` with up to 8 factors, exponents in
/// `-3..=3` and second index in `-4..=4`.
pub fn random_monomial(rng: &mut impl Rng) -> (usize, Monomial) {
    let rank = rng.random_range(1..=4);
    let len = rng.random_range(0..=8);
    let factors: Vec<(usize, i64, i64)> = (0..len)
        .map(|_| {
            (
                rng.random_range(1..=rank),
                rng.random_range(-4..=4),
                rng.random_range(-3..=3),
            )
        })
        .collect();
    (
        rank,
        Monomial::from_factors(rank, factors).expect("indices in range"),
    )
}

/// Checks [`local_axioms`] on `count` seeded random monomials.
pub fn fuzz_statistics(count: usize, seed: u64, exec: Execution) -> FuzzReport {
    let results = par::map_range(count, exec, |k| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let (rank, mono) = random_monomial(&mut rng);
        let mc = MonomialCrystal::new(rank).expect("rank >= 1");
        local_axioms(&mc, &mono).map(|msg| format!("A_{rank}: {msg}"))
    });
    let failures = results.iter().filter(|r| r.is_some()).count();
    FuzzReport {
        checked: count,
        failures,
        first_failure: results.into_iter().flatten().next(),
    }
}
