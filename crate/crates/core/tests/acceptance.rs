//! Acceptance suite for the library criteria. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use conekit::classify::{self, Verdict, Witness};
use conekit::ideals::{self, Invariance, Method};
use conekit::irreducibility::{self, IrreducibilityVerdict};
use conekit::spectral::{self, QuasinilpotenceFinding, WeightedShift, DEFAULT_EPSILON};
use conekit::{
    CoordinateIdeal, ExactMatrix, ExactSpec, ExactVector, FiniteMatrix, NamedSequence, OperatorSpec, Rational,
    WeightSequence,
};
use conekit_testkit as kit;
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use statrs::function::gamma::ln_gamma;

type Outcome = Result<String, String>;

fn r(n: i64) -> Rational {
    kit::int(n)
}

fn within(elapsed: Duration, limit: Duration, detail: String) -> Outcome {
    if elapsed < limit {
        Ok(format!("{detail}, {:.2}s", elapsed.as_secs_f64()))
    } else {
        Err(format!("{detail}, but took {:.2}s (limit {}s)", elapsed.as_secs_f64(), limit.as_secs()))
    }
}

fn row_criterion() -> Outcome {
    let start = Instant::now();
    let mut rng = kit::seeded(0xacce_0001);
    let (mut holds, mut fails, mut caught_by_random) = (0, 0, 0);
    for case in 0..200 {
        let spec = kit::structured(&mut rng);
        let pairs: Vec<(ExactVector, ExactVector)> =
            (0..100).map(|_| (kit::vector(&mut rng, 25), kit::vector(&mut rng, 25))).collect();
        let random_ok = pairs.iter().all(|(x, y)| classify::lattice_operation_check(&spec, x, y));
        match classify::is_lattice_homomorphism(&spec) {
            Verdict::Holds { .. } => {
                holds += 1;
                if !random_ok {
                    return Err(format!("case {case}: Holds but a random pair breaks the lattice operation"));
                }
            }
            Verdict::Fails { witness } => {
                fails += 1;
                let Witness::RowWithTwoEntries { row, columns: (a, b) } = witness else {
                    return Err(format!("case {case}: unexpected witness {witness:?}"));
                };
                let entries = spec.row(row);
                let in_row = |m| entries.iter().any(|&(c, _)| c == m);
                let (x, y) = (ExactVector::basis(a), ExactVector::basis(b));
                if !in_row(a) || !in_row(b) || classify::lattice_operation_check(&spec, &x, &y) {
                    return Err(format!("case {case}: witness {witness:?} does not break the lattice operation"));
                }
                caught_by_random += usize::from(!random_ok);
            }
        }
    }
    within(
        start.elapsed(),
        Duration::from_secs(30),
        format!("200 specs × 100 pairs, {holds} Holds, {fails} Fails (random pairs also caught {caught_by_random})"),
    )
}

fn lattice_invariant_ideals() -> Outcome {
    let mut rng = kit::seeded(0xacce_0002);
    let mut by_method = std::collections::BTreeMap::<&str, usize>::new();
    for case in 0..150 {
        let spec = kit::lattice_homomorphism(&mut rng);
        let found = ideals::lattice_invariant_ideal(&spec, ideals::DEFAULT_WINDOW)
            .map_err(|e| format!("case {case}: {e}"))?
            .ok_or_else(|| format!("case {case}: no construction applies"))?;
        let zero = found.zero_set().as_exact().ok_or_else(|| format!("case {case}: zero set not exact"))?;
        if zero.is_empty() || zero.is_everything() {
            return Err(format!("case {case}: trivial ideal from {}", found.method));
        }
        let check = ideals::verify_ideal_invariance(&spec, &CoordinateIdeal::from_exact(zero.clone()), 1000);
        if check != Invariance::ExactYes {
            return Err(format!("case {case}: {} gives {check:?}", found.method));
        }
        *by_method.entry(found.method.tag()).or_default() += 1;
    }
    Ok(format!("150 lattice homomorphisms, all ExactYes; methods {by_method:?}"))
}

fn scc_connected(pattern: u64, n: usize) -> bool {
    let mut g = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for i in 0..n {
        for j in 0..n {
            if pattern >> (i * n + j) & 1 == 1 {
                g.add_edge(nodes[j], nodes[i], ());
            }
        }
    }
    tarjan_scc(&g).len() <= 1
}

/// Some `k <= n` has `(A^k)_{j,i} > 0` for every `i != j`, using integer
/// powers of the same matrix.
fn powers_positive(a: &ExactMatrix) -> bool {
    let n = a.size();
    let base: Vec<Vec<u128>> = (1..=n)
        .map(|i| (1..=n).map(|j| if a.is_nonzero(i, j) { 1 + (i * 7 + j * 3) as u128 % 5 } else { 0 }).collect())
        .collect();
    let mut power = base.clone();
    let mut seen = vec![vec![false; n]; n];
    for _ in 1..=n {
        for i in 0..n {
            for j in 0..n {
                seen[i][j] |= power[i][j] > 0;
            }
        }
        power = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|t| power[i][t] * base[t][j]).sum()).collect())
            .collect();
    }
    (0..n).all(|i| (0..n).all(|j| i == j || seen[i][j]))
}

fn three_way(rng: &mut impl rand::Rng, n: usize, pattern: u64) -> Result<(), String> {
    let a = kit::matrix_with_pattern(rng, n, pattern);
    let sets = irreducibility::brute_force_invariant_zero_sets(&a).map_err(|e| e.to_string())?;
    let trivial = sets.len() == 2 && sets[0].is_empty() && sets[1].len() == n;
    let connected = scc_connected(pattern, n);
    let powered = powers_positive(&a);
    if trivial == connected && connected == powered && irreducibility::is_strongly_connected(&a) == connected {
        Ok(())
    } else {
        Err(format!("N={n} pattern {pattern:b}: brute force {trivial}, scc {connected}, powers {powered}"))
    }
}

fn finite_oracles() -> Outcome {
    let start = Instant::now();
    let mut rng = kit::seeded(0xacce_0003);
    let mut irreducible = 0;
    for pattern in 0..1u64 << 16 {
        three_way(&mut rng, 4, pattern)?;
        irreducible += usize::from(scc_connected(pattern, 4));
    }
    use rand::Rng;
    for _ in 0..10_000 {
        let pattern = rng.random_range(0..1u64 << 36);
        three_way(&mut rng, 6, pattern)?;
    }
    within(
        start.elapsed(),
        Duration::from_secs(60),
        format!("65536 patterns at N=4 ({irreducible} irreducible) and 10000 at N=6 agree"),
    )
}

/// Nodes reachable from `i` in `1..=max_power` steps, staying below `limit`.
fn reach_within(spec: &ExactSpec, i: usize, max_power: usize, limit: usize) -> Vec<bool> {
    let mut seen = vec![false; limit + 1];
    let mut frontier = vec![i];
    for _ in 0..max_power {
        let mut next = vec![];
        for m in frontier {
            for (n, _) in spec.column(m) {
                if n <= limit && !seen[n] {
                    seen[n] = true;
                    next.push(n);
                }
            }
        }
        frontier = next;
    }
    seen
}

fn tridiagonal_characterization() -> Outcome {
    let mut rng = kit::seeded(0xacce_0004);
    let (mut irreducible, mut reducible, mut compared) = (0, 0, 0);
    for case in 0..500 {
        let spec = kit::tridiagonal(&mut rng);
        let verdict = irreducibility::tridiagonal_irreducibility(&spec).map_err(|e| format!("case {case}: {e}"))?;
        let block_connected = irreducibility::is_strongly_connected(&FiniteMatrix::leading_block(&spec, 12));
        match verdict {
            IrreducibilityVerdict::Irreducible { .. } => {
                irreducible += 1;
                for i in 1..=30 {
                    let seen = reach_within(&spec, i, 60, 30 + 60);
                    if let Some(j) = (1..=30).find(|&j| j != i && !seen[j]) {
                        return Err(format!("case {case}: Irreducible but {j} unreachable from {i}"));
                    }
                }
                compared += 1;
                if !block_connected {
                    return Err(format!("case {case}: Irreducible but the 12×12 block is reducible"));
                }
            }
            IrreducibilityVerdict::Reducible { ideal } => {
                reducible += 1;
                let zero = ideal.zero_set().as_exact().ok_or_else(|| format!("case {case}: inexact ideal"))?;
                let check = ideals::verify_ideal_invariance(&spec, &CoordinateIdeal::from_exact(zero.clone()), 1000);
                if check != Invariance::ExactYes || zero.is_empty() || zero.is_everything() {
                    return Err(format!("case {case}: ideal does not verify ({check:?})"));
                }
                let n0 = match ideal.method {
                    Method::TridiagonalHead { n0 } | Method::TridiagonalTail { n0 } => n0,
                    other => return Err(format!("case {case}: unexpected method {other}")),
                };
                // the missing edge between n0 and n0 + 1 lies inside the block
                if n0 < 12 {
                    compared += 1;
                    if block_connected {
                        return Err(format!("case {case}: zero at {n0} but the 12×12 block is irreducible"));
                    }
                }
            }
            IrreducibilityVerdict::Unknown { .. } => return Err(format!("case {case}: Unknown")),
        }
    }
    Ok(format!("500 tridiagonals, {irreducible} Irreducible, {reducible} Reducible, {compared} block comparisons agree"))
}

fn nullity_induction() -> Outcome {
    let ones = WeightSequence::constant(r(1)).unwrap();
    let sup = WeightSequence::periodic(vec![r(1), r(1), r(0)], vec![r(1)]).unwrap();
    let t = OperatorSpec::tridiagonal(ones.clone(), ones, sup);
    // beyond j = 3 + 20 the band keeps (T^k e_j) off rows 1..=3 for k <= 20
    for k in 1..=20 {
        for j in 4..=3 + k + 2 {
            for i in 1..=3 {
                let v = t.matrix_power_entry(k, j, i);
                if v != r(0) {
                    return Err(format!("(T^{k})_{{{i},{j}}} = {v}"));
                }
            }
        }
    }
    let mut far = ExactVector::basis(60);
    for k in 1..=20 {
        far = t.apply(&far);
        if (1..=3).any(|i| far.get(i) != r(0)) {
            return Err(format!("T^{k} e_60 reaches rows 1..=3"));
        }
    }
    Ok("(T^k)_{i,j} = 0 for i <= 3, j >= 4, k <= 20".into())
}

fn quasi_analytic() -> Outcome {
    let start = Instant::now();
    let shift = WeightedShift::named(NamedSequence::QuasiAnalyticSqrt);
    let seq = spectral::radius_sequence(&shift, 1, 10_000, 2.0);
    let finding = spectral::quasinilpotence_finding(&seq, DEFAULT_EPSILON);
    let elapsed = start.elapsed();
    let worst = seq.entries.iter().map(|&(n, v)| (v - (1.0 / (n as f64).sqrt()).exp()).abs()).fold(0.0, f64::max);
    if worst >= 1e-9 {
        return Err(format!("max deviation from exp(n^-1/2) is {worst:e}"));
    }
    if !seq.entries.windows(2).all(|w| w[1].1 < w[0].1) {
        return Err("not strictly decreasing".into());
    }
    let last = seq.last().map_or(0.0, |(_, v)| v);
    if !(last > 1.0 && last <= 1.0101) {
        return Err(format!("value at n = 10^4 is {last}"));
    }
    if !matches!(finding, QuasinilpotenceFinding::EvidenceNotQuasinilpotent { .. }) {
        return Err(format!("finding {}", finding.tag()));
    }
    within(elapsed, Duration::from_secs(1), format!("max deviation {worst:.1e}, value at 10^4 = {last:.6}"))
}

fn factorial_contrast() -> Outcome {
    let shift = WeightedShift::named(NamedSequence::FactorialReciprocal);
    let seq = spectral::radius_sequence(&shift, 1, 10_000, 2.0);
    let worst = seq
        .entries
        .iter()
        .map(|&(n, v)| (v - (-ln_gamma(n as f64 + 1.0) / n as f64).exp()).abs())
        .fold(0.0, f64::max);
    if worst >= 1e-9 {
        return Err(format!("max deviation from (n!)^(-1/n) is {worst:e}"));
    }
    let at_100 = seq.entries[99].1;
    if at_100 >= 0.03 {
        return Err(format!("value at n = 100 is {at_100}"));
    }
    let finding = spectral::quasinilpotence_finding(&seq, DEFAULT_EPSILON);
    if !matches!(finding, QuasinilpotenceFinding::EvidenceQuasinilpotent { .. }) {
        return Err(format!("finding {} at maxN = 10^4", finding.tag()));
    }
    Ok(format!("max deviation {worst:.1e}, value at 100 = {at_100:.5}, EvidenceQuasinilpotent at maxN = 10^4"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("row criterion matches the lattice operation", row_criterion),
        ("lattice homomorphisms have verified ideals", lattice_invariant_ideals),
        ("finite irreducibility oracles agree", finite_oracles),
        ("tridiagonal verdicts are consistent", tridiagonal_characterization),
        ("powers keep the zero block", nullity_induction),
        ("quasi-analytic shift radius", quasi_analytic),
        ("factorial shift radius", factorial_contrast),
    ];
    let mut failed = false;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed = true;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS }
}
