//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::time::{Duration, Instant};

use cppg_core::geometry::{ball_overlap_count, q, verify_coverage, verify_rectangle_rational, GridSpec, Point, Rational, Region};
use cppg_core::optimizer::{path_covers, solve, Guarantee, Objective};
use cppg_core::oracle::{brute_ball_overlap_count, brute_coverage_max_dist, exact_pareto, OracleLimits};
use cppg_core::paths::bounds;
use cppg_core::paths::{
    build_discrete_up_down, build_mixed_discrete, build_mixed_up_down, build_up_down, build_zigzag, path_cost,
    Construction, CoveringPath,
};
use cppg_core::tradeoff::{f_lb_d, gap_bounds, gap_length_ratios, tradeoff_holds, upper_bound_curve, CostPair};
use cppg_core::variant::{classify, Variant, VariantKind};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

const SEED: u64 = 0x5eed_c0de;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn overlap_formulas() -> Outcome {
    let start = Instant::now();
    let mut bad = 0;
    let mut checked = 0;
    for k in 1..=8i64 {
        for d in 0..=2 * k + 2 {
            checked += 1;
            if ball_overlap_count(d, k).unwrap() != brute_ball_overlap_count(d, 0, k) {
                bad += 1;
            }
        }
    }
    let t = start.elapsed();
    outcome(bad == 0 && t < Duration::from_secs(5), format!("{checked} cases, {bad} mismatches, {t:.2?} (limit 5s)"))
}

fn overlap_identity() -> Outcome {
    let mut bad = 0;
    let mut checked = 0;
    for k in 1..=8u32 {
        let ball = 2 * i64::from(k) * i64::from(k) + 2 * i64::from(k) + 1;
        for d in 1..=2 * k + 1 {
            checked += 1;
            let a = brute_ball_overlap_count(i64::from(d), 0, i64::from(k));
            let f = f_lb_d(f64::from(d), k).unwrap();
            if (a as f64 + f) != ball as f64 || ball_overlap_count(i64::from(d), i64::from(k)).unwrap() != a {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{checked} cases, {bad} mismatches (exact)"))
}

/// A construction instance from the sweep.
#[derive(Clone, Copy, Debug)]
struct Case {
    m: u32,
    n: u32,
    k: u32,
    plan: Construction,
}

fn quarter(g: u32) -> Rational {
    q(i64::from(g), 4)
}

fn sweep_cases() -> Vec<Case> {
    let mut cases = Vec::new();
    for m in 4..=40u32 {
        for n in 4..=m {
            for k in 1..=5u32 {
                let mut push = |plan| cases.push(Case { m, n, k, plan });
                for j in 1..=4 * k {
                    push(Construction::UpDown { d: q(i64::from(j), 2) });
                }
                for d in (1..k).map(|i| 2 * i) {
                    for g in 0..4 {
                        push(Construction::Mixed { d, gamma: quarter(g) });
                    }
                }
                push(Construction::Discrete { d: 1 });
                for d in (1..=k).map(|i| 2 * i) {
                    push(Construction::Discrete { d });
                }
                push(Construction::Zigzag);
                let types: Vec<u32> = std::iter::once(1).chain((1..=k).map(|i| 2 * i)).chain([2 * k + 1]).collect();
                for w in types.windows(2) {
                    for g in 0..4 {
                        push(Construction::MixedDiscrete { d1: w[0], d2: w[1], gamma: quarter(g) });
                    }
                }
            }
        }
    }
    cases
}

fn build_case(c: &Case) -> (GridSpec, CoveringPath) {
    let g = GridSpec::new(c.m, c.n).unwrap();
    let p = match c.plan {
        Construction::UpDown { d } => build_up_down(d, &g, q(i64::from(c.k), 1)),
        Construction::Mixed { d, gamma } => build_mixed_up_down(d, gamma, &g, c.k),
        Construction::Discrete { d } => build_discrete_up_down(d, &g, c.k),
        Construction::Zigzag => build_zigzag(&g, c.k),
        Construction::MixedDiscrete { d1, d2, gamma } => build_mixed_discrete(d1, d2, gamma, &g, c.k),
        _ => unreachable!(),
    };
    (g, p.unwrap())
}

fn covers(c: &Case, g: &GridSpec, p: &CoveringPath) -> bool {
    let k = q(i64::from(c.k), 1);
    match c.plan {
        Construction::UpDown { d } if !d.is_integer() || d.to_integer() % 2 == 1 => {
            verify_rectangle_rational(&p.stops, g, k).unwrap()
        }
        Construction::UpDown { .. } | Construction::Mixed { .. } => verify_coverage(&p.stops, g, Region::Rectangle, k).unwrap(),
        _ => verify_coverage(&p.stops, g, Region::Lattice, k).unwrap(),
    }
}

struct SweepResult {
    cases: usize,
    uncovered: Vec<String>,
    over_bound: Vec<String>,
    elapsed: Duration,
}

fn run_sweep() -> SweepResult {
    let start = Instant::now();
    let cases = sweep_cases();
    let results: Vec<(bool, bool, String)> = cases
        .par_iter()
        .map(|c| {
            let (g, p) = build_case(c);
            let ok_cover = covers(c, &g, &p) && p.is_well_formed();
            let cost = path_cost(&p);
            let b = bounds::for_construction(&c.plan, &g, c.k).unwrap();
            let ok_bound = cost.length <= b.length + 1e-9 && cost.stops <= b.stops + 1e-9;
            let label = format!("{}x{} k={} {} cost=({}, {}) bound=({:.2}, {:.2})", c.m, c.n, c.k, c.plan, cost.length, cost.stops, b.length, b.stops);
            (ok_cover, ok_bound, label)
        })
        .collect();
    let mut uncovered = Vec::new();
    let mut over_bound = Vec::new();
    for (cov, bnd, label) in results {
        if !cov {
            uncovered.push(label.clone());
        }
        if !bnd {
            over_bound.push(label);
        }
    }
    SweepResult { cases: cases.len(), uncovered, over_bound, elapsed: start.elapsed() }
}

fn first_few(v: &[String]) -> String {
    if v.is_empty() {
        String::new()
    } else {
        format!("; first: {}", v.iter().take(3).cloned().collect::<Vec<_>>().join(" | "))
    }
}

fn lower_bound_validity() -> Outcome {
    let start = Instant::now();
    let mut points = 0;
    let mut bad = Vec::new();
    for m in 1..=24u32 {
        for n in 1..=m {
            if (m + 1) * (n + 1) > 25 {
                continue;
            }
            let g = GridSpec::new(m, n).unwrap();
            for k_raw in [q(1, 1), q(3, 2), q(2, 1)] {
                let v = classify(k_raw).unwrap();
                let frontier = exact_pareto(&g, &v, OracleLimits::default()).unwrap();
                for c in frontier {
                    points += 1;
                    let ok = if c.stops > 1.0 {
                        tradeoff_holds(c, &g, &v).unwrap()
                    } else {
                        // A single stop is only feasible when the constraint is vacuous.
                        cppg_core::tradeoff::lower_rhs(&g, &v).unwrap() <= 0.0
                    };
                    if !ok {
                        bad.push(format!("{m}x{n} k={k_raw} ({}, {})", c.length, c.stops));
                    }
                }
            }
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && t < Duration::from_secs(600),
        format!("{points} frontier points, {} violations, {t:.2?} (limit 10min){}", bad.len(), first_few(&bad)),
    )
}

fn gap_lemmas() -> Outcome {
    let mut worst = Vec::new();
    let mut bad = 0;
    for kind in [VariantKind::Continuous, VariantKind::Discrete] {
        let mut worst_ratio: f64 = 0.0;
        for k in 1..=25 {
            let (len_ratio, stop_ratio) = gap_bounds(kind, k).unwrap();
            for r in gap_length_ratios(kind, k, stop_ratio).unwrap() {
                worst_ratio = worst_ratio.max(r / len_ratio);
                if r > len_ratio + 1e-9 {
                    bad += 1;
                }
            }
        }
        worst.push(format!("{kind}: max L-ratio/bound {worst_ratio:.6}"));
    }
    outcome(bad == 0, format!("k in 1..=25, {bad} violations; {}", worst.join(", ")))
}

fn end_to_end() -> Outcome {
    let g = GridSpec::new(500, 500).unwrap();
    let obj = Objective::Linear { alpha: 1.0, beta: 1.0 };
    let mut lines = Vec::new();
    let mut pass = true;

    let start = Instant::now();
    let s = solve(&g, q(3, 1), &obj).unwrap();
    let t = start.elapsed();
    let (base, eps) = match s.guarantee {
        Guarantee::Bounded { base, slack } | Guarantee::Unguaranteed { base, slack, .. } => (base, slack),
        Guarantee::Exact => (1.0, 0.0),
    };
    let covered = path_covers(&s.path, &g, &s.variant).unwrap();
    let ok = covered && s.observed_ratio <= base + eps && s.observed_ratio >= 1.0 - 1e-9 && t < Duration::from_secs(10);
    pass &= ok;
    lines.push(format!(
        "C k=3: ratio {:.4} <= {:.4}+{:.3} ({}, {t:.2?})",
        s.observed_ratio, base, eps, s.path.construction
    ));

    let start = Instant::now();
    let s = solve(&g, q(7, 2), &obj).unwrap();
    let t = start.elapsed();
    let covered = path_covers(&s.path, &g, &s.variant).unwrap();
    let (base, slack) = match s.guarantee {
        Guarantee::Bounded { base, slack } | Guarantee::Unguaranteed { base, slack, .. } => (base, slack),
        Guarantee::Exact => (1.0, 0.0),
    };
    // The upper-curve point the construction targets must itself be within
    // 11/10 of the lower optimum after rescaling the right-hand side.
    let upper = upper_bound_curve(&g, &s.variant).unwrap();
    let ideal = upper.point_at(s.d_star).unwrap();
    let scale = upper.rhs / cppg_core::tradeoff::lower_rhs(&g, &s.variant).unwrap();
    let ideal_ratio = obj.eval(ideal) / s.lower_bound_cost;
    let ok = covered
        && s.observed_ratio <= base + slack
        && ideal_ratio <= 1.1 * scale + 1e-9
        && s.observed_ratio >= 1.0 - 1e-9
        && t < Duration::from_secs(10);
    pass &= ok;
    lines.push(format!(
        "D k'=3: ratio {:.4} <= {:.2}+{:.4} (ideal point {:.4}, {}, {t:.2?})",
        s.observed_ratio, base, slack, ideal_ratio, s.path.construction
    ));
    outcome(pass, lines.join("; "))
}

fn single_objective_optima() -> Outcome {
    let mut pass = true;
    let mut worst_t: f64 = 0.0;
    let mut worst_l: f64 = 0.0;
    let mut bad = Vec::new();
    for side in [50u32, 100, 200] {
        let g = GridSpec::new(side, side).unwrap();
        let (nf, mf) = (g.area() as f64, f64::from(side));
        for k in 1..=3u32 {
            let k_raw = q(2 * i64::from(k) + 1, 2);
            let ball = f64::from(2 * k * k + 2 * k + 1);
            let s = solve(&g, k_raw, &Objective::MinStops).unwrap();
            let c_t = (bounds::discrete(mf, mf, k, 2 * k + 1).stops - nf / ball) / mf;
            let slack_t = (s.cost.stops - nf / ball) / mf;
            worst_t = worst_t.max(slack_t);
            let ok_t = s.cost.stops <= nf / ball + c_t * mf && path_covers(&s.path, &g, &s.variant).unwrap();

            let s = solve(&g, k_raw, &Objective::MinLength).unwrap();
            let c_l = 3.0;
            let slack_l = (s.cost.length - nf / f64::from(2 * k + 1)) / mf;
            worst_l = worst_l.max(slack_l);
            let ok_l = s.cost.length <= nf / f64::from(2 * k + 1) + c_l * mf && path_covers(&s.path, &g, &s.variant).unwrap();
            if !(ok_t && ok_l) {
                bad.push(format!("{side} k'={k} T-slack {slack_t:.3}/{c_t:.3} L-slack {slack_l:.3}/{c_l}"));
                pass = false;
            }
        }
    }
    outcome(
        pass,
        format!("worst (T−N/(2k²+2k+1))/m = {worst_t:.3}, worst (L−N/(2k+1))/m = {worst_l:.3}{}", first_few(&bad)),
    )
}

fn random_stops(rng: &mut StdRng, g: &GridSpec) -> Vec<Point> {
    let count = rng.gen_range(1..=6);
    (0..count)
        .map(|_| Point::int(rng.gen_range(0..=i64::from(g.n())), rng.gen_range(0..=i64::from(g.m()))))
        .collect()
}

fn rounding_equivalences() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut bad = Vec::new();
    let mut covering = 0;
    for trial in 0..200 {
        let g = GridSpec::new(rng.gen_range(1..=6), rng.gen_range(1..=6)).unwrap();
        let stops = random_stops(&mut rng, &g);
        let k_raw = q(rng.gen_range(101..600), 100);
        let rounded = (k_raw * 2).floor() / 2;
        let max_edge = brute_coverage_max_dist(&stops, &g, Region::Edges).unwrap();
        let raw = verify_coverage(&stops, &g, Region::Edges, k_raw).unwrap();
        let at_rounded = verify_coverage(&stops, &g, Region::Edges, rounded).unwrap();
        covering += usize::from(raw);
        if raw != at_rounded || raw != (max_edge <= k_raw) || !(max_edge * 2).is_integer() {
            bad.push(format!("trial {trial}: rounding"));
        }
        let k_int = q(rng.gen_range(1..=4), 1);
        let edges = verify_coverage(&stops, &g, Region::Edges, k_int).unwrap();
        let rect = verify_coverage(&stops, &g, Region::Rectangle, k_int).unwrap();
        let rect_brute = brute_coverage_max_dist(&stops, &g, Region::Rectangle).unwrap() <= k_int;
        if edges != rect || edges != rect_brute {
            bad.push(format!("trial {trial}: rectangle"));
        }
        let k_half = k_int + q(1, 2);
        let edges = verify_coverage(&stops, &g, Region::Edges, k_half).unwrap();
        let lattice = verify_coverage(&stops, &g, Region::Lattice, k_int).unwrap();
        let lattice_brute = brute_coverage_max_dist(&stops, &g, Region::Lattice).unwrap() <= k_int;
        if edges != lattice || lattice != lattice_brute {
            bad.push(format!("trial {trial}: lattice"));
        }
    }
    outcome(bad.is_empty(), format!("200 stop sets ({covering} covering at raw k), {} disagreements{}", bad.len(), first_few(&bad)))
}

fn convexity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let mut combos = 0;
    let mut bad = 0;
    while combos < 1000 {
        let g = GridSpec::new(rng.gen_range(5..60), rng.gen_range(5..60)).unwrap();
        let k = rng.gen_range(1..=4);
        let v = match rng.gen_range(0..3) {
            0 => Variant::relaxed(k),
            1 => Variant::continuous(k),
            _ => Variant::discrete(k),
        }
        .unwrap();
        let area = g.area() as f64;
        let sample = |rng: &mut StdRng| loop {
            let c = CostPair::new(rng.gen_range(0.0..2.0 * area), rng.gen_range(2.0..area + 2.0));
            if tradeoff_holds(c, &g, &v).unwrap() {
                return c;
            }
        };
        let (x, y) = (sample(&mut rng), sample(&mut rng));
        let lambda: f64 = rng.gen_range(0.0..=1.0);
        let z = CostPair::new(
            lambda * x.length + (1.0 - lambda) * y.length,
            lambda * x.stops + (1.0 - lambda) * y.stops,
        );
        combos += 1;
        if !tradeoff_holds(z, &g, &v).unwrap() {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{combos} combinations, {bad} infeasible"))
}

fn main() {
    let mut failures = 0;
    let mut report = |name: &str, o: Outcome| {
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failures += 1;
        }
    };
    report("lattice intersection formulas", overlap_formulas());
    report("overlap identity A + f_LB_D(d) = 2k^2+2k+1", overlap_identity());
    let sweep = run_sweep();
    let limit = Duration::from_secs(120);
    report(
        "coverage of constructions",
        outcome(
            sweep.uncovered.is_empty() && sweep.elapsed < limit,
            format!("{} paths, {} failures, {:.2?} (limit 2min){}", sweep.cases, sweep.uncovered.len(), sweep.elapsed, first_few(&sweep.uncovered)),
        ),
    );
    report(
        "cost-bound compliance",
        outcome(
            sweep.over_bound.is_empty(),
            format!("{} paths, {} violations{}", sweep.cases, sweep.over_bound.len(), first_few(&sweep.over_bound)),
        ),
    );
    report("lower-bound validity", lower_bound_validity());
    report("gap lemmas", gap_lemmas());
    report("end-to-end ratio", end_to_end());
    report("single-objective optima", single_objective_optima());
    report("rounding equivalences", rounding_equivalences());
    report("convexity of the feasible region", convexity());
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
