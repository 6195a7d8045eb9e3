//! The verification suite: each check re-derives one structural claim about
//! polar cographs from exhaustive enumeration and reports pass or fail.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{
    derive_minimal, derive_obstructions, family_member, partial_complements, pc_classes,
    verify_structure_lemmas, Catalog, FAMILY_COUNT, GENERATORS,
};
use crate::certify::{certify, validate_certificate, Certificate};
use crate::cograph::{cograph_code, enumerate_cographs, random_cotree, CotreeCode, Cotree};
use crate::graph::{graphs_up_to_iso, Graph};
use crate::polarity::{
    brute_force_sk_polar, is_sk_polar, is_sk_polar_cotree, is_unipolar_either_side_cotree, UNBOUNDED,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Everything except the exhaustive k = 3 enumeration.
    Fast,
    Full,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub level: Level,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type CheckResult = Result<String, String>;

struct Check {
    id: &'static str,
    title: &'static str,
    run: fn(Level, &Catalog) -> CheckResult,
}

const CHECKS: [Check; 13] = [
    Check { id: "catalog", title: "catalog invariants", run: check_catalog },
    Check { id: "A1", title: "exactly 48 cograph minimal 2-polar obstructions", run: check_a1 },
    Check { id: "A2", title: "obstructions have at most (s+1)(k+1) vertices", run: check_a2 },
    Check { id: "A3", title: "obstructions have at least seven vertices", run: check_a3 },
    Check { id: "A4", title: "closure of F1, F6, F13, F21 is the whole list", run: check_a4 },
    Check { id: "A5", title: "split obstructions are 2K2 and C4", run: check_a5 },
    Check { id: "A6", title: "nine (2,1) obstructions, complements for (1,2)", run: check_a6 },
    Check { id: "A7", title: "polar and monopolar obstruction counts", run: check_a7 },
    Check { id: "A8", title: "family members are minimal k-polar obstructions", run: check_a8 },
    Check { id: "A9", title: "structure statements hold for all obstructions", run: check_a9 },
    Check { id: "A10", title: "dynamic program agrees with brute force", run: check_a10 },
    Check { id: "A11", title: "certificates are sound", run: check_a11 },
    Check { id: "A12", title: "switching and partial complementation", run: check_a12 },
];

/// Ids accepted by [`run_check`], in report order.
pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

fn timed(check: &Check, level: Level, catalog: &Catalog) -> CheckOutcome {
    let start = Instant::now();
    let result = (check.run)(level, catalog);
    let seconds = start.elapsed().as_secs_f64();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckOutcome { id: check.id, title: check.title, passed, detail, seconds }
}

pub fn run_check(id: &str, level: Level, catalog: &Catalog) -> Option<CheckOutcome> {
    CHECKS.iter().find(|c| c.id == id).map(|c| timed(c, level, catalog))
}

pub fn run_checks(level: Level, catalog: &Catalog) -> Report {
    Report { level, checks: CHECKS.iter().map(|c| timed(c, level, catalog)).collect() }
}

fn codes(graphs: &[Graph]) -> BTreeSet<CotreeCode> {
    graphs.iter().map(|g| cograph_code(g).expect("cograph")).collect()
}

fn catalog_codes(catalog: &Catalog) -> BTreeSet<CotreeCode> {
    catalog.entries().iter().map(|e| e.code.clone()).collect()
}

fn ensure(ok: bool, detail: String) -> CheckResult {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed <= Duration::from_secs(limit_secs)
}

fn check_catalog(_: Level, catalog: &Catalog) -> CheckResult {
    catalog.check().map_err(|e| e.to_string())?;
    Ok(format!("{} entries, all invariants hold", catalog.len()))
}

fn check_a1(_: Level, catalog: &Catalog) -> CheckResult {
    let start = Instant::now();
    let found = derive_obstructions(2, 2, 9).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let found_codes = codes(&found);
    let unidentified = found.iter().filter(|g| catalog.identify(g).is_none()).count();
    let same = found_codes == catalog_codes(catalog);
    let detail = format!(
        "derived {} (expected 48) in {:.1}s; {unidentified} not in the catalog; catalog {} the derivation",
        found.len(),
        elapsed.as_secs_f64(),
        if same { "equals" } else { "differs from" },
    );
    ensure(found.len() == 48 && same && within(elapsed, 60), detail)
}

fn check_a2(_: Level, _: &Catalog) -> CheckResult {
    let at_ten = derive_minimal(10, 10, |t| is_sk_polar_cotree(t, 2, 2)).map_err(|e| e.to_string())?;
    let one_two = derive_minimal(7, 10, |t| is_sk_polar_cotree(t, 1, 2)).map_err(|e| e.to_string())?;
    let two_one = derive_minimal(7, 10, |t| is_sk_polar_cotree(t, 2, 1)).map_err(|e| e.to_string())?;
    ensure(
        at_ten.is_empty() && one_two.is_empty() && two_one.is_empty(),
        format!(
            "(2,2) at n=10: {}; (1,2) at n=7..10: {}; (2,1) at n=7..10: {}",
            at_ten.len(),
            one_two.len(),
            two_one.len()
        ),
    )
}

fn check_a3(_: Level, _: &Catalog) -> CheckResult {
    let small = derive_obstructions(2, 2, 6).map_err(|e| e.to_string())?;
    let seven = derive_minimal(7, 7, |t| is_sk_polar_cotree(t, 2, 2)).map_err(|e| e.to_string())?;
    let three_components: Vec<Graph> =
        seven.iter().map(Cotree::to_graph).filter(|g| g.components().len() == 3).collect();
    let without_isolated = three_components
        .iter()
        .filter(|g| !(0..g.order()).any(|v| g.degree(v) == 0))
        .count();
    ensure(
        small.is_empty() && without_isolated == 0,
        format!(
            "{} obstructions on at most 6 vertices; seven-vertex obstructions with 3 components: {}, {without_isolated} of them without an isolated vertex",
            small.len(),
            three_components.len()
        ),
    )
}

fn check_a4(_: Level, catalog: &Catalog) -> CheckResult {
    let seeds: Vec<Graph> = GENERATORS
        .iter()
        .map(|id| catalog.get(id).map(|e| e.graph.clone()).ok_or(format!("{id} missing")))
        .collect::<Result<_, _>>()?;
    let classes = pc_classes(&seeds).map_err(|e| e.to_string())?;
    let members: Vec<Graph> = classes.iter().flat_map(|c| c.members.iter().cloned()).collect();
    let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
    let same = codes(&members) == catalog_codes(catalog);
    ensure(
        members.len() == 48 && same && classes.len() == 4,
        format!(
            "{} members (expected 48) in {} classes of sizes {sizes:?}; closure {} the catalog",
            members.len(),
            classes.len(),
            if same { "equals" } else { "differs from" }
        ),
    )
}

fn check_a5(_: Level, _: &Catalog) -> CheckResult {
    let found = derive_obstructions(1, 1, 6).map_err(|e| e.to_string())?;
    let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
    let expected = codes(&[two_k2, Graph::cycle(4).expect("C4")]);
    ensure(codes(&found) == expected, format!("{} obstructions: {}", found.len(), graph6_list(&found)))
}

fn graph6_list(graphs: &[Graph]) -> String {
    graphs.iter().map(crate::graph::to_graph6).collect::<Vec<_>>().join(" ")
}

fn check_a6(_: Level, _: &Catalog) -> CheckResult {
    let two_one = derive_obstructions(2, 1, 6).map_err(|e| e.to_string())?;
    let one_two = derive_obstructions(1, 2, 6).map_err(|e| e.to_string())?;
    let complements: Vec<Graph> = two_one.iter().map(Graph::complement).collect();
    let dual = codes(&complements) == codes(&one_two);
    ensure(
        two_one.len() == 9 && dual,
        format!(
            "(2,1): {} obstructions; (1,2): {}, {} complements",
            two_one.len(),
            one_two.len(),
            if dual { "exactly their" } else { "not their" }
        ),
    )
}

fn check_a7(_: Level, _: &Catalog) -> CheckResult {
    let derive = |max_n, holds: fn(&Cotree) -> bool| {
        derive_minimal(1, max_n, holds).map(|v| v.len()).map_err(|e| e.to_string())
    };
    let polar = derive(10, |t| is_sk_polar_cotree(t, UNBOUNDED, UNBOUNDED))?;
    // Obstructions to a union of two classes can have twice the size of
    // either side's obstructions, hence 12 vertices for the disjunctive forms.
    let readings = [
        ("stable set plus cliques", derive(12, |t| is_sk_polar_cotree(t, 1, UNBOUNDED))?),
        (
            "s = 1 or k = 1",
            derive(12, |t| is_sk_polar_cotree(t, 1, UNBOUNDED) || is_sk_polar_cotree(t, UNBOUNDED, 1))?,
        ),
        ("one side of singleton parts", derive(12, is_unipolar_either_side_cotree)?),
    ];
    let matching: Vec<&str> = readings.iter().filter(|(_, n)| *n == 18).map(|(name, _)| *name).collect();
    let counts: Vec<String> = readings.iter().map(|(name, n)| format!("{name}: {n}")).collect();
    ensure(
        polar == 8 && !matching.is_empty(),
        format!(
            "non-polar: {polar}; non-monopolar by reading: {}; 18 reproduced by: {}",
            counts.join(", "),
            if matching.is_empty() { "none".to_string() } else { matching.join(", ") }
        ),
    )
}

fn check_a8(_: Level, _: &Catalog) -> CheckResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut largest = 0;
    for k in 2..=3i64 {
        for i in 1..=FAMILY_COUNT {
            let g = family_member(i, k).map_err(|e| e.to_string())?;
            largest = largest.max(g.order());
            let kk = k as usize;
            if !crate::catalog::is_minimal_obstruction(&g, kk, kk).map_err(|e| e.to_string())? {
                failures.push(format!("F{i} at k={k}"));
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(
        failures.is_empty() && within(elapsed, 30),
        format!(
            "{} members checked up to {largest} vertices in {:.2}s; failures: {failures:?}",
            2 * FAMILY_COUNT,
            elapsed.as_secs_f64()
        ),
    )
}

fn check_a9(level: Level, _: &Catalog) -> CheckResult {
    let mut runs = vec![(2usize, 9usize)];
    if level == Level::Full {
        runs.push((3, 12));
    }
    let mut details = Vec::new();
    let mut clean = true;
    for (k, max_n) in runs {
        let found = derive_obstructions(k, k, max_n).map_err(|e| e.to_string())?;
        let report = verify_structure_lemmas(&found, k);
        clean &= report.is_clean();
        let first = report.violations.first().map(|v| format!(", first: {} {:?} {}", v.graph6, v.statement, v.detail));
        details.push(format!(
            "k={k}, n<={max_n}: {} obstructions, {} violations, {} template matches{}",
            report.checked,
            report.violations.len(),
            report.template_matches.len(),
            first.unwrap_or_default()
        ));
    }
    if level == Level::Fast {
        details.push("k=3 enumeration skipped at fast level".into());
    }
    ensure(clean, details.join("; "))
}

fn check_a10(_: Level, _: &Catalog) -> CheckResult {
    let cographs: Vec<Cotree> = (1..=8).flat_map(enumerate_cographs).collect();
    let disagreements: usize = cographs
        .par_iter()
        .map(|t| {
            let g = t.to_graph();
            let mut bad = 0;
            for s in 0..=3 {
                for k in 0..=3 {
                    if is_sk_polar_cotree(t, s, k) != brute_force_sk_polar(&g, s, k).expect("small graph") {
                        bad += 1;
                    }
                }
            }
            bad
        })
        .sum();
    ensure(
        disagreements == 0,
        format!("{} cographs x 16 cap pairs, {disagreements} disagreements", cographs.len()),
    )
}

fn certify_and_validate(g: &Graph, catalog: &Catalog) -> Result<(), String> {
    let cert = certify(g, 2, 2, catalog);
    let g6 = crate::graph::to_graph6(g);
    validate_certificate(g, 2, 2, &cert, catalog).map_err(|e| format!("{g6}: {e}"))?;
    match cert {
        Certificate::Obstruction { id: None, .. } => Err(format!("{g6}: obstruction not in the catalog")),
        Certificate::NotCograph { .. } => Err(format!("{g6}: cograph reported as not a cograph")),
        _ => Ok(()),
    }
}

fn check_a11(_: Level, catalog: &Catalog) -> CheckResult {
    let small: Vec<Graph> = (1..=9).flat_map(enumerate_cographs).map(|t| t.to_graph()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x706f6c6172);
    let random: Vec<Graph> = (0..200)
        .map(|_| {
            let n = rng.gen_range(10..=40);
            random_cotree(n, &mut rng).to_graph()
        })
        .collect();
    let failures: Vec<String> = small
        .par_iter()
        .chain(random.par_iter())
        .filter_map(|g| certify_and_validate(g, catalog).err())
        .collect();
    ensure(
        failures.is_empty(),
        format!(
            "{} cographs on at most 9 vertices and {} random ones up to 40; {} failures{}",
            small.len(),
            random.len(),
            failures.len(),
            failures.first().map(|f| format!(", first: {f}")).unwrap_or_default()
        ),
    )
}

fn check_a12(_: Level, catalog: &Catalog) -> CheckResult {
    let graphs: Vec<Graph> = (1..=8)
        .map(|n| graphs_up_to_iso(n).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let polar: Vec<&Graph> = graphs
        .par_iter()
        .filter(|g| brute_force_sk_polar(g, 2, 2).expect("small graph"))
        .collect();
    let switch_failures = polar
        .par_iter()
        .filter(|g| {
            (0..g.order()).any(|v| {
                let h = g.switch_vertex(v).expect("vertex in range");
                !brute_force_sk_polar(&h, 2, 2).expect("small graph")
            })
        })
        .count();

    let disconnected_cographs: Vec<&&Graph> = polar
        .iter()
        .filter(|g| !g.is_connected() && crate::cograph::is_cograph(g))
        .collect();
    let pc_failures = disconnected_cographs
        .par_iter()
        .filter(|g| {
            partial_complements(g).expect("cograph").iter().any(|h| {
                !matches!(is_sk_polar(h, 2, 2), Ok(true))
            })
        })
        .count();

    let mut catalog_failures = 0;
    for e in catalog.entries() {
        let pcs = partial_complements(&e.graph).map_err(|e| e.to_string())?;
        catalog_failures += pcs.iter().filter(|h| catalog.identify(h).is_none()).count();
    }
    ensure(
        switch_failures == 0 && pc_failures == 0 && catalog_failures == 0,
        format!(
            "{} 2-polar graphs on at most 8 vertices, {switch_failures} with a non-2-polar switch; \
             {} disconnected 2-polar cographs, {pc_failures} with a bad partial complement; \
             {catalog_failures} partial complements of catalog entries outside the catalog",
            polar.len(),
            disconnected_cographs.len()
        ),
    )
}
