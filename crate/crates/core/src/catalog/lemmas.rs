//! Structural statements every minimal k-polar obstruction satisfies.

use serde::Serialize;

use crate::cograph::cograph_code;
use crate::expr::{eval_expr, parse_expr};
use crate::graph::{to_graph6, Graph};

/// Which structural statement a graph broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Statement {
    /// At most `k + 2` components.
    ComponentBound,
    /// At least one component with an edge.
    NonTrivialComponent,
    /// At most `k + 1` isolated vertices.
    TrivialBound,
    /// With an isolated vertex, at most one non-complete component.
    NonCompleteBound,
    /// Unless extremal, complete components are `K_1` or `K_2`.
    SmallCompleteComponents,
    /// `k + 2` components force the `lK_1 + (k-l+1)K_2 + K_{l,l}` shape.
    FullComponentTemplate,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub statement: Statement,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct LemmaReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
    /// Obstructions with `k + 2` components and the `l` they matched.
    pub template_matches: Vec<(String, usize)>,
}

impl LemmaReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `lK_1 + (k-l+1)K_2 + K_{l,l}`.
pub fn full_component_template(k: usize, l: usize) -> Graph {
    assert!((1..=k + 1).contains(&l));
    let text = format!("{l}K_1 + {}K_2 + K_{{{l},{l}}}", k + 1 - l);
    eval_expr(&parse_expr(&text).expect("template parses"), 0).expect("template evaluates")
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * n.saturating_sub(1) / 2
}

/// Checks each graph, assumed a minimal k-polar obstruction, against every
/// statement and collects what fails.
pub fn verify_structure_lemmas(obstructions: &[Graph], k: usize) -> LemmaReport {
    let mut report = LemmaReport::default();
    let extremal_order = (k + 1) * (k + 1);
    for g in obstructions {
        report.checked += 1;
        let g6 = to_graph6(g);
        let mut found = Vec::new();
        let mut fail = |statement, detail: String| {
            found.push(Violation { graph6: g6.clone(), statement, detail });
        };
        let comps: Vec<Graph> = g.components().iter().map(|c| g.induced_subgraph(c)).collect();
        let trivial = comps.iter().filter(|c| c.order() == 1).count();
        let non_complete = comps.iter().filter(|c| !is_complete(c)).count();

        if comps.len() > k + 2 {
            fail(Statement::ComponentBound, format!("{} components", comps.len()));
        }
        if trivial == comps.len() {
            fail(Statement::NonTrivialComponent, "edgeless".into());
        }
        if trivial > k + 1 {
            fail(Statement::TrivialBound, format!("{trivial} isolated vertices"));
        }
        if trivial >= 1 && non_complete > 1 {
            fail(Statement::NonCompleteBound, format!("{non_complete} non-complete components"));
        }
        if g.order() != extremal_order {
            if let Some(big) = comps.iter().find(|c| is_complete(c) && c.order() > 2) {
                fail(Statement::SmallCompleteComponents, format!("complete component on {} vertices", big.order()));
            }
        }
        if comps.len() == k + 2 {
            let code = cograph_code(g).ok();
            let matched = (1..=k + 1).find(|&l| {
                code.is_some() && cograph_code(&full_component_template(k, l)).ok() == code
            });
            match matched {
                Some(l) if trivial >= 1 => report.template_matches.push((g6.clone(), l)),
                Some(_) => fail(Statement::FullComponentTemplate, "no isolated vertex".into()),
                None => fail(Statement::FullComponentTemplate, "matches no template".into()),
            }
        }
        report.violations.extend(found);
    }
    report
}
