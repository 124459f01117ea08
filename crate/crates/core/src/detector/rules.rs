//! The sixteen rule passes.
//!
//! Every rule reads the parsed model, the metrics table, or the reference
//! index — never the raw text — so firing behavior is exactly as deep as the
//! structural parse. Instances carry the metric values the rule consulted.

use std::collections::BTreeMap;

use crate::catalog::SmellKind;

use super::graph::{build_dependency_graph, find_cycles};
use super::refs::{method_uid, ReferenceIndex};
use super::source::Token;
use super::{
    method_complexity, ClassRecord, Corpus, MethodRecord, MetricsTable, RuleConfig,
    SmellInstance, SourceUnit, Visibility,
};

const PRIMITIVE_TYPES: &[&str] = &[
    "int", "long", "short", "byte", "char", "boolean", "float", "double", "String",
];

fn instance(
    kind: SmellKind,
    unit_path: &str,
    entity: String,
    span: (usize, usize),
    evidence: &[(&str, i64)],
) -> SmellInstance {
    SmellInstance {
        kind,
        unit_path: unit_path.to_string(),
        entity_name: entity,
        line_span: span,
        evidence: evidence.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
    }
}

pub(crate) fn run_all(
    corpus: &Corpus,
    config: &RuleConfig,
    metrics: &MetricsTable,
    index: &ReferenceIndex,
) -> Vec<SmellInstance> {
    let mut out = Vec::new();
    cyclic_dependencies(corpus, &mut out);
    let by_name: BTreeMap<&str, &ClassRecord> = corpus
        .units
        .iter()
        .flat_map(|u| u.classes.iter())
        .filter(|c| !c.is_module_scope)
        .map(|c| (c.name.as_str(), c))
        .collect();
    for unit in &corpus.units {
        for class in &unit.classes {
            class_rules(unit, class, config, metrics, index, &by_name, &mut out);
            field_rules(unit, class, config, index, &mut out);
            for (idx, method) in class.methods.iter().enumerate() {
                method_rules(corpus, unit, class, idx, method, config, index, &mut out);
            }
        }
    }
    duplicate_code(corpus, config, &mut out);
    out
}

fn cyclic_dependencies(corpus: &Corpus, out: &mut Vec<SmellInstance>) {
    let graph = build_dependency_graph(corpus);
    for cycle in find_cycles(&graph) {
        // anchor the instance to the first unit of the cycle's first package
        let Some(unit) = corpus.units.iter().find(|u| u.package == cycle[0]) else {
            continue;
        };
        out.push(instance(
            SmellKind::CyclicDependency,
            &unit.path,
            cycle.join("->"),
            (1, 1),
            &[("cycle_size", cycle.len() as i64)],
        ));
    }
}

fn class_rules(
    unit: &SourceUnit,
    class: &ClassRecord,
    config: &RuleConfig,
    metrics: &MetricsTable,
    index: &ReferenceIndex,
    by_name: &BTreeMap<&str, &ClassRecord>,
    out: &mut Vec<SmellInstance>,
) {
    if class.is_module_scope {
        return;
    }
    let ckey = format!("{}::{}", unit.path, class.name);
    let Some(cm) = metrics.classes.get(&ckey) else {
        return;
    };

    if cm.nloc > config.god_class_min_nloc {
        out.push(instance(
            SmellKind::GodClass,
            &unit.path,
            class.name.clone(),
            class.line_span,
            &[("nloc", cm.nloc as i64)],
        ));
    }

    if !class.is_abstract_type()
        && cm.nloc < config.lazy_class_max_nloc
        && cm.wmc < config.lazy_class_max_wmc
    {
        out.push(instance(
            SmellKind::LazyClass,
            &unit.path,
            class.name.clone(),
            class.line_span,
            &[("nloc", cm.nloc as i64), ("wmc", cm.wmc as i64)],
        ));
    }

    // middleman: majority of concrete methods are one-statement delegations
    let concrete: Vec<&MethodRecord> = class
        .methods
        .iter()
        .filter(|m| m.has_body && !m.is_constructor && !m.name.starts_with('<'))
        .collect();
    if !concrete.is_empty() {
        let delegations = concrete
            .iter()
            .filter(|m| is_delegation(unit, class, m))
            .count();
        if delegations as f64 / concrete.len() as f64 > config.middleman_delegation_ratio {
            out.push(instance(
                SmellKind::Middleman,
                &unit.path,
                class.name.clone(),
                class.line_span,
                &[
                    ("methods", concrete.len() as i64),
                    ("delegations", delegations as i64),
                ],
            ));
        }
    }

    // refused-bequest: subclass ignores most of what its parent offers
    if let Some(parent) = class.extends.as_ref().and_then(|p| by_name.get(p.as_str())) {
        let inherited: Vec<&str> = parent
            .methods
            .iter()
            .filter(|m| {
                m.visibility != Visibility::Private
                    && !m.is_static
                    && !m.is_constructor
                    && !m.name.starts_with('<')
            })
            .map(|m| m.name.as_str())
            .chain(
                parent
                    .fields
                    .iter()
                    .filter(|f| f.visibility != Visibility::Private && !f.is_static)
                    .map(|f| f.name.as_str()),
            )
            .collect();
        if !inherited.is_empty() {
            let used = inherited
                .iter()
                .filter(|m| {
                    class.methods.iter().any(|own| own.name == **m)
                        || index
                            .member_referencers(&parent.name, m)
                            .contains(&class.name)
                })
                .count();
            if (used as f64 / inherited.len() as f64) < config.refused_bequest_usage_ratio {
                out.push(instance(
                    SmellKind::RefusedBequest,
                    &unit.path,
                    class.name.clone(),
                    class.line_span,
                    &[
                        ("inherited", inherited.len() as i64),
                        ("used", used as i64),
                    ],
                ));
            }
        }
    }

    if class.is_abstract_type() && index.direct_subclasses(&class.name) == 1 {
        out.push(instance(
            SmellKind::SpeculativeGenerality,
            &unit.path,
            class.name.clone(),
            class.line_span,
            &[("implementers", 1)],
        ));
    }

    // primitive-obsession, twice: explicit synchronized-buffer usage, and
    // families of numbered primitive fields standing in for a type
    let buffer_refs = unit
        .tokens
        .iter()
        .filter(|t| {
            t.text == "StringBuffer" && t.line >= class.line_span.0 && t.line <= class.line_span.1
        })
        .count();
    if buffer_refs >= 1 {
        out.push(instance(
            SmellKind::PrimitiveObsession,
            &unit.path,
            class.name.clone(),
            class.line_span,
            &[("string_buffer_refs", buffer_refs as i64)],
        ));
    }
    let mut families: BTreeMap<&str, usize> = BTreeMap::new();
    for f in &class.fields {
        if PRIMITIVE_TYPES.contains(&f.type_name.as_str()) {
            let stem = f.name.trim_end_matches(|c: char| c.is_ascii_digit());
            if !stem.is_empty() && stem != f.name {
                *families.entry(stem).or_default() += 1;
            }
        }
    }
    if let Some(largest) = families.values().max().copied() {
        if largest >= config.primitive_obsession_min_prefix_fields {
            out.push(instance(
                SmellKind::PrimitiveObsession,
                &unit.path,
                class.name.clone(),
                class.line_span,
                &[("prefix_fields", largest as i64)],
            ));
        }
    }
}

/// True when the whole body is `[return] receiver.name(...);` with the
/// receiver a field, a parameter, or `this.field`.
fn is_delegation(unit: &SourceUnit, class: &ClassRecord, method: &MethodRecord) -> bool {
    let (s, e) = method.body_tokens;
    let body = &unit.tokens[s..e];
    if body.iter().any(|t| t.text == "{")
        || body.iter().filter(|t| t.text == ";").count() != 1
    {
        return false;
    }
    let mut i = 0;
    if body.get(i).map(|t| t.text.as_str()) == Some("return") {
        i += 1;
    }
    if matches!(body.get(i).map(|t| t.text.as_str()), Some("this") | Some("self")) {
        if body.get(i + 1).map(|t| t.text.as_str()) != Some(".") {
            return false;
        }
        i += 2;
    }
    let Some(receiver) = body.get(i) else { return false };
    let is_known_receiver = class.fields.iter().any(|f| f.name == receiver.text)
        || method.params.iter().any(|p| p.name == receiver.text);
    if !is_known_receiver {
        return false;
    }
    // receiver . name ( ... ) ;  and nothing after
    if body.get(i + 1).map(|t| t.text.as_str()) != Some(".") {
        return false;
    }
    if body.get(i + 3).map(|t| t.text.as_str()) != Some("(") {
        return false;
    }
    let mut depth = 0usize;
    for (k, t) in body.iter().enumerate().skip(i + 3) {
        match t.text.as_str() {
            "(" => depth += 1,
            ")" => {
                depth -= 1;
                if depth == 0 {
                    return body.get(k + 1).map(|t| t.text.as_str()) == Some(";")
                        && k + 2 == body.len();
                }
            }
            _ => {}
        }
    }
    false
}

fn field_rules(
    unit: &SourceUnit,
    class: &ClassRecord,
    config: &RuleConfig,
    index: &ReferenceIndex,
    out: &mut Vec<SmellInstance>,
) {
    for f in &class.fields {
        let entity = format!("{}.{}", class.name, f.name);
        let referencers = index.member_referencers(&class.name, &f.name);

        if f.visibility == Visibility::Private && referencers.is_empty() {
            out.push(instance(
                SmellKind::DeadCode,
                &unit.path,
                entity.clone(),
                (f.line, f.line),
                &[("references", 0)],
            ));
        }

        if f.visibility == Visibility::Private && !f.is_static {
            let writers = index.field_writers(&class.name, &f.name);
            let reads = index.field_read_count(&class.name, &f.name);
            if writers.len() == 1 && reads == 0 {
                out.push(instance(
                    SmellKind::TemporaryField,
                    &unit.path,
                    entity.clone(),
                    (f.line, f.line),
                    &[("writing_methods", 1), ("reads", 0)],
                ));
            }
        }

        if f.visibility == Visibility::Public
            && f.is_static
            && f.is_final
            && !referencers.contains(&class.name)
            && referencers.len() >= config.orphan_min_external_classes
        {
            out.push(instance(
                SmellKind::OrphanVariable,
                &unit.path,
                entity,
                (f.line, f.line),
                &[("external_referencing_classes", referencers.len() as i64)],
            ));
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn method_rules(
    corpus: &Corpus,
    unit: &SourceUnit,
    class: &ClassRecord,
    idx: usize,
    method: &MethodRecord,
    config: &RuleConfig,
    index: &ReferenceIndex,
    out: &mut Vec<SmellInstance>,
) {
    let entity = format!("{}.{}", class.name, method.name);
    let nloc = unit.nloc_in(method.line_span);

    if method.params.len() > config.long_parameter_max_params {
        out.push(instance(
            SmellKind::LongParameter,
            &unit.path,
            entity.clone(),
            method.line_span,
            &[("parameter_count", method.params.len() as i64)],
        ));
    }

    if nloc > config.god_method_min_nloc {
        out.push(instance(
            SmellKind::GodMethod,
            &unit.path,
            entity.clone(),
            method.line_span,
            &[("nloc", nloc as i64)],
        ));
    }

    let complexity = method_complexity(unit, method, corpus.flavor);
    if nloc > config.spaghetti_min_nloc && complexity > config.spaghetti_min_complexity {
        out.push(instance(
            SmellKind::SpaghettiCode,
            &unit.path,
            entity.clone(),
            method.line_span,
            &[("nloc", nloc as i64), ("complexity", complexity as i64)],
        ));
    }

    // shotgun-surgery: fired once per method name, counting other classes
    if !method.is_constructor
        && !method.name.starts_with('<')
        && !class.methods[..idx].iter().any(|p| p.name == method.name)
    {
        let external = index
            .member_referencers(&class.name, &method.name)
            .iter()
            .filter(|c| *c != &class.name)
            .count();
        if external >= config.shotgun_min_referencing_classes {
            out.push(instance(
                SmellKind::ShotgunSurgery,
                &unit.path,
                entity.clone(),
                method.line_span,
                &[("referencing_classes", external as i64)],
            ));
        }
    }

    if method.visibility == Visibility::Private
        && !method.is_constructor
        && !method.name.starts_with('<')
        && index.member_referencers(&class.name, &method.name).is_empty()
    {
        out.push(instance(
            SmellKind::DeadCode,
            &unit.path,
            entity.clone(),
            method.line_span,
            &[("references", 0)],
        ));
    }

    if method.has_body && !method.params.is_empty() {
        let uid = method_uid(&unit.path, &class.name, idx);
        let unused = method
            .params
            .iter()
            .filter(|p| !index.param_used(&uid, &p.name))
            .count();
        if unused >= 1 {
            out.push(instance(
                SmellKind::SpeculativeGenerality,
                &unit.path,
                entity.clone(),
                method.line_span,
                &[("unused_parameters", unused as i64)],
            ));
        }
    }

    if method.has_body {
        long_statements(unit, method, &entity, config, out);
    }
}

/// Statement-length and switch-size checks over one method body.
fn long_statements(
    unit: &SourceUnit,
    method: &MethodRecord,
    entity: &str,
    config: &RuleConfig,
    out: &mut Vec<SmellInstance>,
) {
    let (s, e) = method.body_tokens;
    let tokens = &unit.tokens;

    let mut seg_start = s;
    for i in s..=e {
        let boundary = i == e || matches!(tokens[i].text.as_str(), ";" | "{" | "}");
        if !boundary {
            continue;
        }
        let len = i - seg_start;
        if len > config.long_statement_max_tokens {
            out.push(instance(
                SmellKind::LongStatement,
                &unit.path,
                entity.to_string(),
                (tokens[seg_start].line, tokens[i - 1].line),
                &[("statement_tokens", len as i64)],
            ));
        }
        seg_start = i + 1;
    }

    let mut i = s;
    while i < e {
        if tokens[i].text != "switch" {
            i += 1;
            continue;
        }
        let switch_line = tokens[i].line;
        let Some(open) = (i..e).find(|&k| tokens[k].text == "{") else {
            break;
        };
        let mut depth = 0usize;
        let mut close = None;
        for k in open..e {
            match tokens[k].text.as_str() {
                "{" => depth += 1,
                "}" => {
                    depth -= 1;
                    if depth == 0 {
                        close = Some(k);
                        break;
                    }
                }
                _ => {}
            }
        }
        let Some(close) = close else { break };
        let cases = tokens[open..close]
            .iter()
            .filter(|t| t.text == "case")
            .count();
        if cases > config.long_statement_max_cases {
            out.push(instance(
                SmellKind::LongStatement,
                &unit.path,
                entity.to_string(),
                (switch_line, tokens[close].line),
                &[("case_count", cases as i64)],
            ));
        }
        i = close + 1;
    }
}

fn duplicate_code(corpus: &Corpus, config: &RuleConfig, out: &mut Vec<SmellInstance>) {
    let w = config.duplicate_window_tokens;
    let join = |tokens: &[Token]| -> String {
        let mut key = String::new();
        for t in tokens {
            key.push_str(&t.text);
            key.push('\u{1f}');
        }
        key
    };

    let mut windows: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    for (ui, unit) in corpus.units.iter().enumerate() {
        if unit.tokens.len() < w {
            continue;
        }
        for start in 0..=unit.tokens.len() - w {
            windows
                .entry(join(&unit.tokens[start..start + w]))
                .or_default()
                .push((ui, start));
        }
    }

    let mut covered: Vec<Vec<bool>> = corpus
        .units
        .iter()
        .map(|u| vec![false; u.tokens.len()])
        .collect();
    for occurrences in windows.values() {
        if occurrences.len() < 2 {
            continue;
        }
        for &(ui, start) in occurrences {
            for k in start..start + w {
                covered[ui][k] = true;
            }
        }
    }

    // maximal covered runs, grouped by their exact content
    let mut groups: BTreeMap<String, Vec<(usize, usize, usize)>> = BTreeMap::new();
    for (ui, cov) in covered.iter().enumerate() {
        let mut run_start = None;
        for i in 0..=cov.len() {
            match (i < cov.len() && cov[i], run_start) {
                (true, None) => run_start = Some(i),
                (false, Some(start)) => {
                    groups
                        .entry(join(&corpus.units[ui].tokens[start..i]))
                        .or_default()
                        .push((ui, start, i));
                    run_start = None;
                }
                _ => {}
            }
        }
    }

    let mut ordered: Vec<&Vec<(usize, usize, usize)>> =
        groups.values().filter(|sites| sites.len() >= 2).collect();
    ordered.sort_by_key(|sites| {
        let (ui, start, _) = sites[0];
        (corpus.units[ui].path.clone(), start)
    });

    for (gid, sites) in ordered.iter().enumerate() {
        for &(ui, start, end) in *sites {
            let unit = &corpus.units[ui];
            let span = (unit.tokens[start].line, unit.tokens[end - 1].line);
            out.push(instance(
                SmellKind::DuplicateCode,
                &unit.path,
                enclosing_entity(unit, span),
                span,
                &[
                    ("occurrences", sites.len() as i64),
                    ("span_tokens", (end - start) as i64),
                    ("group", gid as i64),
                ],
            ));
        }
    }
}

/// Innermost method (then class, then unit) whose span contains `span`.
fn enclosing_entity(unit: &SourceUnit, span: (usize, usize)) -> String {
    for class in &unit.classes {
        for m in &class.methods {
            if m.line_span.0 <= span.0 && span.1 <= m.line_span.1 {
                return format!("{}.{}", class.name, m.name);
            }
        }
    }
    for class in &unit.classes {
        if class.line_span.0 <= span.0 && span.1 <= class.line_span.1 {
            return class.name.clone();
        }
    }
    unit.path.clone()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    use crate::catalog::SmellKind;
    use crate::detector::{detect_smells, parse_unit, Corpus, LanguageFlavor, RuleConfig, SmellInstance};
    use crate::fixtures;

    fn manifest_instances() -> Vec<SmellInstance> {
        let v: serde_json::Value =
            serde_json::from_str(fixtures::corpus_manifest_json()).unwrap();
        v["instances"]
            .as_array()
            .unwrap()
            .iter()
            .map(|inst| SmellInstance {
                kind: inst["kind"].as_str().unwrap().parse().unwrap(),
                unit_path: inst["unit_path"].as_str().unwrap().to_string(),
                entity_name: inst["entity"].as_str().unwrap().to_string(),
                line_span: (
                    inst["line_start"].as_u64().unwrap() as usize,
                    inst["line_end"].as_u64().unwrap() as usize,
                ),
                evidence: inst["evidence"]
                    .as_object()
                    .unwrap()
                    .iter()
                    .map(|(k, v)| (k.clone(), v.as_i64().unwrap()))
                    .collect(),
            })
            .collect()
    }

    #[test]
    fn labeled_corpus_detects_exactly_the_manifest() {
        let corpus = fixtures::labeled_corpus();
        let detected = detect_smells(&corpus, &RuleConfig::default()).unwrap();
        let expected = manifest_instances();
        assert_eq!(detected.len(), expected.len(), "instance count");
        for (got, want) in detected.iter().zip(&expected) {
            assert_eq!(got, want);
        }
    }

    #[test]
    fn detection_is_deterministic() {
        let corpus = fixtures::labeled_corpus();
        let a = detect_smells(&corpus, &RuleConfig::default()).unwrap();
        let b = detect_smells(&corpus, &RuleConfig::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn entity_free_corpus_yields_no_instances() {
        let unit = parse_unit("Empty.java", "package p;\n", LanguageFlavor::JavaLike).unwrap();
        let corpus = Corpus {
            units: vec![unit],
            flavor: LanguageFlavor::JavaLike,
            skipped: Vec::new(),
        };
        assert!(detect_smells(&corpus, &RuleConfig::default()).unwrap().is_empty());
    }

    #[test]
    fn seven_parameters_fire_long_parameter() {
        let unit = parse_unit(
            "P.java",
            "package p;\npublic class A {\n    public int m(int a, int b, int c, int d, int e, int f, int g) {\n        return a + b + c + d + e + f + g;\n    }\n}\n",
            LanguageFlavor::JavaLike,
        )
        .unwrap();
        let corpus = Corpus {
            units: vec![unit],
            flavor: LanguageFlavor::JavaLike,
            skipped: Vec::new(),
        };
        let found = detect_smells(&corpus, &RuleConfig::default()).unwrap();
        let lp: Vec<_> = found
            .iter()
            .filter(|i| i.kind == SmellKind::LongParameter)
            .collect();
        assert_eq!(lp.len(), 1);
        assert_eq!(lp[0].evidence["parameter_count"], 7);
    }

    #[test]
    fn instance_counts_per_kind_sum_to_total() {
        let corpus = fixtures::labeled_corpus();
        let found = detect_smells(&corpus, &RuleConfig::default()).unwrap();
        let per_kind: usize = crate::catalog::catalog()
            .iter()
            .map(|d| found.iter().filter(|i| i.kind == d.kind).count())
            .sum();
        assert_eq!(per_kind, found.len());
    }

    proptest! {
        #[test]
        fn raising_long_parameter_threshold_never_adds_instances(t in 1usize..20) {
            let corpus = fixtures::labeled_corpus();
            let mut low = RuleConfig::default();
            low.long_parameter_max_params = t;
            let mut high = low.clone();
            high.long_parameter_max_params = t + 1;
            let at = |cfg: &RuleConfig| -> BTreeSet<String> {
                detect_smells(&corpus, cfg)
                    .unwrap()
                    .into_iter()
                    .filter(|i| i.kind == SmellKind::LongParameter)
                    .map(|i| format!("{}::{}", i.unit_path, i.entity_name))
                    .collect()
            };
            let wide = at(&low);
            let narrow = at(&high);
            prop_assert!(narrow.is_subset(&wide));
        }
    }
}
