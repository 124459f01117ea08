//! Cross-entity reference resolution by simple-name matching.
//!
//! Resolution is deliberately shallow: receivers are typed only through
//! declared fields, parameters, and `Type name =`-style locals; bare names
//! resolve against the enclosing class and its known ancestors; anything
//! unresolved is dropped. Rules built on this index therefore under-count
//! rather than guess.

use std::collections::{BTreeMap, BTreeSet};

use super::{ClassRecord, Corpus, SourceUnit};

/// Tokens that can follow (or precede) a name to make the access a write.
const ASSIGN_OPS: &[&str] = &[
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", "**=", "//=",
];

/// Words never treated as a declaration's type name.
const DECL_STOP: &[&str] = &[
    "return", "if", "else", "while", "for", "do", "switch", "case", "break", "continue",
    "new", "throw", "throws", "try", "catch", "finally", "instanceof", "assert", "yield",
    "package", "import", "class", "interface", "enum", "extends", "implements", "this",
    "super", "void", "def", "elif", "except", "lambda", "pass", "raise", "del", "global",
    "nonlocal", "with", "as", "from", "not", "and", "or", "in", "is",
];

#[derive(Debug, Default)]
pub(crate) struct ReferenceIndex {
    /// Class simple name -> distinct OTHER classes it references.
    class_out: BTreeMap<String, BTreeSet<String>>,
    /// Class simple name -> distinct OTHER classes referencing it.
    class_in: BTreeMap<String, BTreeSet<String>>,
    /// (owner class, member name) -> referencing classes, owner included.
    member_refs: BTreeMap<(String, String), BTreeSet<String>>,
    /// (owner class, field name) -> method uids that assign to it.
    field_writes: BTreeMap<(String, String), BTreeSet<String>>,
    /// (owner class, field name) -> non-write reference count.
    field_reads: BTreeMap<(String, String), usize>,
    /// (method uid, parameter name) pairs observed in the method body.
    params_used: BTreeSet<(String, String)>,
    /// Parent class simple name -> direct known subclasses/implementers.
    subclasses: BTreeMap<String, BTreeSet<String>>,
}

/// Stable identity for one method occurrence, robust to overloads.
pub(crate) fn method_uid(unit_path: &str, class: &str, method_idx: usize) -> String {
    format!("{unit_path}::{class}#{method_idx}")
}

impl ReferenceIndex {
    /// `key` is either `unit_path::Class` or a bare simple name.
    pub(crate) fn fan_in(&self, key: &str) -> usize {
        self.class_in.get(simple_name(key)).map_or(0, |s| s.len())
    }

    pub(crate) fn fan_out(&self, key: &str) -> usize {
        self.class_out.get(simple_name(key)).map_or(0, |s| s.len())
    }

    pub(crate) fn classes_referenced_by(&self, class: &str) -> &BTreeSet<String> {
        static EMPTY: BTreeSet<String> = BTreeSet::new();
        self.class_out.get(simple_name(class)).unwrap_or(&EMPTY)
    }

    pub(crate) fn member_referencers(&self, class: &str, member: &str) -> &BTreeSet<String> {
        static EMPTY: BTreeSet<String> = BTreeSet::new();
        self.member_refs
            .get(&(class.to_string(), member.to_string()))
            .unwrap_or(&EMPTY)
    }

    pub(crate) fn field_writers(&self, class: &str, field: &str) -> &BTreeSet<String> {
        static EMPTY: BTreeSet<String> = BTreeSet::new();
        self.field_writes
            .get(&(class.to_string(), field.to_string()))
            .unwrap_or(&EMPTY)
    }

    pub(crate) fn field_read_count(&self, class: &str, field: &str) -> usize {
        *self
            .field_reads
            .get(&(class.to_string(), field.to_string()))
            .unwrap_or(&0)
    }

    pub(crate) fn param_used(&self, uid: &str, param: &str) -> bool {
        self.params_used
            .contains(&(uid.to_string(), param.to_string()))
    }

    pub(crate) fn direct_subclasses(&self, parent: &str) -> usize {
        self.subclasses.get(parent).map_or(0, |s| s.len())
    }

    fn class_ref(&mut self, from: &str, to: &str) {
        if from != to {
            self.class_out
                .entry(from.to_string())
                .or_default()
                .insert(to.to_string());
            self.class_in
                .entry(to.to_string())
                .or_default()
                .insert(from.to_string());
        }
    }

    fn member_ref(&mut self, owner: &str, member: &str, from: &str) {
        self.member_refs
            .entry((owner.to_string(), member.to_string()))
            .or_default()
            .insert(from.to_string());
    }

    fn field_access(&mut self, owner: &str, field: &str, from: &str, writer: Option<&str>) {
        self.member_ref(owner, field, from);
        match writer {
            Some(uid) => {
                self.field_writes
                    .entry((owner.to_string(), field.to_string()))
                    .or_default()
                    .insert(uid.to_string());
            }
            None => {
                *self
                    .field_reads
                    .entry((owner.to_string(), field.to_string()))
                    .or_default() += 1;
            }
        }
    }
}

fn simple_name(key: &str) -> &str {
    key.rsplit("::").next().unwrap_or(key)
}

fn is_ident(t: &str) -> bool {
    t.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_' || c == '$')
}

/// Member name -> (owner class, is_field), own members first, then known
/// ancestors' non-private members.
fn visible_members(
    class: &ClassRecord,
    by_name: &BTreeMap<&str, &ClassRecord>,
) -> BTreeMap<String, (String, bool)> {
    let mut map = BTreeMap::new();
    for m in &class.methods {
        map.entry(m.name.clone())
            .or_insert((class.name.clone(), false));
    }
    for f in &class.fields {
        map.entry(f.name.clone())
            .or_insert((class.name.clone(), true));
    }
    let mut seen = BTreeSet::new();
    seen.insert(class.name.clone());
    let mut frontier: Vec<&str> = class
        .extends
        .iter()
        .chain(class.implements.iter())
        .map(|s| s.as_str())
        .collect();
    while let Some(parent_name) = frontier.pop() {
        if !seen.insert(parent_name.to_string()) {
            continue;
        }
        let Some(parent) = by_name.get(parent_name) else {
            continue;
        };
        for m in &parent.methods {
            if m.visibility != super::Visibility::Private && !m.is_constructor {
                map.entry(m.name.clone())
                    .or_insert((parent.name.clone(), false));
            }
        }
        for f in &parent.fields {
            if f.visibility != super::Visibility::Private {
                map.entry(f.name.clone())
                    .or_insert((parent.name.clone(), true));
            }
        }
        frontier.extend(
            parent
                .extends
                .iter()
                .chain(parent.implements.iter())
                .map(|s| s.as_str()),
        );
    }
    map
}

pub(crate) fn build(corpus: &Corpus) -> ReferenceIndex {
    let mut index = ReferenceIndex::default();
    let mut by_name: BTreeMap<&str, &ClassRecord> = BTreeMap::new();
    for unit in &corpus.units {
        for class in &unit.classes {
            if !class.is_module_scope {
                by_name.entry(class.name.as_str()).or_insert(class);
            }
        }
    }

    for unit in &corpus.units {
        for class in &unit.classes {
            let cname = class.name.as_str();
            for parent in class.extends.iter().chain(class.implements.iter()) {
                if by_name.contains_key(parent.as_str()) {
                    index.class_ref(cname, parent);
                    index
                        .subclasses
                        .entry(parent.clone())
                        .or_default()
                        .insert(cname.to_string());
                }
            }
            let members = visible_members(class, &by_name);
            let field_types: BTreeMap<&str, &str> = class
                .fields
                .iter()
                .map(|f| (f.name.as_str(), f.type_name.as_str()))
                .collect();
            for field in &class.fields {
                if field.init_tokens.1 > field.init_tokens.0 {
                    scan(
                        &mut index, unit, cname, &members, &field_types, &by_name,
                        field.init_tokens, &BTreeMap::new(), None,
                    );
                }
            }
            for (idx, method) in class.methods.iter().enumerate() {
                if !method.has_body {
                    continue;
                }
                let uid = method_uid(&unit.path, cname, idx);
                let scope: BTreeMap<String, String> = method
                    .params
                    .iter()
                    .map(|p| (p.name.clone(), p.type_name.clone()))
                    .collect();
                scan(
                    &mut index, unit, cname, &members, &field_types, &by_name,
                    method.body_tokens, &scope, Some(&uid),
                );
            }
        }
    }
    index
}

/// Walks one token range attributing references to `cname`. `uid` is the
/// enclosing method (None for field initializers, where nothing is a write).
#[allow(clippy::too_many_arguments)]
fn scan(
    index: &mut ReferenceIndex,
    unit: &SourceUnit,
    cname: &str,
    members: &BTreeMap<String, (String, bool)>,
    field_types: &BTreeMap<&str, &str>,
    by_name: &BTreeMap<&str, &ClassRecord>,
    range: (usize, usize),
    params: &BTreeMap<String, String>,
    uid: Option<&str>,
) {
    let tokens = &unit.tokens;
    let (start, end) = range;
    let mut locals: BTreeMap<String, String> = BTreeMap::new();
    let text = |i: usize| tokens.get(i).filter(|_| i < end).map(|t| t.text.as_str());
    let is_write = |i: usize| -> bool {
        // `name <op>=`, `name++`, or `++name`
        let next = text(i + 1);
        next.is_some_and(|t| ASSIGN_OPS.contains(&t) || t == "++" || t == "--")
            || (i > start
                && matches!(tokens.get(i - 1).map(|t| t.text.as_str()), Some("++") | Some("--")))
    };
    let mut i = start;
    while i < end {
        let t = tokens[i].text.as_str();
        if !is_ident(t) {
            i += 1;
            continue;
        }
        // Declaration `Type name =` / `Type name ;` introduces a local.
        if !DECL_STOP.contains(&t) {
            if let (Some(var), Some(punct)) = (text(i + 1), text(i + 2)) {
                if is_ident(var)
                    && !DECL_STOP.contains(&var)
                    && (punct == "=" || punct == ";")
                {
                    if by_name.contains_key(t) {
                        index.class_ref(cname, t);
                    }
                    locals.insert(var.to_string(), t.to_string());
                    i += 2; // resume at `=`/`;`
                    continue;
                }
            }
        }
        if t == "this" || t == "self" || t == "super" {
            if text(i + 1) == Some(".") {
                if let Some(member) = text(i + 2).filter(|m| is_ident(m)) {
                    if let Some((owner, is_field)) = members.get(member) {
                        if *is_field {
                            let writer = if is_write(i + 2) { uid } else { None };
                            index.field_access(owner.clone().as_str(), member, cname, writer);
                        } else {
                            index.member_ref(owner, member, cname);
                        }
                    }
                    i += 3;
                    continue;
                }
            }
            i += 1;
            continue;
        }
        // Receiver typed through a parameter or local?
        let receiver_type = params
            .get(t)
            .or_else(|| locals.get(t))
            .cloned()
            .filter(|ty| by_name.contains_key(ty.as_str()));
        if params.contains_key(t) {
            if let Some(u) = uid {
                index.params_used.insert((u.to_string(), t.to_string()));
            }
        }
        if params.contains_key(t) || locals.contains_key(t) {
            if let Some(rtype) = receiver_type {
                if text(i + 1) == Some(".") {
                    if let Some(member) = text(i + 2).filter(|m| is_ident(m)) {
                        index.class_ref(cname, &rtype);
                        let writer = if is_write(i + 2) { uid } else { None };
                        if text(i + 3) == Some("(") {
                            index.member_ref(&rtype, member, cname);
                        } else {
                            index.field_access(&rtype, member, cname, writer);
                        }
                        i += 3;
                        continue;
                    }
                }
                index.class_ref(cname, &rtype);
            }
            i += 1;
            continue;
        }
        // Bare own/inherited member?
        if let Some((owner, is_field)) = members.get(t) {
            if *is_field {
                let writer = if is_write(i) { uid } else { None };
                index.field_access(owner.clone().as_str(), t, cname, writer);
                // Field used as a receiver also references its type's members.
                if text(i + 1) == Some(".") {
                    if let Some(member) = text(i + 2).filter(|m| is_ident(m)) {
                        if let Some(rtype) =
                            field_types.get(t).filter(|ty| by_name.contains_key(**ty))
                        {
                            index.class_ref(cname, rtype);
                            index.member_ref(rtype, member, cname);
                        }
                        i += 3;
                        continue;
                    }
                }
            } else if text(i + 1) == Some("(") {
                index.member_ref(owner, t, cname);
            }
            i += 1;
            continue;
        }
        // Known class: type use or static member access.
        if by_name.contains_key(t) {
            index.class_ref(cname, t);
            if text(i + 1) == Some(".") {
                if let Some(member) = text(i + 2).filter(|m| is_ident(m)) {
                    let writer = if is_write(i + 2) { uid } else { None };
                    if text(i + 3) == Some("(") {
                        index.member_ref(t, member, cname);
                    } else {
                        index.field_access(t, member, cname, writer);
                    }
                    i += 3;
                    continue;
                }
            }
        }
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::java_corpus;
    use super::*;

    #[test]
    fn static_member_reference_links_classes() {
        let corpus = java_corpus(&[(
            "S.java",
            "package p;\npublic class A {\n    public static int go() { return 1; }\n}\npublic class B {\n    public int m(int v) {\n        A.go();\n        return v;\n    }\n}\n",
        )]);
        let idx = build(&corpus);
        assert_eq!(idx.fan_in("S.java::A"), 1);
        assert_eq!(idx.fan_out("S.java::B"), 1);
        assert_eq!(idx.fan_out("S.java::A"), 0);
        assert!(idx.member_referencers("A", "go").contains("B"));
    }

    #[test]
    fn field_receiver_resolves_through_declared_type() {
        let corpus = java_corpus(&[(
            "F.java",
            "package p;\npublic class Engine {\n    public int start() { return 1; }\n}\npublic class Facade {\n    private Engine engine = new Engine();\n    public int start() {\n        return engine.start();\n    }\n}\n",
        )]);
        let idx = build(&corpus);
        assert_eq!(idx.fan_out("F.java::Facade"), 1);
        assert!(idx.member_referencers("Engine", "start").contains("Facade"));
        // the field itself was referenced (as a receiver => read)
        assert_eq!(idx.field_read_count("Facade", "engine"), 1);
    }

    #[test]
    fn write_read_classification() {
        let corpus = java_corpus(&[(
            "W.java",
            "package p;\npublic class Box {\n    private int scratch;\n    private int level;\n    public int open(int v) {\n        scratch = v * 2;\n        return v + level;\n    }\n}\n",
        )]);
        let idx = build(&corpus);
        assert_eq!(idx.field_writers("Box", "scratch").len(), 1);
        assert_eq!(idx.field_read_count("Box", "scratch"), 0);
        assert!(idx.field_writers("Box", "level").is_empty());
        assert_eq!(idx.field_read_count("Box", "level"), 1);
    }

    #[test]
    fn unused_parameter_is_not_marked() {
        let corpus = java_corpus(&[(
            "P.java",
            "package p;\npublic class T {\n    public int scale(int value, int factor) {\n        return value * 3;\n    }\n}\n",
        )]);
        let idx = build(&corpus);
        let uid = method_uid("P.java", "T", 0);
        assert!(idx.param_used(&uid, "value"));
        assert!(!idx.param_used(&uid, "factor"));
    }

    #[test]
    fn inheritance_links_and_bare_parent_member_calls() {
        let corpus = java_corpus(&[(
            "H.java",
            "package p;\npublic class Base {\n    public int margin() { return 3; }\n    public int shade() { return 4; }\n}\npublic class Child extends Base {\n    public int use(int v) {\n        return v + margin();\n    }\n}\n",
        )]);
        let idx = build(&corpus);
        assert_eq!(idx.direct_subclasses("Base"), 1);
        assert_eq!(idx.fan_in("H.java::Base"), 1);
        assert!(idx.member_referencers("Base", "margin").contains("Child"));
        assert!(idx.member_referencers("Base", "shade").is_empty());
    }

    #[test]
    fn locals_shadow_fields() {
        let corpus = java_corpus(&[(
            "L.java",
            "package p;\npublic class C {\n    private int total;\n    public int m(int v) {\n        int total = v;\n        return total;\n    }\n}\n",
        )]);
        let idx = build(&corpus);
        assert_eq!(idx.field_read_count("C", "total"), 0);
        assert!(idx.field_writers("C", "total").is_empty());
    }

    #[test]
    fn self_reference_is_not_fan() {
        let corpus = java_corpus(&[(
            "R.java",
            "package p;\npublic class M {\n    private long verify(long q) { return q; }\n    public long checkAll(long v) {\n        return verify(v);\n    }\n}\n",
        )]);
        let idx = build(&corpus);
        assert_eq!(idx.fan_in("R.java::M"), 0);
        assert_eq!(idx.fan_out("R.java::M"), 0);
        assert!(idx.member_referencers("M", "verify").contains("M"));
    }
}
