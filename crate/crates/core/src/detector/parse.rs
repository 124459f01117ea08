//! Declaration-level parsers: just enough structure for the rules.
//!
//! The java-like parser is token-driven (packages, imports, classes with
//! extends/implements, methods with parameter lists, fields with optional
//! initializers, nested types flattened). The python-like parser is
//! indentation-driven for structure and reuses the token stream for bodies.
//! Neither attempts expressions, generics beyond skipping, or type checking;
//! multi-declarator fields (`int a, b;`) record only the first name.

use super::source::Token;
use super::{ClassRecord, FieldRecord, MethodRecord, ParamRecord, Visibility};

const JAVA_MODIFIERS: &[&str] = &[
    "public", "private", "protected", "static", "final", "abstract", "synchronized",
    "native", "transient", "volatile", "strictfp", "default",
];

type ParsedUnit = (String, Vec<String>, Vec<ClassRecord>);

pub(crate) fn parse_java(_path: &str, tokens: &[Token]) -> Result<ParsedUnit, String> {
    let mut i = 0;
    let mut package = String::new();
    if tokens.get(i).map(|t| t.text.as_str()) == Some("package") {
        let (name, ni) = read_dotted(tokens, i + 1);
        package = name;
        i = skip_past_semicolon(tokens, ni);
    }
    let mut imports = Vec::new();
    loop {
        i = skip_annotations(tokens, i);
        if tokens.get(i).map(|t| t.text.as_str()) != Some("import") {
            break;
        }
        let mut j = i + 1;
        let is_static = tokens.get(j).map(|t| t.text.as_str()) == Some("static");
        if is_static {
            j += 1;
        }
        let (dotted, nj) = read_dotted(tokens, j);
        if let Some(target) = import_target(&dotted, is_static) {
            imports.push(target);
        }
        i = skip_past_semicolon(tokens, nj);
    }
    let mut classes = Vec::new();
    while i < tokens.len() {
        i = skip_annotations(tokens, i);
        let decl_start = i;
        let mut is_abstract = false;
        while i < tokens.len() && JAVA_MODIFIERS.contains(&tokens[i].text.as_str()) {
            is_abstract |= tokens[i].text == "abstract";
            i += 1;
        }
        match tokens.get(i).map(|t| t.text.as_str()) {
            Some("class") | Some("interface") | Some("enum") => {
                i = parse_type_decl(tokens, decl_start, i, is_abstract, &mut classes)?;
            }
            Some(_) => i += 1,
            None => break,
        }
    }
    Ok((package, imports, classes))
}

/// Maps an import path to its package: strips the trailing member for static
/// imports, a trailing `*`, and a trailing capitalized (type) segment.
fn import_target(dotted: &str, is_static: bool) -> Option<String> {
    let mut parts: Vec<&str> = dotted.split('.').filter(|p| !p.is_empty()).collect();
    if parts.last() == Some(&"*") {
        parts.pop();
    }
    if is_static {
        parts.pop();
    }
    if parts
        .last()
        .map(|p| p.chars().next().is_some_and(|c| c.is_uppercase()))
        .unwrap_or(false)
    {
        parts.pop();
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("."))
    }
}

/// Reads `a.b.c` / `a.b.*`: identifiers joined by single dots, stopping at
/// the first token that breaks the alternation.
fn read_dotted(tokens: &[Token], mut i: usize) -> (String, usize) {
    let mut out = String::new();
    let mut expect_name = true;
    while i < tokens.len() {
        let t = tokens[i].text.as_str();
        if expect_name && (is_identifier(t) || t == "*") {
            out.push_str(t);
            expect_name = false;
        } else if !expect_name && t == "." {
            out.push('.');
            expect_name = true;
        } else {
            break;
        }
        i += 1;
    }
    (out, i)
}

fn skip_past_semicolon(tokens: &[Token], mut i: usize) -> usize {
    while i < tokens.len() && tokens[i].text != ";" {
        i += 1;
    }
    (i + 1).min(tokens.len())
}

fn skip_annotations(tokens: &[Token], mut i: usize) -> usize {
    while tokens.get(i).map(|t| t.text.as_str()) == Some("@") {
        i += 1; // @
        let (_, ni) = read_dotted(tokens, i);
        i = ni;
        if tokens.get(i).map(|t| t.text.as_str()) == Some("(") {
            i = match_delim(tokens, i, "(", ")").unwrap_or(tokens.len());
        }
    }
    i
}

fn is_identifier(t: &str) -> bool {
    t.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_' || c == '$')
}

/// Index just past the delimiter that closes `open` at `tokens[i]`.
fn match_delim(tokens: &[Token], i: usize, open: &str, close: &str) -> Result<usize, String> {
    debug_assert_eq!(tokens[i].text, open);
    let mut depth = 0usize;
    let mut j = i;
    while j < tokens.len() {
        if tokens[j].text == open {
            depth += 1;
        } else if tokens[j].text == close {
            depth -= 1;
            if depth == 0 {
                return Ok(j + 1);
            }
        }
        j += 1;
    }
    Err(format!("unbalanced {open}{close} starting at line {}", tokens[i].line))
}

/// Parses `class`/`interface`/`enum` whose keyword sits at `kw`; appends the
/// record (nested types flattened) and returns the index past the body.
fn parse_type_decl(
    tokens: &[Token],
    decl_start: usize,
    kw: usize,
    is_abstract: bool,
    out: &mut Vec<ClassRecord>,
) -> Result<usize, String> {
    let is_interface = tokens[kw].text == "interface";
    let name = tokens
        .get(kw + 1)
        .filter(|t| is_identifier(&t.text))
        .ok_or_else(|| format!("type keyword without a name at line {}", tokens[kw].line))?
        .text
        .clone();
    let mut i = kw + 2;
    let mut extends = None;
    let mut implements = Vec::new();
    while i < tokens.len() && tokens[i].text != "{" {
        match tokens[i].text.as_str() {
            "extends" => {
                i += 1;
                while i < tokens.len() && !matches!(tokens[i].text.as_str(), "{" | "implements") {
                    if is_identifier(&tokens[i].text) {
                        let (dotted, ni) = read_dotted(tokens, i);
                        let simple = dotted.rsplit('.').next().unwrap_or("").to_string();
                        if is_interface || extends.is_some() {
                            implements.push(simple);
                        } else {
                            extends = Some(simple);
                        }
                        i = ni;
                    } else if tokens[i].text == "<" {
                        i = skip_angles(tokens, i);
                    } else {
                        i += 1;
                    }
                }
            }
            "implements" => {
                i += 1;
                while i < tokens.len() && !matches!(tokens[i].text.as_str(), "{" | "extends") {
                    if is_identifier(&tokens[i].text) {
                        let (dotted, ni) = read_dotted(tokens, i);
                        implements.push(dotted.rsplit('.').next().unwrap_or("").to_string());
                        i = ni;
                    } else if tokens[i].text == "<" {
                        i = skip_angles(tokens, i);
                    } else {
                        i += 1;
                    }
                }
            }
            "<" => i = skip_angles(tokens, i),
            _ => i += 1,
        }
    }
    if i >= tokens.len() {
        return Err(format!("type `{name}` has no body"));
    }
    let body_end = match_delim(tokens, i, "{", "}")?;
    let mut class = ClassRecord {
        name: name.clone(),
        is_interface,
        is_abstract: is_abstract || is_interface,
        is_module_scope: false,
        extends,
        implements,
        line_span: (tokens[decl_start].line, tokens[body_end - 1].line),
        methods: Vec::new(),
        fields: Vec::new(),
    };
    parse_members(tokens, i + 1, body_end - 1, &mut class, out)?;
    out.push(class);
    Ok(body_end)
}

fn skip_angles(tokens: &[Token], i: usize) -> usize {
    match_delim(tokens, i, "<", ">").unwrap_or(i + 1)
}

fn visibility_of(modifiers: &[&str]) -> Visibility {
    if modifiers.contains(&"public") {
        Visibility::Public
    } else if modifiers.contains(&"protected") {
        Visibility::Protected
    } else if modifiers.contains(&"private") {
        Visibility::Private
    } else {
        Visibility::Package
    }
}

/// Parses class members between `start` and the closing brace at `end`.
fn parse_members(
    tokens: &[Token],
    start: usize,
    end: usize,
    class: &mut ClassRecord,
    nested: &mut Vec<ClassRecord>,
) -> Result<(), String> {
    let mut i = start;
    while i < end {
        i = skip_annotations(tokens, i);
        if i >= end {
            break;
        }
        if tokens[i].text == ";" {
            i += 1;
            continue;
        }
        let decl_start = i;
        let mut modifiers: Vec<&str> = Vec::new();
        while i < end && JAVA_MODIFIERS.contains(&tokens[i].text.as_str()) {
            modifiers.push(tokens[i].text.as_str());
            i += 1;
        }
        match tokens.get(i).map(|t| t.text.as_str()) {
            Some("class") | Some("interface") | Some("enum") => {
                i = parse_type_decl(tokens, decl_start, i, modifiers.contains(&"abstract"), nested)?;
                continue;
            }
            Some("{") => {
                // static or instance initializer block
                let close = match_delim(tokens, i, "{", "}")?;
                class.methods.push(MethodRecord {
                    name: "<initializer>".into(),
                    params: Vec::new(),
                    visibility: Visibility::Package,
                    is_static: modifiers.contains(&"static"),
                    is_constructor: false,
                    has_body: true,
                    line_span: (tokens[decl_start].line, tokens[close - 1].line),
                    body_tokens: (i + 1, close - 1),
                });
                i = close;
                continue;
            }
            None => break,
            _ => {}
        }
        // Scan the member header for the first structural token at depth 0.
        let mut j = i;
        let mut shape = None;
        while j < end {
            match tokens[j].text.as_str() {
                "<" => j = skip_angles(tokens, j),
                "(" | "=" | ";" | "{" => {
                    shape = Some(tokens[j].text.as_str());
                    break;
                }
                _ => j += 1,
            }
        }
        match shape {
            Some("(") => {
                let name = tokens[j - 1].text.clone();
                let params_end = match_delim(tokens, j, "(", ")")?;
                let params = parse_params(&tokens[j + 1..params_end - 1]);
                let mut k = params_end;
                // skip throws clause / array brackets up to the body or `;`
                while k < end && !matches!(tokens[k].text.as_str(), "{" | ";") {
                    k += 1;
                }
                let is_constructor = name == class.name;
                if k < end && tokens[k].text == "{" {
                    let close = match_delim(tokens, k, "{", "}")?;
                    class.methods.push(MethodRecord {
                        name,
                        params,
                        visibility: visibility_of(&modifiers),
                        is_static: modifiers.contains(&"static"),
                        is_constructor,
                        has_body: true,
                        line_span: (tokens[decl_start].line, tokens[close - 1].line),
                        body_tokens: (k + 1, close - 1),
                    });
                    i = close;
                } else {
                    class.methods.push(MethodRecord {
                        name,
                        params,
                        visibility: visibility_of(&modifiers),
                        is_static: modifiers.contains(&"static"),
                        is_constructor,
                        has_body: false,
                        line_span: (tokens[decl_start].line, tokens[k.min(end - 1)].line),
                        body_tokens: (0, 0),
                    });
                    i = (k + 1).min(end);
                }
            }
            Some("=") => {
                let name = tokens[j - 1].text.clone();
                let type_name = last_identifier(&tokens[i..j - 1]);
                let mut k = j + 1;
                let mut depth = 0i32;
                while k < end {
                    match tokens[k].text.as_str() {
                        "(" | "{" | "[" => depth += 1,
                        ")" | "}" | "]" => depth -= 1,
                        ";" if depth == 0 => break,
                        _ => {}
                    }
                    k += 1;
                }
                class.fields.push(FieldRecord {
                    name,
                    type_name,
                    visibility: visibility_of(&modifiers),
                    is_static: modifiers.contains(&"static"),
                    is_final: modifiers.contains(&"final"),
                    line: tokens[decl_start].line,
                    init_tokens: (j + 1, k),
                });
                i = (k + 1).min(end);
            }
            Some(";") => {
                let name = tokens[j - 1].text.clone();
                let type_name = last_identifier(&tokens[i..j - 1]);
                class.fields.push(FieldRecord {
                    name,
                    type_name,
                    visibility: visibility_of(&modifiers),
                    is_static: modifiers.contains(&"static"),
                    is_final: modifiers.contains(&"final"),
                    line: tokens[decl_start].line,
                    init_tokens: (0, 0),
                });
                i = j + 1;
            }
            _ => {
                return Err(format!(
                    "unterminated member in class `{}` at line {}",
                    class.name, tokens[decl_start].line
                ));
            }
        }
    }
    Ok(())
}

fn last_identifier(tokens: &[Token]) -> String {
    tokens
        .iter()
        .rev()
        .find(|t| is_identifier(&t.text))
        .map(|t| t.text.clone())
        .unwrap_or_default()
}

/// Splits a parameter token slice on top-level commas; per group the name is
/// the last identifier and the type the one before it.
fn parse_params(tokens: &[Token]) -> Vec<ParamRecord> {
    let mut groups: Vec<Vec<&Token>> = vec![Vec::new()];
    let mut depth = 0i32;
    for t in tokens {
        match t.text.as_str() {
            "<" | "(" | "[" => depth += 1,
            ">" | ")" | "]" => depth -= 1,
            "," if depth == 0 => {
                groups.push(Vec::new());
                continue;
            }
            _ => {}
        }
        groups.last_mut().unwrap().push(t);
    }
    groups
        .into_iter()
        .filter(|g| !g.is_empty())
        .filter_map(|g| {
            let idents: Vec<&str> = g
                .iter()
                .map(|t| t.text.as_str())
                .filter(|t| is_identifier(t) && *t != "final")
                .collect();
            let name = (*idents.last()?).to_string();
            let type_name = idents
                .len()
                .checked_sub(2)
                .map(|k| idents[k].to_string())
                .unwrap_or_default();
            Some(ParamRecord { name, type_name })
        })
        .collect()
}

// ---------------------------------------------------------------- python --

/// Lines of a python-like unit, pre-split with indentation depth.
struct PyLine<'a> {
    line_no: usize,
    indent: usize,
    text: &'a str,
}

pub(crate) fn parse_python(path: &str, text: &str, tokens: &[Token]) -> Result<ParsedUnit, String> {
    let module = path
        .trim_end_matches(".py")
        .replace('/', ".")
        .trim_end_matches(".__init__")
        .to_string();
    let lines: Vec<PyLine> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(idx, l)| PyLine {
            line_no: idx + 1,
            indent: l.len() - l.trim_start_matches([' ', '\t']).len()
                + 7 * l.chars().take_while(|c| *c == '\t').count(),
            text: l.trim(),
        })
        .collect();

    let mut imports = Vec::new();
    for l in &lines {
        if let Some(rest) = l.text.strip_prefix("import ") {
            for piece in rest.split(',') {
                let target = piece.trim().split(" as ").next().unwrap_or("").trim();
                if !target.is_empty() {
                    imports.push(target.to_string());
                }
            }
        } else if let Some(rest) = l.text.strip_prefix("from ") {
            if let Some(target) = rest.split(" import ").next() {
                let target = target.trim();
                if !target.is_empty() && !target.starts_with('.') {
                    imports.push(target.to_string());
                }
            }
        }
    }

    let mut classes = Vec::new();
    let mut module_scope = ClassRecord {
        name: "<module>".into(),
        is_interface: false,
        is_abstract: false,
        is_module_scope: true,
        extends: None,
        implements: Vec::new(),
        line_span: (1, text.lines().count().max(1)),
        methods: Vec::new(),
        fields: Vec::new(),
    };
    let mut i = 0;
    while i < lines.len() {
        let l = &lines[i];
        if l.indent == 0 && l.text.starts_with("class ") {
            let body_end = block_end(&lines, i);
            classes.push(parse_py_class(&lines[i..=body_end], tokens)?);
            i = body_end + 1;
        } else if l.indent == 0 && l.text.starts_with("def ") {
            let body_end = block_end(&lines, i);
            module_scope
                .methods
                .push(parse_py_def(&lines[i..=body_end], tokens, false)?);
            i = body_end + 1;
        } else {
            i += 1;
        }
    }
    if !module_scope.methods.is_empty() {
        classes.push(module_scope);
    }
    Ok((module, imports, classes))
}

/// Index of the last line belonging to the block opened at `lines[start]`.
fn block_end(lines: &[PyLine], start: usize) -> usize {
    let base = lines[start].indent;
    let mut last = start;
    for (off, l) in lines.iter().enumerate().skip(start + 1) {
        if l.indent <= base {
            break;
        }
        last = off;
    }
    last
}

fn py_visibility(name: &str) -> Visibility {
    if name.starts_with('_') {
        Visibility::Private
    } else {
        Visibility::Public
    }
}

fn parse_py_class(lines: &[PyLine], tokens: &[Token]) -> Result<ClassRecord, String> {
    let header = lines[0].text;
    let after = header.strip_prefix("class ").unwrap_or(header);
    let name: String = after
        .chars()
        .take_while(|c| c.is_alphanumeric() || *c == '_')
        .collect();
    let mut bases: Vec<String> = Vec::new();
    if let (Some(open), Some(close)) = (after.find('('), after.rfind(')')) {
        if open < close {
            for b in after[open + 1..close].split(',') {
                let b = b.trim();
                if b.is_empty() || b.contains('=') {
                    continue; // metaclass=... keyword args
                }
                bases.push(b.rsplit('.').next().unwrap_or(b).to_string());
            }
        }
    }
    let is_abstract = bases.iter().any(|b| b == "ABC" || b == "ABCMeta");
    let mut class = ClassRecord {
        name,
        is_interface: false,
        is_abstract,
        is_module_scope: false,
        extends: bases.first().filter(|b| *b != "object").cloned(),
        implements: bases.iter().skip(1).cloned().collect(),
        line_span: (lines[0].line_no, lines.last().unwrap().line_no),
        methods: Vec::new(),
        fields: Vec::new(),
    };
    let body_indent = lines.get(1).map(|l| l.indent).unwrap_or(usize::MAX);
    let mut i = 1;
    while i < lines.len() {
        let l = &lines[i];
        if l.indent == body_indent && l.text.starts_with("def ") {
            let body_end = block_end(lines, i);
            class
                .methods
                .push(parse_py_def(&lines[i..=body_end], tokens, true)?);
            i = body_end + 1;
        } else {
            if l.indent == body_indent {
                // class-level assignment => class attribute
                if let Some(field) = py_assignment_target(l) {
                    if !class.fields.iter().any(|f| f.name == field) {
                        class.fields.push(FieldRecord {
                            name: field.clone(),
                            type_name: String::new(),
                            visibility: py_visibility(&field),
                            is_static: true,
                            is_final: field.chars().all(|c| !c.is_lowercase()),
                            line: l.line_no,
                            init_tokens: (0, 0),
                        });
                    }
                }
            }
            i += 1;
        }
    }
    // `self.x = ...` anywhere in the body (def bodies included) declares an
    // instance attribute
    for l in &lines[1..] {
        if let Some(rest) = l.text.strip_prefix("self.") {
            let fname: String = rest
                .chars()
                .take_while(|c| c.is_alphanumeric() || *c == '_')
                .collect();
            let tail = rest[fname.len()..].trim_start();
            if !fname.is_empty()
                && tail.starts_with('=')
                && !tail.starts_with("==")
                && !class.fields.iter().any(|f| f.name == fname)
            {
                class.fields.push(FieldRecord {
                    name: fname.clone(),
                    type_name: String::new(),
                    visibility: py_visibility(&fname),
                    is_static: false,
                    is_final: false,
                    line: l.line_no,
                    init_tokens: (0, 0),
                });
            }
        }
    }
    Ok(class)
}

fn py_assignment_target(l: &PyLine) -> Option<String> {
    let name: String = l
        .text
        .chars()
        .take_while(|c| c.is_alphanumeric() || *c == '_')
        .collect();
    if name.is_empty() || name == "def" || name == "class" {
        return None;
    }
    let tail = l.text[name.len()..].trim_start();
    let tail = tail.strip_prefix(':').map(|t| {
        // type annotation: skip to the `=` if any
        t.find('=').map(|p| &t[p..]).unwrap_or("")
    });
    let tail = tail.unwrap_or(l.text[name.len()..].trim_start());
    if tail.starts_with('=') && !tail.starts_with("==") {
        Some(name)
    } else {
        None
    }
}

fn parse_py_def(lines: &[PyLine], tokens: &[Token], in_class: bool) -> Result<MethodRecord, String> {
    let header_line = lines[0].line_no;
    // locate the `def` token on that line, then its parens in token space
    let def_idx = tokens
        .iter()
        .position(|t| t.line == header_line && t.text == "def")
        .ok_or_else(|| format!("def not tokenized at line {header_line}"))?;
    let name = tokens
        .get(def_idx + 1)
        .map(|t| t.text.clone())
        .ok_or_else(|| format!("def without a name at line {header_line}"))?;
    let open = def_idx + 2;
    if tokens.get(open).map(|t| t.text.as_str()) != Some("(") {
        return Err(format!("def `{name}` without parameter list at line {header_line}"));
    }
    let close = match_delim(tokens, open, "(", ")")?;
    let mut params = parse_py_params(&tokens[open + 1..close - 1]);
    if in_class {
        if let Some(first) = params.first() {
            if first.name == "self" || first.name == "cls" {
                params.remove(0);
            }
        }
    }
    // body tokens: everything after the signature's `:` until the block ends
    let mut colon = close;
    while colon < tokens.len() && tokens[colon].text != ":" {
        colon += 1;
    }
    let last_line = lines.last().unwrap().line_no;
    let body_start = colon + 1;
    let mut body_end = body_start;
    while body_end < tokens.len() && tokens[body_end].line <= last_line {
        body_end += 1;
    }
    let has_body = body_end > body_start;
    Ok(MethodRecord {
        name: name.clone(),
        params,
        visibility: py_visibility(&name),
        is_static: false,
        is_constructor: name == "__init__",
        has_body,
        line_span: (header_line, last_line),
        body_tokens: (body_start, body_end),
    })
}

fn parse_py_params(tokens: &[Token]) -> Vec<ParamRecord> {
    let mut groups: Vec<Vec<&Token>> = vec![Vec::new()];
    let mut depth = 0i32;
    for t in tokens {
        match t.text.as_str() {
            "(" | "[" | "{" => depth += 1,
            ")" | "]" | "}" => depth -= 1,
            "," if depth == 0 => {
                groups.push(Vec::new());
                continue;
            }
            _ => {}
        }
        groups.last_mut().unwrap().push(t);
    }
    groups
        .into_iter()
        .filter_map(|g| {
            let first = g.iter().find(|t| is_identifier(&t.text))?;
            Some(ParamRecord { name: first.text.clone(), type_name: String::new() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{parse_unit, LanguageFlavor, Visibility};

    #[test]
    fn java_imports_map_to_packages() {
        let unit = parse_unit(
            "A.java",
            "package p;\nimport a.b.C;\nimport a.b.*;\nimport static a.b.C.max;\nimport x.y;\npublic class A { }\n",
            LanguageFlavor::JavaLike,
        )
        .unwrap();
        assert_eq!(unit.imports, vec!["a.b", "a.b", "a.b", "x.y"]);
    }

    #[test]
    fn java_fields_and_modifiers() {
        let unit = parse_unit(
            "A.java",
            "package p;\npublic class A {\n    public static final int LIMIT = 42;\n    private Engine engine = new Engine();\n    int bare;\n}\n",
            LanguageFlavor::JavaLike,
        )
        .unwrap();
        let fields = &unit.classes[0].fields;
        assert_eq!(fields.len(), 3);
        assert!(fields[0].is_static && fields[0].is_final);
        assert_eq!(fields[0].visibility, Visibility::Public);
        assert_eq!(fields[1].name, "engine");
        assert_eq!(fields[1].type_name, "Engine");
        assert_eq!(fields[2].visibility, Visibility::Package);
    }

    #[test]
    fn java_constructor_and_abstract_methods() {
        let unit = parse_unit(
            "A.java",
            "package p;\npublic abstract class A {\n    public A(int seed) { int x = seed; }\n    public abstract int run(int v);\n}\n",
            LanguageFlavor::JavaLike,
        )
        .unwrap();
        let class = &unit.classes[0];
        assert!(class.is_abstract);
        assert!(class.methods[0].is_constructor);
        assert!(class.methods[0].has_body);
        assert!(!class.methods[1].has_body);
        assert_eq!(class.methods[1].params.len(), 1);
    }

    #[test]
    fn java_inheritance_clauses() {
        let unit = parse_unit(
            "A.java",
            "package p;\nclass B extends A implements C, D { }\ninterface E extends F, G { }\n",
            LanguageFlavor::JavaLike,
        )
        .unwrap();
        assert_eq!(unit.classes[0].extends.as_deref(), Some("A"));
        assert_eq!(unit.classes[0].implements, vec!["C", "D"]);
        assert!(unit.classes[1].is_interface);
        assert_eq!(unit.classes[1].implements, vec!["F", "G"]);
    }

    #[test]
    fn nested_types_are_flattened() {
        let unit = parse_unit(
            "A.java",
            "package p;\npublic class Outer {\n    public void m() { int x = 0; }\n    static class Inner {\n        public void n() { int y = 1; }\n    }\n}\n",
            LanguageFlavor::JavaLike,
        )
        .unwrap();
        let names: Vec<&str> = unit.classes.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["Inner", "Outer"]);
    }

    #[test]
    fn python_structure_extraction() {
        let src = "import os\nfrom a.b import thing\n\nclass Widget(Base):\n    LIMIT = 10\n\n    def __init__(self):\n        self.count = 0\n\n    def poke(self, v, k=2):\n        if v > 1:\n            return v\n        return k\n\ndef helper(x):\n    return x + 1\n";
        let unit = parse_unit("pkg/widget.py", src, LanguageFlavor::PythonLike).unwrap();
        assert_eq!(unit.package, "pkg.widget");
        assert_eq!(unit.imports, vec!["os", "a.b"]);
        assert_eq!(unit.classes.len(), 2);
        let widget = &unit.classes[0];
        assert_eq!(widget.name, "Widget");
        assert_eq!(widget.extends.as_deref(), Some("Base"));
        assert_eq!(widget.methods.len(), 2);
        assert!(widget.methods[0].is_constructor);
        assert_eq!(widget.methods[1].params.len(), 2); // self dropped
        let field_names: Vec<&str> = widget.fields.iter().map(|f| f.name.as_str()).collect();
        assert_eq!(field_names, vec!["LIMIT", "count"]);
        assert!(widget.fields[0].is_static && widget.fields[0].is_final);
        let module = &unit.classes[1];
        assert!(module.is_module_scope);
        assert_eq!(module.methods[0].name, "helper");
        assert_eq!(module.methods[0].params.len(), 1);
    }

    #[test]
    fn python_method_spans_and_bodies() {
        let src = "class A:\n    def m(self, v):\n        if v > 2:\n            v = v - 1\n        return v\n";
        let unit = parse_unit("a.py", src, LanguageFlavor::PythonLike).unwrap();
        let m = &unit.classes[0].methods[0];
        assert_eq!(m.line_span, (2, 5));
        assert!(m.has_body);
    }
}
