//! Comment-stripping tokenizer shared by both language flavors.
//!
//! The token stream is the substrate for every structural rule: duplicate
//! windows compare token text exactly (string literals stay single tokens,
//! quotes included), statement length is a token count, and complexity counts
//! branch keyword tokens. Multi-character operators are kept as single tokens
//! so `==` can never be mistaken for an assignment.

use super::LanguageFlavor;

/// One lexical token plus the 1-based line it starts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub line: usize,
}

impl Token {
    fn new(text: impl Into<String>, line: usize) -> Self {
        Token { text: text.into(), line }
    }
}

/// Operators recognized as single tokens, longest first.
const OPERATORS: &[&str] = &[
    "<<=", ">>=", "...", "**=", "//=", "::", "->", "==", "!=", "<=", ">=",
    "&&", "||", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "<<", ">>", "**",
];

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// Tokenizes `text`, stripping comments per `flavor`. String and character
/// literals are emitted verbatim (delimiters included) as one token each.
pub fn tokenize(text: &str, flavor: LanguageFlavor) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line = 1;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        match flavor {
            LanguageFlavor::JavaLike => {
                if c == '/' && i + 1 < chars.len() && chars[i + 1] == '/' {
                    while i < chars.len() && chars[i] != '\n' {
                        i += 1;
                    }
                    continue;
                }
                if c == '/' && i + 1 < chars.len() && chars[i + 1] == '*' {
                    i += 2;
                    while i + 1 < chars.len() && !(chars[i] == '*' && chars[i + 1] == '/') {
                        if chars[i] == '\n' {
                            line += 1;
                        }
                        i += 1;
                    }
                    i = (i + 2).min(chars.len());
                    continue;
                }
            }
            LanguageFlavor::PythonLike => {
                if c == '#' {
                    while i < chars.len() && chars[i] != '\n' {
                        i += 1;
                    }
                    continue;
                }
            }
        }
        if c == '"' || c == '\'' {
            let (tok, ni, nl) = read_string(&chars, i, line, flavor);
            out.push(Token::new(tok, line));
            i = ni;
            line = nl;
            continue;
        }
        if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_continue(chars[i]) {
                i += 1;
            }
            out.push(Token::new(chars[start..i].iter().collect::<String>(), line));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '.')
            {
                i += 1;
            }
            out.push(Token::new(chars[start..i].iter().collect::<String>(), line));
            continue;
        }
        let mut matched = false;
        for op in OPERATORS {
            let len = op.len();
            if i + len <= chars.len() && chars[i..i + len].iter().collect::<String>() == **op {
                out.push(Token::new(*op, line));
                i += len;
                matched = true;
                break;
            }
        }
        if !matched {
            out.push(Token::new(c.to_string(), line));
            i += 1;
        }
    }
    out
}

/// Reads a string/char literal starting at `chars[i]`. Python triple quotes
/// are honored; backslash escapes are honored in both flavors.
fn read_string(
    chars: &[char],
    i: usize,
    line: usize,
    flavor: LanguageFlavor,
) -> (String, usize, usize) {
    let quote = chars[i];
    let triple = flavor == LanguageFlavor::PythonLike
        && i + 2 < chars.len()
        && chars[i + 1] == quote
        && chars[i + 2] == quote;
    let (open_len, closer): (usize, Vec<char>) = if triple {
        (3, vec![quote; 3])
    } else {
        (1, vec![quote])
    };
    let mut j = i + open_len;
    let mut cur_line = line;
    while j < chars.len() {
        if chars[j] == '\\' && j + 1 < chars.len() {
            j += 2;
            continue;
        }
        if chars[j] == '\n' {
            cur_line += 1;
        }
        if chars[j] == quote && chars[j..].len() >= closer.len() && chars[j..j + closer.len()] == closer[..] {
            j += closer.len();
            return (chars[i..j].iter().collect(), j, cur_line);
        }
        j += 1;
    }
    (chars[i..].iter().collect(), chars.len(), cur_line)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str, flavor: LanguageFlavor) -> Vec<String> {
        tokenize(src, flavor).into_iter().map(|t| t.text).collect()
    }

    #[test]
    fn strips_java_comments_and_keeps_strings_whole() {
        let src = "int a = 1; // trailing\n/* block\nspans */ String s = \"x // y\";";
        let toks = texts(src, LanguageFlavor::JavaLike);
        assert_eq!(
            toks,
            vec!["int", "a", "=", "1", ";", "String", "s", "=", "\"x // y\"", ";"]
        );
    }

    #[test]
    fn multi_char_operators_are_single_tokens() {
        let toks = texts("a == b != c <= d && e", LanguageFlavor::JavaLike);
        assert_eq!(toks, vec!["a", "==", "b", "!=", "c", "<=", "d", "&&", "e"]);
    }

    #[test]
    fn line_numbers_survive_block_comments() {
        let toks = tokenize("a\n/*\n\n*/\nb", LanguageFlavor::JavaLike);
        assert_eq!(toks[0].line, 1);
        assert_eq!(toks[1].line, 5);
    }

    #[test]
    fn python_hash_comments_and_triple_strings() {
        let src = "x = 1  # comment\ns = '''a\nb'''\ny = 2";
        let toks = tokenize(src, LanguageFlavor::PythonLike);
        let texts: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(texts, vec!["x", "=", "1", "s", "=", "'''a\nb'''", "y", "=", "2"]);
        // the triple-quoted string starts on line 2; `y = 2` sits on line 4
        assert_eq!(toks[5].line, 2);
        assert_eq!(toks.last().unwrap().line, 4);
    }

    #[test]
    fn numbers_absorb_suffixes_and_dots() {
        let toks = texts("1.5f 0x1F 10_000 a.b", LanguageFlavor::JavaLike);
        assert_eq!(toks, vec!["1.5f", "0x1F", "10_000", "a", ".", "b"]);
    }
}
