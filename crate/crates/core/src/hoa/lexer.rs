use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) enum Tok {
    /// `name:` starting a header item or `State:`.
    Header(String),
    Ident(String),
    Int(u64),
    Str(String),
    /// `@name`
    Alias(String),
    Punct(char),
    BodyStart,
    End,
    Eof,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            bump!();
            continue;
        }
        let (l0, c0) = (line, col);
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line: l0, column: c0 });
        if c == '/' && chars.get(i + 1) == Some(&'*') {
            // comments nest in HOA
            let mut depth = 0usize;
            loop {
                if i >= chars.len() {
                    return Err(syntax(l0, c0, "unterminated comment"));
                }
                if chars[i] == '/' && chars.get(i + 1) == Some(&'*') {
                    depth += 1;
                    bump!();
                    bump!();
                } else if chars[i] == '*' && chars.get(i + 1) == Some(&'/') {
                    depth -= 1;
                    bump!();
                    bump!();
                    if depth == 0 {
                        break;
                    }
                } else {
                    bump!();
                }
            }
            continue;
        }
        if c == '"' {
            bump!();
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None => return Err(syntax(l0, c0, "unterminated string")),
                    Some('"') => {
                        bump!();
                        break;
                    }
                    Some('\\') => {
                        bump!();
                        match chars.get(i) {
                            None => return Err(syntax(l0, c0, "unterminated string")),
                            Some(&e) => {
                                s.push(e);
                                bump!();
                            }
                        }
                    }
                    Some(&e) => {
                        s.push(e);
                        bump!();
                    }
                }
            }
            push(&mut out, Tok::Str(s));
            continue;
        }
        if c.is_ascii_digit() {
            let mut n: u64 = 0;
            while let Some(d) = chars.get(i).and_then(|c| c.to_digit(10)) {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(d as u64))
                    .ok_or_else(|| syntax(l0, c0, "integer too large"))?;
                bump!();
            }
            push(&mut out, Tok::Int(n));
            continue;
        }
        let word_char = |c: char| c.is_alphanumeric() || c == '_' || c == '-';
        if c == '@' {
            bump!();
            let mut s = String::new();
            while let Some(&c) = chars.get(i).filter(|&&c| word_char(c)) {
                s.push(c);
                bump!();
            }
            if s.is_empty() {
                return Err(syntax(l0, c0, "empty alias name"));
            }
            push(&mut out, Tok::Alias(s));
            continue;
        }
        if c == '-' && chars[i..].starts_with(&['-', '-']) {
            let rest: String = chars[i..].iter().take(8).collect();
            if rest.starts_with("--BODY--") {
                for _ in 0..8 {
                    bump!();
                }
                push(&mut out, Tok::BodyStart);
                continue;
            }
            if rest.starts_with("--END--") {
                for _ in 0..7 {
                    bump!();
                }
                push(&mut out, Tok::End);
                continue;
            }
            if rest.starts_with("--ABORT--") {
                return Err(Error::Unsupported("aborted automaton".into()));
            }
        }
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.get(i).filter(|&&c| word_char(c)) {
                s.push(c);
                bump!();
            }
            if chars.get(i) == Some(&':') {
                bump!();
                push(&mut out, Tok::Header(s));
            } else {
                push(&mut out, Tok::Ident(s));
            }
            continue;
        }
        if "!&|()[]{}".contains(c) {
            bump!();
            push(&mut out, Tok::Punct(c));
            continue;
        }
        return Err(syntax(l0, c0, format!("unexpected character `{c}`")));
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}
