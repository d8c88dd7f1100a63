use crate::error::{Error, Result};
use crate::ring::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Ident(String),
    /// Integer or `p/q` literal.
    Number(Rational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

/// A token with its 1-based source position.
#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, line: l0, column: c0 });
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let text: String = chars[start..i].iter().collect();
            let value = parse_rational(&text).ok_or_else(|| syntax(l0, c0, format!("invalid number `{text}`")))?;
            out.push(Token {
                tok: Tok::Number(value),
                line: l0,
                column: c0,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
        } else {
            return Err(syntax(l0, c0, format!("unexpected character `{c}`")));
        }
        col += i - start;
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat2;

    #[test]
    fn numbers_and_positions() {
        let t = tokenize("3/2*r\n  + e").unwrap();
        assert_eq!(t[0].tok, Tok::Number(rat2(3, 2)));
        assert_eq!(t[1].tok, Tok::Star);
        assert_eq!((t[3].line, t[3].column), (2, 3));
        assert_eq!(t.last().unwrap().tok, Tok::Eof);
    }

    #[test]
    fn bad_character() {
        assert_eq!(tokenize("e $ f"), Err(syntax(1, 3, "unexpected character `$`")));
        assert!(matches!(tokenize("1/0"), Err(Error::Syntax { .. })));
    }
}
