use super::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Identifier,
    Operator,
    LeftParen,
    RightParen,
    Comma,
}

/// A lexeme with its 0-based character offset in the source.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub position: usize,
}

impl Token {
    pub fn is_op(&self, op: char) -> bool {
        self.kind == TokenKind::Operator && self.lexeme.starts_with(op)
    }
}

pub fn tokenize(source: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = match c {
            '0'..='9' | '.' => {
                i = scan_number(&chars, i)?;
                TokenKind::Number
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                TokenKind::Identifier
            }
            '+' | '-' | '*' | '/' | '^' => {
                i += 1;
                TokenKind::Operator
            }
            '(' => {
                i += 1;
                TokenKind::LeftParen
            }
            ')' => {
                i += 1;
                TokenKind::RightParen
            }
            ',' => {
                i += 1;
                TokenKind::Comma
            }
            other => {
                return Err(ParseError::new(
                    start,
                    ParseErrorKind::UnexpectedCharacter(other),
                ))
            }
        };
        tokens.push(Token {
            kind,
            lexeme: chars[start..i].iter().collect(),
            position: start,
        });
    }
    Ok(tokens)
}

/// Scans `digits [. digits] [(e|E) [+|-] digits]`, returning the end offset.
fn scan_number(chars: &[char], start: usize) -> Result<usize, ParseError> {
    let mut i = start;
    let mut mantissa_digits = 0;
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
        mantissa_digits += 1;
    }
    if i < chars.len() && chars[i] == '.' {
        i += 1;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
            mantissa_digits += 1;
        }
    }
    if mantissa_digits == 0 {
        return Err(ParseError::new(start, ParseErrorKind::InvalidNumber));
    }
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
            j += 1;
        }
        let exp_start = j;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        if j == exp_start {
            return Err(ParseError::new(i, ParseErrorKind::InvalidNumber));
        }
        i = j;
    }
    Ok(i)
}
