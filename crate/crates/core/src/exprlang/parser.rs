use super::lexer::{tokenize, Token, TokenKind};
use super::{BinaryOp, ExprKind, Expression, ParseError, ParseErrorKind, UnaryOp};

/// Parses expression text into a tree.
pub fn parse(source: &str) -> Result<Expression, ParseError> {
    let tokens = tokenize(source)?;
    if tokens.is_empty() {
        return Err(ParseError::new(0, ParseErrorKind::Empty));
    }
    let end = source.chars().count();
    let mut parser = Parser {
        tokens,
        cursor: 0,
        end,
    };
    let expr = parser.expr()?;
    if let Some(tok) = parser.peek() {
        return Err(parser.unexpected(tok.clone(), "operator or end of input"));
    }
    Ok(expr)
}

struct Parser {
    tokens: Vec<Token>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor)
    }

    fn next(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.cursor).cloned();
        if tok.is_some() {
            self.cursor += 1;
        }
        tok
    }

    fn unexpected(&self, tok: Token, expected: &str) -> ParseError {
        ParseError::new(
            tok.position,
            ParseErrorKind::UnexpectedToken {
                expected: expected.to_string(),
                found: tok.lexeme,
            },
        )
    }

    // Positioned at the last character so that the offset stays inside the source.
    fn unexpected_end(&self, expected: &str) -> ParseError {
        ParseError::new(
            self.end.saturating_sub(1),
            ParseErrorKind::UnexpectedEnd {
                expected: expected.to_string(),
            },
        )
    }

    fn expect(&mut self, kind: TokenKind, expected: &str) -> Result<Token, ParseError> {
        match self.next() {
            Some(tok) if tok.kind == kind => Ok(tok),
            Some(tok) => Err(self.unexpected(tok, expected)),
            None => Err(self.unexpected_end(expected)),
        }
    }

    fn expr(&mut self) -> Result<Expression, ParseError> {
        let mut left = self.term()?;
        while let Some(tok) = self.peek() {
            let op = if tok.is_op('+') {
                BinaryOp::Add
            } else if tok.is_op('-') {
                BinaryOp::Sub
            } else {
                break;
            };
            let pos = tok.position;
            self.cursor += 1;
            let right = self.term()?;
            left = Expression::at(ExprKind::Binary(op, Box::new(left), Box::new(right)), pos);
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expression, ParseError> {
        let mut left = self.unary()?;
        while let Some(tok) = self.peek() {
            let op = if tok.is_op('*') {
                BinaryOp::Mul
            } else if tok.is_op('/') {
                BinaryOp::Div
            } else {
                break;
            };
            let pos = tok.position;
            self.cursor += 1;
            let right = self.unary()?;
            left = Expression::at(ExprKind::Binary(op, Box::new(left), Box::new(right)), pos);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expression, ParseError> {
        if let Some(tok) = self.peek() {
            if tok.is_op('-') {
                let pos = tok.position;
                self.cursor += 1;
                let child = self.unary()?;
                return Ok(Expression::at(
                    ExprKind::Unary(UnaryOp::Neg, Box::new(child)),
                    pos,
                ));
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expression, ParseError> {
        let base = self.primary()?;
        if let Some(tok) = self.peek() {
            if tok.is_op('^') {
                let pos = tok.position;
                self.cursor += 1;
                let exponent = self.unary()?;
                return Ok(Expression::at(
                    ExprKind::Binary(BinaryOp::Pow, Box::new(base), Box::new(exponent)),
                    pos,
                ));
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expression, ParseError> {
        const OPERAND: &str = "number, variable, function or '('";
        let tok = match self.next() {
            Some(tok) => tok,
            None => return Err(self.unexpected_end(OPERAND)),
        };
        let pos = tok.position;
        match tok.kind {
            TokenKind::Number => {
                let value: f64 = tok
                    .lexeme
                    .parse()
                    .map_err(|_| ParseError::new(pos, ParseErrorKind::InvalidNumber))?;
                if !value.is_finite() {
                    return Err(ParseError::new(pos, ParseErrorKind::InvalidNumber));
                }
                Ok(Expression::at(ExprKind::Number(value), pos))
            }
            TokenKind::LeftParen => {
                let inner = self.expr()?;
                self.expect(TokenKind::RightParen, "')'")?;
                Ok(inner)
            }
            TokenKind::Identifier => match tok.lexeme.as_str() {
                "x" => Ok(Expression::at(ExprKind::VarX, pos)),
                "n" => Ok(Expression::at(ExprKind::VarN, pos)),
                "pi" => Ok(Expression::at(ExprKind::Number(std::f64::consts::PI), pos)),
                "min" | "max" => {
                    let op = if tok.lexeme == "min" {
                        BinaryOp::Min
                    } else {
                        BinaryOp::Max
                    };
                    self.expect(TokenKind::LeftParen, "'('")?;
                    let left = self.expr()?;
                    self.expect(TokenKind::Comma, "','")?;
                    let right = self.expr()?;
                    self.expect(TokenKind::RightParen, "')'")?;
                    Ok(Expression::at(
                        ExprKind::Binary(op, Box::new(left), Box::new(right)),
                        pos,
                    ))
                }
                name => match UnaryOp::from_name(name) {
                    Some(op) => {
                        self.expect(TokenKind::LeftParen, "'('")?;
                        let arg = self.expr()?;
                        self.expect(TokenKind::RightParen, "')'")?;
                        Ok(Expression::at(ExprKind::Unary(op, Box::new(arg)), pos))
                    }
                    None => Err(ParseError::new(
                        pos,
                        ParseErrorKind::UnknownIdentifier(name.to_string()),
                    )),
                },
            },
            _ => Err(self.unexpected(tok, OPERAND)),
        }
    }
}
