//! Tokenizer for the identity language. Every token records the byte
//! offset where it starts, so errors can point into the source text.

use super::ast::Func;
use super::DslError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokenKind {
    /// A name that is not a keyword: a variable or (contextually) a sort.
    Ident(String),
    /// One of the named operators (`d`, `psi`, `cl`, `int`, `cld`, `intd`).
    Func(Func),
    Forall,
    And,
    Suitable,
    Ccc,
    InP,
    NotInP,
    /// `X`
    FullSet,
    /// `0`
    EmptySet,
    /// `~`
    Tilde,
    /// `&` (also `∩`)
    Amp,
    /// `|` (also `∪`)
    Pipe,
    /// `-`
    Minus,
    /// `=`
    Eq,
    /// `<=` (also `⊆`)
    SubsetEq,
    /// `=>`
    Implies,
    LParen,
    RParen,
    Comma,
    Colon,
}

impl TokenKind {
    /// Human-readable rendering for error messages.
    pub(crate) fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("\"{s}\""),
            TokenKind::Func(f) => format!("\"{}\"", f.name()),
            TokenKind::Forall => "\"forall\"".into(),
            TokenKind::And => "\"and\"".into(),
            TokenKind::Suitable => "\"suitable\"".into(),
            TokenKind::Ccc => "\"ccc\"".into(),
            TokenKind::InP => "\"inP\"".into(),
            TokenKind::NotInP => "\"notinP\"".into(),
            TokenKind::FullSet => "\"X\"".into(),
            TokenKind::EmptySet => "\"0\"".into(),
            TokenKind::Tilde => "'~'".into(),
            TokenKind::Amp => "'&'".into(),
            TokenKind::Pipe => "'|'".into(),
            TokenKind::Minus => "'-'".into(),
            TokenKind::Eq => "'='".into(),
            TokenKind::SubsetEq => "'<='".into(),
            TokenKind::Implies => "'=>'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
            TokenKind::Comma => "','".into(),
            TokenKind::Colon => "':'".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    /// Byte offset of the first character of the token.
    pub offset: usize,
}

fn keyword(word: &str) -> Option<TokenKind> {
    Some(match word {
        "forall" => TokenKind::Forall,
        "and" => TokenKind::And,
        "suitable" => TokenKind::Suitable,
        "ccc" => TokenKind::Ccc,
        "inP" => TokenKind::InP,
        "notinP" => TokenKind::NotInP,
        "X" => TokenKind::FullSet,
        _ => return None,
    })
}

pub(crate) fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(offset, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let kind = keyword(&word)
                .or_else(|| Func::from_name(&word).map(TokenKind::Func))
                .unwrap_or(TokenKind::Ident(word));
            tokens.push(Token { kind, offset });
            continue;
        }
        if ch.is_ascii_digit() {
            let mut lexeme = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_digit() {
                    lexeme.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            if lexeme != "0" {
                return Err(DslError::BadNumber { lexeme, offset });
            }
            tokens.push(Token { kind: TokenKind::EmptySet, offset });
            continue;
        }
        chars.next();
        let kind = match ch {
            '~' => TokenKind::Tilde,
            '&' | '∩' => TokenKind::Amp,
            '|' | '∪' => TokenKind::Pipe,
            '-' => TokenKind::Minus,
            '⊆' => TokenKind::SubsetEq,
            '⋄' => TokenKind::Func(Func::Diamond),
            'Ψ' | 'ψ' => TokenKind::Func(Func::Psi),
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            ',' => TokenKind::Comma,
            ':' => TokenKind::Colon,
            '=' => {
                if matches!(chars.peek(), Some(&(_, '>'))) {
                    chars.next();
                    TokenKind::Implies
                } else {
                    TokenKind::Eq
                }
            }
            '<' => {
                if matches!(chars.peek(), Some(&(_, '='))) {
                    chars.next();
                    TokenKind::SubsetEq
                } else {
                    return Err(DslError::Lex { ch, offset });
                }
            }
            _ => return Err(DslError::Lex { ch, offset }),
        };
        tokens.push(Token { kind, offset });
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<TokenKind> {
        lex(text).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn lexes_a_formula_with_offsets() {
        let tokens = lex("forall A: d(A) <= A").unwrap();
        let expected = [
            (TokenKind::Forall, 0),
            (TokenKind::Ident("A".into()), 7),
            (TokenKind::Colon, 8),
            (TokenKind::Func(Func::Diamond), 10),
            (TokenKind::LParen, 11),
            (TokenKind::Ident("A".into()), 12),
            (TokenKind::RParen, 13),
            (TokenKind::SubsetEq, 15),
            (TokenKind::Ident("A".into()), 18),
        ];
        assert_eq!(tokens.len(), expected.len());
        for (token, (kind, offset)) in tokens.iter().zip(expected) {
            assert_eq!(token.kind, kind);
            assert_eq!(token.offset, offset, "offset of {kind:?}");
        }
    }

    #[test]
    fn unicode_aliases_lex_like_ascii() {
        assert_eq!(kinds("Ψ(A ∩ B) ⊆ ⋄(A ∪ B)"), kinds("psi(A & B) <= d(A | B)"));
        assert_eq!(kinds("ψ(A)"), kinds("psi(A)"));
    }

    #[test]
    fn distinguishes_eq_implies_and_subset() {
        assert_eq!(
            kinds("= => <="),
            vec![TokenKind::Eq, TokenKind::Implies, TokenKind::SubsetEq]
        );
    }

    #[test]
    fn operator_names_and_keywords_are_not_idents() {
        assert_eq!(
            kinds("cld intd suitable ccc inP notinP X 0"),
            vec![
                TokenKind::Func(Func::DiamondClosure),
                TokenKind::Func(Func::DiamondInterior),
                TokenKind::Suitable,
                TokenKind::Ccc,
                TokenKind::InP,
                TokenKind::NotInP,
                TokenKind::FullSet,
                TokenKind::EmptySet,
            ]
        );
    }

    #[test]
    fn rejects_stray_characters_with_offset() {
        assert_eq!(lex("A $ B").unwrap_err(), DslError::Lex { ch: '$', offset: 2 });
        assert_eq!(lex("A < B").unwrap_err(), DslError::Lex { ch: '<', offset: 2 });
    }

    #[test]
    fn rejects_numbers_other_than_zero() {
        assert_eq!(
            lex("d(A) = 12").unwrap_err(),
            DslError::BadNumber { lexeme: "12".into(), offset: 7 }
        );
    }

    #[test]
    fn unicode_offsets_are_byte_offsets() {
        // `Ψ` is two bytes long in UTF-8.
        let tokens = lex("Ψ(A)").unwrap();
        assert_eq!(tokens[1].offset, 2);
        assert_eq!(tokens[1].kind, TokenKind::LParen);
    }
}
