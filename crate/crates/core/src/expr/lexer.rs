use super::ParseError;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Token {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    End,
}

impl Token {
    pub(crate) fn describe(&self) -> String {
        match self {
            Token::Num(v) => format!("number {v}"),
            Token::Ident(s) => format!("identifier '{s}'"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::Comma => "','".into(),
            Token::Lt => "'<'".into(),
            Token::Le => "'<='".into(),
            Token::Gt => "'>'".into(),
            Token::Ge => "'>='".into(),
            Token::Eq => "'='".into(),
            Token::End => "end of input".into(),
        }
    }
}

/// A token and the character offset at which it starts.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Spanned {
    pub tok: Token,
    pub pos: usize,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Token::Plus),
            '-' | '−' => Some(Token::Minus),
            '*' | '×' => Some(Token::Star),
            '/' => Some(Token::Slash),
            '^' => Some(Token::Caret),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            ',' => Some(Token::Comma),
            '=' => Some(Token::Eq),
            '≤' => Some(Token::Le),
            '≥' => Some(Token::Ge),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, pos });
            i += 1;
            // accept "==" as a synonym for "="
            if c == '=' && chars.get(i) == Some(&'=') {
                i += 1;
            }
            continue;
        }
        if c == '<' || c == '>' {
            let with_eq = chars.get(i + 1) == Some(&'=');
            let tok = match (c, with_eq) {
                ('<', false) => Token::Lt,
                ('<', true) => Token::Le,
                ('>', false) => Token::Gt,
                _ => Token::Ge,
            };
            out.push(Spanned { tok, pos });
            i += if with_eq { 2 } else { 1 };
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let text: String = chars[start..i].iter().collect();
            let value: f64 = text.parse().map_err(|_| ParseError::Lexical {
                pos: start,
                found: text.clone(),
            })?;
            if !value.is_finite() {
                return Err(ParseError::Lexical { pos: start, found: text });
            }
            out.push(Spanned { tok: Token::Num(value), pos: start });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Spanned { tok: Token::Ident(text), pos: start });
            continue;
        }
        return Err(ParseError::Lexical { pos, found: c.to_string() });
    }
    out.push(Spanned { tok: Token::End, pos: chars.len() });
    Ok(out)
}
