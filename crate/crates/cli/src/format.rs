//! Matrix and word files.
//!
//! Both are JSON documents with keys in sorted order, one matrix row or word
//! letter per line, and arbitrary-length integers written as bare JSON
//! integers. No floating point appears anywhere.
//!
//! ```text
//! {"d":3,"entries":[
//! [[[0,1],[0,1]],[[0,1],[0,1]],[[1,1],[0,1]]],
//! [[[0,1],[0,1]],[[-1,1],[0,1]],[[0,1],[0,1]]],
//! [[[1,1],[0,1]],[[0,1],[0,1]],[[0,1],[0,1]]]
//! ]}
//! ```
//!
//! Each entry is `[[a_num, a_den], [b_num, b_den]]`, the element
//! `a + b·ω_d`, with positive denominators and reduced fractions.
//!
//! ```text
//! {"d":3,"word":[
//! {"gen":"T1","pow":1},
//! {"gen":"R","pow":-1}
//! ]}
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use picard_core::{GeneratorId, Matrix3, QuadRat, RingTag, Word};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("at {path}: {message}")]
    Structure { path: String, message: String },
}

fn structure(path: &str, message: impl Into<String>) -> FormatError {
    FormatError::Structure {
        path: path.to_string(),
        message: message.into(),
    }
}

fn parse_json(text: &str) -> Result<Value, FormatError> {
    serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(i) => full[..i].to_string(),
            None => full,
        };
        FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message,
        }
    })
}

fn as_object<'a>(
    v: &'a Value,
    path: &str,
    keys: &[&str],
) -> Result<&'a serde_json::Map<String, Value>, FormatError> {
    let obj = v
        .as_object()
        .ok_or_else(|| structure(path, "expected an object"))?;
    for k in obj.keys() {
        if !keys.contains(&k.as_str()) {
            return Err(structure(path, format!("unexpected key {k:?}")));
        }
    }
    for k in keys {
        if !obj.contains_key(*k) {
            return Err(structure(path, format!("missing key {k:?}")));
        }
    }
    Ok(obj)
}

fn as_array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> Result<&'a [Value], FormatError> {
    let arr = v
        .as_array()
        .ok_or_else(|| structure(path, "expected an array"))?;
    if let Some(n) = len {
        if arr.len() != n {
            return Err(structure(
                path,
                format!("expected {n} elements, found {}", arr.len()),
            ));
        }
    }
    Ok(arr)
}

fn as_integer(v: &Value, path: &str) -> Result<BigInt, FormatError> {
    match v {
        Value::Number(n) => {
            let s = n.as_str();
            s.parse::<BigInt>()
                .map_err(|_| structure(path, format!("expected an integer, found {s}")))
        }
        _ => Err(structure(path, "expected an integer")),
    }
}

fn as_fraction(v: &Value, path: &str) -> Result<BigRational, FormatError> {
    let pair = as_array(v, path, Some(2))?;
    let num = as_integer(&pair[0], &format!("{path}[0]"))?;
    let den = as_integer(&pair[1], &format!("{path}[1]"))?;
    if !den.is_positive() {
        return Err(structure(path, "denominator must be positive"));
    }
    if !num.gcd(&den).is_one() {
        return Err(structure(path, "fraction is not in lowest terms"));
    }
    Ok(BigRational::new(num, den))
}

fn parse_d(obj: &serde_json::Map<String, Value>) -> Result<RingTag, FormatError> {
    let d = as_integer(&obj["d"], "d")?;
    let d: i64 = d
        .try_into()
        .map_err(|_| structure("d", "unsupported ring"))?;
    RingTag::new(d).map_err(|e| structure("d", e.to_string()))
}

pub fn parse_matrix(text: &str) -> Result<Matrix3, FormatError> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "$", &["d", "entries"])?;
    let tag = parse_d(obj)?;
    let rows = as_array(&obj["entries"], "entries", Some(3))?;
    let mut entries: Vec<QuadRat> = Vec::with_capacity(9);
    for (r, row) in rows.iter().enumerate() {
        let path = format!("entries[{r}]");
        for (c, entry) in as_array(row, &path, Some(3))?.iter().enumerate() {
            let path = format!("entries[{r}][{c}]");
            let coords = as_array(entry, &path, Some(2))?;
            let a = as_fraction(&coords[0], &format!("{path}[0]"))?;
            let b = as_fraction(&coords[1], &format!("{path}[1]"))?;
            entries.push(QuadRat::from_omega_basis(a, b, tag));
        }
    }
    Ok(Matrix3::from_fn(tag, |r, c| entries[3 * r + c].clone()))
}

pub fn parse_word(text: &str) -> Result<Word, FormatError> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "$", &["d", "word"])?;
    let tag = parse_d(obj)?;
    let letters = as_array(&obj["word"], "word", None)?;
    let mut parsed = Vec::with_capacity(letters.len());
    for (i, letter) in letters.iter().enumerate() {
        let path = format!("word[{i}]");
        let l = as_object(letter, &path, &["gen", "pow"])?;
        let gen = l["gen"]
            .as_str()
            .ok_or_else(|| structure(&format!("{path}.gen"), "expected a string"))?
            .parse::<GeneratorId>()
            .map_err(|e| structure(&format!("{path}.gen"), e))?;
        let pow = as_integer(&l["pow"], &format!("{path}.pow"))?;
        if pow.is_zero() {
            return Err(structure(
                &format!("{path}.pow"),
                "exponent must be nonzero",
            ));
        }
        parsed.push((gen, pow));
    }
    Ok(Word::from_letters(tag, parsed))
}

fn write_fraction(out: &mut String, x: &BigRational) {
    write!(out, "[{},{}]", x.numer(), x.denom()).expect("write to string");
}

/// Canonical serialization; `parse_matrix(&serialize_matrix(m)) == m`.
pub fn serialize_matrix(m: &Matrix3) -> String {
    let mut out = format!("{{\"d\":{},\"entries\":[\n", m.tag().d());
    for r in 0..3 {
        out.push('[');
        for c in 0..3 {
            let (a, b) = m.get(r, c).omega_coords();
            out.push('[');
            write_fraction(&mut out, &a);
            out.push(',');
            write_fraction(&mut out, &b);
            out.push(']');
            if c < 2 {
                out.push(',');
            }
        }
        out.push(']');
        if r < 2 {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]}\n");
    out
}

pub fn serialize_word(w: &Word) -> String {
    if w.is_empty() {
        return format!("{{\"d\":{},\"word\":[]}}\n", w.tag().d());
    }
    let mut out = format!("{{\"d\":{},\"word\":[\n", w.tag().d());
    let n = w.len();
    for (i, (g, e)) in w.letters().iter().enumerate() {
        write!(out, "{{\"gen\":\"{g}\",\"pow\":{e}}}").expect("write to string");
        if i + 1 < n {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use picard_core::involution;

    #[test]
    fn involution_layout() {
        let text = serialize_matrix(&involution(RingTag::D3));
        assert_eq!(
            text,
            "{\"d\":3,\"entries\":[\n\
             [[[0,1],[0,1]],[[0,1],[0,1]],[[1,1],[0,1]]],\n\
             [[[0,1],[0,1]],[[-1,1],[0,1]],[[0,1],[0,1]]],\n\
             [[[1,1],[0,1]],[[0,1],[0,1]],[[0,1],[0,1]]]\n\
             ]}\n"
        );
        assert_eq!(parse_matrix(&text).unwrap(), involution(RingTag::D3));
    }

    #[test]
    fn word_layout() {
        let w = Word::from_letters(RingTag::D7, [(GeneratorId::T1, 1), (GeneratorId::R, -1)]);
        let text = serialize_word(&w);
        assert_eq!(
            text,
            "{\"d\":7,\"word\":[\n{\"gen\":\"T1\",\"pow\":1},\n{\"gen\":\"R\",\"pow\":-1}\n]}\n"
        );
        assert_eq!(parse_word(&text).unwrap(), w);
        let e = Word::empty(RingTag::D11);
        assert_eq!(parse_word(&serialize_word(&e)).unwrap(), e);
    }

    #[test]
    fn big_integers_survive() {
        let big: BigInt = "123456789012345678901234567890123456789".parse().unwrap();
        let w = Word::from_letters(RingTag::D3, [(GeneratorId::T2, big.clone())]);
        let back = parse_word(&serialize_word(&w)).unwrap();
        assert_eq!(back.letters()[0].1, big);
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_matrix("{\"d\":3,\n\"entries\":[oops]}").unwrap_err();
        match err {
            FormatError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn structural_errors() {
        let bad = [
            ("{\"d\":5,\"entries\":[]}", "d"),
            ("{\"d\":3,\"entries\":[[],[],[]]}", "entries[0]"),
            ("{\"d\":3}", "$"),
            (
                "{\"d\":3,\"entries\":[[[[1,0],[0,1]],[[0,1],[0,1]],[[0,1],[0,1]]],[],[]]}",
                "entries[0][0][0]",
            ),
            (
                "{\"d\":3,\"entries\":[[[[2,4],[0,1]],[[0,1],[0,1]],[[0,1],[0,1]]],[],[]]}",
                "entries[0][0][0]",
            ),
            (
                "{\"d\":3,\"entries\":[[[[1.5,1],[0,1]],[[0,1],[0,1]],[[0,1],[0,1]]],[],[]]}",
                "entries[0][0][0][0]",
            ),
        ];
        for (text, expected) in bad {
            match parse_matrix(text).unwrap_err() {
                FormatError::Structure { path, .. } => assert_eq!(path, expected, "{text}"),
                other => panic!("unexpected {other} for {text}"),
            }
        }
        assert!(parse_word("{\"d\":3,\"word\":[{\"gen\":\"X\",\"pow\":1}]}").is_err());
        assert!(parse_word("{\"d\":3,\"word\":[{\"gen\":\"R\",\"pow\":0}]}").is_err());
    }
}
