//! Word files: a header `# m=<int> h=<int>` and one word per line, written
//! as `2^m` symbols with no separators.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::gbf::{Alphabet, Word};

/// Contents of a word file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordFile {
    pub alphabet: Alphabet,
    pub m: u32,
    pub words: Vec<Word>,
}

pub fn header(alphabet: Alphabet, m: u32) -> String {
    format!("# m={m} h={}", alphabet.h())
}

/// Writes the header and the words; returns the number of words written.
pub fn write_words<W: Write>(
    out: &mut W,
    alphabet: Alphabet,
    m: u32,
    words: impl IntoIterator<Item = Word>,
) -> std::io::Result<u64> {
    writeln!(out, "{}", header(alphabet, m))?;
    let mut count = 0;
    let mut line = String::with_capacity((1 << m) + 1);
    for w in words {
        line.clear();
        line.extend(w.values().iter().map(|&v| char::from(b'0' + v)));
        line.push('\n');
        out.write_all(line.as_bytes())?;
        count += 1;
    }
    Ok(count)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line: &str, lineno: usize) -> Result<(u32, u32)> {
    let body = line
        .strip_prefix('#')
        .ok_or_else(|| parse_err(lineno, "expected header `# m=<int> h=<int>`"))?;
    let (mut m, mut h) = (None, None);
    for field in body.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_err(lineno, format!("malformed header field {field:?}")))?;
        let value: u32 = value
            .parse()
            .map_err(|_| parse_err(lineno, format!("{key} is not an integer: {value:?}")))?;
        match key {
            "m" => m = Some(value),
            "h" => h = Some(value),
            _ => return Err(parse_err(lineno, format!("unknown header key {key:?}"))),
        }
    }
    match (m, h) {
        (Some(m), Some(h)) => Ok((m, h)),
        _ => Err(parse_err(lineno, "header needs both m and h")),
    }
}

/// Reads a word file. Blank lines and further `#` lines are skipped.
pub fn read_words<R: BufRead>(input: R) -> Result<WordFile> {
    let mut lines = input.lines().enumerate();
    let (alphabet, m) = loop {
        let Some((i, line)) = lines.next() else {
            return Err(parse_err(1, "empty file, expected header"));
        };
        let line = line.map_err(|e| parse_err(i + 1, e.to_string()))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (m, h) = parse_header(line, i + 1)?;
        if !(1..=16).contains(&m) {
            return Err(parse_err(i + 1, format!("m={m} outside 1..=16")));
        }
        let alphabet = Alphabet::from_h(h).map_err(|e| parse_err(i + 1, e.to_string()))?;
        break (alphabet, m);
    };
    let n = 1usize << m;
    let q = alphabet.modulus();
    let mut words = Vec::new();
    for (i, line) in lines {
        let lineno = i + 1;
        let line = line.map_err(|e| parse_err(lineno, e.to_string()))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.len() != n {
            return Err(parse_err(
                lineno,
                format!("expected {n} symbols, found {}", line.len()),
            ));
        }
        let mut values = Vec::with_capacity(n);
        for (pos, ch) in line.bytes().enumerate() {
            let v = ch.wrapping_sub(b'0');
            if v >= q {
                return Err(parse_err(
                    lineno,
                    format!("symbol {:?} at position {pos} is not in Z_{q}", ch as char),
                ));
            }
            values.push(v);
        }
        words.push(Word::new(alphabet, values)?);
    }
    Ok(WordFile { alphabet, m, words })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let words = vec![
            Word::z4(vec![0, 1, 2, 3]).unwrap(),
            Word::z4(vec![3, 3, 0, 0]).unwrap(),
        ];
        let mut buf = Vec::new();
        write_words(&mut buf, Alphabet::Quaternary, 2, words.clone()).unwrap();
        assert_eq!(
            String::from_utf8(buf.clone()).unwrap(),
            "# m=2 h=2\n0123\n3300\n"
        );
        let file = read_words(&buf[..]).unwrap();
        assert_eq!(file.words, words);
        assert_eq!(file.m, 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "# m=2 h=2\n0123\n012\n";
        assert_eq!(
            read_words(bad.as_bytes()).unwrap_err(),
            Error::Parse {
                line: 3,
                message: "expected 4 symbols, found 3".into()
            }
        );
        let bad = "# m=1 h=1\n02\n";
        assert!(matches!(
            read_words(bad.as_bytes()),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_words("0123\n".as_bytes()),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            read_words("# m=2 h=3\n".as_bytes()),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
