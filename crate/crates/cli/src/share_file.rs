//! Text share files.
//!
//! ```text
//! mss-share v1 scheme=coeff p=999961 threshold=4 k=4
//! share index=3 x=3 y=156
//! ```
//!
//! The header carries the public parameters; an optional trailing
//! `bytes=<len>` records the original length of a chunked byte secret. Every
//! following line is one share. The parser accepts only the canonical form
//! (single spaces, no leading zeros, newline after every line), so parsing
//! and re-serializing is the identity.

use std::fmt::Write as _;

use mss_core::{PrimeModulus, Scheme, Share};

pub const MAGIC: &str = "mss-share";
pub const VERSION: &str = "v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub scheme: Scheme,
    pub p: PrimeModulus,
    pub threshold: usize,
    pub k_secrets: usize,
    pub byte_len: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShareLine {
    pub index: u64,
    pub x: u64,
    pub y: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShareFile {
    pub header: Header,
    pub shares: Vec<ShareLine>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

fn decimal(line: usize, s: &str) -> Result<u64, ParseError> {
    let canonical = !s.is_empty()
        && s.bytes().all(|b| b.is_ascii_digit())
        && (s == "0" || !s.starts_with('0'));
    if !canonical {
        return Err(err(line, format!("`{s}` is not a canonical decimal")));
    }
    s.parse().map_err(|_| err(line, format!("`{s}` is out of range")))
}

fn field<'a>(line: usize, token: Option<&'a str>, key: &str) -> Result<&'a str, ParseError> {
    let token = token.ok_or_else(|| err(line, format!("missing `{key}=`")))?;
    token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| err(line, format!("expected `{key}=...`, found `{token}`")))
}

impl Header {
    pub fn render(&self) -> String {
        let mut s = format!(
            "{MAGIC} {VERSION} scheme={} p={} threshold={} k={}",
            self.scheme, self.p, self.threshold, self.k_secrets
        );
        if let Some(len) = self.byte_len {
            write!(s, " bytes={len}").unwrap();
        }
        s
    }

    fn parse(line_no: usize, line: &str) -> Result<Header, ParseError> {
        let mut tokens = line.split(' ');
        if tokens.next() != Some(MAGIC) {
            return Err(err(line_no, format!("expected `{MAGIC}` header")));
        }
        match tokens.next() {
            Some(VERSION) => {}
            Some(v) => return Err(err(line_no, format!("unsupported version `{v}`"))),
            None => return Err(err(line_no, "missing version")),
        }
        let scheme: Scheme = field(line_no, tokens.next(), "scheme")?
            .parse()
            .map_err(|e: mss_core::Error| err(line_no, e.to_string()))?;
        let p = decimal(line_no, field(line_no, tokens.next(), "p")?)?;
        let p = PrimeModulus::new(p).map_err(|e| err(line_no, e.to_string()))?;
        let threshold = decimal(line_no, field(line_no, tokens.next(), "threshold")?)? as usize;
        let k_secrets = decimal(line_no, field(line_no, tokens.next(), "k")?)? as usize;
        let byte_len = match tokens.next() {
            Some(t) => Some(decimal(line_no, field(line_no, Some(t), "bytes")?)? as usize),
            None => None,
        };
        if let Some(extra) = tokens.next() {
            return Err(err(line_no, format!("unexpected `{extra}`")));
        }
        Ok(Header {
            scheme,
            p,
            threshold,
            k_secrets,
            byte_len,
        })
    }

    pub fn share(&self, line: &ShareLine) -> Share {
        Share {
            scheme: self.scheme,
            modulus: self.p,
            threshold: self.threshold,
            x: self.p.element(line.x),
            y: self.p.element(line.y),
        }
    }
}

impl ShareLine {
    pub fn render(&self) -> String {
        format!("share index={} x={} y={}", self.index, self.x, self.y)
    }

    fn parse(line_no: usize, line: &str, p: PrimeModulus) -> Result<ShareLine, ParseError> {
        let mut tokens = line.split(' ');
        if tokens.next() != Some("share") {
            return Err(err(line_no, "expected a `share` line"));
        }
        let index = decimal(line_no, field(line_no, tokens.next(), "index")?)?;
        let x = decimal(line_no, field(line_no, tokens.next(), "x")?)?;
        let y = decimal(line_no, field(line_no, tokens.next(), "y")?)?;
        if let Some(extra) = tokens.next() {
            return Err(err(line_no, format!("unexpected `{extra}`")));
        }
        if x >= p.get() || y >= p.get() {
            return Err(err(line_no, format!("coordinates must be below p={p}")));
        }
        Ok(ShareLine { index, x, y })
    }
}

impl ShareFile {
    pub fn render(&self) -> String {
        let mut out = self.header.render();
        out.push('\n');
        for s in &self.shares {
            out.push_str(&s.render());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<ShareFile, ParseError> {
        let Some(body) = text.strip_suffix('\n') else {
            return Err(err(text.lines().count().max(1), "file must end with a newline"));
        };
        let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let (n, first) = lines.next().ok_or_else(|| err(1, "empty file"))?;
        let header = Header::parse(n, first)?;
        let shares = lines
            .map(|(n, l)| ShareLine::parse(n, l, header.p))
            .collect::<Result<Vec<_>, _>>()?;
        if shares.is_empty() {
            return Err(err(2, "no share lines"));
        }
        Ok(ShareFile { header, shares })
    }

    pub fn core_shares(&self) -> Vec<Share> {
        self.shares.iter().map(|l| self.header.share(l)).collect()
    }
}
