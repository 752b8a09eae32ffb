//! Finite presentations with two-sided generator markers, and the text
//! format of the bundled data files.
//!
//! # File format
//!
//! ```text
//! # comment (anywhere)
//! gens a:a b1:b b2:b          one required line; each generator is name:side
//! alt 5 a b1 a^-1 b2          optional: an alternative reading of relator 5
//! a a a a                     every other non-empty line is one relator,
//! b1 b2^-1 a                  written as whitespace-separated letters
//! ```
//!
//! A letter is a generator name, optionally followed by `^<integer>`
//! (e.g. `a^-1`). `alt` records a second reading of a relator whose
//! printed source is ambiguous; indices in `alt` lines are 1-based.

use crate::perm::RelatorWord;
use crate::{Error, Result};

/// Which side of a two-sided presentation a generator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn letter(self) -> char {
        match self {
            Side::A => 'a',
            Side::B => 'b',
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// An alternative reading of one relator.
#[derive(Clone, Debug)]
pub struct AltReading {
    /// 0-based index into the relator list.
    pub relator_index: usize,
    pub word: RelatorWord,
}

/// A finite presentation whose generators carry side markers.
#[derive(Clone, Debug)]
pub struct FinPresentation {
    name: String,
    gen_names: Vec<String>,
    sides: Vec<Side>,
    relators: Vec<RelatorWord>,
    alt_readings: Vec<AltReading>,
}

impl FinPresentation {
    /// Parse the bundled text format. `name` is used for error messages
    /// and as the presentation's display name.
    pub fn parse(name: &str, text: &str) -> Result<FinPresentation> {
        let mut gen_names: Vec<String> = Vec::new();
        let mut sides: Vec<Side> = Vec::new();
        let mut relators: Vec<RelatorWord> = Vec::new();
        let mut alt_raw: Vec<(usize, Vec<String>, usize)> = Vec::new();
        let err = |line: usize, msg: String| Error::Parse {
            file: name.to_string(),
            line,
            msg,
        };

        for (lineno0, raw) in text.lines().enumerate() {
            let lineno = lineno0 + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let first = tokens.next().expect("non-empty line");
            if first == "gens" {
                if !gen_names.is_empty() {
                    return Err(err(lineno, "duplicate gens line".into()));
                }
                for tok in tokens {
                    let (gname, side) = match tok.rsplit_once(':') {
                        Some((g, "a")) => (g, Side::A),
                        Some((g, "b")) => (g, Side::B),
                        _ => {
                            return Err(err(
                                lineno,
                                format!("generator token `{tok}` is not name:a or name:b"),
                            ))
                        }
                    };
                    if gname.is_empty() || gen_names.iter().any(|n| n == gname) {
                        return Err(err(
                            lineno,
                            format!("empty or duplicate generator name `{gname}`"),
                        ));
                    }
                    gen_names.push(gname.to_string());
                    sides.push(side);
                }
                if gen_names.is_empty() {
                    return Err(err(lineno, "gens line declares no generators".into()));
                }
                continue;
            }
            if gen_names.is_empty() {
                return Err(err(lineno, "relator before gens line".into()));
            }
            if first == "alt" {
                let idx_tok = tokens
                    .next()
                    .ok_or_else(|| err(lineno, "alt line missing relator index".into()))?;
                let idx: usize = idx_tok
                    .parse()
                    .map_err(|_| err(lineno, format!("bad alt index `{idx_tok}`")))?;
                if idx == 0 {
                    return Err(err(lineno, "alt indices are 1-based".into()));
                }
                let word_tokens: Vec<String> = tokens.map(|t| t.to_string()).collect();
                if word_tokens.is_empty() {
                    return Err(err(lineno, "alt line has an empty word".into()));
                }
                alt_raw.push((idx - 1, word_tokens, lineno));
                continue;
            }
            let mut word: RelatorWord = Vec::new();
            word.push(parse_letter(first, &gen_names, name, lineno)?);
            for tok in tokens {
                word.push(parse_letter(tok, &gen_names, name, lineno)?);
            }
            relators.push(word);
        }

        if gen_names.is_empty() {
            return Err(err(0, "missing gens line".into()));
        }
        let mut alt_readings = Vec::new();
        for (idx, toks, lineno) in alt_raw {
            if idx >= relators.len() {
                return Err(err(
                    lineno,
                    format!("alt index {} exceeds relator count {}", idx + 1, relators.len()),
                ));
            }
            let mut word: RelatorWord = Vec::new();
            for tok in &toks {
                word.push(parse_letter(tok, &gen_names, name, lineno)?);
            }
            alt_readings.push(AltReading {
                relator_index: idx,
                word,
            });
        }
        Ok(FinPresentation {
            name: name.to_string(),
            gen_names,
            sides,
            relators,
            alt_readings,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gen_count(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn relators(&self) -> &[RelatorWord] {
        &self.relators
    }

    pub fn alt_readings(&self) -> &[AltReading] {
        &self.alt_readings
    }

    /// Indices of generators on the given side, in declaration order.
    pub fn side_gens(&self, side: Side) -> Vec<usize> {
        self.sides
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == side)
            .map(|(i, _)| i)
            .collect()
    }

    /// Whether both sides are non-empty.
    pub fn is_two_sided(&self) -> bool {
        !self.side_gens(Side::A).is_empty() && !self.side_gens(Side::B).is_empty()
    }

    /// A copy with relator `index` replaced by `word` (used to try
    /// alternative readings).
    pub fn with_relator_replaced(&self, index: usize, word: RelatorWord) -> Result<FinPresentation> {
        if index >= self.relators.len() {
            return Err(Error::Parse {
                file: self.name.clone(),
                line: 0,
                msg: format!("relator index {index} out of range"),
            });
        }
        let mut out = self.clone();
        out.relators[index] = word;
        out.alt_readings = Vec::new();
        out.name = format!("{}~alt{}", self.name, index + 1);
        Ok(out)
    }

    /// Render a word over this presentation's generators, e.g.
    /// `a b^-1 a`.
    pub fn word_string(&self, word: &[(usize, i32)]) -> String {
        word.iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.gen_names[g].clone()
                } else {
                    format!("{}^{}", self.gen_names[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn parse_letter(
    tok: &str,
    gen_names: &[String],
    file: &str,
    lineno: usize,
) -> Result<(usize, i32)> {
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => {
            let exp: i32 = e.parse().map_err(|_| Error::Parse {
                file: file.to_string(),
                line: lineno,
                msg: format!("bad exponent in `{tok}`"),
            })?;
            (b, exp)
        }
        None => (tok, 1),
    };
    let idx = gen_names
        .iter()
        .position(|n| n == base)
        .ok_or_else(|| Error::Parse {
            file: file.to_string(),
            line: lineno,
            msg: format!("unknown generator `{base}`"),
        })?;
    Ok((idx, exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_two_sided_with_alt() {
        let text = "# demo\ngens a:a b1:b b2:b\nalt 2 b1 b2\na a a a\nb1 b1\nb2 a^-1 b2\n";
        let p = FinPresentation::parse("demo", text).unwrap();
        assert_eq!(p.gen_count(), 3);
        assert_eq!(p.side_gens(Side::A), vec![0]);
        assert_eq!(p.side_gens(Side::B), vec![1, 2]);
        assert!(p.is_two_sided());
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.relators()[2], vec![(2, 1), (0, -1), (2, 1)]);
        assert_eq!(p.alt_readings().len(), 1);
        assert_eq!(p.alt_readings()[0].relator_index, 1);
        assert_eq!(p.word_string(&p.relators()[2]), "b2 a^-1 b2");
    }

    #[test]
    fn parse_rejects_unknown_generator() {
        let text = "gens a:a b:b\na c a\n";
        assert!(FinPresentation::parse("bad", text).is_err());
    }

    #[test]
    fn parse_rejects_malformed_side() {
        let text = "gens a:x\n";
        assert!(FinPresentation::parse("bad", text).is_err());
    }

    #[test]
    fn one_sided_model_is_accepted_but_flagged() {
        let text = "gens e1:a e2:a\ne1 e1\ne2 e2 e2\ne1 e2 e1 e2\n";
        let p = FinPresentation::parse("model", text).unwrap();
        assert!(!p.is_two_sided());
        assert_eq!(p.side_gens(Side::A).len(), 2);
    }
}
