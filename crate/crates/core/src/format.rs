//! Line-oriented text formats for structures (`GSG`) and fuzzy subsets
//! (`IFS`).
//!
//! Both formats are UTF-8 with `#` starting a comment that runs to the end of
//! the line; blank lines are ignored.  Parsing is bit-exact: wrong counts,
//! stray tokens, or out-of-range indices fail with the offending line number.

use crate::error::InputError;
use crate::fuzzy::{CarrierId, CarrierKind, Grade, IFSubset};
use crate::semigroup::GammaSemigroup;

/// Content lines with their 1-based numbers, comments and blanks removed.
struct Lines<'a> {
    rest: std::iter::Peekable<std::vec::IntoIter<(usize, &'a str)>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut rows = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            last_line = i + 1;
            let content = match raw.split_once('#') {
                Some((before, _)) => before,
                None => raw,
            }
            .trim();
            if !content.is_empty() {
                rows.push((i + 1, content));
            }
        }
        Lines {
            rest: rows.into_iter().peekable(),
            last_line,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), InputError> {
        self.rest
            .next()
            .ok_or_else(|| InputError::parse(self.last_line, format!("missing {what}")))
    }

    fn peek(&mut self) -> Option<(usize, &'a str)> {
        self.rest.peek().copied()
    }

    fn expect_done(&mut self) -> Result<(), InputError> {
        match self.peek() {
            Some((line, text)) => Err(InputError::parse(
                line,
                format!("unexpected trailing content `{text}`"),
            )),
            None => Ok(()),
        }
    }
}

fn parse_index(line: usize, token: &str, what: &str, size: usize) -> Result<usize, InputError> {
    let value: usize = token
        .parse()
        .map_err(|_| InputError::parse(line, format!("{what} `{token}` is not an index")))?;
    if value >= size {
        return Err(InputError::parse(
            line,
            format!("{what} {value} out of range (size {size})"),
        ));
    }
    Ok(value)
}

/// Reads a row of exactly `len` indices below `size`.
fn parse_row(
    line: usize,
    text: &str,
    what: &str,
    len: usize,
    size: usize,
) -> Result<Vec<usize>, InputError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != len {
        return Err(InputError::parse(
            line,
            format!("expected {len} entries, found {}", tokens.len()),
        ));
    }
    tokens
        .iter()
        .map(|t| parse_index(line, t, what, size))
        .collect()
}

fn expect_tag(lines: &mut Lines, tag: &str, k: usize) -> Result<(), InputError> {
    let (line, text) = lines.next(&format!("`{tag} {k}` header"))?;
    if text != format!("{tag} {k}") {
        return Err(InputError::parse(
            line,
            format!("expected `{tag} {k}`, found `{text}`"),
        ));
    }
    Ok(())
}

fn parse_sized_header(lines: &mut Lines, tag: &str) -> Result<usize, InputError> {
    let (line, text) = lines.next(&format!("`{tag} <size>` line"))?;
    match text.split_whitespace().collect::<Vec<_>>().as_slice() {
        [t, n] if *t == tag => n
            .parse::<usize>()
            .map_err(|_| InputError::parse(line, format!("size `{n}` is not a number"))),
        _ => Err(InputError::parse(
            line,
            format!("expected `{tag} <size>`, found `{text}`"),
        )),
    }
}

/// Parses the structure format.
pub fn parse_gsg(text: &str) -> Result<GammaSemigroup, InputError> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.next("`GSG 1` header")?;
    if header != "GSG 1" {
        return Err(InputError::parse(
            line,
            format!("expected header `GSG 1`, found `{header}`"),
        ));
    }
    let s = parse_sized_header(&mut lines, "S")?;
    let g = parse_sized_header(&mut lines, "G")?;
    if s == 0 {
        return Err(InputError::ZeroSize { what: "s_size" });
    }
    if g == 0 {
        return Err(InputError::ZeroSize { what: "g_size" });
    }

    // One s x s block per operator; row x, column y holds x a y.
    let mut table = vec![0usize; s * g * s];
    for a in 0..g {
        expect_tag(&mut lines, "T", a)?;
        for x in 0..s {
            let (line, text) = lines.next("product table row")?;
            let row = parse_row(line, text, "s-index", s, s)?;
            for (y, &v) in row.iter().enumerate() {
                table[(x * g + a) * s + y] = v;
            }
        }
    }

    // One g x g block per element; row i, column j holds g_i x g_j.
    let gamma_table = if lines.peek().is_some() {
        let mut gt = vec![0usize; g * s * g];
        for x in 0..s {
            expect_tag(&mut lines, "GT", x)?;
            for a in 0..g {
                let (line, text) = lines.next("gamma table row")?;
                let row = parse_row(line, text, "g-index", g, g)?;
                for (b, &v) in row.iter().enumerate() {
                    gt[(a * s + x) * g + b] = v;
                }
            }
        }
        Some(gt)
    } else {
        None
    };
    lines.expect_done()?;
    GammaSemigroup::new(s, g, table, gamma_table)
}

/// Serializes a structure; the exact inverse of [`parse_gsg`] up to labels,
/// which the format does not carry.
pub fn serialize_gsg(s: &GammaSemigroup) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "GSG 1").unwrap();
    writeln!(out, "S {}", s.s_size()).unwrap();
    writeln!(out, "G {}", s.g_size()).unwrap();
    for a in s.operators() {
        writeln!(out, "T {a}").unwrap();
        for x in s.elements() {
            let row: Vec<String> = s
                .elements()
                .map(|y| s.product(x, a, y).to_string())
                .collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    if s.has_gamma_table() {
        for x in s.elements() {
            writeln!(out, "GT {x}").unwrap();
            for a in s.operators() {
                let row: Vec<String> = s
                    .operators()
                    .map(|b| s.gamma_product(a, x, b).unwrap().to_string())
                    .collect();
                writeln!(out, "{}", row.join(" ")).unwrap();
            }
        }
    }
    out
}

/// Parses the fuzzy subset format; the subset's carrier size is the number
/// of grade lines, to be checked against a concrete structure by the caller.
pub fn parse_ifs(text: &str) -> Result<IFSubset, InputError> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.next("`IFS 1` header")?;
    if header != "IFS 1" {
        return Err(InputError::parse(
            line,
            format!("expected header `IFS 1`, found `{header}`"),
        ));
    }
    let (line, text) = lines.next("`carrier S|L|R` line")?;
    let kind = match text.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["carrier", k] => {
            CarrierKind::parse(k).map_err(|e| InputError::parse(line, e.to_string()))?
        }
        _ => {
            return Err(InputError::parse(
                line,
                format!("expected `carrier S|L|R`, found `{text}`"),
            ))
        }
    };

    let mut mu = Vec::new();
    let mut nu = Vec::new();
    while let Some((line, text)) = lines.peek() {
        lines.next("grade line")?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [idx, m, n] = tokens.as_slice() else {
            return Err(InputError::parse(
                line,
                format!("expected `<index> <mu> <nu>`, found `{text}`"),
            ));
        };
        let expected = mu.len();
        let idx: usize = idx
            .parse()
            .map_err(|_| InputError::parse(line, format!("index `{idx}` is not a number")))?;
        if idx != expected {
            return Err(InputError::parse(
                line,
                format!("expected index {expected}, found {idx}"),
            ));
        }
        let parse_grade =
            |t: &str| Grade::parse(t).map_err(|e| InputError::parse(line, e.to_string()));
        mu.push(parse_grade(m)?);
        nu.push(parse_grade(n)?);
    }
    if mu.is_empty() {
        return Err(InputError::parse(
            lines.last_line,
            "subset has no grade lines".to_string(),
        ));
    }
    let carrier = CarrierId::new(kind, mu.len());
    IFSubset::new(carrier, mu, nu)
}

/// Serializes a fuzzy subset with canonical lowest-term grades.
pub fn serialize_ifs(a: &IFSubset) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "IFS 1").unwrap();
    writeln!(out, "carrier {}", a.carrier().kind()).unwrap();
    for x in 0..a.len() {
        writeln!(out, "{x} {} {}", a.mu(x), a.nu(x)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate, EnumerateOptions};
    use crate::samples;

    fn strip_labels(s: &GammaSemigroup) -> GammaSemigroup {
        GammaSemigroup::new(
            s.s_size(),
            s.g_size(),
            s.raw_table().to_vec(),
            s.raw_gamma_table().map(|t| t.to_vec()),
        )
        .unwrap()
    }

    #[test]
    fn gsg_round_trips_every_sample() {
        for s in [
            samples::singleton(),
            samples::left_zero(),
            samples::i2(),
            samples::mod2_full(),
            samples::strong_rho(),
            samples::broken(),
        ] {
            let back = parse_gsg(&serialize_gsg(&s)).unwrap();
            assert_eq!(back, strip_labels(&s));
        }
    }

    #[test]
    fn gsg_round_trips_an_enumerated_population() {
        let all = enumerate(2, 2, &EnumerateOptions::default()).unwrap();
        for s in &all.instances {
            assert_eq!(&parse_gsg(&serialize_gsg(s)).unwrap(), s);
        }
    }

    #[test]
    fn gsg_accepts_comments_and_blank_lines() {
        let text = "# a structure\nGSG 1\n\nS 2  # two elements\nG 1\nT 0\n0 0\n0 1\n";
        let s = parse_gsg(text).unwrap();
        assert_eq!(s, strip_labels(&samples::i2()));
    }

    #[test]
    fn gsg_errors_carry_line_numbers() {
        let cases: &[(&str, usize, &str)] = &[
            ("GSG 2\n", 1, "header"),
            ("GSG 1\nS x\n", 2, "size"),
            ("GSG 1\nS 2\nG 1\nT 1\n", 4, "expected `T 0`"),
            (
                "GSG 1\nS 2\nG 1\nT 0\n0 0\n0 1 1\n",
                6,
                "expected 2 entries",
            ),
            ("GSG 1\nS 2\nG 1\nT 0\n0 0\n0 2\n", 6, "out of range"),
            ("GSG 1\nS 2\nG 1\nT 0\n0 0\n0 1\nJUNK\n", 7, "GT 0"),
            ("GSG 1\nS 2\nG 1\nT 0\n0 0\n", 5, "missing"),
        ];
        for (text, want_line, want_msg) in cases {
            match parse_gsg(text) {
                Err(InputError::Parse { line, msg }) => {
                    assert_eq!(line, *want_line, "wrong line for {text:?}: {msg}");
                    assert!(
                        msg.contains(want_msg),
                        "message `{msg}` misses `{want_msg}`"
                    );
                }
                other => panic!("expected a parse error for {text:?}, got {other:?}"),
            }
        }
        assert!(matches!(
            parse_gsg("GSG 1\nS 0\nG 1\n"),
            Err(InputError::ZeroSize { .. })
        ));
    }

    #[test]
    fn ifs_round_trips_and_normalizes() {
        let carrier = CarrierId::new(CarrierKind::R, 2);
        let a = IFSubset::new(
            carrier,
            vec![Grade::one(), Grade::new(1, 2).unwrap()],
            vec![Grade::zero(), Grade::new(1, 4).unwrap()],
        )
        .unwrap();
        let text = serialize_ifs(&a);
        assert_eq!(text, "IFS 1\ncarrier R\n0 1 0\n1 1/2 1/4\n");
        assert_eq!(parse_ifs(&text).unwrap(), a);
        // Unreduced and integer-shorthand grades normalize on the way in.
        let b = parse_ifs("IFS 1\ncarrier R\n0 2/2 0/9\n1 2/4 1/4\n").unwrap();
        assert_eq!(b, a);
    }

    #[test]
    fn ifs_errors_are_precise() {
        assert!(matches!(
            parse_ifs("IFS 2\n"),
            Err(InputError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_ifs("IFS 1\ncarrier Q\n"),
            Err(InputError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_ifs("IFS 1\ncarrier S\n1 1 0\n"),
            Err(InputError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_ifs("IFS 1\ncarrier S\n0 1 0\n1 3/2 0\n"),
            Err(InputError::Parse { line: 4, .. })
        ));
        // The admissibility violation names the element.
        assert!(matches!(
            parse_ifs("IFS 1\ncarrier S\n0 1 0\n1 1/2 3/4\n"),
            Err(InputError::GradeSum { element: 1 })
        ));
        assert!(parse_ifs("IFS 1\ncarrier S\n").is_err());
    }
}
