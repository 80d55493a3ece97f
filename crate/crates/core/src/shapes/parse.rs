use crate::error::{Error, Result};

/// Parses a comma separated integer list, optionally wrapped in `[]` or `()`.
/// With `require_brackets` the square brackets are mandatory.
pub(crate) fn parse_int_list(s: &str, require_brackets: bool) -> Result<Vec<i64>> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let (body, offset) = match (t.chars().next(), t.chars().last()) {
        (Some('['), Some(']')) | (Some('('), Some(')')) if t.len() >= 2 => {
            (&t[1..t.len() - 1], lead + 1)
        }
        (Some('['), _) | (Some('('), _) => {
            return Err(Error::Parse {
                pos: lead + t.len(),
                msg: "unclosed bracket".into(),
            })
        }
        _ if require_brackets => {
            return Err(Error::Parse {
                pos: lead,
                msg: "expected '[' to open an integer sequence".into(),
            })
        }
        _ => (t, lead),
    };
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for tok in body.split(',') {
        let trimmed = tok.trim();
        let tok_pos = pos + (tok.len() - tok.trim_start().len());
        if trimmed.is_empty() {
            return Err(Error::Parse {
                pos: tok_pos,
                msg: "empty entry".into(),
            });
        }
        let v = trimmed.parse::<i64>().map_err(|_| Error::Parse {
            pos: tok_pos,
            msg: format!("'{trimmed}' is not an integer"),
        })?;
        out.push(v);
        pos += tok.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_point_at_the_bad_token() {
        match parse_int_list("[1, 2,x]", true) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        match parse_int_list("1,,2", false) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_int_list("1,2", true).is_err());
        assert_eq!(parse_int_list(" [ -1, 0 ,3 ] ", true).unwrap(), vec![-1, 0, 3]);
        assert_eq!(parse_int_list("[]", true).unwrap(), Vec::<i64>::new());
    }
}
