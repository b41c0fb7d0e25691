//! Sweep arguments: inclusive ranges `a..b` and numerator sets `1,2,-1`.

pub fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let s = s.trim();
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

pub fn parse_set(s: &str) -> Result<i64, String> {
    s.trim().parse().map_err(|_| format!("bad numerator {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5..7"), Ok((5, 7)));
        assert_eq!(parse_range("3..=9"), Ok((3, 9)));
        assert_eq!(parse_range("5"), Ok((5, 5)));
        assert!(parse_range("7..5").is_err());
        assert!(parse_range("a..5").is_err());
    }
}
