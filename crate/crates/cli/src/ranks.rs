//! Rank selections: comma-separated items, each a single rank `r` or an
//! inclusive range `a-b`, e.g. `1,3,10-20`.

use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSet(Vec<(usize, usize)>);

impl RankSet {
    /// Every rank, in the order written; duplicates are kept.
    pub fn expand(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().flat_map(|&(a, b)| a..=b)
    }

    pub fn max(&self) -> usize {
        self.0.iter().map(|&(_, b)| b).max().unwrap_or(0)
    }
}

impl FromStr for RankSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid rank `{}` in `{s}`", t.trim()))
        };
        let mut items = Vec::new();
        for part in s.split(',') {
            let item = match part.split_once('-') {
                Some((a, b)) => (parse(a)?, parse(b)?),
                None => {
                    let r = parse(part)?;
                    (r, r)
                }
            };
            if item.0 == 0 {
                return Err(format!("ranks start at 1, got `{}`", part.trim()));
            }
            if item.0 > item.1 {
                return Err(format!("empty rank range `{}`", part.trim()));
            }
            items.push(item);
        }
        Ok(RankSet(items))
    }
}
