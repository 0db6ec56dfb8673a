//! Golden values for the generic types at the primes 2 to 19, shipped as a
//! text fixture, and the weight layout of those tables.

use crate::counts::ReprType;
use crate::error::{Error, Result};

/// The bundled fixture text.
pub const APPENDIX_B: &str = include_str!("../fixtures/appendix_b.txt");

/// Primes covered by the golden tables.
pub const APPENDIX_PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// `(type, odd weights, even weights)` as inclusive ranges.
pub const APPENDIX_LAYOUT: [(ReprType, (u32, u32), (u32, u32)); 4] = [
    (ReprType::IIa, (3, 35), (4, 34)),
    (ReprType::IIIaVIab, (3, 29), (4, 30)),
    (ReprType::IVa, (3, 29), (4, 28)),
    (ReprType::Va, (3, 29), (4, 30)),
];

/// Weights of one block, stepping by 2.
pub fn block_weights(range: (u32, u32)) -> Vec<u32> {
    (range.0..=range.1).step_by(2).collect()
}

/// One table: a type, its weights, and one row of values per prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixBlock {
    pub omega: ReprType,
    pub weights: Vec<u32>,
    pub rows: Vec<(u64, Vec<u64>)>,
}

impl AppendixBlock {
    /// `(k, p, value)` for every cell.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u64, u64)> + '_ {
        self.rows.iter().flat_map(move |(p, vals)| {
            self.weights.iter().zip(vals).map(move |(&k, &v)| (k, *p, v))
        })
    }
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Fixture(format!("line {}: {}", line + 1, msg.into()))
}

fn numbers<T: std::str::FromStr>(line: usize, fields: &[&str]) -> Result<Vec<T>> {
    fields
        .iter()
        .map(|f| f.parse().map_err(|_| bad(line, format!("bad number {f:?}"))))
        .collect()
}

/// Parses fixture text: `# comment` lines, `[type]` block headers, a
/// `k w1 w2 ...` row and `p v1 v2 ...` rows.
pub fn parse_appendix(text: &str) -> Result<Vec<AppendixBlock>> {
    let mut blocks: Vec<AppendixBlock> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            let omega: ReprType = name.parse().map_err(|_| bad(i, format!("unknown type {name}")))?;
            blocks.push(AppendixBlock {
                omega,
                weights: Vec::new(),
                rows: Vec::new(),
            });
            continue;
        }
        let block = blocks
            .last_mut()
            .ok_or_else(|| bad(i, "data before the first block header"))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "k" {
            block.weights = numbers(i, &fields[1..])?;
            continue;
        }
        if block.weights.is_empty() {
            return Err(bad(i, "row before the weight header"));
        }
        let p: u64 = numbers(i, &fields[..1])?[0];
        let vals: Vec<u64> = numbers(i, &fields[1..])?;
        if vals.len() != block.weights.len() {
            return Err(bad(
                i,
                format!("{} values for {} weights", vals.len(), block.weights.len()),
            ));
        }
        block.rows.push((p, vals));
    }
    Ok(blocks)
}

/// The bundled tables.
pub fn appendix_blocks() -> Result<Vec<AppendixBlock>> {
    parse_appendix(APPENDIX_B)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixture_matches_layout() {
        let blocks = appendix_blocks().unwrap();
        assert_eq!(blocks.len(), 8);
        let mut cells = 0;
        for (i, (omega, odd, even)) in APPENDIX_LAYOUT.iter().enumerate() {
            for (b, range) in blocks[2 * i..2 * i + 2].iter().zip([odd, even]) {
                assert_eq!(b.omega, *omega);
                assert_eq!(b.weights, block_weights(*range));
                let primes: Vec<u64> = b.rows.iter().map(|r| r.0).collect();
                assert_eq!(primes, APPENDIX_PRIMES);
                cells += b.cells().count();
            }
        }
        assert_eq!(cells, 928);
    }

    #[test]
    fn malformed_input() {
        assert!(parse_appendix("2 0 0").is_err());
        assert!(parse_appendix("[IIa]\n2 0 0").is_err());
        assert!(parse_appendix("[IIa]\nk 3 5\n2 0").is_err());
        assert!(parse_appendix("[Foo]").is_err());
        let ok = parse_appendix("# c\n[Va]\nk 3 5\n2 0 1\n").unwrap();
        assert_eq!(ok[0].cells().collect::<Vec<_>>(), [(3, 2, 0), (5, 2, 1)]);
    }
}
