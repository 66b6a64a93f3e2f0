//! graph6 encoding (nauty's printable format for simple undirected graphs).
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, `126` followed by three
//! 6-bit groups for `n <= 258047`, and `126 126` followed by six groups
//! above that. The upper triangle is then written column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) …`), padded with zero bits to a multiple
//! of six and emitted six bits per byte, each biased by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_groups(&mut out, n as u64, 3);
    } else {
        out.extend_from_slice(&[126, 126]);
        push_groups(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn push_groups(out: &mut Vec<u8>, x: u64, groups: usize) {
    for k in (0..groups).rev() {
        out.push(((x >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and a
/// trailing newline are accepted; nonzero padding bits are rejected.
pub fn decode(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(HEADER) {
        bytes = rest.as_bytes();
        base = HEADER.len();
    }
    while let [head @ .., b'\n' | b'\r'] = bytes {
        bytes = head;
    }
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        (read_groups(bytes, 2, 6, base)?, 8)
    } else {
        (read_groups(bytes, 1, 3, base)?, 4)
    };
    if n == 0 {
        return Err(err(base, "graph6 with zero vertices is not a valid graph"));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[pos.min(bytes.len())..];
    if body.len() != need {
        let at = base + pos + body.len().min(need);
        return Err(err(
            at,
            format!("expected {need} edge bytes for n = {n}, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if need > 0 {
        let used = bits - 6 * (need - 1);
        let last = bytes[pos + need - 1] - 63;
        if used < 6 && last & ((1 << (6 - used)) - 1) != 0 {
            return Err(err(base + pos + need - 1, "nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Graph::new(n, edges)
}

fn read_groups(bytes: &[u8], start: usize, groups: usize, base: usize) -> Result<usize> {
    if bytes.len() < start + groups {
        return Err(err(base + bytes.len(), "truncated vertex count"));
    }
    Ok(bytes[start..start + groups]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(encode(&k2), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
        // Same fixture as petgraph's test: 5 vertices, edges ac ae bd de.
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(decode(">>graph6<<A_\n").unwrap(), k2);
    }

    #[test]
    fn long_vertex_count() {
        let g = Graph::new(70, [(0, 69), (3, 4)]).unwrap();
        let s = encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 70 - 64 + 63]);
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed() {
        match decode("garbage") {
            Err(Error::Graph6 { .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(decode(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(decode("A"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode("A_?"), Err(Error::Graph6 { .. })));
        // bit beyond the single edge slot of n = 2
        assert!(matches!(decode("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode("A \u{7f}"), Err(Error::Graph6 { offset: 1, .. })));
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..40, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}
