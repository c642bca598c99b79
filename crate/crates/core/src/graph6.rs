//! graph6 encoding: size header, then the upper triangle packed column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) six bits per byte, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse("empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse(format!("byte {b:#04x} outside the graph6 range")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(parse("unsupported graph6 size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(parse("graph6 string encodes zero vertices"));
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            actual: n,
            limit: MAX_VERTICES,
            flag: "fixed word size",
        });
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse(format!(
            "graph6 body has {} bytes, expected {expected} for n = {n}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = (body[expected - 1] - 63) & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(parse("nonzero graph6 padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Decodes one graph per nonblank line.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}

fn parse(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        let k4 = Graph::empty(4).unwrap().complement();
        assert_eq!(encode(&k4), "C~");
    }

    #[test]
    fn long_header_for_large_orders() {
        let g = Graph::from_edges(63, [(0, 62)]).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(decode(""), Err(Error::Parse(_))));
        assert!(matches!(decode("?"), Err(Error::Parse(_))));
        assert!(matches!(decode("DQ"), Err(Error::Parse(_))));
        assert!(matches!(decode("D Qc"), Err(Error::Parse(_))));
        // n = 2 uses one bit; the remaining five must be zero
        assert!(decode("A_").is_ok());
        assert!(matches!(decode("A@"), Err(Error::Parse(_))));
        assert!(matches!(decode("~?A?"), Err(Error::Capacity { .. })));
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=64, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let s = encode(&g);
            prop_assert_eq!(decode(&s).unwrap(), g.clone());
            prop_assert_eq!(encode(&decode(&s).unwrap()), s);
        }
    }
}
