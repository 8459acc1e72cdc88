//! graph6 text format: 6-bit printable encoding of the upper triangle,
//! column by column. Used for canonical stream output and checkpoints.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encode a graph. Orders up to 62 use the one-byte size; 63 and 64 use the
/// four-byte long form.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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

/// Decode a graph6 string. Strict: rejects bad size headers, characters
/// outside '?'..='~', truncated or trailing data, and nonzero padding bits.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "byte 0x{b:02x} outside the printable graph6 range"
            )));
        }
    }
    let (n, body) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::Graph6(
                "8-byte size header implies an order beyond capacity".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated long size header".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "vertices",
            got: n,
            limit: MAX_VERTICES,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < nbytes {
        return Err(Error::Graph6(format!(
            "truncated: need {nbytes} data bytes for order {n}, got {}",
            body.len()
        )));
    }
    if body.len() > nbytes {
        return Err(Error::Graph6(format!(
            "trailing data: {} extra bytes after order-{n} body",
            body.len() - nbytes
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let word = body[idx / 6] - 63;
            if word & (1 << (5 - idx % 6)) != 0 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    // padding bits beyond the triangle must be zero
    for pad in idx..nbytes * 6 {
        let word = body[pad / 6] - 63;
        if word & (1 << (5 - pad % 6)) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::FamilySpec;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        let k2 = FamilySpec::Complete { n: 2 }.construct().unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn star_from_spec_string() {
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 4);
        // the last vertex is the center
        assert_eq!(g.degree(4), 4);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn header_prefix_accepted() {
        let g = from_graph6(">>graph6<<DQc").unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn long_form_orders() {
        for n in [63usize, 64] {
            let mut g = Graph::empty(n).unwrap();
            g.add_edge(0, n - 1);
            g.add_edge(5, 17);
            let s = to_graph6(&g);
            assert!(s.starts_with('~'));
            let back = from_graph6(&s).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(from_graph6("").is_err());
        // character below '?'
        assert!(from_graph6("D >").is_err());
        // truncated body: order 5 needs two data bytes
        assert!(from_graph6("DQ").is_err());
        // trailing data
        assert!(from_graph6("DQcc").is_err());
        // nonzero padding bits: order 2 uses only the top bit
        assert!(from_graph6("A~").is_err());
        // truncated long header
        assert!(from_graph6("~??").is_err());
        // order beyond capacity: long form for n = 65
        assert!(from_graph6("~?@B").is_err());
        // 8-byte header form
        assert!(from_graph6("~~?????").is_err());
    }

    proptest! {
        #[test]
        fn roundtrip_random_graphs(n in 0usize..20, seed in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut state = seed | 1;
            for i in 0..n {
                for j in (i + 1)..n {
                    // xorshift coin flip
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state & 1 == 1 {
                        g.add_edge(i, j);
                    }
                }
            }
            let s = to_graph6(&g);
            let back = from_graph6(&s).unwrap();
            prop_assert_eq!(back, g);
            prop_assert_eq!(to_graph6(&back), s);
        }
    }
}
