//! graph6 encoding: size header `N(n)`, then the upper triangle of the
//! adjacency matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! six bits per byte, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    let sextets: &[u32] = if n <= 62 {
        &[0]
    } else if n <= 258_047 {
        out.push('~');
        &[12, 6, 0]
    } else {
        out.push_str("~~");
        &[30, 24, 18, 12, 6, 0]
    };
    for &shift in sextets {
        out.push(char::from(63 + ((n as u64 >> shift) & 0x3f) as u8));
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(char::from(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from(63 + (acc << (6 - filled))));
    }
    out
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and a single
/// trailing newline are accepted; padding bits in the last byte are ignored.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let mut pos = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = bytes.len();
    if bytes[pos..end].ends_with(b"\n") {
        end -= 1;
        if bytes[pos..end].ends_with(b"\r") {
            end -= 1;
        }
    }

    let sextet = |at: usize| -> Result<u64> {
        match bytes.get(at) {
            Some(&b) if at < end && (63..=126).contains(&b) => Ok(u64::from(b - 63)),
            Some(&b) if at < end => Err(err(at, format!("byte 0x{b:02x} outside graph6 range"))),
            _ => Err(err(at, "unexpected end of input")),
        }
    };

    let first = sextet(pos)?;
    let n = if first < 63 {
        pos += 1;
        first as usize
    } else if sextet(pos + 1)? < 63 {
        let v = (1..=3).try_fold(0u64, |v, k| Ok::<_, Error>((v << 6) | sextet(pos + k)?))?;
        pos += 4;
        v as usize
    } else {
        let v = (2..=7).try_fold(0u64, |v, k| Ok::<_, Error>((v << 6) | sextet(pos + k)?))?;
        pos += 8;
        usize::try_from(v).map_err(|_| err(pos, "vertex count overflows"))?
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let available = end.saturating_sub(pos);
    if available != expected {
        let at = pos + available.min(expected);
        return Err(err(
            at,
            format!("expected {expected} edge bytes for n = {n}, found {available}"),
        ));
    }

    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let at = pos + k / 6;
            if (sextet(at)? >> (5 - k % 6)) & 1 == 1 {
                b.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent encoder: spell the bit string out, pad, then chunk.
    fn reference_encode(g: &Graph) -> String {
        let n = g.n();
        assert!(n <= 62);
        let mut bits = String::new();
        for j in 0..n {
            for i in 0..j {
                bits.push(if g.has_edge(i, j) { '1' } else { '0' });
            }
        }
        while bits.len() % 6 != 0 {
            bits.push('0');
        }
        let mut out = String::from(char::from(63 + n as u8));
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            out.push(char::from(63 + v));
        }
        out
    }

    #[test]
    fn small_encodings() {
        // bits 111 padded to 111000 = 56, and 56 + 63 = 'w'
        assert_eq!(encode_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(reference_encode(&Graph::complete(3)), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(reference_encode(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        // 5-vertex graph with edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(reference_encode(&g), "DQc");
    }

    #[test]
    fn matches_reference_encoder() {
        for n in 3..20 {
            let c = Graph::cycle(n).unwrap();
            assert_eq!(encode_graph6(&c), reference_encode(&c));
            assert_eq!(encode_graph6(&Graph::path(n)), reference_encode(&Graph::path(n)));
        }
    }

    #[test]
    fn long_form_header() {
        let g = Graph::path(100);
        let s = encode_graph6(&g);
        assert_eq!(&s[..4], "~?@c");
        assert_eq!(decode_graph6(&s).unwrap(), g);
        let g63 = Graph::complete(63);
        assert_eq!(decode_graph6(&encode_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn header_and_newline_are_accepted() {
        assert_eq!(decode_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
        assert_eq!(decode_graph6("Bw\r\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn padding_bits_are_ignored() {
        assert_eq!(decode_graph6("B~").unwrap(), Graph::complete(3));
        assert_eq!(decode_graph6("A@").unwrap(), Graph::empty(2));
        assert_eq!(decode_graph6("A_").unwrap(), Graph::complete(2));
    }

    #[test]
    fn malformed_input_reports_offset() {
        let offset = |s: &str| match decode_graph6(s) {
            Err(Error::Graph6 { offset, .. }) => offset,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(offset(""), 0);
        assert_eq!(offset("B"), 1);
        assert_eq!(offset("Bww"), 2);
        assert_eq!(offset("B\x20"), 1);
        assert_eq!(offset("B\x7f"), 1);
        assert_eq!(offset("~?"), 2);
    }
}
