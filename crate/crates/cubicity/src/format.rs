//! Line-oriented text formats.
//!
//! Every format is UTF-8, whitespace separated, and ignores blank lines and
//! lines starting with `#`. Writers are byte-deterministic.
//!
//! | document       | shape                                                      |
//! |----------------|------------------------------------------------------------|
//! | graph          | `n <count>`, then `u v` per edge                           |
//! | ordering       | `order v_1 ... v_n`, optionally `width <w>`                |
//! | representation | `representation n <n> width <w>`, optional `order ...`,    |
//! |                | then per layer `layer <i> length <p>/<q>` and `v <u> <p>/<q>` |
//! | cubes          | `cubes n <n> k <k>`, then `v <u> <a_1> ... <a_k>`          |
//! | arc model      | `arcs <n> <m>`, then `u h t`                               |
//! | orientation    | `u < v` per arc                                            |
//! | caterpillar    | `spine p_1 ... p_k`, then `leaves p_i: l_1 l_2 ...`        |
//! | report         | `passed`, `dims`, `width_checked`, `layer_supergraph`, edge lists |

use std::fmt::Write as _;
use std::str::FromStr;

use cubicity_core::orderings::{ArcModel, Caterpillar, Orientation};
use cubicity_core::{
    CubeRepresentation, Graph, IndifferenceRepresentation, Layer, LinearOrdering, Rational,
    VerificationReport,
};

use crate::error::{Error, Result};

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{token}`")))
}

fn rational(line: usize, token: &str) -> Result<Rational> {
    let (p, q) = match token.split_once('/') {
        Some((p, q)) => (
            number(line, p, "numerator")?,
            number(line, q, "denominator")?,
        ),
        None => (number(line, token, "rational")?, 1),
    };
    if q == 0 {
        return Err(Error::parse(line, "zero denominator"));
    }
    Ok(Rational::new(p, q))
}

fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n <count>` header"))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => number(line, count, "vertex count")?,
        _ => return Err(Error::parse(line, "expected `n <count>` header")),
    };
    let mut edges = Vec::new();
    for (line, text) in lines {
        let (u, v): (usize, usize) = match text.split_whitespace().collect::<Vec<_>>()[..] {
            [u, v] => (number(line, u, "vertex")?, number(line, v, "vertex")?),
            _ => return Err(Error::parse(line, "expected `u v`")),
        };
        // range and loop checks with the offending line attached
        Graph::from_edges(n, [(u, v)]).map_err(|source| Error::Line { line, source })?;
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_ordering(text: &str) -> Result<LinearOrdering> {
    let mut sequence = None;
    for (line, text) in content_lines(text) {
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            Some("order") if sequence.is_none() => {
                let seq = tokens
                    .map(|t| number(line, t, "vertex"))
                    .collect::<Result<Vec<usize>>>()?;
                sequence = Some((line, seq));
            }
            Some("order") => return Err(Error::parse(line, "second `order` line")),
            Some("width") => {
                number::<usize>(line, tokens.next().unwrap_or(""), "width")?;
            }
            _ => return Err(Error::parse(line, "expected `order ...` or `width <w>`")),
        }
    }
    let (line, seq) = sequence.ok_or_else(|| Error::parse(1, "missing `order` line"))?;
    LinearOrdering::from_sequence(seq).map_err(|source| Error::Line { line, source })
}

pub fn write_ordering(ord: &LinearOrdering, width: Option<usize>) -> String {
    let mut out = String::from("order");
    for v in ord.sequence() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    if let Some(w) = width {
        writeln!(out, "width {w}").unwrap();
    }
    out
}

pub fn write_representation(rep: &IndifferenceRepresentation) -> String {
    let mut out = format!("representation n {} width {}\n", rep.n(), rep.width());
    if let Some(ord) = rep.ordering() {
        out.push_str(&write_ordering(ord, None));
    }
    for layer in rep.layers() {
        writeln!(
            out,
            "layer {} length {}",
            layer.index(),
            fmt_rational(&layer.interval_length())
        )
        .unwrap();
        for v in 1..=layer.n() {
            writeln!(out, "v {v} {}", fmt_rational(&layer.value(v))).unwrap();
        }
    }
    out
}

/// Reads a representation document. Parsing stops at a `cubes` header so a
/// representation followed by its cube listing reads back.
pub fn parse_representation(text: &str) -> Result<IndifferenceRepresentation> {
    struct Pending {
        line: usize,
        index: usize,
        length: Rational,
        values: Vec<Option<Rational>>,
    }
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `representation` header"))?;
    let (n, width): (usize, usize) = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["representation", "n", n, "width", w] => {
            (number(line, n, "vertex count")?, number(line, w, "width")?)
        }
        _ => {
            return Err(Error::parse(
                line,
                "expected `representation n <n> width <w>`",
            ))
        }
    };
    let mut ordering = None;
    let mut layers = Vec::new();
    let mut current: Option<Pending> = None;
    let finish = |pending: Pending| -> Result<Layer> {
        let values = pending
            .values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::parse(
                        pending.line,
                        format!("layer {} has no value for vertex {}", pending.index, i + 1),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Layer::from_ratios(pending.index, pending.length, &values).map_err(|source| Error::Line {
            line: pending.line,
            source,
        })
    };
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        match tokens[..] {
            ["cubes", ..] => break,
            ["order", ..] if ordering.is_none() && current.is_none() && layers.is_empty() => {
                ordering = Some(parse_ordering(text).map_err(|e| match e {
                    Error::Line { source, .. } => Error::Line { line, source },
                    Error::Parse { message, .. } => Error::Parse { line, message },
                    other => other,
                })?);
            }
            ["layer", index, "length", length] => {
                if let Some(done) = current.take() {
                    layers.push(finish(done)?);
                }
                current = Some(Pending {
                    line,
                    index: number(line, index, "layer index")?,
                    length: rational(line, length)?,
                    values: vec![None; n],
                });
            }
            ["v", vertex, value] => {
                let pending = current
                    .as_mut()
                    .ok_or_else(|| Error::parse(line, "vertex value before any `layer` line"))?;
                let v: usize = number(line, vertex, "vertex")?;
                if v == 0 || v > n {
                    return Err(Error::Line {
                        line,
                        source: cubicity_core::Error::VertexOutOfRange { vertex: v, n },
                    });
                }
                if pending.values[v - 1]
                    .replace(rational(line, value)?)
                    .is_some()
                {
                    return Err(Error::parse(
                        line,
                        format!("vertex {v} listed twice in layer"),
                    ));
                }
            }
            _ => {
                return Err(Error::parse(
                    line,
                    "expected `layer ...` or `v <vertex> <value>`",
                ))
            }
        }
    }
    if let Some(done) = current.take() {
        layers.push(finish(done)?);
    }
    Ok(IndifferenceRepresentation::from_layers(
        layers, ordering, width,
    )?)
}

pub fn write_cubes(cubes: &CubeRepresentation) -> String {
    let mut out = format!("cubes n {} k {}\n", cubes.n(), cubes.k());
    for v in 1..=cubes.n() {
        write!(out, "v {v}").unwrap();
        for a in cubes.anchors(v) {
            write!(out, " {}", fmt_rational(&a)).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_arc_model(text: &str) -> Result<ArcModel> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `arcs <n> <m>` header"))?;
    let (n, m): (usize, usize) = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["arcs", n, m] => (
            number(line, n, "arc count")?,
            number(line, m, "circumference")?,
        ),
        _ => return Err(Error::parse(line, "expected `arcs <n> <m>` header")),
    };
    let mut arcs = vec![None; n];
    for (line, text) in lines {
        let (u, h, t): (usize, usize, usize) = match text.split_whitespace().collect::<Vec<_>>()[..]
        {
            [u, h, t] => (
                number(line, u, "vertex")?,
                number(line, h, "head")?,
                number(line, t, "tail")?,
            ),
            _ => return Err(Error::parse(line, "expected `u h t`")),
        };
        if u == 0 || u > n {
            return Err(Error::Line {
                line,
                source: cubicity_core::Error::VertexOutOfRange { vertex: u, n },
            });
        }
        if arcs[u - 1].replace((h, t)).is_some() {
            return Err(Error::parse(line, format!("arc {u} listed twice")));
        }
    }
    let arcs = arcs
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| Error::parse(line, format!("arc {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(ArcModel::new(m, arcs)?)
}

pub fn write_arc_model(model: &ArcModel) -> String {
    let mut out = format!("arcs {} {}\n", model.n(), model.circumference());
    for (i, (h, t)) in model.arcs().iter().enumerate() {
        writeln!(out, "{} {h} {t}", i + 1).unwrap();
    }
    out
}

pub fn parse_orientation(text: &str) -> Result<Orientation> {
    let mut arcs = Vec::new();
    for (line, text) in content_lines(text) {
        match text.split_whitespace().collect::<Vec<_>>()[..] {
            [u, "<", v] => arcs.push((number(line, u, "vertex")?, number(line, v, "vertex")?)),
            _ => return Err(Error::parse(line, "expected `u < v`")),
        }
    }
    Ok(Orientation::new(arcs))
}

pub fn write_orientation(o: &Orientation) -> String {
    let mut out = String::new();
    for (u, v) in o.arcs() {
        writeln!(out, "{u} < {v}").unwrap();
    }
    out
}

pub fn parse_caterpillar(text: &str) -> Result<Caterpillar> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `spine ...` line"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("spine") {
        return Err(Error::parse(line, "expected `spine p_1 ... p_k`"));
    }
    let spine = tokens
        .map(|t| number(line, t, "vertex"))
        .collect::<Result<Vec<usize>>>()?;
    let mut leaves: Vec<Option<Vec<usize>>> = vec![None; spine.len()];
    for (line, text) in lines {
        let rest = text
            .strip_prefix("leaves")
            .ok_or_else(|| Error::parse(line, "expected `leaves p: l_1 ...`"))?;
        let (owner, list) = rest
            .split_once(':')
            .ok_or_else(|| Error::parse(line, "missing `:` after the spine vertex"))?;
        let owner: usize = number(line, owner.trim(), "spine vertex")?;
        let slot = spine
            .iter()
            .position(|&p| p == owner)
            .ok_or_else(|| Error::parse(line, format!("{owner} is not on the spine")))?;
        let list = list
            .split_whitespace()
            .map(|t| number(line, t, "vertex"))
            .collect::<Result<Vec<usize>>>()?;
        if leaves[slot].replace(list).is_some() {
            return Err(Error::parse(
                line,
                format!("leaves of {owner} listed twice"),
            ));
        }
    }
    let leaves = leaves.into_iter().map(Option::unwrap_or_default).collect();
    Ok(Caterpillar::new(spine, leaves)?)
}

pub fn write_caterpillar(t: &Caterpillar) -> String {
    let mut out = String::from("spine");
    for p in t.spine() {
        write!(out, " {p}").unwrap();
    }
    out.push('\n');
    for (p, ls) in t.spine().iter().zip(t.leaf_sets()) {
        write!(out, "leaves {p}:").unwrap();
        for l in ls {
            write!(out, " {l}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn write_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "passed {}", report.passed).unwrap();
    writeln!(out, "dims {}", report.dims).unwrap();
    writeln!(out, "width_checked {}", report.width_checked).unwrap();
    out.push_str("layer_supergraph");
    for ok in &report.per_layer_supergraph {
        write!(out, " {ok}").unwrap();
    }
    out.push('\n');
    writeln!(out, "missing_edges {}", report.missing_edges.len()).unwrap();
    for (u, v) in &report.missing_edges {
        writeln!(out, "missing {u} {v}").unwrap();
    }
    writeln!(out, "extra_edges {}", report.extra_edges.len()).unwrap();
    for (u, v) in &report.extra_edges {
        writeln!(out, "extra {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubicity_core::{build_representation, families, to_cubes};

    #[test]
    fn graph_examples() {
        let g = parse_graph("n 3\n1 2\n2 3").unwrap();
        assert_eq!(g, families::path(3));
        assert_eq!(parse_graph("n 2").unwrap(), Graph::new(2));
        let g = parse_graph("# comment\n\nn 3\n# another\n2 1\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn graph_errors_carry_lines() {
        let err = parse_graph("n 3\n1 1").unwrap_err();
        assert!(matches!(err, Error::Line { line: 2, .. }));
        assert_eq!(err.kind(), "validation");
        let err = parse_graph("n 3\n1 2\n1 4").unwrap_err();
        assert!(matches!(err, Error::Line { line: 3, .. }));
        assert_eq!(err.kind(), "range");
        let err = parse_graph("n 3\n1 2 3").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(matches!(
            parse_graph("x 3"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("n 3\n1 b"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn graph_round_trip() {
        let g = families::complete_bipartite(2, 3);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn ordering_round_trip() {
        let ord = LinearOrdering::from_sequence(vec![1, 2, 4, 3]).unwrap();
        let text = write_ordering(&ord, Some(2));
        assert_eq!(text, "order 1 2 4 3\nwidth 2\n");
        assert_eq!(parse_ordering(&text).unwrap(), ord);
        assert!(parse_ordering("order 1 1").is_err());
        assert!(parse_ordering("width 2").is_err());
    }

    #[test]
    fn representation_text_is_exact() {
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        let rep = build_representation(&g, &LinearOrdering::identity(3)).unwrap();
        let text = write_representation(&rep);
        assert_eq!(
            text,
            "representation n 3 width 1\norder 1 2 3\n\
             layer 0 length 1/1\nv 1 1/1\nv 2 2/1\nv 3 28/9\n\
             layer 1 length 2/1\nv 1 0/1\nv 2 1/1\nv 3 2/1\n"
        );
        let back = parse_representation(&text).unwrap();
        assert_eq!(back.dims(), 2);
        for (a, b) in back.layers().iter().zip(rep.layers()) {
            assert_eq!(a.interval_length(), b.interval_length());
            for v in 1..=3 {
                assert_eq!(a.value(v), b.value(v));
            }
        }
        assert_eq!(back.ordering(), rep.ordering());
    }

    #[test]
    fn representation_parse_errors() {
        assert!(parse_representation("representation n 2 width 1\nv 1 0").is_err());
        assert!(
            parse_representation("representation n 2 width 1\nlayer 0 length 1\nv 1 0").is_err()
        );
        assert!(
            parse_representation("representation n 2 width 1\nlayer 0 length 1\nv 3 0\nv 1 0")
                .is_err()
        );
        assert!(
            parse_representation("representation n 1 width 0\nlayer 0 length 1/0\nv 1 0").is_err()
        );
        let ok = parse_representation(
            "representation n 2 width 0\nlayer 0 length 1\nv 2 4\nv 1 2\ncubes n 2 k 1\n",
        )
        .unwrap();
        assert_eq!(ok.layers()[0].value(2), Rational::from_integer(4));
    }

    #[test]
    fn cube_text() {
        let rep = build_representation(&families::path(3), &LinearOrdering::identity(3)).unwrap();
        let text = write_cubes(&to_cubes(&rep).unwrap());
        assert_eq!(
            text,
            "cubes n 3 k 2\nv 1 1/1 0/1\nv 2 2/1 1/2\nv 3 3/1 1/1\n"
        );
    }

    #[test]
    fn arc_orientation_caterpillar_round_trips() {
        let model = ArcModel::new(8, vec![(6, 1), (0, 3), (4, 5)]).unwrap();
        let text = write_arc_model(&model);
        assert_eq!(text, "arcs 3 8\n1 6 1\n2 0 3\n3 4 5\n");
        assert_eq!(parse_arc_model(&text).unwrap(), model);
        assert!(parse_arc_model("arcs 2 8\n1 0 3").is_err());
        assert!(parse_arc_model("arcs 1 8\n1 0 3\n1 4 5").is_err());
        assert!(parse_arc_model("arcs 2 8\n1 0 3\n2 3 5").is_err());

        let o = Orientation::new(vec![(1, 3), (2, 4)]);
        assert_eq!(write_orientation(&o), "1 < 3\n2 < 4\n");
        assert_eq!(parse_orientation(&write_orientation(&o)).unwrap(), o);
        assert!(parse_orientation("1 > 3").is_err());

        let t = Caterpillar::new(vec![2, 5], vec![vec![1, 3], vec![]]).unwrap();
        let text = write_caterpillar(&t);
        assert_eq!(text, "spine 2 5\nleaves 2: 1 3\nleaves 5:\n");
        assert_eq!(parse_caterpillar(&text).unwrap(), t);
        assert_eq!(parse_caterpillar("spine 2 5\nleaves 2: 1 3").unwrap(), t);
        assert!(parse_caterpillar("spine 2\nleaves 4: 1").is_err());
    }

    #[test]
    fn report_text() {
        let report = VerificationReport {
            passed: false,
            missing_edges: vec![],
            extra_edges: vec![(2, 4)],
            per_layer_supergraph: vec![true, true],
            dims: 2,
            width_checked: 2,
        };
        assert_eq!(
            write_report(&report),
            "passed false\ndims 2\nwidth_checked 2\nlayer_supergraph true true\n\
             missing_edges 0\nextra_edges 1\nextra 2 4\n"
        );
    }
}
