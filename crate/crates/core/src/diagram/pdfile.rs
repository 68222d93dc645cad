//! Text format for diagrams and knot records.
//!
//! ```text
//! name trefoil
//! known c 3 reduced alternating diagram
//! # comment
//! X 1 4 2 5
//! X 3 6 4 1
//! X 5 2 6 3
//! ```
//!
//! ASCII only. `#` starts a comment, blank lines are ignored. `known` lines
//! carry an invariant symbol (c, g, gf, b, alpha), a value, and a free-form
//! provenance string. A file with no `X` lines describes the unknot.
//! Recipe lines (`braid`, `torus`, `pretzel`, `double`) are handled by the
//! fixture loader, not here; this parser accepts only literal PD data.

use thiserror::Error;

use super::{DiagramError, Known, KnotRecord, KnownInvariants, PlanarDiagram};

#[derive(Debug, Error)]
pub enum PdParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Diagram {
        line: usize,
        #[source]
        source: DiagramError,
    },
    #[error("missing `name` header")]
    MissingName,
}

/// Lines this parser leaves to the caller (fixture recipes).
pub(crate) const RECIPE_KEYWORDS: [&str; 4] = ["braid", "torus", "pretzel", "double"];

pub(crate) struct PdFile {
    pub record: KnotRecord,
    /// (line number, recipe text) in file order.
    pub recipes: Vec<(usize, String)>,
    /// line of the last X entry, for error reporting
    pub x_line: usize,
}

pub(crate) fn parse_pd_file(text: &str) -> Result<PdFile, PdParseError> {
    let mut name: Option<String> = None;
    let mut known = KnownInvariants::default();
    let mut raw: Vec<[u32; 4]> = Vec::new();
    let mut recipes = Vec::new();
    let mut x_line = 0usize;
    for (idx, full_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match full_line.find('#') {
            Some(p) => &full_line[..p],
            None => full_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let head = parts.next().unwrap();
        match head {
            "name" => {
                let rest: Vec<&str> = parts.collect();
                if rest.is_empty() {
                    return Err(PdParseError::Syntax {
                        line: line_no,
                        msg: "name line needs a value".into(),
                    });
                }
                name = Some(rest.join(" "));
            }
            "known" => {
                let field = parts.next().ok_or_else(|| PdParseError::Syntax {
                    line: line_no,
                    msg: "known line needs a field".into(),
                })?;
                let value: u32 = parts
                    .next()
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| PdParseError::Syntax {
                        line: line_no,
                        msg: "known line needs an integer value".into(),
                    })?;
                let provenance: String = parts.collect::<Vec<&str>>().join(" ");
                if provenance.is_empty() {
                    return Err(PdParseError::Syntax {
                        line: line_no,
                        msg: "known line needs a provenance string".into(),
                    });
                }
                let slot = match field {
                    "c" => &mut known.crossing_number,
                    "g" => &mut known.genus,
                    "gf" => &mut known.free_genus,
                    "b" => &mut known.braid_index,
                    "alpha" => &mut known.arc_index,
                    other => {
                        return Err(PdParseError::Syntax {
                            line: line_no,
                            msg: format!("unknown invariant field `{other}`"),
                        })
                    }
                };
                *slot = Some(Known { value, provenance });
            }
            "X" => {
                let nums: Vec<u32> = parts
                    .map(|p| {
                        p.parse().map_err(|_| PdParseError::Syntax {
                            line: line_no,
                            msg: format!("bad arc label `{p}`"),
                        })
                    })
                    .collect::<Result<_, _>>()?;
                if nums.len() != 4 {
                    return Err(PdParseError::Syntax {
                        line: line_no,
                        msg: format!("X line has {} labels, expected 4", nums.len()),
                    });
                }
                raw.push([nums[0], nums[1], nums[2], nums[3]]);
                x_line = line_no;
            }
            kw if RECIPE_KEYWORDS.contains(&kw) => {
                recipes.push((line_no, line.to_string()));
            }
            other => {
                return Err(PdParseError::Syntax {
                    line: line_no,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    let name = name.ok_or(PdParseError::MissingName)?;
    let mut diagrams = Vec::new();
    if !raw.is_empty() || recipes.is_empty() {
        let d = PlanarDiagram::validate(&raw).map_err(|source| PdParseError::Diagram {
            line: if x_line == 0 { 1 } else { x_line },
            source,
        })?;
        diagrams.push(d);
    }
    Ok(PdFile {
        record: KnotRecord {
            name,
            diagrams,
            known,
        },
        recipes,
        x_line,
    })
}

/// Parse a PD file that must contain literal crossing data only.
pub fn parse_pd_text(text: &str) -> Result<KnotRecord, PdParseError> {
    let file = parse_pd_file(text)?;
    if let Some((line, recipe)) = file.recipes.first() {
        return Err(PdParseError::Syntax {
            line: *line,
            msg: format!("recipe `{recipe}` not allowed here"),
        });
    }
    Ok(file.record)
}

/// Render a diagram (with optional record data) back to the text format.
pub fn render_pd_text(name: &str, d: &PlanarDiagram) -> String {
    let mut out = format!("name {name}\n");
    for x in d.crossings() {
        out.push_str(&format!(
            "X {} {} {} {}\n",
            x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3]
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let text = "name trefoil\nknown c 3 reduced alternating diagram\n# comment\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n";
        let rec = parse_pd_text(text).unwrap();
        assert_eq!(rec.name, "trefoil");
        assert_eq!(rec.known.crossing_number.as_ref().unwrap().value, 3);
        assert_eq!(rec.diagrams[0].crossing_count(), 3);
        let rendered = render_pd_text("trefoil", &rec.diagrams[0]);
        let again = parse_pd_text(&rendered).unwrap();
        assert_eq!(again.diagrams[0], rec.diagrams[0]);
    }

    #[test]
    fn bad_label_reports_line() {
        let text = "name x\nX 1 4 2 5\nX 3 6 4 oops\n";
        match parse_pd_text(text) {
            Err(PdParseError::Syntax { line: 3, .. }) => {}
            other => panic!("expected syntax error on line 3, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_arc_reports_diagram_error() {
        let text = "name x\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 4\n";
        match parse_pd_text(text) {
            Err(PdParseError::Diagram { line: 4, .. }) => {}
            other => panic!("expected diagram error at line 4, got {other:?}"),
        }
    }

    #[test]
    fn file_without_crossings_is_the_unknot() {
        let rec = parse_pd_text("name unknot\n").unwrap();
        assert_eq!(rec.diagrams[0].crossing_count(), 0);
        assert_eq!(rec.diagrams[0].component_count(), 1);
    }
}
