//! Plain-text formats for designs, large sets, Kramer-Mesner matrices and
//! group generators.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Parse
//! errors carry 1-based line numbers.
//!
//! ```text
//! design 2 8 3 21 2 group=singer-paper
//! [1,2,4]
//! [1,2,8]
//! ---
//! design 2 8 3 21 2 group=singer-paper
//! ...
//! ```
//!
//! Each representative is a list of packed vectors spanning a `k`-subspace;
//! it is canonicalized on input and written back as its echelon rows. For
//! `k = 3`, `q = 2` this is the integer triple used by the published tables.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf_space::{FieldParams, Subspace};
use crate::group_action::{orbit_partition, CyclicGroup, GroupElement, OrbitPartition};
use crate::kramer_mesner::KmSystem;
use crate::large_set::{Design, LargeSet};
use crate::qarith::DesignParams;

fn perr<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::Parse { line, message: other.to_string() },
    }
}

/// Non-blank, non-comment lines with 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Resolves `singer-paper`, `trivial` or `cols:c0,c1,...` over `params`.
pub fn resolve_group(id: &str, params: FieldParams) -> Result<CyclicGroup> {
    match id {
        "trivial" => Ok(CyclicGroup::trivial(params)),
        "singer-paper" => {
            if (params.q(), params.n()) != (2, 8) {
                return Err(Error::Param(format!(
                    "singer-paper acts on F_2^8, not F_{}^{}",
                    params.q(),
                    params.n()
                )));
            }
            Ok(CyclicGroup::singer_paper())
        }
        _ => {
            let Some(list) = id.strip_prefix("cols:") else {
                return Err(Error::Param(format!(
                    "unknown group '{id}' (expected singer-paper, trivial or cols:...)"
                )));
            };
            let cols = list
                .split(',')
                .map(|c| c.trim().parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Param(format!("bad generator column in '{id}': {e}")))?;
            CyclicGroup::new(GroupElement::from_columns(params, cols)?)
        }
    }
}

fn parse_key<T: std::str::FromStr>(line: usize, token: &str, key: &str) -> Result<T> {
    let Some(value) = token.strip_prefix(key).and_then(|r| r.strip_prefix('=')) else {
        return perr(line, format!("expected {key}=..., found '{token}'"));
    };
    value
        .parse()
        .or_else(|_| perr(line, format!("invalid value for {key}: '{value}'")))
}

fn parse_num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .or_else(|_| perr(line, format!("invalid {what}: '{token}'")))
}

/// One design section as written on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignSection {
    pub params: DesignParams,
    pub group: String,
    pub representatives: Vec<Subspace>,
}

impl DesignSection {
    pub fn from_design(d: &Design) -> Self {
        DesignSection {
            params: *d.params(),
            group: d.partition().group().label(),
            representatives: d.representatives().into_iter().cloned().collect(),
        }
    }

    pub fn field(&self) -> FieldParams {
        FieldParams::new(self.params.q, self.params.n).expect("validated on parse")
    }
}

pub fn format_subspace(s: &Subspace) -> String {
    let rows: Vec<String> = s.rows().iter().map(|r| r.to_string()).collect();
    format!("[{}]", rows.join(","))
}

/// Parses `[a,b,...]` (brackets optional, commas or spaces) as a
/// `k`-subspace.
pub fn parse_subspace(text: &str, params: FieldParams, k: u32) -> Result<Subspace> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let vectors = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::Param(format!("'{t}' is not a packed vector")))
        })
        .collect::<Result<Vec<_>>>()?;
    crate::gf_space::decode_rows(params, &vectors, k)
}

pub fn format_design_section(s: &DesignSection) -> String {
    let p = &s.params;
    let mut out = format!("design {} {} {} {} {} group={}\n", p.t, p.n, p.k, p.lambda, p.q, s.group);
    for r in &s.representatives {
        out.push_str(&format_subspace(r));
        out.push('\n');
    }
    out
}

pub fn format_design(d: &Design) -> String {
    format_design_section(&DesignSection::from_design(d))
}

pub fn format_large_set(ls: &LargeSet) -> String {
    ls.designs().iter().map(format_design).collect::<Vec<_>>().join("---\n")
}

fn parse_header(line: usize, text: &str) -> Result<(DesignParams, String)> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.first() != Some(&"design") || tokens.len() != 7 {
        return perr(line, "expected header 'design t n k lambda q group=<id>'");
    }
    let t = parse_num(line, tokens[1], "t")?;
    let n = parse_num(line, tokens[2], "n")?;
    let k = parse_num(line, tokens[3], "k")?;
    let lambda = parse_num(line, tokens[4], "lambda")?;
    let q = parse_num(line, tokens[5], "q")?;
    let group: String = parse_key(line, tokens[6], "group")?;
    FieldParams::new(q, n).map_err(|e| at_line(line, e))?;
    let params = DesignParams::new(t, n, k, lambda, q).map_err(|e| at_line(line, e))?;
    Ok((params, group))
}

/// Parses one or more design sections separated by `---`.
pub fn parse_design_sections(text: &str) -> Result<Vec<DesignSection>> {
    let mut sections: Vec<DesignSection> = Vec::new();
    let mut open = false;
    let mut last_line = 0;
    for (line, l) in content_lines(text) {
        last_line = line;
        if l == "---" {
            if !open {
                return perr(line, "section separator without a preceding design");
            }
            open = false;
            continue;
        }
        if !open {
            let (params, group) = parse_header(line, l)?;
            sections.push(DesignSection { params, group, representatives: Vec::new() });
            open = true;
            continue;
        }
        let s = sections.last_mut().expect("open section");
        let rep = parse_subspace(l, s.field(), s.params.k).map_err(|e| at_line(line, e))?;
        s.representatives.push(rep);
    }
    if sections.is_empty() {
        return perr(last_line.max(1), "no design section found");
    }
    if !open {
        return perr(last_line, "trailing section separator");
    }
    Ok(sections)
}

/// Maps each representative to its orbit in `partition`.
pub fn design_from_section(s: &DesignSection, partition: &Arc<OrbitPartition>) -> Result<Design> {
    let group = resolve_group(&s.group, s.field())?;
    if group != *partition.group() || partition.k() != s.params.k {
        return Err(Error::Param(format!(
            "section group {} does not match partition group {}",
            s.group,
            partition.group().label()
        )));
    }
    let ids = s
        .representatives
        .iter()
        .map(|r| partition.orbit_of(r).ok_or_else(|| Error::DataIntegrity(format!("{r} not in the partition"))))
        .collect::<Result<Vec<_>>>()?;
    Design::new(s.params, partition.clone(), ids)
}

/// Parses sections, builds the orbit partition of the first section's
/// group once and resolves every design against it.
pub fn load_designs(text: &str) -> Result<Vec<Design>> {
    let sections = parse_design_sections(text)?;
    let first = &sections[0];
    let group = resolve_group(&first.group, first.field())?;
    let partition = Arc::new(orbit_partition(&group, first.params.k)?);
    sections.iter().map(|s| design_from_section(s, &partition)).collect()
}

pub fn load_large_set(text: &str) -> Result<LargeSet> {
    LargeSet::new(load_designs(text)?)
}

/// Contents of a Kramer-Mesner matrix file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KmMatrixFile {
    pub t: u32,
    pub k: u32,
    pub n: u32,
    pub q: u32,
    pub lambda: u64,
    pub group: String,
    pub matrix: Vec<Vec<u16>>,
    pub excluded: Vec<bool>,
}

impl KmMatrixFile {
    pub fn from_system(s: &KmSystem) -> Self {
        KmMatrixFile {
            t: s.t(),
            k: s.k(),
            n: s.params().n(),
            q: s.params().q(),
            lambda: s.lambda(),
            group: s.group().label(),
            matrix: (0..s.row_count()).map(|r| s.row(r).to_vec()).collect(),
            excluded: s.excluded().to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.excluded.len()
    }
}

/// `km rows=R cols=C lambda=L t=T k=K n=N q=Q group=<id>`, then `R` lines
/// of `C` entries, then `excluded` followed by `C` zeros and ones.
pub fn format_km(m: &KmMatrixFile) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "km rows={} cols={} lambda={} t={} k={} n={} q={} group={}",
        m.rows(),
        m.cols(),
        m.lambda,
        m.t,
        m.k,
        m.n,
        m.q,
        m.group
    );
    for row in &m.matrix {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out.push_str("excluded");
    for &e in &m.excluded {
        out.push_str(if e { " 1" } else { " 0" });
    }
    out.push('\n');
    out
}

pub fn parse_km(text: &str) -> Result<KmMatrixFile> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return perr(1, "empty matrix file");
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 9 || tokens[0] != "km" {
        return perr(hl, "expected header 'km rows= cols= lambda= t= k= n= q= group='");
    }
    let rows: usize = parse_key(hl, tokens[1], "rows")?;
    let cols: usize = parse_key(hl, tokens[2], "cols")?;
    let mut m = KmMatrixFile {
        lambda: parse_key(hl, tokens[3], "lambda")?,
        t: parse_key(hl, tokens[4], "t")?,
        k: parse_key(hl, tokens[5], "k")?,
        n: parse_key(hl, tokens[6], "n")?,
        q: parse_key(hl, tokens[7], "q")?,
        group: parse_key(hl, tokens[8], "group")?,
        matrix: Vec::with_capacity(rows),
        excluded: Vec::new(),
    };
    let mut last = hl;
    for _ in 0..rows {
        let Some((line, l)) = lines.next() else {
            return perr(last, format!("expected {rows} matrix rows"));
        };
        last = line;
        let row = l
            .split_whitespace()
            .map(|t| parse_num(line, t, "matrix entry"))
            .collect::<Result<Vec<u16>>>()?;
        if row.len() != cols {
            return perr(line, format!("row has {} entries, expected {cols}", row.len()));
        }
        m.matrix.push(row);
    }
    let Some((line, l)) = lines.next() else {
        return perr(last, "missing 'excluded' trailer");
    };
    let mut tokens = l.split_whitespace();
    if tokens.next() != Some("excluded") {
        return perr(line, "expected 'excluded' trailer");
    }
    m.excluded = tokens
        .map(|t| match t {
            "0" => Ok(false),
            "1" => Ok(true),
            _ => perr(line, format!("mask entries are 0 or 1, found '{t}'")),
        })
        .collect::<Result<_>>()?;
    if m.excluded.len() != cols {
        return perr(line, format!("mask has {} entries, expected {cols}", m.excluded.len()));
    }
    if let Some((line, _)) = lines.next() {
        return perr(line, "unexpected content after the trailer");
    }
    Ok(m)
}

/// `generator n=N q=Q`, then for `q = 2` one line of `n` packed columns, and
/// otherwise `n` lines of `n` row entries.
pub fn format_generator(g: &GroupElement) -> String {
    let p = g.params();
    let mut out = format!("generator n={} q={}\n", p.n(), p.q());
    if p.q() == 2 {
        let cols: Vec<String> = g.columns().iter().map(|c| c.to_string()).collect();
        out.push_str(&cols.join(" "));
        out.push('\n');
    } else {
        for i in 0..p.n() {
            let row: Vec<String> = (0..p.n()).map(|j| g.entry(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_generator(text: &str) -> Result<GroupElement> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return perr(1, "empty generator file");
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "generator" {
        return perr(hl, "expected header 'generator n=N q=Q'");
    }
    let n: u32 = parse_key(hl, tokens[1], "n")?;
    let q: u32 = parse_key(hl, tokens[2], "q")?;
    let params = FieldParams::new(q, n).map_err(|e| at_line(hl, e))?;
    let body: Vec<(usize, &str)> = lines.collect();
    let last = body.last().map_or(hl, |b| b.0);
    let g = if q == 2 {
        let [(line, l)] = body[..] else {
            return perr(last, "expected exactly one line of packed columns");
        };
        let cols = l
            .split_whitespace()
            .map(|t| parse_num(line, t, "column"))
            .collect::<Result<Vec<u64>>>()?;
        GroupElement::from_columns(params, cols).map_err(|e| at_line(line, e))?
    } else {
        if body.len() != n as usize {
            return perr(last, format!("expected {n} matrix rows, found {}", body.len()));
        }
        let rows = body
            .iter()
            .map(|&(line, l)| {
                l.split_whitespace()
                    .map(|t| parse_num(line, t, "entry"))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GroupElement::from_entries(params, &rows).map_err(|e| at_line(last, e))?
    };
    Ok(g)
}
