//! Catalog emission in CSV, JSON and Markdown.
//!
//! Every table is first flattened into rows of strings in a fixed column
//! order; the three formats then differ only in framing. JSON keeps numbers
//! and lists typed, with keys in column order.

use std::io::{self, Write};

use clap::ValueEnum;
use fk3_core::census::SurfaceRecord;
use fk3_core::singularity::Relation;
use fk3_core::{FamilyRecord, Stratum, WeightSystem};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum CatalogFormat {
    #[default]
    Csv,
    Json,
    #[value(name = "md", alias = "markdown")]
    Markdown,
}

fn space_joined<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn dash_if_empty(s: String) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        s
    }
}

/// One fourfold row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub index: usize,
    pub weights: Vec<i64>,
    pub d: i64,
    pub h22_total: i64,
    pub h22_primitive: i64,
    pub sing_dim: i64,
    pub sing_class: &'static str,
    pub association_k3: Option<Vec<i64>>,
    pub rationality: &'static str,
    pub tags: Vec<&'static str>,
}

impl FamilyRow {
    pub const HEADER: [&'static str; 10] = [
        "index",
        "weights",
        "d",
        "h22_total",
        "h22_primitive",
        "sing_dim",
        "sing_class",
        "association_k3",
        "rationality",
        "tags",
    ];

    pub fn new(index: usize, r: &FamilyRecord) -> Self {
        FamilyRow {
            index,
            weights: r.ws.weights().to_vec(),
            d: r.ws.degree(),
            h22_total: r.hodge.middle_total,
            h22_primitive: r.hodge.middle_primitive(),
            sing_dim: r.sing_dim,
            sing_class: r.sing_class.as_str(),
            association_k3: r.association.as_ref().map(|a| a.k3.weights().to_vec()),
            rationality: r.rationality.as_str(),
            tags: r.tags.iter().map(|t| t.as_str()).collect(),
        }
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.index.to_string(),
            space_joined(&self.weights),
            self.d.to_string(),
            self.h22_total.to_string(),
            self.h22_primitive.to_string(),
            self.sing_dim.to_string(),
            self.sing_class.into(),
            dash_if_empty(
                self.association_k3
                    .as_ref()
                    .map(space_joined)
                    .unwrap_or_default(),
            ),
            self.rationality.into(),
            dash_if_empty(space_joined(&self.tags)),
        ]
    }
}

/// One K3 surface row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceRow {
    pub index: usize,
    pub weights: Vec<i64>,
    pub d: i64,
    pub h20: i64,
    pub h11_primitive: i64,
    pub sing_dim: i64,
    pub sing_class: &'static str,
    pub singular_strata: usize,
}

impl SurfaceRow {
    pub const HEADER: [&'static str; 8] = [
        "index",
        "weights",
        "d",
        "h20",
        "h11_primitive",
        "sing_dim",
        "sing_class",
        "singular_strata",
    ];

    pub fn new(index: usize, r: &SurfaceRecord) -> Self {
        SurfaceRow {
            index,
            weights: r.ws.weights().to_vec(),
            d: r.ws.degree(),
            h20: r.hodge.primitive[0],
            h11_primitive: r.hodge.middle_primitive(),
            sing_dim: r.sing_dim,
            sing_class: r.sing_class.as_str(),
            singular_strata: r.strata.iter().filter(|s| s.meets_x()).count(),
        }
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.index.to_string(),
            space_joined(&self.weights),
            self.d.to_string(),
            self.h20.to_string(),
            self.h11_primitive.to_string(),
            self.sing_dim.to_string(),
            self.sing_class.into(),
            self.singular_strata.to_string(),
        ]
    }
}

/// One orbifold stratum of a single hypersurface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumRow {
    pub r: i64,
    pub indices: Vec<usize>,
    pub relation: &'static str,
    pub tangent_index: Option<usize>,
    pub tangent_weight: Option<i64>,
    pub ambient_type: String,
    pub transverse_type: String,
    pub locus_dim: i64,
    pub class: Option<&'static str>,
}

impl StratumRow {
    pub const HEADER: [&'static str; 9] = [
        "r",
        "indices",
        "relation",
        "tangent_index",
        "tangent_weight",
        "ambient_type",
        "transverse_type",
        "locus_dim",
        "class",
    ];

    pub fn new(ws: &WeightSystem, s: &Stratum) -> Self {
        let tangent_index = s.tangent_index();
        StratumRow {
            r: s.r,
            indices: s.indices.iter().collect(),
            relation: match s.relation {
                Relation::Unresolved => "unresolved",
                Relation::Contained { .. } => "contained",
                Relation::Cut => "cut",
                Relation::Disjoint => "disjoint",
            },
            tangent_index,
            tangent_weight: tangent_index.map(|j| ws.weights()[j]),
            ambient_type: s.ambient.to_string(),
            transverse_type: s.transverse.to_string(),
            locus_dim: s.locus_dim,
            class: s
                .meets_x()
                .then(|| fk3_core::reid_tai_classify(&s.transverse).as_str()),
        }
    }

    fn cells(&self) -> Vec<String> {
        let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        vec![
            self.r.to_string(),
            space_joined(&self.indices),
            self.relation.into(),
            opt(self.tangent_index.map(|j| j.to_string())),
            opt(self.tangent_weight.map(|a| a.to_string())),
            self.ambient_type.clone(),
            self.transverse_type.clone(),
            self.locus_dim.to_string(),
            opt(self.class.map(String::from)),
        ]
    }
}

/// Quotes a CSV field only when it needs it; catalog fields never do.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn write_table<W: Write + ?Sized, R: Serialize>(
    out: &mut W,
    fmt: CatalogFormat,
    header: &[&str],
    rows: &[R],
    cells: impl Fn(&R) -> Vec<String>,
) -> io::Result<()> {
    match fmt {
        CatalogFormat::Csv => {
            writeln!(out, "{}", header.join(","))?;
            for row in rows {
                let line: Vec<String> = cells(row).iter().map(|c| csv_field(c)).collect();
                writeln!(out, "{}", line.join(","))?;
            }
        }
        CatalogFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, rows).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        CatalogFormat::Markdown => {
            writeln!(out, "| {} |", header.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(header.len()))?;
            for row in rows {
                writeln!(out, "| {} |", cells(row).join(" | "))?;
            }
        }
    }
    Ok(())
}

pub fn family_rows(records: &[FamilyRecord]) -> Vec<FamilyRow> {
    records
        .iter()
        .enumerate()
        .map(|(i, r)| FamilyRow::new(i + 1, r))
        .collect()
}

/// Writes a fourfold catalog; `records` are expected in census order.
pub fn emit_catalog<W: Write + ?Sized>(
    out: &mut W,
    records: &[FamilyRecord],
    fmt: CatalogFormat,
) -> io::Result<()> {
    write_table(
        out,
        fmt,
        &FamilyRow::HEADER,
        &family_rows(records),
        FamilyRow::cells,
    )
}

pub fn emit_k3_catalog<W: Write + ?Sized>(
    out: &mut W,
    records: &[SurfaceRecord],
    fmt: CatalogFormat,
) -> io::Result<()> {
    let rows: Vec<SurfaceRow> = records
        .iter()
        .enumerate()
        .map(|(i, r)| SurfaceRow::new(i + 1, r))
        .collect();
    write_table(out, fmt, &SurfaceRow::HEADER, &rows, SurfaceRow::cells)
}

pub fn emit_strata<W: Write + ?Sized>(
    out: &mut W,
    ws: &WeightSystem,
    strata: &[Stratum],
    fmt: CatalogFormat,
) -> io::Result<()> {
    let rows: Vec<StratumRow> = strata.iter().map(|s| StratumRow::new(ws, s)).collect();
    write_table(out, fmt, &StratumRow::HEADER, &rows, StratumRow::cells)
}

/// Weight systems only, one `weights,d` row each.
pub fn emit_weight_list<W: Write + ?Sized>(
    out: &mut W,
    list: &[WeightSystem],
    fmt: CatalogFormat,
) -> io::Result<()> {
    #[derive(Serialize)]
    struct Row {
        index: usize,
        weights: Vec<i64>,
        d: i64,
    }
    let rows: Vec<Row> = list
        .iter()
        .enumerate()
        .map(|(i, w)| Row {
            index: i + 1,
            weights: w.weights().to_vec(),
            d: w.degree(),
        })
        .collect();
    write_table(out, fmt, &["index", "weights", "d"], &rows, |r| {
        vec![
            r.index.to_string(),
            space_joined(&r.weights),
            r.d.to_string(),
        ]
    })
}
