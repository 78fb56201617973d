//! JSON file formats for the pipeline: points, polytopes, matrix sets,
//! classifications, lifts and invariant reports.
//!
//! Every writer is deterministic (fixed field order, sorted collections), so
//! identical inputs produce byte-identical files regardless of worker count.

use std::path::Path;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{
    check_dehn_sommerville, f_vector, format_rational, h_vector, neighborliness, parse_rational,
    CombinatoricsError, PointSet, SimplePolytope,
};
use crate::gf2::{quick_obstruction, CharMatrixZ2, EnumerationReport, Gf2Error, Obstruction};
use crate::invariants::{chromatic_number, facet_adjacency, minimal_nonfaces, InvariantsError};
use crate::lift::CharMatrixZ;
use crate::symmetry::{AutGroup, OrbitClassification};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
    #[error("{0}")]
    Invalid(String),
}

/// Canonical polytope file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub name: String,
    pub dim: usize,
    pub num_facets: usize,
    pub vertices: Vec<Vec<usize>>,
}

/// Rational coordinates, `"p/q"` or `"p"` per entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointsFile {
    pub dim: usize,
    pub points: Vec<Vec<String>>,
}

/// Output of the Z2 enumeration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatricesFile {
    pub polytope: String,
    pub ring: String,
    pub n: usize,
    pub m: usize,
    pub matrices: Vec<Vec<Vec<u8>>>,
}

/// Output of the orbit classification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationFile {
    pub polytope: String,
    pub aut_order: usize,
    pub generators: Vec<Vec<usize>>,
    pub orbits: Vec<Vec<usize>>,
    pub representatives: Vec<Vec<Vec<u8>>>,
}

/// One lift search result per source matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LiftEntry {
    Found {
        source_index: usize,
        matrix: Vec<Vec<i64>>,
    },
    NotFound {
        source_index: usize,
        status: String,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiftFile {
    pub polytope: String,
    pub ring: String,
    pub bound: i64,
    pub lifts: Vec<LiftEntry>,
}

/// Invariant report for a single polytope.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvariantReportFile {
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub neighborly_k: usize,
    pub chi: u32,
    pub obstruction_2n: bool,
    pub sr_generators: Vec<Vec<usize>>,
    pub betti: Vec<i64>,
}

pub const NO_LIFT_STATUS: &str = "no_lift_within_bound";

// ---------------------------------------------------------------- points

pub fn points_from_json(text: &str) -> Result<PointSet, IoError> {
    let file: PointsFile = serde_json::from_str(text)?;
    let points = file
        .points
        .iter()
        .map(|coords| coords.iter().map(|s| parse_rational(s)).collect())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PointSet::new(file.dim, points)?)
}

pub fn load_points(path: &Path) -> Result<PointSet, IoError> {
    points_from_json(&std::fs::read_to_string(path)?)
}

pub fn points_to_json(pts: &PointSet) -> String {
    let file = PointsFile {
        dim: pts.dim(),
        points: pts
            .points()
            .iter()
            .map(|p| p.iter().map(format_rational).collect())
            .collect(),
    };
    pretty(&file)
}

// ---------------------------------------------------------------- polytopes

/// Parses and normalizes a polytope file; duplicate vertex sets are rejected
/// with a diagnostic naming the duplicate.
pub fn polytope_from_json(text: &str) -> Result<SimplePolytope, IoError> {
    let file: PolytopeFile = serde_json::from_str(text)?;
    Ok(SimplePolytope::normalized(
        file.name,
        file.dim,
        file.num_facets,
        &file.vertices,
    )?)
}

pub fn load_polytope(path: &Path) -> Result<SimplePolytope, IoError> {
    polytope_from_json(&std::fs::read_to_string(path)?)
}

pub fn polytope_to_json(p: &SimplePolytope) -> String {
    let file = PolytopeFile {
        name: p.name().to_string(),
        dim: p.dim(),
        num_facets: p.num_facets(),
        vertices: p.vertex_sets(),
    };
    pretty(&file)
}

// ---------------------------------------------------------------- matrices

pub fn matrices_to_json(report: &EnumerationReport, n: usize, m: usize) -> String {
    let file = MatricesFile {
        polytope: report.polytope.clone(),
        ring: "Z2".to_string(),
        n,
        m,
        matrices: report.matrices.iter().map(|mat| mat.rows()).collect(),
    };
    pretty(&file)
}

/// Reads a matrices file back into a report; matrices are re-sorted into
/// canonical order and search telemetry is absent (zeroed).
pub fn matrices_from_json(text: &str) -> Result<EnumerationReport, IoError> {
    let file: MatricesFile = serde_json::from_str(text)?;
    if file.ring != "Z2" {
        return Err(IoError::Invalid(format!(
            "expected ring \"Z2\", got {:?}",
            file.ring
        )));
    }
    let mut matrices = Vec::with_capacity(file.matrices.len());
    for rows in &file.matrices {
        let mat = CharMatrixZ2::from_rows(rows)?;
        if mat.n() != file.n || mat.m() != file.m {
            return Err(IoError::Invalid(format!(
                "matrix is {}x{}, header says {}x{}",
                mat.n(),
                mat.m(),
                file.n,
                file.m
            )));
        }
        matrices.push(mat);
    }
    matrices.sort();
    Ok(EnumerationReport {
        polytope: file.polytope,
        matrices,
        nodes_explored: 0,
        wall_time: Duration::ZERO,
    })
}

pub fn load_matrices(path: &Path) -> Result<EnumerationReport, IoError> {
    matrices_from_json(&std::fs::read_to_string(path)?)
}

// ---------------------------------------------------------------- classification

pub fn classification_to_json(
    polytope: &str,
    group: &AutGroup,
    classes: &OrbitClassification,
) -> String {
    let file = ClassificationFile {
        polytope: polytope.to_string(),
        aut_order: group.order(),
        generators: group
            .generators()
            .iter()
            .map(|g| g.images().to_vec())
            .collect(),
        orbits: classes.orbits.clone(),
        representatives: classes.representatives.iter().map(|m| m.rows()).collect(),
    };
    pretty(&file)
}

// ---------------------------------------------------------------- lifts

pub fn lift_entries(results: &[Option<CharMatrixZ>]) -> Vec<LiftEntry> {
    results
        .iter()
        .enumerate()
        .map(|(i, r)| match r {
            Some(m) => LiftEntry::Found {
                source_index: i,
                matrix: m.rows(),
            },
            None => LiftEntry::NotFound {
                source_index: i,
                status: NO_LIFT_STATUS.to_string(),
            },
        })
        .collect()
}

pub fn lifts_to_json(polytope: &str, bound: i64, results: &[Option<CharMatrixZ>]) -> String {
    let file = LiftFile {
        polytope: polytope.to_string(),
        ring: "Z".to_string(),
        bound,
        lifts: lift_entries(results),
    };
    pretty(&file)
}

// ---------------------------------------------------------------- invariants

pub fn invariant_report(p: &SimplePolytope) -> Result<InvariantReportFile, IoError> {
    let f = f_vector(p);
    let h = h_vector(&f);
    debug_assert!(check_dehn_sommerville(&h));
    let chi = chromatic_number(&facet_adjacency(p))?;
    Ok(InvariantReportFile {
        f: f.entries().to_vec(),
        h: h.entries().to_vec(),
        neighborly_k: neighborliness(p),
        chi,
        obstruction_2n: quick_obstruction(p) == Obstruction::Blocked,
        sr_generators: minimal_nonfaces(p),
        betti: h.entries().to_vec(),
    })
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    pretty(value)
}
