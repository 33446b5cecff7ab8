//! Machine-readable output: json-lines records and CSV tables.
//!
//! Every float in json-lines is written with 17 significant digits and parsed
//! back with correct rounding, so records round-trip bit for bit.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use jetframe::verify::CheckReport;
use jetframe::{Branch, FrameKind, InvariantTable};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// A float that also carries `NaN` and infinities, which JSON numbers cannot.
#[derive(Debug, Clone, Copy)]
pub struct Num(pub f64);

impl PartialEq for Num {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits() || (self.0.is_nan() && other.0.is_nan())
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_finite() {
            write!(f, "{:.16e}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            s.serialize_f64(self.0)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct NumVisitor;

        impl Visitor<'_> for NumVisitor {
            type Value = Num;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a number or one of \"NaN\", \"inf\", \"-inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Num, E> {
                Ok(Num(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Num, E> {
                Ok(Num(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Num, E> {
                Ok(Num(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Num, E> {
                match v {
                    "NaN" => Ok(Num(f64::NAN)),
                    "inf" => Ok(Num(f64::INFINITY)),
                    "-inf" => Ok(Num(f64::NEG_INFINITY)),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }

        d.deserialize_any(NumVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "kebab-case")]
pub enum OutputRecord {
    Table(TableRecord),
    Check(CheckRecord),
    Summary(SummaryRecord),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub alpha: [usize; 2],
    pub value: Num,
    /// Pinned by the cross-section rather than computed.
    pub phantom: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRecord {
    pub solution: String,
    pub parameters: BTreeMap<String, Num>,
    pub t0: Num,
    pub x0: Num,
    pub frame: FrameKind,
    pub branch: Branch,
    pub pivot_name: String,
    pub pivot: Num,
    pub order: usize,
    pub entries: Vec<Entry>,
    /// `±1 + I_03` for the `U_T`-frame, `I_10 + I_03` for the `U_X`-frame; needs order 3.
    pub invariantized_kdv_residual: Option<Num>,
}

impl TableRecord {
    pub fn new(
        solution: String,
        parameters: BTreeMap<String, f64>,
        (t0, x0): (f64, f64),
        table: &InvariantTable,
    ) -> Self {
        TableRecord {
            solution,
            parameters: parameters.into_iter().map(|(k, v)| (k, Num(v))).collect(),
            t0: Num(t0),
            x0: Num(x0),
            frame: table.kind,
            branch: table.branch,
            pivot_name: table.kind.pivot_kind().to_string(),
            pivot: Num(table.pivot),
            order: table.order,
            entries: table
                .iter()
                .map(|(alpha, value)| Entry {
                    alpha: [alpha.t, alpha.x],
                    value: Num(value),
                    phantom: table.is_phantom(alpha),
                })
                .collect(),
            invariantized_kdv_residual: table.invariantized_kdv_residual().ok().map(Num),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub passed: bool,
    pub samples: usize,
    pub max_defect: Num,
    pub tolerance: Num,
    pub seed: u64,
    pub order: usize,
    pub redraws: usize,
    pub breakdown: BTreeMap<String, Num>,
    pub warning: Option<String>,
}

impl CheckRecord {
    pub fn new(report: &CheckReport, order: usize) -> Self {
        CheckRecord {
            suite: report.name.clone(),
            passed: report.passed,
            samples: report.samples,
            max_defect: Num(report.max_defect),
            tolerance: Num(report.tolerance),
            seed: report.seed,
            order,
            redraws: report.redraws,
            breakdown: report
                .breakdown
                .iter()
                .map(|(k, v)| (k.clone(), Num(*v)))
                .collect(),
            warning: report.warning.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub passed: bool,
    pub seed: u64,
    pub order: usize,
    pub suites: usize,
    pub failed: Vec<String>,
}

struct FullPrecision;

impl serde_json::ser::Formatter for FullPrecision {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }
}

/// One json-lines line, without the trailing newline.
pub fn to_json_line(record: &OutputRecord) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FullPrecision);
    record
        .serialize(&mut ser)
        .expect("records serialize to memory");
    String::from_utf8(buf).expect("JSON output is UTF-8")
}

pub fn parse_json_line(line: &str) -> serde_json::Result<OutputRecord> {
    serde_json::from_str(line)
}

/// `# key=value` metadata lines followed by `alpha1,alpha2,value` rows.
pub fn write_table_csv(w: &mut dyn Write, record: &TableRecord) -> io::Result<()> {
    writeln!(w, "# record=table")?;
    writeln!(w, "# solution={}", record.solution)?;
    for (k, v) in &record.parameters {
        writeln!(w, "# {k}={v}")?;
    }
    writeln!(w, "# t0={}", record.t0)?;
    writeln!(w, "# x0={}", record.x0)?;
    writeln!(w, "# frame={}", record.frame)?;
    writeln!(w, "# branch={}", branch_name(record.branch))?;
    writeln!(w, "# pivot_name={}", record.pivot_name)?;
    writeln!(w, "# pivot={}", record.pivot)?;
    writeln!(w, "# order={}", record.order)?;
    if let Some(r) = record.invariantized_kdv_residual {
        writeln!(w, "# invariantized_kdv_residual={r}")?;
    }
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["alpha1", "alpha2", "value"])?;
    for e in &record.entries {
        csv.write_record([
            e.alpha[0].to_string(),
            e.alpha[1].to_string(),
            e.value.to_string(),
        ])?;
    }
    csv.flush()
}

/// One row per sub-check of every suite.
pub fn write_checks_csv(
    w: &mut dyn Write,
    checks: &[CheckRecord],
    summary: &SummaryRecord,
) -> io::Result<()> {
    writeln!(w, "# record=checks")?;
    writeln!(w, "# seed={}", summary.seed)?;
    writeln!(w, "# order={}", summary.order)?;
    writeln!(w, "# passed={}", summary.passed)?;
    for c in checks
        .iter()
        .filter_map(|c| c.warning.as_ref().map(|w| (&c.suite, w)))
    {
        writeln!(w, "# warning[{}]={}", c.0, c.1)?;
    }
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record([
        "suite",
        "check",
        "defect",
        "tolerance",
        "samples",
        "suite_passed",
    ])?;
    for c in checks {
        for (check, defect) in &c.breakdown {
            csv.write_record([
                c.suite.clone(),
                check.clone(),
                defect.to_string(),
                c.tolerance.to_string(),
                c.samples.to_string(),
                c.passed.to_string(),
            ])?;
        }
    }
    csv.flush()
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Positive => "positive",
        Branch::Negative => "negative",
    }
}
