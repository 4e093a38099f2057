//! Verification reports and their JSON/CSV serialization.
//!
//! Every report flattens to rows with the fixed columns
//! `identity_label, n, lhs, rhs, status`.

use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// How `lhs` and `rhs` of a record are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    /// `lhs <= rhs`
    AtMost,
    /// `lhs >= rhs`
    AtLeast,
}

impl Relation {
    pub fn holds(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Equal => lhs == rhs,
            Relation::AtMost => lhs <= rhs,
            Relation::AtLeast => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        }
    }
}

fn big_as_number<S: Serializer>(value: &BigInt, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    let number: serde_json::Number = value.to_string().parse().map_err(serde::ser::Error::custom)?;
    number.serialize(serializer)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub n: i64,
    #[serde(serialize_with = "big_as_number")]
    pub lhs: BigInt,
    #[serde(serialize_with = "big_as_number")]
    pub rhs: BigInt,
    pub status: Status,
}

/// One identity checked over a range of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity_label: String,
    pub relation: Relation,
    pub start: i64,
    pub end: i64,
    pub records: Vec<Record>,
    /// First failing record, if any.
    pub witness: Option<Record>,
    /// Largest `n` below the stated threshold where the identity fails.
    pub failure_below_threshold: Option<i64>,
}

impl VerificationReport {
    pub fn new(identity_label: impl Into<String>, relation: Relation, start: i64, end: i64) -> Self {
        Self {
            identity_label: identity_label.into(),
            relation,
            start,
            end,
            records: Vec::new(),
            witness: None,
            failure_below_threshold: None,
        }
    }

    /// Appends a comparison; records must arrive in increasing `n`.
    pub fn push(&mut self, n: i64, lhs: BigInt, rhs: BigInt) {
        let pass = self.relation.holds(&lhs, &rhs);
        self.push_outcome(n, lhs, rhs, pass);
    }

    /// Like [`push`](Self::push) with the outcome decided by the caller.
    pub fn push_outcome(&mut self, n: i64, lhs: BigInt, rhs: BigInt, pass: bool) {
        let status = if pass { Status::Pass } else { Status::Fail };
        let record = Record { n, lhs, rhs, status };
        if status == Status::Fail && self.witness.is_none() {
            self.witness = Some(record.clone());
        }
        self.records.push(record);
    }

    pub fn status(&self) -> Status {
        if self.witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn rows(&self) -> impl Iterator<Item = Row<'_>> {
        self.records.iter().map(move |r| Row {
            identity_label: &self.identity_label,
            n: r.n,
            lhs: &r.lhs,
            rhs: &r.rhs,
            status: r.status,
        })
    }

    /// One-line summary, e.g. `PASS  s_4 = q-expansion  [7, 200]`.
    pub fn summary(&self) -> String {
        let mut line = format!("{}  {}  [{}, {}]", self.status(), self.identity_label, self.start, self.end);
        if let Some(w) = &self.witness {
            line.push_str(&format!(
                "  first failure n={} lhs={} rhs={}",
                w.n, w.lhs, w.rhs
            ));
        }
        line
    }
}

/// Flat `identity_label, n, lhs, rhs, status` row.
#[derive(Clone, Debug, Serialize)]
pub struct Row<'a> {
    pub identity_label: &'a str,
    pub n: i64,
    #[serde(serialize_with = "big_as_number")]
    pub lhs: &'a BigInt,
    #[serde(serialize_with = "big_as_number")]
    pub rhs: &'a BigInt,
    pub status: Status,
}

pub fn write_csv<'a, W: Write>(out: W, reports: impl IntoIterator<Item = &'a VerificationReport>) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["identity_label", "n", "lhs", "rhs", "status"])?;
    for report in reports {
        for row in report.rows() {
            writer.write_record([
                row.identity_label.to_string(),
                row.n.to_string(),
                row.lhs.to_string(),
                row.rhs.to_string(),
                row.status.to_string(),
            ])?;
        }
    }
    writer.flush()?;
    Ok(())
}

/// JSON array of flat rows.
pub fn write_json<'a, W: Write>(mut out: W, reports: impl IntoIterator<Item = &'a VerificationReport>) -> Result<()> {
    let rows: Vec<Row<'_>> = reports.into_iter().flat_map(|r| r.rows()).collect();
    serde_json::to_writer_pretty(&mut out, &rows)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report() -> VerificationReport {
        let mut r = VerificationReport::new("s_5 [published]", Relation::Equal, 11, 12);
        r.push(11, BigInt::from(-2), BigInt::from(2));
        r.push(12, BigInt::from(2), BigInt::from(2));
        r
    }

    #[test]
    fn witness_is_first_failure() {
        let r = report();
        assert_eq!(r.status(), Status::Fail);
        let w = r.witness.as_ref().unwrap();
        assert_eq!((w.n, w.lhs.clone(), w.rhs.clone()), (11, BigInt::from(-2), BigInt::from(2)));
    }

    #[test]
    fn relations() {
        let (a, b) = (BigInt::from(1), BigInt::from(2));
        assert!(Relation::AtMost.holds(&a, &b));
        assert!(!Relation::AtLeast.holds(&a, &b));
        assert!(Relation::Equal.holds(&a, &a));
    }

    #[test]
    fn csv_schema() {
        let mut buf = Vec::new();
        write_csv(&mut buf, [&report()]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "identity_label,n,lhs,rhs,status\ns_5 [published],11,-2,2,FAIL\ns_5 [published],12,2,2,PASS\n"
        );
    }

    #[test]
    fn json_numbers_stay_exact() {
        let mut r = VerificationReport::new("big", Relation::Equal, 0, 0);
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        r.push(0, huge.clone(), huge);
        let mut buf = Vec::new();
        write_json(&mut buf, [&r]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\"lhs\": 123456789012345678901234567890"));
        assert!(text.contains("\"status\": \"PASS\""));
    }
}
