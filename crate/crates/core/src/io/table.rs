//! CSV tables of equation rows.

use crate::error::{Error, Result};
use crate::system::EquationRow;

pub fn rows_to_csv(rows: &[EquationRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    w.write_record(["n", "diagonal", "rhs_support", "rhs"]).map_err(err)?;
    for r in rows {
        let support: Vec<String> = r.rhs.terms().rev().map(|(n, _)| n.to_string()).collect();
        w.write_record([r.n.to_string(), r.lhs_coeff.to_string(), support.join(" "), r.rhs.to_string()])
            .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}
