//! `MTable` as CSV (`n1,n2,n3,count`) and JSON.

use std::io::{Read, Write};

use cactus3_core::counting::MTable;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct Row {
    n1: u32,
    n2: u32,
    n3: u32,
    count: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableDoc {
    n: usize,
    rows: Vec<Row>,
}

fn rows(table: &MTable) -> Vec<Row> {
    table
        .rows()
        .map(|(n1, n2, n3, c)| Row {
            n1,
            n2,
            n3,
            count: c.to_string(),
        })
        .collect()
}

/// Rows in lexicographic key order, header included.
pub fn write_csv(table: &MTable, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows(table) {
        w.serialize(row)?;
    }
    w.flush().map_err(|source| Error::Io {
        path: "csv output".into(),
        source,
    })?;
    Ok(())
}

pub fn read_csv(n: usize, input: impl Read) -> Result<MTable> {
    let mut table = MTable::new(n);
    for row in csv::Reader::from_reader(input).deserialize() {
        let row: Row = row?;
        let count: BigUint = row
            .count
            .parse()
            .map_err(|_| Error::field("count", format!("not an integer: {}", row.count)))?;
        for (field, v) in [("n1", row.n1), ("n2", row.n2), ("n3", row.n3)] {
            if v == 0 || v as usize > n {
                return Err(Error::field(field, format!("{v} outside 1..={n}")));
            }
        }
        table.add((row.n1, row.n2, row.n3), count);
    }
    Ok(table)
}

pub fn to_json(table: &MTable) -> String {
    let doc = TableDoc {
        n: table.n(),
        rows: rows(table),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
    s.push('\n');
    s
}
