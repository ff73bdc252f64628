//! Inputs of the table of `S_{d;1,x}` values and helpers to evaluate it.

use rayon::prelude::*;

use super::sd::s_d_with;
use crate::canonical::{CanonicalModel, Constants, PhiCache};
use crate::error::Result;
use crate::scalar::{int, parse_rational, Rational};

/// `(d, x)` pairs of the published table.
pub const TABLE_ROWS: &[(u32, &str)] = &[
    (4, "11"), (5, "14"), (6, "17"), (7, "20"), (7, "19/2"),
    (8, "23"), (8, "7"), (9, "26"), (9, "25/2"), (10, "29"), (10, "9"),
    (11, "32"), (11, "31/2"), (11, "10"), (11, "29/4"), (12, "35"),
    (13, "38"), (13, "37/2"), (13, "12"), (13, "35/4"),
    (14, "41"), (14, "13"), (14, "37/5"),
    (15, "44"), (15, "43/2"), (15, "41/4"),
    (16, "47"), (16, "15"), (16, "43/5"),
    (17, "50"), (17, "49/2"), (17, "16"), (17, "47/4"), (17, "46/5"), (17, "15/2"),
    (18, "53"), (18, "49/5"),
    (19, "56"), (19, "55/2"), (19, "18"), (19, "53/4"), (19, "52/5"), (19, "17/2"), (19, "50/7"),
    (20, "59"), (20, "19"), (20, "53/7"),
    (21, "62"), (21, "61/2"), (21, "59/4"), (21, "58/5"), (21, "55/8"),
    (22, "65"), (22, "21"), (22, "61/5"), (22, "59/7"),
    (23, "68"), (23, "67/2"), (23, "22"), (23, "65/4"), (23, "64/5"), (23, "21/2"), (23, "62/7"), (23, "61/8"),
    (24, "71"), (24, "67/5"), (24, "65/7"),
];

#[derive(Clone, Debug)]
pub struct TableEntry {
    pub d: u32,
    pub x: Rational,
    pub value: Result<Rational>,
}

/// Table rows with `d ≤ max_d`.
pub fn table_inputs(max_d: u32) -> Vec<(u32, Rational)> {
    TABLE_ROWS
        .iter()
        .filter(|(d, _)| *d <= max_d)
        .map(|(d, x)| (*d, parse_rational(x).expect("table literal")))
        .collect()
}

/// `S_1, …, S_{max_d}` at `x = 10·max_d`, sharing one memo table.
pub fn stable_sequence(max_d: u32, mode: Constants, cache: Option<&mut PhiCache>) -> Vec<TableEntry> {
    let x = int(10 * max_d.max(1) as i64);
    let mut model = match CanonicalModel::new(int(1), x.clone(), mode) {
        Ok(m) => m,
        Err(e) => return (1..=max_d).map(|d| TableEntry { d, x: x.clone(), value: Err(e.clone()) }).collect(),
    };
    if let Some(c) = &cache {
        model.seed(c);
    }
    let out = (1..=max_d).map(|d| TableEntry { d, x: x.clone(), value: s_d_with(&mut model, d, &x) }).collect();
    if let Some(c) = cache {
        model.store(c);
    }
    out
}

/// Evaluates each `(d, x)` with its own model, in parallel, keeping input order.
pub fn evaluate_rows(rows: &[(u32, Rational)], mode: Constants, cache: Option<&mut PhiCache>) -> Vec<TableEntry> {
    let seed = cache.as_deref();
    let results: Vec<(TableEntry, PhiCache)> = rows
        .par_iter()
        .map(|(d, x)| {
            let mut fresh = PhiCache::memory();
            let value = CanonicalModel::new(int(1), x.clone(), mode).and_then(|mut m| {
                if let Some(c) = seed {
                    m.seed(c);
                }
                let v = s_d_with(&mut m, *d, x);
                m.store(&mut fresh);
                v
            });
            (TableEntry { d: *d, x: x.clone(), value }, fresh)
        })
        .collect();
    let mut out = Vec::with_capacity(results.len());
    let mut cache = cache;
    for (e, fresh) in results {
        if let Some(c) = cache.as_deref_mut() {
            c.merge(fresh);
        }
        out.push(e);
    }
    out
}
