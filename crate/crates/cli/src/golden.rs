//! Reference tables of G_j^(k)(0), gamma(j,k) and C(j,k), embedded as `j,k,value` CSV fixtures.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use cik_core::clark_ismail::Quantity;
use cik_core::rational::parse_exact;
use cik_core::Rational;

const TABLE_G: &str = include_str!("../fixtures/table1_G.csv");
const TABLE_GAMMA: &str = include_str!("../fixtures/table2_gamma.csv");
const TABLE_C: &str = include_str!("../fixtures/table3_C.csv");

#[derive(Debug, Clone)]
pub struct GoldenTable {
    pub quantity: Quantity,
    pub rows: RangeInclusive<usize>,
    pub cols: RangeInclusive<usize>,
    pub cells: BTreeMap<(usize, usize), Rational>,
}

impl GoldenTable {
    pub fn covers(&self, rows: &RangeInclusive<usize>, cols: &RangeInclusive<usize>) -> bool {
        self.rows.contains(rows.start())
            && self.rows.contains(rows.end())
            && self.cols.contains(cols.start())
            && self.cols.contains(cols.end())
    }

    pub fn get(&self, j: usize, k: usize) -> Option<&Rational> {
        self.cells.get(&(j, k))
    }
}

fn parse(quantity: Quantity, text: &str) -> GoldenTable {
    let mut cells = BTreeMap::new();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    for rec in reader.records() {
        let rec = rec.expect("embedded fixture is valid CSV");
        let j: usize = rec[0].parse().expect("fixture j");
        let k: usize = rec[1].parse().expect("fixture k");
        let v = parse_exact(&rec[2]).expect("fixture value");
        cells.insert((j, k), v);
    }
    let js = cells.keys().map(|&(j, _)| j);
    let ks = cells.keys().map(|&(_, k)| k);
    let rows = js.clone().min().unwrap()..=js.max().unwrap();
    let cols = ks.clone().min().unwrap()..=ks.max().unwrap();
    GoldenTable { quantity, rows, cols, cells }
}

/// The embedded reference table for `quantity`, if there is one.
pub fn golden(quantity: Quantity) -> Option<GoldenTable> {
    match quantity {
        Quantity::G => Some(parse(quantity, TABLE_G)),
        Quantity::Gamma => Some(parse(quantity, TABLE_GAMMA)),
        Quantity::C => Some(parse(quantity, TABLE_C)),
        _ => None,
    }
}
