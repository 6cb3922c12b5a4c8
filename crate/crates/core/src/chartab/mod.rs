//! Character tables with exact cyclotomic entries, and class multiplication
//! coefficients from character sums.

mod cyclotomic;
mod table;

pub use cyclotomic::{cyclotomic_polynomial, parse_cyclotomic, to_i128, totient, Cyclotomic};
pub use table::CharacterTable;

use crate::classdata::{ClassData, CoefficientTable};

pub const S3_TABLE: &str = include_str!("../../data/tables/s3.tbl");
pub const S4_TABLE: &str = include_str!("../../data/tables/s4.tbl");
pub const D8_TABLE: &str = include_str!("../../data/tables/d8.tbl");
pub const A5_TABLE: &str = include_str!("../../data/tables/a5.tbl");
pub const TRIVIAL_TABLE: &str = include_str!("../../data/tables/trivial.tbl");

/// A bijection π from the classes of `a` to those of `b` with equal sizes,
/// element orders and a_{ijk} = b_{π(i)π(j)π(k)}, if one exists.
pub fn match_classes(a: &ClassData, ta: &CoefficientTable, b: &ClassData, tb: &CoefficientTable) -> Option<Vec<usize>> {
    let r = a.num_classes();
    if b.num_classes() != r || a.order != b.order {
        return None;
    }
    let mut pi = vec![usize::MAX; r];
    let mut used = vec![false; r];
    fn consistent(pi: &[usize], ta: &CoefficientTable, tb: &CoefficientTable, upto: usize) -> bool {
        // every triple with the newest class `upto` and earlier ones
        let n = upto + 1;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if (i == upto || j == upto || k == upto) && ta.get(i, j, k) != tb.get(pi[i], pi[j], pi[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(
        i: usize,
        pi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        a: &ClassData,
        ta: &CoefficientTable,
        b: &ClassData,
        tb: &CoefficientTable,
    ) -> bool {
        if i == pi.len() {
            return true;
        }
        for c in 0..pi.len() {
            if used[c] || a.sizes[i] != b.sizes[c] || a.element_orders[i] != b.element_orders[c] {
                continue;
            }
            pi[i] = c;
            used[c] = true;
            if consistent(pi, ta, tb, i) && go(i + 1, pi, used, a, ta, b, tb) {
                return true;
            }
            used[c] = false;
        }
        pi[i] = usize::MAX;
        false
    }
    go(0, &mut pi, &mut used, a, ta, b, tb).then_some(pi)
}
