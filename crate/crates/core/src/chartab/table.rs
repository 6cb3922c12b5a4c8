use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::cyclotomic::{parse_cyclotomic, Cyclotomic};
use crate::classdata::{default_labels, ClassData, CoefficientTable};
use crate::error::{Error, Result};
use crate::field::prime_divisors;

/// Class data plus the irreducible characters, all exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub order: u128,
    pub exponent: u64,
    pub sizes: Vec<u128>,
    pub element_orders: Vec<u64>,
    /// 0-based class of inverses
    pub inverse: Vec<usize>,
    /// prime -> 0-based class of p-th powers
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    /// labels as given in the file
    pub labels: Vec<Option<String>>,
    /// characters[χ][class]
    pub characters: Vec<Vec<Cyclotomic>>,
}

fn reject(msg: impl Into<String>) -> Error {
    Error::TableValidation(msg.into())
}

#[derive(Default)]
struct ClassRecord {
    size: Option<u128>,
    order: Option<u64>,
    inverse: Option<usize>,
    power_maps: BTreeMap<u64, usize>,
    label: Option<String>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn degrees(&self) -> Vec<BigInt> {
        self.characters
            .iter()
            .map(|row| row[0].as_integer().expect("validated"))
            .collect()
    }

    /// Labels from the file, falling back to `o{order}_{k}`.
    pub fn effective_labels(&self) -> Vec<String> {
        let defaults = default_labels(&self.element_orders);
        self.labels
            .iter()
            .zip(defaults)
            .map(|(l, d)| l.clone().unwrap_or(d))
            .collect()
    }

    pub fn to_class_data(&self) -> ClassData {
        ClassData {
            name: self.name.clone(),
            order: self.order,
            sizes: self.sizes.clone(),
            element_orders: self.element_orders.clone(),
            inverse: self.inverse.clone(),
            power_maps: self.power_maps.clone(),
            labels: self.effective_labels(),
            exponent: self.exponent,
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Parses and fully validates a table file.
    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let t = Self::parse_unchecked(text, source)?;
        t.validate()?;
        Ok(t)
    }

    /// Parses without the orthogonality and consistency checks.
    pub fn parse_unchecked(text: &str, source: &str) -> Result<Self> {
        let perr = |line: usize, msg: String| Error::parse(source, line, msg);
        let mut name = None;
        let mut order: Option<u128> = None;
        let mut exponent: Option<u64> = None;
        let mut nclasses: Option<usize> = None;
        let mut classes: Vec<ClassRecord> = Vec::new();
        let mut characters: Vec<Vec<Cyclotomic>> = Vec::new();
        let mut in_chars = false;
        for (ln, raw) in text.lines().enumerate() {
            let lineno = ln + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let int = |s: &str| -> Result<u128> {
                s.parse()
                    .map_err(|_| perr(lineno, format!("expected an integer, got {s:?}")))
            };
            match key {
                "name" if !in_chars => name = Some(rest.to_string()),
                "order" if !in_chars => order = Some(int(rest)?),
                "exponent" if !in_chars => exponent = Some(int(rest)? as u64),
                "nclasses" if !in_chars => nclasses = Some(int(rest)? as usize),
                "class" if !in_chars => {
                    let mut toks = rest.split_whitespace().peekable();
                    let idx = int(toks.next().unwrap_or(""))? as usize;
                    if idx != classes.len() + 1 {
                        return Err(perr(
                            lineno,
                            format!(
                                "class records must be numbered in order; expected {}",
                                classes.len() + 1
                            ),
                        ));
                    }
                    let mut rec = ClassRecord::default();
                    let mut next = |what: &str| -> Result<String> {
                        toks.next()
                            .map(str::to_string)
                            .ok_or_else(|| perr(lineno, format!("missing value after {what}")))
                    };
                    loop {
                        let Ok(field) = next("") else { break };
                        match field.as_str() {
                            "size" => rec.size = Some(int(&next("size")?)?),
                            "order" => rec.order = Some(int(&next("order")?)? as u64),
                            "inverse" => {
                                let mut v = next("inverse")?;
                                if v == "->" {
                                    v = next("inverse")?;
                                }
                                rec.inverse =
                                    Some(index(&v).ok_or_else(|| perr(lineno, format!("bad class index {v:?}")))?);
                            }
                            "powermap" => {
                                let p = int(&next("powermap")?)? as u64;
                                let arrow = next("powermap")?;
                                if arrow != "->" {
                                    return Err(perr(lineno, format!("expected `->` after powermap {p}")));
                                }
                                let v = next("powermap")?;
                                let k = index(&v).ok_or_else(|| perr(lineno, format!("bad class index {v:?}")))?;
                                if rec.power_maps.insert(p, k).is_some() {
                                    return Err(perr(lineno, format!("duplicate powermap {p}")));
                                }
                            }
                            "label" => rec.label = Some(next("label")?),
                            other => return Err(perr(lineno, format!("unknown class field {other:?}"))),
                        }
                    }
                    classes.push(rec);
                }
                "characters" if rest.is_empty() && !in_chars => in_chars = true,
                "char" if in_chars => {
                    let row = rest
                        .split(',')
                        .map(|v| parse_cyclotomic(v).map_err(|m| perr(lineno, m)))
                        .collect::<Result<Vec<_>>>()?;
                    characters.push(row);
                }
                _ => return Err(perr(lineno, format!("unrecognized line {line:?}"))),
            }
        }
        let missing = |what: &str| perr(1, format!("missing `{what}` header"));
        let order = order.ok_or_else(|| missing("order"))?;
        let exponent = exponent.ok_or_else(|| missing("exponent"))?;
        let r = nclasses.ok_or_else(|| missing("nclasses"))?;
        if classes.len() != r {
            return Err(reject(format!(
                "nclasses is {r} but {} class records given",
                classes.len()
            )));
        }
        if characters.len() != r {
            return Err(reject(format!(
                "nclasses is {r} but {} characters given",
                characters.len()
            )));
        }
        let mut t = CharacterTable {
            name: name.unwrap_or_else(|| "G".into()),
            order,
            exponent,
            sizes: Vec::with_capacity(r),
            element_orders: Vec::with_capacity(r),
            inverse: Vec::with_capacity(r),
            power_maps: BTreeMap::new(),
            labels: Vec::with_capacity(r),
            characters,
        };
        let primes: Vec<u64> = classes
            .iter()
            .flat_map(|c| c.power_maps.keys().copied())
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        for (i, c) in classes.into_iter().enumerate() {
            let n = i + 1;
            t.sizes
                .push(c.size.ok_or_else(|| reject(format!("class {n} has no size")))?);
            t.element_orders.push(
                c.order
                    .ok_or_else(|| reject(format!("class {n} has no element order")))?,
            );
            t.inverse
                .push(c.inverse.ok_or_else(|| reject(format!("class {n} has no inverse")))?);
            for &p in &primes {
                let k = *c
                    .power_maps
                    .get(&p)
                    .ok_or_else(|| reject(format!("class {n} lacks powermap {p}")))?;
                t.power_maps.entry(p).or_default().push(k);
            }
            t.labels.push(c.label);
        }
        Ok(t)
    }

    /// Structural checks, then Σχ(1)² = |G| and both orthogonality relations.
    pub fn validate(&self) -> Result<()> {
        self.validate_classes()?;
        self.validate_characters()
    }

    fn validate_classes(&self) -> Result<()> {
        let r = self.num_classes();
        if r == 0 {
            return Err(reject("no classes"));
        }
        if self.sizes[0] != 1 || self.element_orders[0] != 1 {
            return Err(reject("first class must be the identity (size 1, element order 1)"));
        }
        let total: u128 = self.sizes.iter().sum();
        if total != self.order {
            return Err(reject(format!("class sizes sum to {total}, not |G| = {}", self.order)));
        }
        let mut lcm = 1u64;
        for i in 0..r {
            let (s, o) = (self.sizes[i], self.element_orders[i]);
            if s == 0 || self.order % s != 0 {
                return Err(reject(format!("size {s} of class {} does not divide |G|", i + 1)));
            }
            if o == 0 || self.order % o as u128 != 0 {
                return Err(reject(format!(
                    "element order {o} of class {} does not divide |G|",
                    i + 1
                )));
            }
            lcm = lcm.lcm(&o);
        }
        if lcm != self.exponent {
            return Err(reject(format!(
                "exponent is {} but element orders have lcm {lcm}",
                self.exponent
            )));
        }
        for i in 0..r {
            let j = self.inverse[i];
            if j >= r || self.inverse[j] != i {
                return Err(reject(format!("inverse map is not an involution at class {}", i + 1)));
            }
            if self.sizes[j] != self.sizes[i] || self.element_orders[j] != self.element_orders[i] {
                return Err(reject(format!(
                    "class {} and its inverse class differ in size or order",
                    i + 1
                )));
            }
        }
        if self.inverse[0] != 0 {
            return Err(reject("identity must be its own inverse class"));
        }
        let primes = prime_divisors(self.order);
        let given: Vec<u64> = self.power_maps.keys().copied().collect();
        if given != primes {
            return Err(reject(format!(
                "power maps given for primes {given:?}, expected {primes:?}"
            )));
        }
        for (&p, map) in &self.power_maps {
            for (i, &k) in map.iter().enumerate() {
                let o = self.element_orders[i];
                if k >= r || self.element_orders[k] != o / o.gcd(&p) {
                    return Err(reject(format!(
                        "powermap {p} of class {} is inconsistent with element orders",
                        i + 1
                    )));
                }
            }
        }
        let mut seen = HashSet::new();
        for l in self.labels.iter().flatten() {
            if !seen.insert(l) {
                return Err(reject(format!("duplicate class label {l:?}")));
            }
        }
        Ok(())
    }

    fn validate_characters(&self) -> Result<()> {
        let r = self.num_classes();
        for (a, row) in self.characters.iter().enumerate() {
            if row.len() != r {
                return Err(reject(format!(
                    "character {} has {} values, expected {r}",
                    a + 1,
                    row.len()
                )));
            }
        }
        if self.characters[0].iter().any(|v| *v != Cyclotomic::one()) {
            return Err(reject("first character must be trivial"));
        }
        let mut sum_sq = BigInt::zero();
        for (a, row) in self.characters.iter().enumerate() {
            match row[0].as_integer() {
                Some(d) if d.is_positive() => sum_sq += &d * &d,
                _ => {
                    return Err(reject(format!(
                        "degree of character {} is not a positive integer",
                        a + 1
                    )))
                }
            }
        }
        if sum_sq != BigInt::from(self.order) {
            return Err(reject(format!(
                "sum of squared degrees is {sum_sq}, not |G| = {}",
                self.order
            )));
        }
        let conj: Vec<Vec<Cyclotomic>> = self
            .characters
            .iter()
            .map(|row| row.iter().map(Cyclotomic::conj).collect())
            .collect();
        // column orthogonality
        let bad_col = (0..r).into_par_iter().find_map_first(|c| {
            (c..r).find_map(|d| {
                let mut s = Cyclotomic::zero();
                for x in 0..r {
                    s = &s + &(&self.characters[x][c] * &conj[x][d]);
                }
                let want = if c == d {
                    Cyclotomic::from(BigInt::from(self.order / self.sizes[c]))
                } else {
                    Cyclotomic::zero()
                };
                (s != want).then_some((c, d))
            })
        });
        if let Some((c, d)) = bad_col {
            return Err(reject(format!(
                "column orthogonality fails for classes {} and {}",
                c + 1,
                d + 1
            )));
        }
        let sizes: Vec<Cyclotomic> = self.sizes.iter().map(|&s| Cyclotomic::from(BigInt::from(s))).collect();
        let bad_row = (0..r).into_par_iter().find_map_first(|a| {
            (a..r).find_map(|b| {
                let mut s = Cyclotomic::zero();
                for x in 0..r {
                    s = &s + &(&sizes[x] * &(&self.characters[a][x] * &conj[b][x]));
                }
                let want = if a == b {
                    Cyclotomic::from(BigInt::from(self.order))
                } else {
                    Cyclotomic::zero()
                };
                (s != want).then_some((a, b))
            })
        });
        if let Some((a, b)) = bad_row {
            return Err(reject(format!(
                "row orthogonality fails for characters {} and {}",
                a + 1,
                b + 1
            )));
        }
        for (a, row) in self.characters.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if row[self.inverse[c]] != conj[a][c] {
                    return Err(reject(format!(
                        "character {} at class {} is not conjugate to its value on the inverse class ({v})",
                        a + 1,
                        c + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Canonical text form; parsing it gives back an equal table.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        writeln!(s, "name {}", self.name).unwrap();
        writeln!(s, "order {}", self.order).unwrap();
        writeln!(s, "exponent {}", self.exponent).unwrap();
        writeln!(s, "nclasses {}", self.num_classes()).unwrap();
        for i in 0..self.num_classes() {
            write!(
                s,
                "class {} size {} order {} inverse -> {}",
                i + 1,
                self.sizes[i],
                self.element_orders[i],
                self.inverse[i] + 1
            )
            .unwrap();
            for (p, map) in &self.power_maps {
                write!(s, " powermap {p} -> {}", map[i] + 1).unwrap();
            }
            if let Some(l) = &self.labels[i] {
                write!(s, " label {l}").unwrap();
            }
            s.push('\n');
        }
        s.push_str("characters\n");
        for row in &self.characters {
            let vals: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(s, "char {}", vals.join(", ")).unwrap();
        }
        s
    }

    /// a_{ijk} = (|C_i||C_j|/|G|)·Σ_χ χ(g_i)χ(g_j)χ(g_k⁻¹)/χ(1), evaluated
    /// exactly; anything but a nonnegative integer is an error.
    pub fn burnside_coeff(&self, i: usize, j: usize, k: usize) -> Result<u128> {
        let r = self.num_classes();
        if i >= r || j >= r || k >= r {
            return Err(Error::Input(format!("class index out of range (r = {r})")));
        }
        let kk = self.inverse[k];
        let mut s = Cyclotomic::zero();
        for row in &self.characters {
            let deg = row[0].as_rational().expect("validated").clone();
            let term = &(&row[i] * &row[j]) * &row[kk];
            s = &s + &term.scale(&deg.recip());
        }
        self.finish_coeff(s, i, j, k)
    }

    fn finish_coeff(&self, sum: Cyclotomic, i: usize, j: usize, k: usize) -> Result<u128> {
        let factor = BigRational::new(
            BigInt::from(self.sizes[i]) * BigInt::from(self.sizes[j]),
            BigInt::from(self.order),
        );
        let v = sum.scale(&factor);
        let bad = |what: &str| {
            Error::TableInconsistent(format!("coefficient a({},{},{}) is {what}: {v}", i + 1, j + 1, k + 1))
        };
        let n = v.as_integer().ok_or_else(|| bad("not a rational integer"))?;
        if n.is_negative() {
            return Err(bad("negative"));
        }
        n.to_u128().ok_or_else(|| bad("too large"))
    }

    /// Every coefficient, using a_{ijk} = a_{jik}.
    pub fn burnside_table(&self) -> Result<CoefficientTable> {
        let r = self.num_classes();
        let inv_deg: Vec<BigRational> = self
            .characters
            .iter()
            .map(|row| row[0].as_rational().expect("validated").recip())
            .collect();
        let slices: Vec<Vec<(usize, usize, Vec<u128>)>> = (0..r)
            .into_par_iter()
            .map(|i| {
                (i..r)
                    .map(|j| {
                        let w: Vec<Cyclotomic> = self
                            .characters
                            .iter()
                            .zip(&inv_deg)
                            .map(|(row, d)| (&row[i] * &row[j]).scale(d))
                            .collect();
                        let col = (0..r)
                            .map(|k| {
                                let kk = self.inverse[k];
                                let mut s = Cyclotomic::zero();
                                for (x, row) in self.characters.iter().enumerate() {
                                    s = &s + &(&w[x] * &row[kk]);
                                }
                                self.finish_coeff(s, i, j, k)
                            })
                            .collect::<Result<Vec<u128>>>()?;
                        Ok((i, j, col))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut t = CoefficientTable::zeros(r);
        for (i, j, col) in slices.into_iter().flatten() {
            for (k, v) in col.into_iter().enumerate() {
                t.set(i, j, k, v);
                t.set(j, i, k, v);
            }
        }
        Ok(t)
    }
}

fn index(s: &str) -> Option<usize> {
    s.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1)
}
