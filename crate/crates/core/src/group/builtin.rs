//! Named groups and the plain-text group file format.
//!
//! ```text
//! # comment
//! degree 11
//! order 7920
//! name M11
//! (1,2,3,4,5,6,7,8,9,10,11)
//! (3,7,11,8)(4,10,5,6)
//! ```
//!
//! Generators are disjoint cycles over 1-based points, or image lists such as
//! `[2,3,1]`.

use std::path::Path;

use super::enumerate::{EnumeratedGroup, DEFAULT_MAX_ORDER};
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::unitary;

pub const M11_GENERATORS: &str = include_str!("../../data/m11.grp");

/// S_n on n points, generated by (1,2) and (1,2,…,n).
pub fn symmetric(n: usize) -> Result<EnumeratedGroup> {
    let gens = if n < 2 {
        vec![Permutation::identity(n.max(1))]
    } else {
        let cycle: Vec<usize> = (0..n).collect();
        vec![
            Permutation::from_cycles(n, &[vec![0, 1]])?,
            Permutation::from_cycles(n, &[cycle])?,
        ]
    };
    Ok(EnumeratedGroup::enumerate(&gens, DEFAULT_MAX_ORDER)?.with_name(format!("S{n}")))
}

/// A_n on n points, generated by the 3-cycles (1,2,i).
pub fn alternating(n: usize) -> Result<EnumeratedGroup> {
    let gens = if n < 3 {
        vec![Permutation::identity(n.max(1))]
    } else {
        (2..n)
            .map(|i| Permutation::from_cycles(n, &[vec![0, 1, i]]))
            .collect::<Result<_>>()?
    };
    Ok(EnumeratedGroup::enumerate(&gens, DEFAULT_MAX_ORDER)?.with_name(format!("A{n}")))
}

/// C_n acting regularly on n points.
pub fn cyclic(n: usize) -> Result<EnumeratedGroup> {
    let g = if n < 2 {
        Permutation::identity(1)
    } else {
        Permutation::from_cycles(n, &[(0..n).collect()])?
    };
    Ok(EnumeratedGroup::enumerate(&[g], DEFAULT_MAX_ORDER)?.with_name(format!("C{n}")))
}

/// Dihedral group of the given (even) order: rotation and reflection of an
/// (order/2)-gon; order 4 gives the Klein four-group on 4 points.
pub fn dihedral(order: usize) -> Result<EnumeratedGroup> {
    if order < 4 || order % 2 != 0 {
        return Err(Error::Input(format!(
            "dihedral order must be even and ≥ 4, got {order}"
        )));
    }
    let n = order / 2;
    let gens = if n == 2 {
        vec![
            Permutation::parse_cycles(4, "(1,2)")?,
            Permutation::parse_cycles(4, "(3,4)")?,
        ]
    } else {
        let rot = Permutation::from_cycles(n, &[(0..n).collect()])?;
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        vec![rot, Permutation::from_images(&refl)?]
    };
    Ok(EnumeratedGroup::enumerate(&gens, DEFAULT_MAX_ORDER)?.with_name(format!("D{order}")))
}

/// G × H acting on the disjoint union of the point sets.
pub fn direct_product(g: &EnumeratedGroup, h: &EnumeratedGroup, cap: usize) -> Result<EnumeratedGroup> {
    let (a, b) = (g.degree(), h.degree());
    let mut gens = Vec::new();
    for s in g.reduced_generators() {
        let mut im = s.images();
        im.extend(a..a + b);
        gens.push(Permutation::from_images(&im)?);
    }
    for s in h.reduced_generators() {
        let mut im: Vec<usize> = (0..a).collect();
        im.extend(s.images().into_iter().map(|x| x + a));
        gens.push(Permutation::from_images(&im)?);
    }
    let name = format!("{}x{}", g.name().unwrap_or("G"), h.name().unwrap_or("H"));
    Ok(EnumeratedGroup::enumerate(&gens, cap)?.with_name(name))
}

pub fn psu3(q: u64, cap: usize) -> Result<EnumeratedGroup> {
    let gens = unitary::psu3_generators(q)?;
    Ok(EnumeratedGroup::enumerate(&gens, cap)?.with_name(format!("PSU(3,{q})")))
}

/// PSU(3, q) extended by diagonal (PGU) and/or field (PΣU) automorphisms;
/// both together give PΓU(3, q).
pub fn unitary_extension(q: u64, ext: unitary::UnitaryExtension, cap: usize) -> Result<EnumeratedGroup> {
    let order = unitary::extension_order(q, ext);
    if order > cap as u128 {
        return Err(Error::GroupTooLarge { cap, partial: 0 });
    }
    let name = match (ext.diagonal, ext.field) {
        (false, false) => format!("PSU(3,{q})"),
        (true, false) => format!("PGU(3,{q})"),
        (false, true) => format!("PΣU(3,{q})"),
        (true, true) => format!("PΓU(3,{q})"),
    };
    let gens = unitary::unitary_extension_generators(q, ext)?;
    Ok(EnumeratedGroup::enumerate(&gens, cap)?.with_name(name))
}

pub fn m11() -> Result<EnumeratedGroup> {
    GroupFile::parse(M11_GENERATORS, "m11.grp")?.enumerate(DEFAULT_MAX_ORDER)
}

/// Parsed group input file.
#[derive(Clone, Debug)]
pub struct GroupFile {
    pub degree: usize,
    pub order: Option<usize>,
    pub name: Option<String>,
    pub generators: Vec<Permutation>,
}

impl GroupFile {
    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut degree = None;
        let mut order = None;
        let mut name = None;
        let mut generators = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            let lineno = ln + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("degree") {
                let d: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(source, lineno, "bad degree"))?;
                if d == 0 {
                    return Err(Error::parse(source, lineno, "degree must be positive"));
                }
                degree = Some(d);
            } else if let Some(rest) = line.strip_prefix("order") {
                order = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| Error::parse(source, lineno, "bad order"))?,
                );
            } else if let Some(rest) = line.strip_prefix("name") {
                name = Some(rest.trim().to_string());
            } else if line.starts_with('(') || line.starts_with('[') {
                let d = degree.ok_or_else(|| Error::parse(source, lineno, "generator before `degree` line"))?;
                let perm = if line.starts_with('(') {
                    Permutation::parse_cycles(d, line)
                } else {
                    parse_image_list(d, line)
                }
                .map_err(|e| Error::parse(source, lineno, e.to_string()))?;
                generators.push(perm);
            } else {
                return Err(Error::parse(source, lineno, format!("unrecognized line {line:?}")));
            }
        }
        let degree = degree.ok_or_else(|| Error::parse(source, 1, "missing `degree` line"))?;
        if generators.is_empty() {
            generators.push(Permutation::identity(degree));
        }
        Ok(GroupFile {
            degree,
            order,
            name,
            generators,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Enumerates the group; a declared order must match.
    pub fn enumerate(&self, cap: usize) -> Result<EnumeratedGroup> {
        if let Some(o) = self.order {
            if o > cap {
                return Err(Error::GroupTooLarge { cap, partial: 0 });
            }
        }
        let mut g = EnumeratedGroup::enumerate(&self.generators, cap)?;
        if let Some(o) = self.order {
            if g.order() != o {
                return Err(Error::Input(format!(
                    "declared order {o} but generators give {}",
                    g.order()
                )));
            }
        }
        if let Some(n) = &self.name {
            g = g.with_name(n.clone());
        }
        Ok(g)
    }
}

fn parse_image_list(degree: usize, text: &str) -> Result<Permutation> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Input(format!("bad image list {text:?}")))?;
    let images = inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Input(format!("bad image list {text:?}")))?;
    if images.len() != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: images.len(),
        });
    }
    Permutation::from_images(&images)
}

/// Resolves a builtin name: `s4`, `a5`, `c7`, `d8`, `psu3_3`, `m11`, or
/// products joined by `x` such as `s3xc2`.
pub fn builtin_group(name: &str, cap: usize) -> Result<EnumeratedGroup> {
    let name = name.trim().to_ascii_lowercase();
    if name.contains('x') {
        let mut parts = name.split('x');
        let mut acc = builtin_group(parts.next().unwrap(), cap)?;
        for part in parts {
            let h = builtin_group(part, cap)?;
            acc = direct_product(&acc, &h, cap)?;
        }
        return Ok(acc);
    }
    let num = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::Input(format!("unknown builtin group {name:?}")))
    };
    let check = |g: EnumeratedGroup| -> Result<EnumeratedGroup> {
        if g.order() > cap {
            Err(Error::GroupTooLarge {
                cap,
                partial: g.order(),
            })
        } else {
            Ok(g)
        }
    };
    if name == "m11" {
        return check(m11()?);
    }
    for (prefix, diagonal, field) in [
        ("pgu3_", true, false),
        ("psigmau3_", false, true),
        ("pgammau3_", true, true),
    ] {
        if let Some(q) = name.strip_prefix(prefix) {
            return unitary_extension(num(q)? as u64, unitary::UnitaryExtension { diagonal, field }, cap);
        }
    }
    if let Some(q) = name.strip_prefix("psu3_") {
        let q = num(q)? as u64;
        if unitary::psu3_order(q) > cap as u128 {
            return Err(Error::GroupTooLarge { cap, partial: 0 });
        }
        return psu3(q, cap);
    }
    if let Some(n) = name.strip_prefix('s') {
        return check(symmetric(num(n)?)?);
    }
    if let Some(n) = name.strip_prefix('a') {
        return check(alternating(num(n)?)?);
    }
    if let Some(n) = name.strip_prefix('c') {
        return check(cyclic(num(n)?)?);
    }
    if let Some(n) = name.strip_prefix('d') {
        return check(dihedral(num(n)?)?);
    }
    Err(Error::Input(format!("unknown builtin group {name:?}")))
}

/// `builtin:NAME` or a path to a group file.
pub fn load_group(source: &str, cap: usize) -> Result<EnumeratedGroup> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin_group(name, cap),
        None => GroupFile::read(Path::new(source))?.enumerate(cap),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ConjugacyClassSet;

    #[test]
    fn family_orders() {
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(cyclic(7).unwrap().order(), 7);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(ConjugacyClassSet::compute(&d8).len(), 5);
        assert_eq!(dihedral(4).unwrap().order(), 4);
    }

    #[test]
    fn products() {
        let g = builtin_group("s3xc2", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.degree(), 5);
    }

    #[test]
    fn shipped_m11() {
        let g = m11().unwrap();
        assert_eq!(g.order(), 7920);
        assert_eq!(g.degree(), 11);
    }

    #[test]
    fn file_errors_carry_line_numbers() {
        let err = GroupFile::parse("degree 3\n(1,2)\nbogus\n", "t.grp").unwrap_err();
        assert_eq!(err.to_string(), "t.grp:3: unrecognized line \"bogus\"");
        let err = GroupFile::parse("degree 3\n(1,5)\n", "t.grp").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let f = GroupFile::parse("degree 3\norder 5\n(1,2,3)\n", "t.grp").unwrap();
        assert!(f.enumerate(100).is_err());
    }

    #[test]
    fn image_list_generators() {
        let f = GroupFile::parse("degree 3\n[2,3,1]\n", "t.grp").unwrap();
        assert_eq!(f.enumerate(100).unwrap().order(), 3);
    }
}
