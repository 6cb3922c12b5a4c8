use crate::chartab::CharacterTable;
use crate::classdata::{ClassData, CoefficientTable};
use crate::error::{Error, Result};
use crate::field::{is_prime, Field, GaloisField, PrimeField};
use crate::group::{
    class_mult_table, sylow_conjugates, ti_from_conjugates, ConjugacyClassSet, EnumeratedGroup, SylowConjugates,
    DEFAULT_MAX_ORDER,
};
use crate::zalg::{
    annotate_blocks, center_algebra, component_loewy, decompose_blocks, full_defect_count_check, loewy_series,
    SCAlgebra,
};

use super::report::{AnalysisReport, BlockRow, ComparisonReport, Route};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FieldDegree {
    /// Least extension of GF(p) over which every block splits.
    #[default]
    Auto,
    Fixed(u32),
}

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub field_degree: FieldDegree,
    pub max_order: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            field_degree: FieldDegree::Auto,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

/// Blocks of Z(kG) and the Loewy structure of each block centre, from class
/// data and class multiplication coefficients.
pub fn analyze_class_data(
    data: &ClassData,
    coeffs: &CoefficientTable,
    p: u64,
    route: Route,
    opts: &AnalysisOptions,
) -> Result<AnalysisReport> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    let prime = PrimeField::new(p as u32);
    let a = center_algebra(prime, data, coeffs)?;
    let m = match opts.field_degree {
        FieldDegree::Fixed(0) => return Err(Error::Input("field degree must be positive".into())),
        FieldDegree::Fixed(m) => m,
        FieldDegree::Auto => decompose_blocks(&a)?.splitting_degree() as u32,
    };
    let (blocks, center_layers, full_defect) = if m == 1 {
        analyze_over(&a, data, p)?
    } else {
        analyze_over(&a.base_change(GaloisField::new(p as u32, m))?, data, p)?
    };
    Ok(AnalysisReport {
        group: data.name.clone(),
        order: data.order,
        prime: p,
        route,
        num_classes: data.num_classes(),
        field_degree: m,
        trivial_intersection: None,
        sylow_count: None,
        blocks,
        center_layers,
        full_defect,
    })
}

type Analysis = (Vec<BlockRow>, Vec<usize>, crate::zalg::FullDefectCount);

fn analyze_over<F: Field>(a: &SCAlgebra<F>, data: &ClassData, p: u64) -> Result<Analysis> {
    let mut d = decompose_blocks(a)?;
    annotate_blocks(a, &mut d, data)?;
    let mut rows = Vec::with_capacity(d.len());
    for (i, b) in d.blocks.iter().enumerate() {
        let l = component_loewy(a, &d.radical, &b.idempotent)?;
        rows.push(BlockRow {
            id: format!("B{i}"),
            principal: b.is_principal,
            defect: b.defect.expect("annotated"),
            dim: b.dim,
            loewy_length: l.loewy_length,
            j2: l.j2(),
            layers: l.layers,
            residue_degree: b.residue_degree,
        });
    }
    let center = loewy_series(a)?;
    Ok((rows, center.layers, full_defect_count_check(&d, data, p)))
}

/// Enumeration route: classes and coefficients from the group elements, with
/// the trivial-intersection test on the Sylow p-subgroups.
pub fn analyze_group(g: &EnumeratedGroup, p: u64, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    analyze_with_sylow(g, &sylow_conjugates(g, p)?, opts)
}

fn analyze_with_sylow(g: &EnumeratedGroup, conj: &SylowConjugates, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let p = conj.prime;
    let ti = ti_from_conjugates(g, conj);
    let ccs = ConjugacyClassSet::compute(g);
    let data = ccs.to_class_data(g);
    let coeffs = class_mult_table(g, &ccs);
    let mut r = analyze_class_data(&data, &coeffs, p, Route::Enumeration, opts)?;
    r.trivial_intersection = Some(ti.trivial_intersection);
    r.sylow_count = Some(ti.sylow_count);
    Ok(r)
}

/// Character-table route: coefficients by the Burnside formula.
pub fn analyze_table(t: &CharacterTable, p: u64, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let coeffs = t.burnside_table()?;
    analyze_class_data(&t.to_class_data(), &coeffs, p, Route::CharacterTable, opts)
}

/// Principal block of G against that of N_G(P), with N_G(P) found inside G.
pub fn compare_group(g: &EnumeratedGroup, p: u64, opts: &AnalysisOptions) -> Result<ComparisonReport> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    let gname = g.name().unwrap_or("G").to_string();
    let conj = sylow_conjugates(g, p)?;
    let n = conj.normalizer.clone().with_name(format!("N_{gname}(P)"));
    let gr = analyze_with_sylow(g, &conj, opts)?;
    let nr = analyze_group(&n, p, opts)?;
    let c = ComparisonReport::new(gr, nr);
    if c.group.trivial_intersection == Some(true) && !c.dims_equal {
        return Err(Error::Internal(format!(
            "trivial-intersection Sylow but dim Z(B0) = {} and dim Z(b0) = {}",
            c.group.principal().dim,
            c.normalizer.principal().dim
        )));
    }
    Ok(c)
}

/// Principal blocks from two character tables, for G and for N_G(P).
pub fn compare_tables(
    g: &CharacterTable,
    n: &CharacterTable,
    p: u64,
    opts: &AnalysisOptions,
) -> Result<ComparisonReport> {
    let pg = crate::field::valuation(g.order, p);
    let pn = crate::field::valuation(n.order, p);
    if pg != pn || g.order % n.order != 0 {
        return Err(Error::Input(format!(
            "{} (order {}) cannot be a Sylow {p}-normalizer in {} (order {})",
            n.name, n.order, g.name, g.order
        )));
    }
    Ok(ComparisonReport::new(
        analyze_table(g, p, opts)?,
        analyze_table(n, p, opts)?,
    ))
}
