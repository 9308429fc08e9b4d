//! Closed-form invariants of the whiskered families and their cross-checks
//! against the resolution and homology oracles: Betti formulas, projective
//! dimension, regularity vs induced matching, Cohen-Macaulay type, big
//! height, local-cohomology Hilbert series, the cover bijection, the Betti
//! transfer to the plain whisker graph, and the f-vector identity.
//!
//! Formula mismatches never abort a batch run; every comparison lands in an
//! [`InstanceReport`] with a witness string.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::constructions::{paired_whisker_graph, VwcStructure, WhiskeredGraph};
use crate::corpus::Instance;
use crate::hochster::{
    hochster_betti, local_cohomology_all, BettiTable, PoleSeries, TableConvention,
};
use crate::linalg::Field;
use crate::resolution::{
    betti_from_complex, build_vwc_resolution, build_whisker_resolution, verify_complex,
    Expo, FreeComplex, ResolutionError, StrandDomain,
};
use crate::simplicial::SimplicialComplex;
use crate::vertex_decomposable::{verify_certificate, vertex_decomposable};

/// Degree bookkeeping for the very well-covered Betti corollary: `Degree`
/// places a syzygy set D at column j = d + N_D (the actual total degree of
/// its basis symbol); `Literal` places it at column i + j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VwcConvention {
    #[serde(rename = "degree")]
    Degree,
    #[serde(rename = "literal")]
    Literal,
}

impl VwcConvention {
    pub fn parse(s: &str) -> Option<VwcConvention> {
        match s {
            "degree" => Some(VwcConvention::Degree),
            "literal" => Some(VwcConvention::Literal),
            _ => None,
        }
    }
}

/// Cover-ideal generators of a graph as exponent vectors over an ambient
/// variable order given by labels.
pub fn cover_generators(
    g: &crate::graph::Graph,
    variables: &[String],
) -> Vec<Expo> {
    g.minimal_vertex_covers()
        .covers()
        .iter()
        .map(|&c| {
            let mut expo = vec![0u32; variables.len()];
            for l in g.mask_labels(c) {
                let i = variables
                    .iter()
                    .position(|v| *v == l)
                    .expect("graph label among ambient variables");
                expo[i] = 1;
            }
            expo
        })
        .collect()
}

/// Closed-form Betti table of the cover ideal of a (multi-)clique-whiskered
/// graph: a cover C of size j contributes binom(|V(G)\C|, i) at (i, i+j).
/// For plain whiskerings every cover has size |V(G)|, giving the pure
/// single-strand table.
pub fn betti_formula_whisker(wg: &WhiskeredGraph) -> BettiTable {
    let covers = wg.graph.minimal_vertex_covers();
    let base_mask: u64 = wg
        .base
        .labels()
        .iter()
        .map(|l| 1u64 << wg.graph.vertex(l).expect("base label"))
        .sum();
    let mut table = BettiTable::new("J (formula)", TableConvention::Ideal);
    for &c in covers.covers() {
        let j = bits::popcount(c);
        let free = bits::popcount(base_mask & !c);
        for i in 0..=free {
            table.add(i, i + j, bits::binomial(free, i));
        }
    }
    table
}

/// Closed-form projective dimension of the cover ideal:
/// max over covers of |V(G)\C|.
pub fn pd_formula_whisker(wg: &WhiskeredGraph) -> usize {
    let base_mask: u64 = wg
        .base
        .labels()
        .iter()
        .map(|l| 1u64 << wg.graph.vertex(l).expect("base label"))
        .sum();
    wg.graph
        .minimal_vertex_covers()
        .covers()
        .iter()
        .map(|&c| bits::popcount(base_mask & !c))
        .max()
        .unwrap_or(0)
}

/// Closed-form local-cohomology series of S/I for a multi-clique-whiskered
/// graph: covers of size |V| - j contribute binom(|V(G)\C|, i) at pole
/// order j - i.
pub fn local_cohomology_formula_whisker(wg: &WhiskeredGraph, j: usize) -> PoleSeries {
    let covers = wg.graph.minimal_vertex_covers();
    let base_mask: u64 = wg
        .base
        .labels()
        .iter()
        .map(|l| 1u64 << wg.graph.vertex(l).expect("base label"))
        .sum();
    let total = wg.graph.n();
    let mut series = PoleSeries::zero();
    for &c in covers.covers() {
        if total < j || bits::popcount(c) != total - j {
            continue;
        }
        let free = bits::popcount(base_mask & !c);
        for i in 0..=free.min(j) {
            series.add(j - i, bits::binomial(free, i) as i64);
        }
    }
    series
}

/// N_D of the very well-covered corollary: the multiplicities of the blocks
/// touched by D.
fn block_weight(vwc: &VwcStructure, d_mask: u64) -> usize {
    bits::indices(d_mask).map(|s| vwc.mult[s]).sum()
}

/// Closed-form Betti table of the cover ideal of an expanded very
/// well-covered graph, under either degree convention.
pub fn betti_formula_vwc(vwc: &VwcStructure, convention: VwcConvention) -> BettiTable {
    let d = vwc.total();
    let mut table = BettiTable::new("J (formula)", TableConvention::Ideal);
    for (ci, _) in vwc.covers.covers().iter().enumerate() {
        for dset in bits::subsets_of(vwc.sigma[ci]) {
            let i = bits::popcount(dset);
            let degree = d + block_weight(vwc, dset);
            let j = match convention {
                VwcConvention::Degree => degree,
                VwcConvention::Literal => i + degree,
            };
            table.add(i, j, 1);
        }
    }
    table
}

/// Closed-form local-cohomology series for the expanded very well-covered
/// graph under either convention.
pub fn local_cohomology_formula_vwc(
    vwc: &VwcStructure,
    j: usize,
    convention: VwcConvention,
) -> PoleSeries {
    let d = vwc.total();
    let n = 2 * d;
    let mut series = PoleSeries::zero();
    for (ci, _) in vwc.covers.covers().iter().enumerate() {
        for dset in bits::subsets_of(vwc.sigma[ci]) {
            let i = bits::popcount(dset);
            if i > j {
                continue;
            }
            let degree = d + block_weight(vwc, dset);
            let matches = match convention {
                // Bridge form: β_{i, n-j+i}(J) contributes at pole j-i.
                VwcConvention::Degree => degree + j == n + i,
                VwcConvention::Literal => degree + j == n,
            };
            if matches {
                series.add(j - i, 1);
            }
        }
    }
    series
}

/// The explicit cover bijection between Min(G^π) and Min(W(G)) for a plain
/// clique-whiskering, with pendants y:i,j paired to the j-th vertex of
/// block i.
pub struct CoverBijection {
    /// (cover of G^π, its image in W(G)) as graph masks.
    pub pairs: Vec<(u64, u64)>,
    pub whisker_graph: crate::graph::Graph,
}

#[derive(Debug, Error)]
#[error("cover bijection failed: {0}")]
pub struct BijectionFailure(String);

use thiserror::Error;

pub fn cover_bijection(wg: &WhiskeredGraph) -> Result<CoverBijection, BijectionFailure> {
    if !wg.is_plain_whiskering() {
        return Err(BijectionFailure("bijection applies to single whiskerings".into()));
    }
    let paired = paired_whisker_graph(&wg.base, &wg.partition);
    let wgraph = &paired.graph;
    let covers_pi = wg.graph.minimal_vertex_covers();
    let covers_w = wgraph.minimal_vertex_covers();
    if covers_pi.len() != covers_w.len() {
        return Err(BijectionFailure(format!(
            "|Min(G^π)| = {} but |Min(W(G))| = {}",
            covers_pi.len(),
            covers_w.len()
        )));
    }

    // Pendant of base vertex v in W(G), and x-position data.
    let pend_of_base: std::collections::HashMap<usize, usize> = paired
        .pairs
        .iter()
        .map(|(v, y)| (*v, wgraph.vertex(y).expect("pendant label")))
        .collect();

    let phi = |c_pi: u64| -> u64 {
        let mut image = 0u64;
        for gv in bits::indices(c_pi) {
            let label = wg.graph.label(gv);
            if let Some(bv) = wg.base.vertex(label) {
                image |= 1u64 << wgraph.vertex(label).expect("base label in W(G)");
                let _ = bv;
            }
        }
        // Every base vertex missing from the cover contributes its pendant.
        for bv in 0..wg.base.n() {
            let in_cover = wg
                .graph
                .vertex(wg.base.label(bv))
                .map(|gv| bits::contains(c_pi, gv))
                .unwrap_or(false);
            if !in_cover {
                image |= 1u64 << pend_of_base[&bv];
            }
        }
        image
    };
    let psi = |c_w: u64| -> u64 {
        let mut image = 0u64;
        for wv in bits::indices(c_w) {
            let label = wgraph.label(wv);
            if let Some(gv) = wg.graph.vertex(label) {
                image |= 1u64 << gv;
            }
        }
        for (block, _) in wg.whisker_map.iter().enumerate() {
            let block_has_pendant = bits::indices(wg.partition.blocks()[block]).any(|bv| {
                bits::contains(c_w, pend_of_base[&bv])
            });
            if block_has_pendant {
                let w = &wg.whisker_map[block][0];
                image |= 1u64 << wg.graph.vertex(w).expect("whisker label");
            }
        }
        image
    };

    let mut pairs = Vec::with_capacity(covers_pi.len());
    for &c in covers_pi.covers() {
        let fwd = phi(c);
        if !covers_w.contains(fwd) {
            return Err(BijectionFailure(format!(
                "φ({{{}}}) = {{{}}} is not a minimal cover of W(G)",
                wg.graph.mask_labels(c).join(","),
                wgraph.mask_labels(fwd).join(","),
            )));
        }
        if psi(fwd) != c {
            return Err(BijectionFailure("ψ∘φ is not the identity".into()));
        }
        // The syzygy sets agree: V(G) \ C versus the x-partners of the
        // pendants inside φ(C).
        let d_set: Vec<String> = (0..wg.base.n())
            .map(|bv| wg.base.label(bv).to_string())
            .filter(|l| {
                let gv = wg.graph.vertex(l).expect("base label");
                !bits::contains(c, gv)
            })
            .collect();
        let c_set: Vec<String> = paired
            .pairs
            .iter()
            .filter(|(_, y)| bits::contains(fwd, wgraph.vertex(y).expect("pendant")))
            .map(|(v, _)| wg.base.label(*v).to_string())
            .collect();
        let mut a = d_set.clone();
        let mut b = c_set.clone();
        a.sort();
        b.sort();
        if a != b {
            return Err(BijectionFailure(format!(
                "syzygy sets differ: {{{}}} vs {{{}}}",
                a.join(","),
                b.join(",")
            )));
        }
        pairs.push((c, fwd));
    }
    for &cw in covers_w.covers() {
        let back = psi(cw);
        if !covers_pi.contains(back) || phi(back) != cw {
            return Err(BijectionFailure("φ∘ψ is not the identity".into()));
        }
    }
    Ok(CoverBijection { pairs, whisker_graph: paired.graph })
}

/// One named comparison with its outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn eq_u<T: PartialEq + std::fmt::Debug>(name: &str, got: T, want: T) -> Check {
        Check {
            name: name.into(),
            pass: got == want,
            detail: format!("{got:?} vs {want:?}"),
        }
    }
}

/// Headline values of one instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportValues {
    pub pd_cover_ideal: usize,
    pub reg_edge_quotient: isize,
    pub induced_matching: usize,
    pub cm_type: Option<u64>,
    pub bight: usize,
    pub dim: usize,
    pub pure: Option<bool>,
}

/// Verdict of the degree-convention comparison on one vwc instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConventionReport {
    pub degree_matches: bool,
    pub literal_matches: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceReport {
    pub name: String,
    pub family: String,
    pub values: ReportValues,
    pub checks: Vec<Check>,
    pub convention: Option<ConventionReport>,
}

impl InstanceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

impl std::fmt::Display for InstanceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{} [{}]", self.name, self.family)?;
        writeln!(
            f,
            "  pd(J) = {}, reg(S/I) = {}, im = {}, bight = {}, dim = {}",
            self.values.pd_cover_ideal,
            self.values.reg_edge_quotient,
            self.values.induced_matching,
            self.values.bight,
            self.values.dim
        )?;
        for c in &self.checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            writeln!(f, "  [{status}] {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Options for the per-instance battery.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub field: Field,
    /// Also compare Betti tables over GF(2) and GF(3).
    pub characteristic_scan: bool,
    pub strand_domain: StrandDomain,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            field: Field::Q,
            characteristic_scan: true,
            strand_domain: StrandDomain::Full,
        }
    }
}

/// Runs every applicable formula and oracle comparison on one instance.
pub fn check_instance(instance: &Instance, opts: &CheckOptions) -> InstanceReport {
    match instance {
        Instance::Cw { name, wg } => whisker_report(name, "cw", wg, true, opts),
        Instance::Multi { name, wg } => whisker_report(name, "multi", wg, false, opts),
        Instance::Vwc { name, vwc } => vwc_report(name, vwc, opts),
    }
}

/// Batch evaluation over a corpus; instances are independent and run in
/// parallel.
pub fn check_corpus(instances: &[Instance], opts: &CheckOptions) -> Vec<InstanceReport> {
    use rayon::prelude::*;
    instances.par_iter().map(|i| check_instance(i, opts)).collect()
}

fn push_resolution_checks(
    checks: &mut Vec<Check>,
    complex: Result<FreeComplex, ResolutionError>,
    gens: &[Expo],
    oracle: &BettiTable,
    formula: &BettiTable,
    opts: &CheckOptions,
) -> Option<FreeComplex> {
    let complex = match complex {
        Ok(c) => c,
        Err(e) => {
            checks.push(Check {
                name: "resolution_built".into(),
                pass: false,
                detail: e.to_string(),
            });
            return None;
        }
    };
    match verify_complex(&complex, gens, opts.field, opts.strand_domain, Some(oracle)) {
        Ok(report) => {
            for c in &report.checks {
                checks.push(Check {
                    name: format!("verify/{}", c.name),
                    pass: c.pass,
                    detail: c.witness.clone().unwrap_or_default(),
                });
            }
        }
        Err(e) => checks.push(Check {
            name: "verify/run".into(),
            pass: false,
            detail: e.to_string(),
        }),
    }
    match betti_from_complex(&complex, "J (resolution)") {
        Ok(table) => {
            checks.push(Check {
                name: "betti_formula_vs_resolution".into(),
                pass: formula.same_entries(&table),
                detail: formula
                    .first_difference(&table)
                    .map(|(i, j, a, b)| format!("β_{{{i},{j}}}: formula {a} vs resolution {b}"))
                    .unwrap_or_else(|| "tables agree".into()),
            });
        }
        Err(e) => checks.push(Check {
            name: "betti_formula_vs_resolution".into(),
            pass: false,
            detail: e.to_string(),
        }),
    }
    Some(complex)
}

fn characteristic_checks(checks: &mut Vec<Check>, delta: &SimplicialComplex, what: &str) {
    let q = crate::hochster::betti_restriction(delta, Field::Q);
    let f2 = crate::hochster::betti_restriction(delta, Field::F2);
    let f3 = crate::hochster::betti_restriction(delta, Field::F3);
    checks.push(Check {
        name: format!("char_independence/{what}/f2"),
        pass: q.same_entries(&f2),
        detail: q
            .first_difference(&f2)
            .map(|(i, j, a, b)| format!("β_{{{i},{j}}}: Q {a} vs GF(2) {b}"))
            .unwrap_or_else(|| "tables agree".into()),
    });
    checks.push(Check {
        name: format!("char_independence/{what}/f3"),
        pass: q.same_entries(&f3),
        detail: q
            .first_difference(&f3)
            .map(|(i, j, a, b)| format!("β_{{{i},{j}}}: Q {a} vs GF(3) {b}"))
            .unwrap_or_else(|| "tables agree".into()),
    });
}

fn whisker_report(
    name: &str,
    family: &str,
    wg: &WhiskeredGraph,
    plain: bool,
    opts: &CheckOptions,
) -> InstanceReport {
    let mut checks = Vec::new();
    let graph = &wg.graph;
    let delta = SimplicialComplex::independence_complex(graph);
    let dual = delta.alexander_dual();
    let covers = graph.minimal_vertex_covers();

    // Oracle tables.
    let quotient_table = match hochster_betti(&delta, opts.field) {
        Ok(t) => t,
        Err(e) => {
            checks.push(Check { name: "oracle/quotient".into(), pass: false, detail: e.to_string() });
            BettiTable::new("S/I", TableConvention::Quotient)
        }
    };
    let ideal_table = match hochster_betti(&dual, opts.field) {
        Ok(t) => t.to_ideal("J (oracle)"),
        Err(e) => {
            checks.push(Check { name: "oracle/ideal".into(), pass: false, detail: e.to_string() });
            BettiTable::new("J", TableConvention::Ideal)
        }
    };

    let formula = betti_formula_whisker(wg);
    let gens = cover_generators(graph, &resolution_variables(wg));
    let complex = push_resolution_checks(
        &mut checks,
        build_whisker_resolution(wg),
        &gens,
        &ideal_table,
        &formula,
        opts,
    );

    checks.push(Check {
        name: "betti_formula_vs_oracle".into(),
        pass: formula.same_entries(&ideal_table),
        detail: formula
            .first_difference(&ideal_table)
            .map(|(i, j, a, b)| format!("β_{{{i},{j}}}: formula {a} vs oracle {b}"))
            .unwrap_or_else(|| "tables agree".into()),
    });

    // pd(J): formula vs resolution length vs oracle.
    let pd_formula = pd_formula_whisker(wg);
    checks.push(Check::eq_u("pd_formula_vs_oracle", pd_formula, ideal_table.pd()));
    if let Some(c) = &complex {
        checks.push(Check::eq_u("pd_formula_vs_resolution", pd_formula, c.length()));
    }

    // Regularity and the induced matching number; Terai duality.
    let reg = quotient_table.reg();
    let im = graph.induced_matching_number();
    checks.push(Check::eq_u("terai/reg_equals_pd_cover", reg, ideal_table.pd() as isize));
    checks.push(Check::eq_u("pd_equals_max_free_set", pd_formula, {
        let base_mask: u64 = wg
            .base
            .labels()
            .iter()
            .map(|l| 1u64 << graph.vertex(l).expect("base label"))
            .sum();
        covers.covers().iter().map(|&c| bits::popcount(base_mask & !c)).max().unwrap_or(0)
    }));
    checks.push(Check::eq_u("reg_equals_induced_matching", reg, im as isize));

    // Big height versus pd of the quotient.
    let bight = covers.bight();
    checks.push(Check::eq_u("pd_quotient_equals_bight", quotient_table.pd(), bight));

    // Local cohomology: formula vs oracle for every j up to the dimension.
    let dim = delta.max_face_size().unwrap_or(0);
    let oracle_series = local_cohomology_all(&delta, opts.field);
    for j in 0..=dim {
        let formula_series = local_cohomology_formula_whisker(wg, j);
        let oracle_j = oracle_series.get(j).cloned().unwrap_or_else(PoleSeries::zero);
        checks.push(Check {
            name: format!("local_cohomology/j={j}"),
            pass: formula_series == oracle_j,
            detail: format!("formula {formula_series} vs oracle {oracle_j}"),
        });
    }

    // Vertex decomposability with a replayable certificate.
    let vd = vertex_decomposable(&delta);
    let cert_ok = vd
        .certificate
        .as_ref()
        .map(|t| verify_certificate(&delta, t))
        .unwrap_or(false);
    checks.push(Check {
        name: "vertex_decomposable".into(),
        pass: vd.decomposable && cert_ok,
        detail: if vd.decomposable {
            format!("shedding order: {}", vd.shedding_order().join(" "))
        } else {
            "no shedding certificate".into()
        },
    });

    let mut cm_type = None;
    let mut pure = None;
    if plain {
        // Cohen-Macaulay type: |Min(base)| against the top total Betti
        // number of the edge quotient.
        let base_covers = wg.base.minimal_vertex_covers();
        cm_type = Some(base_covers.len() as u64);
        checks.push(Check::eq_u(
            "cm_type",
            base_covers.len() as u64,
            quotient_table.top_total(),
        ));

        // The quotient is Cohen-Macaulay: no local cohomology below the top.
        let r = wg.partition.len();
        checks.push(Check::eq_u("dim_equals_block_count", dim, r));
        for (j, series) in oracle_series.iter().enumerate() {
            if j < dim {
                checks.push(Check {
                    name: format!("cohen_macaulay/H^{j}_vanishes"),
                    pass: series.is_zero(),
                    detail: series.to_string(),
                });
            }
        }

        // Purity: every level-i symbol has total degree i + |V(G)|.
        if let Some(c) = &complex {
            let nv = wg.base.n() as u32;
            let is_pure = c.levels.iter().enumerate().all(|(i, level)| {
                level
                    .iter()
                    .all(|s| FreeComplex::total_degree(&s.multidegree) == i as u32 + nv)
            });
            pure = Some(is_pure);
            checks.push(Check {
                name: "purity".into(),
                pass: is_pure,
                detail: format!("strand at degree |V(G)| = {nv}"),
            });

            // Rank identity: rank F_i = Σ_C binom(|V(G)\C|, i).
            let base_mask: u64 = wg
                .base
                .labels()
                .iter()
                .map(|l| 1u64 << graph.vertex(l).expect("base label"))
                .sum();
            let ok = (0..=c.length()).all(|i| {
                let expected: u64 = covers
                    .covers()
                    .iter()
                    .map(|&cv| bits::binomial(bits::popcount(base_mask & !cv), i))
                    .sum();
                c.rank(i) as u64 == expected
            });
            checks.push(Check {
                name: "rank_identity".into(),
                pass: ok,
                detail: "rank F_i = Σ_C binom(|V(G)\\C|, i)".into(),
            });
        }

        // Betti transfer to the plain whisker graph W(G) of the base.
        let paired = paired_whisker_graph(&wg.base, &wg.partition);
        let delta_w = SimplicialComplex::independence_complex(&paired.graph);
        match hochster_betti(&delta_w, opts.field) {
            Ok(w_table) => checks.push(Check {
                name: "betti_transfer_to_whisker_graph".into(),
                pass: quotient_table.same_entries(&w_table),
                detail: quotient_table
                    .first_difference(&w_table)
                    .map(|(i, j, a, b)| format!("β_{{{i},{j}}}: G^π {a} vs W(G) {b}"))
                    .unwrap_or_else(|| "tables agree".into()),
            }),
            Err(e) => checks.push(Check {
                name: "betti_transfer_to_whisker_graph".into(),
                pass: false,
                detail: e.to_string(),
            }),
        }

        // f-vector identity for the whisker graph.
        let f_g = SimplicialComplex::independence_complex(&wg.base).f_vector();
        let f_w = delta_w.f_vector();
        let nv = wg.base.n();
        let ok = (0..f_w.len()).all(|k| {
            let rhs: u64 = (0..=k)
                .map(|l| f_g.get(l).copied().unwrap_or(0) * bits::binomial(nv - l, k - l))
                .sum();
            f_w[k] == rhs
        });
        checks.push(Check {
            name: "whisker_f_vector_identity".into(),
            pass: ok,
            detail: format!("f(Δ(W(G))) = {f_w:?}"),
        });

        // The explicit cover bijection.
        match cover_bijection(wg) {
            Ok(b) => checks.push(Check {
                name: "cover_bijection".into(),
                pass: true,
                detail: format!("{} covers matched", b.pairs.len()),
            }),
            Err(e) => checks.push(Check {
                name: "cover_bijection".into(),
                pass: false,
                detail: e.to_string(),
            }),
        }
    }

    if opts.characteristic_scan {
        characteristic_checks(&mut checks, &delta, "edge_quotient");
        characteristic_checks(&mut checks, &dual, "cover_ideal");
    }

    InstanceReport {
        name: name.into(),
        family: family.into(),
        values: ReportValues {
            pd_cover_ideal: ideal_table.pd(),
            reg_edge_quotient: reg,
            induced_matching: im,
            cm_type,
            bight,
            dim,
            pure,
        },
        checks,
        convention: None,
    }
}

fn vwc_report(name: &str, vwc: &VwcStructure, opts: &CheckOptions) -> InstanceReport {
    let mut checks = Vec::new();
    let graph = &vwc.expanded;
    let delta = SimplicialComplex::independence_complex(graph);
    let dual = delta.alexander_dual();

    let quotient_table = match hochster_betti(&delta, opts.field) {
        Ok(t) => t,
        Err(e) => {
            checks.push(Check { name: "oracle/quotient".into(), pass: false, detail: e.to_string() });
            BettiTable::new("S/I", TableConvention::Quotient)
        }
    };
    let ideal_table = match hochster_betti(&dual, opts.field) {
        Ok(t) => t.to_ideal("J (oracle)"),
        Err(e) => {
            checks.push(Check { name: "oracle/ideal".into(), pass: false, detail: e.to_string() });
            BettiTable::new("J", TableConvention::Ideal)
        }
    };

    // Which convention does the verified table support?
    let degree_table = betti_formula_vwc(vwc, VwcConvention::Degree);
    let literal_table = betti_formula_vwc(vwc, VwcConvention::Literal);
    let convention = ConventionReport {
        degree_matches: degree_table.same_entries(&ideal_table),
        literal_matches: literal_table.same_entries(&ideal_table),
    };
    checks.push(Check {
        name: "vwc_convention_identified".into(),
        pass: convention.degree_matches || convention.literal_matches,
        detail: format!(
            "degree: {}, literal: {}",
            convention.degree_matches, convention.literal_matches
        ),
    });

    let gens = cover_generators(graph, graph.labels());
    let complex = push_resolution_checks(
        &mut checks,
        build_vwc_resolution(vwc),
        &gens,
        &ideal_table,
        &degree_table,
        opts,
    );

    // pd(J) = max |𝒞(H;C)|.
    let pd_formula = vwc.sigma.iter().map(|&m| bits::popcount(m)).max().unwrap_or(0);
    checks.push(Check::eq_u("pd_formula_vs_oracle", pd_formula, ideal_table.pd()));
    if let Some(c) = &complex {
        checks.push(Check::eq_u("pd_formula_vs_resolution", pd_formula, c.length()));
    }
    checks.push(Check::eq_u(
        "terai/reg_equals_pd_cover",
        quotient_table.reg(),
        ideal_table.pd() as isize,
    ));

    // Local cohomology under both conventions; the report records which one
    // survives.
    let dim = delta.max_face_size().unwrap_or(0);
    let oracle_series = local_cohomology_all(&delta, opts.field);
    for j in 0..=dim {
        let oracle_j = oracle_series.get(j).cloned().unwrap_or_else(PoleSeries::zero);
        let formula_j = local_cohomology_formula_vwc(vwc, j, VwcConvention::Degree);
        checks.push(Check {
            name: format!("local_cohomology/j={j}"),
            pass: formula_j == oracle_j,
            detail: format!("formula {formula_j} vs oracle {oracle_j}"),
        });
    }

    if opts.characteristic_scan {
        characteristic_checks(&mut checks, &delta, "edge_quotient");
        characteristic_checks(&mut checks, &dual, "cover_ideal");
    }

    InstanceReport {
        name: name.into(),
        family: "vwc".into(),
        values: ReportValues {
            pd_cover_ideal: ideal_table.pd(),
            reg_edge_quotient: quotient_table.reg(),
            induced_matching: graph.induced_matching_number(),
            cm_type: None,
            bight: graph.minimal_vertex_covers().bight(),
            dim,
            pure: None,
        },
        checks,
        convention: Some(convention),
    }
}

/// Ambient variable order used by the whisker resolutions, for callers that
/// need the generator list in the same order.
pub fn resolution_variables(wg: &WhiskeredGraph) -> Vec<String> {
    let mut variables: Vec<String> = wg
        .partition
        .vertex_order()
        .into_iter()
        .map(|b| wg.base.label(b).to_string())
        .collect();
    for ws in &wg.whisker_map {
        variables.extend(ws.iter().cloned());
    }
    variables
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{clique_whisker, multi_clique_whisker, vwc_expand};
    use crate::corpus::Instance;
    use crate::fixtures;
    use crate::graph::CliquePartition;

    fn fixture_cw() -> Instance {
        let g = fixtures::k4_minus_edge();
        let pi = fixtures::k4_minus_edge_partition(&g);
        Instance::Cw { name: "fixture".into(), wg: clique_whisker(&g, &pi) }
    }

    #[test]
    fn fixture_report_all_pass() {
        let report = check_instance(&fixture_cw(), &CheckOptions::default());
        assert!(report.all_pass(), "{report}");
        assert_eq!(report.values.pd_cover_ideal, 2);
        assert_eq!(report.values.reg_edge_quotient, 2);
        assert_eq!(report.values.induced_matching, 2);
        assert_eq!(report.values.cm_type, Some(3));
        assert_eq!(report.values.pure, Some(true));
    }

    #[test]
    fn k1_whisker_report() {
        let g = fixtures::k1();
        let wg = clique_whisker(&g, &CliquePartition::singletons(&g));
        let inst = Instance::Cw { name: "k1".into(), wg };
        let report = check_instance(&inst, &CheckOptions::default());
        assert!(report.all_pass(), "{report}");
        assert_eq!(report.values.pd_cover_ideal, 1);
        assert_eq!(report.values.reg_edge_quotient, 1);
        assert_eq!(report.values.cm_type, Some(1));
    }

    #[test]
    fn k1_multi_report() {
        let g = fixtures::k1();
        let wg =
            multi_clique_whisker(&g, &CliquePartition::singletons(&g), &[2]).unwrap();
        let inst = Instance::Multi { name: "k1-multi".into(), wg };
        let report = check_instance(&inst, &CheckOptions::default());
        assert!(report.all_pass(), "{report}");
        // pd(S/I) = bight = 2 via the cover {w11, w12}.
        assert_eq!(report.values.bight, 2);
        assert_eq!(report.values.pd_cover_ideal, 1);
    }

    #[test]
    fn vwc_k22_report_picks_degree_convention() {
        let h = crate::graph::Graph::new(&["x:1", "y:1"], &[("x:1", "y:1")]).unwrap();
        let vwc = vwc_expand(&h, &[2]).unwrap();
        let inst = Instance::Vwc { name: "k22".into(), vwc };
        let report = check_instance(&inst, &CheckOptions::default());
        assert!(report.all_pass(), "{report}");
        let conv = report.convention.unwrap();
        assert!(conv.degree_matches);
        assert!(!conv.literal_matches);
    }

    #[test]
    fn formula_tables_frozen_for_fixture() {
        let g = fixtures::k4_minus_edge();
        let pi = fixtures::k4_minus_edge_partition(&g);
        let wg = clique_whisker(&g, &pi);
        let t = betti_formula_whisker(&wg);
        assert_eq!(t.get(0, 4), 6);
        assert_eq!(t.get(1, 5), 6);
        assert_eq!(t.get(2, 6), 1);
        assert_eq!(pd_formula_whisker(&wg), 2);
    }

    #[test]
    fn local_cohomology_formula_k2_case() {
        // k[x,w]/(xw): F(H^1) = 1 + 2(t-1)^{-1}.
        let g = fixtures::k1();
        let wg = clique_whisker(&g, &CliquePartition::singletons(&g));
        let s = local_cohomology_formula_whisker(&wg, 1);
        let mut expect = PoleSeries::zero();
        expect.add(0, 1);
        expect.add(1, 2);
        assert_eq!(s, expect);
        assert!(local_cohomology_formula_whisker(&wg, 0).is_zero());
    }

    #[test]
    fn cover_bijection_on_fixture() {
        let g = fixtures::k4_minus_edge();
        let pi = fixtures::k4_minus_edge_partition(&g);
        let wg = clique_whisker(&g, &pi);
        let b = cover_bijection(&wg).unwrap();
        assert_eq!(b.pairs.len(), 6);
    }

    #[test]
    fn cover_bijection_k1() {
        // {x} ↦ {x} and {w} ↦ {y:1,1}.
        let g = fixtures::k1();
        let wg = clique_whisker(&g, &CliquePartition::singletons(&g));
        let b = cover_bijection(&wg).unwrap();
        assert_eq!(b.pairs.len(), 2);
        let labels: Vec<Vec<String>> =
            b.pairs.iter().map(|&(_, w)| b.whisker_graph.mask_labels(w)).collect();
        assert!(labels.contains(&vec!["x:1,1".to_string()]));
        assert!(labels.contains(&vec!["y:1,1".to_string()]));
    }
}
