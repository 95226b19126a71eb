use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::group::{Element, FiniteGroup, Provenance};
use crate::limits::Limits;
use crate::rank::{rank_of_center_with, rank_with, RankMethod};
use crate::series::{derived_series, is_p_group, upper_central_series, Nilpotency};
use crate::subgroup::center;

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub rank_ms: f64,
    pub center_rank_ms: f64,
    pub series_ms: f64,
    pub total_ms: f64,
}

/// Invariants of one group, as emitted by the CLI and the suites.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub group_id: String,
    pub order: usize,
    pub rank: usize,
    pub rank_method: RankMethod,
    pub rank_witness: Vec<Element>,
    pub center_order: usize,
    pub center_rank: usize,
    pub center_rank_method: RankMethod,
    pub center: Vec<Element>,
    pub is_c_group: bool,
    pub nilpotency_class: Nilpotency,
    pub upper_central_orders: Vec<usize>,
    pub solvable: bool,
    pub derived_orders: Vec<usize>,
    pub p_group: Option<usize>,
    pub provenance: Provenance,
    pub seed: u64,
    pub timings: Timings,
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

pub fn invariant_report(group_id: &str, g: &FiniteGroup, limits: &Limits) -> Result<InvariantReport> {
    let start = Instant::now();
    let t = Instant::now();
    let rank = rank_with(g, limits)?;
    let rank_ms = ms(t);
    let t = Instant::now();
    let center_rank = rank_of_center_with(g, limits)?;
    let center_rank_ms = ms(t);
    let t = Instant::now();
    let upper = upper_central_series(g);
    let derived = derived_series(g);
    let series_ms = ms(t);
    let z = center(g);
    Ok(InvariantReport {
        group_id: group_id.to_string(),
        order: g.order(),
        rank: rank.rank,
        rank_method: rank.method,
        rank_witness: rank.witness,
        center_order: z.order(),
        center_rank: center_rank.rank,
        center_rank_method: center_rank.method,
        center: z.members().to_vec(),
        is_c_group: rank.rank < center_rank.rank,
        nilpotency_class: upper.nilpotency(),
        upper_central_orders: upper.subgroup_orders,
        solvable: derived.terminated,
        derived_orders: derived.subgroup_orders,
        p_group: is_p_group(g),
        provenance: g.provenance().clone(),
        seed: limits.seed,
        timings: Timings {
            rank_ms,
            center_rank_ms,
            series_ms,
            total_ms: ms(start),
        },
    })
}

/// `rk(G) < rk(Z(G))`.
pub fn is_c_group(g: &FiniteGroup) -> Result<bool> {
    is_c_group_with(g, &Limits::default())
}

pub fn is_c_group_with(g: &FiniteGroup, limits: &Limits) -> Result<bool> {
    Ok(rank_with(g, limits)?.rank < rank_of_center_with(g, limits)?.rank)
}

pub const TSV_HEADER: &str = "group_id\torder\trank\tcenter_rank\tis_c_group\tclass\tsolvable";

/// Header row plus one tab-separated line per report.
pub fn reports_to_tsv(reports: &[InvariantReport]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.group_id, r.order, r.rank, r.center_rank, r.is_c_group, r.nilpotency_class, r.solvable
        ));
    }
    out
}
