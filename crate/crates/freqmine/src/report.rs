//! Tab-separated report rendering. Every report here is byte-exact by
//! contract: golden tests compare whole outputs, so nothing may vary
//! except through its inputs.

use std::fmt::Write as _;

use freqmine_core::{FrequencyCounter, MiningResult};

use crate::bench::BenchReport;

/// One `<token>\t<count>` line per key, ascending. An empty counter
/// renders as an empty string.
pub fn count_report(counter: &FrequencyCounter) -> String {
    let mut out = String::new();
    for (item, count) in counter.inorder() {
        writeln!(out, "{item}\t{count}").expect("writing to a String cannot fail");
    }
    out
}

/// One `<k>\t<item1,item2,...>\t<support>` line per frequent itemset,
/// levels ascending and itemsets lexicographic within a level, plus an
/// optional trailing summary comment.
pub fn mine_report(result: &MiningResult, summary: bool) -> String {
    let mut out = String::new();
    for (index, level) in result.levels().iter().enumerate() {
        let k = index + 1;
        for entry in level {
            writeln!(out, "{k}\t{}\t{}", entry.itemset, entry.support)
                .expect("writing to a String cannot fail");
        }
    }
    if summary {
        writeln!(
            out,
            "# |D|={} min_sup={} levels={}",
            result.db_size(),
            result.min_support(),
            result.levels().len()
        )
        .expect("writing to a String cannot fail");
    }
    out
}

pub const BENCH_HEADER: &str =
    "backend\tkind\tn\tdistinct\tseed\tinsert_ns\tlookup_ns\tinorder_ns\theight\tcomparisons";

/// Header plus one row per run. The height column shows `-` for backends
/// without a tree height.
pub fn bench_report(reports: &[BenchReport]) -> String {
    let mut out = String::from(BENCH_HEADER);
    out.push('\n');
    for report in reports {
        let height = match report.height {
            Some(h) => h.to_string(),
            None => "-".to_string(),
        };
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            report.backend,
            report.workload.kind(),
            report.workload.n(),
            report.workload.distinct(),
            report.workload.seed(),
            report.insert_ns,
            report.lookup_ns,
            report.inorder_ns,
            height,
            report.comparisons,
        )
        .expect("writing to a String cannot fail");
    }
    out
}
