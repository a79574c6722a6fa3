//! Std companion to `redgraph-core`: line-oriented graph6 IO, census
//! caching, CSV/JSON records, and parallel batch drivers. All
//! computation lives in the core crate; this one only moves data.

use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use redgraph_core::enumerate::{generate_all, EnumError};
use redgraph_core::graph6::{from_graph6, to_graph6, Graph6Error};
use redgraph_core::random::{gnp_cell, mix_seed, GnpRow};
use redgraph_core::Graph;

/// graph6 lines from a reader: blank lines and the optional
/// `>>graph6<<` header are skipped, everything else must parse.
pub fn read_graph6_lines<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = Result<(usize, Graph), LineError>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(LineError { line: i + 1, kind: LineErrorKind::Io(e.to_string()) })),
            Ok(text) => {
                let text = text.strip_prefix(">>graph6<<").unwrap_or(&text).trim();
                if text.is_empty() {
                    return None;
                }
                Some(match from_graph6(text) {
                    Ok(g) => Ok((i + 1, g)),
                    Err(e) => {
                        Err(LineError { line: i + 1, kind: LineErrorKind::Format(e) })
                    }
                })
            }
        })
}

#[derive(Debug)]
pub struct LineError {
    pub line: usize,
    pub kind: LineErrorKind,
}

#[derive(Debug)]
pub enum LineErrorKind {
    Io(String),
    Format(Graph6Error),
}

impl std::fmt::Display for LineError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            LineErrorKind::Io(e) => write!(f, "line {}: {e}", self.line),
            LineErrorKind::Format(e) => write!(f, "line {}: {e}", self.line),
        }
    }
}

impl std::error::Error for LineError {}

/// Applies `f` to each input graph with bounded parallelism, writing
/// results in input order. `jobs = 1` stays fully sequential and
/// streams one graph at a time.
pub fn process_lines<R, W, F>(reader: R, out: &mut W, jobs: usize, f: F) -> anyhow::Result<()>
where
    R: BufRead,
    W: Write,
    F: Fn(&Graph) -> String + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 {
        for item in read_graph6_lines(reader) {
            let (_, g) = item?;
            writeln!(out, "{}", f(&g))?;
        }
        return Ok(());
    }
    // chunked: parallel within a chunk, chunks emitted in order
    let mut iter = read_graph6_lines(reader);
    loop {
        let mut chunk = Vec::with_capacity(jobs * 64);
        for item in iter.by_ref().take(jobs * 64) {
            chunk.push(item?.1);
        }
        if chunk.is_empty() {
            return Ok(());
        }
        let results: Vec<String> = chunk.par_iter().map(|g| f(g)).collect();
        for r in results {
            writeln!(out, "{r}")?;
        }
    }
}

/// The order-n census, read from `dir/graphs_n{n}.g6` when present,
/// otherwise generated and written there (when a directory is given).
pub fn census_cached(n: usize, dir: Option<&Path>) -> Result<Vec<Graph>, anyhow::Error> {
    if let Some(dir) = dir {
        let path = cache_path(dir, n);
        if path.exists() {
            let data = fs::read_to_string(&path)?;
            let mut graphs = Vec::new();
            for line in data.lines().filter(|l| !l.trim().is_empty()) {
                graphs.push(from_graph6(line.trim()).map_err(|e| anyhow::anyhow!("{e}"))?);
            }
            return Ok(graphs);
        }
    }
    let graphs = generate_all(n).map_err(|e: EnumError| anyhow::anyhow!("{e}"))?;
    if let Some(dir) = dir {
        fs::create_dir_all(dir)?;
        let mut text = String::new();
        for g in &graphs {
            text.push_str(&to_graph6(g));
            text.push('\n');
        }
        fs::write(cache_path(dir, n), text)?;
    }
    Ok(graphs)
}

fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("graphs_n{n}.g6"))
}

/// Parallel G(n,p) scan over a p grid; cell seeding matches the
/// sequential core scan exactly, so worker count never changes output.
pub fn gnp_scan_parallel(
    n: usize,
    p_grid: &[f64],
    samples: usize,
    seed: u64,
    second_order: bool,
    jobs: usize,
) -> Vec<GnpRow> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        p_grid
            .par_iter()
            .enumerate()
            .map(|(i, &p)| {
                gnp_cell(n, p, samples, mix_seed(seed, 0x10_0000 + i as u64), second_order)
            })
            .collect()
    })
}

/// CSV escaping is unnecessary for our numeric/enum fields; this just
/// joins with commas and writes an optional-f64 as an empty field.
pub fn csv_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use redgraph_core::graph::families::cycle;
    use std::io::Cursor;

    #[test]
    fn reads_lines_skipping_blanks_and_header() {
        let c5 = to_graph6(&cycle(5));
        let input = format!(">>graph6<<{c5}\n\n{c5}\n");
        let got: Vec<_> =
            read_graph6_lines(Cursor::new(input)).map(|r| r.unwrap()).collect();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].1, cycle(5));
        assert_eq!(got[1].0, 3);
    }

    #[test]
    fn bad_line_reports_its_number() {
        let input = format!("{}\n!!!\n", to_graph6(&cycle(4)));
        let errs: Vec<_> = read_graph6_lines(Cursor::new(input))
            .filter_map(|r| r.err())
            .collect();
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].line, 2);
    }

    #[test]
    fn parallel_output_preserves_order() {
        let mut input = String::new();
        for n in 3..40 {
            input.push_str(&to_graph6(&cycle(n)));
            input.push('\n');
        }
        let mut seq = Vec::new();
        let mut par = Vec::new();
        let f = |g: &Graph| format!("{}", g.order());
        process_lines(Cursor::new(input.clone()), &mut seq, 1, f).unwrap();
        process_lines(Cursor::new(input), &mut par, 4, f).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn census_cache_roundtrip() {
        let dir = std::env::temp_dir().join(format!("redgraph-cache-{}", std::process::id()));
        let fresh = census_cached(5, Some(&dir)).unwrap();
        assert_eq!(fresh.len(), 34);
        let cached = census_cached(5, Some(&dir)).unwrap();
        assert_eq!(fresh, cached);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn parallel_scan_matches_sequential() {
        use redgraph_core::random::gnp_scan;
        let grid = [0.1, 0.2, 0.4];
        let seq = gnp_scan(16, &grid, 40, 3, false);
        let par = gnp_scan_parallel(16, &grid, 40, 3, false, 4);
        assert_eq!(seq, par);
    }
}
