//! The `count` subcommand: exact counts for each object family.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use trilace::enumerate::{
    boundary_key, count_arrays_report, count_colorings_free_base, count_colorings_king,
    count_face_distinct_square_labelings, count_triangle_colorings, enumerate_arrays,
    enumerate_puzzles_0110, enumerate_puzzles_123, enumerate_square_labelings, PieceFilter,
};
use trilace::{BinaryString, InterlacingArray, PatternFilter};

use crate::out::{csv_row, print_json, Format};
use crate::{usage, CliError};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "arrays")]
    Arrays,
    #[value(name = "puzzles123")]
    Puzzles123,
    #[value(name = "puzzles0110")]
    Puzzles0110,
    #[value(name = "colorings")]
    Colorings,
    #[value(name = "square-labelings")]
    SquareLabelings,
    #[value(name = "king-colorings")]
    KingColorings,
    #[value(name = "face-distinct")]
    FaceDistinct,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Arrays => "arrays",
            Family::Puzzles123 => "puzzles123",
            Family::Puzzles0110 => "puzzles0110",
            Family::Colorings => "colorings",
            Family::SquareLabelings => "square-labelings",
            Family::KingColorings => "king-colorings",
            Family::FaceDistinct => "face-distinct",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    #[value(name = "none")]
    None,
    #[value(name = "k")]
    K,
    #[value(name = "dual-k")]
    DualK,
    #[value(name = "both")]
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PiecesArg {
    #[value(name = "none")]
    None,
    #[value(name = "no-up-tens")]
    NoUpTens,
    #[value(name = "no-down-tens")]
    NoDownTens,
    #[value(name = "no-tens")]
    NoTens,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    /// Face backtracking for free standard rank 3 and 4 counts, row
    /// extension otherwise.
    #[value(name = "auto")]
    Auto,
    /// Row extension with per-symbol windows; the only engine that applies
    /// `--filter` and fixed boundaries directly.
    #[value(name = "rows")]
    Rows,
    /// Face-by-face backtracking through the puzzle or square-grid
    /// bijection (falls back to rows where no bijection applies).
    #[value(name = "backtrack")]
    Backtrack,
}

#[derive(Args)]
pub struct CountArgs {
    /// Object family to count.
    #[arg(value_enum, value_name = "FAMILY")]
    family_pos: Option<Family>,
    /// Object family, as a flag instead of the positional form.
    #[arg(long = "family", value_enum, value_name = "FAMILY")]
    family_flag: Option<Family>,
    /// Rank (number of triangles); arrays only.
    #[arg(short = 'm', value_name = "RANK")]
    rank: Option<usize>,
    /// Height of the arrays, or side length of the grid family.
    #[arg(short = 'n', value_name = "SIZE")]
    size: usize,
    /// Row filter for arrays: none, k, dual-k, or both.
    #[arg(long, value_enum, value_name = "FILTER")]
    filter: Option<FilterArg>,
    /// Face filter for puzzles0110: none, no-up-tens, no-down-tens, no-tens.
    #[arg(long, value_enum, value_name = "PIECES")]
    pieces: Option<PiecesArg>,
    /// Fixed boundary: comma-separated side words (top rows for arrays).
    #[arg(long, value_name = "WORDS")]
    boundary: Option<String>,
    /// Counting engine for arrays.
    #[arg(long, value_enum, value_name = "ENGINE")]
    engine: Option<EngineArg>,
    /// Break the total down by boundary.
    #[arg(long)]
    per_boundary: bool,
    /// Count colorings without fixing the basepoint color (raw total).
    #[arg(long)]
    free_base: bool,
    /// Number of colors for king-colorings (default 5).
    #[arg(long, value_name = "COLORS")]
    colors: Option<u8>,
}

struct CountDoc {
    family: Family,
    rank: Option<usize>,
    n: usize,
    total: BigUint,
    by_boundary: Option<BTreeMap<String, BigUint>>,
}

fn parse_side_words(spec: &str, sides: usize, len: usize) -> Result<Vec<Vec<u8>>, CliError> {
    let words: Vec<Vec<u8>> = spec
        .split(',')
        .map(|w| {
            w.trim()
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| usage(format!("boundary word {w} has a non-digit")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if words.len() != sides {
        return Err(usage(format!(
            "boundary needs {sides} comma-separated words, got {}",
            words.len()
        )));
    }
    if let Some(w) = words.iter().find(|w| w.len() != len) {
        return Err(usage(format!(
            "boundary words must have length {len}, got one of length {}",
            w.len()
        )));
    }
    Ok(words)
}

fn reject_flag(cond: bool, flag: &str, family: Family) -> Result<(), CliError> {
    if cond {
        Err(usage(format!("{flag} does not apply to {}", family.name())))
    } else {
        Ok(())
    }
}

pub fn run(args: CountArgs, format: Format) -> Result<(), CliError> {
    let family = match (args.family_pos, args.family_flag) {
        (Some(f), None) | (None, Some(f)) => f,
        (None, None) => return Err(usage("name a family, positionally or via --family")),
        (Some(_), Some(_)) => {
            return Err(usage("give the family exactly once, positionally or via --family"))
        }
    };
    let n = args.size;
    if family != Family::Arrays {
        reject_flag(args.rank.is_some(), "-m", family)?;
        reject_flag(args.filter.is_some(), "--filter", family)?;
        reject_flag(args.engine.is_some(), "--engine", family)?;
    }
    if family != Family::Puzzles0110 {
        reject_flag(args.pieces.is_some(), "--pieces", family)?;
    }
    if family != Family::KingColorings {
        reject_flag(args.colors.is_some(), "--colors", family)?;
    }
    if !matches!(family, Family::Colorings | Family::KingColorings) {
        reject_flag(args.free_base, "--free-base", family)?;
    }
    if !matches!(
        family,
        Family::Arrays | Family::Puzzles123 | Family::Puzzles0110 | Family::SquareLabelings
    ) {
        reject_flag(args.boundary.is_some(), "--boundary", family)?;
        reject_flag(args.per_boundary, "--per-boundary", family)?;
    }

    let started = Instant::now();
    eprintln!("counting {} at n = {n}", family.name());
    let doc = match family {
        Family::Arrays => count_arrays_family(&args, n)?,
        Family::Puzzles123 => {
            let boundary = match &args.boundary {
                Some(spec) => {
                    let words = parse_side_words(spec, 3, n)?;
                    Some([words[0].clone(), words[1].clone(), words[2].clone()])
                }
                None => None,
            };
            let puzzles = enumerate_puzzles_123(n, boundary.as_ref())
                .map_err(|e| usage(e.to_string()))?;
            let by_boundary = args.per_boundary.then(|| {
                let mut map = BTreeMap::new();
                for p in &puzzles {
                    let key = p
                        .boundary()
                        .iter()
                        .map(|side| side.iter().map(u8::to_string).collect::<String>())
                        .collect::<Vec<_>>()
                        .join("|");
                    *map.entry(key).or_default() += 1u8;
                }
                map
            });
            CountDoc {
                family,
                rank: None,
                n,
                total: puzzles.len().into(),
                by_boundary,
            }
        }
        Family::Puzzles0110 => {
            let boundary = match &args.boundary {
                Some(spec) => {
                    let words = parse_side_words(spec, 3, n)?;
                    let strings: Vec<BinaryString> = words
                        .iter()
                        .map(|w| BinaryString::new(w.clone()))
                        .collect::<Result<_, _>>()
                        .map_err(|e| usage(e.to_string()))?;
                    Some([strings[0].clone(), strings[1].clone(), strings[2].clone()])
                }
                None => None,
            };
            let pieces = match args.pieces.unwrap_or(PiecesArg::None) {
                PiecesArg::None => PieceFilter::None,
                PiecesArg::NoUpTens => PieceFilter::NoUpTens,
                PiecesArg::NoDownTens => PieceFilter::NoDownTens,
                PiecesArg::NoTens => PieceFilter::NoTens,
            };
            let puzzles = enumerate_puzzles_0110(n, boundary.as_ref(), pieces)
                .map_err(|e| usage(e.to_string()))?;
            let by_boundary = args.per_boundary.then(|| {
                let mut map = BTreeMap::new();
                for p in &puzzles {
                    let key = p
                        .boundary()
                        .iter()
                        .map(|side| {
                            side.iter().map(|l| l.as_str()).collect::<Vec<_>>().join("")
                        })
                        .collect::<Vec<_>>()
                        .join("|");
                    *map.entry(key).or_default() += 1u8;
                }
                map
            });
            CountDoc {
                family,
                rank: None,
                n,
                total: puzzles.len().into(),
                by_boundary,
            }
        }
        Family::Colorings => {
            let total = if args.free_base {
                count_colorings_free_base(n)
            } else {
                count_triangle_colorings(n)
            };
            CountDoc { family, rank: None, n, total, by_boundary: None }
        }
        Family::SquareLabelings => {
            let boundary = match &args.boundary {
                Some(spec) => {
                    let words = parse_side_words(spec, 4, n)?;
                    Some([
                        words[0].clone(),
                        words[1].clone(),
                        words[2].clone(),
                        words[3].clone(),
                    ])
                }
                None => None,
            };
            let labelings = enumerate_square_labelings(n, boundary.as_ref())
                .map_err(|e| usage(e.to_string()))?;
            CountDoc {
                family,
                rank: None,
                n,
                total: labelings.len().into(),
                by_boundary: None,
            }
        }
        Family::KingColorings => {
            let colors = args.colors.unwrap_or(5);
            if colors == 0 {
                return Err(usage("--colors must be positive"));
            }
            let raw = count_colorings_king(n, colors);
            let total = if args.free_base || n == 0 {
                raw
            } else {
                // Swapping two colors is a bijection between the colorings
                // fixing either color at one corner, so the raw total splits
                // into `colors` equal classes.
                raw / colors
            };
            CountDoc { family, rank: None, n, total, by_boundary: None }
        }
        Family::FaceDistinct => CountDoc {
            family,
            rank: None,
            n,
            total: count_face_distinct_square_labelings(n),
            by_boundary: None,
        },
    };
    eprintln!(
        "counted {} in {} ms",
        family.name(),
        started.elapsed().as_millis()
    );
    render(&doc, format);
    Ok(())
}

fn count_arrays_family(args: &CountArgs, n: usize) -> Result<CountDoc, CliError> {
    let m = args
        .rank
        .ok_or_else(|| usage("counting arrays needs -m"))?;
    if m == 0 {
        return Err(usage("-m must be at least 1"));
    }
    let alphabet = InterlacingArray::standard_alphabet(m);
    let filter = match args.filter.unwrap_or(FilterArg::None) {
        FilterArg::None => PatternFilter::None,
        FilterArg::K => PatternFilter::KTheory,
        FilterArg::DualK => PatternFilter::DualKTheory,
        FilterArg::Both => PatternFilter::Both,
    };
    let top = match &args.boundary {
        Some(spec) => Some(parse_side_words(spec, m, n)?),
        None => None,
    };
    let engine = args.engine.unwrap_or(EngineArg::Auto);
    let free = top.is_none() && filter == PatternFilter::None;
    let use_backtrack = match engine {
        EngineArg::Rows => false,
        EngineArg::Backtrack => true,
        EngineArg::Auto => free && (m == 3 || m == 4),
    };
    if use_backtrack {
        let arrays = enumerate_arrays(&alphabet, n, top.as_deref(), filter)
            .map_err(|e| usage(e.to_string()))?;
        let by_boundary = args.per_boundary.then(|| {
            let mut map: BTreeMap<String, BigUint> = BTreeMap::new();
            for t in &arrays {
                let key = boundary_key(m, t.flat_rows().last().map(Vec::as_slice).unwrap_or(&[]));
                *map.entry(key).or_default() += 1u8;
            }
            map
        });
        Ok(CountDoc {
            family: Family::Arrays,
            rank: Some(m),
            n,
            total: arrays.len().into(),
            by_boundary,
        })
    } else {
        let report = count_arrays_report(&alphabet, n, top.as_deref(), filter, args.per_boundary)
            .map_err(|e| usage(e.to_string()))?;
        eprintln!("examined {} extension candidates", report.nodes);
        Ok(CountDoc {
            family: Family::Arrays,
            rank: Some(m),
            n,
            total: report.total,
            by_boundary: report.by_boundary,
        })
    }
}

fn render(doc: &CountDoc, format: Format) {
    match format {
        Format::Text => {
            println!("{}", doc.total);
            if let Some(map) = &doc.by_boundary {
                for (key, count) in map {
                    println!("{key}\t{count}");
                }
            }
        }
        Format::Json => {
            let mut v = json!({
                "family": doc.family.name(),
                "n": doc.n,
                "total": doc.total.to_string(),
            });
            if let Some(m) = doc.rank {
                v["m"] = json!(m);
            }
            if let Some(map) = &doc.by_boundary {
                let map: BTreeMap<&String, String> =
                    map.iter().map(|(k, c)| (k, c.to_string())).collect();
                v["by_boundary"] = json!(map);
            }
            print_json(&v);
        }
        Format::Csv => {
            csv_row(&["total", &doc.total.to_string()]);
            if let Some(map) = &doc.by_boundary {
                for (key, count) in map {
                    csv_row(&["boundary", key, &count.to_string()]);
                }
            }
        }
    }
}
