//! The `map` subcommand: apply a bijection to serialized objects.

use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde_json::Value;

use trilace::maps::{
    array_from_labeling, array_from_puzzle, coloring_to_puzzle, convert_0110_to_123,
    convert_123_to_0110, labeling_from_array, merge, puzzle_from_array, puzzle_to_coloring, split,
};
use trilace::{
    InterlacingArray, SquareLabeling, TriangleColoring, TrianglePuzzle0110, TrianglePuzzle123,
};

use crate::out::{print_json, Format};
use crate::{usage, CliError};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Rank-3 array to triangle puzzle over 1/2/3.
    #[value(name = "array-to-puzzle")]
    ArrayToPuzzle,
    /// Triangle puzzle over 1/2/3 to rank-3 array.
    #[value(name = "puzzle-to-array")]
    PuzzleToArray,
    /// Rank-4 array to square-grid edge labeling.
    #[value(name = "array-to-labeling")]
    ArrayToLabeling,
    /// Square-grid edge labeling to rank-4 array.
    #[value(name = "labeling-to-array")]
    LabelingToArray,
    /// Triangle puzzle over 1/2/3 to vertex coloring.
    #[value(name = "puzzle-to-coloring")]
    PuzzleToColoring,
    /// Vertex coloring to triangle puzzle over 1/2/3.
    #[value(name = "coloring-to-puzzle")]
    ColoringToPuzzle,
    /// Relabel a puzzle between the 1/2/3 and 0/1/10 systems
    /// (direction picked from the input's type tag).
    #[value(name = "convert")]
    Convert,
    /// Split an array of rank 4 or more into a rank-3 piece and the rest.
    #[value(name = "split")]
    Split,
    /// Merge a rank-3 piece and the rest back into one array.
    #[value(name = "merge")]
    Merge,
}

#[derive(Args)]
pub struct MapArgs {
    /// Which bijection to apply.
    #[arg(value_enum)]
    direction: Direction,
    /// Input files holding JSON objects (`-` reads standard input).
    /// `merge` takes two files, or one file holding a two-element list.
    #[arg(value_name = "FILE", required = true)]
    inputs: Vec<PathBuf>,
}

fn read_value(path: &PathBuf) -> Result<Value> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn decode<T: serde::de::DeserializeOwned>(value: Value, what: &str) -> Result<T> {
    serde_json::from_value(value).with_context(|| format!("decoding input as {what}"))
}

fn type_tag(value: &Value) -> Result<&str> {
    value
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow::anyhow!("input has no \"type\" tag"))
}

pub fn run(args: MapArgs, format: Format) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(usage("map emits structured objects; use --format text or json"));
    }
    let expected = if args.direction == Direction::Merge {
        None // one list file or two files
    } else {
        Some(1)
    };
    if let Some(count) = expected {
        if args.inputs.len() != count {
            return Err(usage(format!(
                "this direction takes exactly {count} input file(s), got {}",
                args.inputs.len()
            )));
        }
    } else if !(args.inputs.len() == 1 || args.inputs.len() == 2) {
        return Err(usage(format!(
            "merge takes two input files or one list file, got {}",
            args.inputs.len()
        )));
    }
    let output = apply(&args).map_err(|e| CliError::Failed(format!("{e:#}")))?;
    print_json(&output);
    Ok(())
}

fn apply(args: &MapArgs) -> Result<Value> {
    let first = read_value(&args.inputs[0])?;
    let out = match args.direction {
        Direction::ArrayToPuzzle => {
            let t: InterlacingArray = decode(first, "an interlacing array")?;
            serde_json::to_value(puzzle_from_array(&t)?)?
        }
        Direction::PuzzleToArray => {
            let p: TrianglePuzzle123 = decode(first, "a 1/2/3 puzzle")?;
            serde_json::to_value(array_from_puzzle(&p))?
        }
        Direction::ArrayToLabeling => {
            let t: InterlacingArray = decode(first, "an interlacing array")?;
            serde_json::to_value(labeling_from_array(&t)?)?
        }
        Direction::LabelingToArray => {
            let d: SquareLabeling = decode(first, "a square-grid labeling")?;
            serde_json::to_value(array_from_labeling(&d))?
        }
        Direction::PuzzleToColoring => {
            let p: TrianglePuzzle123 = decode(first, "a 1/2/3 puzzle")?;
            serde_json::to_value(puzzle_to_coloring(&p)?)?
        }
        Direction::ColoringToPuzzle => {
            let c: TriangleColoring = decode(first, "a vertex coloring")?;
            serde_json::to_value(coloring_to_puzzle(&c))?
        }
        Direction::Convert => match type_tag(&first)? {
            "puzzle123" => {
                let p: TrianglePuzzle123 = decode(first, "a 1/2/3 puzzle")?;
                serde_json::to_value(convert_123_to_0110(&p))?
            }
            "puzzle0110" => {
                let p: TrianglePuzzle0110 = decode(first, "a 0/1/10 puzzle")?;
                serde_json::to_value(convert_0110_to_123(&p))?
            }
            other => bail!("convert expects a puzzle, got type {other:?}"),
        },
        Direction::Split => {
            let t: InterlacingArray = decode(first, "an interlacing array")?;
            let (small, rest) = split(&t)?;
            Value::Array(vec![
                serde_json::to_value(small)?,
                serde_json::to_value(rest)?,
            ])
        }
        Direction::Merge => {
            let (a, b) = if args.inputs.len() == 2 {
                (first, read_value(&args.inputs[1])?)
            } else {
                match first {
                    Value::Array(items) if items.len() == 2 => {
                        let mut it = items.into_iter();
                        (it.next().unwrap(), it.next().unwrap())
                    }
                    _ => bail!("merge with one file expects a two-element JSON list"),
                }
            };
            let small: InterlacingArray = decode(a, "the rank-3 piece")?;
            let rest: InterlacingArray = decode(b, "the remaining piece")?;
            serde_json::to_value(merge(&small, &rest)?)?
        }
    };
    Ok(out)
}
