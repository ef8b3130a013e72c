//! Browser bindings for `brace-forge`.
//!
//! Every export takes brace documents as text and returns a JSON string;
//! errors become JavaScript exceptions.

use brace_forge::corpus::{self, parse_braces, BraceDocument, GroupSpec};
use brace_forge::ideals::{enumerate_ideals, semiprime_auto};
use brace_forge::products::{semidirect, validate_sigma, wreath, SigmaAction};
use brace_forge::ybe::{check_braid, check_nondegenerate, solution_map};
use brace_forge::FiniteSkewBrace;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Orders above this are summarized without tables.
const DISPLAY_MAX: usize = 64;

#[derive(Serialize)]
struct Summary {
    name: String,
    order: usize,
    document: Option<String>,
    add: Option<Vec<Vec<usize>>>,
    circ: Option<Vec<Vec<usize>>>,
    add_abelian: bool,
    circ_abelian: bool,
    ideals: Vec<Vec<usize>>,
    semiprime: bool,
    witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct Example {
    name: String,
    order: usize,
    document: String,
}

#[derive(Serialize)]
struct Solution {
    name: String,
    order: usize,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    braid: Option<[usize; 3]>,
    nondegenerate: bool,
    flip: bool,
}

fn first(text: &str) -> Result<FiniteSkewBrace, String> {
    parse_braces(text).map_err(|e| e.to_string())?.into_iter().next().ok_or_else(|| "no brace document".to_string())
}

fn json(value: &impl Serialize) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn summary(b: &FiniteSkewBrace) -> Result<Summary, String> {
    let small = b.order() <= DISPLAY_MAX;
    let ideals = enumerate_ideals(b).map_err(|e| e.to_string())?;
    let verdict = semiprime_auto(b).map_err(|e| e.to_string())?;
    Ok(Summary {
        name: b.name().to_string(),
        order: b.order(),
        document: small.then(|| BraceDocument::from_brace(b).to_string()),
        add: small.then(|| b.add_rows()),
        circ: small.then(|| b.circ_rows()),
        add_abelian: b.is_add_abelian(),
        circ_abelian: b.is_circ_abelian(),
        ideals: ideals.iter().map(|i| i.members().to_vec()).collect(),
        semiprime: verdict.semiprime,
        witness: verdict.witness.map(|w| w.members().to_vec()),
    })
}

/// Named examples and the braces on C4, C2xC2 and S3.
pub fn examples_json() -> Result<String, String> {
    let mut braces = corpus::named_examples().map_err(|e| e.to_string())?;
    braces.retain(|b| b.order() <= 12);
    for spec in ["C4", "C2xC2", "S3"] {
        let spec: GroupSpec = spec.parse().map_err(|e: brace_forge::Error| e.to_string())?;
        braces.extend(corpus::holomorph_enumerate(&spec, 8).map_err(|e| e.to_string())?);
    }
    let list: Vec<Example> = braces
        .iter()
        .map(|b| Example { name: b.name().to_string(), order: b.order(), document: BraceDocument::from_brace(b).to_string() })
        .collect();
    json(&list)
}

pub fn analyze_json(text: &str) -> Result<String, String> {
    json(&summary(&first(text)?)?)
}

/// `kind` is `semidirect` or `wreath`; `sigma` lists one permutation of G
/// per element of H, separated by `;`, and may be empty for the trivial action.
pub fn product_json(g: &str, h: &str, kind: &str, sigma: &str) -> Result<String, String> {
    let (g, h) = (first(g)?, first(h)?);
    let p = match kind {
        "wreath" => wreath(&g, &h),
        "semidirect" => {
            let action = if sigma.trim().is_empty() {
                SigmaAction::trivial(&g, &h)
            } else {
                let perms = sigma
                    .split(';')
                    .map(|p| p.split_whitespace().map(|t| t.parse::<usize>().map_err(|e| e.to_string())).collect())
                    .collect::<Result<_, _>>()?;
                validate_sigma(&g, &h, perms).map_err(|e| e.to_string())?
            };
            semidirect(&g, &h, &action)
        }
        other => return Err(format!("unknown product {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    json(&summary(&p)?)
}

pub fn ybe_json(text: &str) -> Result<String, String> {
    let b = first(text)?;
    let s = solution_map(&b);
    let n = s.order();
    let rows = |pick: fn((usize, usize)) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| pick(s.apply(x, y))).collect()).collect()
    };
    json(&Solution {
        name: b.name().to_string(),
        order: n,
        left: rows(|p| p.0),
        right: rows(|p| p.1),
        braid: check_braid(&s).err(),
        nondegenerate: check_nondegenerate(&s),
        flip: s.is_flip(),
    })
}

#[wasm_bindgen]
pub fn examples() -> Result<String, JsError> {
    examples_json().map_err(|e| JsError::new(&e))
}

/// Tables, ideals and semiprimality of the first brace in `text`.
#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    analyze_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn product(g: &str, h: &str, kind: &str, sigma: &str) -> Result<String, JsError> {
    product_json(g, h, kind, sigma).map_err(|e| JsError::new(&e))
}

/// The Yang–Baxter solution of the first brace in `text`, with its checks.
#[wasm_bindgen]
pub fn ybe(text: &str) -> Result<String, JsError> {
    ybe_json(text).map_err(|e| JsError::new(&e))
}
