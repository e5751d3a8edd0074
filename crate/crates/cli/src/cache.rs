//! Optional on-disk memo of solved slices, one JSON file per slice.

use std::path::{Path, PathBuf};

use qschubert_canon::{string_cascade, Basis, CanonicalElement};
use qschubert_coeff::Rat;
use qschubert_pbw::{Exponent, PbwVector};
use qschubert_rootdata::Weight;
use serde::{Deserialize, Serialize};

use crate::CliError;

const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    a: Exponent,
    coords: Vec<(Exponent, Rat)>,
    norm: Rat,
}

#[derive(Serialize, Deserialize)]
struct SliceFile {
    version: u32,
    datum: String,
    word: Vec<usize>,
    degree: Weight,
    elements: Vec<Entry>,
}

fn path(dir: &Path, basis: &Basis, g: &Weight) -> PathBuf {
    let d = basis.frame().algebra().datum();
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(".");
    let gcm = join(&mut d.gcm().iter().flatten().map(|x| x.to_string()));
    let sym = join(&mut d.symmetrizers().iter().map(|x| x.to_string()));
    let word = join(&mut basis.frame().word().letters().iter().map(|x| (x + 1).to_string()));
    let deg = join(&mut g.0.iter().map(|x| x.to_string()));
    dir.join(format!("v{VERSION}_c{gcm}_d{sym}_w{word}_g{deg}.json"))
}

/// Reads a cached slice into `basis`. Missing or stale files are ignored.
pub fn load(dir: &Path, basis: &Basis, g: &Weight) -> Result<bool, CliError> {
    let Ok(s) = std::fs::read_to_string(path(dir, basis, g)) else {
        return Ok(false);
    };
    let Ok(f) = serde_json::from_str::<SliceFile>(&s) else {
        return Ok(false);
    };
    let frame = basis.frame();
    if f.version != VERSION || &f.degree != g || f.word != frame.word().letters() {
        return Ok(false);
    }
    let mut out = Vec::with_capacity(f.elements.len());
    for e in f.elements {
        let mut coords = PbwVector::default();
        for (a, c) in &e.coords {
            coords.add_term(a, c);
        }
        let dual = frame.dual_of(&coords, g)?;
        let (string, _) = string_cascade(frame.algebra(), &dual)?;
        out.push(CanonicalElement { a: e.a, degree: g.clone(), coords, dual, string, norm: e.norm });
    }
    basis.insert_slice(g, out);
    Ok(true)
}

pub fn store(dir: &Path, basis: &Basis, g: &Weight) -> Result<(), CliError> {
    let slice = basis.slice(g)?;
    let f = SliceFile {
        version: VERSION,
        datum: basis.frame().algebra().datum().to_json(),
        word: basis.frame().word().letters().to_vec(),
        degree: g.clone(),
        elements: slice
            .iter()
            .map(|b| Entry {
                a: b.a.clone(),
                coords: b.coords.coords.iter().map(|(a, c)| (a.clone(), c.clone())).collect(),
                norm: b.norm.clone(),
            })
            .collect(),
    };
    std::fs::create_dir_all(dir).map_err(|e| CliError::Invalid(format!("{}: {e}", dir.display())))?;
    let text = serde_json::to_string(&f).expect("serializable");
    std::fs::write(path(dir, basis, g), text).map_err(|e| CliError::Invalid(format!("{}: {e}", dir.display())))
}

/// Solves the slices `gs`, going through the cache when one is configured.
pub fn solve(dir: Option<&Path>, basis: &Basis, gs: &[Weight]) -> Result<(), CliError> {
    let Some(dir) = dir else {
        return Ok(basis.solve_all(gs)?);
    };
    let mut todo = Vec::new();
    for g in gs {
        if !load(dir, basis, g)? {
            todo.push(g.clone());
        }
    }
    basis.solve_all(&todo)?;
    for g in &todo {
        store(dir, basis, g)?;
    }
    Ok(())
}
