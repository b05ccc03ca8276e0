#![allow(dead_code)]

use std::path::PathBuf;

use vclass::cone::SchemePresentation;
use vclass::script::{parse, scheme_bindings, RunConfig};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Every `.vc` file in the corpus, sorted by name.
pub fn corpus_files() -> Vec<(String, String)> {
    let mut files: Vec<_> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "vc"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect()
}

/// `(file:name, scheme)` for every scheme bound anywhere in the corpus.
pub fn corpus_schemes() -> Vec<(String, SchemePresentation)> {
    let mut out = Vec::new();
    for (file, src) in corpus_files() {
        let script = parse(&src).unwrap();
        for (name, x) in scheme_bindings(&script, &RunConfig::default()).unwrap() {
            out.push((format!("{}:{}", file, name), x));
        }
    }
    out
}
