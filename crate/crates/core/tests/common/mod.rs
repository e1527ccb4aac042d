#![allow(dead_code)]

use std::path::{Path, PathBuf};

use bolkit::corpus::bol_search_collect;
use bolkit::corpus::DEFAULT_SEARCH_BUDGET;
use bolkit::io;
use bolkit::table::{Loop, Magma};

pub fn corpus_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn walk(dir: &Path, ext: &str, out: &mut Vec<PathBuf>) {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
        .expect("corpus directory exists")
        .map(|e| e.unwrap().path())
        .collect();
    entries.sort();
    for e in entries {
        if e.is_dir() {
            walk(&e, ext, out);
        } else if e.extension().is_some_and(|x| x == ext) {
            out.push(e);
        }
    }
}

pub fn corpus_files(ext: &str) -> Vec<PathBuf> {
    let mut out = Vec::new();
    walk(&corpus_root(), ext, &mut out);
    out
}

pub fn name_of(p: &Path) -> String {
    p.strip_prefix(corpus_root()).unwrap().display().to_string()
}

/// Every bundled `.tbl` file as a magma.
pub fn corpus_magmas() -> Vec<(String, Magma)> {
    corpus_files("tbl")
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            (name_of(&p), io::read_magma(&text).unwrap())
        })
        .collect()
}

/// Every bundled table that is a loop.
pub fn corpus_loops() -> Vec<(String, Loop)> {
    corpus_files("tbl")
        .into_iter()
        .filter_map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            io::read_loop(&text).ok().map(|l| (name_of(&p), l))
        })
        .collect()
}

/// All labelled Bol loops of order `n` produced by the search.
pub fn search_loops(n: usize) -> Vec<(String, Loop)> {
    let (loops, stats) = bol_search_collect(n, None, DEFAULT_SEARCH_BUDGET).unwrap();
    assert!(stats.complete);
    loops
        .into_iter()
        .enumerate()
        .map(|(k, l)| (format!("bol-search/{n}/{}", k + 1), l))
        .collect()
}

pub fn read(rel: &str) -> String {
    std::fs::read_to_string(corpus_root().join(rel)).unwrap()
}
