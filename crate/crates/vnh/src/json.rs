//! JSON documents for tables, codes and embedding contexts.
//!
//! The element format is
//! `{"n": 2, "H": [[1,0]], "columns": [{"p": "0", "sigma": [0,1], "q": "1", "tau": [0,1]}, ...]}`
//! with `H` listing generators of the permutation group and words in their
//! text form. Canonical output sorts columns by dictionary order of `p`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::code::PrefixCode;
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup, DEFAULT_CAP};
use crate::table::{validation_errors, Column, Table};
use crate::topo::TopoContext;
use crate::words::{Alphabet, Word};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColumnDoc {
    pub p: String,
    pub sigma: Vec<usize>,
    pub q: String,
    pub tau: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableDoc {
    pub n: usize,
    #[serde(rename = "H")]
    pub group: Vec<Vec<usize>>,
    pub columns: Vec<ColumnDoc>,
}

impl TableDoc {
    pub fn from_table(table: &Table) -> TableDoc {
        TableDoc {
            n: table.n(),
            group: table.group().generators().iter().map(|g| g.image().to_vec()).collect(),
            columns: table
                .columns()
                .iter()
                .map(|c| ColumnDoc {
                    p: c.p.to_string(),
                    sigma: c.sigma.image().to_vec(),
                    q: c.q.to_string(),
                    tau: c.tau.image().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_table(&self) -> Result<Table> {
        let group = Arc::new(self.to_group()?);
        let alphabet = Alphabet::new(self.n)?;
        let columns = self
            .columns
            .iter()
            .map(|c| {
                Ok(Column::new(
                    Word::parse(&c.p, alphabet)?,
                    Perm::from_image(c.sigma.clone())?,
                    Word::parse(&c.q, alphabet)?,
                    Perm::from_image(c.tau.clone())?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Table::new(group, columns)
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        let generators = self
            .group
            .iter()
            .map(|img| Perm::from_image(img.clone()))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::generate(self.n, generators, DEFAULT_CAP)
    }

    /// Every problem with the document, reported individually: parse errors
    /// first, then table-level invariant violations.
    pub fn validation_problems(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let alphabet = match Alphabet::new(self.n) {
            Ok(a) => a,
            Err(e) => return vec![e.to_string()],
        };
        let group = match self.to_group() {
            Ok(g) => g,
            Err(e) => {
                problems.push(format!("H: {e}"));
                return problems;
            }
        };
        let mut columns = Vec::new();
        for (i, c) in self.columns.iter().enumerate() {
            let p = Word::parse(&c.p, alphabet);
            let sigma = Perm::from_image(c.sigma.clone());
            let q = Word::parse(&c.q, alphabet);
            let tau = Perm::from_image(c.tau.clone());
            match (p, sigma, q, tau) {
                (Ok(p), Ok(sigma), Ok(q), Ok(tau)) => {
                    columns.push(Column::new(p, sigma, q, tau));
                }
                (p, sigma, q, tau) => {
                    for (name, err) in [
                        ("p", p.err().map(|e| e.to_string())),
                        ("sigma", sigma.err().map(|e| e.to_string())),
                        ("q", q.err().map(|e| e.to_string())),
                        ("tau", tau.err().map(|e| e.to_string())),
                    ] {
                        if let Some(e) = err {
                            problems.push(format!("column {i}: {name}: {e}"));
                        }
                    }
                }
            }
        }
        if problems.is_empty() {
            problems.extend(validation_errors(&group, &columns));
        }
        problems
    }
}

pub fn table_to_json(table: &Table) -> String {
    let mut out = serde_json::to_string_pretty(&TableDoc::from_table(table)).expect("serialize");
    out.push('\n');
    out
}

pub fn table_from_json(text: &str) -> Result<Table> {
    let doc: TableDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_table()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ContextDoc {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "G")]
    pub group_m: Vec<Vec<usize>>,
    #[serde(rename = "H")]
    pub group_n: Vec<Vec<usize>>,
    #[serde(rename = "S")]
    pub code: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conj: Option<Vec<usize>>,
}

impl ContextDoc {
    pub fn to_context(&self) -> Result<TopoContext> {
        let gens_m = self
            .group_m
            .iter()
            .map(|img| Perm::from_image(img.clone()))
            .collect::<Result<Vec<_>>>()?;
        let gens_n = self
            .group_n
            .iter()
            .map(|img| Perm::from_image(img.clone()))
            .collect::<Result<Vec<_>>>()?;
        let group_m = PermGroup::generate(self.m, gens_m, DEFAULT_CAP)?;
        let group_n = PermGroup::generate(self.n, gens_n, DEFAULT_CAP)?;
        let alphabet = Alphabet::new(self.m)?;
        let words = self
            .code
            .iter()
            .map(|s| Word::parse(s, alphabet))
            .collect::<Result<Vec<_>>>()?;
        let code = PrefixCode::new(alphabet, words)?;
        let conj = self.conj.clone().map(Perm::from_image).transpose()?;
        TopoContext::build(group_m, group_n, code, conj)
    }
}

pub fn code_to_json(code: &PrefixCode) -> String {
    let words: Vec<String> = code.words().iter().map(Word::to_string).collect();
    let mut out = serde_json::to_string(&words).expect("serialize");
    out.push('\n');
    out
}

pub fn code_from_json(text: &str, alphabet: Alphabet) -> Result<PrefixCode> {
    let words: Vec<String> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let words = words
        .iter()
        .map(|s| Word::parse(s, alphabet))
        .collect::<Result<Vec<_>>>()?;
    PrefixCode::new(alphabet, words)
}
