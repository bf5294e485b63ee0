//! JSON documents for elections, nomination instances and witnesses.
//!
//! An election document has `candidates`, `voters` (rankings, most preferred
//! first), and optionally `parties` and `distinguished` (a party index).
//! Generated files also carry a `metadata` block. Candidates are written in
//! id order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::election::{Election, NominationInstance};
use crate::error::{Error, Result};

/// Where a generated file came from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub generator: String,
    /// SHA-256 of the source file's bytes, hex encoded.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_sha256: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
}

impl Metadata {
    pub fn new(generator: &str) -> Self {
        Metadata {
            generator: generator.into(),
            ..Metadata::default()
        }
    }

    pub fn with_source(mut self, bytes: &[u8]) -> Self {
        self.source_sha256 = Some(hex::encode(Sha256::digest(bytes)));
        self
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElectionDoc {
    candidates: Vec<String>,
    voters: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parties: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    distinguished: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<Metadata>,
}

fn read_doc(text: &str) -> Result<ElectionDoc> {
    serde_json::from_str(text).map_err(|e| Error::parse("election json", e.to_string()))
}

fn write_doc(doc: &ElectionDoc) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

fn names(e: &Election, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&c| e.name(c).to_owned()).collect()
}

/// An election document; parties, if present, are ignored.
pub fn parse_election(text: &str) -> Result<(Election, Option<Metadata>)> {
    let doc = read_doc(text)?;
    Ok((Election::new(&doc.candidates, &doc.voters)?, doc.metadata))
}

/// A nomination instance. `distinguished` is required; without `parties`
/// every candidate is its own party, in id order.
pub fn parse_instance(text: &str) -> Result<(NominationInstance, Option<Metadata>)> {
    let doc = read_doc(text)?;
    let election = Election::new(&doc.candidates, &doc.voters)?;
    let d = doc
        .distinguished
        .ok_or_else(|| Error::parse("election json", "field `distinguished` is required for an instance"))?;
    let parties = doc
        .parties
        .unwrap_or_else(|| election.candidates().iter().map(|c| vec![c.clone()]).collect());
    Ok((NominationInstance::from_ids(election, &parties, d)?, doc.metadata))
}

pub fn election_to_json(e: &Election, metadata: Option<&Metadata>) -> String {
    write_doc(&ElectionDoc {
        candidates: e.candidates().to_vec(),
        voters: e.rankings_by_id(),
        parties: None,
        distinguished: None,
        metadata: metadata.cloned(),
    })
}

pub fn instance_to_json(inst: &NominationInstance, metadata: Option<&Metadata>) -> String {
    let e = inst.election();
    write_doc(&ElectionDoc {
        candidates: e.candidates().to_vec(),
        voters: e.rankings_by_id(),
        parties: Some(inst.parties().iter().map(|p| names(e, p)).collect()),
        distinguished: Some(inst.distinguished()),
        metadata: metadata.cloned(),
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessDoc {
    nomination: Vec<String>,
}

/// `{"nomination": [id, ...]}` with one nominee per party, in party order.
pub fn witness_to_json(inst: &NominationInstance, witness: &[usize]) -> String {
    let mut s = serde_json::to_string_pretty(&WitnessDoc {
        nomination: names(inst.election(), witness),
    })
    .expect("serializable");
    s.push('\n');
    s
}

/// Parses a witness and checks it is a complete nomination for `inst`.
pub fn parse_witness(inst: &NominationInstance, text: &str) -> Result<Vec<usize>> {
    let doc: WitnessDoc = serde_json::from_str(text).map_err(|e| Error::parse("witness json", e.to_string()))?;
    let e = inst.election();
    let witness = doc
        .nomination
        .iter()
        .map(|id| e.index_of(id).ok_or_else(|| Error::UnknownCandidate(id.clone())))
        .collect::<Result<Vec<_>>>()?;
    inst.check_nomination(&witness)?;
    Ok(witness)
}
