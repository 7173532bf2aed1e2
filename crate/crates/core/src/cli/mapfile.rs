//! JSON map files and the golden CSV format.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::adlv::{DimensionMap, Entry, EnumerationMode};
use crate::affine_weyl::{length, Alcove};
use crate::error::{Error, Result};
use crate::root_data::{parse_word, Coords, RootSystem, RootSystemKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEntry {
    pub lambda: Coords,
    pub word: String,
    pub length: i64,
    /// `None` encodes an empty variety.
    pub dim: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub group: RootSystemKind,
    pub radius: i64,
    pub window: i64,
    #[serde(default)]
    pub mode: EnumerationMode,
    pub stability: bool,
    pub entries: Vec<MapEntry>,
}

impl MapFile {
    pub fn from_map(dm: &DimensionMap) -> MapFile {
        let rs = &dm.rs;
        let mut entries: Vec<MapEntry> = dm
            .entries
            .iter()
            .map(|(a, e)| MapEntry {
                lambda: a.lambda,
                word: a.word(rs),
                length: length(rs, a),
                dim: e.dim(),
            })
            .collect();
        sort_entries(&mut entries);
        MapFile {
            group: rs.kind,
            radius: dm.radius,
            window: dm.window,
            mode: dm.mode,
            stability: dm.stability,
            entries,
        }
    }

    /// Pretty JSON with object keys in sorted order, newline terminated.
    pub fn to_json(&self) -> Result<String> {
        let value = serde_json::to_value(self)?;
        let mut s = serde_json::to_string_pretty(&value)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<MapFile> {
        let mf: MapFile = serde_json::from_str(text)?;
        mf.validate()?;
        Ok(mf)
    }

    pub fn read(path: &Path) -> Result<MapFile> {
        MapFile::from_json(&std::fs::read_to_string(path)?)
    }

    /// Checks that every entry names a real alcove with the stated length.
    pub fn validate(&self) -> Result<()> {
        let rs = RootSystem::new(self.group);
        for e in &self.entries {
            let a = entry_alcove(&rs, e)?;
            if a.word(&rs) != e.word {
                return Err(Error::Parse(format!(
                    "word `{}` is not the canonical word `{}`",
                    e.word,
                    a.word(&rs)
                )));
            }
            if length(&rs, &a) != e.length {
                return Err(Error::Parse(format!(
                    "entry {:?} {} has length {}, expected {}",
                    e.lambda,
                    e.word,
                    e.length,
                    length(&rs, &a)
                )));
            }
        }
        Ok(())
    }

    pub fn alcove_entries(&self, rs: &RootSystem) -> Result<HashMap<Alcove, Entry>> {
        self.entries
            .iter()
            .map(|e| Ok((entry_alcove(rs, e)?, Entry::from_dim(e.dim))))
            .collect()
    }

    /// Rows in the golden CSV layout.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for e in &self.entries {
            w.serialize(GoldenRow {
                group: self.group,
                lambda1: e.lambda[0],
                lambda2: e.lambda[1],
                word: e.word.clone(),
                length: e.length,
                dim: e.dim,
            })?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Sort by length, then `lambda`, then word.
pub fn sort_entries(entries: &mut [MapEntry]) {
    entries.sort_by(|a, b| (a.length, a.lambda, &a.word).cmp(&(b.length, b.lambda, &b.word)));
}

fn entry_alcove(rs: &RootSystem, e: &MapEntry) -> Result<Alcove> {
    if rs.rank == 1 && e.lambda[1] != 0 {
        return Err(Error::Parse(format!(
            "rank-1 entry with lambda {:?}",
            e.lambda
        )));
    }
    let w = rs.from_word(&parse_word(&e.word)?)?;
    Ok(Alcove::new(rs, e.lambda, w))
}

/// One row of a transcribed golden CSV.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub group: RootSystemKind,
    pub lambda1: i64,
    pub lambda2: i64,
    pub word: String,
    pub length: i64,
    pub dim: Option<i64>,
}

impl GoldenRow {
    pub fn alcove(&self, rs: &RootSystem) -> Result<Alcove> {
        entry_alcove(
            rs,
            &MapEntry {
                lambda: [self.lambda1, self.lambda2],
                word: self.word.clone(),
                length: self.length,
                dim: self.dim,
            },
        )
    }
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize()
        .map(|row| row.map_err(Error::from))
        .collect()
}

/// Golden tables shipped with the crate.
pub fn bundled_golden(kind: RootSystemKind) -> Option<&'static str> {
    match kind {
        RootSystemKind::A2 => Some(include_str!("../../data/golden_a2.csv")),
        RootSystemKind::C2 => Some(include_str!("../../data/golden_c2.csv")),
        RootSystemKind::A1 => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tables_parse_and_are_consistent() {
        for kind in [RootSystemKind::A2, RootSystemKind::C2] {
            let rs = RootSystem::new(kind);
            let rows = parse_golden(bundled_golden(kind).unwrap()).unwrap();
            assert!(!rows.is_empty());
            for row in rows {
                assert_eq!(row.group, kind);
                let a = row.alcove(&rs).unwrap();
                assert_eq!(length(&rs, &a), row.length, "{row:?}");
            }
        }
    }

    #[test]
    fn empty_dim_is_null() {
        let mf = MapFile {
            group: RootSystemKind::A1,
            radius: 3,
            window: 1,
            mode: EnumerationMode::AllVertices,
            stability: true,
            entries: vec![MapEntry {
                lambda: [0, 0],
                word: "s1".into(),
                length: 1,
                dim: None,
            }],
        };
        let json = mf.to_json().unwrap();
        assert!(json.contains("\"dim\": null"));
        assert_eq!(MapFile::from_json(&json).unwrap(), mf);
    }

    #[test]
    fn keys_are_sorted() {
        let mf = MapFile {
            group: RootSystemKind::A2,
            radius: 1,
            window: 0,
            mode: EnumerationMode::AllVertices,
            stability: true,
            entries: vec![MapEntry {
                lambda: [0, 0],
                word: "e".into(),
                length: 0,
                dim: Some(0),
            }],
        };
        let json = mf.to_json().unwrap();
        let keys = [
            "\"entries\"",
            "\"group\"",
            "\"mode\"",
            "\"radius\"",
            "\"stability\"",
            "\"window\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn wrong_length_is_rejected() {
        let text = r#"{"group":"a2","radius":1,"window":0,"stability":true,
            "entries":[{"lambda":[0,0],"word":"s1","length":4,"dim":1}]}"#;
        assert!(matches!(MapFile::from_json(text), Err(Error::Parse(_))));
    }
}
