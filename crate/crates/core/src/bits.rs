//! Serde helpers that encode `bool` as the integers `0`/`1`.
//!
//! All JSON schemas in this crate write mod-2 quantities as integer bits, so
//! `{"w1_b": 1}` rather than `{"w1_b": true}`. Booleans are accepted on input
//! as well.

use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::Deserialize;
use std::fmt;

struct BitVisitor;

impl<'de> Visitor<'de> for BitVisitor {
    type Value = bool;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a bit (0 or 1)")
    }

    fn visit_bool<E: de::Error>(self, v: bool) -> Result<bool, E> {
        Ok(v)
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<bool, E> {
        match v {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(E::invalid_value(de::Unexpected::Unsigned(v), &self)),
        }
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<bool, E> {
        match v {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(E::invalid_value(de::Unexpected::Signed(v), &self)),
        }
    }
}

#[derive(Clone, Copy)]
struct Bit(bool);

impl<'de> Deserialize<'de> for Bit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(BitVisitor).map(Bit)
    }
}

pub fn serialize<S: Serializer>(b: &bool, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u8(*b as u8)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<bool, D::Error> {
    d.deserialize_any(BitVisitor)
}

/// `Vec<bool>` as a JSON array of bits.
pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(bits: &[bool], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(bits.len()))?;
        for b in bits {
            seq.serialize_element(&(*b as u8))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<bool>, D::Error> {
        let raw: Vec<Bit> = Vec::deserialize(d)?;
        Ok(raw.into_iter().map(|b| b.0).collect())
    }
}

/// `Vec<Vec<bool>>` as a JSON matrix of bits.
pub mod matrix {
    use super::*;

    pub fn serialize<S: Serializer>(rows: &[Vec<bool>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for row in rows {
            let row: Vec<u8> = row.iter().map(|b| *b as u8).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<bool>>, D::Error> {
        let raw: Vec<Vec<Bit>> = Vec::deserialize(d)?;
        Ok(raw
            .into_iter()
            .map(|row| row.into_iter().map(|b| b.0).collect())
            .collect())
    }
}
