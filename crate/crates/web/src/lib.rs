//! WebAssembly bindings for the demo page in `www/`.
//!
//! Each exported function returns a JSON string; errors become JS exceptions.

use qchar::haar::hciz;
use qchar::heckealg::CharacterTable;
use qchar::partitions::Partition;
use qchar::qmatrix::{random_diagonal, MatrixPoint};
use qchar::rmatrix::{quantum_rank, HeckeSymmetry};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use wasm_bindgen::prelude::*;

pub const MAX_TABLE_DEGREE: usize = 5;
pub const MAX_RANK: usize = 3;
pub const MAX_HCIZ_DEGREE: usize = 3;

fn check_rank(r: usize) -> Result<(), String> {
    if (1..=MAX_RANK).contains(&r) {
        Ok(())
    } else {
        Err(format!("r must be between 1 and {MAX_RANK}"))
    }
}

pub fn char_table_json(n: usize) -> Result<String, String> {
    if !(1..=MAX_TABLE_DEGREE).contains(&n) {
        return Err(format!("n must be between 1 and {MAX_TABLE_DEGREE}"));
    }
    let t = CharacterTable::new(n);
    let perms: Vec<String> = t
        .perms()
        .iter()
        .map(|w| {
            w.one_line()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("")
        })
        .collect();
    let rows: Vec<_> = t
        .shapes()
        .iter()
        .map(|s| {
            json!({
                "partition": s.parts(),
                "values": t.perms().iter().map(|w| t.value(s, w).to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({"n": n, "permutations": perms, "rows": rows}).to_string())
}

pub fn quantum_rank_json(shape: &str, r: usize) -> Result<String, String> {
    check_rank(r)?;
    let p: Partition = shape.parse()?;
    Ok(
        json!({"partition": p.parts(), "r": r, "rank": quantum_rank(&p, r).to_string()})
            .to_string(),
    )
}

pub fn hciz_json(r: usize, n: usize, seed: u64) -> Result<String, String> {
    check_rank(r)?;
    if !(1..=MAX_HCIZ_DEGREE).contains(&n) {
        return Err(format!("n must be between 1 and {MAX_HCIZ_DEGREE}"));
    }
    let h = HeckeSymmetry::dj(r);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mu, nu) = (random_diagonal(&mut rng, r), random_diagonal(&mut rng, r));
    let point =
        |d: &[qchar::scalar::Scalar]| MatrixPoint::diagonal(&h, d).map_err(|e| e.to_string());
    let rep = hciz(&h, &point(&mu)?, &point(&nu)?, n).map_err(|e| e.to_string())?;
    let strings = |v: &[qchar::scalar::Scalar]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    Ok(json!({
        "r": r,
        "n": n,
        "seed": seed,
        "mu": strings(&mu),
        "nu": strings(&nu),
        "lhs": rep.lhs.to_string(),
        "rhs": rep.rhs.to_string(),
        "match": rep.matches(),
    })
    .to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = charTable)]
pub fn char_table(n: usize) -> Result<String, JsValue> {
    js(char_table_json(n))
}

#[wasm_bindgen(js_name = quantumRank)]
pub fn quantum_rank_of(shape: &str, r: usize) -> Result<String, JsValue> {
    js(quantum_rank_json(shape, r))
}

#[wasm_bindgen(js_name = hcizCheck)]
pub fn hciz_check(r: usize, n: usize, seed: u32) -> Result<String, JsValue> {
    js(hciz_json(r, n, seed as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn table_shape() {
        let v: Value = serde_json::from_str(&char_table_json(3).unwrap()).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
        assert_eq!(v["permutations"].as_array().unwrap().len(), 6);
        assert!(char_table_json(0).is_err());
        assert!(char_table_json(6).is_err());
    }

    #[test]
    fn rank_of_hook() {
        let v: Value = serde_json::from_str(&quantum_rank_json("2,1", 2).unwrap()).unwrap();
        assert_eq!(v["rank"], "p^-1 + p");
        assert!(quantum_rank_json("2,x", 2).is_err());
        assert!(quantum_rank_json("1", 4).is_err());
    }

    #[test]
    fn hciz_matches_and_is_seeded() {
        let a = hciz_json(2, 2, 5).unwrap();
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["match"], true);
        assert_eq!(a, hciz_json(2, 2, 5).unwrap());
        assert!(hciz_json(2, 4, 5).is_err());
    }
}
