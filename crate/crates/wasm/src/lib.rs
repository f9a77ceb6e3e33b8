//! Browser bindings: a thin JSON-over-strings surface for the interactive
//! demo page in `www/`. Every function is a pure value transformer, so the
//! whole module also compiles and tests natively.

use serde_json::json;
use wasm_bindgen::prelude::*;

use tourlab::classify::classify;
use tourlab::{
    determinant, diamond_census, make_ln, pfaffian, switch, Error, Tournament, VertexSet,
};

fn err_json(e: &Error) -> String {
    json!({ "error": e.to_string() }).to_string()
}

fn parse(n: u32, bits: &str) -> Result<Tournament, Error> {
    Tournament::from_bit_str(n as usize, bits)
}

/// Full readout for the demo: determinant, Pfaffian, diamond census, level
/// and certificate where the order permits them.
#[wasm_bindgen]
pub fn analyze(n: u32, bits: String) -> String {
    let t = match parse(n, &bits) {
        Ok(t) => t,
        Err(e) => return err_json(&e),
    };
    let n = t.order();
    let mut out = json!({
        "n": n,
        "bits": t.to_bit_string(),
        "transitive": t.is_transitive(),
    });
    if let Ok(det) = determinant(&t) {
        out["det"] = json!(det as i64);
        if n % 2 == 0 {
            if let Ok(pf) = pfaffian(&t) {
                out["pfaffian"] = json!(pf as i64);
            }
        }
    }
    if let Ok(census) = diamond_census(&t) {
        out["delta"] = json!(census.delta);
        out["diamonds"] = json!(census
            .witnesses
            .iter()
            .map(|w| w.to_vec())
            .collect::<Vec<_>>());
    }
    if (2..=12).contains(&n) {
        if let Ok(result) = classify(&t) {
            out["level"] = json!(result.level);
            out["max_even_det"] = json!(result.max_det as i64);
            out["witness"] = json!(result.witness.to_vec());
            if let Some(cert) = result.certificate {
                out["certificate"] = json!({
                    "base": cert.base_kind.name(),
                    "switch_set": cert.switch_set.to_vec(),
                    "parts": cert.parts,
                });
            }
        }
    }
    out.to_string()
}

/// Bits of the alternating extension `L_n`.
#[wasm_bindgen]
pub fn make_ln_bits(n: u32) -> String {
    match make_ln(n as usize) {
        Ok(t) => json!({ "n": t.order(), "bits": t.to_bit_string() }).to_string(),
        Err(e) => err_json(&e),
    }
}

/// Bits of a seeded random tournament.
#[wasm_bindgen]
pub fn random_bits(n: u32, seed: u32) -> String {
    // Tiny deterministic generator; no RNG crate needed in the browser.
    let n = n as usize;
    if !(1..=64).contains(&n) {
        return err_json(&Error::capacity("vertex count outside 1..=64"));
    }
    let mut state = (seed as u64) << 1 | 1;
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state >> 33 & 1 == 1
    };
    let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| next()).collect();
    let t = Tournament::from_bits(n, &bits).expect("generated bits are well formed");
    json!({ "n": n, "bits": t.to_bit_string() }).to_string()
}

/// Reverses the arc between `i` and `j`.
#[wasm_bindgen]
pub fn flip_arc(n: u32, bits: String, i: u32, j: u32) -> String {
    let t = match parse(n, &bits) {
        Ok(t) => t,
        Err(e) => return err_json(&e),
    };
    match t.flip_arc(i as usize, j as usize) {
        Ok(f) => json!({ "n": f.order(), "bits": f.to_bit_string() }).to_string(),
        Err(e) => err_json(&e),
    }
}

/// Applies the switch with respect to a comma-separated vertex set.
#[wasm_bindgen]
pub fn switch_bits(n: u32, bits: String, set_csv: String) -> String {
    let t = match parse(n, &bits) {
        Ok(t) => t,
        Err(e) => return err_json(&e),
    };
    let mut w = VertexSet::EMPTY;
    for tok in set_csv.split(',').filter(|s| !s.trim().is_empty()) {
        match tok.trim().parse::<usize>() {
            Ok(v) if v >= 1 && v <= t.order() => w.insert(v),
            _ => return err_json(&Error::argument(format!("bad switch-set entry {tok:?}"))),
        }
    }
    let s = switch(&t, w);
    json!({ "n": s.order(), "bits": s.to_bit_string() }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse_json(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn analyze_l6() {
        let v = parse_json(&analyze(6, "111101111110110".into()));
        assert_eq!(v["det"], 25);
        assert_eq!(v["delta"], 5);
        assert_eq!(v["level"], 5);
        assert_eq!(v["certificate"]["base"], "L6");
        assert_eq!(v["diamonds"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn analyze_rejects_garbage() {
        let v = parse_json(&analyze(6, "110".into()));
        assert!(v["error"].as_str().unwrap().contains("format"));
    }

    #[test]
    fn ln_and_flip_and_switch() {
        let v = parse_json(&make_ln_bits(4));
        assert_eq!(v["bits"], "110110");

        let flipped = parse_json(&flip_arc(4, "110110".into(), 1, 2));
        assert_eq!(flipped["bits"], "010110");

        let switched = parse_json(&switch_bits(4, "110110".into(), "4".into()));
        let t = Tournament::from_bit_str(4, switched["bits"].as_str().unwrap()).unwrap();
        assert_eq!(determinant(&t).unwrap(), 9);

        let bad = parse_json(&switch_bits(4, "110110".into(), "9".into()));
        assert!(bad["error"].is_string());
    }

    #[test]
    fn random_bits_is_deterministic() {
        assert_eq!(random_bits(8, 42), random_bits(8, 42));
        let v = parse_json(&random_bits(8, 42));
        assert_eq!(v["bits"].as_str().unwrap().len(), 28);
        let w = parse_json(&random_bits(8, 43));
        assert_ne!(v["bits"], w["bits"]);
    }

    #[test]
    fn analyze_output_is_valid_for_random_inputs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let n = rng.random_range(2..=9usize);
            let t = Tournament::random(n, &mut rng).unwrap();
            let v = parse_json(&analyze(n as u32, t.to_bit_string()));
            assert_eq!(v["n"], n as u64);
            if n % 2 == 0 {
                let det = v["det"].as_i64().unwrap();
                let pf = v["pfaffian"].as_i64().unwrap();
                assert_eq!(pf * pf, det);
            } else {
                assert_eq!(v["det"], 0);
            }
        }
    }
}
