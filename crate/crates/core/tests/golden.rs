//! Stored exact Wronskians for small n. Regenerate with `UPDATE_GOLDEN=1`.

use std::path::PathBuf;

use serde_json::{Map, Value};
use wronskian_core::scalar::int;
use wronskian_core::trig::sin_power;
use wronskian_core::wronskian::{w_bruteforce, w_closed, w_recurrence};
use wronskian_core::FourierPoly;

const N_MAX: usize = 4;
const K_MAX: usize = 4;

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/wronskians.json")
}

fn key(n: usize, k: usize) -> String {
    format!("n{n}_k{k}")
}

fn render() -> String {
    let mut lines = Vec::new();
    for n in 1..=N_MAX {
        for k in 0..=K_MAX {
            let value = w_bruteforce(n, k).unwrap().to_json_string();
            lines.push(format!("  \"{}\": {}", key(n, k), value));
        }
    }
    format!("{{\n{}\n}}\n", lines.join(",\n"))
}

fn load() -> Map<String, Value> {
    let text = std::fs::read_to_string(golden_path()).expect("golden file present");
    match serde_json::from_str(&text).unwrap() {
        Value::Object(m) => m,
        _ => panic!("golden file is not an object"),
    }
}

#[test]
fn golden_file_is_current() {
    let fresh = render();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_path().parent().unwrap()).unwrap();
        std::fs::write(golden_path(), &fresh).unwrap();
    }
    let stored = std::fs::read_to_string(golden_path()).unwrap();
    assert_eq!(stored, fresh);
}

#[test]
fn golden_entries_match_every_method() {
    let golden = load();
    for n in 1..=N_MAX {
        for k in 0..=K_MAX {
            let stored = FourierPoly::from_json(&golden[&key(n, k)]).unwrap();
            assert_eq!(stored, w_closed(n, k), "closed form n={n} k={k}");
            assert_eq!(stored, w_recurrence(n, k), "recurrence n={n} k={k}");
        }
    }
}

#[test]
fn golden_entries_match_hand_values() {
    let golden = load();
    let get = |n, k| FourierPoly::from_json(&golden[&key(n, k)]).unwrap();
    assert_eq!(get(1, 0), FourierPoly::sin(1));
    assert_eq!(get(1, 3), FourierPoly::sin(4));
    assert_eq!(get(2, 0), sin_power(3).scale_rational(&int(-2)));
    assert_eq!(get(3, 0), sin_power(6).scale_rational(&int(-16)));
    // sin x · 3cos 3x − cos x · sin 3x
    let w21 = &(&FourierPoly::sin(1) * &FourierPoly::cos(3)).scale_rational(&int(3))
        - &(&FourierPoly::cos(1) * &FourierPoly::sin(3));
    assert_eq!(get(2, 1), w21);
}
