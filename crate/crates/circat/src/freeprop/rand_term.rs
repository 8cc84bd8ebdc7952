//! Seeded random well-typed terms for property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GenInfo, Signature, Term};
use crate::kfield::Scalar;

fn value_pool() -> Vec<Scalar> {
    ["0", "1", "2", "3", "1/2", "-1", "2/3"]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect()
}

/// A random well-typed term over the signature with at most `size`
/// generator leaves; deterministic for a fixed seed.
pub fn random_term(sig: &Signature, size: usize, seed: u64) -> Term {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<(String, GenInfo)> = sig
        .names()
        .map(|(name, info)| (name.to_string(), *info))
        .collect();
    assert!(!gens.is_empty(), "signature has no generators");
    let values = value_pool();

    let atom = |rng: &mut ChaCha8Rng, pick: &dyn Fn(&GenInfo) -> bool| -> Option<(Term, usize, usize)> {
        let candidates: Vec<&(String, GenInfo)> =
            gens.iter().filter(|(_, info)| pick(info)).collect();
        if candidates.is_empty() {
            return None;
        }
        let (name, info) = candidates[rng.gen_range(0..candidates.len())];
        let term = if info.takes_value {
            Term::gen_with(name.clone(), values[rng.gen_range(0..values.len())].clone())
        } else {
            Term::gen(name.clone())
        };
        Some((term, info.dom, info.cod))
    };

    let (mut term, mut dom, mut cod) = atom(&mut rng, &|_| true).expect("nonempty signature");
    let mut atoms = 1;
    for _ in 0..(4 * size) {
        if atoms >= size {
            break;
        }
        match rng.gen_range(0..6u8) {
            // Widen in parallel on either side.
            0 | 1 => {
                let (t, d, c) = atom(&mut rng, &|_| true).unwrap();
                if rng.gen_bool(0.5) {
                    term = Term::par(term, t);
                } else {
                    term = Term::par(t, term);
                }
                dom += d;
                cod += c;
                atoms += 1;
            }
            // Extend sequentially after, padding with identity wires.
            2 | 3 => {
                if let Some((t, d, c)) = atom(&mut rng, &|info| info.dom <= cod) {
                    let pad = cod - d;
                    let right = if pad == 0 { t } else { Term::par(t, Term::Id(pad)) };
                    term = Term::seq(term, right);
                    cod = c + pad;
                    atoms += 1;
                }
            }
            // Extend sequentially before.
            4 => {
                if let Some((t, d, c)) = atom(&mut rng, &|info| info.cod <= dom) {
                    let pad = dom - c;
                    let left = if pad == 0 { t } else { Term::par(t, Term::Id(pad)) };
                    term = Term::seq(left, term);
                    dom = d + pad;
                    atoms += 1;
                }
            }
            // Append a wire crossing.
            _ => {
                if cod >= 2 {
                    let a = rng.gen_range(1..cod);
                    term = Term::seq(term, Term::Sym(a, cod - a));
                }
            }
        }
    }
    term
}
