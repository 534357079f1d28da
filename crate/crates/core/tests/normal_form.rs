mod common;

use common::{random_bounded, tables};
use garside::{cycling, decycling, Element, SimpleId, StructureTable, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WORDS_PER_TABLE: usize = 1000;
const MAX_WORD_LEN: usize = 20;

fn random_word(rng: &mut impl Rng, table: &StructureTable) -> Word {
    let atoms = table.atoms();
    let len = rng.gen_range(0..=MAX_WORD_LEN);
    let letters = (0..len).map(|_| (atoms[rng.gen_range(0..atoms.len())], if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    Word::new(table, letters).unwrap()
}

/// `atoms(s)·atoms(t)·atoms(s·t)⁻¹` for a random defined product `s·t`.
fn random_relator(rng: &mut impl Rng, table: &StructureTable) -> Word {
    let n = table.simple_count();
    loop {
        let s = table.simple(rng.gen_range(0..n)).unwrap();
        let t = table.simple(rng.gen_range(0..n)).unwrap();
        let Some(st) = table.product(s, t) else { continue };
        let mut letters: Vec<(SimpleId, i8)> = table.atom_word(s).iter().map(|&a| (a, 1)).collect();
        letters.extend(table.atom_word(t).iter().map(|&a| (a, 1)));
        letters.extend(table.atom_word(st).iter().rev().map(|&a| (a, -1)));
        return Word::new(table, letters).unwrap();
    }
}

#[test]
fn relator_insertion_is_invisible() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, table) in tables() {
        for _ in 0..WORDS_PER_TABLE {
            let w = random_word(&mut rng, table);
            let cut = rng.gen_range(0..=w.len());
            let relator = random_relator(&mut rng, table);
            let head = Word::new(table, w.letters()[..cut].to_vec()).unwrap();
            let tail = Word::new(table, w.letters()[cut..].to_vec()).unwrap();
            let g = Element::from_word(table, &w);
            let h = Element::from_word(table, &head.concat(&relator).concat(&tail));
            assert_eq!(g, h, "{name}: {}", w.to_text(table));
            assert!(g.is_left_weighted(), "{name}: {g:?}");
        }
    }
}

#[test]
fn cycling_and_decycling_are_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (name, table) in tables() {
        for _ in 0..200 {
            let g = random_bounded(&mut rng, table, 5);
            let (c, w) = cycling(&g);
            assert!(c.inf() >= g.inf(), "{name}: cycling lowered inf of {g}");
            assert_eq!(g.conjugate_by(&w), c);
            let (d, v) = decycling(&g);
            assert!(d.sup() <= g.sup(), "{name}: decycling raised sup of {g}");
            assert_eq!(g.conjugate_by(&v), d);
        }
    }
}
