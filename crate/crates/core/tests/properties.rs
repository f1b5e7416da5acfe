use proptest::prelude::*;

use flagcode::equiv;
use flagcode::flags::TypeVector;
use flagcode::genset::{self, CodeProduct};
use flagcode::gf::Field;
use flagcode::grassmann::{self, AmbientSpace, GroupElement, Mode};
use flagcode::io::Document;
use flagcode::linalg::Matrix;
use flagcode::random::{self, Profile};
use flagcode::search::SearchBudget;

fn setting() -> impl Strategy<Value = (u64, usize, Vec<usize>)> {
    (prop::sample::select(vec![2u64, 3, 4]), 2usize..=5).prop_flat_map(|(q, n)| {
        let dims = prop::sample::subsequence((1..n).collect::<Vec<_>>(), 1..=(n - 1).min(3));
        (Just(q), Just(n), dims)
    })
}

fn typevec(q: u64, n: usize, dims: &[usize]) -> TypeVector {
    TypeVector::new(&AmbientSpace::new(&Field::with_order(q).unwrap(), n).unwrap(), dims).unwrap()
}

fn invertible(q: u64, n: usize, entries: &[u64]) -> Option<GroupElement> {
    let f = Field::with_order(q).unwrap();
    let rows: Vec<Vec<u64>> = entries.chunks(n).map(|r| r.iter().map(|x| x % q).collect()).collect();
    GroupElement::linear(Matrix::from_rows(&f, n, &rows).ok()?).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_round_trip((q, n, dims) in setting(), seed in any::<u64>(), size in 1usize..5) {
        let tv = typevec(q, n, &dims);
        if let Ok(c) = random::random_flagcode(seed, &tv, size, Profile::Generic) {
            let doc = Document::FlagCode(c);
            let text = doc.to_json();
            let back = Document::from_json(&text).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn action_preserves_invariants((q, n, dims) in setting(), seed in any::<u64>(), size in 1usize..5,
                                   entries in prop::collection::vec(0u64..4, 25)) {
        let tv = typevec(q, n, &dims);
        let Ok(c) = random::random_flagcode(seed, &tv, size, Profile::Generic) else { return Ok(()) };
        let Some(g) = invertible(q, n, &entries[..n * n]) else { return Ok(()) };
        let image = equiv::act_flagcode(&c, &g).unwrap();
        prop_assert_eq!(image.len(), c.len());
        prop_assert_eq!(image.min_distance(), c.min_distance());
        prop_assert_eq!(image.projected_sizes(), c.projected_sizes());
        prop_assert_eq!(genset::is_sic(&image).sic, genset::is_sic(&c).sic);
        prop_assert_eq!(equiv::act_flagcode(&image, &g.inverse()).unwrap(), c);
    }

    #[test]
    fn subspace_distance_is_a_metric((q, n, _) in setting(), seed in any::<u64>()) {
        let tv = typevec(q, n, &[1]);
        let mut rng = random::rng_from_seed(seed);
        let amb = tv.ambient().clone();
        let pick = |rng: &mut rand_chacha::ChaCha8Rng, k: usize| {
            let t = TypeVector::new(&amb, &[k]).unwrap();
            random::random_flag(rng, &t).spaces()[0].clone()
        };
        let ks: Vec<usize> = (0..3).map(|i| 1 + (seed as usize >> (4 * i)) % (n - 1)).collect();
        let (u, v, w) = (pick(&mut rng, ks[0]), pick(&mut rng, ks[1]), pick(&mut rng, ks[2]));
        let d = |a: &grassmann::Subspace, b: &grassmann::Subspace| grassmann::subspace_distance(a, b).unwrap();
        prop_assert_eq!(d(&u, &u), 0);
        prop_assert_eq!(d(&u, &v), d(&v, &u));
        prop_assert!(d(&u, &w) <= d(&u, &v) + d(&v, &w));
        prop_assert_eq!(d(&u, &v), u.dim() + v.dim() - 2 * u.intersection(&v).unwrap().dim());
    }

    #[test]
    fn closure_contains_every_generated_code((q, n, dims) in setting(), seed in any::<u64>(), size in 1usize..6) {
        let tv = typevec(q, n, &dims);
        let Ok(c) = random::random_flagcode(seed, &tv, size, Profile::Generic) else { return Ok(()) };
        let p = CodeProduct::of_projected(&c);
        prop_assert!(genset::is_generating_set(&p).generating);
        let closure = genset::sic_closure(&p).unwrap();
        prop_assert!(c.flags().iter().all(|f| closure.contains(f)));
        prop_assert_eq!(closure.projected_codes(), c.projected_codes());
        prop_assert_eq!(closure == c, genset::is_sic(&c).sic);
        let m = genset::multiplicities(&c);
        prop_assert!(m.level_totals().iter().all(|&t| t == c.len()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn automorphisms_of_small_codes_form_groups(seed in any::<u64>(), size in 1usize..4) {
        let tv = typevec(2, 3, &[1, 2]);
        let c = random::random_flagcode(seed, &tv, size, Profile::Generic).unwrap();
        let aut = equiv::aut_flagcode(&c, Mode::Linear, SearchBudget::default()).unwrap();
        prop_assert!(flagcode::search::is_group(&aut));
        prop_assert!(aut.iter().all(|g| equiv::act_flagcode(&c, g).unwrap() == c));
        let proj = equiv::aut_via_projected(&c, Mode::Linear, SearchBudget::default()).unwrap();
        prop_assert!(aut.iter().all(|g| proj.elements.contains(g)));
        if proj.sic {
            prop_assert_eq!(proj.elements.len(), aut.len());
        }
    }
}
