use proptest::prelude::*;

use skewbrace::brace::laws;
use skewbrace::enumerate::{
    are_isomorphic, canonical_form, enumerate_groups, enumerate_skew_braces, naive_solutions, nondegenerate_solutions,
    EnumerationMethod,
};
use skewbrace::ideals::{self, IdealSearch};
use skewbrace::{solution_from_brace, FiniteSkewBrace, Perm};

fn catalog(n: usize) -> Vec<FiniteSkewBrace> {
    enumerate_skew_braces(n, EnumerationMethod::Holomorph).unwrap().braces
}

fn all_braces() -> Vec<FiniteSkewBrace> {
    (1..=8).flat_map(catalog).collect()
}

#[test]
fn catalog_sizes_up_to_eight() {
    let counts: Vec<usize> = (1..=8).map(|n| catalog(n).len()).collect();
    assert_eq!(counts, [1, 1, 1, 4, 1, 6, 1, 47]);
}

#[test]
fn group_counts_up_to_eight() {
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_groups(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 1, 2, 1, 5]);
}

#[test]
fn catalog_members_are_canonical_and_distinct() {
    for n in 1..=8 {
        let braces = catalog(n);
        for (i, b) in braces.iter().enumerate() {
            assert_eq!(&canonical_form(b).unwrap(), b);
            for c in &braces[i + 1..] {
                assert!(!are_isomorphic(b, c).unwrap());
            }
        }
    }
}

#[test]
fn every_member_satisfies_the_laws() {
    for b in all_braces() {
        assert!(b.verify().passed());
        assert_eq!(laws::identity_pack(&b), None);
        assert_eq!(laws::star_identities(&b), None);
        assert_eq!(laws::commutator_identity(&b), None);
        assert_eq!(laws::lambda_homomorphism(&b), None);
        let sol = solution_from_brace(&b);
        assert!(sol.is_ybe() && sol.is_nondegenerate());
    }
}

#[test]
fn distinguished_subsets_are_ideals() {
    for b in all_braces() {
        let n = b.order();
        for s in [ideals::socle(&b), ideals::annihilator(&b), ideals::derived_ideal(&b)] {
            assert!(ideals::is_ideal(&b, &s));
        }
        assert!(ideals::annihilator(&b).is_subset_of(&ideals::socle(&b)));
        for k in 0..=n {
            assert!(ideals::is_ideal(&b, &ideals::socle_multiples(&b, k)));
        }
        for series in [ideals::upper_annihilator_series(&b), ideals::upper_socle_series(&b)] {
            for w in series.terms.windows(2) {
                assert!(w[0].is_subset_of(&w[1]) && w[0] != w[1]);
            }
            assert!(series.terms.iter().all(|t| ideals::is_ideal(&b, t)));
        }
    }
}

#[test]
fn ideal_search_modes_agree() {
    for b in all_braces() {
        let by_subgroups = ideals::all_ideals(&b, IdealSearch::Subgroups);
        assert_eq!(by_subgroups, ideals::all_ideals(&b, IdealSearch::Closures));
        assert!(by_subgroups.iter().all(|i| ideals::is_ideal(&b, i)));
    }
}

#[test]
fn trivial_braces_match_their_groups() {
    for n in 1..=8 {
        let trivial = catalog(n).into_iter().filter(FiniteSkewBrace::is_trivial).count();
        assert_eq!(trivial, enumerate_groups(n).unwrap().len());
    }
}

#[test]
fn solution_generators_agree_at_three() {
    for invol in [false, true] {
        assert_eq!(naive_solutions(3, true, invol).unwrap(), nondegenerate_solutions(3, invol).unwrap());
    }
    let involutive = nondegenerate_solutions(2, true).unwrap();
    assert_eq!(involutive.len(), 2);
}

fn relabeling_fixing_zero(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|rest| {
        let mut images = vec![0];
        images.extend(rest);
        Perm::from_images(images).unwrap()
    })
}

fn brace_and_relabeling() -> impl Strategy<Value = (FiniteSkewBrace, Perm)> {
    (prop::sample::select((4..=8).collect::<Vec<usize>>()), any::<prop::sample::Index>())
        .prop_flat_map(|(n, idx)| {
            let braces = catalog(n);
            let b = braces[idx.index(braces.len())].clone();
            (Just(b), relabeling_fixing_zero(n))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_form_is_relabeling_invariant((b, p) in brace_and_relabeling()) {
        let r = b.relabel(&p);
        prop_assert!(r.verify().passed());
        prop_assert_eq!(canonical_form(&r).unwrap(), b.clone());
        prop_assert!(are_isomorphic(&b, &r).unwrap());
        prop_assert_eq!(ideals::socle(&r).len(), ideals::socle(&b).len());
        prop_assert_eq!(ideals::all_ideals(&r, IdealSearch::Auto).len(), ideals::all_ideals(&b, IdealSearch::Auto).len());
    }
}
