//! Property tests for complexes, homology, linear algebra and the text format.

mod common;

use common as oracle;
use fcomplex::homology::boundary_matrix;
use fcomplex::io::{emit_complex, parse_complex};
use fcomplex::linalg::{bareiss_rank, field_rank, rational_rank, IntMatrix, PrimeField};
use fcomplex::{reduced_homology, Complex, Face, FieldSpec, RationalField};
use proptest::prelude::*;

fn complex(max_n: usize, max_facets: usize) -> impl Strategy<Value = Complex> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u64..(1u64 << n), 1..=max_facets)
            .prop_map(move |ms| Complex::from_facets(n, ms.into_iter().map(Face::from_bits)).unwrap())
    })
}

fn masks(c: &Complex) -> Vec<u64> {
    c.facets().iter().map(|f| f.bits()).collect()
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::Prime(2)), Just(FieldSpec::Prime(3))]
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-5i64..=5, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn facets_form_a_sorted_antichain(c in complex(7, 8)) {
        let fs = c.facets();
        prop_assert!(fs.windows(2).all(|w| w[0] < w[1]));
        for a in fs {
            for b in fs {
                prop_assert!(a == b || !a.is_subset_of(*b));
            }
        }
        let faces: Vec<u64> = c.faces().iter().map(|f| f.bits()).collect();
        let expected: std::collections::BTreeSet<u64> = oracle::all_faces(&masks(&c));
        let got: std::collections::BTreeSet<u64> = faces.into_iter().collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn f_vector_matches_brute_force(c in complex(7, 8)) {
        prop_assert_eq!(c.f_vector().0, oracle::f_vector(&masks(&c)));
    }

    #[test]
    fn skeleta_compose(c in complex(6, 6), i in 0isize..5, j in 0isize..5) {
        let d = c.dim();
        prop_assume!(i <= d && j <= d);
        let once = c.skeleton(i.min(j)).unwrap();
        let twice = c.skeleton(i).unwrap().skeleton(j.min(i)).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn links_match_oracle(c in complex(6, 6), pick in any::<prop::sample::Index>()) {
        let faces = c.faces();
        let sigma = faces[pick.index(faces.len())];
        let lk = c.link(sigma).unwrap();
        let mut ours = masks(&lk);
        ours.sort();
        prop_assert_eq!(ours, oracle::link(&masks(&c), sigma.bits()));
    }

    #[test]
    fn complement_is_an_involution(c in complex(7, 8)) {
        prop_assert_eq!(c.complement_complex().complement_complex(), c);
    }

    #[test]
    fn alexander_duality(c in complex(6, 6)) {
        prop_assume!(c.facets() != [Face::full(c.n())]);
        let dual = c.alexander_dual().unwrap();
        prop_assert_eq!(dual.alexander_dual().unwrap(), c.clone());
        // minimal nonfaces of the dual are the complements of the facets
        prop_assert_eq!(dual.minimal_nonfaces(), c.complement_complex().facets().to_vec());
        // and the library's minimal nonfaces agree with brute force
        let faces = oracle::all_faces(&masks(&c));
        let brute: Vec<u64> = (0u64..1 << c.n())
            .filter(|s| !faces.contains(s))
            .filter(|s| (0..c.n()).all(|b| s >> b & 1 == 0 || faces.contains(&(s & !(1 << b)))))
            .collect();
        let mut ours: Vec<u64> = c.minimal_nonfaces().iter().map(|f| f.bits()).collect();
        let mut brute = brute;
        ours.sort();
        brute.sort();
        prop_assert_eq!(ours, brute);
    }

    #[test]
    fn homology_matches_oracle(c in complex(6, 6), field in fields()) {
        let h = reduced_homology(&c, field);
        let p = match field { FieldSpec::Rationals => None, FieldSpec::Prime(p) => Some(p as u64) };
        let b = oracle::betti(&masks(&c), p);
        for i in -1..=c.dim() + 1 {
            prop_assert_eq!(h.get(i), oracle::betti_at(&b, i), "degree {}", i);
        }
    }

    #[test]
    fn euler_characteristic(c in complex(7, 8), field in fields()) {
        let h = reduced_homology(&c, field);
        prop_assert_eq!(h.reduced_euler_characteristic(), c.f_vector().reduced_euler_characteristic());
    }

    #[test]
    fn boundary_squares_to_zero(c in complex(7, 8)) {
        for i in 0..=c.dim() {
            let lower = boundary_matrix(&c, i).unwrap();
            let upper = boundary_matrix(&c, i + 1);
            if let Ok(upper) = upper {
                prop_assert_eq!(&upper.row_faces, &lower.col_faces);
                prop_assert!(lower.matrix.mul(&upper.matrix).is_zero());
            }
        }
    }

    #[test]
    fn rank_engines_agree(rows in matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let q = field_rank(&RationalField::default(), &m);
        prop_assert_eq!(rational_rank(&m), q);
        prop_assert_eq!(bareiss_rank::<i128>(&m), Some(q));
        if let Some(r) = bareiss_rank::<i64>(&m) {
            prop_assert_eq!(r, q);
        }
        prop_assert_eq!(q, oracle::rank(&rows, None));
        for p in [2u64, 3, 7] {
            prop_assert_eq!(field_rank(&PrimeField::new(p), &m), oracle::rank(&rows, Some(p)));
        }
    }

    #[test]
    fn text_round_trip(c in complex(9, 10)) {
        let text = emit_complex(&c);
        let back = parse_complex(&text).unwrap();
        prop_assert!(back.warnings.is_empty());
        prop_assert_eq!(&back.complex, &c);
        prop_assert_eq!(emit_complex(&back.complex), text);
    }
}

#[test]
fn round_trip_canonicalizes_order_and_duplicates() {
    let messy = "# scrambled\nn=5\n3 4 5\n1 2\n2 1\n1 2 3\n";
    let p = parse_complex(messy).unwrap();
    assert_eq!(p.warnings.len(), 1);
    assert_eq!(emit_complex(&p.complex), "n=5\n1 2 3\n3 4 5\n");
}
