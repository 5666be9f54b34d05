mod common;

use common::{random_artin_ideal, random_module_generators, MonomialIdeal};
use macaulay::linalg::kernel;
use macaulay::poly::{apply, gen_pol, sigma, sigma_inverse, CoefficientStream};
use macaulay::{
    colon_inv_syst, ideal_ann, inv_syst, member_ih, parse_poly, weierstrass_ab, Action, Frame, IdealHandle, Monomial,
    Polynomial, Ring, Scalar, SubmoduleHandle, SubspaceBasis,
};
use proptest::prelude::*;

fn poly_in(ring: Ring, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.num_vars();
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), -6i64..=6), 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            ring,
            terms.into_iter().map(|(e, c)| (Monomial::new(e), Scalar::from_i64(c, ring.characteristic()))),
        )
    })
}

fn q3() -> Ring {
    Ring::rational(3)
}

fn actions() -> impl Strategy<Value = Action> {
    prop_oneof![Just(Action::Derivation), Just(Action::Contraction)]
}

proptest! {
    #[test]
    fn bilinearity(a in actions(), f1 in poly_in(q3(), 2, 4), f2 in poly_in(q3(), 2, 4),
                   g1 in poly_in(q3(), 3, 5), g2 in poly_in(q3(), 3, 5)) {
        let left = apply(a, &(&f1 + &f2), &g1).unwrap();
        prop_assert_eq!(left, &apply(a, &f1, &g1).unwrap() + &apply(a, &f2, &g1).unwrap());
        let right = apply(a, &f1, &(&g1 + &g2)).unwrap();
        prop_assert_eq!(right, &apply(a, &f1, &g1).unwrap() + &apply(a, &f1, &g2).unwrap());
    }

    #[test]
    fn module_law(a in actions(), f1 in poly_in(q3(), 2, 3), f2 in poly_in(q3(), 2, 3), g in poly_in(q3(), 4, 6)) {
        let product = apply(a, &(&f1 * &f2), &g).unwrap();
        prop_assert_eq!(&product, &apply(a, &f1, &apply(a, &f2, &g).unwrap()).unwrap());
        prop_assert_eq!(&product, &apply(a, &f2, &apply(a, &f1, &g).unwrap()).unwrap());
    }

    #[test]
    fn sigma_intertwines(f in poly_in(q3(), 2, 4), g in poly_in(q3(), 4, 6), c in -5i64..=5) {
        let lhs = sigma(&apply(Action::Derivation, &f, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, apply(Action::Contraction, &f, &sigma(&g).unwrap()).unwrap());
        prop_assert_eq!(sigma_inverse(&sigma(&g).unwrap()).unwrap(), g.clone());
        let scaled = g.scale(&Scalar::from_i64(c, 0));
        prop_assert_eq!(sigma(&(&scaled + &f)).unwrap(), &sigma(&scaled).unwrap() + &sigma(&f).unwrap());
    }

    #[test]
    fn contraction_degree(a in prop::collection::vec(0u32..4, 3), extra in prop::collection::vec(0u32..4, 3)) {
        let r = q3();
        let b: Vec<u32> = a.iter().zip(&extra).map(|(x, y)| x + y).collect();
        let out = apply(Action::Contraction, &Polynomial::monomial(r, &a), &Polynomial::monomial(r, &b)).unwrap();
        prop_assert_eq!(out.degree(), Some(extra.iter().sum::<u32>()));
    }

    #[test]
    fn parse_format_round_trip(p in poly_in(q3(), 5, 8), den in 1i64..9) {
        let r = q3();
        let p = p.scale(&Scalar::from_fraction(&1.into(), &den.into(), 0).unwrap());
        let text = p.to_string();
        let back = parse_poly(&text, &r).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn parse_format_round_trip_mod_p(p in poly_in(Ring::new(2, 7).unwrap(), 4, 6)) {
        let r = Ring::new(2, 7).unwrap();
        prop_assert_eq!(parse_poly(&p.to_string(), &r).unwrap(), p);
    }

    #[test]
    fn echelon_is_canonical(vs in prop::collection::vec(poly_in(q3(), 2, 4), 0..6)) {
        let r = q3();
        let frame = Frame::new(3, 6);
        let u = SubspaceBasis::span_of(&vs, frame.clone(), &r).unwrap();
        let again = SubspaceBasis::span_of(&u.basis_polynomials(&r), frame.clone(), &r).unwrap();
        prop_assert_eq!(&again, &u);
        let mut reversed = vs.clone();
        reversed.reverse();
        prop_assert_eq!(SubspaceBasis::span_of(&reversed, frame, &r).unwrap(), u);
    }

    #[test]
    fn perp_is_an_involution(a in actions(), vs in prop::collection::vec(poly_in(q3(), 2, 5), 0..8)) {
        let r = q3();
        let frame = Frame::new(3, 6);
        let u = SubspaceBasis::span_of(&vs, frame.clone(), &r).unwrap();
        let p = u.perp(a).unwrap();
        prop_assert_eq!(u.dim() + p.dim(), frame.size());
        prop_assert_eq!(p.perp(a).unwrap(), u);
    }

    #[test]
    fn rank_nullity(vs in prop::collection::vec(poly_in(q3(), 1, 4), 0..8)) {
        let r = q3();
        let frame = Frame::new(3, 3);
        let vectors: Vec<_> = vs.iter().map(|v| frame.vector_of(v).unwrap()).collect();
        let rank = SubspaceBasis::span_of(&vs, frame.clone(), &r).unwrap().dim();
        let null = kernel(&vectors, frame.size(), 0);
        prop_assert_eq!(rank + null.len(), vs.len());
        for k in &null {
            let combo = vs.iter().zip(k).fold(Polynomial::zero(r), |acc, (v, c)| &acc + &v.scale(c));
            prop_assert!(combo.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn socle_degree_is_sharp(seed: u64, n in 1usize..=3) {
        let r = Ring::rational(n);
        let i = random_artin_ideal(&r, &mut CoefficientStream::new(seed));
        let s = i.socle_degree().unwrap();
        prop_assert!(i.contains_power_of_maximal(s + 1).unwrap());
        prop_assert!(s == 0 || !i.contains_power_of_maximal(s).unwrap());
        let hf = i.hilbert().unwrap();
        let t = i.truncation_span(s).unwrap();
        let full = SubspaceBasis::full(t.frame().clone(), 0);
        prop_assert_eq!(hf.length(), full.quotient_dim(&t).unwrap());
        prop_assert_eq!(hf.socle_degree(), s);
        prop_assert!(*hf.values().last().unwrap() > 0);
    }

    #[test]
    fn type_gorenstein_level(seed: u64, n in 1usize..=3) {
        let r = Ring::rational(n);
        let i = random_artin_ideal(&r, &mut CoefficientStream::new(seed));
        let s = i.socle_degree().unwrap() as i64;
        let tau = i.cm_type();
        prop_assert!(tau >= 1);
        prop_assert_eq!(i.is_ag() == s, tau == 1);
        if i.is_ag() >= 0 {
            prop_assert_eq!(i.is_level(), s);
        }
    }

    #[test]
    fn eq_ideal_ignores_presentation(seed: u64, c in 1i64..7, rot in 0usize..4) {
        let r = Ring::rational(3);
        let i = random_artin_ideal(&r, &mut CoefficientStream::new(seed));
        let mut gens: Vec<Polynomial> = i.generators().iter().map(|g| g.scale(&Scalar::from_i64(-c, 0))).collect();
        let k = rot % gens.len();
        gens.rotate_left(k);
        let j = IdealHandle::new(r, gens).unwrap();
        prop_assert!(i.eq_ideal(&j).unwrap());
        prop_assert!(j.eq_ideal(&i).unwrap());
        prop_assert!(i.eq_ideal(&i).unwrap());
        prop_assert!(i.eq_ideal(&i.minimized().unwrap()).unwrap());
    }

    #[test]
    fn truncation_matches_all_products(seed: u64, bound in 0u32..5) {
        // brute force: every monomial multiple of every generator, truncated
        let r = Ring::rational(2);
        let i = random_artin_ideal(&r, &mut CoefficientStream::new(seed));
        let frame = Frame::new(2, bound);
        let mut products = Vec::new();
        for g in i.generators() {
            for m in Monomial::up_to_degree(2, bound) {
                let p = &Polynomial::term(r, m, r.one()) * g;
                products.push(p.truncate(bound));
            }
        }
        let oracle = SubspaceBasis::span_of(&products, frame, &r).unwrap();
        prop_assert_eq!(&*i.truncation_span(bound).unwrap(), &oracle);
    }

    #[test]
    fn monomial_dimensions_agree_across_fields(seed: u64, n in 1usize..=3) {
        let mono = MonomialIdeal::random(n, &mut CoefficientStream::new(seed));
        let over_q = mono.handle(&Ring::rational(n)).hilbert().unwrap();
        let counts = mono.staircase_counts();
        prop_assert_eq!(over_q.values(), counts.as_slice());
        for p in [5, 7, 31] {
            let over_p = mono.handle(&Ring::new(n, p).unwrap()).hilbert().unwrap();
            prop_assert_eq!(&over_p, &over_q);
            let dual = inv_syst(&mono.handle(&Ring::new(n, p).unwrap()), Action::Contraction).unwrap();
            prop_assert_eq!(dual.length().unwrap(), over_q.length());
        }
    }

    #[test]
    fn sigma_transport_keeps_annihilator(seed: u64) {
        let r = Ring::rational(3);
        let gens = random_module_generators(&r, &mut CoefficientStream::new(seed));
        let m = SubmoduleHandle::new(r, Action::Derivation, gens).unwrap();
        let t = m.sigma_transport().unwrap();
        prop_assert!(ideal_ann(&m).unwrap().eq_ideal(&ideal_ann(&t).unwrap()).unwrap());
    }

    #[test]
    fn colon_solves_when_member(seed: u64, a in actions()) {
        let r = Ring::rational(3);
        let mut rng = CoefficientStream::new(seed);
        let f = random_module_generators(&r, &mut rng).remove(0);
        let op = gen_pol(0, 2, 2, &r, rng.next_u64()).unwrap();
        let g = apply(a, &op, &f).unwrap();
        let h = colon_inv_syst(&f, &g, a).unwrap().expect("g lies in <f>");
        prop_assert_eq!(apply(a, &h, &f).unwrap(), g.clone());
        let cyclic = SubmoduleHandle::new(r, a, vec![f.clone()]).unwrap();
        prop_assert!(member_ih(&g, &cyclic).unwrap());
        let stranger = gen_pol(0, 2, 2, &r, rng.next_u64()).unwrap();
        prop_assert_eq!(colon_inv_syst(&f, &stranger, a).unwrap().is_some(), member_ih(&stranger, &cyclic).unwrap());
    }

    #[test]
    fn weierstrass_is_a_cubic_form(a in -9i64..=9, b in -9i64..=9) {
        let r = Ring::rational(3);
        let (sa, sb) = (Scalar::from_i64(a, 0), Scalar::from_i64(b, 0));
        match weierstrass_ab(&r, &sa, &sb) {
            Ok(w) => {
                prop_assert!(w.is_homogeneous());
                prop_assert_eq!(w.degree(), Some(3));
            }
            Err(_) => prop_assert_eq!(4 * a * a * a + 27 * b * b, 0),
        }
    }
}

#[test]
fn parse_format_round_trip_on_generic_polynomials() {
    for n in 1..=4 {
        let r = Ring::rational(n);
        for seed in 0..250 {
            let p = gen_pol(0, 4, 5, &r, seed).unwrap();
            assert_eq!(parse_poly(&p.to_string(), &r).unwrap(), p);
        }
    }
}
