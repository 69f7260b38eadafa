mod support;

use proptest::prelude::*;
use scrollcurves::chow::intersect;
use scrollcurves::cohom::{cohomology, h0, is_effective as class_effective};
use scrollcurves::ruled_cubic::{
    are_linked, contains_preserved, is_effective, parse_alpha, preserved_link, reduce_alpha,
    APicClass, Alpha, M2Point,
};
use scrollcurves::{DivisorClass, ScrollSurface};

fn scroll() -> impl Strategy<Value = ScrollSurface> {
    (1i64..=12, 0i64..=12).prop_map(|(a, k)| ScrollSurface::new(a, a + k).unwrap())
}

fn class(r: i64) -> impl Strategy<Value = DivisorClass> {
    (-r..=r, -r..=r).prop_map(|(c, d)| DivisorClass::new(c, d))
}

fn point() -> impl Strategy<Value = M2Point> {
    prop_oneof![
        1 => Just(M2Point::Infinity),
        1 => Just(M2Point::integer(0)),
        8 => (-40i64..=40, 1i64..=6).prop_map(|(p, q)| M2Point::rational(p, q).unwrap()),
    ]
}

fn alpha() -> impl Strategy<Value = Alpha> {
    prop::collection::vec((point(), -4i64..=4), 0..10).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #[test]
    fn intersection_is_symmetric_and_bilinear(
        s in scroll(), x in class(50), y in class(50), z in class(50), k in -7i64..=7
    ) {
        let i = |p, q| intersect(&s, p, q).unwrap();
        prop_assert_eq!(i(x, y), i(y, x));
        prop_assert_eq!(i(x + y, z), i(x, z) + i(y, z));
        prop_assert_eq!(i(x.checked_scale(k).unwrap(), y), k * i(x, y));
    }

    #[test]
    fn cohomology_is_nonnegative_and_serre_dual(s in scroll(), x in class(40)) {
        let v = cohomology(&s, x).unwrap();
        prop_assert!(v.h0 >= 0 && v.h1 >= 0 && v.h2 >= 0);
        let w = cohomology(&s, s.canonical() - x).unwrap();
        prop_assert_eq!((v.h0, v.h1, v.h2), (w.h2, w.h1, w.h0));
        prop_assert_eq!(v.h0 > 0, class_effective(&s, x));
    }

    #[test]
    fn sections_grow_with_the_class(s in scroll(), x in class(30)) {
        prop_assume!(class_effective(&s, x));
        let f = h0(&s, x).unwrap();
        prop_assert!(h0(&s, x + DivisorClass::FIBER).unwrap() >= f);
        prop_assert!(h0(&s, x + DivisorClass::ETA).unwrap() >= f);
    }

    #[test]
    fn reduction_is_idempotent_and_keeps_parity(a in alpha()) {
        let r = reduce_alpha(&a);
        prop_assert_eq!(reduce_alpha(&r), r.clone());
        prop_assert_eq!((a.degree() - r.degree()).rem_euclid(2), 0);
        prop_assert!(r.iter().all(|(_, m)| m > 0));
        prop_assert_eq!(r.degree(), support::reduced_degree(&a));
    }

    #[test]
    fn reduction_ignores_pullbacks(a in alpha(), p in point(), k in -3i64..=3) {
        let mut b = a.clone();
        if p.is_fixed() {
            b.add_point(p, 2 * k);
        } else {
            b.add_point(p, k);
            b.add_point(p.sigma(), k);
        }
        prop_assert_eq!(reduce_alpha(&a), reduce_alpha(&b));
    }

    #[test]
    fn negative_point_equals_its_conjugate(a in alpha(), p in point()) {
        let mut x = a.clone();
        x.add_point(p, -1);
        let mut y = a.clone();
        y.add_point(p.sigma(), 1);
        prop_assert_eq!(reduce_alpha(&x), reduce_alpha(&y));
    }

    #[test]
    fn alpha_text_round_trips(a in alpha()) {
        prop_assert_eq!(parse_alpha(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn preserved_implies_effective(c in -3i64..=6, d in -3i64..=8, a in alpha()) {
        let t = APicClass::new(c, d, a);
        prop_assume!(t.parity_ok());
        if contains_preserved(&t).unwrap() {
            prop_assert!(is_effective(&t).unwrap());
        }
        prop_assert_eq!(is_effective(&t).unwrap(), support::effective_oracle(c, d, &t.alpha));
    }

    #[test]
    fn preserved_link_postconditions(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let t = support::random_smooth_preserved_triple(&mut rng);
        let l = preserved_link(&t).unwrap();
        prop_assert!(are_linked(&t, &l, t.d).unwrap());
        prop_assert!(contains_preserved(&l).unwrap());
        prop_assert!(is_effective(&l).unwrap());
        prop_assert_eq!(l.d, t.d);
        // linking twice returns the original class
        if l.c > 0 {
            let back = preserved_link(&l).unwrap();
            prop_assert_eq!(reduce_alpha(&back.alpha), reduce_alpha(&t.alpha));
            prop_assert_eq!((back.c, back.d), (t.c, t.d));
        }
    }

    #[test]
    fn apic_text_round_trips(c in -50i64..=50, d in -50i64..=50, a in alpha()) {
        let t = APicClass::new(c, d, a);
        prop_assert_eq!(t.to_string().parse::<APicClass>().unwrap(), t);
    }

    #[test]
    fn parse_alpha_never_panics(s in "\\PC{0,40}") {
        let _ = parse_alpha(&s);
        let _ = s.parse::<APicClass>();
    }
}
