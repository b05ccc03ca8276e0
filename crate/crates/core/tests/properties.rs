use std::collections::HashMap;

use num_traits::Zero;
use proptest::prelude::*;
use vclass::chow::{cap, series_inverse, series_mul, ChernSeries, ChowClass};
use vclass::cone::{rees_ideal, AmbientKind, SchemePresentation};
use vclass::ideal::{hilbert_dim_deg, saturate, HilbertMode};
use vclass::rational::{rat, ratio, RatNum};
use vclass::script::{parse_expr, Expr};
use vclass::{Budget, Context, Ideal, Monomial, PolyRing, Polynomial, Ring};

fn ring(n: usize) -> Ring {
    PolyRing::with_names(&["x", "y", "z", "w"][..n]).unwrap()
}

fn budget() -> Budget {
    Budget::default()
}

/// Terms as `(exponents, coefficient)`; at most `len` of them.
fn terms(n: usize, max_deg: u16, len: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), -5i64..=5), 0..=len)
}

fn build(r: &Ring, t: &[(Vec<u16>, i64)], cap_deg: u32) -> Polynomial {
    t.iter()
        .filter(|(e, _)| e.iter().map(|&a| a as u32).sum::<u32>() <= cap_deg)
        .fold(Polynomial::zero(r), |acc, (e, c)| {
            acc.add(&Polynomial::monomial(r, Monomial::from_exps(e), rat(*c))).unwrap()
        })
}

/// Random polynomial in `n` variables of degree at most 4.
fn polynomial(n: usize) -> impl Strategy<Value = Polynomial> {
    terms(n, 4, 6).prop_map(move |t| build(&ring(n), &t, 4))
}

/// Homogeneous polynomial of degree `d` in `n` variables.
fn form(n: usize, d: u16) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0..n, -4i64..=4), (d as usize) * 3).prop_map(move |v| {
        let r = ring(n);
        v.chunks(d as usize).fold(Polynomial::zero(&r), |acc, chunk| {
            let mut e = vec![0u16; n];
            for (i, _) in chunk {
                e[*i] += 1;
            }
            acc.add(&Polynomial::monomial(&r, Monomial::from_exps(&e), rat(chunk[0].1))).unwrap()
        })
    })
}

fn forms(n: usize, count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec((1u16..=2).prop_flat_map(move |d| form(n, d)), count)
}

fn series(m: usize) -> impl Strategy<Value = ChernSeries> {
    prop::collection::vec((-6i64..=6, 1i64..=3), m).prop_map(move |v| {
        let mut c = vec![rat(1)];
        c.extend(v.iter().map(|&(a, b)| ratio(a, b)));
        ChernSeries::new(m, c).unwrap()
    })
}

fn class(m: usize) -> impl Strategy<Value = ChowClass> {
    prop::collection::vec(-9i64..=9, m + 1).prop_map(move |v| ChowClass::from_ints(m, &v).unwrap())
}

/// Random invertible linear substitution on the variables of `r`.
fn linear_change(r: &Ring, ctx: &mut Context) -> Vec<Polynomial> {
    let n = r.nvars();
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| ctx.random_coeff()).collect()).collect();
        let images: Vec<Polynomial> = rows
            .iter()
            .map(|row| {
                row.iter().enumerate().fold(Polynomial::zero(r), |acc, (j, &c)| {
                    acc.add(&Polynomial::var(r, j).scale(&rat(c))).unwrap()
                })
            })
            .collect();
        // invertible iff the images span the linear forms
        let lin = Ideal::new(r, images.clone()).unwrap();
        if lin.same_as(&Ideal::of_vars(r, &(0..n).collect::<Vec<_>>()), &budget()).unwrap() {
            return images;
        }
    }
}

/// `p ∈ I` by linear algebra in degree `deg p`, for homogeneous data.
fn in_span(gens: &[Polynomial], p: &Polynomial) -> bool {
    let r = p.ring();
    let d = p.total_degree().unwrap();
    let mut rows: Vec<Polynomial> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let e = g.total_degree().unwrap();
        if e > d {
            continue;
        }
        let monos = build_monomials(r.nvars(), (d - e) as u16);
        rows.extend(monos.iter().map(|m| g.mul(&Polynomial::monomial(r, Monomial::from_exps(m), rat(1))).unwrap()));
    }
    rank_of(&rows) == rank_of(&[rows.clone(), vec![p.clone()]].concat())
}

fn build_monomials(n: usize, d: u16) -> Vec<Vec<u16>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|a| build_monomials(n - 1, d - a).into_iter().map(move |mut m| {
            m.insert(0, a);
            m
        }))
        .collect()
}

fn rank_of(polys: &[Polynomial]) -> usize {
    let mut cols: HashMap<Vec<u16>, usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, RatNum)>> = Vec::new();
    for p in polys {
        rows.push(
            p.terms()
                .iter()
                .map(|(m, c)| {
                    let k = cols.len();
                    (*cols.entry(m.exps().to_vec()).or_insert(k), c.clone())
                })
                .collect(),
        );
    }
    let mut dense: Vec<Vec<RatNum>> = rows
        .into_iter()
        .map(|row| {
            let mut v = vec![RatNum::zero(); cols.len()];
            for (k, c) in row {
                v[k] = c;
            }
            v
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols.len() {
        let Some(p) = (rank..dense.len()).find(|&i| !dense[i][c].is_zero()) else { continue };
        dense.swap(rank, p);
        for i in rank + 1..dense.len() {
            if !dense[i][c].is_zero() {
                let f = &dense[i][c] / &dense[rank][c];
                for j in c..cols.len() {
                    let v = &dense[rank][j] * &f;
                    dense[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..20).prop_map(|n| Expr::Num(rat(n))),
        (1i64..9, 2i64..9).prop_filter("proper fraction", |(a, b)| a % b != 0).prop_map(|(a, b)| Expr::Num(ratio(a, b))),
        prop::sample::select(vec!["x", "y", "h"]).prop_map(|v| Expr::Var(v.to_string())),
    ];
    leaf.prop_recursive(3, 24, 3, |inner| {
        prop_oneof![
            prop::collection::vec((any::<bool>(), inner.clone()), 2..4).prop_map(Expr::Sum),
            prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::Prod),
            (inner, 0i64..5).prop_map(|(b, e)| Expr::Pow(Box::new(b), e)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms((a, b, c) in (1usize..=4).prop_flat_map(|n| (polynomial(n), polynomial(n), polynomial(n)))) {
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), Polynomial::zero(a.ring()));
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(
                a.mul(&b).unwrap().total_degree().unwrap(),
                a.total_degree().unwrap() + b.total_degree().unwrap()
            );
        }
    }

    #[test]
    fn degrees_add(a in form(3, 2), b in form(3, 1)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = a.mul(&b).unwrap();
        prop_assert!(ab.is_homogeneous());
        prop_assert_eq!(ab.total_degree(), Some(3));
    }

    #[test]
    fn print_parse_round_trip(p in polynomial(4)) {
        let again = Polynomial::parse(p.ring(), &p.to_string()).unwrap();
        prop_assert_eq!(&again, &p);
    }

    #[test]
    fn reduced_bases_are_canonical(gens in forms(3, 1..=3), mult in form(3, 1), k in 0usize..3) {
        let r = ring(3);
        let i = Ideal::new(&r, gens.clone()).unwrap();
        // same ideal: reversed generators plus a redundant combination
        let mut other: Vec<Polynomial> = gens.iter().rev().cloned().collect();
        other.push(gens[k % gens.len()].mul(&mult).unwrap().add(&gens[0]).unwrap());
        let j = Ideal::new(&r, other).unwrap();
        let (a, b) = (i.groebner(&budget()).unwrap(), j.groebner(&budget()).unwrap());
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn normal_form_decides_membership(
        gens in prop::collection::vec(form(3, 2), 1..=3),
        p in form(3, 3),
        h in prop::collection::vec(form(3, 1), 3),
        in_ideal in any::<bool>(),
    ) {
        let r = ring(3);
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let p = if in_ideal {
            gens.iter().zip(&h).fold(Polynomial::zero(&r), |acc, (g, h)| acc.add(&g.mul(h).unwrap()).unwrap())
        } else {
            p
        };
        prop_assume!(!p.is_zero());
        let gb = i.groebner(&budget()).unwrap();
        let member = gb.contains(&p).unwrap();
        prop_assert_eq!(member, in_span(&gens, &p));
        if in_ideal {
            prop_assert!(member);
        }
    }

    #[test]
    fn saturation_contains_and_is_idempotent(gens in forms(3, 1..=3)) {
        let r = ring(3);
        let i = Ideal::new(&r, gens).unwrap();
        let m = Ideal::of_vars(&r, &[0, 1, 2]);
        let s = saturate(&i, &m, &budget()).unwrap();
        prop_assert!(s.contains_ideal(&i, &budget()).unwrap());
        prop_assert!(saturate(&s, &m, &budget()).unwrap().same_as(&s, &budget()).unwrap());
    }

    #[test]
    fn hilbert_data_ignore_coordinates(gens in forms(4, 1..=3), seed in any::<u64>()) {
        let r = ring(4);
        let i = Ideal::new(&r, gens).unwrap();
        let dd = hilbert_dim_deg(&i, HilbertMode::Projective, &budget()).unwrap();
        let mut ctx = Context::new(seed);
        for _ in 0..3 {
            let images = linear_change(&r, &mut ctx);
            let j = i.map(|g| g.map_with(&r, &images), &r).unwrap();
            prop_assert_eq!(hilbert_dim_deg(&j, HilbertMode::Projective, &budget()).unwrap(), dd);
        }
    }

    #[test]
    fn series_algebra(a in series(4), b in series(4), c in series(4), z in class(4)) {
        let ab = series_mul(&a, &b).unwrap();
        prop_assert_eq!(&ab, &series_mul(&b, &a).unwrap());
        prop_assert_eq!(series_mul(&ab, &c).unwrap(), series_mul(&a, &series_mul(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(series_mul(&a, &series_inverse(&a)).unwrap(), ChernSeries::one(4));
        prop_assert_eq!(cap(&a, &cap(&b, &z).unwrap()).unwrap(), cap(&ab, &z).unwrap());
        prop_assert_eq!(cap(&ChernSeries::one(4), &z).unwrap(), z);
    }

    #[test]
    fn expression_round_trip(e in expr()) {
        let printed = e.to_string();
        let again = parse_expr(&printed).unwrap();
        prop_assert_eq!(&again, &e, "{}", printed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn rees_ideal_ignores_generator_scaling(
        gens in prop::collection::vec(form(3, 2), 2),
        s in prop::collection::vec(prop_oneof![-5i64..=-1, 1i64..=5], 2),
    ) {
        let r = ring(3);
        prop_assume!(gens.iter().all(|g| !g.is_zero()));
        let x = SchemePresentation::new(AmbientKind::Projective, Ideal::new(&r, gens.clone()).unwrap(), Ideal::zero(&r)).unwrap();
        let fibers = vec!["A".to_string(), "B".to_string()];
        let mut ctx = Context::new(1);
        let plain = rees_ideal(&x, &gens, &fibers, &mut ctx).unwrap();
        let scaled: Vec<Polynomial> = gens.iter().zip(&s).map(|(g, &c)| g.scale(&rat(c))).collect();
        let other = rees_ideal(&x, &scaled, &fibers, &mut ctx).unwrap();
        // A_i -> A_i / c_i carries one onto the other
        let ring = plain.ideal.ring().clone();
        let mut images: Vec<Polynomial> = (0..ring.nvars()).map(|j| Polynomial::var(&ring, j)).collect();
        for (name, &c) in fibers.iter().zip(&s) {
            let k = ring.index_of(name).unwrap();
            images[k] = images[k].scale(&ratio(1, c));
        }
        let moved = plain.ideal.map(|g| g.map_with(&ring, &images), &ring).unwrap();
        prop_assert!(moved.same_as(&other.ideal, &budget()).unwrap());
    }

    #[test]
    fn complete_intersection_rees_ideals_are_linear(a in form(3, 1), b in form(3, 2)) {
        let r = ring(3);
        prop_assume!(!a.is_zero() && !b.is_zero());
        // (a^2, b) is a regular sequence when a and b meet in points
        let pair = vec![a.mul(&a).unwrap(), b];
        let i = Ideal::new(&r, pair.clone()).unwrap();
        prop_assume!(hilbert_dim_deg(&i, HilbertMode::Projective, &budget()).unwrap().dim == 0);
        let x = SchemePresentation::new(AmbientKind::Projective, i, Ideal::zero(&r)).unwrap();
        let fibers = vec!["A".to_string(), "B".to_string()];
        let rees = rees_ideal(&x, &pair, &fibers, &mut Context::new(2)).unwrap();
        let ring = rees.ideal.ring().clone();
        let var = |v: &str| Polynomial::var_named(&ring, v).unwrap();
        let koszul = pair[0].to_ring(&ring).unwrap().mul(&var("B")).unwrap()
            .sub(&pair[1].to_ring(&ring).unwrap().mul(&var("A")).unwrap()).unwrap();
        prop_assert!(rees.ideal.same_as(&Ideal::new(&ring, vec![koszul]).unwrap(), &budget()).unwrap());
    }

    #[test]
    fn adding_equations_never_raises_dimension(gens in forms(4, 1..=3), extra in form(4, 2)) {
        let r = ring(4);
        let i = Ideal::new(&r, gens).unwrap();
        let j = i.with_gens([extra]).unwrap();
        let (di, dj) = (
            hilbert_dim_deg(&i, HilbertMode::Projective, &budget()).unwrap(),
            hilbert_dim_deg(&j, HilbertMode::Projective, &budget()).unwrap(),
        );
        prop_assert!(dj.dim <= di.dim);
        prop_assert!(dj.dim >= di.dim - 1);
    }
}
