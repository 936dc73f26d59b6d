//! Named verification suites. Each suite runs a family of identities on
//! seeded random or fixed inputs and reports one line per identity.
//!
//! A failing identity is reported, not raised; the detail carries the
//! offending input. Truncation conflicts are raised as errors.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combo::Combo;
use crate::dold_kan_core::mixed::{equivalence_check, MixedComplex};
use crate::dold_kan_core::{cohomotopy, normalize, BaseComplex, FinObject, KObject, Nqa, QKey, QObject, WordComplex};
use crate::error::{Error, Result};
use crate::exact_linear::random::random_complex;
use crate::exact_linear::{BoundedComplex, CoeffRing, HomologySummary, Matrix};
use crate::fin_maps::{generators, FinMap};
use crate::nc_geometry::coproduct::{check_coproduct_level, check_coproduct_map};
use crate::nc_geometry::{check_disk_permutation, nchkr_suite, Amitsur, NussComparison, Omega, QOmegaIso, StructAlgebra};
use crate::ring_layer::fin_ring::{
    check_fin_ring, check_ring_level, check_ring_map, connes_operator, graded_product, homotopy_groups,
    is_boundary_mod_degenerate, is_cycle, is_degenerate, shuffle_product,
};
use crate::ring_layer::monoidal::upsilon_is_unitriangular;
use crate::ring_layer::{upsilon, DGRing, FinRing, KRing, MultiQ, QRing, QtIso};
use crate::tensor_exterior::{epsilon, project_p};

/// Suite names with a one-line description, in canonical order.
pub const SUITES: &[(&str, &str)] = &[
    ("cohotv", "word complexes Z[sur_{n,*}] are spheres; ker p; p(ε_n) = n!"),
    ("doldkan", "N(K(A)) = A on random complexes"),
    ("functoriality", "β(α x) = (βα) x on Q and K"),
    ("kequivq", "retraction N QA ⇄ A and the mixed-complex identities"),
    ("monoidal", "υ natural, associative, unitriangular; (QA, ∘) a Fin-ring over K"),
    ("nchkr", "H_n(N∐S, μ) ≅ Ω^n as modules and rings"),
    ("nusbo", "Nuss product identities and K Ω ≅ Amitsur"),
    ("propi", "l: A → πQA is a graded-ring iso; B a ⋆-derivation"),
    ("qomega", "QΩ ≅ ∐S on length-graded pieces; Q Z<0,1> ≅ ⊕Z"),
    ("qttq", "T Q U ≅ Q T U and Q(D∐D) ≅ QD ∐ QD"),
    ("yangbaxter", "τ² = 1, μ_0 τ = μ_0, Yang–Baxter"),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

/// Parameters shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub ring: CoeffRing,
    /// Highest simplicial level exercised.
    pub levels: usize,
    /// Degree cutoff for `Q`, `K` and `N QA`.
    pub r_max: usize,
    /// Word-length cutoff for coproducts and tensor algebras.
    pub w_max: usize,
    pub seed: u64,
    /// Named test algebras for the noncommutative suites.
    pub algebras: Vec<(String, StructAlgebra)>,
}

impl SuiteParams {
    pub fn default_algebras() -> Vec<(String, StructAlgebra)> {
        let z2 = CoeffRing::modular(2).expect("Z/2");
        vec![
            ("dual_numbers".to_string(), StructAlgebra::dual_numbers(z2)),
            ("upper_triangular".to_string(), StructAlgebra::upper_triangular(z2)),
        ]
    }
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            ring: CoeffRing::Integers,
            levels: 4,
            r_max: 5,
            w_max: 3,
            seed: 0,
            algebras: SuiteParams::default_algebras(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Check {
    pub suite: String,
    pub check: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

fn fail(msg: String) -> Error {
    Error::InvalidStructure(msg)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

/// Prefixes an error with the input it came from, leaving truncation
/// conflicts alone.
fn context(what: impl FnOnce() -> String) -> impl FnOnce(Error) -> Error {
    move |e| match e {
        Error::Truncation(_) => e,
        other => fail(format!("{}: {other}", what())),
    }
}

struct Recorder {
    suite: &'static str,
    out: Vec<Check>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder { suite, out: Vec::new() }
    }

    fn run(&mut self, check: &str, cases: usize, f: impl FnOnce() -> Result<String>) -> Result<()> {
        let (passed, detail) = match f() {
            Ok(d) => (true, d),
            Err(Error::Truncation(m)) => return Err(Error::Truncation(m)),
            Err(e) => (false, e.to_string()),
        };
        self.out.push(Check {
            suite: self.suite.to_string(),
            check: check.to_string(),
            passed,
            cases,
            detail,
        });
        Ok(())
    }
}

fn suite_rng(seed: u64, name: &str) -> ChaCha8Rng {
    let idx = SUITES.iter().position(|s| s.0 == name).unwrap_or(0) as u64;
    ChaCha8Rng::seed_from_u64(seed ^ (idx + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs the named suites and returns their checks sorted by suite and name.
pub fn run_suites(names: &[String], p: &SuiteParams) -> Result<Vec<Check>> {
    for n in names {
        if !SUITES.iter().any(|s| s.0 == n) {
            return Err(Error::Parse(format!("unknown suite {n:?}; known: {}", suite_names().join(", "))));
        }
    }
    let mut out = Vec::new();
    for (name, _) in SUITES {
        if names.iter().any(|n| n == name) {
            out.extend(run_suite(name, p)?);
        }
    }
    out.sort();
    Ok(out)
}

pub fn run_suite(name: &str, p: &SuiteParams) -> Result<Vec<Check>> {
    let mut rng = suite_rng(p.seed, name);
    let rng = &mut rng;
    let out = match name {
        "cohotv" => cohotv(p)?,
        "doldkan" => doldkan(p, rng)?,
        "functoriality" => functoriality(p, rng)?,
        "kequivq" => kequivq(p, rng)?,
        "monoidal" => monoidal(p, rng)?,
        "nchkr" => nchkr(p)?,
        "nusbo" => nusbo(p)?,
        "propi" => propi(p, rng)?,
        "qomega" => qomega(p)?,
        "qttq" => qttq(p)?,
        "yangbaxter" => yangbaxter(p)?,
        _ => return Err(Error::Parse(format!("unknown suite {name:?}"))),
    };
    let mut out = out;
    out.sort();
    Ok(out)
}

fn same_homology(a: &HomologySummary, b: &HomologySummary) -> bool {
    a.degrees.len() == b.degrees.len() && a.degrees.iter().zip(&b.degrees).all(|(x, y)| x.same_group(y))
}

fn doldkan(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut r = Recorder::new("doldkan");
    let count = 50;
    let complexes: Vec<BoundedComplex> = (0..count)
        .map(|_| {
            let top = rng.gen_range(0..=p.levels);
            random_complex(p.ring, top, 3, rng)
        })
        .collect();
    r.run("N(K(A)) = A: ranks and differentials", count, || {
        for (i, a) in complexes.iter().enumerate() {
            let at = || format!("complex #{i} {}", a.to_json());
            let n = normalize(&KObject::new(a, a.top()), a.top()).map_err(context(at))?;
            ensure(n.complex.ranks() == a.ranks(), || {
                format!("{}: ranks {:?} ≠ {:?}", at(), n.complex.ranks(), a.ranks())
            })?;
            for (k, (x, y)) in n.complex.differentials().iter().zip(a.differentials()).enumerate() {
                ensure(x.eq_in(y, p.ring), || format!("{}: differential {k} is {x:?}", at()))?;
            }
        }
        Ok(format!("{count} complexes, degrees ≤ {}, ranks ≤ 3", p.levels))
    })?;
    r.run("cohomotopy of K(A) is the cohomology of A", count, || {
        for (i, a) in complexes.iter().enumerate() {
            let at = || format!("complex #{i} {}", a.to_json());
            let pi = cohomotopy(&KObject::new(a, a.top()), a.top()).map_err(context(at))?;
            let h = a.cohomology()?;
            ensure(same_homology(&pi, &h), || format!("{}: π = {:?}, H = {:?}", at(), pi.betti(), h.betti()))?;
        }
        Ok(format!("{count} complexes"))
    })?;
    Ok(r.out)
}

fn functoriality(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut r = Recorder::new("functoriality");
    let (complexes, per) = (5, 500);
    let inputs: Vec<BoundedComplex> = (0..complexes)
        .map(|_| {
            let top = rng.gen_range(0..=3.min(p.r_max));
            random_complex(p.ring, top, 2, rng)
        })
        .collect();
    let mut triples = Vec::new();
    for _ in 0..complexes {
        let mut v = Vec::new();
        for _ in 0..per {
            let (n, m, l) = (rng.gen_range(0..=p.levels), rng.gen_range(0..=p.levels), rng.gen_range(0..=p.levels));
            v.push((FinMap::random(n, m, rng), FinMap::random(m, l, rng), rng.gen::<u64>()));
        }
        triples.push(v);
    }
    r.run("Q: β(α(a⊗x)) = (βα)(a⊗x)", complexes * per, || {
        for (i, a) in inputs.iter().enumerate() {
            let q = QObject::new(a, p.r_max);
            for (alpha, beta, s) in &triples[i] {
                let x = q.random_element(alpha.source(), 4, &mut ChaCha8Rng::seed_from_u64(*s));
                let two = q.act(beta, &q.act(alpha, &x));
                let once = q.act(&alpha.then(beta)?, &x);
                ensure(two == once, || {
                    format!("complex #{i} {}: α = {alpha}, β = {beta}, x = {x:?}", a.to_json())
                })?;
            }
        }
        Ok(format!("{complexes} complexes × {per} triples, levels ≤ {}", p.levels))
    })?;
    r.run("K: β(α(a⊗x)) = (βα)(a⊗x)", complexes * per, || {
        for (i, a) in inputs.iter().enumerate() {
            let k = KObject::new(a, p.r_max);
            for (alpha, beta, s) in &triples[i] {
                let basis = k.basis(alpha.source());
                if basis.is_empty() {
                    continue;
                }
                let mut g = ChaCha8Rng::seed_from_u64(*s);
                let x = Combo::basis(basis[g.gen_range(0..basis.len())].clone());
                let two = k.act(beta, &k.act(alpha, &x));
                let once = k.act(&alpha.then(beta)?, &x);
                ensure(two == once, || {
                    format!("complex #{i} {}: α = {alpha}, β = {beta}, x = {x:?}", a.to_json())
                })?;
            }
        }
        Ok(format!("{complexes} complexes × {per} triples"))
    })?;
    Ok(r.out)
}

fn unit_scale(_: usize) -> BigInt {
    BigInt::one()
}

fn kequivq(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut r = Recorder::new("kequivq");
    let count = 20;
    let top_bound = 3.min(p.r_max);
    let complexes: Vec<BoundedComplex> = (0..count)
        .map(|_| {
            let top = rng.gen_range(0..=top_bound);
            random_complex(p.ring, top, 2, rng)
        })
        .collect();
    let nqas: Vec<Nqa> = complexes.iter().map(|a| Nqa::from_complex(a, p.r_max)).collect::<Result<_>>()?;
    let at = |i: usize| format!("complex #{i} {}", complexes[i].to_json());

    r.run("p̂j = 1 and h∂ + ∂h = 1 − jp̂", count, || {
        for (i, n) in nqas.iter().enumerate() {
            n.retraction().and_then(|ret| ret.verify(n)).map_err(context(|| at(i)))?;
        }
        Ok(format!("{count} complexes, cutoff {}", p.r_max))
    })?;
    r.run("μl = 0 and ld = Bl", count, || {
        for (i, n) in nqas.iter().enumerate() {
            let a = MixedComplex::from_complex(&complexes[i], unit_scale)?;
            n.l_map().check(&a, &n.mixed()?).map_err(context(|| at(i)))?;
        }
        Ok(format!("{count} complexes"))
    })?;
    r.run("p̂B = Dp̂ with D = (n+1)d", count, || {
        for (i, n) in nqas.iter().enumerate() {
            for k in 0..n.top() {
                let lhs = n.p_hat(k + 1).dot(&n.connes_b(k));
                let rhs = n.scaled_differential(k).dot(&n.p_hat(k));
                ensure(lhs.eq_in(&rhs, n.ring()), || format!("{}: degree {k}", at(i)))?;
            }
        }
        Ok(format!("{count} complexes"))
    })?;
    r.run("H(N QA, μ) ≅ A degreewise, induced by l", count, || {
        for (i, n) in nqas.iter().enumerate() {
            let a = &complexes[i];
            let m = n.mixed()?;
            let h = m.b_homology()?;
            for k in 0..=n.top() {
                let g = h.get(k);
                let ok = g.map_or(a.rank(k) == 0, |g| g.betti == a.rank(k) && g.torsion.is_empty());
                ensure(ok, || format!("{}: H_{k} = {g:?}", at(i)))?;
            }
            let rep = equivalence_check(&MixedComplex::from_complex(a, unit_scale)?, &m, &n.l_map())?;
            ensure(rep.is_equivalence, || format!("{}: l is not a quasi-isomorphism", at(i)))?;
        }
        Ok(format!("{count} complexes"))
    })?;
    let z5 = CoeffRing::modular(5)?;
    r.run("over Z/5, p̂/n! is a mixed map left inverse to l", count, || {
        for (i, a) in complexes.iter().enumerate() {
            let a5 = a.reduce_ring(z5);
            let n = Nqa::from_complex(&a5, p.r_max.min(4))?;
            let rescaled = n.rescaled_p_hat_map()?;
            rescaled
                .check(&n.mixed()?, &MixedComplex::from_complex(&a5, unit_scale)?)
                .map_err(context(|| at(i)))?;
            for k in 0..=n.top() {
                let id = Matrix::identity(a5.rank(k));
                ensure(rescaled.maps[k].dot(&n.l(k)).eq_in(&id, z5), || format!("{}: degree {k}", at(i)))?;
            }
        }
        Ok(format!("{count} complexes, cutoff {}", p.r_max.min(4)))
    })?;
    Ok(r.out)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn cohotv(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut r = Recorder::new("cohotv");
    let z = CoeffRing::Integers;
    let top = p.levels;
    let complexes: Vec<WordComplex> = (1..=top).map(|n| WordComplex::new(z, n)).collect::<Result<_>>()?;
    r.run("H(Z[sur_{n,*}], ∂_0) = Z in degree n", top, || {
        for wc in &complexes {
            let h = wc.complex.cohomology()?;
            for k in 0..=wc.r {
                let g = h.get(k);
                let want = usize::from(k == wc.r);
                let ok = g.map_or(want == 0, |g| g.betti == want && g.torsion.is_empty());
                ensure(ok, || format!("n = {}: H^{k} = {g:?}", wc.r))?;
            }
        }
        Ok(format!("n ≤ {top}"))
    })?;
    r.run("ker(p on Z[S_n]) = ∂_0 Z[sur_{n,n−1}]", top, || {
        for wc in &complexes {
            ensure(wc.kernel_of_p_is_boundary()?, || format!("n = {}", wc.r))?;
        }
        Ok(format!("n ≤ {top}"))
    })?;
    r.run("word complex contraction onto Z[n]", top, || {
        for wc in &complexes {
            wc.retraction
                .verify(&wc.complex, &wc.target, &wc.p)
                .map_err(context(|| format!("n = {}", wc.r)))?;
        }
        Ok(format!("n ≤ {top}"))
    })?;
    r.run("p(ε_n) = n! v_1⋯v_n", 7, || {
        for n in 0..=6 {
            let word: Vec<u8> = (1..=n as u8).collect();
            let got = project_p(&epsilon(n)).terms;
            ensure(got == Combo::term(word, factorial(n)), || format!("n = {n}: {got:?}"))?;
        }
        Ok("n ≤ 6".into())
    })?;
    Ok(r.out)
}

fn monoidal(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut r = Recorder::new("monoidal");
    let lv = p.levels.min(3);
    let pool: Vec<BoundedComplex> = (0..4).map(|_| random_complex(p.ring, rng.gen_range(0..=2), 2, rng)).collect();
    let qs: Vec<MultiQ> = pool
        .iter()
        .map(|a| MultiQ::new(vec![BaseComplex::new(a, p.r_max)]))
        .collect::<Result<_>>()?;
    let triples = 200;
    r.run("υ is Fin-natural and associative", triples, || {
        for t in 0..triples {
            let c = rng.gen_range(0..qs.len());
            let q = &qs[c];
            let qq = q.join(q);
            let n = rng.gen_range(0..=lv);
            let m = rng.gen_range(0..=lv);
            let alpha = FinMap::random(n, m, rng);
            let b = q.basis(n);
            if b.is_empty() {
                continue;
            }
            let mut pick = || Combo::basis(b[rng.gen_range(0..b.len())].clone());
            let (x, y, z) = (pick(), pick(), pick());
            let at = || format!("triple #{t} on {}: α = {alpha}, x = {x:?}, y = {y:?}, z = {z:?}", pool[c].to_json());
            let lhs = qq.act(&alpha, &upsilon(&x, &y, q));
            let rhs = upsilon(&q.act(&alpha, &x), &q.act(&alpha, &y), q);
            ensure(lhs == rhs, || format!("naturality fails for {}", at()))?;
            let left = upsilon(&upsilon(&x, &y, q), &z, q);
            let right = upsilon(&x, &upsilon(&y, &z, q), &qq);
            ensure(left == right, || format!("associativity fails for {}", at()))?;
        }
        Ok(format!("{triples} triples, levels ≤ {lv}"))
    })?;
    r.run("υ is unitriangular, hence a levelwise iso", pool.len(), || {
        for (c, q) in qs.iter().enumerate() {
            for n in 0..=lv {
                ensure(upsilon_is_unitriangular(q, q, n)?, || {
                    format!("level {n} on {}", pool[c].to_json())
                })?;
            }
        }
        Ok(format!("{} complexes, levels ≤ {lv}", pool.len()))
    })?;

    let rings: Vec<DGRing> = (0..3).map(|_| DGRing::random(p.ring, 3, 2, rng)).collect::<Result<_>>()?;
    let ring_top = lv;
    r.run("(QA, ∘) is a Fin-ring", rings.len(), || {
        for dg in &rings {
            check_fin_ring(&QRing::new(dg), ring_top).map_err(context(|| dg.to_json().to_string()))?;
        }
        Ok(format!("{} DG-rings, levels ≤ {ring_top}", rings.len()))
    })?;
    r.run("p̂: (QA, ∘) → KA is a ring map", rings.len(), || {
        for dg in &rings {
            let (q, k) = (QRing::new(dg), KRing::new(dg));
            for n in 0..=ring_top {
                let basis = q.basis(n);
                for x in &basis {
                    for y in &basis {
                        let lhs = crate::dold_kan_core::p_hat(&q.mul_keys(n, x, y));
                        let mut lhs = lhs;
                        k.ring().reduce_combo(&mut lhs);
                        let px = crate::dold_kan_core::p_hat(&Combo::basis(x.clone()));
                        let py = crate::dold_kan_core::p_hat(&Combo::basis(y.clone()));
                        ensure(lhs == k.mul(n, &px, &py), || format!("{} on ({x:?}, {y:?})", dg.to_json()))?;
                    }
                }
            }
        }
        Ok(format!("{} DG-rings, levels ≤ {ring_top}", rings.len()))
    })?;
    r.run("gr_F(QA, ∘) = A ⊠ TV", rings.len(), || {
        for dg in &rings {
            let q = QRing::new(dg);
            for n in 0..=ring_top {
                let basis = q.basis(n);
                for x in &basis {
                    for y in &basis {
                        let mut rest = q.mul(n, &Combo::basis(x.clone()), &Combo::basis(y.clone()));
                        rest.sub_assign(&graded_product(dg, x, y));
                        q.ring().reduce_combo(&mut rest);
                        ensure(rest.keys().all(|k: &QKey| k.deg > x.deg + y.deg), || {
                            format!("{} on ({x:?}, {y:?}): {rest:?}", dg.to_json())
                        })?;
                    }
                }
            }
        }
        Ok(format!("{} DG-rings, levels ≤ {ring_top}", rings.len()))
    })?;
    Ok(r.out)
}

/// `a ⊗ ε_p` for a degree-`p` basis element.
fn l_key(p: usize, idx: usize) -> Combo<QKey> {
    epsilon(p).terms.map_keys(|w| QKey::new(p, idx, w.clone()))
}

fn l_of(x: &Combo<(usize, usize)>) -> Combo<QKey> {
    let mut out = Combo::zero();
    for (&(p, i), c) in x.iter() {
        out.add_scaled(&l_key(p, i), c);
    }
    out
}

fn propi(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut r = Recorder::new("propi");
    let top = p.levels.min(3);
    let mut coeffs = vec![p.ring];
    let z2 = CoeffRing::modular(2)?;
    if p.ring != z2 {
        coeffs.push(z2);
    }
    let count = 10;
    for ring in coeffs {
        let rings: Vec<DGRing> = (0..count).map(|_| DGRing::random(ring, top, 2, rng)).collect::<Result<_>>()?;
        let tag = format!("over {ring}");
        r.run(&format!("π_n QA ≅ A^n via l ({tag})"), count, || {
            for dg in &rings {
                let at = || dg.to_json().to_string();
                let q = QRing::new(dg);
                let h = homotopy_groups(&q, top)?;
                for n in 0..=top {
                    let g = h.get(n);
                    let ok = g.map_or(dg.rank(n) == 0, |g| g.betti == dg.rank(n) && g.torsion.is_empty());
                    ensure(ok, || format!("{}: π_{n} = {g:?}", at()))?;
                    for i in 0..dg.rank(n) {
                        ensure(is_cycle(&q, n, &l_key(n, i))?, || format!("{}: l of ({n}, {i}) is not a cycle", at()))?;
                    }
                }
                let nqa = Nqa::from_complex(dg.complex(), top)?;
                let rep = equivalence_check(&MixedComplex::from_complex(dg.complex(), unit_scale)?, &nqa.mixed()?, &nqa.l_map())
                    .map_err(context(at))?;
                ensure(rep.is_equivalence, || format!("{}: l is not a quasi-isomorphism", at()))?;
            }
            Ok(format!("{count} DG-rings, degrees ≤ {top}, ranks ≤ 2"))
        })?;
        r.run(&format!("l(a) ⋆ l(b) = l(ab) in πQA ({tag})"), count, || {
            let mut pairs = 0;
            for dg in &rings {
                let q = QRing::new(dg);
                for x in dg.basis() {
                    for y in dg.basis() {
                        if x.0 + y.0 > top {
                            continue;
                        }
                        pairs += 1;
                        let star = shuffle_product(&q, x.0, &l_key(x.0, x.1), y.0, &l_key(y.0, y.1));
                        let prod = l_of(&dg.mul(&Combo::basis(x), &Combo::basis(y)));
                        ensure(crate::ring_layer::fin_ring::is_boundary(&q, x.0 + y.0, &star.minus(&prod))?, || {
                            format!("{} on ({x:?}, {y:?})", dg.to_json())
                        })?;
                    }
                }
            }
            Ok(format!("{pairs} basis pairs"))
        })?;
        r.run(&format!("B l = l d and B is a ⋆-derivation ({tag})"), count, || {
            let mut pairs = 0;
            for dg in &rings {
                let q = QRing::new(dg);
                let sign = |k: usize| BigInt::from(if k % 2 == 0 { 1 } else { -1 });
                for x in dg.basis() {
                    if x.0 < top {
                        let diff = connes_operator(&q, x.0, &l_key(x.0, x.1)).minus(&l_of(&dg.d(&Combo::basis(x))));
                        ensure(is_degenerate(&q, x.0 + 1, &diff)?, || format!("{}: B l ≠ l d on {x:?}", dg.to_json()))?;
                    }
                    for y in dg.basis() {
                        let n = x.0 + y.0;
                        if n + 1 > top {
                            continue;
                        }
                        pairs += 1;
                        let (lx, ly) = (l_key(x.0, x.1), l_key(y.0, y.1));
                        let lhs = connes_operator(&q, n, &shuffle_product(&q, x.0, &lx, y.0, &ly));
                        let mut rhs = shuffle_product(&q, x.0 + 1, &connes_operator(&q, x.0, &lx), y.0, &ly);
                        rhs.add_scaled(
                            &shuffle_product(&q, x.0, &lx, y.0 + 1, &connes_operator(&q, y.0, &ly)),
                            &sign(x.0),
                        );
                        ensure(is_boundary_mod_degenerate(&q, n + 1, &lhs.minus(&rhs))?, || {
                            format!("{} on ({x:?}, {y:?})", dg.to_json())
                        })?;
                    }
                }
            }
            Ok(format!("{pairs} basis pairs"))
        })?;
    }
    Ok(r.out)
}

fn yangbaxter(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut r = Recorder::new("yangbaxter");
    for (name, s) in &p.algebras {
        r.run(&format!("τ² = 1, μ_0τ = μ_0, Yang–Baxter on {name}"), 1, || {
            Amitsur::new(s).check_twist()?;
            Ok(format!("rank {}", s.rank()))
        })?;
    }
    Ok(r.out)
}

fn generator_maps(n: usize, max_target: usize) -> Vec<FinMap> {
    let mut maps = generators(n).all();
    maps.retain(|m| m.target() <= max_target);
    maps
}

fn nusbo(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut r = Recorder::new("nusbo");
    let lv = p.levels.min(3);
    for (name, s) in &p.algebras {
        let a = Amitsur::new(s);
        r.run(&format!("δ-products and q-relations on {name}"), lv + 1, || {
            for n in 0..=lv {
                a.check_delta_products(n)?;
                a.check_q_relations(n)?;
            }
            Ok(format!("levels ≤ {lv}, all basis pairs"))
        })?;
        r.run(&format!("Amitsur levels are rings, cofaces and codegeneracies ring maps on {name}"), lv + 1, || {
            for n in 0..=lv {
                check_ring_level(&a, n)?;
            }
            for n in 0..=lv {
                if n < lv {
                    for i in 0..=n + 1 {
                        check_ring_map(&a, &FinMap::coface(n, i)?)?;
                    }
                }
                for j in 0..n {
                    check_ring_map(&a, &FinMap::codegeneracy(n, j)?)?;
                }
            }
            Ok(format!("levels ≤ {lv}"))
        })?;
        r.run(&format!("Moore complex of the Amitsur complex is Ω on {name}"), lv + 1, || {
            a.check_moore(&Omega::new(s, lv)?, lv)?;
            Ok(format!("degrees ≤ {lv}"))
        })?;
        r.run(&format!("ᾱβ = 1, βᾱ = 1, ᾱ a Fin-equivariant ring iso on {name}"), lv + 1, || {
            let c = NussComparison::new(s, lv)?;
            for n in 0..=lv {
                c.check(n, &generator_maps(n, lv))?;
            }
            Ok(format!("levels ≤ {lv}"))
        })?;
    }
    Ok(r.out)
}

fn qomega(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut r = Recorder::new("qomega");
    let lv = p.levels.min(2);
    for (name, s) in &p.algebras {
        r.run(&format!("∐S is a Fin-ring on words ≤ {} ({name})", p.w_max), lv + 1, || {
            let c = crate::nc_geometry::Coproduct::new(s, p.w_max);
            for n in 0..=lv {
                check_coproduct_level(&c, n)?;
                for alpha in generator_maps(n, lv + 1) {
                    check_coproduct_map(&c, &alpha)?;
                }
            }
            Ok(format!("levels ≤ {lv}"))
        })?;
        r.run(&format!("QΩ → ∐S bijective, multiplicative, Fin-equivariant ({name})"), lv + 1, || {
            let iso = QOmegaIso::new(s, p.w_max)?;
            for n in 0..=lv {
                iso.check(n, &generators(n).all())?;
            }
            Ok(format!("levels ≤ {lv}, length-graded pieces ≤ {}", p.w_max))
        })?;
    }
    let top = p.levels.min(3);
    r.run("Q Z<0,1> ≅ ⊕Z with α(e_i) = e_{α(i)}", top + 1, || {
        check_disk_permutation(p.ring, top)?;
        Ok(format!("all set maps between levels ≤ {top}"))
    })?;
    Ok(r.out)
}

fn nchkr(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut r = Recorder::new("nchkr");
    let top = 2;
    for (name, s) in &p.algebras {
        let rep = nchkr_suite(s, top, p.w_max)?;
        let ranks: Vec<usize> = rep.homology.iter().map(|h| h.1).collect();
        let dump = || serde_json::to_string(&rep).unwrap_or_default();
        r.run(&format!("H_n(N∐S, μ) ≅ Ω^n as modules ({name})"), top + 1, || {
            ensure(rep.modules_match, dump)?;
            Ok(format!("ranks {ranks:?}"))
        })?;
        r.run(&format!("l: Ω^n → H_n is an iso ({name})"), top + 1, || {
            ensure(rep.l_is_iso != Some(false), dump)?;
            Ok(match rep.l_is_iso {
                Some(true) => "checked over a field".into(),
                _ => "modules only".into(),
            })
        })?;
        r.run(&format!("l(ω) ⋆ l(η) = l(ωη) ({name})"), rep.shuffle_pairs, || {
            ensure(rep.shuffle_ok, dump)?;
            Ok(format!("{} basis pairs", rep.shuffle_pairs))
        })?;
        r.run(&format!("B l = l d ({name})"), top, || {
            ensure(rep.connes_ok, dump)?;
            Ok(format!("degrees < {top}"))
        })?;
    }
    Ok(r.out)
}

fn qttq(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut r = Recorder::new("qttq");
    let lv = p.levels.min(2);
    let disk = BoundedComplex::disk(p.ring, 0);
    let cases: [(&str, Vec<BoundedComplex>); 2] = [
        ("T Q D(0) ≅ Q T D(0)", vec![disk.clone()]),
        ("Q(D(0) ∐ D(0)) ≅ QD(0) ∐ QD(0)", vec![disk.clone(), disk]),
    ];
    for (name, parts) in cases {
        r.run(&format!("{name} as Fin-rings"), lv + 1, || {
            let iso = QtIso::new(&parts, p.w_max, p.w_max)?;
            for n in 0..=lv {
                iso.check(n, &generators(n).all())?;
            }
            Ok(format!("words ≤ {}, levels ≤ {lv}", p.w_max))
        })?;
    }
    Ok(r.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteParams {
        SuiteParams {
            levels: 2,
            r_max: 3,
            ..SuiteParams::default()
        }
    }

    #[test]
    fn unknown_suite_is_a_parse_error() {
        assert!(matches!(run_suites(&["nope".into()], &small()), Err(Error::Parse(_))));
    }

    #[test]
    fn cheap_suites_pass_and_are_sorted() {
        let names: Vec<String> = ["yangbaxter", "cohotv", "doldkan"].iter().map(|s| s.to_string()).collect();
        let out = run_suites(&names, &small()).unwrap();
        assert!(out.iter().all(|c| c.passed), "{out:?}");
        let mut sorted = out.clone();
        sorted.sort();
        assert_eq!(out, sorted);
        assert_eq!(out[0].suite, "cohotv");
    }

    #[test]
    fn short_words_are_a_truncation_conflict() {
        let p = SuiteParams { w_max: 2, ..small() };
        assert!(matches!(run_suite("nchkr", &p), Err(Error::Truncation(_))));
    }
}
