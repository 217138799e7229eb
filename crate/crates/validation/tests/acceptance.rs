//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! All sampling uses `SEED`; every check is exact integer equality.

use std::process::ExitCode;
use std::time::Instant;

use nilcoh::cochain::{
    defining_system, evaluate_word_in_extension, massey2, pairing_paths, s_map, CochainExpr, ExtensionBasis,
    SignConvention,
};
use nilcoh::cocycle3::{census_basis3, corrected_3cocycle, corrected_3cocycle_printed, gamma3, CentralQuotientGroup};
use nilcoh::derham::{gamma_form, massey_2form, split_wedge, structure_sign, Action, DifferentialForm};
use nilcoh::magnus::{equal_mod_fk, in_lower_central_term, magnus_expand, satisfies_shuffle_relations, upsilon};
use nilcoh::sample::Sampler;
use nilcoh::topology::{johnson_tau, morita_vanishes, torelli_depth, FreeEndomorphism, LongitudeSystem};
use nilcoh::words::{
    commutator, is_standard, standard_commutator, standard_sequences, witt_number, StandardSequence, Word,
};
use num_bigint::BigInt;
use num_traits::Zero;

const SEED: u64 = 0x5eed_2024;

type Outcome = std::result::Result<String, String>;

struct Suite {
    failures: usize,
}

impl Suite {
    fn run(&mut self, id: &str, name: &str, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS [{id}] {name}: {detail} ({ms} ms)"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL [{id}] {name}: {detail} ({ms} ms)");
            }
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_sequences(q: u8, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=q).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

fn eq_at(a: &CochainExpr, b: &CochainExpr, args: &[Word]) -> Result<(), String> {
    let x = a.eval_words(args).map_err(|e| e.to_string())?;
    let y = b.eval_words(args).map_err(|e| e.to_string())?;
    ensure(x == y, || format!("{x} != {y} at {}", show(args)))
}

fn zero_at(a: &CochainExpr, args: &[Word]) -> Result<(), String> {
    let x = a.eval_words(args).map_err(|e| e.to_string())?;
    ensure(x.is_zero(), || format!("value {x} at {}", show(args)))
}

fn show(args: &[Word]) -> String {
    let parts: Vec<String> = args.iter().map(|w| format!("\"{w}\"")).collect();
    format!("({})", parts.join(", "))
}

fn tuple(s: &mut Sampler, n: usize) -> Vec<Word> {
    (0..n).map(|_| s.word()).collect()
}

/// Checks `expr` is unchanged when each argument is multiplied by sampled `F_level` elements.
fn invariant_under(
    expr: &CochainExpr,
    s: &mut Sampler,
    level: usize,
    bases: usize,
    perturb: usize,
) -> Result<usize, String> {
    let n = expr.degree();
    let mut count = 0;
    for _ in 0..bases {
        let base = tuple(s, n);
        let v = expr.eval_words(&base).map_err(|e| e.to_string())?;
        for _ in 0..perturb {
            let moved: Vec<Word> = base
                .iter()
                .map(|w| {
                    let c = s.lower_central_element(level);
                    if s.gen_range(0..2) == 0 {
                        w.mul(&c)
                    } else {
                        c.mul(w)
                    }
                })
                .collect();
            let u = expr.eval_words(&moved).map_err(|e| e.to_string())?;
            ensure(u == v, || format!("{u} != {v} at {} vs {}", show(&moved), show(&base)))?;
            count += 1;
        }
    }
    Ok(count)
}

fn criterion1() -> Outcome {
    let mut pairs = 0;
    for q in 1..=4 {
        for k in 1..=8 {
            let n = witt_number(q, k).map_err(|e| e.to_string())?.value;
            let m = standard_sequences(q, k).map_err(|e| e.to_string())?.len() as u128;
            ensure(n == m, || format!("q={q} k={k}: Möbius {n} vs enumeration {m}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (q,k) pairs, q ≤ 4, k ≤ 8"))
}

fn criterion2() -> Outcome {
    let mut checked = 0;
    for q in 1..=3 {
        for k in 2..=5 {
            let mut s = Sampler::shard(SEED, (q * 10 + k) as u64, q, 10);
            for _ in 0..130 {
                let u = s.word();
                let v = s.word();
                let (mu, mv) = (magnus_expand(&u, k), magnus_expand(&v, k));
                ensure(magnus_expand(&u.mul(&v), k) == mu.mul(&mv), || {
                    format!(
                        "multiplicativity fails at q={q} k={k} {}",
                        show(&[u.clone(), v.clone()])
                    )
                })?;
                ensure(magnus_expand(&u.inverse(), k) == mu.inverse(), || {
                    format!("inverse law fails at q={q} k={k} \"{u}\"")
                })?;
                ensure(mu.mul(&mu.inverse()).is_one(), || {
                    format!("M(u)M(u)^-1 != 1 for \"{u}\"")
                })?;
                ensure(satisfies_shuffle_relations(&mu), || {
                    format!("shuffle relation fails at q={q} k={k} \"{u}\"")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} random words across q ≤ 3, k ≤ 5"))
}

fn criterion3() -> Outcome {
    let mut pairs = 0;
    let mut equal_pairs = 0;
    for q in 1..=3 {
        for k in 2..=4 {
            let mut s = Sampler::shard(SEED, (100 + q * 10 + k) as u64, q, 8);
            for i in 0..40 {
                let u = s.word();
                let v = match i % 4 {
                    0 => s.word(),
                    1 => u.mul(&s.lower_central_element(k)),
                    2 => s.lower_central_element(k).mul(&u),
                    _ => u.mul(&s.lower_central_element(k - 1)),
                };
                let by_magnus = equal_mod_fk(&u, &v, k);
                let by_upsilon = upsilon(&u, k) == upsilon(&v, k);
                ensure(by_magnus == by_upsilon, || {
                    format!(
                        "q={q} k={k}: Magnus {by_magnus}, Υ {by_upsilon} at {}",
                        show(&[u.clone(), v.clone()])
                    )
                })?;
                pairs += 1;
                equal_pairs += usize::from(by_magnus);
            }
            for _ in 0..20 {
                let c = s.commutator(k);
                ensure(upsilon(&c, k).is_identity(), || {
                    format!("Υ_{k}(\"{c}\") is not the identity")
                })?;
            }
        }
    }
    Ok(format!(
        "{pairs} pairs ({equal_pairs} equal in F/F_k), 20 weight-k commutators per (q,k)"
    ))
}

fn criterion4() -> Outcome {
    let q = 2;
    let mut points = 0;
    for k in 2..=4 {
        let mut s = Sampler::shard(SEED, 400 + k as u64, q, 10);
        for seq in standard_sequences(q, k).map_err(|e| e.to_string())? {
            let idx = seq.indices();
            let grid = defining_system(idx, k).map_err(|e| e.to_string())?;
            let m = massey2(idx, k).map_err(|e| e.to_string())?;
            let dm = m.coboundary();
            let conditions: Vec<(CochainExpr, CochainExpr)> = grid
                .conditions()
                .into_iter()
                .map(|(a, b)| grid.condition(a, b, SignConvention::Repaired))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            for _ in 0..500 {
                let pair = tuple(&mut s, 2);
                for (lhs, rhs) in &conditions {
                    eq_at(lhs, rhs, &pair)?;
                }
                zero_at(&dm, &tuple(&mut s, 3))?;
                points += 1;
            }
            points += invariant_under(&m, &mut s, k, 50, 10)?;
        }
    }
    Ok(format!(
        "{points} sampled tuples over every standard I, q = 2, k ∈ {{2,3,4}}; compatibility signs: repaired convention"
    ))
}

fn criterion5() -> Outcome {
    let q = 2;
    let mut words = 0;
    for k in 2..=3 {
        let basis = ExtensionBasis::new(q, k).map_err(|e| e.to_string())?;
        let mut s = Sampler::shard(SEED, 500 + k as u64, q, 10);
        for i in 0..160 {
            let u = s.word();
            let v = match i % 4 {
                0 => s.word(),
                1 => u.mul(&s.lower_central_element(k + 1)),
                2 => u.mul(&s.lower_central_element(k)),
                _ => s.lower_central_element(k + 1).mul(&u),
            };
            let eu = evaluate_word_in_extension(&u, &basis)
                .map_err(|e| e.to_string())?
                .element;
            let ev = evaluate_word_in_extension(&v, &basis)
                .map_err(|e| e.to_string())?
                .element;
            let magnus = equal_mod_fk(&u, &v, k + 1);
            ensure((eu == ev) == magnus, || {
                format!(
                    "k={k}: extension {} vs Magnus {magnus} at {}",
                    eu == ev,
                    show(&[u.clone(), v.clone()])
                )
            })?;
            words += 2;
        }
    }
    for q in 1..=3 {
        for k in 2..=5 {
            let seqs = standard_sequences(q, k).map_err(|e| e.to_string())?;
            for (i, seq) in seqs.iter().enumerate() {
                let row = s_map(&standard_commutator(seq), q, k).map_err(|e| e.to_string())?;
                for (j, v) in row.iter().enumerate() {
                    let expected = BigInt::from(u8::from(i == j));
                    ensure(*v == expected, || {
                        format!("s_map matrix entry ({i},{j}) = {v} at q={q} k={k}")
                    })?;
                }
            }
        }
    }
    Ok(format!(
        "{words} words compared; s_map on standard commutators is the identity for q ≤ 3, k ≤ 5"
    ))
}

fn criterion6() -> Outcome {
    let mut checked = 0;
    for q in 2..=3 {
        for k in 2..=4 {
            let seqs = standard_sequences(q, k).map_err(|e| e.to_string())?;
            let mut s = Sampler::shard(SEED, 600 + (q * 10 + k) as u64, q, 10);
            for _ in 0..40 {
                let w = s.lower_central_element(k);
                for seq in &seqs {
                    let p = pairing_paths(seq, &w, q).map_err(|e| e.to_string())?;
                    ensure(p.agree(), || {
                        format!("c_I = {} but fiber = {} for \"{w}\"", p.magnus, p.extension)
                    })?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} sampled elements of F_k, all standard coordinates"))
}

fn criterion7() -> Outcome {
    let a = Word::generator(1);
    let b = Word::generator(2);
    let c = Word::generator(3);
    let borromean = LongitudeSystem::new(vec![commutator(&b, &c), commutator(&c, &a), commutator(&a, &b)])
        .map_err(|e| e.to_string())?;
    let mu12 = borromean.milnor_mu(&[1, 2], 3).map_err(|e| e.to_string())?;
    let mu21 = borromean.milnor_mu(&[2, 1], 3).map_err(|e| e.to_string())?;
    ensure(mu12 == 1.into() && mu21 == (-1).into(), || {
        format!("μ(12;3) = {mu12}, μ(21;3) = {mu21}")
    })?;
    let mut longitudes = 0;
    for k in 2..=4 {
        let mut s = Sampler::shard(SEED, 700 + k as u64, 3, 10);
        for _ in 0..12 {
            let ws: Vec<Word> = (0..3).map(|_| s.lower_central_element(k)).collect();
            let ls = LongitudeSystem::new(ws).map_err(|e| e.to_string())?;
            for l in 1..=3 {
                for (idx, x) in ls.mu_pairing_crosscheck_all(k, l).map_err(|e| e.to_string())? {
                    ensure(x.agree(), || {
                        format!(
                            "k={k} l={l} I={idx:?}: μ = {}, pairing = {} for \"{}\"",
                            x.mu,
                            x.pairing(),
                            ls.longitude(l).unwrap()
                        )
                    })?;
                }
                longitudes += 1;
            }
        }
    }
    Ok(format!(
        "μ(12;3) = 1, μ(21;3) = −1; {longitudes} sampled longitudes in F_k, k ≤ 4, all indices"
    ))
}

fn criterion8_sweeps() -> Outcome {
    let (q, k) = (2usize, 3usize);
    let mut s = Sampler::shard(SEED, 800, q, 8);
    let mut specs = Vec::new();
    for seq in standard_sequences(q, k).map_err(|e| e.to_string())? {
        for t in 1..=q as u8 {
            specs.push(gamma3(t, seq.indices(), k).map_err(|e| e.to_string())?);
        }
    }
    for seq in standard_sequences(q, k + 1).map_err(|e| e.to_string())? {
        for t in 1..=q as u8 {
            specs.push(corrected_3cocycle(t, seq.indices(), k).map_err(|e| e.to_string())?);
        }
    }
    let mut points = 0;
    for spec in &specs {
        let d = spec.expr.coboundary();
        for _ in 0..500 {
            zero_at(&d, &tuple(&mut s, 4))?;
        }
        points += 500 + invariant_under(&spec.expr, &mut s, k, 50, 10)?;
    }
    Ok(format!(
        "{} cocycles (Γ for |I| = 3, Γ − ∂𝔟 for |I| = 4), {points} checks",
        specs.len()
    ))
}

fn criterion8_census() -> Outcome {
    let mut mismatches = Vec::new();
    let mut slices = 0;
    for q in 1..=3 {
        for k in 2..=5 {
            let census = census_basis3(q, k).map_err(|e| e.to_string())?;
            for slice in &census.slices {
                slices += 1;
                if !slice.counts_agree() {
                    mismatches.push(format!(
                        "(q={q},k={k},ℓ={}) filter {} vs qN_ℓ−N_ℓ₊₁ = {}",
                        slice.ell,
                        slice.filter_count(),
                        slice.rank
                    ));
                }
            }
        }
    }
    let h3 = census_basis3(2, 3).map_err(|e| e.to_string())?.total_rank();
    ensure(h3 == 1, || format!("rank H³ at (2,3) = {h3}"))?;
    if mismatches.is_empty() {
        Ok(format!("{slices} slices; rank H³(2,3) = 1"))
    } else {
        Err(format!(
            "rank H³(2,3) = 1 and rank totals consistent, but {}/{slices} slices disagree with the append-filter count, e.g. {}",
            mismatches.len(),
            mismatches[..mismatches.len().min(3)].join("; ")
        ))
    }
}

fn criterion9() -> Outcome {
    let relator = StandardSequence::new(vec![1, 1, 2]).map_err(|e| e.to_string())?;
    let g = CentralQuotientGroup::new(2, 3, vec![relator]).map_err(|e| e.to_string())?;
    let w = g.relator_word(0).map_err(|e| e.to_string())?;
    let phi = g.phi_cocycle(0).map_err(|e| e.to_string())?;
    let (r, t) = (2u8, 1u8);
    let left = CochainExpr::alpha(r).cup(&phi);
    let right = phi.cup(&CochainExpr::alpha(t));
    let dl = g.cobounding_left(r, 0).map_err(|e| e.to_string())?.coboundary();
    let dr = g.cobounding_right(0, t).map_err(|e| e.to_string())?.coboundary();
    let mut s = Sampler::shard(SEED, 900, 2, 10);
    for _ in 0..500 {
        let p = tuple(&mut s, 2);
        let v = phi.eval_words(&p).map_err(|e| e.to_string())?;
        let moved = [
            p[0].mul(&w.pow(s.gen_range(1..3) as i64))
                .mul(&s.lower_central_element(4)),
            w.inverse().mul(&p[1]).mul(&s.lower_central_element(4)),
        ];
        let u = phi.eval_words(&moved).map_err(|e| e.to_string())?;
        ensure(u == v, || format!("φ changes from {v} to {u} at {}", show(&moved)))?;
        let triple = tuple(&mut s, 3);
        eq_at(&left, &dl, &triple)?;
        eq_at(&right, &dr, &triple)?;
    }
    Ok("φ representative-independent; α_r ⌣ φ = ∂f and φ ⌣ α_s = ∂g at 500 points each (r = 2, s = 1)".into())
}

fn appendix_symbolic() -> Outcome {
    let mut identities = 0;
    for len in 1..=4 {
        for idx in all_sequences(3, len) {
            let g = gamma_form(&idx, Action::Right).map_err(|e| e.to_string())?;
            for h in 1..=3 {
                ensure(g.pullback(h, Action::Right) == g, || {
                    format!("γ_{idx:?} not invariant under x_{h}")
                })?;
                identities += 1;
            }
            if len >= 2 {
                let rhs = split_wedge(&idx, Action::Right).map_err(|e| e.to_string())?;
                let sign = structure_sign(Action::Right);
                let expected = if sign > 0 { rhs.clone() } else { rhs.neg() };
                ensure(g.exterior_d() == expected, || format!("dγ_{idx:?} ≠ Σ γ∧γ"))?;
                let m = massey_2form(&idx, Action::Right).map_err(|e| e.to_string())?;
                ensure(m.exterior_d().is_zero(), || {
                    format!("Massey form for {idx:?} not closed")
                })?;
                for h in 1..=3 {
                    ensure(m.pullback(h, Action::Right) == m, || {
                        format!("Massey form for {idx:?} not invariant")
                    })?;
                }
                identities += 5;
            }
        }
    }
    Ok(format!(
        "{identities} symbolic identities (invariance, structure equation, closed invariant 2-forms), |J| ≤ 4, q ≤ 3"
    ))
}

fn parse(s: &str) -> Result<DifferentialForm, String> {
    s.parse::<DifferentialForm>().map_err(|e| e.to_string())
}

fn example_i() -> Outcome {
    let printed_gamma = parse("dX_ab − β_a dX_b")?;
    let printed_massey = parse("dX_a ∧ dX_bc + dX_ab ∧ dX_c − β_a dX_b dX_c − β_b dX_a dX_c")?;
    let gamma = gamma_form(&[1, 2], Action::Left).map_err(|e| e.to_string())?;
    let massey = massey_2form(&[1, 2, 3], Action::Left).map_err(|e| e.to_string())?;
    ensure(gamma.to_string() == printed_gamma.to_string(), || {
        format!("γ_ab = {gamma}")
    })?;
    ensure(massey.to_string() == printed_massey.to_string(), || {
        format!("⟨a,b,c⟩ = {massey}")
    })?;
    let right = gamma_form(&[1, 2], Action::Right).map_err(|e| e.to_string())?;
    Ok(format!(
        "γ_ab = {gamma}; ⟨a,b,c⟩ = {massey} (left-invariant coframe; right-invariant γ_ab = {right})"
    ))
}

fn example_ii() -> Outcome {
    let printed_gamma = parse("dX_abc − β_c dX_ab − β_b β_c dX_a + β_bc dX_a")?;
    let right = gamma_form(&[1, 2, 3], Action::Right).map_err(|e| e.to_string())?;
    let left = gamma_form(&[1, 2, 3], Action::Left).map_err(|e| e.to_string())?;
    // The printed 4-fold product, term by term: (γ_abc) ∧ dX_d + γ_ab ∧ γ_cd + β_a · (γ_bcd)
    let gamma_bcd = parse("dX_bcd − β_d dX_bc − β_c β_d dX_b + β_cd dX_b")?;
    let third = gamma_bcd.mul_beta(&nilcoh::derham::BetaPolynomial::var(&[1]));
    let printed_massey_grade = third.grade();
    let massey = massey_2form(&[1, 2, 3, 4], Action::Right).map_err(|e| e.to_string())?;
    let p = printed_gamma.to_string();
    let reproduced = right.to_string() == p || left.to_string() == p;
    if reproduced && printed_massey_grade == 2 {
        return Ok(format!("γ_abc = {p}"));
    }
    Err(format!(
        "printed γ_abc = {p}; right-invariant γ_abc = {right}; left-invariant γ_abc = {left}; \
         the printed ⟨a,b,c,d⟩ has a grade-{printed_massey_grade} third summand, computed form = {massey}"
    ))
}

fn criterion11() -> Outcome {
    let x = |i: u8| Word::generator(i);
    let inner = |c: Word| FreeEndomorphism::new(vec![x(1).mul(&c), x(2)]).unwrap();
    let f1 = inner(commutator(&x(1), &x(2)));
    let f2 = inner(commutator(&x(1), &commutator(&x(1), &x(2))));
    let id = FreeEndomorphism::identity(2);
    let m = |f: &FreeEndomorphism, k| morita_vanishes(f, k).map_err(|e| e.to_string());
    ensure(m(&id, 2)? && !m(&f1, 2)? && m(&f2, 2)?, || {
        "worked Morita examples disagree".into()
    })?;
    let mut s = Sampler::shard(SEED, 1100, 2, 6);
    let mut sampled = 0;
    let mut both = [0usize; 2];
    for _ in 0..120 {
        let images: Vec<Word> = (1..=2u8)
            .map(|i| {
                let level = s.gen_range(2..6);
                let c = if s.gen_range(0..4) == 0 {
                    Word::identity()
                } else {
                    s.lower_central_element(level)
                };
                if s.gen_range(0..2) == 0 {
                    x(i).mul(&c)
                } else {
                    c.mul(&x(i))
                }
            })
            .collect();
        let f = FreeEndomorphism::new(images).map_err(|e| e.to_string())?;
        for k in 1..=4 {
            if torelli_depth(&f, k) < k {
                continue;
            }
            let tau_zero = johnson_tau(&f, k).map_err(|e| e.to_string())?.is_zero();
            let deeper = torelli_depth(&f, k + 1) > k;
            ensure(tau_zero == deeper, || {
                format!("k={k}: τ_k = 0 is {tau_zero}, depth ≥ k+1 is {deeper} for {f}")
            })?;
            both[usize::from(deeper)] += 1;
            if k >= 2 {
                let criterion = torelli_depth(&f, 2 * k - 1) >= 2 * k - 1;
                ensure(m(&f, k)? == criterion, || format!("Morita criterion mismatch for {f}"))?;
            }
        }
        sampled += 1;
    }
    Ok(format!(
        "{sampled} sampled endomorphisms ({} with τ_k ≠ 0, {} with τ_k = 0); three worked Morita examples",
        both[0], both[1]
    ))
}

fn info_lines() {
    let grid = defining_system(&[1, 2, 2, 2], 4).unwrap();
    let mut s = Sampler::shard(SEED, 1200, 2, 10);
    let mut verbatim_fail = Vec::new();
    for (a, b) in grid.conditions() {
        let (lhs, rhs) = grid.condition(a, b, SignConvention::Verbatim).unwrap();
        if (0..50).any(|_| {
            let p = tuple(&mut s, 2);
            lhs.eval_words(&p).unwrap() != rhs.eval_words(&p).unwrap()
        }) {
            verbatim_fail.push(format!("({a},{b})"));
        }
    }
    println!(
        "INFO compatibility sign read verbatim fails at {} for I = 1222",
        verbatim_fail.join(" ")
    );
    let c = corrected_3cocycle(1, &[1, 1, 2, 2], 3).unwrap();
    let printed = corrected_3cocycle_printed(1, &[1, 1, 2, 2], 3).unwrap();
    let differs = (0..200).filter(|_| {
        let t = tuple(&mut s, 3);
        c.expr.eval_words(&t).unwrap() != printed.eval_words(&t).unwrap()
    });
    println!(
        "INFO printed two-line display of Γ − ∂𝔟 differs from the evaluator at {}/200 sampled triples",
        differs.count()
    );
    let mut crit = 0;
    let mut total = 0;
    for q in 1..=3u8 {
        for len in 1..=6 {
            for idx in all_sequences(q, len).into_iter().filter(|i| is_standard(i)) {
                for t in 1..=q {
                    let mut longer = idx.clone();
                    longer.push(t);
                    total += 1;
                    crit += usize::from(is_standard(&longer) == (t > idx[0]));
                }
            }
        }
    }
    println!("INFO append criterion I·s standard ⇔ s > i_1 holds in {crit}/{total} cases (ℓ ≤ 6, q ≤ 3)");
    let w = standard_commutator(&StandardSequence::new(vec![1, 1, 2]).unwrap());
    println!("INFO W_112 = {w} lies in F_3: {}", in_lower_central_term(&w, 3));
}

fn main() -> ExitCode {
    let mut suite = Suite { failures: 0 };
    suite.run("1", "Witt/Lyndon agreement", criterion1);
    suite.run("2", "Magnus multiplicativity, inverse law, shuffle image", criterion2);
    suite.run("3", "Υ_k and Magnus decide F/F_k equality identically", criterion3);
    suite.run(
        "4",
        "defining-system compatibility, ∂ massey2 = 0, well-definedness",
        criterion4,
    );
    suite.run("5", "extension oracle ≅ F/F_{k+1}; s_map unimodular", criterion5);
    suite.run("6", "pairing = extension fiber", criterion6);
    suite.run("7", "Milnor μ cross-check and Borromean values", criterion7);
    suite.run("8a", "3-cocycle sweeps (cocycle + well-definedness)", criterion8_sweeps);
    suite.run("8b", "census counts vs append filter; rank H³", criterion8_census);
    suite.run("9", "quotient φ and cobounding identities", criterion9);
    suite.run(
        "10a",
        "invariance, structure equation, closed Massey 2-forms",
        appendix_symbolic,
    );
    suite.run("10b", "worked example: γ_ab and ⟨a,b,c⟩", example_i);
    suite.run("10c", "worked example: γ_abc and ⟨a,b,c,d⟩", example_ii);
    suite.run("11", "Johnson τ_k vanishing ⇔ depth; Morita criterion", criterion11);
    info_lines();
    println!("{} criteria failed", suite.failures);
    if suite.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
