//! The invariants run by `verify` and re-executed by `replay`.
//!
//! Each check splits into a sampler, which draws inputs from a seeded
//! [`Sampler`], and an evaluator, which maps one input point to the two sides
//! of the identity as strings. Recorded points therefore replay without the
//! sampler.

use std::collections::BTreeMap;

use nilcoh::cochain::{
    defining_system, evaluate_word_in_extension, massey2, pairing_paths, s_map, CochainExpr, ExtensionBasis,
    SignConvention,
};
use nilcoh::cocycle3::{census_basis3, corrected_3cocycle, gamma3, CentralQuotientGroup};
use nilcoh::derham::{gamma_form, massey_2form, massey_bridge, split_wedge, structure_sign, Action};
use nilcoh::magnus::first_shuffle_violation;
use nilcoh::sample::Sampler;
use nilcoh::topology::{johnson_tau, torelli_depth, FreeEndomorphism, JohnsonValue, LongitudeSystem};
use nilcoh::words::{format_index, parse_index};
use nilcoh::{
    c, equal_mod_fk, magnus_expand, standard_commutator, standard_sequences, upsilon, StandardSequence, Word,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Parameters shared by every check in a run.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub q: usize,
    pub k: usize,
    /// Longest index used by the differential-form checks.
    pub max_len: usize,
}

/// One input point: named parameters plus group elements in word syntax.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub words: Vec<String>,
}

impl Inputs {
    fn new() -> Self {
        Inputs::default()
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn index(self, index: &[u8]) -> Self {
        self.param("index", format_index(index))
    }

    fn words<'a>(mut self, ws: impl IntoIterator<Item = &'a Word>) -> Self {
        self.words.extend(ws.into_iter().map(|w| w.to_string()));
        self
    }

    fn get(&self, key: &str) -> Result<&str, String> {
        self.params
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| format!("missing parameter {key:?}"))
    }

    fn get_index(&self) -> Result<Vec<u8>, String> {
        parse_index(self.get("index")?).map_err(|e| e.to_string())
    }

    fn get_num<T: std::str::FromStr>(&self, key: &str) -> Result<T, String> {
        let raw = self.get(key)?;
        raw.parse()
            .map_err(|_| format!("parameter {key:?} is not a number: {raw:?}"))
    }

    fn parse_words(&self, n: usize) -> Result<Vec<Word>, String> {
        if self.words.len() != n {
            return Err(format!("expected {n} words, found {}", self.words.len()));
        }
        self.words
            .iter()
            .map(|s| s.parse::<Word>().map_err(|e| e.to_string()))
            .collect()
    }
}

pub type Sides = (String, String);
type Generate = fn(&Ctx, &mut Sampler, usize) -> Result<Vec<Inputs>, String>;
type Evaluate = fn(&Ctx, &Inputs) -> Result<Sides, String>;

pub struct Check {
    pub name: &'static str,
    pub module: &'static str,
    /// Smallest level at which the check applies.
    pub min_k: usize,
    pub generate: Generate,
    pub evaluate: Evaluate,
}

pub const SUITES: [&str; 5] = ["magnus", "cochain", "cocycle3", "topology", "derham"];

pub fn registry() -> &'static [Check] {
    &CHECKS
}

pub fn find(name: &str) -> Option<(usize, &'static Check)> {
    CHECKS.iter().enumerate().find(|(_, c)| c.name == name)
}

static CHECKS: [Check; 26] = [
    Check {
        name: "magnus_multiplicative",
        module: "magnus",
        min_k: 1,
        generate: gen_pairs,
        evaluate: eval_multiplicative,
    },
    Check {
        name: "magnus_inverse",
        module: "magnus",
        min_k: 1,
        generate: gen_singles,
        evaluate: eval_inverse,
    },
    Check {
        name: "coefficient_splitting",
        module: "magnus",
        min_k: 2,
        generate: gen_splitting,
        evaluate: eval_splitting,
    },
    Check {
        name: "upsilon_consistency",
        module: "magnus",
        min_k: 2,
        generate: gen_nearby_pairs,
        evaluate: eval_upsilon,
    },
    Check {
        name: "shuffle_image",
        module: "magnus",
        min_k: 1,
        generate: gen_singles,
        evaluate: eval_shuffle,
    },
    Check {
        name: "coboundary_squared",
        module: "cochain",
        min_k: 2,
        generate: gen_short_index_triples,
        evaluate: eval_dd,
    },
    Check {
        name: "defining_system",
        module: "cochain",
        min_k: 2,
        generate: gen_defining,
        evaluate: eval_defining,
    },
    Check {
        name: "massey2_cocycle",
        module: "cochain",
        min_k: 2,
        generate: gen_standard_triples,
        evaluate: eval_massey2_cocycle,
    },
    Check {
        name: "massey2_invariance",
        module: "cochain",
        min_k: 2,
        generate: gen_massey2_moves,
        evaluate: eval_massey2_invariance,
    },
    Check {
        name: "extension_group_law",
        module: "cochain",
        min_k: 2,
        generate: gen_pairs,
        evaluate: eval_group_law,
    },
    Check {
        name: "pairing_paths",
        module: "cochain",
        min_k: 2,
        generate: gen_pairing,
        evaluate: eval_pairing,
    },
    Check {
        name: "s_map_basis",
        module: "cochain",
        min_k: 2,
        generate: gen_s_map,
        evaluate: eval_s_map,
    },
    Check {
        name: "gamma3_cocycle",
        module: "cocycle3",
        min_k: 3,
        generate: gen_gamma_points,
        evaluate: eval_gamma_cocycle,
    },
    Check {
        name: "gamma3_invariance",
        module: "cocycle3",
        min_k: 3,
        generate: gen_gamma_moves,
        evaluate: eval_gamma_invariance,
    },
    Check {
        name: "corrected_cocycle",
        module: "cocycle3",
        min_k: 3,
        generate: gen_corrected_points,
        evaluate: eval_corrected_cocycle,
    },
    Check {
        name: "corrected_invariance",
        module: "cocycle3",
        min_k: 3,
        generate: gen_corrected_moves,
        evaluate: eval_corrected_invariance,
    },
    Check {
        name: "census_slices",
        module: "cocycle3",
        min_k: 2,
        generate: gen_census,
        evaluate: eval_census,
    },
    Check {
        name: "quotient_cobounding",
        module: "cocycle3",
        min_k: 3,
        generate: gen_cobounding,
        evaluate: eval_cobounding,
    },
    Check {
        name: "mu_crosscheck",
        module: "topology",
        min_k: 2,
        generate: gen_mu,
        evaluate: eval_mu,
    },
    Check {
        name: "johnson_additivity",
        module: "topology",
        min_k: 2,
        generate: gen_johnson_pairs,
        evaluate: eval_johnson_additivity,
    },
    Check {
        name: "johnson_kernel",
        module: "topology",
        min_k: 1,
        generate: gen_johnson_singles,
        evaluate: eval_johnson_kernel,
    },
    Check {
        name: "gamma_invariance",
        module: "derham",
        min_k: 1,
        generate: gen_form_actions,
        evaluate: eval_gamma_invariance_form,
    },
    Check {
        name: "structure_equation",
        module: "derham",
        min_k: 1,
        generate: gen_form_indices,
        evaluate: eval_structure,
    },
    Check {
        name: "massey_form_closed",
        module: "derham",
        min_k: 1,
        generate: gen_form_indices,
        evaluate: eval_massey_closed,
    },
    Check {
        name: "massey_form_invariance",
        module: "derham",
        min_k: 1,
        generate: gen_form_actions_long,
        evaluate: eval_massey_form_invariance,
    },
    Check {
        name: "massey_bridge",
        module: "derham",
        min_k: 1,
        generate: gen_bridge,
        evaluate: eval_bridge,
    },
];

fn err(e: nilcoh::Error) -> String {
    e.to_string()
}

fn show_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn standard(ctx: &Ctx, len: usize) -> Result<Vec<StandardSequence>, String> {
    standard_sequences(ctx.q, len).map_err(err)
}

fn pick<'a, T>(s: &mut Sampler, items: &'a [T]) -> Option<&'a T> {
    if items.is_empty() {
        None
    } else {
        Some(&items[s.gen_range(0..items.len())])
    }
}

fn random_index(s: &mut Sampler, q: usize, len: usize) -> Vec<u8> {
    (0..len).map(|_| s.gen_range(0..q) as u8 + 1).collect()
}

/// Multiplies `w` on a random side by a sampled element of `F_level`.
fn perturb(s: &mut Sampler, w: &Word, level: usize) -> Word {
    let c = s.lower_central_element(level);
    if s.gen_range(0..2) == 0 {
        w.mul(&c)
    } else {
        c.mul(w)
    }
}

fn eval_expr(expr: &CochainExpr, words: &[Word]) -> Result<String, String> {
    expr.eval_words(words).map(|v| v.to_string()).map_err(err)
}

fn gen_singles(_: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    Ok((0..n).map(|_| Inputs::new().words(&[s.word()])).collect())
}

fn gen_pairs(_: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    Ok((0..n).map(|_| Inputs::new().words(&s.words(2))).collect())
}

fn eval_multiplicative(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let w = p.parse_words(2)?;
    let lhs = magnus_expand(&w[0].mul(&w[1]), ctx.k);
    let rhs = magnus_expand(&w[0], ctx.k).mul(&magnus_expand(&w[1], ctx.k));
    Ok((lhs.to_string(), rhs.to_string()))
}

fn eval_inverse(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let w = p.parse_words(1)?;
    let prod = magnus_expand(&w[0], ctx.k).mul(&magnus_expand(&w[0].inverse(), ctx.k));
    Ok((prod.to_string(), "1".into()))
}

fn gen_splitting(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    Ok((0..n)
        .map(|_| {
            let len = s.gen_range(1..ctx.k);
            let idx = random_index(s, ctx.q, len);
            Inputs::new().index(&idx).words(&s.words(2))
        })
        .collect())
}

fn eval_splitting(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let idx = p.get_index()?;
    let w = p.parse_words(2)?;
    let lhs = c(&idx, &w[0].mul(&w[1]), ctx.k).map_err(err)?;
    let (mu, mv) = (magnus_expand(&w[0], ctx.k), magnus_expand(&w[1], ctx.k));
    let rhs: BigInt = (0..=idx.len()).map(|r| mu.coeff(&idx[..r]) * mv.coeff(&idx[r..])).sum();
    Ok((lhs.to_string(), rhs.to_string()))
}

fn gen_nearby_pairs(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    Ok((0..n)
        .map(|i| {
            let u = s.word();
            let v = match i % 3 {
                0 => s.word(),
                1 => perturb(s, &u, ctx.k),
                _ => perturb(s, &u, ctx.k - 1),
            };
            Inputs::new().words(&[u, v])
        })
        .collect())
}

fn eval_upsilon(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let w = p.parse_words(2)?;
    let magnus = equal_mod_fk(&w[0], &w[1], ctx.k);
    let matrix = upsilon(&w[0], ctx.k) == upsilon(&w[1], ctx.k);
    Ok((format!("equal={magnus}"), format!("equal={matrix}")))
}

fn eval_shuffle(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let w = p.parse_words(1)?;
    let lhs = match first_shuffle_violation(&magnus_expand(&w[0], ctx.k)) {
        Some((i, j)) => format!("violated at ({}, {})", format_index(&i), format_index(&j)),
        None => "satisfied".into(),
    };
    Ok((lhs, "satisfied".into()))
}

fn gen_short_index_triples(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    Ok((0..n)
        .map(|_| {
            let len = s.gen_range(1..ctx.k);
            let idx = random_index(s, ctx.q, len);
            Inputs::new().index(&idx).words(&s.words(3))
        })
        .collect())
}

fn eval_dd(_: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let idx = p.get_index()?;
    let w = p.parse_words(3)?;
    let dd = CochainExpr::c(&idx).coboundary().coboundary();
    Ok((eval_expr(&dd, &w)?, "0".into()))
}

fn gen_standard_tuples(ctx: &Ctx, s: &mut Sampler, n: usize, len: usize, arity: usize) -> Result<Vec<Inputs>, String> {
    let seqs = standard(ctx, len)?;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let Some(seq) = pick(s, &seqs) else { break };
        out.push(Inputs::new().index(seq.indices()).words(&s.words(arity)));
    }
    Ok(out)
}

fn gen_defining(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    let mut out = gen_standard_tuples(ctx, s, n, ctx.k, 2)?;
    let conditions = defining_system(&vec![1; ctx.k], ctx.k).map_err(err)?.conditions();
    for p in &mut out {
        let (a, b) = conditions[s.gen_range(0..conditions.len())];
        p.params.insert("s".into(), a.to_string());
        p.params.insert("t".into(), b.to_string());
    }
    Ok(out)
}

fn eval_defining(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let idx = p.get_index()?;
    let (a, b): (usize, usize) = (p.get_num("s")?, p.get_num("t")?);
    let w = p.parse_words(2)?;
    let grid = defining_system(&idx, ctx.k).map_err(err)?;
    if !grid.conditions().contains(&(a, b)) {
        return Err(format!("({a}, {b}) is not a defining-system condition"));
    }
    let (lhs, rhs) = grid.condition(a, b, SignConvention::Repaired).map_err(err)?;
    Ok((eval_expr(&lhs, &w)?, eval_expr(&rhs, &w)?))
}

fn gen_standard_triples(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    gen_standard_tuples(ctx, s, n, ctx.k, 3)
}

fn eval_massey2_cocycle(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let idx = p.get_index()?;
    let w = p.parse_words(3)?;
    let dm = massey2(&idx, ctx.k).map_err(err)?.coboundary();
    Ok((eval_expr(&dm, &w)?, "0".into()))
}

/// Points `(x, y, x', y')` with `x' ≡ x` and `y' ≡ y` modulo `F_k`.
fn gen_moves(ctx: &Ctx, s: &mut Sampler, n: usize, len: usize, arity: usize) -> Result<Vec<Inputs>, String> {
    let mut out = gen_standard_tuples(ctx, s, n, len, arity)?;
    for p in &mut out {
        let base = p.parse_words(arity)?;
        let moved: Vec<Word> = base.iter().map(|w| perturb(s, w, ctx.k)).collect();
        p.words.extend(moved.iter().map(ToString::to_string));
    }
    Ok(out)
}

fn gen_massey2_moves(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    gen_moves(ctx, s, n, ctx.k, 2)
}

fn invariance_sides(expr: &CochainExpr, p: &Inputs) -> Result<Sides, String> {
    let n = expr.degree();
    let w = p.parse_words(2 * n)?;
    Ok((eval_expr(expr, &w[..n])?, eval_expr(expr, &w[n..])?))
}

fn eval_massey2_invariance(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    invariance_sides(&massey2(&p.get_index()?, ctx.k).map_err(err)?, p)
}

fn eval_group_law(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let w = p.parse_words(2)?;
    let basis = ExtensionBasis::new(ctx.q, ctx.k).map_err(err)?;
    let at = |w: &Word| evaluate_word_in_extension(w, &basis).map(|e| e.element).map_err(err);
    let lhs = at(&w[0].mul(&w[1]))?;
    let rhs = at(&w[0])?.multiply(&at(&w[1])?).map_err(err)?;
    Ok((lhs.to_string(), rhs.to_string()))
}

fn gen_pairing(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    let seqs = standard(ctx, ctx.k)?;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let Some(seq) = pick(s, &seqs) else { break };
        let w = s.lower_central_element(ctx.k);
        out.push(Inputs::new().index(seq.indices()).words(&[w]));
    }
    Ok(out)
}

fn standard_param(p: &Inputs) -> Result<StandardSequence, String> {
    StandardSequence::new(p.get_index()?).map_err(err)
}

fn eval_pairing(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let seq = standard_param(p)?;
    if seq.len() != ctx.k {
        return Err(format!("index length {} differs from k = {}", seq.len(), ctx.k));
    }
    let w = p.parse_words(1)?;
    let paths = pairing_paths(&seq, &w[0], ctx.q).map_err(err)?;
    Ok((paths.magnus.to_string(), paths.extension.to_string()))
}

fn gen_s_map(ctx: &Ctx, _: &mut Sampler, _: usize) -> Result<Vec<Inputs>, String> {
    Ok(standard(ctx, ctx.k)?
        .iter()
        .map(|seq| Inputs::new().index(seq.indices()).words(&[standard_commutator(seq)]))
        .collect())
}

fn eval_s_map(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let seq = standard_param(p)?;
    let w = p.parse_words(1)?;
    let row = s_map(&w[0], ctx.q, ctx.k).map_err(err)?;
    let pos = standard(ctx, ctx.k)?.iter().position(|t| *t == seq).ok_or_else(|| {
        format!(
            "{} is not a standard sequence of length {}",
            format_index(seq.indices()),
            ctx.k
        )
    })?;
    let unit: Vec<BigInt> = (0..row.len()).map(|i| BigInt::from(u8::from(i == pos))).collect();
    Ok((show_vec(&row), show_vec(&unit)))
}

fn with_letter(ctx: &Ctx, s: &mut Sampler, mut points: Vec<Inputs>) -> Vec<Inputs> {
    for p in &mut points {
        p.params.insert("s".into(), (s.gen_range(0..ctx.q) + 1).to_string());
    }
    points
}

fn gen_gamma_points(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    let points = gen_standard_tuples(ctx, s, n, ctx.k, 4)?;
    Ok(with_letter(ctx, s, points))
}

fn gen_gamma_moves(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    let points = gen_moves(ctx, s, n, ctx.k, 3)?;
    Ok(with_letter(ctx, s, points))
}

fn gen_corrected_points(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    let points = gen_standard_tuples(ctx, s, n, ctx.k + 1, 4)?;
    Ok(with_letter(ctx, s, points))
}

fn gen_corrected_moves(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    let points = gen_moves(ctx, s, n, ctx.k + 1, 3)?;
    Ok(with_letter(ctx, s, points))
}

fn gamma_expr(ctx: &Ctx, p: &Inputs) -> Result<CochainExpr, String> {
    Ok(gamma3(p.get_num("s")?, &p.get_index()?, ctx.k).map_err(err)?.expr)
}

fn corrected_expr(ctx: &Ctx, p: &Inputs) -> Result<CochainExpr, String> {
    Ok(corrected_3cocycle(p.get_num("s")?, &p.get_index()?, ctx.k)
        .map_err(err)?
        .expr)
}

fn cocycle_sides(expr: &CochainExpr, p: &Inputs) -> Result<Sides, String> {
    let w = p.parse_words(4)?;
    Ok((eval_expr(&expr.coboundary(), &w)?, "0".into()))
}

fn eval_gamma_cocycle(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    cocycle_sides(&gamma_expr(ctx, p)?, p)
}

fn eval_gamma_invariance(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    invariance_sides(&gamma_expr(ctx, p)?, p)
}

fn eval_corrected_cocycle(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    cocycle_sides(&corrected_expr(ctx, p)?, p)
}

fn eval_corrected_invariance(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    invariance_sides(&corrected_expr(ctx, p)?, p)
}

fn gen_census(ctx: &Ctx, _: &mut Sampler, _: usize) -> Result<Vec<Inputs>, String> {
    let census = census_basis3(ctx.q, ctx.k).map_err(err)?;
    Ok(census
        .slices
        .iter()
        .map(|sl| Inputs::new().param("ell", sl.ell))
        .collect())
}

/// Append-filter count `#{(I, s) : I·s not standard}` against `q·N_ℓ − N_{ℓ+1}`.
fn eval_census(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let ell: usize = p.get_num("ell")?;
    let census = census_basis3(ctx.q, ctx.k).map_err(err)?;
    let slice = census
        .slices
        .iter()
        .find(|sl| sl.ell == ell)
        .ok_or_else(|| format!("no census slice at ell = {ell}"))?;
    Ok((slice.filter_count().to_string(), slice.rank.to_string()))
}

/// Quotient by the first standard commutator of weight `k`.
fn quotient(ctx: &Ctx) -> Result<CentralQuotientGroup, String> {
    let first = standard(ctx, ctx.k)?
        .into_iter()
        .next()
        .ok_or_else(|| "no standard sequences".to_string())?;
    CentralQuotientGroup::new(ctx.q, ctx.k, vec![first]).map_err(err)
}

fn gen_cobounding(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    Ok((0..n)
        .map(|i| {
            let side = if i % 2 == 0 { "left" } else { "right" };
            Inputs::new()
                .param("side", side)
                .param("letter", s.gen_range(0..ctx.q) + 1)
                .words(&s.words(3))
        })
        .collect())
}

/// `α_r ⌣ φ = ∂f` (left) or `φ ⌣ α_s = ∂g` (right) on the quotient.
fn eval_cobounding(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let g = quotient(ctx)?;
    let letter: u8 = p.get_num("letter")?;
    if letter == 0 || letter as usize > ctx.q {
        return Err(format!("letter {letter} outside 1..={}", ctx.q));
    }
    let w = p.parse_words(3)?;
    let phi = g.phi_cocycle(0).map_err(err)?;
    let (cup, bound) = match p.get("side")? {
        "left" => (
            CochainExpr::alpha(letter).cup(&phi),
            g.cobounding_left(letter, 0).map_err(err)?,
        ),
        "right" => (
            phi.cup(&CochainExpr::alpha(letter)),
            g.cobounding_right(0, letter).map_err(err)?,
        ),
        other => return Err(format!("unknown side {other:?}")),
    };
    Ok((eval_expr(&cup, &w)?, eval_expr(&bound.coboundary(), &w)?))
}

fn gen_mu(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    Ok((0..n)
        .map(|_| {
            let longitudes: Vec<Word> = (0..ctx.q).map(|_| s.lower_central_element(ctx.k)).collect();
            let idx = random_index(s, ctx.q, ctx.k);
            Inputs::new()
                .index(&idx)
                .param("component", s.gen_range(0..ctx.q) + 1)
                .words(&longitudes)
        })
        .collect())
}

fn eval_mu(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let idx = p.get_index()?;
    let l: usize = p.get_num("component")?;
    let system = LongitudeSystem::new(p.parse_words(ctx.q)?).map_err(err)?;
    let x = system.mu_pairing_crosscheck(&idx, l).map_err(err)?;
    Ok((x.mu.to_string(), x.pairing().to_string()))
}

/// Endomorphism `x_i ↦ x_i·c_i` (or `c_i·x_i`) with each `c_i` drawn from `F_k`.
fn torelli_sample(ctx: &Ctx, s: &mut Sampler) -> Vec<Word> {
    (1..=ctx.q as u8)
        .map(|i| {
            let x = Word::generator(i);
            if s.gen_range(0..4) == 0 {
                return x;
            }
            let level = ctx.k + s.gen_range(0..2);
            perturb(s, &x, level)
        })
        .collect()
}

fn gen_johnson_pairs(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    Ok((0..n)
        .map(|_| {
            let mut images = torelli_sample(ctx, s);
            images.extend(torelli_sample(ctx, s));
            Inputs::new().words(&images)
        })
        .collect())
}

fn gen_johnson_singles(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    Ok((0..n).map(|_| Inputs::new().words(&torelli_sample(ctx, s))).collect())
}

pub fn show_johnson(v: &JohnsonValue) -> String {
    let parts: Vec<String> = v
        .per_generator
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let terms: Vec<String> = m.iter().map(|(idx, c)| format!("{}={c}", format_index(idx))).collect();
            format!("x{}: {{{}}}", i + 1, terms.join(", "))
        })
        .collect();
    parts.join("; ")
}

fn eval_johnson_additivity(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let w = p.parse_words(2 * ctx.q)?;
    let f = FreeEndomorphism::new(w[..ctx.q].to_vec()).map_err(err)?;
    let g = FreeEndomorphism::new(w[ctx.q..].to_vec()).map_err(err)?;
    let fg = f.compose(&g).map_err(err)?;
    let tau = |h: &FreeEndomorphism| johnson_tau(h, ctx.k).map_err(err);
    let sum = tau(&f)?.add(&tau(&g)?).map_err(err)?;
    Ok((show_johnson(&tau(&fg)?), show_johnson(&sum)))
}

/// `τ_k(f) = 0` exactly when the Torelli depth of `f` exceeds `k`.
fn eval_johnson_kernel(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let f = FreeEndomorphism::new(p.parse_words(ctx.q)?).map_err(err)?;
    let zero = johnson_tau(&f, ctx.k).map_err(err)?.is_zero();
    let deeper = torelli_depth(&f, ctx.k + 1) > ctx.k;
    Ok((format!("tau_zero={zero}"), format!("tau_zero={deeper}")))
}

fn all_indices(q: usize, lens: std::ops::RangeInclusive<usize>) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for len in lens {
        let mut idx = vec![1u8; len];
        loop {
            out.push(idx.clone());
            let Some(pos) = (0..len).rev().find(|&p| (idx[p] as usize) < q) else {
                break;
            };
            idx[pos] += 1;
            for v in &mut idx[pos + 1..] {
                *v = 1;
            }
        }
    }
    out
}

fn gen_form_actions(ctx: &Ctx, _: &mut Sampler, _: usize) -> Result<Vec<Inputs>, String> {
    Ok(form_actions(ctx, 1))
}

fn gen_form_actions_long(ctx: &Ctx, _: &mut Sampler, _: usize) -> Result<Vec<Inputs>, String> {
    Ok(form_actions(ctx, 2))
}

fn form_actions(ctx: &Ctx, min_len: usize) -> Vec<Inputs> {
    let mut out = Vec::new();
    for idx in all_indices(ctx.q, min_len..=ctx.max_len) {
        for h in 1..=ctx.q {
            out.push(Inputs::new().index(&idx).param("h", h));
        }
    }
    out
}

fn gen_form_indices(ctx: &Ctx, _: &mut Sampler, _: usize) -> Result<Vec<Inputs>, String> {
    Ok(all_indices(ctx.q, 2..=ctx.max_len)
        .iter()
        .map(|idx| Inputs::new().index(idx))
        .collect())
}

fn letter_param(ctx: &Ctx, p: &Inputs) -> Result<u8, String> {
    let h: u8 = p.get_num("h")?;
    if h == 0 || h as usize > ctx.q {
        return Err(format!("h = {h} outside 1..={}", ctx.q));
    }
    Ok(h)
}

fn eval_gamma_invariance_form(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let g = gamma_form(&p.get_index()?, Action::Right).map_err(err)?;
    let h = letter_param(ctx, p)?;
    Ok((g.pullback(h, Action::Right).to_string(), g.to_string()))
}

fn eval_structure(_: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let idx = p.get_index()?;
    let g = gamma_form(&idx, Action::Right).map_err(err)?;
    let mut rhs = split_wedge(&idx, Action::Right).map_err(err)?;
    if structure_sign(Action::Right) < 0 {
        rhs = rhs.neg();
    }
    Ok((g.exterior_d().to_string(), rhs.to_string()))
}

fn eval_massey_closed(_: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let m = massey_2form(&p.get_index()?, Action::Right).map_err(err)?;
    Ok((m.exterior_d().to_string(), "0".into()))
}

fn eval_massey_form_invariance(ctx: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let m = massey_2form(&p.get_index()?, Action::Right).map_err(err)?;
    let h = letter_param(ctx, p)?;
    Ok((m.pullback(h, Action::Right).to_string(), m.to_string()))
}

fn gen_bridge(ctx: &Ctx, s: &mut Sampler, n: usize) -> Result<Vec<Inputs>, String> {
    if ctx.max_len < 2 {
        return Ok(Vec::new());
    }
    Ok((0..n)
        .map(|_| {
            let len = s.gen_range(2..ctx.max_len + 1);
            let idx = random_index(s, ctx.q, len);
            Inputs::new().index(&idx).words(&s.words(2))
        })
        .collect())
}

/// The tensor evaluation of the Massey 2-form against the split-sum cochain.
fn eval_bridge(_: &Ctx, p: &Inputs) -> Result<Sides, String> {
    let idx = p.get_index()?;
    let w = p.parse_words(2)?;
    let lhs = massey_bridge(&idx, &w[0], &w[1], Action::Right).map_err(err)?;
    let rhs = massey2(&idx, idx.len()).map_err(err)?;
    Ok((lhs.to_string(), eval_expr(&rhs, &w)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = CHECKS.iter().map(|c| c.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), CHECKS.len());
        assert!(CHECKS.iter().all(|c| SUITES.contains(&c.module)));
    }

    #[test]
    fn index_enumeration() {
        assert_eq!(all_indices(2, 1..=2).len(), 6);
        assert_eq!(all_indices(3, 3..=3).len(), 27);
    }
}
