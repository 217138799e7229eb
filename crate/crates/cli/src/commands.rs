use std::fs;

use nilcoh::cochain::{evaluate_word_in_extension, massey2, pairing, ExtensionBasis};
use nilcoh::cocycle3::{census_basis3, corrected_3cocycle, corrected_3cocycle_printed, gamma3, CentralQuotientGroup};
use nilcoh::derham::{gamma_form, massey_2form, Action, DifferentialForm};
use nilcoh::topology::{johnson_tau, morita_vanishes, torelli_depth, FreeEndomorphism, LongitudeSystem};
use nilcoh::words::{format_index, parse_index};
use nilcoh::{magnus_expand, standard_sequences, upsilon, witt_number, StandardSequence, Word};
use serde_json::{json, Map, Value};

use crate::checks::show_johnson;
use crate::config::RunConfig;
use crate::report::{self, ReportConfig, VerificationReport};
use crate::{CliError, Command, FormKind, Output, QuotientAction};

pub fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Output, CliError> {
    match cmd {
        Command::Witt { .. } => witt(cfg),
        Command::Lyndon { .. } => lyndon(cfg),
        Command::Magnus { level, word } => magnus(cfg, level.q.is_some(), word),
        Command::Upsilon { level, word } => upsilon_cmd(cfg, level.q.is_some(), word),
        Command::Massey2 { index, x, y, .. } => massey2_cmd(cfg, index, x, y),
        Command::Massey3 {
            s,
            index,
            x,
            y,
            z,
            printed,
            ..
        } => massey3(cfg, *s, index, [x, y, z], *printed),
        Command::Census3 { .. } => census3(cfg),
        Command::Pair { index, word, .. } => pair(cfg, index, word),
        Command::Quotient { relators, action, .. } => quotient(cfg, relators, action),
        Command::Mu {
            component,
            index,
            longitudes,
            level,
        } => mu(cfg, level.q.is_some(), *component, index, longitudes),
        Command::Johnson { images, level } => johnson(cfg, level.q.is_some(), images),
        Command::Forms { kind } => forms(kind),
        Command::Verify {
            suite, max_len, report, ..
        } => verify(cfg, suite.name(), *max_len, report.as_deref()),
        Command::Replay { report } => replay(report),
    }
}

fn word(s: &str, q: usize) -> Result<Word, CliError> {
    let w: Word = s.parse()?;
    w.check_rank(q)?;
    Ok(w)
}

fn words(strs: &[&String], q: usize) -> Result<Vec<Word>, CliError> {
    strs.iter().map(|s| word(s, q)).collect()
}

fn index(s: &str, q: usize) -> Result<Vec<u8>, CliError> {
    let idx = parse_index(s)?;
    if let Some(&bad) = idx.iter().find(|&&i| i as usize > q) {
        return Err(nilcoh::Error::GeneratorOutOfRange {
            index: bad as usize,
            rank: q,
        }
        .into());
    }
    Ok(idx)
}

fn standard_index(s: &str, q: usize) -> Result<StandardSequence, CliError> {
    Ok(StandardSequence::new(index(s, q)?)?)
}

/// Rank to use for a single word when `--q` was not given explicitly.
fn rank_for(cfg: &RunConfig, explicit: bool, ws: &[Word]) -> usize {
    if explicit {
        cfg.q
    } else {
        ws.iter()
            .map(|w| w.max_generator() as usize)
            .max()
            .unwrap_or(1)
            .max(cfg.q)
    }
}

fn witt(cfg: &RunConfig) -> Result<Output, CliError> {
    let n = witt_number(cfg.q, cfg.k)?;
    Ok(Output::ok(
        format!("{}\n", n.value),
        json!({ "q": cfg.q, "k": cfg.k, "value": n.value.to_string() }),
    ))
}

fn lyndon(cfg: &RunConfig) -> Result<Output, CliError> {
    let seqs: Vec<String> = standard_sequences(cfg.q, cfg.k)?
        .iter()
        .map(|s| format_index(s.indices()))
        .collect();
    let text: String = seqs.iter().map(|s| format!("{s}\n")).collect();
    Ok(Output::ok(
        text,
        json!({ "q": cfg.q, "k": cfg.k, "count": seqs.len(), "sequences": seqs }),
    ))
}

fn magnus(cfg: &RunConfig, explicit_q: bool, w: &str) -> Result<Output, CliError> {
    let parsed: Word = w.parse()?;
    let q = rank_for(cfg, explicit_q, std::slice::from_ref(&parsed));
    parsed.check_rank(q)?;
    let p = magnus_expand(&parsed, cfg.k);
    let terms: Map<String, Value> = p
        .index_map()
        .into_iter()
        .map(|(m, c)| (m, json!(c.to_string())))
        .collect();
    Ok(Output::ok(
        format!("{p}\n"),
        json!({ "q": q, "k": cfg.k, "word": parsed.to_string(), "terms": terms }),
    ))
}

fn upsilon_cmd(cfg: &RunConfig, explicit_q: bool, w: &str) -> Result<Output, CliError> {
    let parsed: Word = w.parse()?;
    let q = rank_for(cfg, explicit_q, std::slice::from_ref(&parsed));
    parsed.check_rank(q)?;
    let m = upsilon(&parsed, cfg.k);
    let rows: Vec<Vec<String>> = (0..m.size())
        .map(|a| (0..m.size()).map(|b| m.entry(a, b).to_string()).collect())
        .collect();
    Ok(Output::ok(
        m.to_string(),
        json!({ "q": q, "k": cfg.k, "word": parsed.to_string(), "size": m.size(), "rows": rows }),
    ))
}

fn massey2_cmd(cfg: &RunConfig, idx: &str, x: &String, y: &String) -> Result<Output, CliError> {
    cfg.require_k(2)?;
    let idx = index(idx, cfg.q)?;
    let ws = words(&[x, y], cfg.q)?;
    let v = massey2(&idx, cfg.k)?.eval_words(&ws)?;
    Ok(Output::ok(
        format!("{v}\n"),
        json!({
            "q": cfg.q,
            "k": cfg.k,
            "index": format_index(&idx),
            "words": [ws[0].to_string(), ws[1].to_string()],
            "value": v.to_string(),
        }),
    ))
}

fn massey3(cfg: &RunConfig, s: u8, idx: &str, args: [&String; 3], printed: bool) -> Result<Output, CliError> {
    cfg.require_k(3)?;
    let idx = index(idx, cfg.q)?;
    let ws = words(&args, cfg.q)?;
    let (form, expr) = if idx.len() == cfg.k {
        if printed {
            return Err(CliError::Usage("--printed applies only to |I| = k+1".into()));
        }
        ("gamma", gamma3(s, &idx, cfg.k)?.expr)
    } else if idx.len() == cfg.k + 1 {
        if printed {
            ("corrected_printed", corrected_3cocycle_printed(s, &idx, cfg.k)?)
        } else {
            ("corrected", corrected_3cocycle(s, &idx, cfg.k)?.expr)
        }
    } else {
        return Err(CliError::Usage(format!(
            "--index must have length k = {} or k+1 = {}, got {}",
            cfg.k,
            cfg.k + 1,
            idx.len()
        )));
    };
    let v = expr.eval_words(&ws)?;
    let shown: Vec<String> = ws.iter().map(ToString::to_string).collect();
    Ok(Output::ok(
        format!("{v}\n"),
        json!({
            "q": cfg.q,
            "k": cfg.k,
            "s": s,
            "index": format_index(&idx),
            "cocycle": form,
            "words": shown,
            "value": v.to_string(),
        }),
    ))
}

fn census3(cfg: &RunConfig) -> Result<Output, CliError> {
    let census = census_basis3(cfg.q, cfg.k)?;
    let mut text = format!("{:>4} {:>6} {:>6}  emitted\n", "ell", "rank", "filter");
    let mut slices = Vec::new();
    for sl in &census.slices {
        text.push_str(&format!(
            "{:>4} {:>6} {:>6}  {}\n",
            sl.ell,
            sl.rank,
            sl.filter_count(),
            if sl.emitted { "yes" } else { "no" }
        ));
        let entries: Vec<String> = sl
            .entries
            .iter()
            .map(|(seq, s)| format!("{}|{s}", format_index(seq.indices())))
            .collect();
        slices.push(json!({
            "ell": sl.ell,
            "rank": sl.rank.to_string(),
            "filter_count": sl.filter_count(),
            "counts_agree": sl.counts_agree(),
            "emitted": sl.emitted,
            "entries": entries,
        }));
    }
    text.push_str(&format!("total rank: {}\n", census.total_rank()));
    Ok(Output::ok(
        text,
        json!({
            "q": cfg.q,
            "k": cfg.k,
            "slices": slices,
            "total_rank": census.total_rank().to_string(),
            "total_filter_count": census.total_filter_count(),
        }),
    ))
}

fn pair(cfg: &RunConfig, idx: &str, w: &str) -> Result<Output, CliError> {
    let seq = standard_index(idx, cfg.q)?;
    if seq.len() != cfg.k {
        return Err(CliError::Usage(format!(
            "--index must have length k = {}, got {}",
            cfg.k,
            seq.len()
        )));
    }
    let w = word(w, cfg.q)?;
    let basis = ExtensionBasis::new(cfg.q, cfg.k)?;
    let eval = evaluate_word_in_extension(&w, &basis)?;
    let pos = basis
        .position(seq.indices())
        .expect("standard sequence of length k lies in the basis");
    let fiber = eval.element.fiber()[pos].clone();
    let base = json!({
        "q": cfg.q,
        "k": cfg.k,
        "index": format_index(seq.indices()),
        "word": w.to_string(),
        "in_lower_central_term": eval.in_lower_central_term,
        "extension": fiber.to_string(),
        "element": eval.element.to_string(),
    });
    if !eval.in_lower_central_term {
        let mut obj = base;
        obj["value"] = Value::Null;
        obj["magnus"] = Value::Null;
        return Ok(Output::ok(
            format!(
                "undefined: \"{w}\" is not in F_{}\nextension element: {}\nfiber coordinate: {fiber}\n",
                cfg.k, eval.element
            ),
            obj,
        ));
    }
    let magnus = pairing(&seq, &w)?;
    let mut obj = base;
    obj["value"] = json!(magnus.to_string());
    obj["magnus"] = json!(magnus.to_string());
    let agree = magnus == fiber;
    obj["agree"] = json!(agree);
    let out = Output {
        text: format!("{magnus}\nmagnus path: {magnus}\nextension path: {fiber}\n"),
        json: obj,
        failed: !agree,
    };
    Ok(out)
}

fn quotient(cfg: &RunConfig, relators: &[String], action: &QuotientAction) -> Result<Output, CliError> {
    let seqs = relators
        .iter()
        .map(|r| standard_index(r, cfg.q))
        .collect::<Result<Vec<_>, _>>()?;
    let group = CentralQuotientGroup::new(cfg.q, cfg.k, seqs)?;
    let rel_strings: Vec<String> = group.relators().iter().map(|r| format_index(r.indices())).collect();
    let relator_pos = |j: usize| -> Result<usize, CliError> {
        if j == 0 || j > relators.len() {
            return Err(CliError::Usage(format!(
                "--j must lie in 1..={}, got {j}",
                relators.len()
            )));
        }
        Ok(j - 1)
    };
    let mut obj = json!({ "q": cfg.q, "k": cfg.k, "relators": rel_strings });
    let text = match action {
        QuotientAction::Phi { j, x, y } => {
            let ws = words(&[x, y], cfg.q)?;
            let v = group.phi_cocycle(relator_pos(*j)?)?.eval_words(&ws)?;
            obj["action"] = json!("phi");
            obj["j"] = json!(j);
            obj["value"] = json!(v.to_string());
            format!("{v}\n")
        }
        QuotientAction::Triple { r, j, s, x, y, z } => {
            let ws = words(&[x, y, z], cfg.q)?;
            let v = group.triple_massey(*r, relator_pos(*j)?, *s)?.eval_words(&ws)?;
            obj["action"] = json!("triple");
            obj["r"] = json!(r);
            obj["j"] = json!(j);
            obj["s"] = json!(s);
            obj["value"] = json!(v.to_string());
            format!("{v}\n")
        }
        QuotientAction::Equal { u, v } => {
            let ws = words(&[u, v], cfg.q)?;
            let eq = group.equal(&ws[0], &ws[1])?;
            obj["action"] = json!("equal");
            obj["equal"] = json!(eq);
            format!("{eq}\n")
        }
    };
    Ok(Output::ok(text, obj))
}

fn mu(cfg: &RunConfig, explicit_q: bool, l: usize, idx: &str, longitudes: &[String]) -> Result<Output, CliError> {
    if explicit_q && cfg.q != longitudes.len() {
        return Err(CliError::Usage(format!(
            "--q {} but {} longitudes were given",
            cfg.q,
            longitudes.len()
        )));
    }
    let q = longitudes.len();
    let ws = longitudes.iter().map(|s| word(s, q)).collect::<Result<Vec<_>, _>>()?;
    let system = LongitudeSystem::new(ws)?;
    let idx = index(idx, q)?;
    let assumption = system.check_assumption(cfg.k);
    let holds = assumption.iter().all(|&b| b);
    let value = system.milnor_mu(&idx, l)?;
    let cross = system.mu_pairing_crosscheck(&idx, l)?;
    let flags: Vec<String> = assumption.iter().map(|b| b.to_string()).collect();
    let text = format!(
        "{value}\nA_{}: {} [{}]\npairing path: {} (relator coefficient {}, correction {})\n",
        cfg.k,
        if holds { "holds" } else { "fails" },
        flags.join(", "),
        cross.pairing(),
        cross.relator_coefficient,
        cross.correction
    );
    Ok(Output {
        text,
        json: json!({
            "q": q,
            "k": cfg.k,
            "component": l,
            "index": format_index(&idx),
            "value": value.to_string(),
            "assumption": { "level": cfg.k, "holds": holds, "per_component": assumption },
            "pairing": cross.pairing().to_string(),
            "relator_coefficient": cross.relator_coefficient.to_string(),
            "correction": cross.correction.to_string(),
            "agree": cross.agree(),
        }),
        failed: !cross.agree(),
    })
}

/// Parses `x3=…` (or `c=…`) into a one-based generator and its image.
fn parse_image(s: &str) -> Result<(usize, Word), CliError> {
    let (lhs, rhs) = s
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("--image expects GENERATOR=WORD, got {s:?}")))?;
    let gen: Word = lhs.parse()?;
    match gen.letters() {
        [l] if !l.inverse => Ok((l.generator as usize, rhs.parse()?)),
        _ => Err(CliError::Usage(format!(
            "--image left side must be a single generator, got {lhs:?}"
        ))),
    }
}

fn johnson(cfg: &RunConfig, explicit_q: bool, images: &[String]) -> Result<Output, CliError> {
    let parsed = images.iter().map(|s| parse_image(s)).collect::<Result<Vec<_>, _>>()?;
    let named = parsed.iter().map(|(g, _)| *g).max().unwrap_or(1);
    let mut q = if explicit_q { cfg.q } else { cfg.q.max(named) };
    for (_, w) in &parsed {
        q = if explicit_q {
            q
        } else {
            q.max(w.max_generator() as usize)
        };
    }
    let mut table: Vec<Option<Word>> = vec![None; q];
    for (g, w) in parsed {
        if g > q {
            return Err(nilcoh::Error::GeneratorOutOfRange { index: g, rank: q }.into());
        }
        if table[g - 1].replace(w).is_some() {
            return Err(CliError::Usage(format!("generator x{g} has two images")));
        }
    }
    let f = FreeEndomorphism::new(
        table
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.unwrap_or_else(|| Word::generator(i as u8 + 1)))
            .collect(),
    )?;
    let depth = torelli_depth(&f, 2 * cfg.k);
    let mut obj = json!({
        "q": q,
        "k": cfg.k,
        "endomorphism": f.to_string(),
        "depth": depth,
        "depth_bound": 2 * cfg.k,
    });
    let mut text = format!(
        "endomorphism: {f}\ndepth: {depth}{}\n",
        if depth == 2 * cfg.k { "+" } else { "" }
    );
    if depth < cfg.k {
        obj["tau"] = Value::Null;
        obj["morita_vanishes"] = Value::Null;
        text.push_str(&format!("tau_{}: undefined (depth {depth} < {})\n", cfg.k, cfg.k));
        return Ok(Output::ok(text, obj));
    }
    let tau = johnson_tau(&f, cfg.k)?;
    let per_gen: Vec<Value> = tau
        .per_generator
        .iter()
        .map(|m| {
            let row: Map<String, Value> = m.iter().map(|(i, c)| (format_index(i), json!(c.to_string()))).collect();
            Value::Object(row)
        })
        .collect();
    obj["tau"] = json!(per_gen);
    obj["tau_zero"] = json!(tau.is_zero());
    text.push_str(&format!("tau_{}: {}\n", cfg.k, show_johnson(&tau)));
    if cfg.k >= 2 {
        let m = morita_vanishes(&f, cfg.k)?;
        obj["morita_vanishes"] = json!(m);
        text.push_str(&format!("morita vanishes: {m}\n"));
    } else {
        obj["morita_vanishes"] = Value::Null;
    }
    Ok(Output::ok(text, obj))
}

fn forms(kind: &FormKind) -> Result<Output, CliError> {
    let (name, idx, left) = match kind {
        FormKind::Gamma { index, left } => ("gamma", index, *left),
        FormKind::Massey { index, left } => ("massey", index, *left),
    };
    let idx = parse_index(idx)?;
    let action = if left { Action::Left } else { Action::Right };
    let form: DifferentialForm = match name {
        "gamma" => gamma_form(&idx, action)?,
        _ => massey_2form(&idx, action)?,
    };
    Ok(Output::ok(
        format!("{form}\n"),
        json!({
            "form": name,
            "index": format_index(&idx),
            "action": if left { "left" } else { "right" },
            "grade": form.grade(),
            "value": form.to_string(),
        }),
    ))
}

fn verify(
    cfg: &RunConfig,
    suite: &str,
    max_len: Option<usize>,
    path: Option<&std::path::Path>,
) -> Result<Output, CliError> {
    let config = ReportConfig {
        q: cfg.q,
        k: cfg.k,
        seed: cfg.seed,
        samples: cfg.samples,
        max_word_len: cfg.max_word_len,
        max_len: max_len.unwrap_or(cfg.k),
    };
    let report = report::verify(suite, config);
    let value = serde_json::to_value(&report).expect("reports serialize");
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(&report).expect("reports serialize");
        fs::write(path, text + "\n").map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(Output {
        text: report::render_verify(&report),
        json: value,
        failed: !report.passed,
    })
}

fn replay(path: &std::path::Path) -> Result<Output, CliError> {
    let source = VerificationReport::load(path)?;
    let r = report::replay(&source)?;
    Ok(Output {
        text: report::render_replay(&r),
        json: serde_json::to_value(&r).expect("reports serialize"),
        failed: !r.passed,
    })
}
