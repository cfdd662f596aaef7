use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context as _, Result};

use mealy::nerode::minimize_with_classes;
use mealy::props::{run_suite, PropertyId, Verdict};
use mealy::{
    component_of, component_partition, enumerated_corpus, exponential_witness, growth_table, order_of_state,
    parse_automaton, parse_state_word, penultimate_letters, power, ratio_sequence, to_dot, to_text,
    EnumerationSpec, Error, Filter, GroupContext, GrowthMode, Limits, MealyAutomaton, OrderResult,
    QRestrictedClass, StateId, Tower,
};

use crate::format::{yes_no, Table};
use crate::{Cli, Command, Format};

pub struct Output {
    pub stdout: String,
    pub status: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, status: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let limits = match cli.budget {
        Some(b) => Limits::uniform(usize::try_from(b).unwrap_or(usize::MAX)),
        None => Limits::default(),
    };
    let f = cli.format;
    match &cli.command {
        Command::Check(i) => check(&load(&i.file)?, f).map(Output::ok),
        Command::Invert(i) => emit_automaton(&load(&i.file)?.inverse()?, f).map(Output::ok),
        Command::Augment(i) => emit_automaton(&load(&i.file)?.augment()?, f).map(Output::ok),
        Command::Power { input, n } => {
            if *n == 0 {
                bail!("the power length must be at least 1");
            }
            emit_automaton(&power(&load(&input.file)?, *n, limits.power_cap)?, f).map(Output::ok)
        }
        Command::Component { input, word, state, n } => {
            component(&load(&input.file)?, word.as_deref(), state.as_deref(), *n, f, &limits).map(Output::ok)
        }
        Command::Ratios { input, state, horizon } => {
            ratios(&load(&input.file)?, state.as_deref(), *horizon, f, &limits).map(Output::ok)
        }
        Command::Minimize { input, classes } => {
            minimize(&load(&input.file)?, classes.as_deref(), f).map(Output::ok)
        }
        Command::Nq { input, state, horizon } => nq(&load(&input.file)?, state, *horizon, f, &limits).map(Output::ok),
        Command::Equal { input, word } => equal(&load(&input.file)?, word, f, &limits).map(Output::ok),
        Command::Growth {
            input,
            radius,
            semigroup,
        } => growth(&load(&input.file)?, *radius, *semigroup, f, &limits).map(Output::ok),
        Command::Order { input, state, horizon } => {
            order(&load(&input.file)?, state, *horizon, f, &limits).map(Output::ok)
        }
        Command::Witness { input, state, horizon } => {
            witness(&load(&input.file)?, state, *horizon, f, &limits).map(Output::ok)
        }
        Command::Props {
            files,
            corpus,
            enumerate,
            dedup,
            builtin,
            horizon,
            only,
        } => props(
            files,
            corpus.as_deref(),
            enumerate.as_deref(),
            *dedup,
            *builtin,
            *horizon,
            only.as_deref(),
            f,
            cli.budget,
            &limits,
        ),
        Command::ExportDot(i) => Ok(Output::ok(to_dot(&load(&i.file)?))),
    }
}

fn load(path: &Path) -> Result<MealyAutomaton> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_automaton(&text).with_context(|| format!("in {}", path.display()))
}

fn state(a: &MealyAutomaton, name: &str) -> Result<StateId> {
    a.state_by_name(name)
        .ok_or_else(|| Error::UnknownDesignator(name.to_string()).into())
}

fn require_horizon(h: usize) -> Result<()> {
    if h == 0 {
        bail!("the horizon must be at least 1");
    }
    Ok(())
}

fn no_dot(f: Format, what: &str) -> Result<()> {
    if f == Format::Dot {
        bail!("{what} has no DOT output; use text or csv");
    }
    Ok(())
}

fn emit_automaton(a: &MealyAutomaton, f: Format) -> Result<String> {
    Ok(match f {
        Format::Dot => to_dot(a),
        Format::Text => to_text(a),
        Format::Csv => {
            let mut t = Table::new(&["state", "input", "target", "output"]);
            for q in a.states() {
                for i in a.letters() {
                    t.row(vec![
                        a.state_name(q).to_string(),
                        a.letter_name(i).to_string(),
                        a.state_name(a.next(q, i)).to_string(),
                        a.letter_name(a.output(q, i)).to_string(),
                    ]);
                }
            }
            t.render(f)
        }
    })
}

fn check(a: &MealyAutomaton, f: Format) -> Result<String> {
    no_dot(f, "check")?;
    let facts = [
        ("invertible", yes_no(a.is_invertible())),
        ("reversible", yes_no(a.is_reversible())),
        ("coreversible", yes_no(a.is_coreversible())),
        ("bireversible", yes_no(a.is_bireversible())),
        ("connected", yes_no(a.is_connected())),
        ("minimal", yes_no(mealy::nerode::is_minimal(a))),
        ("states", a.num_states().to_string()),
        ("letters", a.alphabet_size().to_string()),
    ];
    Ok(match f {
        Format::Csv => {
            let mut t = Table::new(&["property", "value"]);
            for (k, v) in facts {
                t.row(vec![k.into(), v]);
            }
            t.render(f)
        }
        _ => facts.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
    })
}

fn component(
    a: &MealyAutomaton,
    word: Option<&str>,
    q: Option<&str>,
    n: usize,
    f: Format,
    limits: &Limits,
) -> Result<String> {
    let seed = match (word, q) {
        (Some(w), _) => parse_state_word(a, w)?,
        (None, Some(q)) => vec![state(a, q)?; n],
        (None, None) => bail!("give a seed with --word or --state"),
    };
    if seed.is_empty() {
        bail!("the seed word is empty");
    }
    let c = component_of(a, &seed, limits.component_cap)?;
    if f == Format::Csv {
        let mut t = Table::new(&["index", "word"]);
        for (m, w) in c.members().enumerate() {
            t.row(vec![m.to_string(), a.word_name(w)]);
        }
        return Ok(t.render(f));
    }
    emit_automaton(&c.to_automaton(), f)
}

fn ratio_cell(num: usize, den: usize) -> String {
    if den != 0 && num.is_multiple_of(den) {
        (num / den).to_string()
    } else {
        format!("{num}/{den}")
    }
}

fn ratios(a: &MealyAutomaton, q: Option<&str>, horizon: usize, f: Format, limits: &Limits) -> Result<String> {
    no_dot(f, "ratios")?;
    require_horizon(horizon)?;
    let states: Vec<StateId> = match q {
        Some(name) => vec![state(a, name)?],
        None => a.states().collect(),
    };
    let mut cols = vec!["n", "size_cc", "ratio", "follow_card", "precede_card"];
    if q.is_none() {
        cols.insert(0, "state");
    }
    let mut t = Table::new(&cols);
    let mut notes = String::new();
    for &s in &states {
        let r = ratio_sequence(a, s, horizon, limits.component_cap)?;
        for n in 1..=horizon {
            let mut row = vec![
                n.to_string(),
                r.sizes[n - 1].to_string(),
                ratio_cell(r.sizes[n], r.sizes[n - 1]),
                r.ratios[n - 1].to_string(),
                r.precede_cards[n - 1].to_string(),
            ];
            if q.is_none() {
                row.insert(0, a.state_name(s).to_string());
            }
            t.row(row);
        }
        let _ = match r.stabilized_at {
            Some(j) => writeln!(notes, "{}: ratio {} observed from n = {j}", a.state_name(s), r.ratios[j - 1]),
            None => writeln!(notes, "{}: no stabilization observed up to n = {horizon}", a.state_name(s)),
        };
    }
    let mut out = t.render(f);
    if f == Format::Text {
        out.push('\n');
        out.push_str(&notes);
    }
    Ok(out)
}

fn minimize(a: &MealyAutomaton, classes: Option<&Path>, f: Format) -> Result<String> {
    let (m, p) = minimize_with_classes(a);
    let mut map = String::new();
    for q in a.states() {
        let class = p.class_of[q.index()] as usize;
        let _ = writeln!(map, "{} -> {}", a.state_name(q), m.state_name(StateId(class as u32)));
    }
    if let Some(path) = classes {
        fs::write(path, &map).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(match f {
        Format::Csv => {
            let mut t = Table::new(&["state", "class"]);
            for q in a.states() {
                let class = p.class_of[q.index()];
                t.row(vec![a.state_name(q).to_string(), m.state_name(StateId(class)).to_string()]);
            }
            t.render(f)
        }
        Format::Dot => to_dot(&m),
        Format::Text => {
            let mut out = to_text(&m);
            if classes.is_none() {
                out.push_str("# classes\n");
                for line in map.lines() {
                    let _ = writeln!(out, "# {line}");
                }
            }
            out
        }
    })
}

fn letter_set(a: &MealyAutomaton, set: &std::collections::BTreeSet<StateId>) -> String {
    set.iter().map(|&q| a.state_name(q)).collect::<Vec<_>>().join(" ")
}

fn nq(a: &MealyAutomaton, q: &str, horizon: usize, f: Format, limits: &Limits) -> Result<String> {
    no_dot(f, "nq")?;
    require_horizon(horizon)?;
    if !a.is_bireversible() {
        return Err(Error::NotBireversible.into());
    }
    let q = state(a, q)?;
    let tower = Tower::build(a, q, horizon, limits.component_cap)?;
    let mut t = Table::new(&["n", "size_Nq", "ratio", "penultimate_count", "first_letter_set"]);
    let mut prev: Option<usize> = None;
    for n in 1..=horizon {
        let c = tower.level(n);
        let class = QRestrictedClass::from_component(c, &component_partition(c), q);
        let pen = if n >= 2 {
            penultimate_letters(&class)?.len().to_string()
        } else {
            String::new()
        };
        t.row(vec![
            n.to_string(),
            class.len().to_string(),
            prev.map(|p| ratio_cell(class.len(), p)).unwrap_or_default(),
            pen,
            letter_set(a, &class.first_letters()),
        ]);
        prev = Some(class.len());
    }
    Ok(t.render(f))
}

fn equal(a: &MealyAutomaton, words: &[String], f: Format, limits: &Limits) -> Result<String> {
    no_dot(f, "equal")?;
    let [u, v] = words else {
        bail!("give exactly two words with --word");
    };
    let ctx = GroupContext::new(a)?;
    let aug = ctx.automaton();
    let (wu, wv) = (parse_state_word(aug, u)?, parse_state_word(aug, v)?);
    let same = ctx.equal(&wu, &wv, limits.component_cap)?;
    Ok(match f {
        Format::Csv => {
            let mut t = Table::new(&["u", "v", "equal"]);
            t.row(vec![aug.word_name(&wu), aug.word_name(&wv), same.to_string()]);
            t.render(f)
        }
        _ => format!(
            "{} {} {}\n",
            display_word(aug, &wu),
            if same { "==" } else { "!=" },
            display_word(aug, &wv)
        ),
    })
}

fn display_word(a: &MealyAutomaton, w: &[StateId]) -> String {
    if w.is_empty() {
        "(empty)".into()
    } else {
        a.word_name(w)
    }
}

fn growth(a: &MealyAutomaton, radius: usize, semigroup: bool, f: Format, limits: &Limits) -> Result<String> {
    no_dot(f, "growth")?;
    if radius == 0 {
        bail!("the radius must be at least 1");
    }
    let mode = if semigroup { GrowthMode::Semigroup } else { GrowthMode::Group };
    let g = growth_table(a, radius, mode, limits)?;
    let mut t = Table::new(&["n", "gamma", "log2_gamma"]);
    for (n, &gamma) in (1..).zip(&g.gamma) {
        t.row(vec![n.to_string(), gamma.to_string(), format!("{:.6}", (gamma as f64).log2())]);
    }
    let mut out = t.render(f);
    if f == Format::Text {
        let _ = writeln!(
            out,
            "\n{} elements, generating set of size {}",
            if semigroup { "semigroup" } else { "group" },
            g.generating_set_size
        );
    }
    Ok(out)
}

fn order(a: &MealyAutomaton, q: &str, horizon: usize, f: Format, limits: &Limits) -> Result<String> {
    no_dot(f, "order")?;
    require_horizon(horizon)?;
    let s = state(a, q)?;
    let r = order_of_state(a, s, horizon, limits)?;
    Ok(match f {
        Format::Csv => {
            let mut t = Table::new(&["state", "verdict", "period", "preperiod", "horizon"]);
            let (verdict, p, r) = match r {
                OrderResult::Finite { period, preperiod } => ("finite", period.to_string(), preperiod.to_string()),
                OrderResult::NoRepetitionUpTo(_) => ("no_repetition", String::new(), String::new()),
            };
            t.row(vec![q.to_string(), verdict.into(), p, r, horizon.to_string()]);
            t.render(f)
        }
        _ => match r {
            OrderResult::Finite { period, preperiod } => {
                format!("{q}: finite, {q}^{preperiod} acts as {q}^{} (period {period})\n", preperiod + period)
            }
            OrderResult::NoRepetitionUpTo(h) => format!("{q}: no repetition among {q}^0 .. {q}^{h}\n"),
        },
    })
}

fn witness(a: &MealyAutomaton, q: &str, horizon: usize, f: Format, limits: &Limits) -> Result<String> {
    no_dot(f, "witness")?;
    require_horizon(horizon)?;
    let s = state(a, q)?;
    let w = exponential_witness(a, s, horizon, limits)?;
    let mut t = Table::new(&[
        "n",
        "size_cc",
        "mz_size",
        "nq_size",
        "nq_ratio",
        "sandwich_lo",
        "sandwich_hi",
    ]);
    for l in &w.levels {
        t.row(vec![
            l.n.to_string(),
            l.size_cc.to_string(),
            l.mz_size.to_string(),
            l.nq_size.to_string(),
            l.nq_ratio.as_ref().map(ToString::to_string).unwrap_or_default(),
            l.sandwich_lo.to_string(),
            l.sandwich_hi.to_string(),
        ]);
    }
    let opt = |x: Option<String>| x.unwrap_or_else(|| "none".into());
    let sizes: Vec<String> = w.witness_sizes.iter().map(|(m, s)| format!("{m}:{s}")).collect();
    let summary = [
        ("state", w.q_name.clone()),
        ("rebase_power", w.rebase_index.to_string()),
        ("component_size", w.base_size.to_string()),
        ("k", w.k.to_string()),
        ("ell_estimate", opt(w.ell.as_ref().map(ToString::to_string))),
        ("alpha", opt(w.alpha.map(|x| x.to_string()))),
        ("K", opt(w.big_k.as_ref().map(ToString::to_string))),
        ("sandwich_holds", w.sandwich_holds().to_string()),
        ("strict_gap_observed", w.strict_gap_observed.to_string()),
        ("witness_sizes", sizes.join(" ")),
        ("distinct_sizes_ok", w.distinct_sizes_ok.to_string()),
        ("c_estimate", opt(w.c_estimate.map(|c| format!("{c:.6}")))),
    ];
    let mut out = t.render(f);
    out.push('\n');
    let mut st = Table::new(&["summary", "value"]);
    for (k, v) in summary {
        st.row(vec![k.into(), v]);
    }
    out.push_str(&st.render(f));
    Ok(out)
}

fn corpus_dir(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "mealy"))
        .collect();
    files.sort();
    Ok(files)
}

fn label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

#[allow(clippy::too_many_arguments)]
fn props(
    files: &[PathBuf],
    dir: Option<&Path>,
    enumerate: Option<&str>,
    dedup: bool,
    builtin: bool,
    horizon: usize,
    only: Option<&str>,
    f: Format,
    budget: Option<u64>,
    limits: &Limits,
) -> Result<Output> {
    no_dot(f, "props")?;
    require_horizon(horizon)?;
    let properties: Vec<PropertyId> = match only {
        Some(list) => list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.parse::<PropertyId>().map_err(|_| anyhow!("unknown property id `{s}`")))
            .collect::<Result<_>>()?,
        None => PropertyId::ALL.to_vec(),
    };
    let mut corpus: Vec<(String, MealyAutomaton)> = Vec::new();
    if builtin {
        corpus.extend(mealy::corpus::curated());
    }
    let mut paths = files.to_vec();
    if let Some(d) = dir {
        paths.extend(corpus_dir(d)?);
    }
    for p in &paths {
        corpus.push((label(p), load(p)?));
    }
    if let Some(spec) = enumerate {
        let (q, s) = spec
            .split_once(',')
            .and_then(|(q, s)| Some((q.trim().parse::<usize>().ok()?, s.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| anyhow!("--enumerate expects Q,S such as 2,2"))?;
        let enum_budget = budget.map_or(10_000_000, |b| usize::try_from(b).unwrap_or(usize::MAX));
        for states in 1..=q {
            let spec = EnumerationSpec {
                num_states: states,
                alphabet_size: s,
                filter: Filter::Bireversible,
            };
            corpus.extend(enumerated_corpus(spec, enum_budget, dedup)?);
        }
    }
    let suite = run_suite(&corpus, &properties, horizon, limits)?;
    let mut t = Table::new(&["property_id", "automaton", "verdict"]);
    for r in &suite.reports {
        t.row(vec![r.property.to_string(), r.automaton_id.clone(), r.verdict.label().into()]);
    }
    let mut out = t.render(f);
    if f == Format::Text {
        let _ = writeln!(
            out,
            "\n{} checks: {} pass, {} fail, {} skip",
            suite.reports.len(),
            suite.passed(),
            suite.failed(),
            suite.skipped()
        );
        let mut reasons: Vec<(&str, &str, &str)> = Vec::new();
        for r in &suite.reports {
            if let Verdict::Skip(why) = &r.verdict {
                reasons.push((r.property.as_str(), &r.automaton_id, why));
            }
        }
        if !reasons.is_empty() {
            out.push_str("\nskipped:\n");
            for (p, a, why) in reasons {
                let _ = writeln!(out, "  {p} on {a}: {why}");
            }
        }
        if !suite.census.is_empty() {
            out.push_str("\nratio census (ratios r_1..r_h, constant ratio if observed):\n");
            for c in &suite.census {
                let rs: Vec<String> = c.ratios.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "  {} {}: {} -> {}",
                    c.automaton_id,
                    c.state,
                    rs.join(" "),
                    c.constant.map_or_else(|| "not constant".into(), |k| format!("constant {k}"))
                );
            }
        }
        for r in suite.reports.iter().filter(|r| r.verdict == Verdict::Fail) {
            out.push('\n');
            out.push_str(&r.counterexample_text().unwrap_or_default());
        }
    }
    Ok(Output {
        stdout: out,
        status: u8::from(!suite.all_ok()),
    })
}
