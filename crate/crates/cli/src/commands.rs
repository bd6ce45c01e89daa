use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use dominion_lab::laws::{run_law, LawReport, LAW_NAMES};
use dominion_lab::morphisms::subdirect_analysis;
use dominion_lab::pushout::{dominion_with, pushout_over, DominionError};
use dominion_lab::text::parse_monoid_with_cap;
use dominion_lab::varieties::{generated_variety, satisfies, variety_core};
use dominion_lab::zigzag::{default_cap, search_witness};
use dominion_lab::{
    enumerate_monoids, render_monoid, ElementClass, ElementId, EnumerationConfig, FiniteMonoid,
    SubmonoidEmbedding,
};
use serde_json::json;
use thiserror::Error;

use crate::{CapArgs, Cli, Command, FilterArgs, Format, LawsAction, PairArgs};

pub const CAP_ENV: &str = "DOMINION_LAB_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Input(_) | CliError::Io { .. } => ExitCode::from(2),
            CliError::Internal(_) => ExitCode::from(3),
        }
    }
}

impl From<DominionError> for CliError {
    fn from(err: DominionError) -> Self {
        CliError::Internal(err.to_string())
    }
}

fn input(err: impl ToString) -> CliError {
    CliError::Input(err.to_string())
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Success, or success with law counterexamples.
pub enum Status {
    Clean,
    Counterexamples,
}

impl From<Status> for ExitCode {
    fn from(status: Status) -> Self {
        match status {
            Status::Clean => ExitCode::SUCCESS,
            Status::Counterexamples => ExitCode::from(1),
        }
    }
}

pub fn run(cli: Cli) -> Result<Status, CliError> {
    let out = &mut io::stdout().lock();
    let ctx = Context {
        order_cap: cli.order_cap,
        format: cli.format,
    };
    match cli.command {
        Command::Analyze { path, variety } => ctx.analyze(out, &path, variety),
        Command::Dominion {
            pair,
            method,
            cap,
            witnesses,
        } => ctx.dominion(out, &pair, method, &cap, witnesses),
        Command::Zigzag { pair, target, cap } => ctx.zigzag(out, &pair, &target, &cap),
        Command::Pushout { pair, out: dest } => ctx.pushout(out, &pair, dest.as_deref()),
        Command::Laws { action } => match action {
            LawsAction::Run { filter, law } => ctx.laws(out, &filter, law.as_deref()),
            LawsAction::List => {
                for name in LAW_NAMES {
                    writeln!(out, "{name}").map_err(stdout_error)?;
                }
                Ok(Status::Clean)
            }
        },
        Command::Enumerate { filter, out: dest } => ctx.enumerate(out, &filter, dest.as_deref()),
    }
}

fn stdout_error(source: io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source,
    }
}

macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(stdout_error)?
    };
}

struct Context {
    order_cap: usize,
    format: Format,
}

fn render_elements(m: &FiniteMonoid, set: &BTreeSet<ElementId>) -> String {
    let items: Vec<String> = set
        .iter()
        .map(|&a| match m.labels() {
            Some(_) => format!("{} ({})", a, m.label(a)),
            None => a.to_string(),
        })
        .collect();
    format!("{{{}}}", items.join(", "))
}

fn indices(set: &BTreeSet<ElementId>) -> Vec<usize> {
    set.iter().map(|e| e.0).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Context {
    fn load(&self, path: &Path) -> Result<Arc<FiniteMonoid>, CliError> {
        let text = fs::read_to_string(path).map_err(io_error(path))?;
        let monoid = parse_monoid_with_cap(&text, self.order_cap)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Ok(Arc::new(monoid))
    }

    fn load_pair(&self, pair: &PairArgs) -> Result<SubmonoidEmbedding, CliError> {
        let b = self.load(&pair.path)?;
        parse_submonoid(&b, &pair.spec)
    }

    fn cap(&self, args: &CapArgs, b: &FiniteMonoid) -> Result<usize, CliError> {
        if let Some(cap) = args.cap {
            return Ok(cap);
        }
        match std::env::var(CAP_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| {
                CliError::Input(format!("{CAP_ENV}={v:?} is not a nonnegative integer"))
            }),
            Err(_) => Ok(default_cap(b)),
        }
    }

    fn analyze(
        &self,
        out: &mut impl Write,
        path: &Path,
        variety: Option<dominion_lab::VarietySignature>,
    ) -> Result<Status, CliError> {
        let m = self.load(path)?;
        let si = subdirect_analysis(&m);
        let sig = generated_variety(&m);
        let zero = m.find_zero();
        let classes: Vec<ElementClass> = m.elements().map(|a| m.classify_element(a)).collect();
        let membership = variety.map(|v| (v, satisfies(&m, v), variety_core(&m, v).len()));
        if self.format == Format::Records {
            let record = json!({
                "record": "analysis",
                "monoid": m.name(),
                "order": m.order(),
                "zero": zero.map(|z| z.0),
                "classes": classes.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "inverse_monoid": m.is_inverse_monoid(),
                "subdirectly_irreducible": si.irreducible,
                "monolith": si.monolith.as_ref().map(|c| c.blocks().iter().map(|b| b.iter().map(|e| e.0).collect::<Vec<_>>()).collect::<Vec<_>>()),
                "variety": sig.to_string(),
                "member_of": membership.map(|(v, member, core)| json!({"variety": v.to_string(), "member": member, "core_size": core})),
            });
            emit!(out, "{record}");
            return Ok(Status::Clean);
        }
        emit!(out, "monoid {}", m.name());
        emit!(
            out,
            "order {}; SI: {}; variety: {}; inverse monoid: {}",
            m.order(),
            yes_no(si.irreducible),
            sig,
            yes_no(m.is_inverse_monoid())
        );
        match zero {
            Some(z) => emit!(out, "zero: {}", render_elements(&m, &BTreeSet::from([z]))),
            None => emit!(out, "zero: none"),
        }
        for (a, class) in m.elements().zip(&classes) {
            emit!(out, "element {}: {class}", m.label(a));
        }
        match &si.monolith {
            Some(c) => emit!(out, "{}", c.render("monolith")),
            None => emit!(out, "monolith: none"),
        }
        if let Some((v, member, core)) = membership {
            emit!(out, "{v}: member {}; core size {core}", yes_no(member));
        }
        Ok(Status::Clean)
    }

    fn dominion(
        &self,
        out: &mut impl Write,
        pair: &PairArgs,
        method: dominion_lab::DominionMethod,
        cap: &CapArgs,
        witnesses: bool,
    ) -> Result<Status, CliError> {
        let sub = self.load_pair(pair)?;
        let b = Arc::clone(sub.ambient());
        let cap = self.cap(cap, &b)?;
        let report = dominion_with(&sub, method, cap)?;
        let escaped: BTreeSet<ElementId> = report
            .dominion
            .difference(sub.universe())
            .copied()
            .collect();
        if self.format == Format::Records {
            let record = json!({
                "record": "dominion",
                "monoid": b.name(),
                "submonoid": indices(sub.universe()),
                "dominion": indices(&report.dominion),
                "escaped": indices(&escaped),
                "method": method.to_string(),
                "cap": cap,
                "line": report.render(),
            });
            emit!(out, "{record}");
            if witnesses {
                for w in &report.witnesses {
                    emit!(out, "{}", json!({"record": "zigzag", "line": w.render()}));
                }
            }
            return Ok(Status::Clean);
        }
        emit!(out, "submonoid A: {}", render_elements(&b, sub.universe()));
        emit!(out, "dominion: {}", render_elements(&b, &report.dominion));
        if escaped.is_empty() {
            let note = if sub.is_inverse() {
                " (absolutely closed)"
            } else {
                ""
            };
            emit!(out, "dominion = A{note}");
        } else {
            emit!(out, "escapes A: {}", render_elements(&b, &escaped));
        }
        emit!(out, "{}", report.render());
        if witnesses {
            for w in &report.witnesses {
                emit!(out, "{}", w.render());
            }
        }
        Ok(Status::Clean)
    }

    fn zigzag(
        &self,
        out: &mut impl Write,
        pair: &PairArgs,
        target: &str,
        cap: &CapArgs,
    ) -> Result<Status, CliError> {
        let sub = self.load_pair(pair)?;
        let b = Arc::clone(sub.ambient());
        let value = b
            .lookup(target)
            .ok_or_else(|| CliError::Input(format!("unknown element {target:?}")))?;
        let cap = self.cap(cap, &b)?;
        let found = search_witness(&sub, value, cap);
        if self.format == Format::Records {
            let line = found.as_ref().map(|w| w.render());
            emit!(
                out,
                "{}",
                json!({"record": "zigzag", "target": value.0, "cap": cap, "line": line})
            );
            return Ok(Status::Clean);
        }
        match found {
            Some(w) => {
                if let Err(err) = w.verify() {
                    return Err(CliError::Internal(format!(
                        "search returned a bad witness: {err}"
                    )));
                }
                emit!(out, "{}", w.render());
                if b.labels().is_some() {
                    let show = |v: &[ElementId]| {
                        v.iter().map(|&e| b.label(e)).collect::<Vec<_>>().join(" ")
                    };
                    emit!(
                        out,
                        "labels: args {} z {} w {} value {}",
                        show(w.args()),
                        show(w.spine_z()),
                        show(w.spine_w()),
                        b.label(w.value())
                    );
                }
            }
            None => emit!(out, "none"),
        }
        Ok(Status::Clean)
    }

    fn pushout(
        &self,
        out: &mut impl Write,
        pair: &PairArgs,
        dest: Option<&Path>,
    ) -> Result<Status, CliError> {
        let sub = self.load_pair(pair)?;
        let po = pushout_over(&sub);
        let mut text = render_monoid(&po.monoid);
        text.push_str(&po.p1.render("p1"));
        text.push('\n');
        text.push_str(&po.p2.render("p2"));
        text.push('\n');
        match dest {
            Some(path) => {
                fs::write(path, &text).map_err(io_error(path))?;
                emit!(
                    out,
                    "wrote {} (order {})",
                    path.display(),
                    po.monoid.order()
                );
            }
            None => out.write_all(text.as_bytes()).map_err(stdout_error)?,
        }
        Ok(Status::Clean)
    }

    fn config(&self, filter: &FilterArgs) -> Result<EnumerationConfig, CliError> {
        let mut cfg = EnumerationConfig::new(filter.max_order).map_err(input)?;
        cfg.variety_filter = filter.variety;
        cfg.si_only = filter.si_only;
        Ok(cfg)
    }

    fn laws(
        &self,
        out: &mut impl Write,
        filter: &FilterArgs,
        only: Option<&str>,
    ) -> Result<Status, CliError> {
        let cfg = self.config(filter)?;
        let names: Vec<&str> = match only {
            Some(name) if LAW_NAMES.contains(&name) => vec![name],
            Some(name) => {
                return Err(CliError::Input(format!(
                    "unknown law {name:?}; known: {}",
                    LAW_NAMES.join(", ")
                )))
            }
            None => LAW_NAMES.to_vec(),
        };
        let mut failed = false;
        for name in names {
            let report = run_law(name, &cfg).map_err(input)?;
            failed |= !report.passed();
            self.emit_report(out, &report)?;
        }
        Ok(if failed {
            Status::Counterexamples
        } else {
            Status::Clean
        })
    }

    fn emit_report(&self, out: &mut impl Write, report: &LawReport) -> Result<(), CliError> {
        if self.format == Format::Records {
            let record = json!({
                "record": "law",
                "law": report.law,
                "passed": report.passed(),
                "instances": report.instances,
                "counterexamples": report.counterexamples,
                "elapsed_ms": report.elapsed.as_secs_f64() * 1e3,
                "counters": report.counters,
            });
            emit!(out, "{record}");
            return Ok(());
        }
        emit!(out, "{report}");
        for (key, value) in &report.counters {
            emit!(out, "  {key}: {value}");
        }
        for c in &report.counterexamples {
            emit!(out, "  counterexample: {c}");
        }
        Ok(())
    }

    fn enumerate(
        &self,
        out: &mut impl Write,
        filter: &FilterArgs,
        dest: Option<&Path>,
    ) -> Result<Status, CliError> {
        let cfg = self.config(filter)?;
        let monoids = enumerate_monoids(&cfg).map_err(input)?;
        if let Some(dir) = dest {
            fs::create_dir_all(dir).map_err(io_error(dir))?;
        }
        for m in &monoids {
            if let Some(dir) = dest {
                let path = dir.join(format!("{}.monoid", m.name()));
                fs::write(&path, render_monoid(m)).map_err(io_error(&path))?;
            }
            if self.format == Format::Records {
                let record = json!({
                    "record": "monoid",
                    "name": m.name(),
                    "order": m.order(),
                    "variety": generated_variety(m).to_string(),
                    "subdirectly_irreducible": subdirect_analysis(m).irreducible,
                    "inverse_monoid": m.is_inverse_monoid(),
                    "table": m.table(),
                });
                emit!(out, "{record}");
            } else if dest.is_none() {
                emit!(out, "{}", render_monoid(m));
            }
        }
        if self.format == Format::Text && dest.is_some() {
            emit!(out, "{} monoids", monoids.len());
        }
        Ok(Status::Clean)
    }
}

/// `elements i j ...` lists the universe; `generate i j ...` closes the
/// given elements.
pub fn parse_submonoid(
    b: &Arc<FiniteMonoid>,
    spec: &[String],
) -> Result<SubmonoidEmbedding, CliError> {
    let (mode, tokens) = spec
        .split_first()
        .ok_or_else(|| CliError::Input("empty submonoid spec".into()))?;
    let elements = tokens
        .iter()
        .map(|t| {
            b.lookup(t)
                .ok_or_else(|| CliError::Input(format!("unknown element {t:?} in {}", b.name())))
        })
        .collect::<Result<Vec<ElementId>, _>>()?;
    match mode.as_str() {
        "elements" => {
            SubmonoidEmbedding::new(Arc::clone(b), elements.into_iter().collect()).map_err(input)
        }
        "generate" => SubmonoidEmbedding::generated(Arc::clone(b), elements).map_err(input),
        other => Err(CliError::Input(format!(
            "submonoid spec must start with `elements` or `generate`, not {other:?}"
        ))),
    }
}
