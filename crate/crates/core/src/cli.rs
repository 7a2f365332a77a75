//! The `translatable` command line. [`run`] parses arguments, dispatches to
//! the library and maps results to exit codes: 0 on success, 1 on a
//! mathematical negative, 2 on usage and parse errors.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{max_order_from_env, set_max_order};
use crate::constructions::{self, UnionSpec};
use crate::error::Error;
use crate::format::{self, Format};
use crate::properties::{self, PropertyName};
use crate::search::{self, SequenceFilter};
use crate::structure::{self, Side};
use crate::table::{CayleyTable, KSequence, Ordering, Presentation};
use crate::translatable::{self as tr, table_from_sequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "translatable",
    version,
    about = "Exact computations with k-translatable groupoids and semigroups",
    after_help = "Sequences are given as --seq a1,a2,..,an together with --k; --n defaults to the \
                  sequence length. Tables are read from --table FILE (JSON or text, `-` for stdin)."
)]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Text => Format::Text,
        }
    }
}

#[derive(Args, Debug, Default, Clone)]
struct Input {
    /// Order of the groupoid.
    #[arg(long)]
    n: Option<usize>,
    /// Translation step.
    #[arg(long)]
    k: Option<usize>,
    /// First row, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    seq: Option<Vec<usize>>,
    /// Table file.
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the table generated by a first row, optionally under an ordering.
    Build {
        #[command(flatten)]
        input: Input,
        /// Element labels in table order, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        ordering: Option<Vec<usize>>,
    },
    /// List every step for which a table is translatable.
    Detect {
        #[command(flatten)]
        input: Input,
    },
    /// Check one property, or report all of them.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        property: Option<String>,
    },
    /// Modular conditions on (n, k, first row); without --seq, the left
    /// unitary characterization for (n, k).
    Lcond {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        property: Option<String>,
    },
    /// Build a named family.
    Construct {
        #[arg(value_enum)]
        variant: Variant,
        #[command(flatten)]
        input: Input,
        /// Number of copies for embed and the unions.
        #[arg(long)]
        t: Option<usize>,
    },
    /// The dual table, or the dual step for --n and --k alone.
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// All rotated presentations of a first row.
    Rotate {
        #[command(flatten)]
        input: Input,
    },
    /// Decompose a left cancellative semigroup into cyclic groups.
    Decompose {
        #[command(flatten)]
        input: Input,
    },
    /// Idempotent elements, with the closed form for semigroups.
    Idempotents {
        #[command(flatten)]
        input: Input,
    },
    /// Isomorphism between --seq and --with, or onto Z_n for a single input.
    Iso {
        #[command(flatten)]
        input: Input,
        /// Second first row, same n and k.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        with: Option<Vec<usize>>,
    },
    /// One-sided ideals and whether each is semiprime.
    Ideals {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// First rows of order n and step k with the given properties.
    Enumerate {
        #[command(flatten)]
        input: Input,
        /// Required property; repeatable.
        #[arg(long)]
        property: Vec<String>,
        /// Forbidden property; repeatable.
        #[arg(long)]
        without: Vec<String>,
        /// Keep only permutation first rows.
        #[arg(long)]
        permutations: bool,
    },
    /// Census of first rows of order n by step and property.
    Catalog {
        #[command(flatten)]
        input: Input,
    },
    /// Run a verification campaign.
    Verify {
        /// Campaign id; `all` runs every campaign.
        #[arg(long, required_unless_present = "list")]
        theorem: Option<String>,
        #[arg(long)]
        max_n: Option<usize>,
        /// List campaign ids and default bounds.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    LeftUnitary,
    Idempotent,
    CancellativeSemigroups,
    Ee3,
    ConstantColumn,
    Embed,
    UnionT62,
    UnionT63,
    PairUnion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

/// Failure of a command: a library error or a plain negative answer whose
/// output has already been written.
enum Failure {
    Error(Error),
    Io(String),
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_) | Error::ConstructionImpossible(_) | Error::Invariant(_) => {
            EXIT_NEGATIVE
        }
        _ => EXIT_USAGE,
    }
}

/// Runs the command line on `args` (program name first).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    if let Some(limit) = max_order_from_env() {
        set_max_order(limit);
    }
    let mut buf = Vec::new();
    let result = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build()
    {
        Ok(pool) => pool.install(|| dispatch(&cli, &mut buf)),
        Err(e) => Err(Failure::Io(e.to_string())),
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &buf).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(&buf).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_USAGE;
    }
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Negative) => EXIT_NEGATIVE,
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

struct Out<'a> {
    buf: &'a mut Vec<u8>,
    format: Format,
}

impl Out<'_> {
    fn json(&mut self, v: &Value) -> io::Result<()> {
        writeln!(self.buf, "{v}")
    }

    fn text(&mut self, s: &str) -> io::Result<()> {
        self.buf.write_all(s.as_bytes())?;
        if !s.ends_with('\n') {
            self.buf.push(b'\n');
        }
        Ok(())
    }

    fn emit(&mut self, v: &Value, text: impl FnOnce() -> String) -> io::Result<()> {
        match self.format {
            Format::Json => self.json(v),
            Format::Text => self.text(&text()),
        }
    }

    fn table(&mut self, t: &CayleyTable) -> io::Result<()> {
        let s = format::table_to_string(t, self.format);
        self.text(&s)
    }

    fn sequences(&mut self, list: &[KSequence]) -> io::Result<()> {
        match self.format {
            Format::Json => self.json(&Value::Array(list.iter().map(seq_json).collect())),
            Format::Text => {
                for s in list {
                    self.text(&s.to_string())?;
                }
                Ok(())
            }
        }
    }
}

fn seq_json(s: &KSequence) -> Value {
    json!({"n": s.order(), "k": s.step(), "seq": s.values()})
}

fn table_json(t: &CayleyTable) -> Value {
    json!({"n": t.order(), "table": t.rows()})
}

fn join(xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Error(Error::Parse {
        line: 1,
        column: 1,
        message: msg.into(),
    })
}

fn parse_property(name: &str) -> Result<PropertyName, Failure> {
    name.parse().map_err(Failure::Error)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| usage(format!("missing --{flag}")))
}

impl Input {
    fn has_seq(&self) -> bool {
        self.seq.is_some()
    }

    fn sequence(&self) -> Result<KSequence, Failure> {
        let a = self.seq.clone().ok_or_else(|| usage("missing --seq"))?;
        let n = self.n.unwrap_or(a.len());
        let k = need(self.k, "k")?;
        Ok(KSequence::new(n, k, a)?)
    }

    fn read_table(&self) -> Result<Option<CayleyTable>, Failure> {
        let Some(path) = &self.table else {
            return Ok(None);
        };
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
        };
        let table = format::parse_table(&text, format::sniff(&text))?;
        crate::arith::check_order(table.order())?;
        Ok(Some(table))
    }

    /// The table from --table, or the one generated by --seq.
    fn table(&self) -> Result<CayleyTable, Failure> {
        match (self.read_table()?, self.has_seq()) {
            (Some(_), true) => Err(usage("give either --table or --seq, not both")),
            (Some(t), false) => Ok(t),
            (None, true) => Ok(table_from_sequence(&self.sequence()?)),
            (None, false) => Err(usage("missing --table or --seq")),
        }
    }
}

fn dispatch(cli: &Cli, buf: &mut Vec<u8>) -> Outcome {
    let mut out = Out {
        buf,
        format: cli.format.into(),
    };
    match &cli.command {
        Command::Build { input, ordering } => {
            let seq = input.sequence()?;
            let table = match ordering {
                Some(o) => Presentation::new(seq, Ordering::new(o.clone())?)?.table(),
                None => table_from_sequence(&seq),
            };
            out.table(&table)?;
        }
        Command::Detect { input } => {
            let result = tr::detect(&input.table()?);
            let ks: Vec<usize> = result.ks.iter().copied().collect();
            out.emit(&json!({"ks": ks}), || {
                if ks.is_empty() {
                    "none".into()
                } else {
                    join(ks.iter().copied())
                }
            })?;
            if !result.is_translatable() {
                return Err(Failure::Negative);
            }
        }
        Command::Check { input, property } => {
            let table = input.table()?;
            match property {
                Some(name) => {
                    let p = parse_property(name)?;
                    let v = properties::check(&table, p)?;
                    out.emit(&json!({"property": p.as_str(), "holds": v.holds, "witness": v.witness}), || {
                        match &v.witness {
                            Some(w) if !v.holds => format!("{p}: fails, {w}"),
                            _ => format!("{p}: {}", if v.holds { "holds" } else { "fails" }),
                        }
                    })?;
                    if !v.holds {
                        return Err(Failure::Negative);
                    }
                }
                None => {
                    let report = properties::report(&table);
                    let v = serde_json::to_value(&report).expect("report serializes");
                    out.emit(&v, || {
                        report
                            .verdicts
                            .iter()
                            .map(|(p, v)| format!("{p}: {}", if v.holds { "holds" } else { "fails" }))
                            .collect::<Vec<_>>()
                            .join("\n")
                    })?;
                }
            }
        }
        Command::Lcond { input, property } => lcond(&mut out, input, property.as_deref())?,
        Command::Construct { variant, input, t } => construct(&mut out, *variant, input, *t)?,
        Command::Dual { input } => {
            if input.has_seq() || input.table.is_some() {
                out.table(&tr::dual(&input.table()?))?;
            } else {
                let (n, k) = (need(input.n, "n")?, need(input.k, "k")?);
                KSequence::identity(n, k)?;
                let d = tr::dual_step(n, k);
                let v = serde_json::to_value(d).expect("dual step serializes");
                out.emit(&v, || match d.kstar {
                    Some(ks) => format!("k* = {ks}{}", if d.alterable { " (n - k)" } else { "" }),
                    None => "none".into(),
                })?;
                if d.kstar.is_none() {
                    return Err(Failure::Negative);
                }
            }
        }
        Command::Rotate { input } => {
            let seq = input.sequence()?;
            let list = tr::all_rotated_presentations(&seq);
            let v: Vec<Value> = list
                .iter()
                .map(|(o, s)| json!({"ordering": o.as_slice(), "seq": s.values()}))
                .collect();
            out.emit(&Value::Array(v), || {
                list.iter()
                    .map(|(o, s)| format!("{} | {}", join(o.as_slice().iter().copied()), join(s.values().iter().copied())))
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
        }
        Command::Decompose { input } => {
            let seq = input.sequence()?;
            let d = structure::decompose(&table_from_sequence(&seq), &seq)?;
            let v = serde_json::to_value(&d).expect("decomposition serializes");
            out.emit(&v, || {
                let mut s = format!(
                    "m = {}, t = {}\nE = {}\n",
                    d.m,
                    d.t,
                    join(d.idempotents.iter().copied())
                );
                for (c, g) in d.components.iter().zip(&d.generators) {
                    s.push_str(&format!("<{g}> = {}\n", join(c.iter().copied())));
                }
                s
            })?;
        }
        Command::Idempotents { input } => {
            let table = input.table()?;
            let set = structure::idempotent_set(&table);
            let formula = match input.has_seq() {
                true => {
                    let seq = input.sequence()?;
                    match properties::semigroup_criterion(&seq) {
                        Ok(true) => Some(structure::idempotents_by_formula(&seq)?),
                        _ => None,
                    }
                }
                false => None,
            };
            let v = json!({"idempotents": set, "formula": formula});
            out.emit(&v, || join(set.iter().copied()))?;
        }
        Command::Iso { input, with } => iso(&mut out, input, with.as_deref())?,
        Command::Ideals { input, side } => {
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let list = structure::ideals(&input.table()?, side)?;
            let v = serde_json::to_value(&list).expect("ideals serialize");
            out.emit(&v, || {
                list.iter()
                    .map(|i| {
                        format!(
                            "{}{}",
                            join(i.elements.iter().copied()),
                            if i.semiprime { " (semiprime)" } else { "" }
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
        }
        Command::Enumerate {
            input,
            property,
            without,
            permutations,
        } => {
            let filter = SequenceFilter {
                permutation_only: *permutations,
                required: property.iter().map(|p| parse_property(p)).collect::<Result<_, _>>()?,
                forbidden: without.iter().map(|p| parse_property(p)).collect::<Result<_, _>>()?,
            };
            let list = search::enumerate(need(input.n, "n")?, need(input.k, "k")?, &filter)?;
            out.sequences(&list)?;
        }
        Command::Catalog { input } => {
            let entries = search::catalog_entries(need(input.n, "n")?)?;
            match out.format {
                Format::Json => {
                    // one entry per line keeps golden diffs readable
                    let lines: Vec<String> = entries
                        .iter()
                        .map(|e| serde_json::to_string(e).expect("catalog serializes"))
                        .collect();
                    out.text(&format!("[\n{}\n]", lines.join(",\n")))?;
                }
                Format::Text => {
                    for e in &entries {
                        let props = if e.properties.is_empty() {
                            "any".to_string()
                        } else {
                            e.properties.join("+")
                        };
                        out.text(&format!("k={} {props}: {}", e.k, e.count))?;
                    }
                }
            }
        }
        Command::Verify {
            theorem,
            max_n,
            list,
        } => verify(&mut out, theorem.as_deref(), *max_n, *list, cli.jobs as usize)?,
    }
    Ok(())
}

fn lcond(out: &mut Out, input: &Input, property: Option<&str>) -> Outcome {
    let props: Vec<PropertyName> = match property {
        Some(name) => vec![parse_property(name)?],
        None => PropertyName::LCOND.to_vec(),
    };
    if !input.has_seq() {
        let (n, k) = (need(input.n, "n")?, need(input.k, "k")?);
        KSequence::identity(n, k)?;
        let map = properties::left_unitary_characterize(n, k);
        let chosen: Vec<(PropertyName, bool)> = map
            .into_iter()
            .filter(|(p, _)| property.is_none() || props.contains(p))
            .collect();
        if chosen.is_empty() {
            return Err(Failure::Error(Error::Precondition(format!(
                "no left unitary characterization for `{}`",
                property.unwrap_or_default()
            ))));
        }
        let v: serde_json::Map<String, Value> = chosen
            .iter()
            .map(|(p, b)| (p.to_string(), Value::Bool(*b)))
            .collect();
        out.emit(&Value::Object(v), || {
            chosen.iter().map(|(p, b)| format!("{p}: {b}")).collect::<Vec<_>>().join("\n")
        })?;
        return single_negative(property, &chosen);
    }
    let seq = input.sequence()?;
    let mut chosen = Vec::new();
    for p in props {
        chosen.push((p, properties::lcond_check(&seq, p)?));
    }
    let mut v: serde_json::Map<String, Value> = chosen
        .iter()
        .map(|(p, b)| (p.to_string(), Value::Bool(*b)))
        .collect();
    let semigroup = properties::semigroup_criterion(&seq)?;
    let neutral = if semigroup {
        Some(properties::left_neutral(&seq)?)
    } else {
        None
    };
    if property.is_none() {
        v.insert("semigroup".into(), Value::Bool(semigroup));
        v.insert("left-neutral".into(), json!(neutral));
    }
    out.emit(&Value::Object(v), || {
        let mut lines: Vec<String> = chosen.iter().map(|(p, b)| format!("{p}: {b}")).collect();
        if property.is_none() {
            lines.push(format!("semigroup: {semigroup}"));
            if let Some(e) = neutral {
                lines.push(format!("left neutral: {e}"));
            }
        }
        lines.join("\n")
    })?;
    single_negative(property, &chosen)
}

fn single_negative(property: Option<&str>, chosen: &[(PropertyName, bool)]) -> Outcome {
    match (property, chosen) {
        (Some(_), [(_, false)]) => Err(Failure::Negative),
        _ => Ok(()),
    }
}

fn construct(out: &mut Out, variant: Variant, input: &Input, t: Option<usize>) -> Outcome {
    let nk = || -> Result<(usize, usize), Failure> { Ok((need(input.n, "n")?, need(input.k, "k")?)) };
    let union = |u: constructions::LabeledUnion, out: &mut Out| -> Outcome {
        let copies: Vec<Vec<usize>> = (1..=u.spec.t).map(|i| u.copy(i)).collect();
        let v = json!({
            "n": u.table.order(),
            "step": u.step,
            "copies": copies,
            "table": u.table.rows(),
        });
        out.emit(&v, || {
            format!(
                "order {} step {}\n{}",
                u.table.order(),
                u.step,
                format::table_to_string(&u.table, Format::Text)
            )
        })?;
        Ok(())
    };
    match variant {
        Variant::LeftUnitary => {
            let (n, k) = nk()?;
            out.sequences(&[constructions::left_unitary_groupoid(n, k)?])?;
        }
        Variant::Idempotent => {
            let (n, k) = nk()?;
            out.sequences(&[constructions::idempotent_groupoid(n, k)?])?;
        }
        Variant::CancellativeSemigroups => {
            let (n, k) = nk()?;
            out.sequences(&constructions::cancellative_semigroups(n, k)?)?;
        }
        Variant::ConstantColumn => {
            let (n, k) = nk()?;
            out.sequences(&constructions::constant_column_semigroups(n, k)?)?;
        }
        Variant::Ee3 => {
            let k = need(input.k, "k")?;
            out.table(&constructions::ee3_table(k)?)?;
        }
        Variant::Embed => {
            let seq = input.sequence()?;
            let e = constructions::embed(&seq, need(t, "t")?)?;
            let v = json!({"map": e.map, "seq": seq_json(&e.seq), "table": table_json(&e.table)["table"]});
            out.emit(&v, || {
                format!(
                    "map {}\n{}",
                    join(e.map.iter().copied()),
                    format::table_to_string(&e.table, Format::Text)
                )
            })?;
        }
        Variant::UnionT62 => {
            let (n, k) = nk()?;
            union(constructions::union_t62(UnionSpec::new(n, k, need(t, "t")?)?)?, out)?;
        }
        Variant::UnionT63 => {
            let (n, k) = nk()?;
            union(constructions::union_t63(UnionSpec::new(n, k, need(t, "t")?)?)?, out)?;
        }
        Variant::PairUnion => {
            union(constructions::pair_union(need(input.k, "k")?)?, out)?;
        }
    }
    Ok(())
}

fn iso(out: &mut Out, input: &Input, with: Option<&[usize]>) -> Outcome {
    let Some(other) = with else {
        let table = input.table()?;
        let found = structure::iso_to_cyclic(&table);
        out.emit(&json!({"cyclic": found.is_some(), "map": found.as_ref().map(|i| &i.map)}), || {
            match &found {
                Some(i) => format!("cyclic: {}", join(i.map.iter().copied())),
                None => "not cyclic".into(),
            }
        })?;
        return found.map(|_| ()).ok_or(Failure::Negative);
    };
    let a = input.sequence()?;
    let b = Input {
        seq: Some(other.to_vec()),
        ..input.clone()
    }
    .sequence()?;
    let (pa, pb) = (Presentation::natural(a.clone()), Presentation::natural(b));
    let idempotent = |s: &KSequence| properties::holds(&table_from_sequence(s), PropertyName::Idempotent);
    let result = if idempotent(&a)? {
        structure::iso_idempotent(&pa, &pb)
    } else {
        structure::iso_left_unitary(&pa, &pb)
    }?;
    out.emit(&serde_json::to_value(&result).expect("iso serializes"), || {
        join(result.map.iter().copied()).to_string()
    })?;
    Ok(())
}

fn verify(out: &mut Out, theorem: Option<&str>, max_n: Option<usize>, list: bool, jobs: usize) -> Outcome {
    if list {
        for c in search::campaigns() {
            let v = json!({"id": c.id, "aliases": c.aliases, "default_max_n": c.default_max_n,
                "limit_max_n": c.limit_max_n, "summary": c.summary});
            out.emit(&v, || format!("{:24} n <= {:3}  {}", c.id, c.default_max_n, c.summary))?;
        }
        return Ok(());
    }
    let ids: Vec<&str> = match theorem {
        Some("all") => search::campaigns().iter().map(|c| c.id).collect(),
        Some(id) => vec![search::campaign(id)?.id],
        None => return Err(usage("missing --theorem")),
    };
    let mut failed = BTreeSet::new();
    for id in ids {
        let report = search::verify_with_jobs(id, max_n, jobs)?;
        match out.format {
            Format::Json => out.buf.write_all(report.json_lines().as_bytes())?,
            Format::Text => out.text(&format!(
                "{}: {} (max n {}, {} cases, {} instances, {} failures, {} expected failures)",
                report.theorem_id,
                if report.passed() { "pass" } else { "FAIL" },
                report.max_n,
                report.cases.len(),
                report.instances_checked,
                report.failures.len(),
                report.expected_fails
            ))?,
        }
        if !report.passed() {
            failed.insert(id);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}
