use std::fs;
use std::io::Read;
use std::path::Path;

use asreg::catalog::{self, TableKind, TypeId, VerificationReport};
use asreg::expr::{parse_potential, parse_tensor, Bindings};
use asreg::hesse::{self, CurveAutomorphism, HesseCurve, HessePoint};
use asreg::quadratic::{derivation_quotient, hilbert_dims, nakayama, QuadraticAlgebra};
use asreg::regularity::{as_regular_check, RegularityVerdict};
use asreg::tensor::TwistedWitness;
use asreg::{FieldElement, FieldSpec, LinearMap, Matrix, Tensor};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::render::{self, envelope};
use crate::{Cli, Command, EcArgs, EcOp, Table, VerifyArgs};

pub struct Output {
    pub ok: bool,
    pub text: String,
}

pub struct CliError {
    pub code: u8,
    pub message: String,
}

fn usage(msg: impl ToString) -> CliError {
    CliError { code: 2, message: msg.to_string() }
}

fn parse_err(msg: impl ToString) -> CliError {
    CliError { code: 3, message: msg.to_string() }
}

fn failure(msg: impl ToString) -> CliError {
    CliError { code: 1, message: msg.to_string() }
}

type Res<T> = Result<T, CliError>;

struct Ctx<'a> {
    cli: &'a Cli,
    field: FieldSpec,
}

impl Ctx<'_> {
    fn out(&self, command: &str, ok: bool, result: Value, text: String) -> Output {
        let text = if self.cli.json {
            let v = envelope(command, &self.field.to_string(), ok, result);
            format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
        } else {
            text
        };
        Output { ok, text }
    }

    fn bindings(&self) -> Res<Bindings> {
        let mut b = Bindings::new();
        for kv in &self.cli.bind {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| usage(format!("binding `{kv}` is not NAME=VALUE")))?;
            let v = FieldElement::parse(self.field, v.trim()).map_err(parse_err)?;
            b.insert(k.trim().to_string(), v);
        }
        Ok(b)
    }
}

fn read_source(path: &Path) -> Res<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(e.to_string()))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

/// Non-empty lines with `#` comments removed.
fn source_lines(src: &str) -> Vec<String> {
    src.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
        .filter(|l| !l.is_empty())
        .collect()
}

fn read_potential(ctx: &Ctx, path: &Path) -> Res<Tensor> {
    let text = source_lines(&read_source(path)?).join(" ");
    let w = parse_potential(&text, ctx.field, &ctx.bindings()?).map_err(parse_err)?;
    if w.degree() != 3 {
        return Err(parse_err(format!("expected a cubic potential, found degree {}", w.degree())));
    }
    Ok(w)
}

/// A cubic potential gives D(w); otherwise each line is one quadratic relation.
fn read_algebra(ctx: &Ctx, path: &Path) -> Res<(QuadraticAlgebra, Option<Tensor>)> {
    let lines = source_lines(&read_source(path)?);
    let b = ctx.bindings()?;
    let joined = lines.join(" ");
    if let Ok(w) = parse_potential(&joined, ctx.field, &b) {
        if w.degree() == 3 {
            let a = derivation_quotient(&w).map_err(failure)?;
            return Ok((a, Some(w)));
        }
    }
    let rels = lines
        .iter()
        .map(|l| parse_tensor(l, ctx.field, &b).map_err(parse_err))
        .collect::<Res<Vec<_>>>()?;
    if let Some(t) = rels.iter().find(|t| t.degree() != 2) {
        return Err(parse_err(format!("relation `{t}` is not quadratic")));
    }
    Ok((QuadraticAlgebra::new(ctx.field, &rels).map_err(failure)?, None))
}

fn parse_matrix(field: FieldSpec, s: &str) -> Res<Matrix> {
    let entries = s
        .split(',')
        .map(|e| FieldElement::parse(field, e.trim()).map_err(parse_err))
        .collect::<Res<Vec<_>>>()?;
    if entries.len() != 9 {
        return Err(parse_err(format!("matrix needs 9 entries, got {}", entries.len())));
    }
    Ok(Matrix::from_rows(field, entries.chunks(3).map(|c| c.to_vec()).collect()).expect("3x3"))
}

pub fn run(cli: &Cli) -> Res<Output> {
    let field = FieldSpec::parse(&cli.field).map_err(parse_err)?;
    let ctx = Ctx { cli, field };
    match &cli.command {
        Command::CheckSp { file } => check_sp(&ctx, file),
        Command::CheckTsp { file } => check_tsp(&ctx, file),
        Command::Twist { file, theta } => twist(&ctx, file, theta),
        Command::Dqa { file } => dqa(&ctx, file),
        Command::Regular { file } => regular(&ctx, file),
        Command::Nakayama { file } => nakayama_cmd(&ctx, file),
        Command::Verify(args) => verify(&ctx, args),
        Command::Tables => Ok(ctx.out(
            "tables",
            true,
            json!({ "markdown": catalog::render_tables() }),
            catalog::render_tables(),
        )),
        Command::Ec(args) => ec(cli, args),
    }
}

fn check_sp(ctx: &Ctx, file: &Path) -> Res<Output> {
    let w = read_potential(ctx, file)?;
    let sp = w.is_superpotential().map_err(failure)?;
    let cyc = w.cyclic().map_err(failure)?;
    Ok(ctx.out(
        "check-sp",
        sp,
        json!({ "potential": w.to_string(), "superpotential": sp, "cyclic": cyc.to_string() }),
        format!("superpotential: {}\n", if sp { "yes" } else { "no" }),
    ))
}

fn check_tsp(ctx: &Ctx, file: &Path) -> Res<Output> {
    let w = read_potential(ctx, file)?;
    let (ok, witness, text) = match w.twisted_witness().map_err(failure)? {
        TwistedWitness::Witness(m) => (true, json!(m.to_string()), format!("theta' = {m}\n")),
        TwistedWitness::None => (false, Value::Null, "none\n".to_string()),
        TwistedWitness::UndeterminedInvertibility => {
            (false, json!("undetermined"), "undetermined: no invertible candidate found\n".to_string())
        }
    };
    Ok(ctx.out("check-tsp", ok, json!({ "potential": w.to_string(), "witness": witness }), text))
}

fn twist(ctx: &Ctx, file: &Path, theta: &str) -> Res<Output> {
    let w = read_potential(ctx, file)?;
    let m = LinearMap::from_matrix(parse_matrix(ctx.field, theta)?).map_err(failure)?;
    if !m.is_invertible() {
        return Err(failure("theta is not invertible"));
    }
    let t = w.ms_twist(&m).map_err(failure)?;
    Ok(ctx.out(
        "twist",
        true,
        json!({ "potential": w.to_string(), "theta": m.to_string(), "twisted": t.to_string() }),
        format!("{t}\n"),
    ))
}

fn dqa(ctx: &Ctx, file: &Path) -> Res<Output> {
    let w = read_potential(ctx, file)?;
    let a = derivation_quotient(&w).map_err(failure)?;
    let rels: Vec<String> = a.relations.canonical_basis().iter().map(|t| t.to_string()).collect();
    let partials: Vec<String> = w.partials().map_err(failure)?.iter().map(|t| t.to_string()).collect();
    let dims = hilbert_dims(&a, 4).map_err(failure)?;
    let mut text = String::new();
    for r in &rels {
        text.push_str(r);
        text.push('\n');
    }
    text.push_str(&format!("hilbert: {dims:?}\n"));
    Ok(ctx.out(
        "dqa",
        true,
        json!({ "partials": partials, "relations": rels, "hilbert": dims }),
        text,
    ))
}

fn regular(ctx: &Ctx, file: &Path) -> Res<Output> {
    let (a, _) = read_algebra(ctx, file)?;
    let r = as_regular_check(&a);
    let ok = r.verdict == RegularityVerdict::Regular;
    Ok(ctx.out("regular", ok, render::regularity_json(&r), render::regularity_text(&r)))
}

fn nakayama_cmd(ctx: &Ctx, file: &Path) -> Res<Output> {
    let (a, w) = read_algebra(ctx, file)?;
    let nu = nakayama(&a).map_err(failure)?;
    let table = catalog::table_layout(&nu);
    let witness = match &w {
        Some(w) => match w.twisted_witness().map_err(failure)? {
            TwistedWitness::Witness(m) => Some(m),
            _ => None,
        },
        None => None,
    };
    let scalar = witness
        .as_ref()
        .and_then(|m| LinearMap::from_matrix(table.clone()).ok()?.ratio_to(m));
    let mut text = format!("nu = {table}\n");
    if let Some(m) = &witness {
        text.push_str(&format!("theta' = {m}\n"));
    }
    match &scalar {
        Some(s) => text.push_str(&format!("scalar: nu = ({s}) * theta'\n")),
        None => text.push_str("scalar: none\n"),
    }
    Ok(ctx.out(
        "nakayama",
        true,
        json!({
            "nakayama": table.to_string(),
            "identity": nu.is_identity(),
            "witness": witness.map(|m| m.to_string()),
            "scalar": scalar.map(|s| s.to_string()),
        }),
        text,
    ))
}

fn verify(ctx: &Ctx, args: &VerifyArgs) -> Res<Output> {
    let kind = match args.table {
        Table::Table1 => TableKind::Table1,
        Table::Table2 => TableKind::Table2,
        Table::Table3 => TableKind::Table3,
    };
    let ids: Vec<TypeId> = match &args.type_id {
        Some(t) => vec![t.parse().map_err(usage)?],
        None => TypeId::ALL.to_vec(),
    };
    let name = format!("verify {}", serde_json::to_value(kind).unwrap().as_str().unwrap());
    if !ctx.cli.bind.is_empty() {
        let [id] = ids.as_slice() else {
            return Err(usage("--bind needs --type"));
        };
        let b = ctx.bindings()?;
        let r: VerificationReport = match kind {
            TableKind::Table1 => catalog::verify_row(*id, ctx.field, &b),
            TableKind::Table2 => catalog::verify_table2(*id, ctx.field, &b),
            TableKind::Table3 => catalog::verify_table3(*id, ctx.field, &b),
        }
        .map_err(failure)?;
        let ok = r.passed();
        let text = render::report_markdown(std::slice::from_ref(&r));
        return Ok(ctx.out(&name, ok, serde_json::to_value(&r).expect("serializable"), text));
    }
    let r = catalog::sweep(kind, &ids, ctx.cli.seed, args.count, ctx.field).map_err(|e| match e {
        catalog::CatalogError::PrimeTooSmall(_) => usage(e),
        _ => failure(e),
    })?;
    let ok = r.passed();
    let text = render::sweep_markdown(&r);
    Ok(ctx.out(&name, ok, serde_json::to_value(&r).expect("serializable"), text))
}

fn parse_point(e: &HesseCurve, s: &str) -> Res<HessePoint> {
    let coords = s
        .split(',')
        .map(|c| FieldElement::parse(e.field(), c.trim()).map_err(parse_err))
        .collect::<Res<Vec<_>>>()?;
    let coords: [FieldElement; 3] = coords
        .try_into()
        .map_err(|_| parse_err(format!("point `{s}` needs 3 coordinates")))?;
    e.point(coords).map_err(failure)
}

fn ec(cli: &Cli, args: &EcArgs) -> Res<Output> {
    let field = match args.prime {
        Some(p) => FieldSpec::prime(p).map_err(usage)?,
        None => FieldSpec::parse(&cli.field).map_err(parse_err)?,
    };
    let ctx = Ctx { cli, field };
    let lambda = FieldElement::parse(field, &args.lambda).map_err(parse_err)?;
    let e = HesseCurve::new(lambda).map_err(failure)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let point = |rng: &mut ChaCha8Rng, s: &Option<String>| -> Res<HessePoint> {
        match s {
            Some(s) => parse_point(&e, s),
            None => e.random_nontorsion(rng).map_err(failure),
        }
    };
    let name = format!("ec {}", format!("{:?}", args.op).to_lowercase());
    let base = json!({ "lambda": e.lambda().to_string(), "j": e.j_invariant().to_string() });
    let with = |extra: Value| {
        let mut v = base.clone();
        v.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
        v
    };
    match args.op {
        EcOp::J => {
            let j = e.j_invariant();
            Ok(ctx.out(&name, true, base.clone(), format!("j = {j}\n")))
        }
        EcOp::Add => {
            let p = point(&mut rng, &args.point)?;
            let q = point(&mut rng, &args.point2)?;
            let r = e.add(&p, &q);
            Ok(ctx.out(&name, true, with(json!({ "p": p, "q": q, "sum": r })), format!("{p} + {q} = {r}\n")))
        }
        EcOp::Torsion => {
            let p = point(&mut rng, &args.point)?;
            if args.n < 1 {
                return Err(usage("--n must be at least 1"));
            }
            let t = e.is_n_torsion(&p, args.n);
            let order = (1..=12).find(|&k| e.is_n_torsion(&p, k));
            Ok(ctx.out(
                &name,
                true,
                with(json!({ "point": p, "n": args.n, "torsion": t, "order_at_most_12": order })),
                format!(
                    "[{}]{p} = o: {t}\norder: {}\n",
                    args.n,
                    order.map_or("> 12".to_string(), |k| k.to_string())
                ),
            ))
        }
        EcOp::Sklyanin => {
            let p = point(&mut rng, &args.point)?;
            let a = hesse::sklyanin(&e, &p).map_err(failure)?;
            let rels: Vec<String> = hesse::sklyanin_relations(&p).iter().map(|t| t.to_string()).collect();
            let r = as_regular_check(&a);
            let ok = r.verdict == RegularityVerdict::Regular;
            let mut text = format!("p = {p}\n");
            for rel in &rels {
                text.push_str(&format!("{rel}\n"));
            }
            text.push_str(&render::regularity_text(&r));
            Ok(ctx.out(
                &name,
                ok,
                with(json!({ "point": p, "relations": rels, "regularity": render::regularity_json(&r) })),
                text,
            ))
        }
        EcOp::Regular => {
            let p = point(&mut rng, &args.point)?;
            let crit = hesse::ec_regular(&e, &p, args.i, None).map_err(failure)?;
            let a = hesse::twisted_sklyanin(&e, &p, args.i).map_err(failure)?;
            let r = as_regular_check(&a);
            let engine = r.verdict == RegularityVerdict::Regular;
            let e6 = e.is_n_torsion(&p, 6);
            let mut text = format!("p = {p}, i = {}\n", args.i);
            text.push_str(if crit {
                "regular (criterion (2) holds)\n"
            } else {
                "not regular (criterion (2) fails)\n"
            });
            text.push_str(&format!("algebra verdict: {}\n", r.verdict));
            text.push_str(&format!("p in E[6]: {e6}\n"));
            if crit != engine {
                text.push_str("DISAGREEMENT between criterion and algebra verdict\n");
            }
            Ok(ctx.out(
                &name,
                crit && engine,
                with(json!({
                    "point": p,
                    "i": args.i,
                    "criterion": crit,
                    "algebra_verdict": r.verdict,
                    "in_e6": e6,
                    "agree": crit == engine,
                    "evidence": if field.characteristic() == 0 { "exact" } else { "finite-field evidence" },
                })),
                text,
            ))
        }
        EcOp::G1 => {
            let p = point(&mut rng, &args.point)?;
            let a = hesse::twisted_sklyanin(&e, &p, args.i).map_err(failure)?;
            let sigma = CurveAutomorphism::new(&e, p.clone(), args.i, None).map_err(failure)?;
            let ok = hesse::g1_graph_check(&a, &e, &sigma, args.samples, &mut rng).map_err(failure)?;
            Ok(ctx.out(
                &name,
                ok,
                with(json!({ "point": p, "i": args.i, "samples": args.samples, "graph_in_zero_set": ok })),
                format!("g1 on {} samples: {}\n", args.samples, if ok { "pass" } else { "fail" }),
            ))
        }
        EcOp::Extension => {
            let p = match &args.point {
                Some(s) => parse_point(&e, s)?,
                None => e.zero(),
            };
            let sigma = CurveAutomorphism::new(&e, p.clone(), args.i, None).map_err(failure)?;
            let n = hesse::linear_extension(&e, &sigma, args.samples, &mut rng).map_err(failure)?;
            let text = match &n {
                Some(m) => format!("N = {m}\n"),
                None => "none: sigma does not extend to a linear map\n".to_string(),
            };
            Ok(ctx.out(
                &name,
                true,
                with(json!({ "point": p, "i": args.i, "matrix": n.map(|m| m.to_string()) })),
                text,
            ))
        }
    }
}
