use clap::ValueEnum;
use fradkin::algebra_core::{jacobiator_with, structure_tensor, AlgebraMode, BasisKind, Generator, StructureTensor};
use fradkin::exec::Exec;
use fradkin::iho_discretization::{
    invariant_set, kappa, pullback, symplectic_defect, trajectory, verify_symmetry_algebra, PhaseState,
};
use fradkin::killing_levi::{
    expected_determinant, expected_signature, killing_closedform, killing_determinant, killing_semisimple, levi_verify,
    signature, spectrum_verify,
};
use fradkin::nambu_gradient::matfam::verify_all;
use fradkin::nambu_gradient::{
    det_j_closed, det_j_closed_p, mu_factor, nambu_rhs, verify_discrete_nambu, verify_nambu, Coordinate, NambuContext,
};
use fradkin::rational::{fmt_q, q, Q};
use fradkin::representations::{build, verify_target, Target};
use fradkin::sample::Sampler;
use fradkin::symplectic_oracle::structure_constants_bruteforce_with;
use fradkin::tables::{zero_order, CommTable, F2_ORDER, MINUS3_ORDER, PLUS3_ORDER};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::config::{ConfigError, RunConfig};
use crate::error::CliError;
use crate::output::{pass_word, Output, Render};

type Res = Result<Output, CliError>;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgebraAction {
    Table,
    Jacobi,
    Constants,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KillingAction {
    Spectrum,
    Det,
    Signature,
    Levi,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum IsoAction {
    Verify,
    Matrix,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SimAction {
    Run,
    Invariants,
    Classify,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum NambuAction {
    Check,
    Matfam,
}

fn val<T: serde::Serialize>(x: &T) -> Result<Value, CliError> {
    serde_json::to_value(x).map_err(|e| CliError::Output(e.to_string()))
}

fn qs(xs: &[Q]) -> Vec<String> {
    xs.iter().map(fmt_q).collect()
}

fn basis_name(k: BasisKind) -> &'static str {
    match k {
        BasisKind::LF => "lf",
        BasisKind::F => "f",
    }
}

fn header(cfg: &RunConfig, command: &str) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(command));
    m.insert("seed".into(), json!(cfg.seed));
    m
}

fn finish(
    mut m: serde_json::Map<String, Value>,
    text: String,
    csv: Option<(Vec<String>, Vec<Vec<String>>)>,
    pass: bool,
) -> Output {
    m.insert("pass".into(), json!(pass));
    Output {
        json: Value::Object(m),
        text,
        csv,
        pass,
    }
}

fn tensor(cfg: &RunConfig) -> Result<StructureTensor, CliError> {
    Ok(structure_tensor(cfg.n, &cfg.mode, cfg.basis)?)
}

/// Row order of the reference tables where one exists, else the tensor's own order.
fn table_order(cfg: &RunConfig, t: &StructureTensor) -> Vec<Generator> {
    let fb = |pairs: &[(usize, usize)]| pairs.iter().map(|&(i, j)| Generator::Fb(i, j)).collect();
    match (&cfg.mode, cfg.basis, cfg.n) {
        (AlgebraMode::Zero, BasisKind::LF, n) => zero_order(n),
        (_, BasisKind::F, 2) => fb(&F2_ORDER),
        (AlgebraMode::Plus(_), BasisKind::F, 3) => fb(&PLUS3_ORDER),
        (AlgebraMode::Minus(_), BasisKind::F, 3) => fb(&MINUS3_ORDER),
        _ => t.basis.clone(),
    }
}

pub fn algebra(action: AlgebraAction, cfg: &RunConfig) -> Res {
    let t = tensor(cfg)?;
    let mut m = header(cfg, "algebra");
    m.insert("n".into(), json!(cfg.n));
    m.insert("mode".into(), json!(cfg.mode.label()));
    m.insert("basis".into(), json!(basis_name(cfg.basis)));
    match action {
        AlgebraAction::Table => {
            let title = format!("{} N={} basis {}", cfg.mode.label(), cfg.n, basis_name(cfg.basis));
            let table = CommTable::from_tensor(&title, &t, &table_order(cfg, &t))?;
            let d = table.labels.len();
            let mut head = vec![String::new()];
            head.extend(table.labels.iter().cloned());
            let rows = (0..d)
                .map(|r| {
                    let mut row = vec![table.labels[r].clone()];
                    row.extend((0..d).map(|c| table.cell_text(r, c)));
                    row
                })
                .collect();
            m.insert("table".into(), val(&table)?);
            Ok(finish(m, table.render_text(), Some((head, rows)), true))
        }
        AlgebraAction::Jacobi => {
            let v = jacobiator_with(&t, Exec::default());
            let anti = t.is_antisymmetric();
            let pass = v.is_zero() && anti;
            m.insert("max_violation".into(), json!(fmt_q(&v)));
            m.insert("antisymmetric".into(), json!(anti));
            let text = format!(
                "{} N={} basis {} dim {}\nmax violation: {}\nantisymmetric: {}\n{}\n",
                cfg.mode.label(),
                cfg.n,
                basis_name(cfg.basis),
                t.dim(),
                v,
                anti,
                pass_word(pass)
            );
            Ok(finish(m, text, None, pass))
        }
        AlgebraAction::Constants => {
            let r = Render {
                precision: cfg.precision,
            };
            let mut entries = Vec::new();
            let mut rows = Vec::new();
            for a in 0..t.dim() {
                for b in a + 1..t.dim() {
                    for (c, v) in t.bracket(a, b) {
                        let (x, y, z) = (t.basis[a].to_string(), t.basis[b].to_string(), t.basis[*c].to_string());
                        entries.push(json!({"x": x, "y": y, "z": z, "c": fmt_q(v)}));
                        rows.push(vec![x, y, z, r.q(v)]);
                    }
                }
            }
            let oracle = match cfg.basis {
                BasisKind::LF => {
                    Some(t.mismatches(&structure_constants_bruteforce_with(cfg.n, &cfg.mode, Exec::default())?))
                }
                BasisKind::F => None,
            };
            let pass = t.is_antisymmetric() && oracle.is_none_or(|k| k == 0);
            m.insert("dim".into(), json!(t.dim()));
            m.insert("entries".into(), json!(entries));
            m.insert("oracle_mismatches".into(), json!(oracle));
            let mut text = format!("[x, y] = c z, {} nonzero entries with x < y\n", rows.len());
            for row in &rows {
                text.push_str(&format!("[{}, {}] = {} {}\n", row[0], row[1], row[3], row[2]));
            }
            if let Some(k) = oracle {
                text.push_str(&format!("symplectic oracle mismatches: {k}\n"));
            }
            text.push_str(pass_word(pass));
            text.push('\n');
            let head = ["x", "y", "z", "c"].map(String::from).to_vec();
            Ok(finish(m, text, Some((head, rows)), pass))
        }
    }
}

pub fn killing(action: KillingAction, cfg: &RunConfig) -> Res {
    let (n, mode) = (cfg.n, &cfg.mode);
    let r = Render {
        precision: cfg.precision,
    };
    let mut m = header(cfg, "killing");
    m.insert("n".into(), json!(n));
    m.insert("mode".into(), json!(mode.label()));
    match action {
        KillingAction::Spectrum => {
            let s = spectrum_verify(n, mode)?;
            let mut text = format!("{} N={n} semisimple dim {}\n", mode.label(), s.dim);
            for e in &s.eigenvalues {
                let exp = e.expected.map_or("-".to_string(), |x| x.to_string());
                text.push_str(&format!("eigenvalue {} x{} (expected {exp})\n", r.q(&e.value), e.found));
            }
            if let Some(note) = &s.note {
                text.push_str(&format!("note: {note}\n"));
            }
            text.push_str(pass_word(s.pass));
            text.push('\n');
            m.insert("spectrum".into(), val(&s)?);
            let rows = s
                .eigenvalues
                .iter()
                .map(|e| {
                    vec![
                        r.q(&e.value),
                        e.expected.map_or(String::new(), |x| x.to_string()),
                        e.found.to_string(),
                    ]
                })
                .collect();
            let head = ["eigenvalue", "expected", "found"].map(String::from).to_vec();
            Ok(finish(m, text, Some((head, rows)), s.pass))
        }
        KillingAction::Det => {
            let brute = killing_semisimple(n, mode)?;
            let closed = killing_closedform(n, mode)?;
            let det = killing_determinant(&brute);
            let expected = expected_determinant(n, mode)?;
            let closed_ok = brute == closed;
            let pass = closed_ok && det == expected;
            m.insert("det".into(), json!(fmt_q(&det)));
            m.insert("expected".into(), json!(fmt_q(&expected)));
            m.insert("closed_form_matches".into(), json!(closed_ok));
            let text = format!(
                "det K = {}\nexpected = {}\nclosed form equals brute force: {closed_ok}\n{}\n",
                r.q(&det),
                r.q(&expected),
                pass_word(pass)
            );
            Ok(finish(m, text, None, pass))
        }
        KillingAction::Signature => {
            let sig = signature(n, mode)?;
            let expected = expected_signature(n, mode);
            let note = match mode {
                AlgebraMode::Minus(_) => spectrum_verify(n, mode)?.note,
                _ => None,
            };
            let pass = sig == expected;
            m.insert("signature".into(), val(&sig)?);
            m.insert("expected".into(), val(&expected)?);
            m.insert("note".into(), json!(note));
            let mut text = format!(
                "signature (p, n, z) = ({}, {}, {})\nexpected = ({}, {}, {})\n",
                sig.p, sig.n, sig.z, expected.p, expected.n, expected.z
            );
            if let Some(note) = &note {
                text.push_str(&format!("note: {note}\n"));
            }
            text.push_str(pass_word(pass));
            text.push('\n');
            Ok(finish(m, text, None, pass))
        }
        KillingAction::Levi => {
            let l = levi_verify(n, mode)?;
            let text = format!(
                "levi factor: {}\nradical: {}\ns closed: {}\nr ideal: {}\nr abelian: {}\nkilling nondegenerate on s: {}\ns semisimple: {}\n{}\n",
                l.levi_factor.join(" "),
                l.radical.join(" "),
                l.s_closed,
                l.r_ideal,
                l.r_abelian,
                l.killing_nondegenerate_on_s,
                l.s_intrinsically_semisimple,
                pass_word(l.pass)
            );
            m.insert("levi".into(), val(&l)?);
            Ok(finish(m, text, None, l.pass))
        }
    }
}

pub fn iso(action: IsoAction, cfg: &RunConfig) -> Res {
    let target = cfg.target.ok_or(ConfigError::Missing("--target"))?;
    let omega = match target {
        Target::Zero | Target::Zeta2 => None,
        _ => Some(&cfg.omega),
    };
    let mut m = header(cfg, "iso");
    m.insert("n".into(), json!(cfg.n));
    m.insert("target".into(), json!(target.to_string()));
    match action {
        IsoAction::Verify => {
            let h = verify_target(target, cfg.n, omega, Exec::default())?;
            let mut text = format!(
                "target {} N={}\npairs checked: {}\nrank {} of domain {} (target dim {})\ninjective: {} surjective: {}\n",
                h.target, h.n, h.pairs_checked, h.rank, h.domain_dim, h.target_dim, h.injective, h.surjective
            );
            text.push_str(&format!(
                "antihermitian: {} traceless: {} real: {}\n",
                h.antihermitian, h.traceless, h.real
            ));
            if let Some(v) = &h.first_violation {
                text.push_str(&format!("first violation: [{}, {}]\n", v.x, v.y));
            }
            text.push_str(pass_word(h.pass));
            text.push('\n');
            m.insert("report".into(), val(&h)?);
            Ok(finish(m, text, None, h.pass))
        }
        IsoAction::Matrix => {
            let rep = build(target, cfg.n, omega)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (g, img) in rep.basis.iter().zip(&rep.images) {
                text.push_str(&format!("{g} ->\n"));
                for i in 0..img.rows() {
                    let cells: Vec<String> = img.row(i).iter().map(|x| x.to_string()).collect();
                    text.push_str(&format!("  [{}]\n", cells.join(", ")));
                    for (j, x) in img.row(i).iter().enumerate() {
                        if !x.is_zero() {
                            rows.push(vec![
                                g.to_string(),
                                (i + 1).to_string(),
                                (j + 1).to_string(),
                                x.to_string(),
                            ]);
                        }
                    }
                }
            }
            let images: Vec<Value> = rep
                .basis
                .iter()
                .zip(&rep.images)
                .map(|(g, img)| Ok(json!({"generator": g.to_string(), "matrix": val(&img)?})))
                .collect::<Result<_, CliError>>()?;
            m.insert("mode".into(), json!(rep.mode.label()));
            m.insert("size".into(), json!(rep.matrix_size()));
            m.insert("images".into(), json!(images));
            let head = ["generator", "row", "col", "entry"].map(String::from).to_vec();
            Ok(finish(m, text, Some((head, rows)), true))
        }
    }
}

fn initial_state(cfg: &RunConfig, n: usize) -> Result<PhaseState, CliError> {
    Ok(match cfg.state(n)? {
        Some(s) => s,
        None => {
            let mut s = Sampler::new(cfg.seed).with_bound(10);
            PhaseState {
                q: s.vec(n),
                p: s.vec(n),
            }
        }
    })
}

pub fn sim(action: SimAction, cfg: &RunConfig) -> Res {
    let p = cfg.discretization()?;
    let r = Render {
        precision: cfg.precision,
    };
    let mut m = header(cfg, "sim");
    m.insert("params".into(), val(&p)?);
    match action {
        SimAction::Classify => {
            let k = kappa(&p)?;
            let sym = verify_symmetry_algebra(&p)?;
            m.insert("kappa".into(), json!(fmt_q(&k.kappa)));
            m.insert("regime".into(), json!(k.regime.to_string()));
            m.insert("symmetry".into(), val(&sym)?);
            let text = format!(
                "kappa = {}, regime = {}\nsymmetry algebra matches A_N(kappa): {} ({} mismatches)\n",
                r.q(&k.kappa),
                k.regime,
                pass_word(sym.pass),
                sym.lf_mismatches
            );
            Ok(finish(m, text, None, sym.pass))
        }
        SimAction::Run => {
            let s0 = initial_state(cfg, p.n)?;
            let traj = trajectory(&p, &s0, cfg.steps)?;
            let inv = invariant_set(&p)?;
            let mut head = vec!["t".to_string()];
            head.extend((1..=p.n).map(|i| format!("q{i}")));
            head.extend((1..=p.n).map(|i| format!("p{i}")));
            head.extend(inv.iter().map(|(l, _)| l.clone()));
            let mut rows = Vec::new();
            let mut jrows = Vec::new();
            for (k, s) in traj.iter().enumerate() {
                let t = &p.h * q(k as i64);
                let x = s.point();
                let vals: Vec<Q> = inv.iter().map(|(_, o)| o.eval(&x)).collect();
                let mut row = vec![r.q(&t)];
                row.extend(x.iter().map(|v| r.q(v)));
                row.extend(vals.iter().map(|v| r.q(v)));
                rows.push(row);
                let invariants: serde_json::Map<String, Value> = inv
                    .iter()
                    .zip(&vals)
                    .map(|((l, _), v)| (l.clone(), json!(fmt_q(v))))
                    .collect();
                jrows.push(json!({"t": fmt_q(&t), "q": qs(&s.q), "p": qs(&s.p), "invariants": invariants}));
            }
            m.insert("rows".into(), json!(jrows));
            let mut text = head.join(",");
            text.push('\n');
            for row in &rows {
                text.push_str(&row.join(","));
                text.push('\n');
            }
            Ok(finish(m, text, Some((head, rows)), true))
        }
        SimAction::Invariants => {
            let s0 = initial_state(cfg, p.n)?;
            let traj = trajectory(&p, &s0, cfg.steps)?;
            let x0 = s0.point();
            let mut all = true;
            let mut rows = Vec::new();
            let mut jrows = Vec::new();
            for (label, o) in invariant_set(&p)? {
                let preserved = pullback(&o, &p)? == o;
                let start = o.eval(&x0);
                let drift = traj
                    .iter()
                    .map(|s| (o.eval(&s.point()) - &start).abs())
                    .fold(Q::zero(), |a, b| if b > a { b } else { a });
                all &= preserved && drift.is_zero();
                jrows.push(json!({"invariant": label, "preserved": preserved, "max_drift": fmt_q(&drift)}));
                rows.push(vec![label, preserved.to_string(), r.q(&drift)]);
            }
            let defect = symplectic_defect(&p);
            m.insert("steps".into(), json!(cfg.steps));
            m.insert("invariants".into(), json!(jrows));
            m.insert("symplectic_defect".into(), json!(qs(&defect)));
            let mut text = format!(
                "{:<8} {:<10} max drift over {} steps\n",
                "label", "preserved", cfg.steps
            );
            for row in &rows {
                text.push_str(&format!("{:<8} {:<10} {}\n", row[0], row[1], row[2]));
            }
            text.push_str(&format!("symplectic defect: {}\n{}\n", r.qs(&defect), pass_word(all)));
            let head = ["invariant", "preserved", "max_drift"].map(String::from).to_vec();
            Ok(finish(m, text, Some((head, rows)), all))
        }
    }
}

pub fn nambu(action: NambuAction, cfg: &RunConfig) -> Res {
    let n = cfg.n;
    let w = &cfg.omega_t;
    let r = Render {
        precision: cfg.precision,
    };
    let mut m = header(cfg, "nambu");
    m.insert("n".into(), json!(n));
    match action {
        NambuAction::Check => {
            m.insert("omega_t".into(), json!(fmt_q(w)));
            if let Some(s) = cfg.state(n)? {
                return nambu_point(cfg, &s, m);
            }
            let rep = verify_nambu(n, w, cfg.draws, cfg.seed, Exec::default())?;
            let disc = verify_discrete_nambu(n, cfg.draws, cfg.seed, Exec::default())?;
            let pass = rep.pass && disc.pass;
            let text = format!(
                "N={n} omega-t = {} draws = {} seed = {}\nfield: {} ({}/{})\ndetJ closed form: {} ({}/{})\n\
                 special point rank: {} (expected {})\ndiscrete gradient residual at a = 1/2: {} ({}/{})\n{}\n",
                r.q(w),
                cfg.draws,
                cfg.seed,
                pass_word(rep.field_matches == rep.points),
                rep.field_matches,
                rep.points,
                pass_word(rep.closed_form_matches == rep.points),
                rep.closed_form_matches,
                rep.points,
                rep.special_point_rank,
                2 * n - 1,
                pass_word(disc.pass),
                disc.zero_residual,
                disc.pairs,
                pass_word(pass)
            );
            m.insert("continuous".into(), val(&rep)?);
            m.insert("discrete".into(), val(&disc)?);
            Ok(finish(m, text, None, pass))
        }
        NambuAction::Matfam => {
            if n < 3 {
                return Err(ConfigError::Value {
                    key: "n",
                    msg: "matrix family checks need N >= 3".into(),
                }
                .into());
            }
            let reports = verify_all((3, n), cfg.draws, cfg.seed, Exec::default())?;
            let pass = reports.iter().all(|x| x.pass());
            let mut text = format!("N in 3..={n}, {} draws per lemma, seed {}\n", cfg.draws, cfg.seed);
            let mut rows = Vec::new();
            for x in &reports {
                text.push_str(&format!(
                    "{:<16} {:>4}/{:<4} {}\n",
                    x.lemma,
                    x.passed,
                    x.draws,
                    pass_word(x.pass())
                ));
                rows.push(vec![
                    x.lemma.to_string(),
                    x.draws.to_string(),
                    x.passed.to_string(),
                    x.pass().to_string(),
                ]);
            }
            text.push_str(pass_word(pass));
            text.push('\n');
            m.insert("lemmas".into(), val(&reports)?);
            let head = ["lemma", "draws", "passed", "pass"].map(String::from).to_vec();
            Ok(finish(m, text, Some((head, rows)), pass))
        }
    }
}

/// Evaluates the Nambu structure at one point; L12 = 0 is reported as an error.
fn nambu_point(cfg: &RunConfig, s: &PhaseState, mut m: serde_json::Map<String, Value>) -> Res {
    let (n, w) = (cfg.n, &cfg.omega_t);
    let r = Render {
        precision: cfg.precision,
    };
    let mu = mu_factor(n, w, s)?;
    let (qd, pd) = nambu_rhs(s, n, w)?;
    let ctx = NambuContext::new(n, w)?;
    let w2 = w * w;
    let field = qd == s.p && pd.iter().zip(&s.q).all(|(x, y)| *x == -(&w2 * y));
    let mut dets = Vec::new();
    let mut closed = true;
    for i in 1..=n {
        for (c, expect) in [
            (Coordinate::Q(i), det_j_closed(s, n, w, i)),
            (Coordinate::P(i), det_j_closed_p(s, n, w, i)),
        ] {
            let dense = ctx.det_j_dense(s, c)?;
            closed &= dense == expect;
            let name = match c {
                Coordinate::Q(i) => format!("q{i}"),
                Coordinate::P(i) => format!("p{i}"),
            };
            dets.push((name, dense, expect));
        }
    }
    let pass = field && closed;
    m.insert("mu".into(), json!(fmt_q(&mu)));
    m.insert("qdot".into(), json!(qs(&qd)));
    m.insert("pdot".into(), json!(qs(&pd)));
    m.insert(
        "det_j".into(),
        json!(dets
            .iter()
            .map(|(c, d, e)| json!({"coordinate": c, "dense": fmt_q(d), "closed": fmt_q(e)}))
            .collect::<Vec<_>>()),
    );
    let mut text = format!("mu = {}\nqdot = ({})\npdot = ({})\n", r.q(&mu), r.qs(&qd), r.qs(&pd));
    for (c, d, e) in &dets {
        text.push_str(&format!("det J[{c}] = {} (closed form {})\n", r.q(d), r.q(e)));
    }
    text.push_str(&format!(
        "field: {}\ndetJ closed form: {}\n{}\n",
        pass_word(field),
        pass_word(closed),
        pass_word(pass)
    ));
    Ok(finish(m, text, None, pass))
}
