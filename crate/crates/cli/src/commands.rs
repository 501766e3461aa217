use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use pierce_core::configs::gen_random_general_position;
use pierce_core::cubic::{certify_bipartite_cubic, certify_cubic, common_cubic, Cubic, CubicError, PointRef, Strategy};
use pierce_core::incidence::{
    check_alternation, extract_bipartite_structure, extract_cyclic_structure, hull_audit, tangency_check,
    verify_bipartite_piercing, verify_piercing, CyclicStructure, PierceReport,
};
use pierce_core::io::{ConfigDocument, Int, PointSets};
use pierce_core::opt::{conjecture_scan, min_pierce_with, ScanOptions};
use pierce_core::oracle::{self, EXHAUSTIVE_MAX_N};
use pierce_core::par::Exec;
use pierce_core::{PierceMode, ProjPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::render::{render_svg, RenderOptions};
use crate::report::*;
use crate::{
    CliError, Cli, Command, SearchArgs, StrategyArg, EXIT_NEGATIVE, EXIT_OK, EXIT_ORACLE_MISMATCH, SEARCH_MAX_N,
};

type Outcome = Result<(serde_json::Value, i32), CliError>;

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let start = Instant::now();
    let (mut value, code) = match &cli.command {
        Command::Verify { path, mode } => verify(path, mode.map(Into::into)),
        Command::Structure { path } => structure(path),
        Command::Fit { path, strategy } => fit(path, *strategy),
        Command::Search(args) => search(args),
        Command::Render { path, out, lines } => render(path, out, *lines),
        Command::Oracle { path, exhaustive } => oracle_cmd(path, *exhaustive),
    }?;
    if cli.timings {
        if let Some(obj) = value.as_object_mut() {
            obj.insert("elapsed_ms".into(), serde_json::json!(start.elapsed().as_secs_f64() * 1e3));
        }
    }
    writeln!(out, "{}", pierce_core::io::pretty_json(&value))?;
    Ok(code)
}

fn json(report: impl Serialize, code: i32) -> Outcome {
    Ok((serde_json::to_value(report).expect("serializable"), code))
}

fn load(path: &Path) -> Result<ConfigDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    ConfigDocument::parse(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn pair_rows(rep: &PierceReport) -> Vec<PairRow> {
    rep.pairs.iter().map(|w| PairRow { i: w.i, j: w.j, witnesses: w.witnesses.clone(), r_on_line: w.r_on_line }).collect()
}

fn verify(path: &Path, mode: Option<PierceMode>) -> Outcome {
    let doc = load(path)?;
    let mode = mode.unwrap_or(doc.mode);
    let usage = |e: String| CliError::Usage(format!("{}: {e}", path.display()));
    let (rep, n, r, bipartite) = match &doc.sets {
        PointSets::Plain(c) => {
            let c = c.clone().with_mode(mode).map_err(|e| usage(e.to_string()))?;
            (verify_piercing(&c, mode).map_err(|e| usage(e.to_string()))?, c.n(), c.r().len(), false)
        }
        PointSets::Bipartite(bc) => {
            if mode != PierceMode::OutsideSegment {
                return Err(usage("bipartite configurations are verified in outside_segment mode".into()));
            }
            (verify_bipartite_piercing(bc).map_err(|e| usage(e.to_string()))?, bc.n(), bc.r().len(), true)
        }
    };
    let code = verdict(rep.holds());
    json(
        VerifyReport {
            command: "verify",
            file: path.display().to_string(),
            mode: mode.to_string(),
            bipartite,
            n,
            r,
            holds: rep.holds(),
            violations: rep.violations.iter().map(|&(i, j)| [i, j]).collect(),
            pairs: pair_rows(&rep),
            exit: code,
        },
        code,
    )
}

fn label_rows(st: &CyclicStructure, r: &[ProjPoint]) -> Vec<LabelRow> {
    st.labels.iter().zip(r).enumerate().map(|(k, (&label, p))| LabelRow { r: k, label, point: pt(p) }).collect()
}

fn structure(path: &Path) -> Outcome {
    let doc = load(path)?;
    let mut rep = StructureReport {
        command: "structure",
        file: path.display().to_string(),
        bipartite: matches!(doc.sets, PointSets::Bipartite(_)),
        modulus: None,
        x_order: Vec::new(),
        labels: Vec::new(),
        hull_audit: None,
        tangency: None,
        alternation: None,
        error: None,
        exit: EXIT_OK,
    };
    let ok = match &doc.sets {
        PointSets::Plain(c) => {
            let c = c.clone().with_mode(PierceMode::OutsideSegment);
            let st = c.as_ref().map_err(|e| e.to_string()).and_then(|c| extract_cyclic_structure(c).map_err(|e| e.to_string()));
            match (c, st) {
                (Ok(c), Ok(st)) => {
                    if let Ok(a) = hull_audit(&c) {
                        rep.hull_audit = Some(AuditRow {
                            k: a.k,
                            a: a.a,
                            b: a.b,
                            c: a.c,
                            r_outside: a.r_outside.len(),
                            identities_hold: a.identities_hold(),
                            tight: a.is_tight(),
                        });
                    }
                    let tangent = tangency_check(&c, &st);
                    rep.tangency = Some(tangent);
                    rep.modulus = Some(st.modulus);
                    rep.labels = label_rows(&st, c.r());
                    rep.x_order = st.order;
                    tangent
                }
                (_, Err(e)) => {
                    rep.error = Some(e);
                    false
                }
                (Err(e), _) => {
                    rep.error = Some(e.to_string());
                    false
                }
            }
        }
        PointSets::Bipartite(bc) => {
            rep.alternation = Some(check_alternation(bc));
            match extract_bipartite_structure(bc) {
                Ok(st) => {
                    rep.modulus = Some(st.modulus);
                    rep.labels = label_rows(&st, bc.r());
                    rep.x_order = st.order;
                    true
                }
                Err(e) => {
                    rep.error = Some(e.to_string());
                    false
                }
            }
        }
    };
    rep.exit = verdict(ok);
    let code = rep.exit;
    json(rep, code)
}

fn point_name(p: PointRef) -> String {
    match p {
        PointRef::X(i) => format!("x_{i}"),
        PointRef::R(k) => format!("r_{k}"),
    }
}

fn fit(path: &Path, strategy: StrategyArg) -> Outcome {
    let doc = load(path)?;
    let all = doc.sets.all_points();
    let mut rep = FitReport {
        command: "fit",
        file: path.display().to_string(),
        strategy_requested: match strategy {
            StrategyArg::Direct => "direct",
            StrategyArg::Paper => "paper",
        },
        strategy_used: None,
        cubic: None,
        kernel_dim: None,
        matches_stored: None,
        steps: Vec::new(),
        vanishing: Vec::new(),
        error: None,
        exit: EXIT_OK,
    };
    let result: Result<(Cubic, usize, Strategy), String> = match strategy {
        StrategyArg::Direct => common_cubic(&all).map(|(c, d)| (c, d, Strategy::Direct)).map_err(|e| e.to_string()),
        StrategyArg::Paper => {
            let cert = match &doc.sets {
                PointSets::Plain(c) => c
                    .clone()
                    .with_mode(PierceMode::OutsideSegment)
                    .map_err(|e| e.to_string())
                    .and_then(|c| {
                        let st = extract_cyclic_structure(&c).map_err(|e| e.to_string())?;
                        certify_cubic(&c, &st, Strategy::Seeded).map_err(|e| e.to_string())
                    }),
                PointSets::Bipartite(bc) => extract_bipartite_structure(bc)
                    .map_err(|e| e.to_string())
                    .and_then(|st| certify_bipartite_cubic(bc, &st, Strategy::Seeded).map_err(|e: CubicError| e.to_string())),
            };
            cert.map(|cert| {
                rep.steps = cert
                    .steps
                    .iter()
                    .map(|s| StepRow { family: format!("{:?}", s.family), shift: s.shift, added: point_name(s.added) })
                    .collect();
                (cert.cubic, cert.kernel_dim, cert.strategy)
            })
        }
    };
    match result {
        Ok((cubic, dim, used)) => {
            rep.strategy_used = Some(match used {
                Strategy::Direct => "direct",
                Strategy::Seeded => "paper",
            });
            rep.vanishing = all.iter().map(|p| VanishRow { point: pt(p), value: Int(cubic.eval(p)) }).collect();
            rep.matches_stored = doc.cubic.as_ref().map(|s| *s == cubic);
            rep.cubic = Some(cubic.coeffs().iter().cloned().map(Int).collect());
            rep.kernel_dim = Some(dim);
        }
        Err(e) => {
            rep.error = Some(e);
            rep.exit = EXIT_NEGATIVE;
        }
    }
    let code = rep.exit;
    json(rep, code)
}

fn histogram(optima: impl Iterator<Item = usize>) -> BTreeMap<String, usize> {
    let mut h = BTreeMap::new();
    for o in optima {
        *h.entry(o).or_insert(0) += 1;
    }
    // zero-padded keys keep numeric order in JSON
    h.into_iter().map(|(k, v)| (format!("{k:03}"), v)).collect()
}

fn exec(parallel: bool) -> Result<Exec, CliError> {
    if !parallel {
        return Ok(Exec::Sequential);
    }
    let e = Exec::default();
    if !e.is_parallel() {
        return Err(CliError::Usage("--parallel needs a build with the `parallel` feature".into()));
    }
    Ok(e)
}

fn search(args: &SearchArgs) -> Outcome {
    let mode: PierceMode = args.mode.into();
    let exec = exec(args.parallel)?;
    if let Some(path) = &args.input {
        let doc = load(path)?;
        let p = match &doc.sets {
            PointSets::Plain(c) => c.p().to_vec(),
            PointSets::Bipartite(bc) => bc.colored_points(),
        };
        let res = min_pierce_with(&p, mode, exec).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let row = InstanceRow {
            trial: None,
            seed: None,
            p: pts(&p),
            optimum: res.optimum,
            r: pts(&res.witness.r),
            free_points: res.witness.singles.len(),
            candidates: res.candidates,
            nodes: res.nodes,
        };
        return json(
            SearchReport {
                command: "search",
                mode: mode.to_string(),
                n: p.len(),
                input: Some(path.display().to_string()),
                trials: 1,
                seed: args.seed,
                bound: args.bound,
                parallel: args.parallel,
                histogram: histogram(std::iter::once(res.optimum)),
                min_optimum: Some(res.optimum),
                instances: vec![row],
                exit: EXIT_OK,
            },
            EXIT_OK,
        );
    }
    if args.n < 2 || args.n > SEARCH_MAX_N {
        return Err(CliError::Usage(format!("--n must be between 2 and {SEARCH_MAX_N}, got {}", args.n)));
    }
    if args.scan_conjecture {
        let opts = ScanOptions { bound: args.bound, cap: args.cap, mode, exec };
        let rep = conjecture_scan(args.n, args.trials, args.seed, opts).map_err(|e| CliError::Usage(e.to_string()))?;
        let code = verdict(rep.falsifications.is_empty());
        return json(
            ScanReport {
                command: "search",
                scan: "conjecture",
                mode: mode.to_string(),
                n: rep.n,
                trials: rep.trials,
                seed: rep.seed,
                bound: args.bound,
                cap: args.cap,
                parallel: args.parallel,
                histogram: histogram(rep.histogram.iter().flat_map(|(&k, &v)| std::iter::repeat_n(k, v))),
                in_hypothesis: rep.in_hypothesis,
                below_n: rep.below_n,
                witnesses_tested: rep.witnesses_tested,
                falsification_count: rep.falsifications.len(),
                falsifications: rep
                    .falsifications
                    .iter()
                    .map(|f| FalsificationRow { trial: f.trial, p: pts(&f.p), r: pts(&f.r) })
                    .collect(),
                trials_detail: rep
                    .per_trial
                    .iter()
                    .map(|t| ScanRow {
                        trial: t.trial,
                        seed: t.seed,
                        optimum: t.optimum,
                        witnesses_tested: t.witnesses_tested,
                        truncated: t.truncated,
                    })
                    .collect(),
                note: rep.note,
                exit: code,
            },
            code,
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let seeds: Vec<u64> = (0..args.trials).map(|_| rng.random()).collect();
    let rows = exec.map_range(args.trials, |t| -> Result<InstanceRow, String> {
        let p = gen_random_general_position(args.n, args.bound, seeds[t]).map_err(|e| e.to_string())?;
        let res = min_pierce_with(&p, mode, Exec::Sequential).map_err(|e| e.to_string())?;
        Ok(InstanceRow {
            trial: Some(t),
            seed: Some(seeds[t]),
            p: pts(&p),
            optimum: res.optimum,
            r: pts(&res.witness.r),
            free_points: res.witness.singles.len(),
            candidates: res.candidates,
            nodes: res.nodes,
        })
    });
    let rows: Vec<InstanceRow> = rows.into_iter().collect::<Result<_, _>>().map_err(CliError::Usage)?;
    json(
        SearchReport {
            command: "search",
            mode: mode.to_string(),
            n: args.n,
            input: None,
            trials: args.trials,
            seed: args.seed,
            bound: args.bound,
            parallel: args.parallel,
            histogram: histogram(rows.iter().map(|r| r.optimum)),
            min_optimum: rows.iter().map(|r| r.optimum).min(),
            instances: rows,
            exit: EXIT_OK,
        },
        EXIT_OK,
    )
}

fn render(path: &Path, out: &Path, lines: bool) -> Outcome {
    let doc = load(path)?;
    let svg = render_svg(&doc, &RenderOptions { lines });
    std::fs::write(out, &svg.text).map_err(|source| CliError::Write { path: out.into(), source })?;
    json(
        RenderReport {
            command: "render",
            file: path.display().to_string(),
            out: out.display().to_string(),
            glyphs: svg.glyphs,
            arrows: svg.arrows,
            lines: svg.lines,
            exit: EXIT_OK,
        },
        EXIT_OK,
    )
}

fn oracle_cmd(path: &Path, exhaustive: bool) -> Outcome {
    let doc = load(path)?;
    if exhaustive {
        let n = match &doc.sets {
            PointSets::Plain(c) => c.n(),
            PointSets::Bipartite(_) => {
                return Err(CliError::Usage("exhaustive search applies to plain configurations only".into()))
            }
        };
        if n > EXHAUSTIVE_MAX_N {
            return Err(CliError::Usage(format!(
                "refusing exhaustive search for n = {n}; it is limited to n <= {EXHAUSTIVE_MAX_N}"
            )));
        }
    }
    let fast = oracle::facts(&doc, exhaustive);
    let slow = oracle::oracle_facts(&doc, &fast, exhaustive);
    let mismatches = oracle::diff(&fast, &slow);
    let names = ["piercing", "hull", "structure", "cubic_kernel", "stored_cubic", "optimum"];
    let checks = names.iter().map(|&check| CheckRow { check, agree: mismatches.iter().all(|m| m.check != check) }).collect();
    let positive = fast.violations.is_empty() && fast.stored_cubic_vanishes != Some(false);
    let code = if !mismatches.is_empty() {
        EXIT_ORACLE_MISMATCH
    } else {
        verdict(positive)
    };
    json(
        OracleReport {
            command: "oracle",
            file: path.display().to_string(),
            exhaustive,
            checks,
            mismatches: mismatches
                .into_iter()
                .map(|m| MismatchRow { check: m.check, fast: m.fast, oracle: m.oracle })
                .collect(),
            verdict_positive: positive,
            exit: code,
        },
        code,
    )
}
