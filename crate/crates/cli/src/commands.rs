use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use geomonoid::cayley::{
    ball_to_dot, ball_to_json, check_quasimetric_in, metric_by_name, schutzenberger_graph,
    strongly_connected_components, CayleyBall, DistValue, Edge, ExtendedDistance, QuasimetricVerdict, Semimetric,
    UndirectedView, VertexId,
};
use geomonoid::complex::{build_kn, check_qsc, gamma_sample, homotopy_search, two_path_to_json, DirectedPath,
    HomotopyOutcome, QscVerdict};
use geomonoid::families::{f2_ball, mx_alphabet, mx_ball_with_budget, mx_isometry_check, mx_normal_form_traced,
    mx_word_problem};
use geomonoid::presentation::{Presentation, Relations};
use geomonoid::qi::{
    check_bushy_hypotheses, check_quasi_dense_in, m_bound, parse_rational, quasi_inverse_in, type_leq,
    type_witness_search, verify_qi_embedding_in, DensityVerdict, EmbeddingVerdict, QiSpec,
    TypeVerdict,
};
use geomonoid::rewriting::{dehn_sample_with_budget, equality_search_with_budget, normal_form_confluent, Status};
use geomonoid::{Error, GrowthTable, GrowthValue, Result};

use crate::input;
use crate::{BallArgs, Cli, Command, Format, PairArgs, SpecArgs};

const DEFAULT_DEPTH: usize = 6;

pub struct Output {
    pub text: String,
    pub definite: bool,
}

fn definite(text: String) -> Output {
    Output { text, definite: true }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("output serializes")
}

fn unsupported(f: Format) -> Error {
    Error::Parse(format!("this subcommand has no {f:?} output"))
}

struct Ctx {
    depth: Option<usize>,
    budget: usize,
    format: Option<Format>,
    seed: u64,
}

impl Ctx {
    fn depth(&self) -> usize {
        self.depth.unwrap_or(DEFAULT_DEPTH)
    }

    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(unsupported(f))
        }
    }

    fn ball(&self, args: &BallArgs) -> Result<(Presentation, CayleyBall)> {
        let p = input::presentation(&args.pres)?;
        let b = input::ball(&p, args.radius, self.depth(), self.budget)?;
        Ok((p, b))
    }

    /// Distances on a ball; `subspace` searches to depth `--depth`, or `2L`.
    fn metric(&self, name: &str, p: &Presentation, b: &CayleyBall) -> Result<Box<dyn Semimetric>> {
        metric_by_name(name, b, p, self.depth.unwrap_or(2 * b.radius()))
    }
}

fn spec(s: &SpecArgs) -> Result<QiSpec> {
    QiSpec::new(parse_rational(&s.lambda)?, parse_rational(&s.eps)?, parse_rational(&s.mu)?)
}

pub fn run(cli: &Cli) -> Result<Output> {
    let ctx = Ctx {
        depth: cli.depth,
        budget: cli.budget,
        format: cli.format,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Parse { pres } => parse(&ctx, pres),
        Command::Nf { pres, w } => {
            let p = input::presentation(pres)?;
            let nf = normal_form_confluent(&input::word(&p, w)?, &p)?;
            let s = p.alphabet().render_tokens(&nf);
            match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => Ok(definite(json(&serde_json::json!({ "word": s })))),
                _ => Ok(definite(s)),
            }
        }
        Command::Area { pres, u, v } => area(&ctx, pres, u, v),
        Command::Dehn { pres, n_max } => {
            let p = input::presentation(pres)?;
            let t = dehn_sample_with_budget(&p, *n_max, ctx.depth(), ctx.budget)?;
            growth_output(&ctx, &t)
        }
        Command::Ball { ball } => {
            let (_, b) = ctx.ball(ball)?;
            Ok(Output {
                text: render_ball(&ctx, &b)?,
                definite: b.is_certified(),
            })
        }
        Command::Dist {
            ball,
            x,
            y,
            pairs,
            metric,
        } => dist(&ctx, ball, x.as_deref(), y.as_deref(), *pairs, metric),
        Command::Qmetric {
            ball,
            lambda,
            mu,
            metric,
        } => {
            let (p, b) = ctx.ball(ball)?;
            let m = ctx.metric(metric, &p, &b)?;
            let rep = check_quasimetric_in(m.as_ref(), parse_rational(lambda)?, parse_rational(mu)?);
            let (name, witness) = match rep.verdict {
                QuasimetricVerdict::Pass => ("pass", None),
                QuasimetricVerdict::Counterexample(a, c) => ("counterexample", Some([a, c])),
            };
            Ok(definite(json(&Verdict {
                verdict: name,
                witness,
                skipped: rep.skipped,
            })))
        }
        Command::Scc { ball } => scc(&ctx, ball),
        Command::Schutz { ball, h } => schutz(&ctx, ball, h),
        Command::KnCells { ball, n, root } => kn_cells(&ctx, ball, *n, root),
        Command::Homotopy {
            ball,
            n,
            root,
            p,
            q,
            full,
        } => homotopy(&ctx, ball, *n, root, p, q, *full),
        Command::Gamma { ball, n, i_max, roots } => {
            let (_, b) = ctx.ball(ball)?;
            let k = build_kn(&b, *n)?;
            let roots = input::vertex_list(&b, roots)?;
            let t = gamma_sample(&k, *i_max, &roots, ctx.budget)?;
            growth_output(&ctx, &t)
        }
        Command::Qsc { ball, n, i_max } => qsc(&ctx, ball, *n, *i_max),
        Command::QiCheck { spaces, map, spec: s } => {
            let ((xb, x), (_, y)) = spaces_of(&ctx, spaces)?;
            let f = input::vertex_map(map, xb.len(), y.size())?;
            let rep = verify_qi_embedding_in(x.as_ref(), y.as_ref(), &f, &spec(s)?)?;
            Ok(Output {
                text: json(&rep),
                definite: rep.verdict != EmbeddingVerdict::Inconclusive,
            })
        }
        Command::QiDensity {
            ball,
            image,
            mu,
            metric,
        } => {
            let (p, b) = ctx.ball(ball)?;
            let m = ctx.metric(metric, &p, &b)?;
            let rep = check_quasi_dense_in(m.as_ref(), &input::id_set(image)?, parse_rational(mu)?)?;
            Ok(Output {
                text: json(&rep),
                definite: rep.verdict != DensityVerdict::Inconclusive,
            })
        }
        Command::QiInverse { spaces, map, spec: s } => {
            let ((_, x), (yb, y)) = spaces_of(&ctx, spaces)?;
            let g = input::vertex_map(map, yb.len(), x.size())?;
            let out = quasi_inverse_in(x.as_ref(), y.as_ref(), &g, &spec(s)?)?;
            Ok(definite(json(&Verdict {
                verdict: "pass",
                witness: Some(&out),
                skipped: 0,
            })))
        }
        Command::Mbound { spec: s, n } => {
            let m = m_bound(&spec(s)?, *n);
            match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => Ok(definite(json(&serde_json::json!({ "m": m })))),
                _ => Ok(definite(m.to_string())),
            }
        }
        Command::TypeCmp { f, g, a, a_max } => {
            let (f, g) = (input::growth_table(f)?, input::growth_table(g)?);
            if let Some(a_max) = a_max {
                let found = type_witness_search(&f, &g, *a_max)?;
                let verdict = if found.is_some() { "holds" } else { "no witness up to a_max" };
                return Ok(Output {
                    text: json(&Verdict {
                        verdict,
                        witness: found,
                        skipped: 0,
                    }),
                    definite: found.is_some(),
                });
            }
            let rep = type_leq(&f, &g, a.unwrap_or(1))?;
            Ok(Output {
                text: json(&rep),
                definite: rep.verdict != TypeVerdict::Inconclusive,
            })
        }
        Command::Bushy { ball, floor, cap } => {
            let (_, b) = ctx.ball(ball)?;
            let rep = check_bushy_hypotheses(&UndirectedView::from_ball(&b), *floor, *cap)?;
            Ok(definite(json(&rep)))
        }
        Command::MxNf { x, w } => {
            let oracle = input::oracle(x)?;
            let alph = mx_alphabet();
            let (nf, weight) = mx_normal_form_traced(&alph.parse_word_lenient(w)?, oracle.as_ref())?;
            let s = alph.render(nf.word());
            match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => Ok(definite(json(&MxNfJson {
                    word: s,
                    query_weight: weight,
                }))),
                _ => Ok(definite(s)),
            }
        }
        Command::MxWp { x, u, v } => {
            let oracle = input::oracle(x)?;
            let alph = mx_alphabet();
            let eq = mx_word_problem(&alph.parse_word_lenient(u)?, &alph.parse_word_lenient(v)?, oracle.as_ref())?;
            Ok(definite(json(&serde_json::json!({ "equal": eq }))))
        }
        Command::MxBall { x, radius } => {
            let oracle = input::oracle(x)?;
            let b = mx_ball_with_budget(oracle.as_ref(), *radius, ctx.budget)?;
            Ok(definite(render_ball(&ctx, &b)?))
        }
        Command::MxIso { x, y, radius } => {
            let rep = mx_isometry_check(input::oracle(x)?.as_ref(), input::oracle(y)?.as_ref(), *radius)?;
            let out = IsoJson {
                verdict: if rep.pass { "pass" } else { "counterexample" },
                witness: rep.counterexample,
                labels_differ: rep.labels_differ,
            };
            Ok(definite(json(&out)))
        }
        Command::F2Ball { radius } => {
            let (b, view) = f2_ball(*radius)?;
            if ctx.format == Some(Format::Text) {
                return Ok(definite(format!(
                    "vertices {}\nedges {}\ninterior degrees {:?}\ntree {}\n",
                    b.len(),
                    view.edge_count(),
                    view.interior_degrees(),
                    view.is_tree()
                )));
            }
            Ok(definite(render_ball(&ctx, &b)?))
        }
    }
}

#[derive(Serialize)]
struct Verdict<W: Serialize> {
    verdict: &'static str,
    witness: Option<W>,
    skipped: usize,
}

#[derive(Serialize)]
struct AreaJson {
    status: Status,
    area: Option<usize>,
}

#[derive(Serialize)]
struct MxNfJson {
    word: String,
    query_weight: usize,
}

#[derive(Serialize)]
struct IsoJson {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<VertexId>,
    labels_differ: bool,
}

fn parse(ctx: &Ctx, pres: &str) -> Result<Output> {
    #[derive(Serialize)]
    struct PresJson<'a> {
        name: &'a str,
        generators: &'a [String],
        relations: Option<Vec<[String; 2]>>,
        oracle: Option<String>,
        certified: bool,
        homogeneous: bool,
    }
    let p = input::presentation(pres)?;
    match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => {
            let a = p.alphabet();
            let (relations, oracle) = match p.relations() {
                Relations::Finite(rs) => (
                    Some(rs.iter().map(|r| [a.render_tokens(&r.lhs), a.render_tokens(&r.rhs)]).collect()),
                    None,
                ),
                Relations::Oracle(o) => (None, Some(o.describe())),
            };
            Ok(definite(json(&PresJson {
                name: p.name(),
                generators: a.names(),
                relations,
                oracle,
                certified: p.is_certified(),
                homogeneous: p.is_graded(),
            })))
        }
        _ => match p.to_text() {
            Some(t) => Ok(definite(t)),
            None => Err(Error::NotEnumerable(format!("{} has no finite relation list to print", p.name()))),
        },
    }
}

fn area(ctx: &Ctx, pres: &str, u: &str, v: &str) -> Result<Output> {
    let p = input::presentation(pres)?;
    let (u, v) = (input::word(&p, u)?, input::word(&p, v)?);
    let verdict = equality_search_with_budget(&u, &v, &p, ctx.depth(), ctx.budget)?;
    Ok(Output {
        text: json(&AreaJson {
            status: verdict.status,
            area: verdict.area,
        }),
        definite: verdict.status != Status::Unknown,
    })
}

fn growth_output(ctx: &Ctx, t: &GrowthTable) -> Result<Output> {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        value: String,
    }
    let text = match ctx.format(Format::Csv, &[Format::Csv, Format::Json])? {
        Format::Json => json(
            &t.iter()
                .map(|(n, v)| Row { n, value: v.to_string() })
                .collect::<Vec<_>>(),
        ),
        _ => t.to_csv(),
    };
    Ok(Output {
        text,
        definite: t.iter().all(|(_, v)| v != GrowthValue::Unknown),
    })
}

fn render_ball(ctx: &Ctx, b: &CayleyBall) -> Result<String> {
    Ok(match ctx.format(Format::Json, &[Format::Json, Format::Dot, Format::Text])? {
        Format::Dot => ball_to_dot(b),
        Format::Text => {
            let mut s = String::new();
            for v in b.vertices() {
                let mark = if b.is_frontier(v.id) { " *" } else { "" };
                s.push_str(&format!("{} {} {}{mark}\n", v.id, b.render(v.id), v.len));
            }
            for e in b.edges() {
                s.push_str(&format!("{} -{}-> {}\n", e.src, b.alphabet().name(e.label), e.dst));
            }
            s
        }
        _ => ball_to_json(b),
    })
}

fn dist(
    ctx: &Ctx,
    args: &BallArgs,
    x: Option<&str>,
    y: Option<&str>,
    pairs: Option<usize>,
    metric: &str,
) -> Result<Output> {
    #[derive(Serialize)]
    struct PairJson {
        x: VertexId,
        y: VertexId,
        distance: ExtendedDistance,
    }
    let (p, b) = ctx.ball(args)?;
    let m = ctx.metric(metric, &p, &b)?;
    let chosen: Vec<(VertexId, VertexId)> = match (x, y, pairs) {
        (Some(x), Some(y), None) => vec![(input::vertex(&b, x)?, input::vertex(&b, y)?)],
        (None, None, Some(k)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            (0..k).map(|_| (rng.gen_range(0..b.len()), rng.gen_range(0..b.len()))).collect()
        }
        _ => return Err(Error::Parse("give either --x and --y, or --pairs".into())),
    };
    let ds: Vec<ExtendedDistance> = chosen.iter().map(|&(a, c)| m.dist(a, c)).collect();
    let definite = ds.iter().all(|d| d.value != DistValue::Unresolved);
    let text = if pairs.is_none() {
        json(&ds[0])
    } else {
        json(
            &chosen
                .iter()
                .zip(&ds)
                .map(|(&(x, y), d)| PairJson {
                    x,
                    y,
                    distance: *d,
                })
                .collect::<Vec<_>>(),
        )
    };
    Ok(Output { text, definite })
}

fn scc(ctx: &Ctx, args: &BallArgs) -> Result<Output> {
    #[derive(Serialize)]
    struct CompJson {
        vertices: Vec<VertexId>,
        reprs: Vec<String>,
        approximate: bool,
    }
    let (_, b) = ctx.ball(args)?;
    let comps = strongly_connected_components(&b);
    let definite = comps.iter().all(|c| !c.approximate);
    let out: Vec<CompJson> = comps
        .into_iter()
        .map(|c| CompJson {
            reprs: c.vertices.iter().map(|&v| b.render(v)).collect(),
            vertices: c.vertices,
            approximate: c.approximate,
        })
        .collect();
    Ok(Output {
        text: json(&out),
        definite,
    })
}

fn schutz(ctx: &Ctx, args: &BallArgs, h: &str) -> Result<Output> {
    #[derive(Serialize)]
    struct EdgeJson {
        src: VertexId,
        label: String,
        dst: VertexId,
    }
    #[derive(Serialize)]
    struct GraphJson {
        vertices: Vec<VertexId>,
        reprs: Vec<String>,
        edges: Vec<EdgeJson>,
        approximate: bool,
    }
    let (_, b) = ctx.ball(args)?;
    let g = schutzenberger_graph(&b, input::vertex(&b, h)?)?;
    let label = |e: &Edge| b.alphabet().name(e.label).to_string();
    let text = match ctx.format(Format::Json, &[Format::Json, Format::Dot])? {
        Format::Dot => {
            let mut s = String::from("digraph schutzenberger {\n");
            for &v in &g.vertices {
                s.push_str(&format!("  {v} [label=\"{}\"];\n", b.render(v)));
            }
            for e in &g.edges {
                s.push_str(&format!("  {} -> {} [label=\"{}\"];\n", e.src, e.dst, label(e)));
            }
            s.push_str("}\n");
            s
        }
        _ => json(&GraphJson {
            reprs: g.vertices.iter().map(|&v| b.render(v)).collect(),
            vertices: g.vertices.clone(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeJson {
                    src: e.src,
                    label: label(e),
                    dst: e.dst,
                })
                .collect(),
            approximate: g.approximate,
        }),
    };
    Ok(Output {
        text,
        definite: !g.approximate,
    })
}

fn kn_cells(ctx: &Ctx, args: &BallArgs, n: usize, root: &str) -> Result<Output> {
    #[derive(Serialize)]
    struct CellJson {
        top: String,
        bottom: String,
        top_edges: Vec<usize>,
        bottom_edges: Vec<usize>,
    }
    let (_, b) = ctx.ball(args)?;
    let k = build_kn(&b, n)?;
    let cells = k.cells_rooted_at(input::vertex(&b, root)?)?;
    let text = match ctx.format(Format::Json, &[Format::Json, Format::Text])? {
        Format::Text => cells
            .iter()
            .map(|c| format!("{} => {}\n", c.top.render(&b), c.bottom.render(&b)))
            .collect(),
        _ => json(
            &cells
                .iter()
                .map(|c| CellJson {
                    top: c.top.render(&b),
                    bottom: c.bottom.render(&b),
                    top_edges: c.top.edges().to_vec(),
                    bottom_edges: c.bottom.edges().to_vec(),
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok(definite(text))
}

fn labels(b: &CayleyBall, text: &str) -> Result<Vec<geomonoid::Gen>> {
    Ok(b.alphabet().parse_word_lenient(text)?.symbols().to_vec())
}

fn homotopy(ctx: &Ctx, args: &BallArgs, n: usize, root: &str, p: &str, q: &str, full: bool) -> Result<Output> {
    #[derive(Serialize)]
    struct HomotopyJson {
        status: &'static str,
        area: Option<usize>,
        visited: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        two_path: Option<Box<serde_json::value::RawValue>>,
    }
    let (_, b) = ctx.ball(args)?;
    let k = build_kn(&b, n)?;
    let start = input::vertex(&b, root)?;
    let p = DirectedPath::from_labels(&b, start, &labels(&b, p)?)?;
    let q = DirectedPath::from_labels(&b, start, &labels(&b, q)?)?;
    let out = match homotopy_search(&k, &p, &q, ctx.budget)? {
        HomotopyOutcome::Found(t) => HomotopyJson {
            status: "found",
            area: Some(t.len()),
            visited: None,
            two_path: full.then(|| serde_json::value::RawValue::from_string(two_path_to_json(&t)).expect("valid json")),
        },
        HomotopyOutcome::Exhausted { visited } => HomotopyJson {
            status: "not_homotopic_in_ball",
            area: None,
            visited: Some(visited),
            two_path: None,
        },
        HomotopyOutcome::BudgetExhausted { visited } => HomotopyJson {
            status: "budget_exhausted",
            area: None,
            visited: Some(visited),
            two_path: None,
        },
    };
    let definite = out.status != "budget_exhausted";
    Ok(Output {
        text: json(&out),
        definite,
    })
}

fn qsc(ctx: &Ctx, args: &BallArgs, n: usize, i_max: usize) -> Result<Output> {
    #[derive(Serialize)]
    struct QscJson {
        verdict: &'static str,
        witness: Option<[String; 2]>,
        pairs_checked: usize,
        inconclusive_pairs: usize,
    }
    let (_, b) = ctx.ball(args)?;
    let rep = check_qsc(&b, n, i_max, ctx.budget)?;
    let (verdict, witness) = match &rep.verdict {
        QscVerdict::Pass => ("pass", None),
        QscVerdict::Fail(p, q) => ("fail", Some([p.render(&b), q.render(&b)])),
        QscVerdict::Inconclusive => ("inconclusive", None),
    };
    Ok(Output {
        text: json(&QscJson {
            verdict,
            witness,
            pairs_checked: rep.pairs_checked,
            inconclusive_pairs: rep.inconclusive_pairs,
        }),
        definite: verdict != "inconclusive",
    })
}

type Space = (CayleyBall, Box<dyn Semimetric>);

fn space(ctx: &Ctx, pres: &str, radius: usize, metric: &str) -> Result<Space> {
    let p = input::presentation(pres)?;
    let b = input::ball(&p, radius, ctx.depth(), ctx.budget)?;
    let m = metric_by_name(metric, &b, &p, ctx.depth.unwrap_or(2 * radius))?;
    Ok((b, m))
}

fn spaces_of(ctx: &Ctx, s: &PairArgs) -> Result<(Space, Space)> {
    Ok((
        space(ctx, &s.x_pres, s.x_radius, &s.metric)?,
        space(ctx, &s.y_pres, s.y_radius, &s.metric)?,
    ))
}
