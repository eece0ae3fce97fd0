//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
//!
//! Every expected value is recomputed here by a small independent oracle
//! (plain BFS on strings or edge lists, brute-force enumeration, integer
//! fractions) rather than read back from the library.

mod common;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use geomonoid::cayley::{
    enumerate_ball, enumerate_ball_with, schutzenberger_graph, strongly_connected_components, BallMetric,
    BallOptions, CayleyBall, DistValue, Semimetric, SubspaceMetric, UndirectedView, VertexId,
};
use geomonoid::complex::{build_kn, check_qsc, gamma_sample, homotopy_search, DirectedPath, HomotopyOutcome, QscVerdict};
use geomonoid::families::{f2_ball, mx_ball, mx_isometry_check, mx_word_problem, parse_oracle, A, B, C, D};
use geomonoid::presentation::builtin;
use geomonoid::qi::{check_bushy_hypotheses, inverse_constants, m_bound, quasi_inverse_in, BushyVerdict, QiSpec, VertexMap};
use geomonoid::rewriting::{dehn_sample, equality_search, Status};
use geomonoid::{GrowthValue, Rational, Word};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Shortest directed distances inside the ball, ignoring every truncation rule.
fn edge_bfs(b: &CayleyBall, from: VertexId, undirected: bool) -> Vec<Option<u64>> {
    let mut adj = vec![Vec::new(); b.len()];
    for e in b.edges() {
        adj[e.src].push(e.dst);
        if undirected {
            adj[e.dst].push(e.src);
        }
    }
    let mut dist = vec![None; b.len()];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(dist[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn oracle_table(b: &CayleyBall, undirected: bool) -> Vec<Vec<Option<u64>>> {
    (0..b.len()).map(|x| edge_bfs(b, x, undirected)).collect()
}

fn semimetric_axioms() -> Result<String, String> {
    let mut triples = 0u64;
    for (name, radius) in [("free(2)", 5), ("bicyclic", 5), ("free_commutative_2", 6)] {
        let b = lib(enumerate_ball(&lib(builtin(name))?, radius, 8))?;
        let m = BallMetric::new(&b);
        let truth = oracle_table(&b, false);
        let n = b.len();
        let mut exact = vec![vec![None; n]; n];
        for x in 0..n {
            for y in 0..n {
                let d = m.dist(x, y);
                let t = truth[x][y];
                match d.value {
                    DistValue::Finite(k) => ensure(t == Some(k), || format!("{name}: d({x},{y}) = {k}, oracle {t:?}"))?,
                    DistValue::Infinite => ensure(t.is_none(), || format!("{name}: d({x},{y}) = inf, oracle {t:?}"))?,
                    DistValue::Unresolved => ensure(t.is_none_or(|k| k > d.bound), || {
                        format!("{name}: d({x},{y}) unresolved at bound {}, oracle {t:?}", d.bound)
                    })?,
                }
                exact[x][y] = d.exact_value();
            }
            ensure(exact[x][x] == Some(Some(0)), || format!("{name}: d({x},{x}) != 0"))?;
        }
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = exact[x][y] else { continue };
                for (yz, xz) in exact[y].iter().zip(&exact[x]) {
                    let (&Some(yz), &Some(xz)) = (yz, xz) else { continue };
                    triples += 1;
                    let ok = match (xz, xy, yz) {
                        (None, Some(_), Some(_)) => false,
                        (Some(a), Some(b1), Some(b2)) => a <= b1 + b2,
                        _ => true,
                    };
                    ensure(ok, || format!("{name}: triangle fails from {x} through {y}: {xy:?} + {yz:?} < {xz:?}"))?;
                }
            }
        }
    }
    Ok(format!("{triples} exact triples, zero violations"))
}

/// Minimal number of insertions or deletions of `ab` turning u into v, up to `depth`.
fn bicyclic_area(u: &str, v: &str, depth: usize) -> Option<usize> {
    let mut seen: HashSet<String> = HashSet::from([u.to_string()]);
    let mut layer = vec![u.to_string()];
    for d in 0..=depth {
        if layer.iter().any(|w| w == v) {
            return Some(d);
        }
        let mut next = Vec::new();
        for w in &layer {
            let mut moves = Vec::new();
            for i in 0..=w.len() {
                moves.push(format!("{}ab{}", &w[..i], &w[i..]));
                if w[i..].starts_with("ab") {
                    moves.push(format!("{}{}", &w[..i], &w[i + 2..]));
                }
            }
            for m in moves {
                if seen.insert(m.clone()) {
                    next.push(m);
                }
            }
        }
        layer = next;
    }
    None
}

fn strings_up_to(alphabet: &[char], n: usize) -> Vec<String> {
    let mut all = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |c| format!("{w}{c}")))
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn area_oracle() -> Result<String, String> {
    let p = lib(builtin("bicyclic"))?;
    let words = strings_up_to(&['a', 'b'], 6);
    let mut pairs = 0;
    for u in &words {
        for v in &words {
            if u.len() + v.len() > 6 {
                continue;
            }
            pairs += 1;
            let expected = bicyclic_area(u, v, (u.len() + v.len()) / 2);
            let ab = |w: &str| Word(w.bytes().map(|c| (c - b'a') as u16).collect());
            let (wu, wv) = (ab(u), ab(v));
            let got = lib(equality_search(&wu, &wv, &p, 10))?;
            let ok = match expected {
                Some(a) => got.status == Status::Equal && got.area == Some(a),
                None => got.status == Status::NotEqual,
            };
            ensure(ok, || format!("A({u:?},{v:?}): library {got:?}, oracle {expected:?}"))?;
        }
    }
    let delta = lib(dehn_sample(&p, 4, 10))?;
    ensure(delta.get(4) == Some(GrowthValue::Finite(2)), || format!("bicyclic delta(4) = {:?}", delta.get(4)))?;
    let free = lib(dehn_sample(&lib(builtin("free(2)"))?, 6, 10))?;
    ensure(free.iter().all(|(_, v)| v == GrowthValue::Finite(0)), || format!("free(2) dehn {free:?}"))?;
    Ok(format!("{pairs} pairs agree; delta_bicyclic(4) = 2; delta_free(2) = 0 up to 6"))
}

/// Adjacent-transposition distance between two binary words with equal content.
fn swap_distance(p: &str, q: &str) -> usize {
    let mut seen = HashSet::from([p.to_string()]);
    let mut queue = VecDeque::from([(p.to_string(), 0)]);
    while let Some((w, d)) = queue.pop_front() {
        if w == q {
            return d;
        }
        let bytes = w.as_bytes();
        for i in 0..bytes.len().saturating_sub(1) {
            if bytes[i] != bytes[i + 1] {
                let mut s = bytes.to_vec();
                s.swap(i, i + 1);
                let s = String::from_utf8(s).unwrap();
                if seen.insert(s.clone()) {
                    queue.push_back((s, d + 1));
                }
            }
        }
    }
    unreachable!("equal content words are always connected")
}

fn content(w: &str) -> usize {
    w.bytes().filter(|&c| c == b'a').count()
}

fn grid_complex() -> Result<String, String> {
    let p = lib(builtin("free_commutative_2"))?;
    let b = lib(enumerate_ball(&p, 10, 12))?;
    let budget = 1_000_000;
    let pass = lib(check_qsc(&b, 4, 6, budget))?;
    ensure(pass.verdict == QscVerdict::Pass, || format!("n=4: {:?}", pass.verdict))?;
    let fail = lib(check_qsc(&b, 2, 6, budget))?;
    match &fail.verdict {
        QscVerdict::Fail(x, y) => {
            let (x, y) = (x.render(&b), y.render(&b));
            ensure((x.as_str(), y.as_str()) == ("ab", "ba"), || format!("n=2 witness ({x}, {y})"))?;
        }
        v => return Err(format!("n=2: {v:?}")),
    }
    let k4 = lib(build_kn(&b, 4))?;
    let labels = |s: &str| lib(p.alphabet().parse_word_lenient(s)).map(|w| w.0);
    let top = lib(DirectedPath::from_labels(&b, 0, &labels("aabb")?))?;
    let bottom = lib(DirectedPath::from_labels(&b, 0, &labels("bbaa")?))?;
    let area = match lib(homotopy_search(&k4, &top, &bottom, budget))? {
        HomotopyOutcome::Found(t) => t.len(),
        other => return Err(format!("aabb ~ bbaa: {other:?}")),
    };
    let inversions = swap_distance("aabb", "bbaa");
    ensure(area == inversions, || format!("A(aabb, bbaa) = {area}, oracle {inversions}"))?;
    ensure(area == 4, || format!("A(aabb, bbaa) = {area}"))?;

    // parallel paths from the origin carry words of equal content, and
    // the only cells of K_4 are the commutations ab <-> ba
    let words = strings_up_to(&['a', 'b'], 4);
    let mut oracle = [0u64; 9];
    for q in &words {
        for r in &words {
            if q.len() == r.len() && content(q) == content(r) {
                let t = q.len() + r.len();
                oracle[t] = oracle[t].max(swap_distance(q, r) as u64);
            }
        }
    }
    for i in 1..oracle.len() {
        oracle[i] = oracle[i].max(oracle[i - 1]);
    }
    let gamma = lib(gamma_sample(&k4, 8, &[0], budget))?;
    let got: Vec<GrowthValue> = gamma.iter().map(|(_, v)| v).collect();
    let want: Vec<GrowthValue> = oracle.iter().map(|&v| GrowthValue::Finite(v)).collect();
    ensure(got == want, || format!("gamma {got:?}, oracle {want:?}"))?;
    Ok(format!(
        "qsc n=4 passes ({} pairs), n=2 fails at (ab, ba), A = 4, gamma(8) = {}",
        pass.pairs_checked, oracle[8]
    ))
}

/// d(a,b) for the independent oracle; None is infinity.
type Table = Vec<Vec<Option<u64>>>;

fn q(n: u64) -> Rational {
    Rational::from_integer(n as i64)
}

/// Smallest eps with both embedding inequalities at this lambda, or None if
/// some finite distance is sent to infinity or vice versa.
fn oracle_slack(dx: &Table, dy: &Table, g: &[usize], lambda: Rational) -> Option<Rational> {
    let mut eps = Rational::from_integer(0);
    for a in 0..dx.len() {
        for b in 0..dx.len() {
            match (dx[a][b], dy[g[a]][g[b]]) {
                (None, None) => {}
                (Some(s), Some(t)) => {
                    eps = eps.max(q(s) / lambda - q(t)).max(q(t) - lambda * q(s));
                }
                _ => return None,
            }
        }
    }
    Some(eps)
}

fn is_embedding(dx: &Table, dy: &Table, f: &[usize], s: &QiSpec) -> bool {
    oracle_slack(dx, dy, f, s.lambda).is_some_and(|e| e <= s.eps)
}

/// Smallest radius at which `image` is dense in both directions.
fn density_radius(d: &Table, image: &BTreeSet<usize>) -> Option<u64> {
    (0..d.len())
        .map(|p| image.iter().filter_map(|&z| Some(d[p][z]?.max(d[z][p]?))).min())
        .try_fold(0, |acc, r| r.map(|r| acc.max(r)))
}

fn within(d: Option<u64>, r: Rational) -> bool {
    d.is_some_and(|k| q(k) <= r)
}

/// The four quasi-inverse conclusions plus the quasi-isometry claims, checked directly.
fn check_conclusions(dx: &Table, dy: &Table, f: &[usize], g: &[usize], s: &QiSpec, mu_prime: Rational) -> Result<(), String> {
    ensure(is_embedding(dx, dy, f, s), || "f is not an embedding".into())?;
    ensure(is_embedding(dy, dx, g, s), || "g is not an embedding".into())?;
    let im_f: BTreeSet<usize> = f.iter().copied().collect();
    let im_g: BTreeSet<usize> = g.iter().copied().collect();
    ensure(density_radius(dy, &im_f).is_some_and(|r| q(r) <= s.mu), || "im f is not mu-dense".into())?;
    ensure(density_radius(dx, &im_g).is_some_and(|r| q(r) <= s.mu), || "im g is not mu-dense".into())?;
    for y in 0..dy.len() {
        let fg = f[g[y]];
        ensure(within(dy[y][fg], s.mu) && within(dy[fg][y], s.mu), || format!("(i) at y = {y}"))?;
        ensure(g[fg] == g[y], || format!("(iii) at y = {y}"))?;
    }
    for x in 0..dx.len() {
        let gf = g[f[x]];
        ensure(within(dx[x][gf], mu_prime) && within(dx[gf][x], mu_prime), || format!("(ii) at x = {x}"))?;
        ensure(within(dx[x][gf], s.mu) && within(dx[gf][x], s.mu), || format!("(ii) at x = {x}"))?;
        ensure(f[gf] == f[x], || format!("(iv) at x = {x}"))?;
    }
    Ok(())
}

fn oracle_constants(l: Rational, e: Rational, m: Rational) -> (Rational, Rational, Rational) {
    let two = Rational::from_integer(2);
    let one = Rational::from_integer(1);
    let sigma = std::cmp::max((e + two * m) / l, l * (e + two * m));
    (l, std::cmp::max(e, sigma), std::cmp::max(m, e + one))
}

struct Space {
    ball: CayleyBall,
    metric: Box<dyn Semimetric>,
    table: Table,
}

fn f2_space(radius: usize) -> Result<Space, String> {
    let ball = lib(f2_ball(radius))?.0;
    let metric = Box::new(lib(SubspaceMetric::new(&ball, &lib(builtin("f2_group"))?, 2 * radius))?);
    // geodesics of a tree between points of a ball stay in the ball
    let table = oracle_table(&ball, true);
    Ok(Space { ball, metric, table })
}

fn directed_space(name: &str, radius: usize) -> Result<Space, String> {
    let ball = lib(enumerate_ball(&lib(builtin(name))?, radius, 4))?;
    let metric = Box::new(BallMetric::new(&ball));
    let table = oracle_table(&ball, false);
    Ok(Space { ball, metric, table })
}

/// Sends each reduced word of X to its prefix of the radius of Y, then jitters a few points.
fn truncation(x: &Space, y: &Space, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let r = y.ball.radius();
    let mut g: Vec<usize> = x
        .ball
        .vertices()
        .iter()
        .map(|v| {
            let prefix = Word::from_slice(&v.repr.symbols()[..v.len.min(r)]);
            y.ball.find(&prefix).expect("prefixes of reduced words are in the ball")
        })
        .collect();
    for _ in 0..rng.gen_range(0..3) {
        let i = rng.gen_range(0..g.len());
        g[i] = rng.gen_range(0..y.ball.len());
    }
    g
}

fn run_inverse(y: &Space, x: &Space, g: Vec<usize>, lambda: Rational, padded: &mut usize) -> Result<(), String> {
    let eps = oracle_slack(&y.table, &x.table, &g, lambda)
        .ok_or("map sends a finite distance to infinity")?
        .max(Rational::from_integer(1));
    let image: BTreeSet<usize> = g.iter().copied().collect();
    let mut mu = q(density_radius(&x.table, &image).ok_or("image is not dense")?);
    // d(y, fg(y)) is only bounded by lambda' eps', which can exceed eps' + 1
    if lambda * eps > eps + Rational::from_integer(1) && mu < lambda * eps {
        mu = lambda * eps;
        *padded += 1;
    }
    let given = lib(QiSpec::new(lambda, eps, mu))?;
    let gmap = lib(VertexMap::new(g.clone(), x.ball.len()))?;
    let inv = lib(quasi_inverse_in(x.metric.as_ref(), y.metric.as_ref(), &gmap, &given))?;
    let (l, e, m) = oracle_constants(lambda, eps, mu);
    ensure((inv.spec.lambda, inv.spec.eps, inv.spec.mu) == (l, e, m), || {
        format!("constants {} for {given}, oracle ({l}, {e}, {m})", inv.spec)
    })?;
    ensure(inverse_constants(&given) == inv.spec, || "constants disagree with inverse_constants".into())?;
    check_conclusions(&x.table, &y.table, inv.f.table(), &g, &inv.spec, mu)
}

fn quasi_inverses() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51);
    let f2: Vec<Space> = (0..=2).map(f2_space).collect::<Result<_, _>>()?;
    let lambdas = [Rational::from_integer(1), Rational::new(3, 2), Rational::from_integer(2)];
    let (mut runs, mut padded) = (0, 0);
    for i in 0..120 {
        let (yr, xr) = (rng.gen_range(1..=2), rng.gen_range(0..=2));
        let (y, x) = (&f2[yr], &f2[xr]);
        let g: Vec<usize> = if i % 2 == 0 {
            (0..y.ball.len()).map(|_| rng.gen_range(0..x.ball.len())).collect()
        } else {
            truncation(y, x, &mut rng)
        };
        let lambda = lambdas[rng.gen_range(0..lambdas.len())];
        run_inverse(y, x, g, lambda, &mut padded).map_err(|e| format!("f2 map #{i}: {e}"))?;
        runs += 1;
    }
    for radius in 1..=5 {
        let s = directed_space("free(1)", radius)?;
        run_inverse(&s, &s, (0..s.ball.len()).collect(), Rational::from_integer(1), &mut padded)
            .map_err(|e| format!("free(1) identity at L={radius}: {e}"))?;
        runs += 1;
    }
    for radius in 2..=4 {
        let s = directed_space("free_commutative_2", radius)?;
        let swap: Vec<usize> = s
            .ball
            .vertices()
            .iter()
            .map(|v| {
                // vertices are sorted words, in one order or the other
                let mut sym: Vec<_> = v.repr.symbols().iter().map(|&g| 1 - g).collect();
                sym.sort();
                let up = Word(sym.clone());
                sym.reverse();
                s.ball.find(&up).or_else(|| s.ball.find(&Word(sym))).expect("swapped vertex is in the ball")
            })
            .collect();
        for (what, g) in [("identity", (0..s.ball.len()).collect()), ("swap", swap)] {
            run_inverse(&s, &s, g, Rational::from_integer(1), &mut padded)
                .map_err(|e| format!("grid {what} at L={radius}: {e}"))?;
            runs += 1;
        }
    }
    ensure(runs >= 100, || format!("only {runs} maps"))?;
    Ok(format!("{runs} maps, zero failures ({padded} with mu' raised to lambda' eps')"))
}

/// Exact fraction in lowest terms with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Frac(i128, i128);

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    fn new(n: i128, d: i128) -> Frac {
        let g = gcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Frac(s * n / g, s * d / g)
    }
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.0, self.1 * o.1)
    }
    fn ceil(self) -> i128 {
        (self.0 + self.1 - 1).div_euclid(self.1)
    }
    fn max(self, o: Frac) -> Frac {
        if self.0 * o.1 >= o.0 * self.1 {
            self
        } else {
            o
        }
    }
}

fn m_bound_grid() -> Result<String, String> {
    let lambdas = [(1, 1), (3, 2), (2, 1), (7, 3), (5, 1)];
    let epsilons = [(1, 3), (1, 1), (5, 2), (4, 1), (11, 7)];
    let mus = [(0, 1), (1, 2), (3, 1)];
    let ns = [0u64, 1, 4, 9, 25, 100];
    let mut count = 0;
    for (li, &(ln, ld)) in lambdas.iter().enumerate() {
        for (ei, &(en, ed)) in epsilons.iter().enumerate() {
            for k in 0..2 {
                let (mn, md) = mus[(li + ei + k) % mus.len()];
                let n = ns[(2 * li + 3 * ei + k) % ns.len()];
                let (l, e, m) = (Frac::new(ln, ld), Frac::new(en, ed), Frac::new(mn, md));
                let first = l.mul(l).add(l.add(Frac(1, 1)).mul(e)).add(Frac(2, 1).mul(m)).add(Frac(1, 1));
                let second = l.add(e).mul(Frac(n as i128, 1));
                let want = first.max(second).ceil();
                let spec = lib(QiSpec::new(
                    Rational::new(ln as i64, ld as i64),
                    Rational::new(en as i64, ed as i64),
                    Rational::new(mn as i64, md as i64),
                ))?;
                let got = m_bound(&spec, n) as i128;
                ensure(got == want, || format!("m{spec} at n={n}: {got}, oracle {want}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} tuples match"))
}

/// Words over a..e of length at most L with no factor a b^i c.
fn mx_normal_form_count(radius: usize) -> usize {
    strings_up_to(&['a', 'b', 'c', 'd', 'e'], radius)
        .iter()
        .filter(|w| {
            let s = w.as_bytes();
            !(0..s.len()).any(|i| {
                s[i] == b'a' && {
                    let j = i + 1 + s[i + 1..].iter().take_while(|&&c| c == b'b').count();
                    j < s.len() && s[j] == b'c'
                }
            })
        })
        .count()
}

fn mx_family() -> Result<String, String> {
    let specs = ["finite:1", "evens", "periodic:t=4,p=3,r=0,2"];
    let xs: Vec<_> = specs.iter().map(|s| lib(parse_oracle(s))).collect::<Result<_, _>>()?;
    for (spec, x) in specs.iter().zip(&xs) {
        for n in 0..=30usize {
            let u = Word([vec![A], vec![B; n], vec![C]].concat());
            let v = Word([vec![A], vec![B; n], vec![D]].concat());
            let eq = lib(mx_word_problem(&u, &v, x.as_ref()))?;
            ensure(eq == x.contains(n as u64), || format!("{spec}: word problem at n={n} says {eq}"))?;
        }
    }
    let mut counts = Vec::new();
    for radius in 1..=6 {
        let brute = mx_normal_form_count(radius);
        for (spec, x) in specs.iter().zip(&xs) {
            let got = lib(mx_ball(x.as_ref(), radius))?.len();
            ensure(got == brute, || format!("{spec}: |ball({radius})| = {got}, brute force {brute}"))?;
        }
        counts.push(brute);
    }
    ensure(counts[0] == 6 && counts[1] == 30, || format!("counts {counts:?}"))?;
    let balls: Vec<CayleyBall> = xs.iter().map(|x| lib(mx_ball(x.as_ref(), 6))).collect::<Result<_, _>>()?;
    for (spec, b) in specs.iter().zip(&balls) {
        let degrees: BTreeSet<usize> = (0..b.len()).filter(|&v| !b.is_frontier(v)).map(|v| b.out_degree(v)).collect();
        ensure(degrees.is_subset(&BTreeSet::from([4, 5])), || format!("{spec}: out-degrees {degrees:?}"))?;
        let u = UndirectedView::from_ball(b);
        let undirected: BTreeSet<usize> = u.interior_degrees().into_iter().collect();
        ensure(undirected.is_subset(&BTreeSet::from([5, 6])), || format!("{spec}: degrees {undirected:?}"))?;
        let bushy = lib(check_bushy_hypotheses(&u, 3, 6))?;
        ensure(bushy.verdict == BushyVerdict::Pass, || format!("{spec}: bushy {:?}", bushy.verdict))?;
    }
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in xs.iter().enumerate() {
            if i != j {
                let rep = lib(mx_isometry_check(x.as_ref(), y.as_ref(), 6))?;
                ensure(rep.pass && rep.labels_differ, || format!("iso({}, {}): {rep:?}", specs[i], specs[j]))?;
            }
        }
    }
    let (_, tree) = lib(f2_ball(6))?;
    let bushy = lib(check_bushy_hypotheses(&tree, 3, 6))?;
    ensure(bushy.verdict == BushyVerdict::Pass, || format!("f2: bushy {:?}", bushy.verdict))?;
    Ok(format!("ball sizes {counts:?} for every X; all isometry and bushy checks pass"))
}

fn r_classes() -> Result<String, String> {
    let p = lib(builtin("bicyclic"))?;
    let b = lib(enumerate_ball(&p, 4, 8))?;
    let forward = edge_bfs(&b, 0, false);
    let comp_oracle: BTreeSet<VertexId> =
        (0..b.len()).filter(|&v| forward[v].is_some() && edge_bfs(&b, v, false)[0].is_some()).collect();
    let powers: BTreeSet<VertexId> = (0..=4).map(|n| b.find(&Word(vec![0; n])).ok_or("a^n missing")).collect::<Result<_, _>>()?;
    ensure(comp_oracle == powers, || format!("oracle class {comp_oracle:?} != a-powers {powers:?}"))?;
    let comps = strongly_connected_components(&b);
    let mine = comps.iter().find(|c| c.vertices.contains(&0)).ok_or("identity has no component")?;
    let mine_set: BTreeSet<VertexId> = mine.vertices.iter().copied().collect();
    ensure(mine_set == comp_oracle, || format!("scc {mine_set:?} != oracle {comp_oracle:?}"))?;
    let sg = lib(schutzenberger_graph(&b, 0))?;
    let mut induced: Vec<_> = b.edges().iter().filter(|e| powers.contains(&e.src) && powers.contains(&e.dst)).copied().collect();
    induced.sort();
    let mut got = sg.edges.clone();
    got.sort();
    ensure(got == induced, || format!("schutzenberger edges {got:?}, induced {induced:?}"))?;

    let s = lib(builtin("section4_S"))?;
    let rels = s.finite_relations().map_or(0, <[_]>::len);
    ensure(s.alphabet().len() == 11 && rels == 22, || format!("S has {} gens, {rels} relations", s.alphabet().len()))?;
    let opts = BallOptions { depth_bound: 2, ..BallOptions::default() };
    let ball = lib(enumerate_ball_with(&s, 2, &opts))?;
    Ok(format!(
        "R-class of 1 is {{1, a, .., a^4}}, induced graph has {} edges; S ball L=2 has {} vertices ({} unresolved)",
        got.len(),
        ball.len(),
        ball.unresolved().len()
    ))
}

fn determinism() -> Result<String, String> {
    let invocations = common::invocations();
    let mut outputs: HashMap<usize, (i32, String, String)> = HashMap::new();
    for round in 0..2 {
        for (i, (args, expected)) in invocations.iter().enumerate() {
            let r = common::run(args);
            ensure(r.code == *expected, || format!("`{}` exited {} (expected {expected})", args.join(" "), r.code))?;
            let now = (r.code, r.stdout, r.stderr);
            if round == 0 {
                outputs.insert(i, now);
            } else {
                ensure(outputs[&i] == now, || format!("`{}` differs between runs", args.join(" ")))?;
            }
        }
    }
    Ok(format!("{} invocations byte-identical across two runs", invocations.len()))
}

fn main() -> ExitCode {
    let checks: [(&str, Check); 8] = [
        ("semimetric axioms", semimetric_axioms),
        ("area oracle agreement", area_oracle),
        ("K_n coherence on the grid", grid_complex),
        ("quasi-inverse construction", quasi_inverses),
        ("m bound", m_bound_grid),
        ("M(X) family", mx_family),
        ("R-classes and Schutzenberger graphs", r_classes),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in checks.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
