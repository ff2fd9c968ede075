//! The acceptance battery: nine criteria, each a list of check lines with a
//! wall-clock budget. Shared by the command-line `selftest` verb and the
//! acceptance test target.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action_postgroup::{RightAction, DEFAULT_SIZE_CAP};
use crate::finite_postgroup::{full_check, BraidMap, PostGroupTable};
use crate::free_postgroup::FreePostGroup;
use crate::group::GroupTable;
use crate::magma::{MagmaError, MagmaTable};
use crate::magnus::{alpha_series, check_alpha_ode, check_primitivity_of_log, magnus_report, solve_right_flow};
use crate::report::CheckLine;
use crate::tensor::checks::{kmap_golden, kmap_suite, posthopf_suite};
use crate::tensor::{Generators, MagmaTree, TensorPoly};
use crate::words::{Alphabet, Letter, ReducedWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(format!("unknown level `{s}` (expected quick or full)")),
        }
    }
}

/// The outcome of one criterion.
#[derive(Debug, Clone)]
pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub lines: Vec<CheckLine>,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl Criterion {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }

    pub fn passed(&self) -> bool {
        self.within_budget() && self.lines.iter().all(CheckLine::passed)
    }

    pub fn failures(&self) -> Vec<&CheckLine> {
        self.lines.iter().filter(|l| !l.passed()).collect()
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {}. {} ({:.2}s", self.id, self.title, self.elapsed.as_secs_f64())?;
        if let Some(b) = self.budget {
            write!(f, ", budget {}s", b.as_secs())?;
            if !self.within_budget() {
                write!(f, " EXCEEDED")?;
            }
        }
        write!(f, ")")
    }
}

pub const TITLES: [&str; 9] = [
    "free post-group axioms on random triples",
    "J/K isomorphism on random words",
    "finite post-group corpus",
    "pre-group involutivity",
    "K-map golden values",
    "K is a Hopf algebra isomorphism",
    "post-Hopf and post-Lie axiom suites",
    "Magnus and flow identities",
    "negative controls",
];

const BUDGETS: [Option<u64>; 9] = [Some(5), Some(5), Some(10), None, None, Some(60), None, Some(120), None];

pub fn run_criterion(id: usize, seed: u64, level: Level) -> Criterion {
    assert!((1..=9).contains(&id), "criteria are numbered 1 to 9");
    let start = Instant::now();
    let lines = match id {
        1 => free_axioms(seed, level),
        2 => jk_isomorphism(seed, level),
        3 => finite_corpus(),
        4 => pregroup_involutivity(),
        5 => kmap_golden(),
        6 => hopf_isomorphism(level),
        7 => posthopf_axioms(level),
        8 => magnus_identities(),
        _ => negative_controls(),
    };
    Criterion {
        id,
        title: TITLES[id - 1],
        lines,
        elapsed: start.elapsed(),
        budget: BUDGETS[id - 1].map(Duration::from_secs),
    }
}

pub fn run_all(seed: u64, level: Level) -> Vec<Criterion> {
    (1..=9).map(|id| run_criterion(id, seed, level)).collect()
}

fn rng_for(seed: u64, id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ id)
}

/// A uniformly random letter sequence of length `0..=max_len`, reduced.
pub fn random_word(rng: &mut impl Rng, generators: usize, max_len: usize) -> ReducedWord {
    let len = rng.random_range(0..=max_len);
    ReducedWord::reduce((0..len).map(|_| {
        let g = rng.random_range(0..generators);
        if rng.random_bool(0.5) {
            Letter::pos(g)
        } else {
            Letter::neg(g)
        }
    }))
}

fn magmas() -> Vec<(&'static str, FreePostGroup)> {
    let trivial = MagmaTable::trivial(Alphabet::new(["a", "b", "c"]).expect("names"));
    vec![("cyclic shift", FreePostGroup::new(MagmaTable::cyclic_shift(3))), ("trivial", FreePostGroup::new(trivial))]
}

fn first_failure(
    count: usize,
    mut instance: impl FnMut() -> Result<(), String>,
) -> Result<(), String> {
    for _ in 0..count {
        instance()?;
    }
    Ok(())
}

fn free_axioms(seed: u64, level: Level) -> Vec<CheckLine> {
    let count = if level == Level::Full { 10_000 } else { 2000 };
    let mut out = Vec::new();
    for (i, (label, g)) in magmas().into_iter().enumerate() {
        let mut rng = rng_for(seed, 10 + i as u64);
        let a = g.magma().alphabet().clone();
        let outcome = first_failure(count, || {
            let u = random_word(&mut rng, 3, 10);
            let v = random_word(&mut rng, 3, 10);
            let w = random_word(&mut rng, 3, 10);
            let show = |x: &ReducedWord| a.format_word(x);
            let witness = |what: &str| format!("{what} at u={}, v={}, w={}", show(&u), show(&v), show(&w));
            let err = |e: crate::words::WordError| e.to_string();
            let uv = g.gl_product(&u, &v).map_err(err)?;
            if g.act(&uv, &w).map_err(err)? != g.act(&u, &g.act(&v, &w).map_err(err)?).map_err(err)? {
                return Err(witness("(u*v)▷w != u▷(v▷w)"));
            }
            let lhs = g.act(&u, &v.dot(&w)).map_err(err)?;
            let rhs = g.act(&u, &v).map_err(err)?.dot(&g.act(&u, &w).map_err(err)?);
            if lhs != rhs {
                return Err(witness("u▷(v.w) != (u▷v).(u▷w)"));
            }
            if g.act_perm(&uv).map_err(err)? != g.act_perm(&u).map_err(err)?.compose(&g.act_perm(&v).map_err(err)?) {
                return Err(witness("π(u*v) != π(u)∘π(v)"));
            }
            Ok(())
        });
        out.push(CheckLine::new(format!("{label} magma, {count} triples"), outcome));
    }
    out
}

fn jk_isomorphism(seed: u64, level: Level) -> Vec<CheckLine> {
    let count = if level == Level::Full { 5000 } else { 1000 };
    let mut out = Vec::new();
    for (i, (label, g)) in magmas().into_iter().enumerate() {
        let mut rng = rng_for(seed, 20 + i as u64);
        let a = g.magma().alphabet().clone();
        let outcome = first_failure(count, || {
            let u = random_word(&mut rng, 3, 12);
            let v = random_word(&mut rng, 3, 12);
            let err = |e: crate::words::WordError| e.to_string();
            let witness = |what: &str| format!("{what} at u={}, v={}", a.format_word(&u), a.format_word(&v));
            let ju = g.jmap(&u).map_err(err)?;
            if g.kmap(&ju).map_err(err)? != u {
                return Err(witness("K(J(u)) != u"));
            }
            if g.jmap(&g.kmap(&u).map_err(err)?).map_err(err)? != u {
                return Err(witness("J(K(u)) != u"));
            }
            if g.jmap(&u.dot(&v)).map_err(err)? != g.gl_product(&ju, &g.jmap(&v).map_err(err)?).map_err(err)? {
                return Err(witness("J(u.v) != J(u)*J(v)"));
            }
            Ok(())
        });
        out.push(CheckLine::new(format!("{label} magma, {count} words"), outcome));
    }
    out
}

/// The Z/2 swap action on two points and the trivial Z/2 action on two points.
pub fn gauge_actions() -> Vec<(&'static str, RightAction)> {
    let z2 = GroupTable::cyclic(2);
    let points = vec!["p".to_string(), "q".to_string()];
    let swap = RightAction::new(z2.clone(), points.clone(), vec![vec![0, 1], vec![1, 0]]).expect("swap action");
    let trivial = RightAction::trivial(z2, points).expect("trivial action");
    vec![("gauge Z2 swap on {p,q}", swap), ("gauge Z2 trivial on {p,q}", trivial)]
}

/// Named corpus entries; gauge entries that fail to form a post-group are
/// reported with their construction error.
pub fn corpus() -> Vec<(String, Result<PostGroupTable, String>)> {
    let mut out = Vec::new();
    for (label, g) in [
        ("Z2", GroupTable::cyclic(2)),
        ("Z3", GroupTable::cyclic(3)),
        ("Z4", GroupTable::cyclic(4)),
        ("S3", GroupTable::symmetric3()),
    ] {
        out.push((format!("trivial {label}"), Ok(PostGroupTable::trivial(&g))));
        out.push((format!("conjugation {label}"), Ok(PostGroupTable::conjugation(&g))));
    }
    for (label, action) in gauge_actions() {
        out.push((label.to_string(), action.build_gauge_postgroup(DEFAULT_SIZE_CAP).map_err(|e| e.to_string())));
    }
    out
}

fn finite_corpus() -> Vec<CheckLine> {
    let mut out = Vec::new();
    for (label, pg) in corpus() {
        match pg {
            Err(e) => out.push(CheckLine::new(format!("{label}: post-group axioms"), Err(e))),
            Ok(pg) => {
                out.push(CheckLine::new(format!("{label}: post-group axioms"), Ok(())));
                for line in full_check(&pg) {
                    if !line.name.starts_with("pre-group") {
                        out.push(CheckLine::new(format!("{label}: {}", line.name), line.outcome));
                    }
                }
            }
        }
    }
    out
}

fn pregroup_involutivity() -> Vec<CheckLine> {
    corpus()
        .into_iter()
        .filter_map(|(label, pg)| pg.ok().map(|pg| (label, pg)))
        .filter(|(_, pg)| pg.is_pregroup())
        .map(|(label, pg)| {
            let sigma = pg.braiding();
            let outcome = if sigma.compose(&sigma).is_identity() {
                Ok(())
            } else {
                Err("σ∘σ is not the identity".to_string())
            };
            CheckLine::new(format!("{label}: σ∘σ = id"), outcome)
        })
        .collect()
}

fn hopf_isomorphism(level: Level) -> Vec<CheckLine> {
    let gens = Generators::standard(2).expect("generators");
    let mut lines = kmap_suite(&gens, 4).expect("degree within cap");
    if level == Level::Full {
        let one = Generators::standard(1).expect("generators");
        lines.extend(kmap_suite(&one, 6).expect("degree within cap").into_iter().map(|l| {
            CheckLine::new(format!("{} (one generator, degree 6)", l.name), l.outcome)
        }));
    }
    lines
}

fn posthopf_axioms(level: Level) -> Vec<CheckLine> {
    let gens = Generators::standard(2).expect("generators");
    let mut lines = posthopf_suite(&gens, 4).expect("degree within cap");
    if level == Level::Full {
        let one = Generators::standard(1).expect("generators");
        lines.extend(posthopf_suite(&one, 5).expect("degree within cap").into_iter().map(|l| {
            CheckLine::new(format!("{} (one generator, degree 5)", l.name), l.outcome)
        }));
    }
    lines
}

fn magnus_identities() -> Vec<CheckLine> {
    match magnus_report(5) {
        Ok(r) => r.checks,
        Err(e) => vec![CheckLine::new("Magnus series through t^5", Err(e.to_string()))],
    }
}

/// The braiding of the trivial post-group on S3 with `σ(g,h)` and `σ(g,k)`
/// exchanged for the first pair of entries that differ.
pub fn corrupted_braiding() -> BraidMap {
    let pg = PostGroupTable::trivial(&GroupTable::symmetric3());
    let mut sigma = pg.braiding();
    let (a, b) = (sigma.apply(1, 2), sigma.apply(1, 3));
    sigma.set(1, 2, b);
    sigma.set(1, 3, a);
    sigma
}

fn negative_controls() -> Vec<CheckLine> {
    let mut out = Vec::new();
    let names: Vec<String> = vec!["0".into(), "1".into()];
    let additive = vec![vec!["0".into(), "1".into()], vec!["1".into(), "0".into()]];
    out.push(match MagmaTable::from_names(names, additive) {
        Err(e @ MagmaError::NotDiagonal { .. }) => {
            CheckLine::new(format!("additive Z/2 magma rejected for diagonality ({e})"), Ok(()))
        }
        Err(e) => CheckLine::new("additive Z/2 magma rejected for diagonality", Err(format!("wrong reason: {e}"))),
        Ok(_) => CheckLine::new("additive Z/2 magma rejected for diagonality", Err("accepted".into())),
    });
    let sigma = corrupted_braiding();
    out.push(match sigma.check_braid_equation() {
        Err(w) => CheckLine::new(format!("corrupted σ fails the braid equation, witness {w}"), Ok(())),
        Ok(()) => CheckLine::new("corrupted σ fails the braid equation", Err("braid equation holds".into())),
    });
    let x = MagmaTree::leaf(0);
    let mut alpha = alpha_series(&x, 5);
    let bump = TensorPoly::letter(MagmaTree::product(x.clone(), MagmaTree::product(x.clone(), x.clone())));
    alpha.set_coeff(2, alpha.coeff(2).add(&bump));
    out.push(CheckLine::new(
        "corrupted α₂ fails α′ = −α▷α at k = 1",
        match check_alpha_ode(&alpha) {
            Err(1) => Ok(()),
            Err(k) => Err(format!("failed at k = {k}")),
            Ok(()) => Err("identity holds".into()),
        },
    ));
    let mut flow = solve_right_flow(&x, 4);
    flow.set_coeff(2, TensorPoly::letter(x.clone()).concat(&TensorPoly::letter(x)));
    out.push(CheckLine::new(
        "flow with Y₂ = x.x has a non-primitive logarithm at t²",
        match check_primitivity_of_log(&flow) {
            Ok(Err(2)) => Ok(()),
            Ok(Err(k)) => Err(format!("detected at t^{k}")),
            Ok(Ok(_)) => Err("all coefficients primitive".into()),
            Err(e) => Err(e.to_string()),
        },
    ));
    out
}
