//! Exhaustive identity suites over graded bases of `T(M)`.


use super::algebra::unchecked_gl_bracket;
use super::{
    antipode_dot, antipode_star, gl_star, is_primitive, kmap_tensor, kmap_tensor_inverse, lie_bracket, triangle,
    unshuffle, Generators, MagmaTree, TensorError, TensorPoly, TensorPolyPair, TensorWord,
    DEFAULT_DEGREE_CAP,
};
use crate::report::CheckLine;

fn words(gens: &Generators, degree: usize) -> Result<Vec<(TensorWord, TensorPoly)>, TensorError> {
    Ok(TensorWord::basis_up_to(gens.len(), degree, DEFAULT_DEGREE_CAP)?
        .into_iter()
        .map(|w| {
            let p = TensorPoly::word(w.clone());
            (w, p)
        })
        .collect())
}

fn pairs<'a, T>(items: &'a [(usize, T)], degree: usize) -> impl Iterator<Item = (&'a T, &'a T)> {
    items.iter().flat_map(move |(da, a)| {
        items.iter().filter(move |(db, _)| da + db <= degree).map(move |(_, b)| (a, b))
    })
}

fn triples<'a, T>(items: &'a [(usize, T)], degree: usize) -> impl Iterator<Item = (&'a T, &'a T, &'a T)> {
    items.iter().flat_map(move |(da, a)| {
        items.iter().filter(move |(db, _)| da + db <= degree).flat_map(move |(db, b)| {
            items.iter().filter(move |(dc, _)| da + db + dc <= degree).map(move |(_, c)| (a, b, c))
        })
    })
}

fn graded(ws: &[(TensorWord, TensorPoly)]) -> Vec<(usize, TensorPoly)> {
    ws.iter().map(|(w, p)| (w.degree(), p.clone())).collect()
}

/// Returns the first failing instance, formatted.
fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> bool,
    describe: impl Fn(&T) -> String,
) -> Result<(), String> {
    for item in items {
        if !check(&item) {
            return Err(describe(&item));
        }
    }
    Ok(())
}

fn sum_pairs(a: &TensorPoly, b: &TensorPoly, op: impl Fn(&TensorPoly, &TensorPoly) -> TensorPoly) -> TensorPolyPair {
    // Σ op(A₁,B₁) ⊗ op(A₂,B₂)
    let (da, db) = (unshuffle(a), unshuffle(b));
    let mut out = TensorPolyPair::zero();
    for ((a1, a2), ca) in da.terms() {
        for ((b1, b2), cb) in db.terms() {
            let l = op(&TensorPoly::word(a1.clone()), &TensorPoly::word(b1.clone()));
            let r = op(&TensorPoly::word(a2.clone()), &TensorPoly::word(b2.clone()));
            out.add_tensor(&l, &r, &(ca * cb));
        }
    }
    out
}

fn sweedler_sum(a: &TensorPoly, mut f: impl FnMut(&TensorPoly, &TensorPoly) -> TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for ((a1, a2), c) in unshuffle(a).terms() {
        out.add_scaled(&f(&TensorPoly::word(a1.clone()), &TensorPoly::word(a2.clone())), c);
    }
    out
}

/// A spanning set of primitive elements up to `degree`: trees, and brackets
/// of trees nested at most twice.
pub fn primitive_samples(gens: usize, degree: usize) -> Vec<(usize, TensorPoly)> {
    let trees: Vec<MagmaTree> = (1..=degree).flat_map(|d| MagmaTree::all_of_degree(gens, d)).collect();
    let mut out: Vec<(usize, TensorPoly)> = trees.iter().map(|t| (t.degree(), TensorPoly::letter(t.clone()))).collect();
    let mut brackets = Vec::new();
    for (i, s) in trees.iter().enumerate() {
        for t in &trees[i + 1..] {
            let d = s.degree() + t.degree();
            if d <= degree {
                brackets.push((d, lie_bracket(&TensorPoly::letter(s.clone()), &TensorPoly::letter(t.clone()))));
            }
        }
    }
    let mut nested = Vec::new();
    for r in &trees {
        for (d, b) in &brackets {
            if r.degree() + d <= degree {
                nested.push((r.degree() + d, lie_bracket(&TensorPoly::letter(r.clone()), b)));
            }
        }
    }
    out.extend(brackets);
    out.extend(nested);
    out
}

/// Post-Hopf axioms, Hopf compatibility of `▷` and `*`, antipodes, the
/// expression of concatenation through `*`, and post-Lie identities, for all
/// basis instances of total degree `≤ degree`.
pub fn posthopf_suite(gens: &Generators, degree: usize) -> Result<Vec<CheckLine>, TensorError> {
    let ws = words(gens, degree)?;
    let g = graded(&ws);
    let fmt = |p: &TensorPoly| gens.format_poly(p);
    let mut out = Vec::new();

    out.push(CheckLine::new(
        "A▷(B.C) = Σ (A₁▷B).(A₂▷C)",
        first_failure(
            triples(&g, degree),
            |(a, b, c)| {
                triangle(a, &b.concat(c)) == sweedler_sum(a, |a1, a2| triangle(a1, b).concat(&triangle(a2, c)))
            },
            |(a, b, c)| format!("A={}, B={}, C={}", fmt(a), fmt(b), fmt(c)),
        ),
    ));
    out.push(CheckLine::new(
        "A▷(B▷C) = (A*B)▷C",
        first_failure(
            triples(&g, degree),
            |(a, b, c)| triangle(a, &triangle(b, c)) == triangle(&gl_star(a, b), c),
            |(a, b, c)| format!("A={}, B={}, C={}", fmt(a), fmt(b), fmt(c)),
        ),
    ));
    out.push(CheckLine::new(
        "(A*B)*C = A*(B*C)",
        first_failure(
            triples(&g, degree),
            |(a, b, c)| gl_star(&gl_star(a, b), c) == gl_star(a, &gl_star(b, c)),
            |(a, b, c)| format!("A={}, B={}, C={}", fmt(a), fmt(b), fmt(c)),
        ),
    ));
    out.push(CheckLine::new(
        "Δ(A▷B) = Σ (A₁▷B₁)⊗(A₂▷B₂)",
        first_failure(
            pairs(&g, degree),
            |(a, b)| unshuffle(&triangle(a, b)) == sum_pairs(a, b, triangle),
            |(a, b)| format!("A={}, B={}", fmt(a), fmt(b)),
        ),
    ));
    out.push(CheckLine::new(
        "Δ(A*B) = Σ (A₁*B₁)⊗(A₂*B₂)",
        first_failure(
            pairs(&g, degree),
            |(a, b)| unshuffle(&gl_star(a, b)) == sum_pairs(a, b, gl_star),
            |(a, b)| format!("A={}, B={}", fmt(a), fmt(b)),
        ),
    ));
    out.push(CheckLine::new(
        "▷ is graded with ε(A▷B) = ε(A)ε(B)",
        first_failure(
            pairs(&g, degree),
            |(a, b)| {
                let t = triangle(a, b);
                let d = a.max_degree().unwrap_or(0) + b.max_degree().unwrap_or(0);
                t.is_homogeneous(d) && t.counit() == a.counit() * b.counit()
            },
            |(a, b)| format!("A={}, B={}", fmt(a), fmt(b)),
        ),
    ));
    out.push(CheckLine::new(
        "Σ S(w₁).w₂ = Σ S_*(w₁)*w₂ = ε(w)𝟏",
        first_failure(
            ws.iter(),
            |(_, w)| {
                let unit = TensorPoly::one().scale(&w.counit());
                sweedler_sum(w, |a, b| antipode_dot(a).concat(b)) == unit
                    && sweedler_sum(w, |a, b| gl_star(&antipode_star(a), b)) == unit
            },
            |(_, w)| format!("w={}", fmt(w)),
        ),
    ));
    out.push(CheckLine::new(
        "A.B = Σ A₁*(S_*(A₂)▷B)",
        first_failure(
            pairs(&g, degree),
            |(a, b)| a.concat(b) == sweedler_sum(a, |a1, a2| gl_star(a1, &triangle(&antipode_star(a2), b))),
            |(a, b)| format!("A={}, B={}", fmt(a), fmt(b)),
        ),
    ));
    out.extend(postlie_suite(gens, degree)?);
    Ok(out)
}

pub(crate) fn check_postlie(
    x: &TensorPoly,
    y: &TensorPoly,
    z: &TensorPoly,
    act: &dyn Fn(&TensorPoly, &TensorPoly) -> TensorPoly,
    bracket: &dyn Fn(&TensorPoly, &TensorPoly) -> TensorPoly,
) -> Result<(), &'static str> {
    let lhs = act(x, &bracket(y, z));
    let rhs = bracket(&act(x, y), z).add(&bracket(y, &act(x, z)));
    if lhs != rhs {
        return Err("X▷[Y,Z] = [X▷Y,Z] + [Y,X▷Z]");
    }
    let lhs = act(&bracket(x, y), z);
    let rhs = act(x, &act(y, z))
        .sub(&act(&act(x, y), z))
        .sub(&act(y, &act(x, z)))
        .add(&act(&act(y, x), z));
    if lhs != rhs {
        return Err("[X,Y]▷Z = a(X,Y,Z) − a(Y,X,Z)");
    }
    Ok(())
}

/// Both post-Lie axioms for `(▷, [,])` and for the opposite structure
/// `(▷ + [,], −[,])`, and `⟦X,Y⟧ = X*Y − Y*X`, on primitive samples.
pub fn postlie_suite(gens: &Generators, degree: usize) -> Result<Vec<CheckLine>, TensorError> {
    if degree > DEFAULT_DEGREE_CAP {
        return Err(TensorError::DegreeCap { requested: degree, cap: DEFAULT_DEGREE_CAP });
    }
    let prims = primitive_samples(gens.len(), degree);
    let fmt = |p: &TensorPoly| gens.format_poly(p);
    let describe = |(x, y, z): &(&TensorPoly, &TensorPoly, &TensorPoly)| {
        format!("X={}, Y={}, Z={}", fmt(x), fmt(y), fmt(z))
    };
    let mut witness = String::new();
    let direct = first_failure(
        triples(&prims, degree),
        |(x, y, z)| match check_postlie(x, y, z, &triangle, &lie_bracket) {
            Ok(()) => true,
            Err(which) => {
                witness = which.into();
                false
            }
        },
        describe,
    )
    .map_err(|w| format!("{witness}: {w}"));
    let opposite_act = |a: &TensorPoly, b: &TensorPoly| triangle(a, b).add(&lie_bracket(a, b));
    let opposite_bracket = |a: &TensorPoly, b: &TensorPoly| lie_bracket(b, a);
    let opposite = first_failure(
        triples(&prims, degree),
        |(x, y, z)| {
            check_postlie(x, y, z, &opposite_act, &opposite_bracket).is_ok()
                && unchecked_gl_bracket(x, y)
                    == opposite_bracket(x, y).add(&opposite_act(x, y)).sub(&opposite_act(y, x))
        },
        describe,
    );
    let gl = first_failure(
        pairs(&prims, degree),
        |(x, y)| {
            is_primitive(x)
                && is_primitive(y)
                && unchecked_gl_bracket(x, y) == gl_star(x, y).sub(&gl_star(y, x))
        },
        |(x, y)| format!("X={}, Y={}", fmt(x), fmt(y)),
    );
    Ok(vec![
        CheckLine::new("post-Lie axioms", direct),
        CheckLine::new("opposite post-Lie axioms", opposite),
        CheckLine::new("⟦X,Y⟧ = X*Y − Y*X on primitives", gl),
    ])
}

/// `K(A*B) = K(A).K(B)`, `Δ∘K = (K⊗K)∘Δ`, and `K`, `K⁻¹` mutually inverse
/// and degree-preserving.
pub fn kmap_suite(gens: &Generators, degree: usize) -> Result<Vec<CheckLine>, TensorError> {
    let ws = words(gens, degree)?;
    let g = graded(&ws);
    let fmt = |p: &TensorPoly| gens.format_poly(p);
    let kword = |w: &TensorWord| kmap_tensor(&TensorPoly::word(w.clone()));
    Ok(vec![
        CheckLine::new(
            "K(A*B) = K(A).K(B)",
            first_failure(
                pairs(&g, degree),
                |(a, b)| kmap_tensor(&gl_star(a, b)) == kmap_tensor(a).concat(&kmap_tensor(b)),
                |(a, b)| format!("A={}, B={}", fmt(a), fmt(b)),
            ),
        ),
        CheckLine::new(
            "Δ∘K = (K⊗K)∘Δ",
            first_failure(
                ws.iter(),
                |(_, a)| unshuffle(&kmap_tensor(a)) == unshuffle(a).map_linear(kword, kword),
                |(_, a)| format!("A={}", fmt(a)),
            ),
        ),
        CheckLine::new(
            "K⁻¹∘K = K∘K⁻¹ = id, degree preserved",
            first_failure(
                ws.iter(),
                |(w, a)| {
                    let k = kmap_tensor(a);
                    let ki = kmap_tensor_inverse(a);
                    k.is_homogeneous(w.degree())
                        && ki.is_homogeneous(w.degree())
                        && kmap_tensor_inverse(&k) == *a
                        && kmap_tensor(&ki) == *a
                },
                |(_, a)| format!("A={}", fmt(a)),
            ),
        ),
    ])
}

/// `K(x₁.x₂)` and `K(x₁.x₂.x₃)` against their known expansions over three
/// distinct generators.
pub fn kmap_golden() -> Vec<CheckLine> {
    let gens = Generators::standard(3).expect("three generators");
    let cases = [
        ("x1.x2", "x1.x2 - (x1>x2)"),
        (
            "x1.x2.x3",
            "x1.x2.x3 - x1.(x2>x3) - (x1>x2).x3 - x2.(x1>x3) + (x2>(x1>x3)) + ((x1>x2)>x3)",
        ),
    ];
    cases
        .iter()
        .map(|(input, expected)| {
            let got = kmap_tensor(&gens.parse_poly(input).expect("input"));
            let want = gens.parse_poly(expected).expect("expected");
            let outcome = if got == want {
                Ok(())
            } else {
                Err(format!("got {}, expected {}", gens.format_poly(&got), gens.format_poly(&want)))
            };
            CheckLine::new(format!("K({input})"), outcome)
        })
        .collect()
}

