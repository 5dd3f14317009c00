use crate::cut::Cut;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::genetic::{GeneticDefinition, OptionFunction, Side, SigmaPattern};
use crate::signseq::{PeriodicSigns, SignSequence};

fn pat(s: &str) -> SigmaPattern {
    SigmaPattern::parse(s).expect("static σ-pattern")
}

fn num(d: Dyadic) -> SignSequence {
    SignSequence::from_dyadic(&d)
}

fn val(x: &SignSequence) -> Dyadic {
    x.to_dyadic()
}

/// Names accepted by [`builtin`]; `concat_right` takes a value, as in `concat_right(1)`.
pub fn builtin_names() -> &'static [&'static str] {
    &[
        "add1",
        "sum2",
        "prod2",
        "neg",
        "omnific_floor",
        "floor_minus_x",
        "pathological_point",
        "family_23",
        "concat_right(<y>)",
    ]
}

/// A catalog definition by name.
pub fn builtin(name: &str) -> Result<GeneticDefinition> {
    let name = name.trim();
    if let Some(arg) = name
        .strip_prefix("concat_right(")
        .and_then(|r| r.strip_suffix(')'))
    {
        let y: SignSequence = arg.parse()?;
        return Ok(concat_right(y));
    }
    Ok(match name {
        "add1" => add1(),
        "sum2" => sum2(),
        "prod2" => prod2(),
        "neg" => neg(),
        "omnific_floor" => omnific_floor(),
        "floor_minus_x" => floor_minus_x(),
        "pathological_point" => pathological_point(),
        "family_23" => family_23(),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    })
}

/// `x + 1 = ⟨f(x^L), x | f(x^R)⟩`.
fn add1() -> GeneticDefinition {
    GeneticDefinition::new("add1", 1, true)
        .with(OptionFunction::new(
            Side::Left,
            "f(x^L)",
            vec![pat("-")],
            |c| Ok(vec![c.f_option()?]),
        ))
        .with(OptionFunction::new(Side::Left, "x", vec![], |c| {
            Ok(vec![c.x0().clone()])
        }))
        .with(OptionFunction::new(
            Side::Right,
            "f(x^R)",
            vec![pat("+")],
            |c| Ok(vec![c.f_option()?]),
        ))
}

/// `x + y = ⟨f(x^L, y), f(x, y^L) | f(x^R, y), f(x, y^R)⟩`.
fn sum2() -> GeneticDefinition {
    GeneticDefinition::new("sum2", 2, true)
        .with(OptionFunction::new(
            Side::Left,
            "f(x^L,y), f(x,y^L)",
            vec![pat("-0"), pat("0-")],
            |c| Ok(vec![c.f_option()?]),
        ))
        .with(OptionFunction::new(
            Side::Right,
            "f(x^R,y), f(x,y^R)",
            vec![pat("+0"), pat("0+")],
            |c| Ok(vec![c.f_option()?]),
        ))
}

/// `xy` with options `f(x', y) + f(x, y') − f(x', y')`.
fn prod2() -> GeneticDefinition {
    let body = |c: &mut crate::genetic::OptionCall<'_>| {
        let (x, y) = (c.x[0].clone(), c.x[1].clone());
        let (xo, yo) = (c.option[0].clone(), c.option[1].clone());
        let a = c.f(&[xo.clone(), y])?;
        let b = c.f(&[x, yo.clone()])?;
        let ab = c.f(&[xo, yo])?;
        Ok(vec![num(val(&a) + val(&b) - val(&ab))])
    };
    GeneticDefinition::new("prod2", 2, true)
        .with(OptionFunction::new(
            Side::Left,
            "f(x^L,y)+f(x,y^L)-f(x^L,y^L), f(x^R,y)+f(x,y^R)-f(x^R,y^R)",
            vec![pat("--"), pat("++")],
            body,
        ))
        .with(OptionFunction::new(
            Side::Right,
            "f(x^L,y)+f(x,y^R)-f(x^L,y^R), f(x^R,y)+f(x,y^L)-f(x^R,y^L)",
            vec![pat("-+"), pat("+-")],
            body,
        ))
}

/// `−x = ⟨f(x^R) | f(x^L)⟩`.
fn neg() -> GeneticDefinition {
    GeneticDefinition::new("neg", 1, true)
        .with(OptionFunction::new(
            Side::Left,
            "f(x^R)",
            vec![pat("+")],
            |c| Ok(vec![c.f_option()?]),
        ))
        .with(OptionFunction::new(
            Side::Right,
            "f(x^L)",
            vec![pat("-")],
            |c| Ok(vec![c.f_option()?]),
        ))
}

/// `⟨x − 1 | x + 1⟩`; its image is the omnific integers.
fn omnific_floor() -> GeneticDefinition {
    GeneticDefinition::new("omnific_floor", 1, true)
        .with(OptionFunction::new(Side::Left, "x-1", vec![], |c| {
            Ok(vec![num(val(c.x0()) - Dyadic::one())])
        }))
        .with(OptionFunction::new(Side::Right, "x+1", vec![], |c| {
            Ok(vec![num(val(c.x0()) + Dyadic::one())])
        }))
}

/// The simplest number in `(x − 1, x + 1)`.
fn floor_of(x: &SignSequence) -> Dyadic {
    let d = val(x);
    Cut::new([num(&d - &Dyadic::one())], [num(&d + &Dyadic::one())])
        .expect("x - 1 < x + 1")
        .simplest()
        .to_dyadic()
}

/// `[x] − x = ⟨−1, [x] − x^R | 1, [x] − x^L⟩` with `[x]` the omnific floor.
fn floor_minus_x() -> GeneticDefinition {
    GeneticDefinition::new("floor_minus_x", 1, false)
        .with(OptionFunction::new(Side::Left, "-1", vec![], |_| {
            Ok(vec![SignSequence::integer(-1)])
        }))
        .with(OptionFunction::new(
            Side::Left,
            "[x]-x^R",
            vec![pat("+")],
            |c| Ok(vec![num(floor_of(c.x0()) - val(c.y0()))]),
        ))
        .with(OptionFunction::new(Side::Right, "1", vec![], |_| {
            Ok(vec![SignSequence::integer(1)])
        }))
        .with(OptionFunction::new(
            Side::Right,
            "[x]-x^L",
            vec![pat("-")],
            |c| Ok(vec![num(floor_of(c.x0()) - val(c.y0()))]),
        ))
}

/// `⟨−|x| | R1(x^L), R2(x^R)⟩` with `R1(z) = 0` if `z ≥ 0` else `2`, and
/// `R2(z) = 0` if `z ≤ 0` else `2`.
fn pathological_point() -> GeneticDefinition {
    GeneticDefinition::new("pathological_point", 1, true)
        .with(OptionFunction::new(Side::Left, "-|x|", vec![], |c| {
            Ok(vec![num(-val(c.x0()).abs())])
        }))
        .with(OptionFunction::new(
            Side::Right,
            "R1(x^L)",
            vec![pat("-")],
            |c| {
                let z = c.y0();
                Ok(vec![SignSequence::integer(
                    if z.is_zero() || val(z).is_positive() {
                        0
                    } else {
                        2
                    },
                )])
            },
        ))
        .with(OptionFunction::new(
            Side::Right,
            "R2(x^R)",
            vec![pat("+")],
            |c| {
                let z = c.y0();
                Ok(vec![SignSequence::integer(if val(z).is_positive() {
                    2
                } else {
                    0
                })])
            },
        ))
}

/// Index values `a_n < 2/3 < b_n` for `n ≤ birthday + 1`, standing in for all
/// dyadic `r < 2/3 < s` when evaluating at an argument of that birthday.
pub fn family_23_index(birthday: usize) -> (Vec<SignSequence>, Vec<SignSequence>) {
    let d = PeriodicSigns::two_thirds();
    let n_max = birthday + 1;
    let a: Vec<SignSequence> = (0..=n_max).map(|n| d.prefix(2 * n)).collect();
    let b: Vec<SignSequence> = (0..=n_max).map(|n| d.prefix(2 * n + 1)).collect();
    (a, b)
}

/// `⟨min(x^L, r) : r < 2/3 | max(x^R, s) : s > 2/3⟩` over dyadic `r`, `s`.
fn family_23() -> GeneticDefinition {
    GeneticDefinition::new("family_23", 1, true)
        .with(OptionFunction::new(
            Side::Left,
            "min(x^L, r)",
            vec![pat("-")],
            |c| {
                let (a, _) = family_23_index(c.x0().birthday());
                Ok(a.into_iter().map(|r| r.min(c.y0().clone())).collect())
            },
        ))
        .with(OptionFunction::new(
            Side::Right,
            "max(x^R, s)",
            vec![pat("+")],
            |c| {
                let (_, b) = family_23_index(c.x0().birthday());
                Ok(b.into_iter().map(|s| s.max(c.y0().clone())).collect())
            },
        ))
}

/// `x:y = ⟨x^L, x:y^L | x^R, x:y^R⟩` for a fixed `y`.
fn concat_right(y: SignSequence) -> GeneticDefinition {
    let (yl, yr) = crate::cut::canonical_options(&y);
    GeneticDefinition::new(format!("concat_right({})", y.to_dyadic()), 1, false)
        .with(OptionFunction::new(
            Side::Left,
            "x^L",
            vec![pat("-")],
            |c| Ok(vec![c.y0().clone()]),
        ))
        .with(OptionFunction::new(Side::Left, "x:y^L", vec![], move |c| {
            Ok(yl.iter().map(|l| c.x0().concat(l)).collect())
        }))
        .with(OptionFunction::new(
            Side::Right,
            "x^R",
            vec![pat("+")],
            |c| Ok(vec![c.y0().clone()]),
        ))
        .with(OptionFunction::new(
            Side::Right,
            "x:y^R",
            vec![],
            move |c| Ok(yr.iter().map(|r| c.x0().concat(r)).collect()),
        ))
}
