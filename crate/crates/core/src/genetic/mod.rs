//! Evaluation of recursive ("genetic") definitions `f = ⟨f^L | f^R⟩`.
//!
//! An option function is attached to one side of the definition and to a list
//! of σ-patterns. For every pattern it is applied to each σ-option tuple of the
//! argument; a function with no pattern is applied once. Inside an option
//! function, `f` may be called on any tuple built from the argument and its
//! options, which keeps the recursion well-founded.

mod catalog;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::signseq::SignSequence;

pub use catalog::{builtin, builtin_names, family_23_index};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

/// One coordinate of a σ-pattern.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SigmaEntry {
    Minus,
    Zero,
    Plus,
}

/// An element of `{+,−,0}^n` other than the all-zero pattern.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SigmaPattern(Vec<SigmaEntry>);

impl SigmaPattern {
    pub fn new(entries: Vec<SigmaEntry>) -> Result<SigmaPattern> {
        if entries.iter().all(|e| *e == SigmaEntry::Zero) {
            return Err(Error::Parse("σ-pattern must have a nonzero entry".into()));
        }
        Ok(SigmaPattern(entries))
    }

    /// Parses a string over `+`, `-`, `0`.
    pub fn parse(s: &str) -> Result<SigmaPattern> {
        let entries = s
            .chars()
            .map(|c| match c {
                '+' => Ok(SigmaEntry::Plus),
                '-' => Ok(SigmaEntry::Minus),
                '0' => Ok(SigmaEntry::Zero),
                _ => Err(Error::Parse(format!("bad σ-pattern `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        SigmaPattern::new(entries)
    }

    pub fn entries(&self) -> &[SigmaEntry] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// All of `K = {+,−,0}^n ∖ {0}` in a fixed order.
    pub fn all(n: usize) -> Vec<SigmaPattern> {
        let mut out = Vec::new();
        let total = 3usize.pow(n as u32);
        for code in 1..total {
            let mut c = code;
            let entries = (0..n)
                .map(|_| {
                    let e = [SigmaEntry::Zero, SigmaEntry::Minus, SigmaEntry::Plus][c % 3];
                    c /= 3;
                    e
                })
                .collect();
            out.push(SigmaPattern(entries));
        }
        out
    }
}

impl fmt::Display for SigmaPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.0 {
            f.write_str(match e {
                SigmaEntry::Minus => "-",
                SigmaEntry::Zero => "0",
                SigmaEntry::Plus => "+",
            })?;
        }
        Ok(())
    }
}

/// σ-option tuples of `x` drawn from the given per-coordinate cuts.
pub fn sigma_options_in(
    x: &[SignSequence],
    sigma: &SigmaPattern,
    cuts: &[Cut],
) -> Vec<Vec<SignSequence>> {
    let mut tuples: Vec<Vec<SignSequence>> = vec![Vec::with_capacity(x.len())];
    for (i, entry) in sigma.entries().iter().enumerate() {
        let choices: Vec<&SignSequence> = match entry {
            SigmaEntry::Zero => vec![&x[i]],
            SigmaEntry::Minus => cuts[i].left().iter().collect(),
            SigmaEntry::Plus => cuts[i].right().iter().collect(),
        };
        let mut next = Vec::with_capacity(tuples.len() * choices.len());
        for t in &tuples {
            for c in &choices {
                let mut t = t.clone();
                t.push((*c).clone());
                next.push(t);
            }
        }
        tuples = next;
    }
    tuples
}

/// σ-options of `x` under its canonical representation.
pub fn sigma_options(x: &[SignSequence], sigma: &SigmaPattern) -> Result<Vec<Vec<SignSequence>>> {
    if sigma.arity() != x.len() {
        return Err(Error::ArityMismatch {
            expected: sigma.arity(),
            actual: x.len(),
        });
    }
    let cuts: Vec<Cut> = x.iter().map(Cut::canonical).collect();
    Ok(sigma_options_in(x, sigma, &cuts))
}

/// The body of an option function. Returning no values means the option is
/// undefined for this tuple; several values model an indexed family.
pub type OptionBody = Arc<dyn Fn(&mut OptionCall<'_>) -> Result<Vec<SignSequence>> + Send + Sync>;

#[derive(Clone)]
pub struct OptionFunction {
    pub side: Side,
    pub patterns: Vec<SigmaPattern>,
    pub label: String,
    body: OptionBody,
}

impl OptionFunction {
    pub fn new(
        side: Side,
        label: impl Into<String>,
        patterns: Vec<SigmaPattern>,
        body: impl Fn(&mut OptionCall<'_>) -> Result<Vec<SignSequence>> + Send + Sync + 'static,
    ) -> Self {
        OptionFunction {
            side,
            patterns,
            label: label.into(),
            body: Arc::new(body),
        }
    }
}

impl fmt::Debug for OptionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OptionFunction")
            .field("side", &self.side)
            .field("label", &self.label)
            .field("patterns", &self.patterns)
            .finish()
    }
}

#[derive(Clone, Debug)]
pub struct GeneticDefinition {
    pub name: String,
    pub arity: usize,
    pub options: Vec<OptionFunction>,
    pub uniform_claimed: bool,
}

impl GeneticDefinition {
    pub fn new(name: impl Into<String>, arity: usize, uniform_claimed: bool) -> Self {
        GeneticDefinition {
            name: name.into(),
            arity,
            options: Vec::new(),
            uniform_claimed,
        }
    }

    pub fn with(mut self, option: OptionFunction) -> Self {
        assert!(
            option.patterns.iter().all(|p| p.arity() == self.arity),
            "σ-pattern arity differs from definition arity"
        );
        self.options.push(option);
        self
    }

    pub fn left_options(&self) -> impl Iterator<Item = &OptionFunction> {
        self.options.iter().filter(|o| o.side == Side::Left)
    }

    pub fn right_options(&self) -> impl Iterator<Item = &OptionFunction> {
        self.options.iter().filter(|o| o.side == Side::Right)
    }
}

/// What an option function sees: the argument, the current σ-option tuple,
/// and access to `f` on tuples made of the argument and its options.
pub struct OptionCall<'a> {
    pub x: &'a [SignSequence],
    /// The σ-option tuple; equal to `x` for functions without patterns.
    pub option: &'a [SignSequence],
    pub sigma: Option<&'a SigmaPattern>,
    cuts: &'a [Cut],
    def: &'a GeneticDefinition,
    evaluator: &'a mut Evaluator,
}

impl OptionCall<'_> {
    /// `f` at `args`, where each coordinate is either `x_i` or one of its options
    /// and the tuple differs from `x`.
    pub fn f(&mut self, args: &[SignSequence]) -> Result<SignSequence> {
        let ok = args.len() == self.x.len()
            && args != self.x
            && args.iter().enumerate().all(|(i, a)| {
                a == &self.x[i]
                    || if a < &self.x[i] {
                        self.cuts[i].left().contains(a)
                    } else {
                        self.cuts[i].right().contains(a)
                    }
            });
        if !ok {
            return Err(Error::IllFoundedRecursion {
                args: join(self.x),
                requested: join(args),
            });
        }
        self.evaluator.eval(self.def, args)
    }

    /// `f` at the σ-option tuple itself.
    pub fn f_option(&mut self) -> Result<SignSequence> {
        let y = self.option.to_vec();
        self.f(&y)
    }

    /// The single argument of a unary definition.
    pub fn x0(&self) -> &SignSequence {
        &self.x[0]
    }

    /// The first coordinate of the current option tuple.
    pub fn y0(&self) -> &SignSequence {
        &self.option[0]
    }
}

fn join(xs: &[SignSequence]) -> String {
    xs.iter()
        .map(|x| x.to_dyadic().to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Default bound on memo entries per evaluator.
pub const DEFAULT_MEMO_CAP: usize = 1 << 22;

/// A recursive evaluator with a private memo table keyed by argument tuples.
///
/// The memo never evicts; exceeding the cap is an error. The memo belongs to
/// one definition at a time and is reset when a different one is evaluated.
#[derive(Debug)]
pub struct Evaluator {
    memo: HashMap<Vec<SignSequence>, SignSequence>,
    owner: Option<String>,
    cap: usize,
    memoize: bool,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator::new()
    }
}

impl Evaluator {
    pub fn new() -> Self {
        Evaluator::with_cap(DEFAULT_MEMO_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        Evaluator {
            memo: HashMap::new(),
            owner: None,
            cap,
            memoize: true,
        }
    }

    /// An evaluator that recomputes every subcall.
    pub fn without_memo() -> Self {
        Evaluator {
            memo: HashMap::new(),
            owner: None,
            cap: usize::MAX,
            memoize: false,
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }

    /// `f(x)` under canonical representations of every coordinate.
    pub fn eval(&mut self, def: &GeneticDefinition, x: &[SignSequence]) -> Result<SignSequence> {
        check_arity(def, x.len())?;
        if self.owner.as_deref() != Some(def.name.as_str()) {
            self.memo.clear();
            self.owner = Some(def.name.clone());
        }
        if let Some(v) = self.memo.get(x) {
            return Ok(v.clone());
        }
        let cuts: Vec<Cut> = x.iter().map(Cut::canonical).collect();
        let value = self.eval_at(def, x, &cuts)?;
        if self.memoize {
            if self.memo.len() >= self.cap {
                return Err(Error::MemoCapExceeded { cap: self.cap });
            }
            self.memo.insert(x.to_vec(), value.clone());
        }
        Ok(value)
    }

    /// `f(x)` with the top-level options taken from `rep`; inner calls use
    /// canonical representations.
    pub fn eval_with_representation(
        &mut self,
        def: &GeneticDefinition,
        x: &[SignSequence],
        rep: &Representation,
    ) -> Result<SignSequence> {
        check_arity(def, x.len())?;
        rep.validate(x)?;
        self.eval_at(def, x, &rep.cuts)
    }

    /// Left and right option values at `x` with options drawn from `cuts`.
    pub fn option_values(
        &mut self,
        def: &GeneticDefinition,
        x: &[SignSequence],
        cuts: &[Cut],
    ) -> Result<(Vec<SignSequence>, Vec<SignSequence>)> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for opt in &def.options {
            let out = if opt.side == Side::Left {
                &mut left
            } else {
                &mut right
            };
            if opt.patterns.is_empty() {
                let mut call = OptionCall {
                    x,
                    option: x,
                    sigma: None,
                    cuts,
                    def,
                    evaluator: self,
                };
                out.extend((opt.body)(&mut call)?);
                continue;
            }
            for sigma in &opt.patterns {
                for tuple in sigma_options_in(x, sigma, cuts) {
                    let mut call = OptionCall {
                        x,
                        option: &tuple,
                        sigma: Some(sigma),
                        cuts,
                        def,
                        evaluator: self,
                    };
                    out.extend((opt.body)(&mut call)?);
                }
            }
        }
        Ok((left, right))
    }

    fn eval_at(
        &mut self,
        def: &GeneticDefinition,
        x: &[SignSequence],
        cuts: &[Cut],
    ) -> Result<SignSequence> {
        let (left, right) = self.option_values(def, x, cuts)?;
        let max_l = left.iter().max();
        let min_r = right.iter().min();
        if let (Some(l), Some(r)) = (max_l, min_r) {
            if l >= r {
                return Err(Error::EmptyCutViolation {
                    args: join(x),
                    left: l.to_dyadic().to_string(),
                    right: r.to_dyadic().to_string(),
                });
            }
        }
        let cut = Cut::new(max_l.cloned(), min_r.cloned())?;
        Ok(cut.simplest())
    }
}

fn check_arity(def: &GeneticDefinition, actual: usize) -> Result<()> {
    if def.arity != actual {
        return Err(Error::ArityMismatch {
            expected: def.arity,
            actual,
        });
    }
    Ok(())
}

/// `f(x)` with a fresh evaluator.
pub fn eval_genetic(def: &GeneticDefinition, x: &[SignSequence]) -> Result<SignSequence> {
    Evaluator::new().eval(def, x)
}

/// `f(x)` under a chosen representation, with a fresh evaluator.
pub fn eval_with_representation(
    def: &GeneticDefinition,
    x: &[SignSequence],
    rep: &Representation,
) -> Result<SignSequence> {
    Evaluator::new().eval_with_representation(def, x, rep)
}

/// One cut per coordinate, each representing that coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Representation {
    pub cuts: Vec<Cut>,
}

impl Representation {
    pub fn new(cuts: Vec<Cut>) -> Self {
        Representation { cuts }
    }

    pub fn canonical(x: &[SignSequence]) -> Self {
        Representation {
            cuts: x.iter().map(Cut::canonical).collect(),
        }
    }

    pub fn validate(&self, x: &[SignSequence]) -> Result<()> {
        if self.cuts.len() != x.len() {
            return Err(Error::ArityMismatch {
                expected: x.len(),
                actual: self.cuts.len(),
            });
        }
        for (cut, xi) in self.cuts.iter().zip(x) {
            let actual = cut.simplest();
            if &actual != xi {
                return Err(Error::NotARepresentation {
                    expected: xi.to_string(),
                    actual: actual.to_string(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cuts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Alternative representations of `x`: the canonical one, every cut with at
/// most one element per side drawn from numbers of birthday at most
/// `max_birthday`, and the canonical cut with one such element added to a side.
pub fn coarsenings(x: &SignSequence, max_birthday: usize) -> Vec<Cut> {
    let canonical = Cut::canonical(x);
    let pool = SignSequence::all_up_to(max_birthday);
    let below: Vec<&SignSequence> = pool.iter().filter(|v| *v < x).collect();
    let above: Vec<&SignSequence> = pool.iter().filter(|v| *v > x).collect();
    let mut out = vec![canonical.clone()];
    let mut push = |cut: Cut| {
        if cut.represents(x) && !out.contains(&cut) {
            out.push(cut);
        }
    };
    let lefts = std::iter::once(None).chain(below.iter().map(|v| Some(*v)));
    for l in lefts {
        let rights = std::iter::once(None).chain(above.iter().map(|v| Some(*v)));
        for r in rights {
            if let Ok(cut) = Cut::new(l.cloned(), r.cloned()) {
                push(cut);
            }
        }
    }
    for l in &below {
        let left = canonical.left().iter().chain(std::iter::once(*l)).cloned();
        if let Ok(cut) = Cut::new(left, canonical.right().iter().cloned()) {
            push(cut);
        }
    }
    for r in &above {
        let right = canonical.right().iter().chain(std::iter::once(*r)).cloned();
        if let Ok(cut) = Cut::new(canonical.left().iter().cloned(), right) {
            push(cut);
        }
    }
    out
}

/// Representations of a tuple that replace one coordinate's canonical cut by
/// one of its coarsenings.
pub fn tuple_coarsenings(x: &[SignSequence], max_birthday: usize) -> Vec<Representation> {
    let canonical = Representation::canonical(x);
    let mut out = vec![canonical.clone()];
    for (i, xi) in x.iter().enumerate() {
        for cut in coarsenings(xi, max_birthday).into_iter().skip(1) {
            let mut rep = canonical.clone();
            rep.cuts[i] = cut;
            out.push(rep);
        }
    }
    out
}

/// An argument tuple together with the representations to try for it.
#[derive(Clone, Debug)]
pub struct UniformitySample {
    pub args: Vec<SignSequence>,
    pub representations: Vec<Representation>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum UniformityWitness {
    /// An option value at `args`, computed from numbers `y < x < z` of the
    /// sample universe, that fails to lie on its side of `f(args)`.
    Bracketing {
        args: Vec<SignSequence>,
        side: Side,
        option_value: SignSequence,
        value: SignSequence,
    },
    /// A representation whose cut gives a different value than the canonical one.
    Representation {
        args: Vec<SignSequence>,
        representation: Representation,
        canonical: SignSequence,
        obtained: SignSequence,
    },
    /// A representation on which the option values do not form a cut.
    EmptyCut {
        args: Vec<SignSequence>,
        representation: Representation,
        message: String,
    },
}

#[derive(Clone, Debug)]
pub struct UniformityReport {
    pub uniform_on_samples: bool,
    pub witnesses: Vec<UniformityWitness>,
}

/// Checks both conditions of uniformity on finitely many samples.
///
/// Bracketing uses every sample coordinate value as a candidate `y < x_i < z`.
/// Representation independence compares each supplied representation with the
/// canonical value. The first bracketing failure per sample and every failing
/// representation are reported.
pub fn check_uniformity(
    def: &GeneticDefinition,
    samples: &[UniformitySample],
) -> Result<UniformityReport> {
    let mut ev = Evaluator::new();
    let mut witnesses = Vec::new();
    let universe: Vec<Vec<SignSequence>> = (0..def.arity)
        .map(|i| {
            let mut v: Vec<SignSequence> = samples.iter().map(|s| s.args[i].clone()).collect();
            v.sort();
            v.dedup();
            v
        })
        .collect();
    for sample in samples {
        let x = &sample.args;
        let value = ev.eval(def, x)?;
        let cuts: Vec<Cut> = x
            .iter()
            .zip(&universe)
            .map(|(xi, u)| {
                Cut::new(
                    u.iter().filter(|v| *v < xi).cloned(),
                    u.iter().filter(|v| *v > xi).cloned(),
                )
            })
            .collect::<Result<_>>()?;
        let (left, right) = ev.option_values(def, x, &cuts)?;
        let bad_left = left
            .into_iter()
            .find(|l| l >= &value)
            .map(|v| (Side::Left, v));
        let bad = bad_left.or_else(|| {
            right
                .into_iter()
                .find(|r| r <= &value)
                .map(|v| (Side::Right, v))
        });
        if let Some((side, option_value)) = bad {
            witnesses.push(UniformityWitness::Bracketing {
                args: x.clone(),
                side,
                option_value,
                value: value.clone(),
            });
        }
        for rep in &sample.representations {
            match ev.eval_with_representation(def, x, rep) {
                Ok(obtained) if obtained == value => {}
                Ok(obtained) => witnesses.push(UniformityWitness::Representation {
                    args: x.clone(),
                    representation: rep.clone(),
                    canonical: value.clone(),
                    obtained,
                }),
                Err(e @ Error::EmptyCutViolation { .. }) => {
                    witnesses.push(UniformityWitness::EmptyCut {
                        args: x.clone(),
                        representation: rep.clone(),
                        message: e.to_string(),
                    })
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(UniformityReport {
        uniform_on_samples: witnesses.is_empty(),
        witnesses,
    })
}

/// Samples for every tuple of numbers with birthday at most `max_birthday`,
/// each with its [`tuple_coarsenings`] from the same birthday bound.
pub fn exhaustive_samples(arity: usize, max_birthday: usize) -> Vec<UniformitySample> {
    let pool = SignSequence::all_up_to(max_birthday);
    let mut tuples: Vec<Vec<SignSequence>> = vec![Vec::new()];
    for _ in 0..arity {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                pool.iter().map(move |v| {
                    let mut t = t.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect();
    }
    let mut cache: HashMap<SignSequence, Vec<Cut>> = HashMap::new();
    tuples
        .into_iter()
        .map(|args| {
            let canonical = Representation::canonical(&args);
            let mut representations = vec![canonical.clone()];
            for (i, xi) in args.iter().enumerate() {
                let cuts = cache
                    .entry(xi.clone())
                    .or_insert_with(|| coarsenings(xi, max_birthday));
                for cut in cuts.iter().skip(1) {
                    let mut rep = canonical.clone();
                    rep.cuts[i] = cut.clone();
                    representations.push(rep);
                }
            }
            UniformitySample {
                args,
                representations,
            }
        })
        .collect()
}
