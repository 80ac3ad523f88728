//! Group-expression language and computation front end: a small grammar for
//! naming groups (atoms, direct products and powers, wreath products with
//! symmetric tops, holomorphs, automorphism groups), an evaluator that builds
//! them within guards, and report types for machine-readable output.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::gcd;
use num_traits::One;
use serde::Serialize;

use crate::affine::{
    check_regular_cycles, lambda_aff_exact, lambda_aff_semisimple, lambda_auto, AFFINE_SWEEP_GUARD,
};
use crate::error::{Error, Result};
use crate::group::{alt, cyclic, sym, AutGroup, ConcreteGroup, CLOSURE_GUARD};
use crate::matgrp::{pgl2_family, psl3_bundle};
use crate::numtheory::as_prime_power;
use crate::wreath::wreath_meo;

/// Named group families usable as expression atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Sym,
    Alt,
    Cyclic,
    Psl2,
    Pgl2,
    PGammaL2,
    AutPsl3,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Sym => "Sym",
            Family::Alt => "Alt",
            Family::Cyclic => "Cyclic",
            Family::Psl2 => "PSL2",
            Family::Pgl2 => "PGL2",
            Family::PGammaL2 => "PGammaL2",
            Family::AutPsl3 => "AutPSL3",
        }
    }

    fn from_name(s: &str) -> Option<Family> {
        match s {
            "Sym" => Some(Family::Sym),
            "Alt" => Some(Family::Alt),
            "Cyclic" => Some(Family::Cyclic),
            "PSL2" => Some(Family::Psl2),
            "PGL2" => Some(Family::Pgl2),
            "PGammaL2" => Some(Family::PGammaL2),
            "AutPSL3" => Some(Family::AutPsl3),
            _ => None,
        }
    }
}

/// Abstract syntax for group expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Atom { family: Family, param: u64 },
    Product(Box<GroupExpr>, Box<GroupExpr>),
    Power(Box<GroupExpr>, u32),
    Wreath(Box<GroupExpr>, u32),
    Hol(Box<GroupExpr>),
    Aut(Box<GroupExpr>),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom { family, param } => write!(f, "{}:{}", family.name(), param),
            GroupExpr::Product(a, b) => write!(f, "{a} x {b}"),
            GroupExpr::Power(a, n) => write!(f, "{a} ^ {n}"),
            GroupExpr::Wreath(a, n) => write!(f, "{a} wr Sym:{n}"),
            GroupExpr::Hol(a) => write!(f, "Hol({a})"),
            GroupExpr::Aut(a) => write!(f, "Aut({a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(u64),
    Colon,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                i += 1;
            }
            // Keywords 'x' and 'wr' may abut a following name without
            // whitespace ("Sym:4xAlt:5"); split at the case boundary.
            let run = &text[start..i];
            if let Some(j) = run.find(|ch: char| ch.is_ascii_uppercase()) {
                if j > 0 && (&run[..j] == "x" || &run[..j] == "wr") {
                    out.push((start, Token::Ident(run[..j].to_string())));
                    i = start + j;
                    continue;
                }
            }
            out.push((start, Token::Ident(run.to_string())));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let v = text[start..i]
                .parse::<u64>()
                .map_err(|_| Error::Parse { pos: start, msg: "integer too large".to_string() })?;
            out.push((start, Token::Int(v)));
        } else {
            let tok = match c {
                ':' => Token::Colon,
                '^' => Token::Caret,
                '(' => Token::LParen,
                ')' => Token::RParen,
                _ => {
                    return Err(Error::Parse {
                        pos: i,
                        msg: format!("unexpected character '{c}'"),
                    })
                }
            };
            out.push((i, tok));
            i += 1;
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<()> {
        let pos = self.here();
        match self.bump() {
            Some(t) if &t == want => Ok(()),
            _ => Err(Error::Parse { pos, msg: format!("expected {what}") }),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<u64> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Int(v)) => Ok(v),
            _ => Err(Error::Parse { pos, msg: format!("expected {what}") }),
        }
    }

    // primary := FAMILY ":" INT | "Hol(" expr ")" | "Aut(" expr ")"
    fn primary(&mut self) -> Result<GroupExpr> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Ident(name)) => {
                if name == "Hol" || name == "Aut" {
                    self.expect(&Token::LParen, "'('")?;
                    let inner = self.expr()?;
                    self.expect(&Token::RParen, "')'")?;
                    let b = Box::new(inner);
                    Ok(if name == "Hol" { GroupExpr::Hol(b) } else { GroupExpr::Aut(b) })
                } else if let Some(family) = Family::from_name(&name) {
                    self.expect(&Token::Colon, "':' after family name")?;
                    let param = self.expect_int("integer parameter")?;
                    Ok(GroupExpr::Atom { family, param })
                } else {
                    Err(Error::Parse { pos, msg: format!("unknown family '{name}'") })
                }
            }
            _ => Err(Error::Parse { pos, msg: "expected a group expression".to_string() }),
        }
    }

    // powexpr := primary ("^" INT)*
    fn powexpr(&mut self) -> Result<GroupExpr> {
        let mut e = self.primary()?;
        while self.peek() == Some(&Token::Caret) {
            self.bump();
            let pos = self.here();
            let n = self.expect_int("integer exponent")?;
            if n == 0 {
                return Err(Error::Parse { pos, msg: "exponent must be positive".to_string() });
            }
            let n = u32::try_from(n)
                .map_err(|_| Error::Parse { pos, msg: "exponent too large".to_string() })?;
            e = GroupExpr::Power(Box::new(e), n);
        }
        Ok(e)
    }

    // wrexpr := powexpr ("wr" "Sym" ":" INT)*
    fn wrexpr(&mut self) -> Result<GroupExpr> {
        let mut e = self.powexpr()?;
        while self.peek() == Some(&Token::Ident("wr".to_string())) {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Token::Ident(s)) if s == "Sym" => {}
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: "wreath top must be 'Sym:<n>'".to_string(),
                    })
                }
            }
            self.expect(&Token::Colon, "':' after Sym")?;
            let pos = self.here();
            let n = self.expect_int("integer degree")?;
            let n = u32::try_from(n)
                .map_err(|_| Error::Parse { pos, msg: "degree too large".to_string() })?;
            e = GroupExpr::Wreath(Box::new(e), n);
        }
        Ok(e)
    }

    // expr := wrexpr ("x" wrexpr)*
    fn expr(&mut self) -> Result<GroupExpr> {
        let mut e = self.wrexpr()?;
        while self.peek() == Some(&Token::Ident("x".to_string())) {
            self.bump();
            let rhs = self.wrexpr()?;
            e = GroupExpr::Product(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }
}

/// Parses a group expression. Whitespace-insensitive; precedence from
/// tightest to loosest is `^`, `wr`, `x`, all left-associative.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, len: text.len() };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse { pos: p.here(), msg: "trailing input".to_string() });
    }
    Ok(e)
}

impl FromStr for GroupExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupExpr> {
        parse_group_expr(s)
    }
}

/// Closed-form order of an expression, without building anything.
pub fn expr_order(expr: &GroupExpr) -> Result<BigUint> {
    fn factorial(n: u64) -> BigUint {
        (1..=n).map(BigUint::from).product::<BigUint>().max(BigUint::one())
    }
    match expr {
        GroupExpr::Atom { family, param } => atom_order(*family, *param),
        GroupExpr::Product(a, b) => Ok(expr_order(a)? * expr_order(b)?),
        GroupExpr::Power(a, n) => Ok(expr_order(a)?.pow(*n)),
        GroupExpr::Wreath(a, n) => Ok(expr_order(a)?.pow(*n) * factorial(*n as u64)),
        GroupExpr::Hol(a) | GroupExpr::Aut(a) => {
            // No closed form in general; fall back to the base order as a
            // lower bound (construction-time guards still apply).
            expr_order(a)
        }
    }
}

fn atom_order(family: Family, param: u64) -> Result<BigUint> {
    let q = param;
    match family {
        Family::Sym => {
            Ok((1..=param).map(BigUint::from).product::<BigUint>().max(BigUint::one()))
        }
        Family::Alt => {
            let f: BigUint = (1..=param).map(BigUint::from).product::<BigUint>().max(BigUint::one());
            Ok(if param >= 3 { f / 2u32 } else { BigUint::one() })
        }
        Family::Cyclic => {
            if param == 0 {
                return Err(Error::invalid("cyclic group parameter must be positive"));
            }
            Ok(BigUint::from(param))
        }
        Family::Psl2 => {
            check_q(q, 4)?;
            Ok(BigUint::from(q * (q * q - 1) / gcd(2, q - 1)))
        }
        Family::Pgl2 => {
            check_q(q, 4)?;
            Ok(BigUint::from(q * (q * q - 1)))
        }
        Family::PGammaL2 => {
            let (_, f) = check_q(q, 4)?;
            Ok(BigUint::from(q * (q * q - 1) * f as u64))
        }
        Family::AutPsl3 => {
            let (_, f) = check_q(q, 3)?;
            if q > 4 {
                return Err(Error::invalid(format!(
                    "AutPSL3 supports parameters 3 and 4; got {q}"
                )));
            }
            let s = q.pow(3) * (q.pow(3) - 1) * (q * q - 1) / gcd(3, q - 1);
            Ok(BigUint::from(s * gcd(3, q - 1) * f as u64 * 2))
        }
    }
}

fn check_q(q: u64, min: u64) -> Result<(u64, u32)> {
    let pf = as_prime_power(q)
        .ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
    if q < min {
        return Err(Error::invalid(format!("parameter {q} below minimum {min}")));
    }
    Ok(pf)
}

/// Evaluated form of an expression: either a concretely enumerated
/// permutation group, or a symbolic wreath product base ≀ Sym(n).
pub enum Built {
    Concrete(Arc<ConcreteGroup>),
    WreathSym { base: Arc<ConcreteGroup>, n: u32 },
}

/// Guard settings for evaluation, adjustable from the command line.
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    /// Largest group order the evaluator will enumerate.
    pub max_group_order: u64,
    /// Largest |G|·|Aut(G)| allowed for affine sweeps.
    pub max_affine_sweep: u64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            max_group_order: CLOSURE_GUARD as u64,
            max_affine_sweep: AFFINE_SWEEP_GUARD,
        }
    }
}

fn build_atom(family: Family, param: u64) -> Result<Arc<ConcreteGroup>> {
    match family {
        Family::Sym => Ok(Arc::new(sym(param as usize)?)),
        Family::Alt => Ok(Arc::new(alt(param as usize)?)),
        Family::Cyclic => Ok(Arc::new(cyclic(param as usize)?)),
        Family::Psl2 => Ok(pgl2_family(param)?.psl),
        Family::Pgl2 => Ok(pgl2_family(param)?.pgl),
        Family::PGammaL2 => Ok(pgl2_family(param)?.pgammal),
        Family::AutPsl3 => Ok(psl3_bundle(param)?.full),
    }
}

/// Builds the expression. Wreath nodes stay symbolic; everything else is
/// enumerated. `Aut(...)` is evaluated through known realizations:
/// the projective families have automorphism group PΓL₂(q) (complete),
/// alternating groups (other than degree 6) have the symmetric group, and
/// small groups fall back to brute force.
pub fn build(expr: &GroupExpr, opts: &EvalOptions) -> Result<Built> {
    if let Ok(est) = expr_order(expr) {
        if est > BigUint::from(opts.max_group_order)
            && !matches!(expr, GroupExpr::Wreath(_, _))
        {
            return Err(Error::guard(
                "max-group-order",
                format!("estimated order {est} exceeds {}", opts.max_group_order),
            ));
        }
    }
    match expr {
        GroupExpr::Atom { family, param } => Ok(Built::Concrete(build_atom(*family, *param)?)),
        GroupExpr::Product(a, b) => {
            let ga = require_concrete(build(a, opts)?)?;
            let gb = require_concrete(build(b, opts)?)?;
            Ok(Built::Concrete(Arc::new(ga.direct_product(&gb)?)))
        }
        GroupExpr::Power(a, n) => {
            let ga = require_concrete(build(a, opts)?)?;
            Ok(Built::Concrete(Arc::new(ga.direct_power(*n)?)))
        }
        GroupExpr::Wreath(a, n) => {
            let ga = require_concrete(build(a, opts)?)?;
            Ok(Built::WreathSym { base: ga, n: *n })
        }
        GroupExpr::Hol(a) => {
            let ga = require_concrete(build(a, opts)?)?;
            let auts = ga.automorphism_group()?;
            Ok(Built::Concrete(Arc::new(ga.holomorph(&auts)?)))
        }
        GroupExpr::Aut(a) => build_aut_concrete(a, opts),
    }
}

fn require_concrete(b: Built) -> Result<Arc<ConcreteGroup>> {
    match b {
        Built::Concrete(g) => Ok(g),
        Built::WreathSym { .. } => Err(Error::invalid(
            "wreath products are symbolic here; only order and meo are supported for them",
        )),
    }
}

fn build_aut_concrete(inner: &GroupExpr, opts: &EvalOptions) -> Result<Built> {
    match inner {
        GroupExpr::Atom { family, param } => match family {
            Family::Psl2 | Family::Pgl2 | Family::PGammaL2 => {
                Ok(Built::Concrete(pgl2_family(*param)?.pgammal))
            }
            // Aut(S) of a nonabelian simple S is complete, so taking Aut
            // again returns the same group.
            Family::AutPsl3 => Ok(Built::Concrete(psl3_bundle(*param)?.full)),
            Family::Alt if *param >= 7 || *param == 5 => {
                Ok(Built::Concrete(Arc::new(sym(*param as usize)?)))
            }
            Family::Sym if *param >= 3 && *param != 6 => {
                Ok(Built::Concrete(Arc::new(sym(*param as usize)?)))
            }
            _ => {
                let g = require_concrete(build(inner, opts)?)?;
                let aut = AutGroup::brute(g)?;
                Ok(Built::Concrete(aut.as_group()?))
            }
        },
        // Aut(S^n) = Aut(S) ≀ Sym(n) for a simple group S.
        GroupExpr::Power(base, n) => {
            if !is_simple_atom(base) {
                return Err(Error::invalid(
                    "Aut of a direct power is only supported for simple base groups",
                ));
            }
            let aut_base = require_concrete(build_aut_concrete(base, opts)?)?;
            Ok(Built::WreathSym { base: aut_base, n: *n })
        }
        _ => {
            let g = require_concrete(build(inner, opts)?)?;
            let aut = AutGroup::brute(g)?;
            Ok(Built::Concrete(aut.as_group()?))
        }
    }
}

fn is_simple_atom(expr: &GroupExpr) -> bool {
    match expr {
        GroupExpr::Atom { family, param } => match family {
            Family::Psl2 => *param >= 4,
            Family::Alt => *param >= 5,
            _ => false,
        },
        _ => false,
    }
}

/// Automorphism-group realization of an expression, for quantities that need
/// automorphism actions (mao, lambda, lambda-aff).
pub fn aut_realization(expr: &GroupExpr, opts: &EvalOptions) -> Result<AutGroup> {
    match expr {
        GroupExpr::Atom { family, param } => match family {
            Family::Psl2 => pgl2_family(*param)?.aut_psl(),
            Family::Pgl2 => pgl2_family(*param)?.aut_pgl(),
            Family::PGammaL2 => pgl2_family(*param)?.aut_pgammal(),
            Family::AutPsl3 => psl3_bundle(*param)?.aut_full(),
            Family::Alt if *param >= 7 || *param == 5 => {
                let g = Arc::new(alt(*param as usize)?);
                let ambient = Arc::new(sym(*param as usize)?);
                AutGroup::from_ambient(g, ambient)
            }
            Family::Sym if *param >= 3 && *param != 6 => {
                let g = Arc::new(sym(*param as usize)?);
                AutGroup::from_ambient(g.clone(), g)
            }
            _ => AutGroup::brute(require_concrete(build(expr, opts)?)?),
        },
        GroupExpr::Aut(inner) => {
            let g = require_concrete(build_aut_concrete(inner, opts)?)?;
            // Automorphism groups of nonabelian simple groups are complete.
            if matches!(
                inner.as_ref(),
                GroupExpr::Atom { family: Family::Psl2 | Family::Pgl2 | Family::PGammaL2 | Family::AutPsl3, .. }
            ) || matches!(inner.as_ref(), GroupExpr::Atom { family: Family::Alt, param } if *param >= 5 && *param != 6)
            {
                AutGroup::from_ambient(g.clone(), g)
            } else {
                AutGroup::brute(g)
            }
        }
        _ => AutGroup::brute(require_concrete(build(expr, opts)?)?),
    }
}

/// Quantities computable for a group expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Order,
    Meo,
    Mao,
    Exponent,
    Lambda,
    LambdaAff,
    RadicalIndex,
    SocleOrder,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Order => "order",
            Quantity::Meo => "meo",
            Quantity::Mao => "mao",
            Quantity::Exponent => "exponent",
            Quantity::Lambda => "lambda",
            Quantity::LambdaAff => "lambda-aff",
            Quantity::RadicalIndex => "radical-index",
            Quantity::SocleOrder => "socle-order",
        }
    }
}

impl FromStr for Quantity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Quantity> {
        match s {
            "order" => Ok(Quantity::Order),
            "meo" => Ok(Quantity::Meo),
            "mao" => Ok(Quantity::Mao),
            "exponent" => Ok(Quantity::Exponent),
            "lambda" => Ok(Quantity::Lambda),
            "lambda-aff" => Ok(Quantity::LambdaAff),
            "radical-index" => Ok(Quantity::RadicalIndex),
            "socle-order" => Ok(Quantity::SocleOrder),
            _ => Err(Error::invalid(format!("unknown quantity '{s}'"))),
        }
    }
}

/// Exact fraction in lowest terms.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

impl Fraction {
    fn reduced(num: u64, den: u64) -> Fraction {
        let g = gcd(num, den).max(1);
        Fraction { num: (num / g).to_string(), den: (den / g).to_string() }
    }
}

/// One computation result; exact integers are serialized as decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub group: String,
    pub order: String,
    pub quantity: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fraction: Option<Fraction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub wall_ms: u128,
}

/// Computes one quantity of one expression.
pub fn cmd_compute(expr: &GroupExpr, quantity: Quantity, opts: &EvalOptions) -> Result<Report> {
    let started = std::time::Instant::now();
    let built = build(expr, opts)?;
    let order: BigUint = match &built {
        Built::Concrete(g) => BigUint::from(g.order()),
        Built::WreathSym { base, n } => {
            BigUint::from(base.order()).pow(*n)
                * (1..=*n as u64).map(BigUint::from).product::<BigUint>().max(BigUint::one())
        }
    };
    let mut fraction = None;
    let mut witness = None;
    let value: BigUint = match (&built, quantity) {
        (_, Quantity::Order) => order.clone(),
        (Built::Concrete(g), Quantity::Meo) => BigUint::from(g.meo()),
        (Built::WreathSym { base, n }, Quantity::Meo) => {
            BigUint::from(wreath_meo(base, *n as usize)?)
        }
        (Built::Concrete(g), Quantity::Exponent) => BigUint::from(g.exponent()),
        (Built::Concrete(_), Quantity::Mao) => {
            BigUint::from(aut_realization(expr, opts)?.mao())
        }
        (Built::Concrete(g), Quantity::Lambda) => {
            let aut = aut_realization(expr, opts)?;
            let lam = lambda_auto(&aut)?;
            fraction = Some(Fraction::reduced(lam, g.order() as u64));
            BigUint::from(lam)
        }
        (Built::Concrete(g), Quantity::LambdaAff) => {
            let aut = aut_realization(expr, opts)?;
            let sweep = g.order() as u64 * aut.order();
            if sweep > opts.max_affine_sweep {
                return Err(Error::guard(
                    "max-affine-sweep",
                    format!("|G|·|Aut(G)| = {sweep} exceeds {}", opts.max_affine_sweep),
                ));
            }
            let lam = if g.is_semisimple()? {
                lambda_aff_semisimple(&aut)?
            } else {
                let (lam, w) = lambda_aff_exact(&aut)?;
                witness = Some(format!("alpha #{}, x #{}, start #{}", w.alpha, w.x, w.start));
                lam
            };
            fraction = Some(Fraction::reduced(lam, g.order() as u64));
            BigUint::from(lam)
        }
        (Built::Concrete(g), Quantity::RadicalIndex) => {
            BigUint::from(g.order() / g.solvable_radical()?.len())
        }
        (Built::Concrete(g), Quantity::SocleOrder) => BigUint::from(g.socle()?.len()),
        (Built::WreathSym { .. }, q) => {
            return Err(Error::invalid(format!(
                "quantity '{}' is not supported for symbolic wreath products",
                q.name()
            )))
        }
    };
    Ok(Report {
        command: format!("compute {}", quantity.name()),
        group: expr.to_string(),
        order: order.to_string(),
        quantity: quantity.name().to_string(),
        value: value.to_string(),
        fraction,
        witness,
        wall_ms: started.elapsed().as_millis(),
    })
}

/// Convenience wrapper: checks every affine map of the expression's group for
/// a regular cycle (semisimple groups only); `None` means all have one.
pub fn cmd_regular_cycles(expr: &GroupExpr, opts: &EvalOptions) -> Result<Option<(usize, usize)>> {
    let aut = aut_realization(expr, opts)?;
    check_regular_cycles(&aut)
}
