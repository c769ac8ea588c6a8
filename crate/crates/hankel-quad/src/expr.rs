//! A small expression language for the amplitude f and oscillator g, plus
//! critical-point classification of the oscillator.
//!
//! Grammar: numbers, `x`, `pi`, `+ - * / ^`, and `sin cos exp log sqrt`
//! with parenthesized arguments. Precedence: power, then unary minus, then
//! multiplication and division, then addition and subtraction; equal
//! precedence associates left. Power exponents must be constant
//! subexpressions (no `x`), checked at parse time.

use crate::error::{Error, Result};
use crate::jets::{Jet, SmoothFn};

#[derive(Debug, Clone, PartialEq)]
enum Ast {
    Num(f64),
    Var,
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    /// Exponent subtree is x-free; its value is fixed at parse time.
    Pow(Box<Ast>, Box<Ast>, f64),
    Neg(Box<Ast>),
    Fun(FunKind, Box<Ast>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FunKind {
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
}

impl FunKind {
    fn name(self) -> &'static str {
        match self {
            FunKind::Sin => "sin",
            FunKind::Cos => "cos",
            FunKind::Exp => "exp",
            FunKind::Log => "log",
            FunKind::Sqrt => "sqrt",
        }
    }
}

/// A parsed, immutable expression in one variable. Evaluation is pure, so
/// sharing across threads is safe.
#[derive(Debug, Clone, PartialEq)]
pub struct ExprFunction {
    ast: Ast,
}

// ---- tokenizer ----

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => { toks.push((i, Tok::Plus)); i += 1; }
            '-' => { toks.push((i, Tok::Minus)); i += 1; }
            '*' => { toks.push((i, Tok::Star)); i += 1; }
            '/' => { toks.push((i, Tok::Slash)); i += 1; }
            '^' => { toks.push((i, Tok::Caret)); i += 1; }
            '(' => { toks.push((i, Tok::LParen)); i += 1; }
            ')' => { toks.push((i, Tok::RParen)); i += 1; }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                    i += 1;
                }
                // Exponent suffix: 1e-3, 2.5E+7.
                if i < bytes.len() && matches!(bytes[i] as char, 'e' | 'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && matches!(bytes[j] as char, '+' | '-') {
                        j += 1;
                    }
                    if j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &src[start..i];
                let v: f64 = text.parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: format!("bad number literal '{text}'"),
                })?;
                toks.push((start, Tok::Num(v)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => {
                return Err(Error::Parse { pos: i, msg: format!("unexpected character '{c}'") });
            }
        }
    }
    Ok(toks)
}

// ---- parser ----

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    src_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src_len, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect_rparen(&mut self) -> Result<()> {
        match self.bump() {
            Some(Tok::RParen) => Ok(()),
            _ => Err(Error::Parse { pos: self.here().saturating_sub(1), msg: "expected ')'".into() }),
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let mut lhs = self.primary()?;
        while matches!(self.peek(), Some(Tok::Caret)) {
            let caret_pos = self.here();
            self.bump();
            let rhs = self.primary()?;
            let value = const_value(&rhs).ok_or_else(|| Error::Parse {
                pos: caret_pos,
                msg: "exponent must be a constant expression".into(),
            })?;
            lhs = Ast::Pow(Box::new(lhs), Box::new(rhs), value);
        }
        Ok(lhs)
    }

    fn primary(&mut self) -> Result<Ast> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Num(v)) => Ok(Ast::Num(v)),
            Some(Tok::Ident(name)) => match name.as_str() {
                "x" => Ok(Ast::Var),
                "pi" => Ok(Ast::Num(std::f64::consts::PI)),
                "sin" | "cos" | "exp" | "log" | "sqrt" => {
                    let kind = match name.as_str() {
                        "sin" => FunKind::Sin,
                        "cos" => FunKind::Cos,
                        "exp" => FunKind::Exp,
                        "log" => FunKind::Log,
                        _ => FunKind::Sqrt,
                    };
                    match self.bump() {
                        Some(Tok::LParen) => {}
                        _ => {
                            return Err(Error::Parse {
                                pos,
                                msg: format!("'{name}' needs a parenthesized argument"),
                            })
                        }
                    }
                    let arg = self.expr()?;
                    self.expect_rparen()?;
                    Ok(Ast::Fun(kind, Box::new(arg)))
                }
                _ => Err(Error::Parse { pos, msg: format!("unknown identifier '{name}'") }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Some(t) => Err(Error::Parse { pos, msg: format!("unexpected token {t:?}") }),
            None => Err(Error::Parse { pos, msg: "unexpected end of input".into() }),
        }
    }
}

/// Value of an x-free subtree, or None if it mentions the variable.
fn const_value(ast: &Ast) -> Option<f64> {
    match ast {
        Ast::Num(v) => Some(*v),
        Ast::Var => None,
        Ast::Add(l, r) => Some(const_value(l)? + const_value(r)?),
        Ast::Sub(l, r) => Some(const_value(l)? - const_value(r)?),
        Ast::Mul(l, r) => Some(const_value(l)? * const_value(r)?),
        Ast::Div(l, r) => Some(const_value(l)? / const_value(r)?),
        Ast::Pow(l, _, e) => Some(const_value(l)?.powf(*e)),
        Ast::Neg(i) => Some(-const_value(i)?),
        Ast::Fun(k, i) => {
            let v = const_value(i)?;
            Some(match k {
                FunKind::Sin => v.sin(),
                FunKind::Cos => v.cos(),
                FunKind::Exp => v.exp(),
                FunKind::Log => v.ln(),
                FunKind::Sqrt => v.sqrt(),
            })
        }
    }
}

impl ExprFunction {
    pub fn parse(src: &str) -> Result<Self> {
        if src.trim().is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
        }
        let toks = tokenize(src)?;
        let mut p = Parser { toks: &toks, pos: 0, src_len: src.len() };
        let ast = p.expr()?;
        if p.pos != toks.len() {
            return Err(Error::Parse { pos: p.here(), msg: "trailing input".into() });
        }
        Ok(Self { ast })
    }

    /// The composition self(inner(x)): every occurrence of the variable is
    /// replaced by `inner`. Power exponents are x-free by construction and
    /// pass through untouched.
    pub fn substitute(&self, inner: &ExprFunction) -> ExprFunction {
        fn walk(a: &Ast, inner: &Ast) -> Ast {
            match a {
                Ast::Num(v) => Ast::Num(*v),
                Ast::Var => inner.clone(),
                Ast::Add(l, r) => {
                    Ast::Add(Box::new(walk(l, inner)), Box::new(walk(r, inner)))
                }
                Ast::Sub(l, r) => {
                    Ast::Sub(Box::new(walk(l, inner)), Box::new(walk(r, inner)))
                }
                Ast::Mul(l, r) => {
                    Ast::Mul(Box::new(walk(l, inner)), Box::new(walk(r, inner)))
                }
                Ast::Div(l, r) => {
                    Ast::Div(Box::new(walk(l, inner)), Box::new(walk(r, inner)))
                }
                Ast::Pow(base, e, v) => Ast::Pow(Box::new(walk(base, inner)), e.clone(), *v),
                Ast::Neg(u) => Ast::Neg(Box::new(walk(u, inner))),
                Ast::Fun(k, u) => Ast::Fun(*k, Box::new(walk(u, inner))),
            }
        }
        ExprFunction { ast: walk(&self.ast, &inner.ast) }
    }

    /// The pointwise product self * other as a new expression.
    pub fn product(&self, other: &ExprFunction) -> ExprFunction {
        ExprFunction {
            ast: Ast::Mul(Box::new(self.ast.clone()), Box::new(other.ast.clone())),
        }
    }

    /// Checks evaluability on a dense grid over [a, b]; surfaces the first
    /// domain violation (log of a non-positive value, a pole, ...).
    pub fn probe(&self, a: f64, b: f64, points: usize) -> Result<()> {
        let n = points.max(2);
        for i in 0..n {
            let x = a + (b - a) * i as f64 / (n - 1) as f64;
            let v = self.value(x)?;
            if !v.is_finite() {
                return Err(Error::Eval { x, msg: "non-finite value".into() });
            }
        }
        Ok(())
    }

    fn eval_value(ast: &Ast, x: f64) -> Result<f64> {
        Ok(match ast {
            Ast::Num(v) => *v,
            Ast::Var => x,
            Ast::Add(l, r) => Self::eval_value(l, x)? + Self::eval_value(r, x)?,
            Ast::Sub(l, r) => Self::eval_value(l, x)? - Self::eval_value(r, x)?,
            Ast::Mul(l, r) => Self::eval_value(l, x)? * Self::eval_value(r, x)?,
            Ast::Div(l, r) => {
                let den = Self::eval_value(r, x)?;
                if den == 0.0 {
                    return Err(Error::Eval { x, msg: "division by zero".into() });
                }
                Self::eval_value(l, x)? / den
            }
            Ast::Pow(b, _, e) => {
                let base = Self::eval_value(b, x)?;
                let v = base.powf(*e);
                if !v.is_finite() {
                    return Err(Error::Eval { x, msg: format!("{base}^{e} undefined") });
                }
                v
            }
            Ast::Neg(i) => -Self::eval_value(i, x)?,
            Ast::Fun(k, i) => {
                let v = Self::eval_value(i, x)?;
                match k {
                    FunKind::Sin => v.sin(),
                    FunKind::Cos => v.cos(),
                    FunKind::Exp => v.exp(),
                    FunKind::Log => {
                        if v <= 0.0 {
                            return Err(Error::Eval { x, msg: format!("log of {v}") });
                        }
                        v.ln()
                    }
                    FunKind::Sqrt => {
                        if v < 0.0 {
                            return Err(Error::Eval { x, msg: format!("sqrt of {v}") });
                        }
                        v.sqrt()
                    }
                }
            }
        })
    }

    fn eval_jet(ast: &Ast, center: f64, n: usize) -> Result<Jet> {
        Ok(match ast {
            Ast::Num(v) => Jet::constant(center, *v, n),
            Ast::Var => Jet::variable(center, n),
            Ast::Add(l, r) => Self::eval_jet(l, center, n)?.add(&Self::eval_jet(r, center, n)?)?,
            Ast::Sub(l, r) => Self::eval_jet(l, center, n)?.sub(&Self::eval_jet(r, center, n)?)?,
            Ast::Mul(l, r) => Self::eval_jet(l, center, n)?.mul(&Self::eval_jet(r, center, n)?)?,
            Ast::Div(l, r) => {
                let den = Self::eval_jet(r, center, n)?;
                Self::eval_jet(l, center, n)?.div(&den).map_err(|_| Error::Eval {
                    x: center,
                    msg: "division by zero".into(),
                })?
            }
            Ast::Pow(b, _, e) => {
                let base = Self::eval_jet(b, center, n)?;
                let rounded = e.round();
                if (e - rounded).abs() < 1e-12 && rounded.abs() <= 64.0 {
                    let k = rounded as i64;
                    if k >= 0 {
                        base.powi(k as u32)
                    } else {
                        let inv = Jet::constant(center, 1.0, n).div(&base.powi((-k) as u32));
                        inv.map_err(|_| Error::Eval {
                            x: center,
                            msg: format!("negative power of zero base"),
                        })?
                    }
                } else {
                    base.powf(*e).map_err(|_| Error::Eval {
                        x: center,
                        msg: format!("{}^{e} undefined", base.value()),
                    })?
                }
            }
            Ast::Neg(i) => Self::eval_jet(i, center, n)?.scale(-1.0),
            Ast::Fun(k, i) => {
                let arg = Self::eval_jet(i, center, n)?;
                match k {
                    FunKind::Sin => arg.sin_cos().0,
                    FunKind::Cos => arg.sin_cos().1,
                    FunKind::Exp => arg.exp(),
                    FunKind::Log => arg.log().map_err(|_| Error::Eval {
                        x: center,
                        msg: format!("log of {}", arg.value()),
                    })?,
                    FunKind::Sqrt => arg.sqrt().map_err(|_| Error::Eval {
                        x: center,
                        msg: format!("sqrt of {}", arg.value()),
                    })?,
                }
            }
        })
    }
}

impl SmoothFn for ExprFunction {
    fn jet(&self, center: f64, n: usize) -> Result<Jet> {
        Self::eval_jet(&self.ast, center, n)
    }

    fn value(&self, x: f64) -> Result<f64> {
        Self::eval_value(&self.ast, x)
    }
}

// ---- printer ----

impl Ast {
    fn prec(&self) -> u8 {
        match self {
            Ast::Add(..) | Ast::Sub(..) => 1,
            Ast::Mul(..) | Ast::Div(..) => 2,
            Ast::Neg(..) => 3,
            Ast::Pow(..) => 4,
            Ast::Num(..) | Ast::Var | Ast::Fun(..) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut std::fmt::Formatter<'_>, min: u8) -> std::fmt::Result {
        let wrap = self.prec() < min;
        if wrap {
            write!(f, "(")?;
        }
        match self {
            Ast::Num(v) => write!(f, "{v}")?,
            Ast::Var => write!(f, "x")?,
            Ast::Add(l, r) => {
                l.fmt_prec(f, 1)?;
                write!(f, "+")?;
                r.fmt_prec(f, 2)?;
            }
            Ast::Sub(l, r) => {
                l.fmt_prec(f, 1)?;
                write!(f, "-")?;
                r.fmt_prec(f, 2)?;
            }
            Ast::Mul(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, "*")?;
                r.fmt_prec(f, 3)?;
            }
            Ast::Div(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, "/")?;
                r.fmt_prec(f, 3)?;
            }
            Ast::Neg(i) => {
                write!(f, "-")?;
                i.fmt_prec(f, 3)?;
            }
            Ast::Pow(b, e, _) => {
                b.fmt_prec(f, 5)?;
                write!(f, "^")?;
                // Exponent slot only admits a primary; parenthesize anything else.
                if matches!(**e, Ast::Num(v) if v >= 0.0) {
                    e.fmt_prec(f, 5)?;
                } else {
                    write!(f, "(")?;
                    e.fmt_prec(f, 0)?;
                    write!(f, ")")?;
                }
            }
            Ast::Fun(k, i) => {
                write!(f, "{}(", k.name())?;
                i.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl std::fmt::Display for ExprFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.ast.fmt_prec(f, 0)
    }
}

// ---- critical-point classification ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalKind {
    Zero,
    Stationary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StationaryType {
    I,
    II,
}

/// A point where the oscillator vanishes or its derivative does.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPoint {
    pub location: f64,
    pub kind: CriticalKind,
    /// Stationary order: g', ..., g^(r) vanish, g^(r+1) does not.
    pub order_r: Option<u32>,
    /// II means the oscillator itself also vanishes at the point.
    pub stationary_type: Option<StationaryType>,
    pub at_endpoint: bool,
}

pub const DEFAULT_SCAN_PANELS: usize = 2048;

/// Finds and classifies the critical points of the oscillator g on [a, b]
/// with the default scan density.
pub fn classify_oscillator(g: &ExprFunction, a: f64, b: f64) -> Result<Vec<CriticalPoint>> {
    classify_oscillator_with(g, a, b, DEFAULT_SCAN_PANELS)
}

/// Scan with a caller-chosen panel count. Sign changes of g, g', and g''
/// seed Newton refinement; refined points are merged and classified from the
/// local expansion of g. At most one critical point may survive; more than
/// one is a subdivision request to the caller, naming all of them.
pub fn classify_oscillator_with(
    g: &ExprFunction,
    a: f64,
    b: f64,
    panels: usize,
) -> Result<Vec<CriticalPoint>> {
    if !(a < b) {
        return Err(Error::Domain(format!("need a < b, got [{a}, {b}]")));
    }
    let n = panels.max(16) + 1;
    let mut vals = Vec::with_capacity(n);
    let mut max_g: f64 = 0.0;
    let mut max_gp: f64 = 0.0;
    for i in 0..n {
        let x = a + (b - a) * i as f64 / (n - 1) as f64;
        let jet = g.jet(x, 3)?;
        let (v, vp, vpp) = (jet.coeff(0), jet.coeff(1), 2.0 * jet.coeff(2));
        max_g = max_g.max(v.abs());
        max_gp = max_gp.max(vp.abs());
        vals.push((x, v, vp, vpp));
    }
    let tol_g = 1e-11 * (1.0 + max_g);
    let tol_gp = 1e-11 * (1.0 + max_gp);

    // Newton targets: order 0 polishes a root of g, 1 of g', 2 of g''.
    let mut candidates: Vec<f64> = Vec::new();
    for w in vals.windows(2) {
        let (x0, v0, p0, q0) = w[0];
        let (x1, v1, p1, q1) = w[1];
        for (order, l, r) in [(0u8, v0, v1), (1, p0, p1), (2, q0, q1)] {
            if l == 0.0 || l * r < 0.0 {
                let guess = if l == 0.0 || l == r { x0 } else { x0 + (x1 - x0) * l / (l - r) };
                if let Some(root) = polish_root(g, order, guess, a, b) {
                    candidates.push(root);
                }
            }
        }
    }
    // The very last grid node can be an exact root that no window's left edge
    // reported.
    if let Some(&(xn, vn, pn, _)) = vals.last() {
        if vn == 0.0 || pn == 0.0 {
            candidates.push(xn);
        }
    }

    // Merge clusters: all three scans find the same stationary point.
    candidates.sort_by(|u, v| u.partial_cmp(v).unwrap());
    let merge_eps = (b - a) * 1e-8;
    let mut merged: Vec<f64> = Vec::new();
    for c in candidates {
        if merged.last().map_or(true, |&m| c - m > merge_eps) {
            merged.push(c);
        }
    }

    let edge_eps = (b - a) * 1e-9;
    let mut points = Vec::new();
    // Per point: |g'|, |g|, and the basin radius inside which |g| stays
    // below detection tolerance (nonzero only for type-II stationary points).
    let mut metas: Vec<(f64, f64, f64)> = Vec::new();
    for mut loc in merged {
        let at_endpoint = loc - a <= edge_eps || b - loc <= edge_eps;
        if loc - a <= edge_eps {
            loc = a;
        } else if b - loc <= edge_eps {
            loc = b;
        }
        let jet = g.jet(loc, 16)?;
        let g_here = jet.coeff(0);
        let gp_here = jet.coeff(1);
        if gp_here.abs() > tol_gp {
            // Simple point: critical only if g itself vanishes.
            if g_here.abs() <= tol_g {
                points.push(CriticalPoint {
                    location: loc,
                    kind: CriticalKind::Zero,
                    order_r: None,
                    stationary_type: None,
                    at_endpoint,
                });
                metas.push((gp_here.abs(), g_here.abs(), 0.0));
            }
            continue;
        }
        // Stationary: order from the first surviving coefficient of g'.
        let coeff_scale = (0..jet.len()).fold(0.0f64, |m, j| m.max(jet.coeff(j).abs()));
        let tol_c = 1e-11 * (1.0 + coeff_scale);
        let mut r = None;
        for j in 2..jet.len() {
            if jet.coeff(j).abs() > tol_c {
                r = Some((j - 1) as u32);
                break;
            }
        }
        let r = r.ok_or_else(|| {
            Error::Numerical(format!("oscillator is flat to order {} at {loc}", jet.len()))
        })?;
        let ty = if g_here.abs() <= tol_g { StationaryType::II } else { StationaryType::I };
        let basin = if ty == StationaryType::II {
            2.0 * (tol_g / jet.coeff(r as usize + 1).abs()).powf(1.0 / (r as f64 + 1.0))
        } else {
            0.0
        };
        points.push(CriticalPoint {
            location: loc,
            kind: CriticalKind::Stationary,
            order_r: Some(r),
            stationary_type: Some(ty),
            at_endpoint,
        });
        metas.push((gp_here.abs(), g_here.abs(), basin));
    }

    // A root polished on g alone lands anywhere in a degenerate root's flat
    // basin, so candidates for one type-II stationary point can straggle past
    // the fine merge above. Points within each other's basin are one feature
    // at working precision; the best-centered sample (smallest |g'|) carries
    // the faithful order.
    if points.len() > 1 {
        let mut kept: Vec<(CriticalPoint, f64, f64, f64)> = Vec::new();
        for (p, (gp_abs, g_abs, basin)) in points.into_iter().zip(metas) {
            if let Some(last) = kept.last_mut() {
                if p.location - last.0.location <= last.3.max(basin) {
                    let wider = last.3.max(basin);
                    if gp_abs < last.1 || (gp_abs == last.1 && g_abs < last.2) {
                        *last = (p, gp_abs, g_abs, wider);
                    } else {
                        last.3 = wider;
                    }
                    continue;
                }
            }
            kept.push((p, gp_abs, g_abs, basin));
        }
        points = kept.into_iter().map(|k| k.0).collect();
    }

    if points.len() > 1 {
        return Err(Error::SubdivideRequired {
            a,
            b,
            points: points.iter().map(|p| p.location).collect(),
        });
    }
    Ok(points)
}

/// Newton on g, g', or g'' (order 0, 1, 2), clamped to [a, b], with a
/// noise-floor exit. Returns None if the iteration leaves the interval for
/// good or fails to settle.
fn polish_root(g: &ExprFunction, order: u8, start: f64, a: f64, b: f64) -> Option<f64> {
    let d = order as usize;
    let mut x = start.clamp(a, b);
    let scale = 1.0 + b.abs().max(a.abs());
    let mut last_dx = f64::INFINITY;
    for _ in 0..80 {
        let jet = g.jet(x, d + 2).ok()?;
        let fv = jet.derivative_value(d);
        let fd = jet.derivative_value(d + 1);
        if fd == 0.0 {
            return if fv == 0.0 { Some(x) } else { None };
        }
        let dx = fv / fd;
        x = (x - dx).clamp(a, b);
        if dx.abs() <= 1e-15 * scale {
            return Some(x);
        }
        if dx.abs() < 1e-7 * scale && dx.abs() >= 0.5 * last_dx {
            return Some(x);
        }
        last_dx = dx.abs();
    }
    // Multiple roots converge linearly; accept whatever the loop settled on
    // if the residual is tiny, otherwise give up.
    let jet = g.jet(x, d + 1).ok()?;
    if jet.derivative_value(d).abs() <= 1e-9 * scale {
        Some(x)
    } else {
        None
    }
}
