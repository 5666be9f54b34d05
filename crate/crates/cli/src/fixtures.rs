//! Golden fixtures: named ideals and modules plus checks such as
//! `expr = "eq-ideal(socle(tau3), printed)"`, `expect = 1`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use macaulay::{
    ideal_ann, ideal_wj, inv_syst, parse_poly, weierstrass_j, Action, IdealHandle, Ring, SocleIdeal, SubmoduleHandle,
};
use serde::Deserialize;
use serde_json::{json, Map};

use crate::commands::Outcome;
use crate::error::{exit, CliError};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Fixture {
    name: String,
    vars: usize,
    #[serde(default)]
    characteristic: u64,
    action: Option<String>,
    #[serde(default)]
    ideals: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    modules: BTreeMap<String, Vec<String>>,
    #[serde(rename = "check", default)]
    checks: Vec<Check>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Check {
    expr: String,
    expect: toml::Value,
}

enum Val {
    Ideal(IdealHandle),
    Module(SubmoduleHandle),
    Int(i64),
    List(Vec<i64>),
    Number(String),
}

struct Scope {
    ring: Ring,
    action: Action,
    ideals: BTreeMap<String, IdealHandle>,
    modules: BTreeMap<String, SubmoduleHandle>,
}

type EvalResult<T> = Result<T, String>;

fn math<T>(r: macaulay::Result<T>) -> EvalResult<T> {
    r.map_err(|e| e.to_string())
}

#[derive(Debug, PartialEq)]
enum Expr {
    Name(String),
    Number(String),
    Call(String, Vec<Expr>),
}

fn parse_expr(src: &str) -> EvalResult<Expr> {
    let mut p = ExprParser { chars: src.chars().filter(|c| !c.is_whitespace()).collect(), at: 0 };
    let e = p.expr()?;
    if p.at != p.chars.len() {
        return Err(format!("trailing input in {src:?}"));
    }
    Ok(e)
}

struct ExprParser {
    chars: Vec<char>,
    at: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let start = self.at;
        while self.peek().is_some_and(&f) {
            self.at += 1;
        }
        self.chars[start..self.at].iter().collect()
    }

    fn expr(&mut self) -> EvalResult<Expr> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '-' => {
                let s = self.take_while(|c| c.is_ascii_digit() || c == '-' || c == '/');
                Ok(Expr::Number(s))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_');
                if self.peek() != Some('(') {
                    return Ok(Expr::Name(name));
                }
                self.at += 1;
                let mut args = vec![self.expr()?];
                while self.peek() == Some(',') {
                    self.at += 1;
                    args.push(self.expr()?);
                }
                if self.peek() != Some(')') {
                    return Err(format!("expected ')' after arguments of {name}"));
                }
                self.at += 1;
                Ok(Expr::Call(name, args))
            }
            other => Err(format!("unexpected {other:?}")),
        }
    }
}

impl Scope {
    fn eval(&self, e: &Expr) -> EvalResult<Val> {
        match e {
            Expr::Number(s) => Ok(Val::Number(s.clone())),
            Expr::Name(n) => {
                if let Some(i) = self.ideals.get(n) {
                    Ok(Val::Ideal(i.clone()))
                } else if let Some(m) = self.modules.get(n) {
                    Ok(Val::Module(m.clone()))
                } else {
                    Err(format!("unknown name {n}"))
                }
            }
            Expr::Call(f, args) => {
                let vals = args.iter().map(|a| self.eval(a)).collect::<EvalResult<Vec<_>>>()?;
                self.call(f, vals)
            }
        }
    }

    fn number(&self, v: &Val) -> EvalResult<macaulay::Scalar> {
        match v {
            Val::Number(s) => Ok(math(parse_poly(s, &self.ring))?.constant_term()),
            _ => Err("expected a number".into()),
        }
    }

    fn call(&self, f: &str, args: Vec<Val>) -> EvalResult<Val> {
        let bool_val = |b: bool| Val::Int(i64::from(b));
        match (f, args.as_slice()) {
            ("is-ag", [Val::Ideal(i)]) => Ok(Val::Int(i.is_ag())),
            ("is-level", [Val::Ideal(i)]) => Ok(Val::Int(i.is_level())),
            ("cm-type", [Val::Ideal(i)]) => Ok(Val::Int(i.cm_type())),
            ("hilbert", [Val::Ideal(i)]) => {
                Ok(Val::List(math(i.hilbert())?.values().iter().map(|&v| v as i64).collect()))
            }
            ("socle", [Val::Ideal(i)]) => match math(i.socle())? {
                SocleIdeal::Ideal(s) => Ok(Val::Ideal(s)),
                SocleIdeal::Unit => Err("socle is the unit ideal".into()),
            },
            ("inv-syst", [Val::Ideal(i)]) => Ok(Val::Module(math(inv_syst(i, self.action))?)),
            ("ideal-ann", [Val::Module(m)]) => Ok(Val::Ideal(math(ideal_ann(m))?)),
            ("min-gens-ih", [Val::Module(m)]) => Ok(Val::Module(math(m.minimized())?)),
            ("count", [Val::Ideal(i)]) => Ok(Val::Int(i.generators().len() as i64)),
            ("count", [Val::Module(m)]) => Ok(Val::Int(m.generators().len() as i64)),
            ("length", [Val::Module(m)]) => Ok(Val::Int(math(m.length())? as i64)),
            ("eq-ideal", [Val::Ideal(a), Val::Ideal(b)]) => Ok(bool_val(math(a.eq_ideal(b))?)),
            ("eq-mod-ih", [Val::Module(a), Val::Module(b)]) => Ok(bool_val(math(a.eq_module(b))?)),
            ("sub-mod-ih", [Val::Module(a), Val::Module(b)]) => Ok(bool_val(math(a.is_submodule_of(b))?)),
            ("contains-power", [Val::Ideal(i), d]) => {
                let d: u32 = match d {
                    Val::Number(s) => s.parse().map_err(|_| format!("bad degree {s}"))?,
                    _ => return Err("expected a degree".into()),
                };
                Ok(bool_val(math(i.contains_power_of_maximal(d))?))
            }
            ("ideal-wj", [j]) => Ok(Val::Ideal(math(ideal_wj(&self.ring, &self.number(j)?))?)),
            ("weierstrass-j", [j]) => {
                let w = math(weierstrass_j(&self.ring, &self.number(j)?))?;
                Ok(Val::Module(math(SubmoduleHandle::new(self.ring, self.action, vec![w]))?))
            }
            _ => Err(format!("no function {f} for these arguments")),
        }
    }
}

fn matches(v: &Val, expect: &toml::Value) -> bool {
    match (v, expect) {
        (Val::Int(a), toml::Value::Integer(b)) => a == b,
        (Val::List(a), toml::Value::Array(b)) => {
            a.len() == b.len() && a.iter().zip(b).all(|(x, y)| y.as_integer() == Some(*x))
        }
        _ => false,
    }
}

fn show(v: &Val) -> String {
    match v {
        Val::Int(a) => a.to_string(),
        Val::List(a) => format!("{a:?}"),
        Val::Ideal(_) => "<ideal>".into(),
        Val::Module(_) => "<module>".into(),
        Val::Number(s) => s.clone(),
    }
}

fn load(path: &Path) -> Result<(Fixture, Scope), CliError> {
    let file = path.display().to_string();
    let err = |message: String| CliError::Fixture { file: file.clone(), message };
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: file.clone(), source })?;
    let fixture: Fixture = toml::from_str(&text).map_err(|e| err(e.to_string()))?;
    let ring = Ring::new(fixture.vars, fixture.characteristic).map_err(|e| err(e.to_string()))?;
    let action = match fixture.action.as_deref() {
        None => ring.default_action(),
        Some("der") => Action::Derivation,
        Some("cont") => Action::Contraction,
        Some(other) => return Err(err(format!("unknown action {other}"))),
    };
    let parse_all = |src: &Vec<String>| {
        src.iter().map(|s| parse_poly(s, &ring)).collect::<macaulay::Result<Vec<_>>>().map_err(|e| err(e.to_string()))
    };
    let mut ideals = BTreeMap::new();
    for (name, gens) in &fixture.ideals {
        let i = IdealHandle::new(ring, parse_all(gens)?).map_err(|e| err(format!("{name}: {e}")))?;
        ideals.insert(name.clone(), i);
    }
    let mut modules = BTreeMap::new();
    for (name, gens) in &fixture.modules {
        let m = SubmoduleHandle::new(ring, action, parse_all(gens)?).map_err(|e| err(format!("{name}: {e}")))?;
        modules.insert(name.clone(), m);
    }
    Ok((fixture, Scope { ring, action, ideals, modules }))
}

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn replay(dir: Option<&Path>) -> Result<Outcome, CliError> {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(default_dir);
    let entries =
        std::fs::read_dir(&dir).map_err(|e| CliError::Usage(format!("fixture directory {}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Usage(format!("no .toml fixtures in {}", dir.display())));
    }
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let (mut passed, mut total) = (0, 0);
    for path in &paths {
        let (fixture, scope) = load(path)?;
        let file = path.file_name().unwrap_or_default().to_string_lossy().to_string();
        let mut ok_all = true;
        for check in &fixture.checks {
            total += 1;
            let got = parse_expr(&check.expr).and_then(|e| scope.eval(&e));
            let (ok, shown) = match &got {
                Ok(v) => (matches(v, &check.expect), show(v)),
                Err(e) => (false, format!("error: {e}")),
            };
            passed += usize::from(ok);
            ok_all &= ok;
            if !ok {
                lines.push(format!("  {}: expected {}, got {shown}", check.expr, check.expect));
            }
        }
        lines.push(format!("{file} ({}): {}", fixture.name, if ok_all { "pass" } else { "FAIL" }));
        results.push(json!({ "file": file, "name": fixture.name, "checks": fixture.checks.len(), "passed": ok_all }));
    }
    lines.push(format!("{passed}/{total} checks passed"));
    let code = if passed == total { exit::OK } else { exit::PRECONDITION };
    let mut d = Map::new();
    d.insert("checks".into(), json!(total));
    d.insert("passedChecks".into(), json!(passed));
    Ok(Outcome { text: lines.join("\n"), result: serde_json::Value::Array(results), diagnostics: d, code })
}
