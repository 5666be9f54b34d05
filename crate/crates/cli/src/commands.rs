use macaulay::poly::gen_pol;
use macaulay::{
    classification_table, colon_inv_syst, eq_mod_ih, hilbert_via_inverse_system, ideal_ann, ideal_wj, inv_syst,
    j_invariant, member_ih, min_gens_ih, sub_mod_ih, verify_row, weierstrass_ab, weierstrass_j, Action, ArtinStatus,
    IdealHandle, Polynomial, Ring, SocleIdeal, SubmoduleHandle,
};
use serde_json::{json, Map, Value};

use crate::args::{ActionArg, Command, RingArgs};
use crate::error::{exit, CliError};
use crate::fixtures;
use crate::input::{read_poly, read_polys, read_scalar};

/// What a command produced, in both output encodings.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub result: Value,
    pub diagnostics: Map<String, Value>,
    pub code: u8,
}

impl Outcome {
    fn new(text: String, result: Value) -> Self {
        Outcome { text, result, diagnostics: Map::new(), code: exit::OK }
    }

    fn integer(v: i64) -> Self {
        Outcome::new(v.to_string(), json!(v))
    }

    fn boolean(b: bool) -> Self {
        Outcome::new(if b { "1" } else { "0" }.into(), json!(b))
    }

    fn poly(p: &Polynomial) -> Self {
        Outcome::new(p.to_string(), json!(p.to_string()))
    }

    fn polys(ps: &[Polynomial]) -> Self {
        let lines: Vec<String> = ps.iter().enumerate().map(|(k, p)| format!("g[{}]={p}", k + 1)).collect();
        let strings: Vec<String> = ps.iter().map(ToString::to_string).collect();
        Outcome::new(lines.join("\n"), json!(strings))
    }

    fn with(mut self, diagnostics: Map<String, Value>, code: u8) -> Self {
        self.diagnostics.extend(diagnostics);
        self.code = self.code.max(code);
        self
    }
}

pub struct Context {
    pub ring: Ring,
    pub action: Action,
}

impl Context {
    pub fn from_args(args: &RingArgs) -> Result<Self, CliError> {
        let ring = Ring::new(args.vars, args.characteristic)?.with_max_degree(args.max_degree)?;
        let action = match args.action {
            Some(ActionArg::Der) => Action::Derivation,
            Some(ActionArg::Cont) => Action::Contraction,
            None => ring.default_action(),
        };
        let ring = ring.with_action(action)?;
        Ok(Context { ring, action })
    }

    fn ideal(&self, arg: &str) -> Result<IdealHandle, CliError> {
        Ok(IdealHandle::new(self.ring, read_polys(arg, &self.ring)?)?)
    }

    fn module(&self, arg: &str) -> Result<SubmoduleHandle, CliError> {
        Ok(SubmoduleHandle::new(self.ring, self.action, read_polys(arg, &self.ring)?)?)
    }
}

/// Search outcome for the json diagnostics, and exit 4 when it was cut off by the cap.
fn artin_diagnostics(ideal: &IdealHandle) -> (Map<String, Value>, u8) {
    let mut d = Map::new();
    let code = match ideal.artin_status() {
        ArtinStatus::Artin { socle_degree } => {
            d.insert("artin".into(), json!("yes"));
            d.insert("socleDegree".into(), json!(socle_degree));
            exit::OK
        }
        ArtinStatus::NotArtin { proven: true, .. } => {
            d.insert("artin".into(), json!("no"));
            exit::OK
        }
        ArtinStatus::NotArtin { proven: false, searched_to } => {
            d.insert("artin".into(), json!("inconclusive"));
            d.insert("searchedTo".into(), json!(searched_to));
            exit::INCONCLUSIVE
        }
    };
    (d, code)
}

fn require_artin(ideal: &IdealHandle) -> Result<(), CliError> {
    ideal.socle_degree()?;
    Ok(())
}

pub fn run(command: &Command, ctx: &Context) -> Result<Outcome, CliError> {
    match command {
        Command::InvSyst { ideal, gorenstein } => {
            let i = ctx.ideal(ideal)?;
            require_artin(&i)?;
            if *gorenstein && i.is_ag() < 0 {
                return Err(CliError::Precondition("the ideal is not Gorenstein".into()));
            }
            let m = inv_syst(&i, ctx.action)?;
            let (d, code) = artin_diagnostics(&i);
            Ok(Outcome::polys(m.generators()).with(d, code))
        }
        Command::IdealAnn { module, gorenstein } => {
            let m = ctx.module(module)?;
            if *gorenstein && m.generators().len() != 1 {
                return Err(CliError::Precondition("expected a single polynomial".into()));
            }
            let i = ideal_ann(&m)?;
            let (d, code) = artin_diagnostics(&i);
            Ok(Outcome::polys(i.generators()).with(d, code))
        }
        Command::Socle { ideal } => {
            let i = ctx.ideal(ideal)?;
            let (d, code) = artin_diagnostics(&i);
            let out = if !i.is_artin() {
                Outcome::integer(-1)
            } else {
                match i.socle()? {
                    SocleIdeal::Unit => Outcome::polys(&[Polynomial::one(ctx.ring)]),
                    SocleIdeal::Ideal(s) => Outcome::polys(s.generators()),
                }
            };
            Ok(out.with(d, code))
        }
        Command::CmType { ideal } => integer_verdict(ctx, ideal, IdealHandle::cm_type),
        Command::IsAg { ideal } => integer_verdict(ctx, ideal, IdealHandle::is_ag),
        Command::IsLevel { ideal } => integer_verdict(ctx, ideal, IdealHandle::is_level),
        Command::EqIdeal { first, second } => {
            let (a, b) = (ctx.ideal(first)?, ctx.ideal(second)?);
            Ok(Outcome::boolean(a.eq_ideal(&b)?))
        }
        Command::MemberIh { poly, module } => {
            let g = read_poly(poly, &ctx.ring)?;
            Ok(Outcome::boolean(member_ih(&g, &ctx.module(module)?)?))
        }
        Command::SubModIh { first, second } => {
            Ok(Outcome::boolean(sub_mod_ih(&ctx.module(first)?, &ctx.module(second)?)?))
        }
        Command::EqModIh { first, second } => {
            Ok(Outcome::boolean(eq_mod_ih(&ctx.module(first)?, &ctx.module(second)?)?))
        }
        Command::MinGensIh { module } => Ok(Outcome::polys(&min_gens_ih(&ctx.module(module)?)?)),
        Command::Colon { f, g } => {
            let (f, g) = (read_poly(f, &ctx.ring)?, read_poly(g, &ctx.ring)?);
            Ok(match colon_inv_syst(&f, &g, ctx.action)? {
                Some(h) => Outcome::poly(&h),
                None => Outcome::new("0".into(), Value::Null),
            })
        }
        Command::GenPol { from, to, bound, seed } => {
            let p = gen_pol(*from, *to, *bound, &ctx.ring, *seed)?;
            let mut d = Map::new();
            d.insert("seed".into(), json!(seed));
            Ok(Outcome::poly(&p).with(d, exit::OK))
        }
        Command::Hilbert { ideal, via_dual } => {
            let i = ctx.ideal(ideal)?;
            require_artin(&i)?;
            let hf = if *via_dual { hilbert_via_inverse_system(&i, ctx.action)? } else { i.hilbert()? };
            let (d, code) = artin_diagnostics(&i);
            Ok(Outcome::new(hf.to_string(), json!(hf.values())).with(d, code))
        }
        Command::JInvariant { a, b } => {
            let j = j_invariant(&read_scalar(a, &ctx.ring)?, &read_scalar(b, &ctx.ring)?)?;
            Ok(Outcome::new(j.to_string(), json!(j.to_string())))
        }
        Command::WeierstrassAb { a, b } => {
            Ok(Outcome::poly(&weierstrass_ab(&ctx.ring, &read_scalar(a, &ctx.ring)?, &read_scalar(b, &ctx.ring)?)?))
        }
        Command::WeierstrassJ { j } => Ok(Outcome::poly(&weierstrass_j(&ctx.ring, &read_scalar(j, &ctx.ring)?)?)),
        Command::IdealWj { j } => Ok(Outcome::polys(ideal_wj(&ctx.ring, &read_scalar(j, &ctx.ring)?)?.generators())),
        Command::VerifyClassification { j } => verify_classification(ctx, j),
        Command::Replay { dir } => fixtures::replay(dir.as_deref()),
    }
}

fn integer_verdict(ctx: &Context, ideal: &str, verdict: fn(&IdealHandle) -> i64) -> Result<Outcome, CliError> {
    let i = ctx.ideal(ideal)?;
    let (d, code) = artin_diagnostics(&i);
    Ok(Outcome::integer(verdict(&i)).with(d, code))
}

fn verify_classification(ctx: &Context, j: &str) -> Result<Outcome, CliError> {
    if ctx.action != Action::Derivation {
        return Err(CliError::Precondition("the classification is verified under the derivation action".into()));
    }
    let table = classification_table(&ctx.ring, &read_scalar(j, &ctx.ring)?)?;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut failed = 0;
    for (k, row) in table.iter().enumerate() {
        let report = verify_row(&ctx.ring, row)?;
        let verdict =
            if report.passed() { "pass".to_string() } else { format!("FAIL ({})", report.failures().join("; ")) };
        failed += usize::from(!report.passed());
        lines.push(format!("row {} {}: F = {}: {verdict}", k + 1, row.label, row.inverse_system));
        rows.push(json!({
            "row": k + 1,
            "label": row.label,
            "inverseSystem": row.inverse_system.to_string(),
            "annihilatorMatches": report.annihilator_matches,
            "hilbert": report.hilbert.values(),
            "isAG": report.is_ag,
            "passed": report.passed(),
        }));
    }
    lines.push(format!("{}/{} rows verified", table.len() - failed, table.len()));
    let code = if failed == 0 { exit::OK } else { exit::PRECONDITION };
    Ok(Outcome::new(lines.join("\n"), Value::Array(rows)).with(Map::new(), code))
}
