use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "macaulay",
    version,
    about = "Macaulay inverse systems of Artin quotients of k[[x1..xn]]",
    after_help = "Generator lists are inline text, a file path, or '-' for stdin. \
                  Lists containing a comma are split on commas, otherwise on newlines."
)]
pub struct Cli {
    #[command(flatten)]
    pub ring: RingArgs,

    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// Number of variables.
    #[arg(long, global = true, default_value_t = 3)]
    pub vars: usize,

    /// Characteristic: 0 or a prime.
    #[arg(long = "char", global = true, default_value_t = 0)]
    pub characteristic: u64,

    /// Module structure of S; defaults to der in characteristic 0 and cont otherwise.
    #[arg(long, global = true, value_enum)]
    pub action: Option<ActionArg>,

    /// Degree cap for truncations and the Artin search.
    #[arg(long, global = true, default_value_t = macaulay::poly::DEFAULT_MAX_DEGREE)]
    pub max_degree: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ActionArg {
    Der,
    Cont,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of the inverse system of an Artin ideal.
    InvSyst {
        #[arg(allow_hyphen_values = true)]
        ideal: String,
        /// Fail unless the ideal is Gorenstein.
        #[arg(long)]
        gorenstein: bool,
    },
    /// Minimal generators of the annihilator of a submodule of S.
    IdealAnn {
        #[arg(allow_hyphen_values = true)]
        module: String,
        /// Require a single generator (cyclic module).
        #[arg(long)]
        gorenstein: bool,
    },
    /// Generators of (I : m); -1 when the quotient is not Artin.
    Socle {
        #[arg(allow_hyphen_values = true)]
        ideal: String,
    },
    /// Cohen-Macaulay type; -1 when the quotient is not Artin.
    CmType {
        #[arg(allow_hyphen_values = true)]
        ideal: String,
    },
    /// -2 not Artin, -1 not Gorenstein, otherwise the socle degree.
    IsAg {
        #[arg(allow_hyphen_values = true)]
        ideal: String,
    },
    /// -2 not Artin, -1 not level, otherwise the socle degree.
    IsLevel {
        #[arg(allow_hyphen_values = true)]
        ideal: String,
    },
    /// 1 if the two Artin ideals are equal.
    EqIdeal {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// 1 if the polynomial lies in the submodule.
    MemberIh {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        module: String,
    },
    /// 1 if the first submodule is contained in the second.
    SubModIh {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// 1 if the two submodules are equal.
    EqModIh {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Minimal generators of a submodule of S.
    MinGensIh {
        #[arg(allow_hyphen_values = true)]
        module: String,
    },
    /// Some h with h∘f = g, or 0 when none exists.
    Colon {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Sum of generic forms of degrees FROM..=TO with coefficients in [-BOUND, BOUND].
    GenPol {
        from: u32,
        to: u32,
        bound: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hilbert function of R/I.
    Hilbert {
        #[arg(allow_hyphen_values = true)]
        ideal: String,
        /// Read it off the inverse system instead of the ideal.
        #[arg(long)]
        via_dual: bool,
    },
    /// j-invariant of the Weierstrass curve with coefficients a, b.
    JInvariant {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// The Weierstrass cubic with coefficients a, b.
    WeierstrassAb {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// A plane cubic with the given j-invariant.
    WeierstrassJ {
        #[arg(long, allow_hyphen_values = true)]
        j: String,
    },
    /// Generators of I(j), the annihilator of that cubic.
    IdealWj {
        #[arg(long, allow_hyphen_values = true)]
        j: String,
    },
    /// Check every row of the {1,3,3,1} classification.
    VerifyClassification {
        /// j-invariant used for the generic elliptic row.
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        j: String,
    },
    /// Re-run the shipped session fixtures.
    Replay {
        /// Directory of .toml fixtures.
        dir: Option<PathBuf>,
    },
}

/// Spellings of the Singular library, with the flags they imply.
const LIBRARY_NAMES: &[(&str, &str, &[&str])] = &[
    ("invSyst", "inv-syst", &[]),
    ("invSystG", "inv-syst", &["--gorenstein"]),
    ("invSystNC", "inv-syst", &["--action", "cont"]),
    ("invSystGNC", "inv-syst", &["--gorenstein", "--action", "cont"]),
    ("idealAnn", "ideal-ann", &[]),
    ("idealAnnG", "ideal-ann", &["--gorenstein"]),
    ("idealAnnNC", "ideal-ann", &["--action", "cont"]),
    ("idealAnnGNC", "ideal-ann", &["--gorenstein", "--action", "cont"]),
    ("memberIH", "member-ih", &[]),
    ("memberIHNC", "member-ih", &["--action", "cont"]),
    ("subModIH", "sub-mod-ih", &[]),
    ("subModIHNC", "sub-mod-ih", &["--action", "cont"]),
    ("eqModIH", "eq-mod-ih", &[]),
    ("eqModIHNC", "eq-mod-ih", &["--action", "cont"]),
    ("minGensIH", "min-gens-ih", &[]),
    ("minGensIHNC", "min-gens-ih", &["--action", "cont"]),
    ("colonInvSyst", "colon", &[]),
    ("colonInvSystNC", "colon", &["--action", "cont"]),
    ("genPol", "gen-pol", &[]),
    ("eqIdeal", "eq-ideal", &[]),
    ("cmType", "cm-type", &[]),
    ("isAG", "is-ag", &[]),
    ("isLevel", "is-level", &[]),
    ("weierstrassJ", "weierstrass-j", &[]),
    ("idealWJ", "ideal-wj", &[]),
];

const VALUE_FLAGS: &[&str] = &["--vars", "--char", "--action", "--max-degree"];

/// Replaces a Singular spelling in subcommand position by the subcommand name.
pub fn rewrite_aliases(args: Vec<String>) -> Vec<String> {
    let mut out = Vec::with_capacity(args.len() + 3);
    let mut iter = args.into_iter();
    out.extend(iter.next());
    while let Some(arg) = iter.next() {
        if VALUE_FLAGS.contains(&arg.as_str()) {
            out.push(arg);
            out.extend(iter.next());
            continue;
        }
        if arg.starts_with('-') {
            out.push(arg);
            continue;
        }
        match LIBRARY_NAMES.iter().find(|(alias, _, _)| *alias == arg) {
            Some((_, name, extra)) => {
                out.push(name.to_string());
                out.extend(extra.iter().map(|s| s.to_string()));
            }
            None => out.push(arg),
        }
        break;
    }
    out.extend(iter);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn singular_spellings() {
        assert_eq!(
            rewrite_aliases(strings(&["macaulay", "invSystNC", "x1^2"])),
            strings(&["macaulay", "inv-syst", "--action", "cont", "x1^2"])
        );
        assert_eq!(
            rewrite_aliases(strings(&["m", "--vars", "2", "isAG", "isAG"])),
            strings(&["m", "--vars", "2", "is-ag", "isAG"])
        );
    }

    #[test]
    fn parses_globals_after_subcommand() {
        let cli = Cli::try_parse_from(["macaulay", "is-ag", "x1", "--vars", "1", "--json"]).unwrap();
        assert_eq!(cli.ring.vars, 1);
        assert!(cli.json);
    }
}
