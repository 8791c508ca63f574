//! Subcommands. Each returns a JSON document plus a plain-text rendering,
//! or a [`Failure`] carrying the exit code.

use serde::Serialize;
use serde_json::{json, Value};

use ringbasis::border::{border_basis_of, is_border_basis, validate_order_ideal};
use ringbasis::groebner::is_groebner_basis_of;
use ringbasis::{
    groebner_basis, is_strong_gb, lattice_ideal_generators, module_basis, normal_form, short_reduced_basis,
    verify_groebner, verify_strong_reduced, GroebnerBasis, Polynomial, Rank,
};

use crate::problem::{FileError, ProblemFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Gb,
    ShortReduce,
    IsFree,
    ModuleBasis,
    BorderBasis,
    Nf,
    StrongCheck,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Flags {
    pub cap: Option<u32>,
    pub check: bool,
}

pub struct Success {
    pub json: Value,
    pub text: String,
}

/// `code` is 1 for problem-file errors and 2 for domain errors.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub json: Value,
    pub message: String,
}

impl Failure {
    pub fn file(e: &FileError) -> Self {
        let mut json = json!({ "error": e.kind, "message": e.to_string() });
        if let Some(l) = e.line {
            json["line"] = json!(l);
        }
        if let Some(c) = e.column {
            json["column"] = json!(c);
        }
        Failure {
            code: 1,
            json,
            message: e.to_string(),
        }
    }

    /// Domain error named after the library variant.
    fn domain<E: std::fmt::Debug + std::fmt::Display>(e: E) -> Self {
        let debug = format!("{e:?}");
        let name: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
        Failure {
            code: 2,
            json: json!({ "error": name, "message": e.to_string() }),
            message: e.to_string(),
        }
    }

    fn check_failed(what: &str) -> Self {
        Failure {
            code: 2,
            json: json!({ "error": "CheckFailed", "message": what }),
            message: format!("check failed: {what}"),
        }
    }
}

fn domain<E: std::fmt::Debug + std::fmt::Display>(e: E) -> Failure {
    Failure::domain(e)
}

#[derive(Serialize)]
struct Basis<'a> {
    ring: String,
    vars: &'a [String],
    order: String,
    certification: &'static str,
    basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

struct Context<'a> {
    file: &'a ProblemFile,
    flags: Flags,
}

impl Context<'_> {
    fn generators(&self) -> Result<Vec<Polynomial>, Failure> {
        let f = self.file;
        let mut gens = f.generators.clone();
        if let Some(vs) = &f.lattice_vectors {
            gens.extend(lattice_ideal_generators(f.ring(), f.nvars(), vs).map_err(domain)?);
        }
        Ok(gens)
    }

    fn texts(&self, ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| self.file.ctx.format(p, &self.file.order)).collect()
    }

    fn basis_doc(&self, g: &GroebnerBasis, verified: Option<bool>) -> Basis<'_> {
        Basis {
            ring: self.file.ring().header(),
            vars: self.file.ctx.names(),
            order: self.file.order_name(),
            certification: g.certification().name(),
            basis: self.texts(g.elements()),
            verified,
        }
    }

    fn short(&self) -> Result<GroebnerBasis, Failure> {
        let f = self.file;
        short_reduced_basis(f.ring(), f.nvars(), &self.generators()?, &f.order).map_err(domain)
    }

    /// `--check`: the basis is a Gröbner basis of the input ideal, and for
    /// parameter rings a short reduced basis also passes the strong reduced test.
    fn recheck(&self, g: &GroebnerBasis) -> Result<Option<bool>, Failure> {
        if !self.flags.check {
            return Ok(None);
        }
        if !is_groebner_basis_of(g, &self.generators()?).map_err(domain)? {
            return Err(Failure::check_failed("basis does not generate the input ideal as a Groebner basis"));
        }
        if g.certification().is_short_reduced() && g.ring().theta().is_some() {
            let r = verify_strong_reduced(g).map_err(domain)?;
            if !r.holds {
                return Err(Failure::check_failed("short reduced basis is not strong reduced"));
            }
        }
        Ok(Some(true))
    }

    fn lines(&self, title: &str, items: &[String]) -> String {
        let mut s = format!("{title}:\n");
        for i in items {
            s.push_str("  ");
            s.push_str(i);
            s.push('\n');
        }
        s
    }
}

pub fn run(command: Command, file: &ProblemFile, flags: Flags) -> Result<Success, Failure> {
    let cx = Context { file, flags };
    match command {
        Command::Gb => {
            let g = groebner_basis(file.ring(), file.nvars(), &cx.generators()?, &file.order).map_err(domain)?;
            let verified = cx.recheck(&g)?;
            let doc = cx.basis_doc(&g, verified);
            let text = cx.lines("groebner basis", &doc.basis);
            Ok(Success {
                json: serde_json::to_value(doc).expect("serializable"),
                text,
            })
        }
        Command::ShortReduce => {
            let g = cx.short()?;
            let verified = cx.recheck(&g)?;
            let doc = cx.basis_doc(&g, verified);
            let mut json = serde_json::to_value(&doc).expect("serializable");
            json["monic"] = json!(g.is_monic());
            let text = cx.lines("short reduced basis", &doc.basis);
            Ok(Success { json, text })
        }
        Command::IsFree => {
            let g = cx.short()?;
            let verified = cx.recheck(&g)?;
            let free = g.is_monic();
            let basis = cx.texts(g.elements());
            let mut json = json!({ "free": free, "short_reduced_basis": basis });
            if let Some(v) = verified {
                json["verified"] = json!(v);
            }
            let text = format!("free: {free}\n{}", cx.lines("short reduced basis", &basis));
            Ok(Success { json, text })
        }
        Command::ModuleBasis => {
            let g = cx.short()?;
            cx.recheck(&g)?;
            let s = module_basis(&g, flags.cap).map_err(domain)?;
            let rank = ringbasis::QuotientRing::new(&g, flags.cap).map_err(domain)?.rank();
            let rank_json = match rank {
                Rank::Finite(n) => json!(n),
                Rank::Infinite => json!("infinite"),
                Rank::Unknown => json!("unknown"),
            };
            let basis: Vec<String> = s.monomials.iter().map(|m| file.ctx.format_monomial(m)).collect();
            let text = format!(
                "free: true\nrank: {}\ncomplete: {}\n{}",
                rank_json.to_string().trim_matches('"'),
                s.complete,
                cx.lines("module basis", &basis)
            );
            Ok(Success {
                json: json!({ "free": true, "rank": rank_json, "basis": basis, "complete": s.complete }),
                text,
            })
        }
        Command::BorderBasis => {
            let o = file
                .order_ideal
                .as_ref()
                .ok_or_else(|| Failure::file(&FileError::missing("MissingSection", "border-basis needs an [order_ideal] section")))?;
            let gens = cx.generators()?;
            let o = validate_order_ideal(file.nvars(), o).map_err(domain)?;
            let g = cx.short()?;
            let b = border_basis_of(&g, &o).map_err(domain)?;
            if flags.check && !is_border_basis(&b, &gens, &file.order).map_err(domain)? {
                return Err(Failure::check_failed("border basis does not generate the input ideal"));
            }
            let names = |ms: &[ringbasis::Monomial]| -> Vec<String> {
                ms.iter().map(|m| file.ctx.format_monomial(m)).collect()
            };
            let order_ideal = names(o.monomials());
            let border = names(o.border());
            let basis = cx.texts(b.elements());
            let text = format!(
                "{}{}{}",
                cx.lines("order ideal", &order_ideal),
                cx.lines("border", &border),
                cx.lines("border basis", &basis)
            );
            Ok(Success {
                json: json!({ "order_ideal": order_ideal, "border": border, "basis": basis }),
                text,
            })
        }
        Command::Nf => {
            let probes = file
                .probes
                .as_ref()
                .ok_or_else(|| Failure::file(&FileError::missing("MissingSection", "nf needs a [probe] section")))?;
            let g = cx.short()?;
            cx.recheck(&g)?;
            let mut results = Vec::new();
            let mut text = String::new();
            for p in probes {
                let nf = normal_form(p, &g).map_err(domain)?;
                if flags.check {
                    let mut acc = nf.remainder.clone();
                    for (q, gi) in nf.quotients.iter().zip(g.elements()) {
                        acc = &acc + &(q * gi);
                    }
                    if acc != *p {
                        return Err(Failure::check_failed("quotient identity does not expand to the probe"));
                    }
                }
                let (ptext, rtext) = (file.ctx.format(p, &file.order), file.ctx.format(&nf.remainder, &file.order));
                text.push_str(&format!("{ptext} -> {rtext}\n"));
                results.push(json!({ "probe": ptext, "normal_form": rtext, "member": nf.remainder.is_zero() }));
            }
            Ok(Success {
                json: json!({ "basis": cx.texts(g.elements()), "results": results }),
                text,
            })
        }
        Command::StrongCheck => {
            let g = groebner_basis(file.ring(), file.nvars(), &cx.generators()?, &file.order).map_err(domain)?;
            cx.recheck(&g)?;
            debug_assert!(verify_groebner(&g));
            let probes = file.probes.clone().unwrap_or_default();
            let r = is_strong_gb(&g, &probes).map_err(domain)?;
            let counter = r.counterexample.as_ref().map(|p| file.ctx.format(p, &file.order));
            let basis = cx.texts(g.elements());
            let text = format!(
                "strong: {}\n{}{}",
                r.strong,
                counter.as_ref().map(|c| format!("counterexample: {c}\n")).unwrap_or_default(),
                cx.lines("groebner basis", &basis)
            );
            Ok(Success {
                json: json!({ "strong": r.strong, "counterexample": counter, "basis": basis }),
                text,
            })
        }
    }
}
