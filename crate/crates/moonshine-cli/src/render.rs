use std::fmt::Display;
use std::fmt::Write;

use moonshine_api::Response;
use moonshine_core::monster_data::Table1Status;
use moonshine_core::spectra::Conclusion;

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(",")
    }
}

fn opt<T: Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "none".into(), T::to_string)
}

/// True when a verification report found a mismatch.
pub fn failed_verification(resp: &Response) -> bool {
    match resp {
        Response::Table1(r) => !r.all_factorizations_match() || r.count(Table1Status::Mismatch) > 0,
        Response::Heads(r) => !r.ok(),
        _ => false,
    }
}

/// Tab-separated rendering; every value is also present in the JSON form.
pub fn tsv(resp: &Response) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: &dyn Display| {
        let _ = writeln!(out, "{k}\t{v}");
    };
    match resp {
        Response::Cusps(r) => {
            let widths = r.classes.iter().any(|c| c.width.is_some());
            let mut s = String::from("denominator\tresidue\trepresentative");
            if widths {
                s.push_str("\twidth");
            }
            s.push('\n');
            for c in &r.classes {
                let _ = write!(s, "{}\t{}\t{}", c.class.denominator, c.class.residue, c.representative);
                if let Some(w) = &c.width {
                    let _ = write!(s, "\t{w}");
                }
                s.push('\n');
            }
            return s;
        }
        Response::Canon(r) => {
            kv("denominator", &r.class.denominator);
            kv("residue", &r.class.residue);
            kv("representative", &r.representative);
            kv("witness", &r.witness);
        }
        Response::Equiv(r) => {
            kv("equivalent", &r.equivalent);
            kv("witness", &opt(&r.witness));
        }
        Response::Al(r) => {
            kv("e", &r.e);
            kv("a", &r.a);
            kv("b", &r.b);
            kv("c", &r.c);
            kv("d", &r.d);
            kv("matrix", &r.matrix);
        }
        Response::MemberExt(r) => kv("e", &opt(&r.e)),
        Response::Symbol(r) => {
            kv("symbol", &r.symbol);
            kv("level", &r.level);
            kv("nh", &r.nh);
            kv("closure", &join(&r.closure));
            kv("fricke", &r.has_fricke);
            kv("exact_divisors", &join(&r.exact_divisors));
        }
        Response::Orbit(r) => {
            kv("symbol", &r.symbol);
            kv("denominators", &join(&r.denominators));
        }
        Response::EquivInf(r) => {
            kv("e", &opt(&r.e));
            kv("witness", &opt(&r.witness));
        }
        Response::Transform(r) => {
            let t = &r.transform;
            kv("e", &t.e);
            kv("u", &format!("{} mod {}", t.u_residue, t.u_modulus));
            kv("scale", &t.scale);
            kv("shift", &format!("{} mod {}", t.shift, t.shift_modulus));
            kv("exponent", &r.exponent);
            kv("pc", &t.pc);
            kv("u_inverse", &t.u_inverse);
            kv("w", &t.w);
            kv("exact_phase", &t.exact_phase);
        }
        Response::Phi(r) => {
            kv("cusp", &r.cusp);
            kv("count", &r.classes.len());
            kv("classes", &join(&r.classes));
        }
        Response::Sing(r) => {
            kv("k", &r.k);
            kv("cusp", &r.cusp);
            kv("moving_matrix", &r.moving_matrix);
            out.push_str("exponent\tstatus\tclasses\treason\n");
            for g in &r.groups {
                let _ = writeln!(out, "{}\t{:?}\t{}\t{}", g.exponent, g.status, join(&g.classes), g.reason);
            }
        }
        Response::Invgroup(r) => {
            let _ = writeln!(out, "k\t{}", r.k);
            let _ = writeln!(out, "n_chi\t{}", r.n_chi);
            let _ = writeln!(out, "truncated\t{}", r.truncated);
            out.push_str("denominator\tresidue\trepresentative\tverdict\tdetail\n");
            for v in &r.cusp_verdicts {
                let _ = writeln!(out, "{}\t{}\t{}\t{:?}\t{}", v.denominator, v.residue, v.representative, v.verdict, v.detail);
            }
            out.push_str("r\tverdict\tdetail\n");
            for t in &r.translation_verdicts {
                let _ = writeln!(out, "{}\t{:?}\t{}", t.r, t.verdict, t.detail);
            }
            match &r.conclusion {
                Conclusion::ProvedEqualGamma0 => out.push_str("conclusion\tproved-equal-gamma0\n"),
                Conclusion::Inconclusive { reasons } => {
                    let _ = writeln!(out, "conclusion\tinconclusive\t{}", reasons.len());
                    for reason in reasons {
                        let _ = writeln!(out, "reason\t{reason}");
                    }
                }
            }
        }
        Response::Nchi(r) => {
            let _ = writeln!(out, "{} = {}", r.n_chi, r.factorization);
        }
        Response::Table1(r) => {
            out.push_str("k\tlisted\tcomputed\tfactorization\tstatus\tnote\n");
            for row in &r.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{:?}\t{}",
                    row.k,
                    row.listed,
                    row.computed,
                    row.computed_factorization,
                    row.status,
                    row.note.as_deref().unwrap_or("-")
                );
            }
            for p in &r.pair_discrepancies {
                let _ = writeln!(out, "pair\t{}\t{}\t{}\t{}", p.k, p.conjugate, p.listed_k, p.listed_conjugate);
            }
            let _ = writeln!(out, "factorizations_matching\t{}/{}", r.factorization_matches(), r.rows.len());
            let _ = writeln!(out, "integers_matching\t{}/{}", r.count(Table1Status::Match), r.rows.len());
            let _ = writeln!(out, "printed_integer_typos\t{}", r.count(Table1Status::PrintedIntegerTypo));
        }
        Response::Heads(r) => {
            out.push_str("h\tdimension\tcomputed\tok\n");
            for h in &r.heads {
                let _ = writeln!(out, "{}\t{}\t{}\t{}", h.h, h.dimension, h.computed, h.ok);
            }
            for m in &r.multiplicities {
                let _ = writeln!(out, "c_h1\t{}\t{}\t{}", m.h, m.c_h1, opt(&m.consistent));
            }
            let _ = writeln!(out, "ok\t{}", r.ok());
        }
        Response::Distinct(r) => {
            let _ = writeln!(out, "{}", r.count);
        }
        Response::OracleCusps(r) => {
            out.push_str("denominator\tresidue\tsampled_members\n");
            for c in &r.classes {
                let _ = writeln!(out, "{}\t{}\t{}", c.denominator, c.residue, c.members.len());
            }
        }
        Response::OracleWidth(r) => {
            let _ = writeln!(out, "{}", r.width);
        }
    }
    out
}
