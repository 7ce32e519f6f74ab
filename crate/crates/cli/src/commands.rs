use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use mss_core::analysis::{blowup_factor, degeneracy_census, eq1_check, CensusMethod};
use mss_core::attacks::{divisibility_attack, related_share_forgery};
use mss_core::num_rational::Ratio;
use mss_core::schemes::{
    chunk_secret, coeff_reconstruct, coeff_split, points_reconstruct, points_split,
    shamir_reconstruct, shamir_split, unchunk_secret,
};
use mss_core::{Error, PrimeModulus, RandomSource, Scheme, SecretSet, Share};

use crate::args::{
    AttackArgs, AttackMode, BlowupArgs, CensusArgs, Cli, Command, MethodArg, ReconstructArgs,
    SplitArgs,
};
use crate::error::CliError;
use crate::share_file::{Header, ShareFile, ShareLine};

pub const MANIFEST: &str = "manifest.txt";

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Split(a) => split(a, out),
        Command::Reconstruct(a) => reconstruct(a, out),
        Command::Census(a) => census(a, out),
        Command::Blowup(a) => blowup(a, out),
        Command::Attack(a) => attack(a, out),
    }
}

fn emit(out: &mut dyn Write, text: std::fmt::Arguments<'_>) -> Result<()> {
    out.write_fmt(text)
        .and_then(|_| out.write_all(b"\n"))
        .map_err(|e| CliError::io("<stdout>", e))
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => { emit($out, format_args!($($arg)*)) };
}

fn ratio(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn share_file_name(index: usize) -> String {
    format!("share-{index}.txt")
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

pub fn read_share_file(path: &Path) -> Result<ShareFile> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    ShareFile::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn split(a: SplitArgs, out: &mut dyn Write) -> Result<()> {
    let p = PrimeModulus::new(a.p)?;
    let scheme = Scheme::from(a.scheme);
    let (secrets, byte_len) = match &a.secret_file {
        Some(path) => {
            if scheme != Scheme::Coeff {
                return Err(CliError::Usage("--secret-file needs --scheme coeff".into()));
            }
            let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
            let k = a.k_secrets.unwrap_or(a.threshold);
            (chunk_secret(&bytes, k, p)?, Some(bytes.len()))
        }
        None => {
            let s = SecretSet::from_values(&a.secrets, p)?;
            if a.k_secrets.is_some_and(|k| k != s.k()) {
                return Err(CliError::Usage("--k-secrets disagrees with --secrets".into()));
            }
            (s, None)
        }
    };
    let k = secrets.k();
    let needs_seed = match scheme {
        Scheme::Shamir => true,
        Scheme::Points => false,
        Scheme::Coeff => a.threshold > k,
    };
    let mut rng = match a.seed {
        Some(seed) => RandomSource::from_seed(seed),
        None if needs_seed => {
            return Err(CliError::Usage(format!(
                "--seed is required for {scheme} with these parameters"
            )))
        }
        None => RandomSource::from_seed(0),
    };
    let shares = match scheme {
        Scheme::Shamir => {
            if k != 1 {
                return Err(CliError::Usage("shamir shares exactly one secret".into()));
            }
            shamir_split(secrets.secrets()[0], a.threshold, a.n, &mut rng)?
        }
        Scheme::Points => {
            if a.threshold != k {
                return Err(Error::InvalidParams(format!(
                    "the points scheme needs threshold = number of secrets ({k})"
                ))
                .into());
            }
            points_split(&secrets, a.n)?
        }
        Scheme::Coeff => coeff_split(&secrets, a.threshold, a.n, &mut rng)?,
    };

    let header = Header {
        scheme,
        p,
        threshold: a.threshold,
        k_secrets: k,
        byte_len,
    };
    fs::create_dir_all(&a.out_dir).map_err(|e| CliError::io(&a.out_dir, e))?;
    let mut manifest = format!("{}\n", header.render().replacen("mss-share", "mss-manifest", 1));
    for (i, share) in shares.iter().enumerate() {
        let index = i + 1;
        let file = ShareFile {
            header,
            shares: vec![ShareLine {
                index: index as u64,
                x: share.x.value(),
                y: share.y.value(),
            }],
        };
        let name = share_file_name(index);
        write_file(&a.out_dir.join(&name), file.render().as_bytes())?;
        manifest.push_str(&name);
        manifest.push('\n');
    }
    write_file(&a.out_dir.join(MANIFEST), manifest.as_bytes())?;
    say!(
        out,
        "wrote {} {scheme} shares (threshold {}) to {}",
        shares.len(),
        a.threshold,
        a.out_dir.display()
    )?;
    say!(out, "RESULT scheme={scheme} shares={} threshold={}", shares.len(), a.threshold)
}

fn reconstruct(a: ReconstructArgs, out: &mut dyn Write) -> Result<()> {
    let mut header: Option<Header> = None;
    let mut shares: Vec<Share> = Vec::new();
    for path in &a.shares {
        let file = read_share_file(path)?;
        match header {
            None => header = Some(file.header),
            Some(h) if h.k_secrets != file.header.k_secrets || h.byte_len != file.header.byte_len => {
                return Err(Error::MixedShares(format!(
                    "{} describes a different secret set",
                    path.display()
                ))
                .into());
            }
            Some(_) => {}
        }
        shares.extend(file.core_shares());
    }
    let header = header.expect("clap requires at least one share file");
    if a.secret_file_out.is_some() && header.scheme != Scheme::Coeff {
        return Err(CliError::Usage("--secret-file-out needs coeff shares".into()));
    }
    let values = match header.scheme {
        Scheme::Shamir => vec![shamir_reconstruct(&shares)?.value()],
        Scheme::Points => points_reconstruct(&shares)?.values(),
        Scheme::Coeff => {
            let k = a.k_secrets.unwrap_or(header.k_secrets);
            let secrets = coeff_reconstruct(&shares, k)?;
            if let Some(path) = &a.secret_file_out {
                let len = header.byte_len.ok_or_else(|| {
                    CliError::Usage("shares carry no byte length; they were not made from a file".into())
                })?;
                write_file(path, &unchunk_secret(&secrets, len)?)?;
            }
            secrets.values()
        }
    };
    let joined: Vec<String> = values.iter().map(u64::to_string).collect();
    say!(out, "{}", joined.join(","))
}

fn census(a: CensusArgs, out: &mut dyn Write) -> Result<()> {
    let p = PrimeModulus::new(a.p)?;
    let method = match a.method {
        MethodArg::Interpolate => CensusMethod::Interpolate,
        MethodArg::Vandermonde => CensusMethod::Vandermonde,
        MethodArg::Both => CensusMethod::Both,
    };
    let r = degeneracy_census(p, a.k, method)?;
    let eq1 = eq1_check(&r);
    say!(out, "p={} k={} tuples={}", r.p, r.k, r.total_tuples)?;
    say!(
        out,
        "degenerate tuples: {} (closed form p^(k-1) = {})",
        r.degenerate_count, r.closed_form
    )?;
    say!(out, "failure percentage: {} (100/p check: {eq1})", ratio(r.failure_percent))?;
    if let Some(d) = r.disagreements {
        say!(out, "interpolation/vandermonde disagreements: {d}")?;
    }
    say!(
        out,
        "RESULT degenerate={} total={} percent={} closed_form_ok={}",
        r.degenerate_count,
        r.total_tuples,
        ratio(r.failure_percent),
        r.closed_form_ok()
    )?;
    if !eq1 || !r.closed_form_ok() {
        return Err(CliError::CheckFailed("failure percentage differs from 100/p".into()));
    }
    if r.disagreements.is_some_and(|d| d > 0) {
        return Err(CliError::CheckFailed("the two degeneracy tests disagree".into()));
    }
    Ok(())
}

fn blowup(a: BlowupArgs, out: &mut dyn Write) -> Result<()> {
    let scheme = Scheme::from(a.scheme);
    let threshold = a.threshold.unwrap_or(match scheme {
        Scheme::Shamir => 2.min(a.n),
        _ => a.k_secrets,
    });
    let r = blowup_factor(scheme, a.n, threshold, a.k_secrets, a.d)?;
    say!(
        out,
        "{scheme}: {} shares of size {} for {} secrets of size {}",
        r.n, r.share_size, r.k_secrets, r.secret_size
    )?;
    say!(out, "RESULT blowup={}", ratio(r.blowup))
}

fn attack(a: AttackArgs, out: &mut dyn Write) -> Result<()> {
    let file = read_share_file(&a.share)?;
    let line = file.shares[0];
    let share = file.header.share(&line);
    match a.mode {
        AttackMode::Div => {
            let r = a.r.ok_or_else(|| CliError::Usage("--mode div needs --r".into()))?;
            let inf = divisibility_attack(&share, r)?;
            say!(
                out,
                "q({u}) = {} is {verdict} multiple of {u}, so a_0 is {verdict} multiple of {u}; {} candidates remain",
                inf.q_u,
                inf.search_space_size,
                u = inf.u,
                verdict = if inf.divisible { "a" } else { "not a" },
            )?;
            say!(out, "RESULT divisible={} space={}", inf.divisible, inf.search_space_size)
        }
        AttackMode::Related => {
            let d = a.d.ok_or_else(|| CliError::Usage("--mode related needs --d".into()))?;
            let d = file.header.p.element(d);
            let forged = related_share_forgery(&share, d, file.header.threshold)?.forged_share;
            if let Some(path) = &a.out {
                let f = ShareFile {
                    header: file.header,
                    shares: vec![ShareLine {
                        y: forged.y.value(),
                        ..line
                    }],
                };
                write_file(path, f.render().as_bytes())?;
            }
            say!(out, "forged share for secrets scaled by {d}: ({}, {})", forged.x, forged.y)?;
            say!(out, "RESULT x={} y={}", forged.x, forged.y)
        }
    }
}

/// Paths of the share files listed in a manifest.
pub fn manifest_entries(dir: &Path) -> Result<Vec<PathBuf>> {
    let path = dir.join(MANIFEST);
    let text = fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
    Ok(text.lines().skip(1).map(|name| dir.join(name)).collect())
}
