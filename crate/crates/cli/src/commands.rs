use std::fmt::Write as _;
use std::time::Instant;

use ltd_core::experiments::{
    add_noise, aggregate, dolan_more_profile, generate_exact, mse, run_suite, AggregateRow,
    Algorithm, SuiteConfig,
};
use ltd_core::ltd::DEFAULT_HIGH_NOISE_THRESHOLD;
use ltd_core::{
    default_params, denoise, hybrid_denoise, moving_average, ssa_denoise, LtdParams, SsaParams,
};

use crate::args::{BenchArgs, DenoiseArgs, GenArgs, ProfileArgs};
use crate::error::{CliError, Result};
use crate::format::{
    format_profile, format_trace, read_signal, write_signal, write_text, ResultsDocument,
};

pub fn cmd_gen(args: &GenArgs) -> Result<String> {
    let exact = generate_exact(args.kind, args.n, args.seed)?;
    // Noise draws use a stream distinct from the exact-signal draws.
    let noisy = add_noise(&exact, args.noise_std, args.seed ^ 0x6E6F_6973_6500_0000)?;
    write_signal(&args.out_exact, &exact)?;
    write_signal(&args.out_noisy, &noisy)?;
    Ok(format!(
        "kind={} n={} noise_std={} mse={:.6e}",
        args.kind,
        args.n,
        args.noise_std,
        mse(&exact, &noisy)?
    ))
}

fn ltd_params(args: &DenoiseArgs, n: usize, seed: u64) -> LtdParams {
    let base = default_params(n).with_seed(seed);
    LtdParams {
        kmax: args.kmax.unwrap_or(base.kmax),
        delta: args.delta.unwrap_or(base.delta),
        ratio: args.ratio.unwrap_or(base.ratio),
        window: args.window.unwrap_or(base.window),
        max_outer: args.max_outer.unwrap_or(base.max_outer),
        seed,
    }
}

pub fn cmd_denoise(args: &DenoiseArgs) -> Result<String> {
    let signal = read_signal(&args.input)?;
    let n = signal.len();
    let exact = args.exact.as_deref().map(read_signal).transpose()?;
    if let Some(e) = &exact {
        if e.len() != n {
            return Err(ltd_core::Error::DimensionMismatch {
                expected: n,
                got: e.len(),
            }
            .into());
        }
    }
    if args.trace.is_some() && !args.algo.is_randomized() {
        return Err(CliError::Usage(format!(
            "--trace needs an LTD algorithm, not {}",
            args.algo
        )));
    }

    let started = Instant::now();
    let mut iterations = 0;
    let mut extra = String::new();
    let denoised = match args.algo {
        Algorithm::Ltd | Algorithm::Hybrid => {
            let seed = args.seed.ok_or_else(|| {
                CliError::Usage(format!("--seed is required for --algo {}", args.algo))
            })?;
            let params = ltd_params(args, n, seed);
            let result = if args.algo == Algorithm::Ltd {
                denoise(&signal, &params)?
            } else {
                let threshold = args.threshold.unwrap_or(DEFAULT_HIGH_NOISE_THRESHOLD);
                hybrid_denoise(&signal, &params, threshold)?
            };
            iterations = result.iterations_total;
            write!(extra, " passes={}", result.passes).unwrap();
            if args.algo == Algorithm::Hybrid {
                write!(extra, " smoothed={}", result.smoothed).unwrap();
            }
            if let Some(path) = &args.trace {
                write_text(path, &format_trace(&result.error_trace))?;
            }
            result.denoised
        }
        Algorithm::MovingAverage => moving_average(&signal, args.window.unwrap_or(3))?,
        Algorithm::Ssa => {
            let defaults = SsaParams::for_length(n);
            let params = SsaParams {
                embed_dim: args.embed_dim.unwrap_or(defaults.embed_dim),
                rank: args.rank.unwrap_or(defaults.rank),
            };
            ssa_denoise(&signal, &params)?
        }
    };
    let elapsed = started.elapsed().as_secs_f64();
    write_signal(&args.output, &denoised)?;

    let mut report = format!(
        "algorithm={} n={n} iterations={iterations}{extra} elapsed={elapsed:.6}s",
        args.algo
    );
    if let Some(exact) = exact {
        let (mse1, mse2) = ltd_core::finalize(&exact, &signal, &denoised)?;
        write!(report, " mse1={mse1:.6e} mse2={mse2:.6e}").unwrap();
    }
    Ok(report)
}

pub fn suite_config(args: &BenchArgs) -> SuiteConfig {
    let mut config = SuiteConfig::new(args.sizes.clone(), args.trials, args.algos.clone());
    config.noise_std = args.noise_std;
    config.base_seed = args.seed;
    config.kind = args.kind;
    config
}

pub fn cmd_bench(args: &BenchArgs) -> Result<String> {
    let config = suite_config(args);
    let records = run_suite(&config)?;
    let rows = aggregate(&records)?;
    let table = format_table(&config, &rows);
    let doc = ResultsDocument::new(config, records, rows);
    write_text(&args.output, &doc.to_json())?;
    Ok(table)
}

/// One row per size: mean time of each algorithm, then mean mse2 of each.
pub fn format_table(config: &SuiteConfig, rows: &[AggregateRow]) -> String {
    let mut out = format!("{:>8}", "n");
    for a in &config.algorithms {
        write!(out, " {:>12}", format!("{a} time")).unwrap();
    }
    for a in &config.algorithms {
        write!(out, " {:>12}", format!("{a} MSE")).unwrap();
    }
    for &n in &config.sizes {
        write!(out, "\n{n:>8}").unwrap();
        let cell = |a: &Algorithm| rows.iter().find(|r| r.n == n && r.algorithm == a.name());
        let fmt = |v: Option<f64>| v.map_or_else(|| "failed".to_string(), |v| format!("{v:.4e}"));
        for a in &config.algorithms {
            write!(out, " {:>12}", fmt(cell(a).and_then(|r| r.mean_time))).unwrap();
        }
        for a in &config.algorithms {
            write!(out, " {:>12}", fmt(cell(a).and_then(|r| r.mean_mse2))).unwrap();
        }
    }
    out
}

pub fn cmd_profile(args: &ProfileArgs) -> Result<String> {
    let doc = ResultsDocument::read(&args.input)?;
    let curves = dolan_more_profile(&doc.records)?;
    write_text(&args.output, &format_profile(&curves))?;
    Ok(format!(
        "algorithms={} problems={} breakpoints={}",
        curves.len(),
        doc.records.len() / curves.len().max(1),
        curves.first().map_or(0, |c| c.points.len())
    ))
}
