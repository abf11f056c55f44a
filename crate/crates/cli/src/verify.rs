//! `esq verify`: oracle cross-checks and invariant suites.
//!
//! Every randomized suite draws from its own ChaCha stream derived from
//! the seed, so the report is identical across runs and independent of
//! which suites ran before it.

use std::f64::consts::LN_2;
use std::io::Write;

use esq_core::bounds::{
    amplitude_damping_bound, closed_form_spectra, depolarizing_bound, depolarizing_pauli_bound, eb_zero_bound,
    erasure_capacity, esq_additive_limit, esq_asymptotic, esq_asymptotic_tau_nu, esq_chi_form, esq_finite_n,
    esq_finite_n_oracle, gbound1, pauli_bound, squashed_conditional_entropies, squashed_output,
};
use esq_core::channels::mode;
use esq_core::comparisons::pirandola_amplifier;
use esq_core::gaussian::{reduce, symplectic_eigenvalues};
use esq_core::PhaseInsensitiveChannel;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::VerifyArgs;
use crate::CliError;

/// Outcome of one suite: the worst deviation seen, or the first failure.
type Outcome = Result<String, String>;

pub struct Suite {
    pub id: u32,
    pub name: &'static str,
    run: fn(&mut Ctx) -> Outcome,
}

pub struct Ctx {
    rng: ChaCha8Rng,
    inject_fault: bool,
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: esq_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn random_channel(rng: &mut ChaCha8Rng) -> PhaseInsensitiveChannel {
    let tau = rng.random_range(0.0..4.0);
    let slack = rng.random_range(0.0..6.0);
    PhaseInsensitiveChannel::from_tau_nu(tau, (1.0f64 - tau).abs() + slack).expect("valid by construction")
}

fn random_dilation(rng: &mut ChaCha8Rng) -> PhaseInsensitiveChannel {
    let g = rng.random_range(1.0..10.0);
    let t = rng.random_range(1e-3..=1.0);
    PhaseInsensitiveChannel::from_transmissivity_gain(t, g).expect("valid by construction")
}

fn pure_loss(_: &mut Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for k in 0..10 {
        let eta = k as f64 / 10.0;
        let got = esq_asymptotic(&core(PhaseInsensitiveChannel::pure_loss(eta))?).value;
        let want = ((1.0 + eta) / (1.0 - eta)).log2();
        let dev = (got - want).abs();
        check(dev <= 1e-12, || format!("eta = {eta}: {got} vs {want}"))?;
        worst = worst.max(dev);
    }
    Ok(format!("max deviation {worst:.3e}"))
}

fn amplifier(_: &mut Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for g in [1.1, 2.0, 5.0, 10.0] {
        let got = esq_asymptotic(&core(PhaseInsensitiveChannel::amplifier(g))?).value;
        let want = ((g + 1.0) / (g - 1.0)).log2();
        let dev = (got - want).abs();
        check(dev <= 1e-12, || format!("G = {g}: {got} vs {want}"))?;
        let flux = core(pirandola_amplifier(g))?.value;
        check(got >= flux, || format!("G = {g}: {got} < {flux}"))?;
        worst = worst.max(dev);
    }
    Ok(format!("max deviation {worst:.3e}"))
}

fn additive(_: &mut Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for nbar in [0.1, 1.0, 10.0] {
        let limit = core(esq_additive_limit(nbar))?.value;
        let t = 1.0 / (nbar + 1.0);
        for g in [(1.0 + 1e-6) / t, (1.0 - 1e-6) / t] {
            let dev = (gbound1(t, g) - limit).abs();
            check(dev <= 1e-5, || format!("nbar = {nbar}, G = {g}: deviation {dev:e}"))?;
            worst = worst.max(dev);
        }
    }
    let at_one = core(esq_additive_limit(1.0))?.value;
    let direct = 1.25 * 3f64.log2() - 1.0 / LN_2;
    check((at_one - direct).abs() <= 1e-12, || {
        format!("nbar = 1: {at_one} vs {direct}")
    })?;
    Ok(format!("max deviation {worst:.3e}"))
}

fn parameterizations(ctx: &mut Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let ch = random_channel(&mut ctx.rng);
        let (tau, nu) = (ch.tau(), ch.nu());
        let g1 = esq_asymptotic(&ch).value;
        let g2 = core(esq_asymptotic_tau_nu(tau, nu))?.value;
        let chi = core(esq_chi_form(tau, nu - 1.0 + tau))?.value;
        let dev = (g1 - g2).abs().max((g2 - chi).abs());
        check(dev <= 1e-10, || format!("tau = {tau}, nu = {nu}: {g1}, {g2}, {chi}"))?;
        worst = worst.max(dev);
    }
    Ok(format!("max deviation {worst:.3e}"))
}

fn oracle(ctx: &mut Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let ch = random_dilation(&mut ctx.rng);
        let n = ctx.rng.random_range(0.0..100.0);
        let (g, t) = (ch.gain(), ch.transmissivity());
        let mut s = core(closed_form_spectra(g, t, n))?;
        if ctx.inject_fault {
            s.nu_e[0] += 1e-3;
        }
        let out = core(squashed_output(&ch, n))?;
        let e = core(symplectic_eigenvalues(&core(reduce(&out, &[mode::E1, mode::E2]))?))?;
        let be = core(symplectic_eigenvalues(&core(reduce(
            &out,
            &[mode::B, mode::E1, mode::E2],
        ))?))?;
        let pairs = e.values().iter().zip(&s.nu_e).chain(be.values().iter().zip(&s.nu_be));
        for (generic, closed) in pairs {
            let dev = (generic - closed).abs() / closed.max(1.0);
            check(dev <= 1e-8, || {
                format!("G = {g}, T = {t}, N = {n}: {generic} vs {closed}")
            })?;
            worst = worst.max(dev);
        }
        let closed = core(esq_finite_n(&ch, n))?.value;
        let brute = core(esq_finite_n_oracle(&ch, n))?.value;
        let dev = (closed - brute).abs();
        check(dev <= 1e-8, || {
            format!("G = {g}, T = {t}, N = {n}: bound {closed} vs {brute}")
        })?;
        worst = worst.max(dev);
    }
    Ok(format!("max deviation {worst:.3e}"))
}

fn finite_n(ctx: &mut Ctx) -> Outcome {
    const GRID: [f64; 7] = [0.0, 0.01, 0.1, 1.0, 10.0, 100.0, 1e3];
    for _ in 0..100 {
        let ch = random_dilation(&mut ctx.rng);
        let label = || format!("G = {}, T = {}", ch.gain(), ch.transmissivity());
        let values = GRID
            .iter()
            .map(|&n| esq_finite_n(&ch, n).map(|b| b.value))
            .collect::<esq_core::Result<Vec<_>>>()
            .map_err(|e| e.to_string())?;
        check(values[0].abs() <= 1e-10, || {
            format!("{}: value {} at N = 0", label(), values[0])
        })?;
        check(values.windows(2).all(|w| w[0] <= w[1] + 1e-10), || {
            format!("{}: not monotone {values:?}", label())
        })?;
        let asym = esq_asymptotic(&ch).value;
        check(values.iter().all(|v| *v <= asym + 1e-8), || {
            format!("{}: above asymptote {asym}", label())
        })?;
        if asym.is_finite() {
            let far = core(esq_finite_n(&ch, 1e6))?.value;
            check(asym - far < asym - values[6], || {
                format!("{}: gap did not shrink", label())
            })?;
        }
    }
    Ok("100 channels".into())
}

fn symmetry(ctx: &mut Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let ch = random_dilation(&mut ctx.rng);
        let n = ctx.rng.random_range(0.0..100.0);
        let (e, f) = core(squashed_conditional_entropies(&ch, n))?;
        let dev = (e - f).abs();
        check(dev <= 1e-9, || {
            format!("G = {}, T = {}, N = {n}: {e} vs {f}", ch.gain(), ch.transmissivity())
        })?;
        worst = worst.max(dev);
    }
    Ok(format!("max deviation {worst:.3e}"))
}

fn finite_dimensional(_: &mut Ctx) -> Outcome {
    let exact = |name: &str, got: f64, want: f64, tol: f64| {
        check((got - want).abs() <= tol, || format!("{name}: {got} vs {want}"))
    };
    exact("erasure(2, 0.5)", core(erasure_capacity(2, 0.5))?.value, 0.5, 0.0)?;
    exact(
        "pauli(1,0,0,0)",
        core(pauli_bound([1.0, 0.0, 0.0, 0.0]))?.value,
        1.0,
        0.0,
    )?;
    exact("pauli(1/4,...)", core(pauli_bound([0.25; 4]))?.value, 0.0, 0.0)?;
    exact("depolarizing(0)", core(depolarizing_bound(0.0))?.value, 1.0, 1e-12)?;
    exact(
        "depolarizing(2/3)",
        core(depolarizing_bound(2.0 / 3.0))?.value,
        0.0,
        0.0,
    )?;
    for k in 0..=100 {
        let p = k as f64 / 100.0;
        let opt = core(depolarizing_bound(p))?.value;
        let dp1 = core(depolarizing_pauli_bound(p))?.value;
        check(opt <= dp1 + 1e-12, || format!("p = {p}: {opt} > {dp1}"))?;
    }
    exact(
        "amplitude damping(0)",
        core(amplitude_damping_bound(0.0))?.value,
        1.0,
        1e-9,
    )?;
    exact(
        "amplitude damping(1)",
        core(amplitude_damping_bound(1.0))?.value,
        0.0,
        1e-9,
    )?;
    exact(
        "amplitude damping(0.5)",
        core(amplitude_damping_bound(0.5))?.value,
        0.5,
        1e-9,
    )?;
    Ok("all values exact".into())
}

fn entanglement_breaking(_: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for i in 1..=40 {
        for j in 0..=40 {
            let g = 1.0 + i as f64 * 0.1;
            let t = j as f64 / 40.0;
            let ch = core(PhaseInsensitiveChannel::from_transmissivity_gain(t, g))?;
            let by_gain = g * (1.0 - t) >= 1.0;
            // Exactly on the boundary the two tests can round differently.
            if (g * (1.0 - t) - 1.0).abs() > 1e-12 {
                check(ch.is_entanglement_breaking() == by_gain, || format!("G = {g}, T = {t}"))?;
                checked += 1;
            }
        }
    }
    let thermal = core(PhaseInsensitiveChannel::thermal(0.4, 1.0))?;
    check(thermal.is_entanglement_breaking(), || {
        "thermal(0.4, 1) not flagged".into()
    })?;
    let zero = eb_zero_bound(thermal.into()).value;
    let esq = esq_asymptotic(&thermal).value;
    check(zero == 0.0 && esq > 0.0, || {
        format!("thermal(0.4, 1): eb {zero}, esq {esq}")
    })?;
    Ok(format!("{checked} grid points; thermal(0.4, 1) esq = {esq:.6}"))
}

pub const SUITES: [Suite; 9] = [
    Suite {
        id: 1,
        name: "pure-loss asymptotic",
        run: pure_loss,
    },
    Suite {
        id: 2,
        name: "amplifier",
        run: amplifier,
    },
    Suite {
        id: 3,
        name: "additive-noise limit",
        run: additive,
    },
    Suite {
        id: 4,
        name: "parameterization equivalence",
        run: parameterizations,
    },
    Suite {
        id: 5,
        name: "closed form vs symplectic oracle",
        run: oracle,
    },
    Suite {
        id: 6,
        name: "finite-N properties",
        run: finite_n,
    },
    Suite {
        id: 7,
        name: "squashing symmetry",
        run: symmetry,
    },
    Suite {
        id: 8,
        name: "finite-dimensional values",
        run: finite_dimensional,
    },
    Suite {
        id: 9,
        name: "entanglement-breaking semantics",
        run: entanglement_breaking,
    },
];

/// Runs every suite and returns `(suite id, outcome)` pairs.
pub fn run_suites(seed: u64, inject_fault: bool) -> Vec<(&'static Suite, Outcome)> {
    SUITES
        .iter()
        .map(|suite| {
            let mut ctx = Ctx {
                rng: ChaCha8Rng::seed_from_u64(seed.wrapping_add(suite.id as u64)),
                inject_fault,
            };
            (suite, (suite.run)(&mut ctx))
        })
        .collect()
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, _err: &mut dyn Write) -> Result<(), CliError> {
    writeln!(out, "seed {}", args.seed)?;
    let mut failed = 0;
    for (suite, outcome) in run_suites(args.seed, args.inject_fault) {
        match outcome {
            Ok(detail) => writeln!(out, "PASS suite {} {}: {detail}", suite.id, suite.name)?,
            Err(detail) => {
                failed += 1;
                writeln!(out, "FAIL suite {} {}: {detail}", suite.id, suite.name)?;
            }
        }
    }
    if failed > 0 {
        Err(CliError::Verify(failed))
    } else {
        Ok(())
    }
}
