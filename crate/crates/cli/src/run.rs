use frechet::density::{density_bruteforce_oracle, kronecker_dense, replay_verdict, subgroup_dense, GeneratorSet};
use frechet::diffcalc::{djokovic_expand, djokovic_verify_terms, frechet_eval, Evaluate, FunctionHandle};
use frechet::exactnum::FieldElement;
use frechet::genpoly::{coverage_metric, san_juan_sample, FrechetCheck, PointCloud};
use frechet::montel::{
    default_candidates, graph_cloud, montel_check, orbit_classify_detailed, popoviciu_polynomial, rational_refinement_check,
    verify_extension, witness_search, ExtensionCheck, OrbitReport, RefinementCheck, DEFAULT_WINDOW,
};
use frechet::sample::random_element;
use frechet::wire::{element_to_wire, BiPolyWire, OrbitReportWire, UniPolyWire};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::output::*;
use crate::spec::{Orbit, Params, ProblemSpec, Sampling};

/// Settings supplied on the command line rather than in the spec.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Overrides every window given in the spec.
    pub window: Option<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub output: Output,
    /// 0 when the property holds or a decision was computed, 1 when it
    /// fails with a witness in the output.
    pub exit_code: i32,
    pub cloud: Option<PointCloud>,
}

impl Outcome {
    fn new(output: Output, holds: bool) -> Self {
        Outcome {
            output,
            exit_code: if holds { 0 } else { 1 },
            cloud: None,
        }
    }
}

fn window(opts: &RunOptions, spec_window: Option<usize>) -> usize {
    opts.window.or(spec_window).unwrap_or(DEFAULT_WINDOW)
}

fn random_points(spec: &ProblemSpec, rng: &mut ChaCha8Rng, s: &Sampling) -> FieldElement {
    random_element(&spec.field, rng, s.num_bound, s.den_bound)
}

fn extension_out(check: &ExtensionCheck, window: usize) -> ExtensionOut {
    match check {
        ExtensionCheck::Ok { checked } => ExtensionOut {
            ok: true,
            window,
            checked: *checked,
            failure: None,
        },
        ExtensionCheck::Failure { i, j, expected, found } => ExtensionOut {
            ok: false,
            window,
            checked: 0,
            failure: Some(ExtensionFailure {
                i: *i,
                j: *j,
                expected: element_to_wire(expected),
                found: element_to_wire(found),
            }),
        },
    }
}

fn classify<F: Evaluate + ?Sized>(f: &F, orbit: &Orbit, w: usize) -> frechet::Result<(OrbitReport, ExtensionCheck)> {
    orbit_classify_detailed(f, &orbit.x0, &orbit.h1, &orbit.h2, orbit.m, w)
}

/// Dispatches a validated spec to the library.
pub fn run(spec: &ProblemSpec, opts: &RunOptions) -> frechet::Result<Outcome> {
    let f = spec.function.as_ref();
    let f = || -> &FunctionHandle { f.expect("validated specs carry a function when the command needs one") };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    Ok(match &spec.params {
        Params::FrechetCheck { m, points, sampling } => {
            let tuples: Vec<Vec<FieldElement>> = match points {
                Some(p) => p.clone(),
                None => (0..sampling.trials)
                    .map(|_| (0..=*m).map(|_| random_points(spec, &mut rng, sampling)).collect())
                    .collect(),
            };
            let mut witness = None;
            let mut checked = 0;
            for xs in &tuples {
                let value = frechet_eval(f(), *m, xs)?;
                if !value.is_zero() {
                    witness = Some(FrechetWitness {
                        xs: xs.iter().map(element_to_wire).collect(),
                        value: element_to_wire(&value),
                    });
                    break;
                }
                checked += 1;
            }
            let holds = witness.is_none();
            Outcome::new(
                Output::FrechetCheck(FrechetCheckOut {
                    holds,
                    m: *m,
                    checked,
                    witness,
                }),
                holds,
            )
        }

        Params::MontelCheck { m, h1, h2, xs, sampling } => {
            let xs: Vec<FieldElement> = match xs {
                Some(xs) => xs.clone(),
                None => (0..sampling.trials).map(|_| random_points(spec, &mut rng, sampling)).collect(),
            };
            let result = montel_check(f(), h1, h2, *m, &xs)?;
            let (holds, checked, witness) = match result {
                FrechetCheck::Holds => (true, xs.len(), None),
                FrechetCheck::Witness { x, h, value } => (
                    false,
                    xs.iter().position(|p| *p == x).unwrap_or(0),
                    Some(StepWitness {
                        x: element_to_wire(&x),
                        h: element_to_wire(&h),
                        value: element_to_wire(&value),
                    }),
                ),
            };
            Outcome::new(
                Output::MontelCheck(MontelCheckOut {
                    holds,
                    m: *m,
                    checked,
                    witness,
                }),
                holds,
            )
        }

        Params::Popoviciu { orbit, refinements } => {
            let w = window(opts, orbit.window);
            let p = popoviciu_polynomial(f(), &orbit.x0, &orbit.h1, &orbit.h2, orbit.m)?;
            let extension = extension_out(&verify_extension(&p, f(), &orbit.x0, &orbit.h1, &orbit.h2, w)?, w);
            let mut outs = Vec::with_capacity(refinements.len());
            for &(pf, qf) in refinements {
                let check = rational_refinement_check(f(), &orbit.x0, &orbit.h1, &orbit.h2, orbit.m, pf, qf)?;
                outs.push(match check {
                    RefinementCheck::Ok => RefinementOut {
                        p: pf,
                        q: qf,
                        ok: true,
                        mismatch: None,
                    },
                    RefinementCheck::Mismatch { i, j, coarse, fine } => RefinementOut {
                        p: pf,
                        q: qf,
                        ok: false,
                        mismatch: Some(RefinementMismatch {
                            i,
                            j,
                            coarse: element_to_wire(&coarse),
                            fine: element_to_wire(&fine),
                        }),
                    },
                });
            }
            let holds = extension.ok && outs.iter().all(|r| r.ok);
            Outcome::new(
                Output::Popoviciu(PopoviciuOut {
                    holds,
                    p: BiPolyWire::from_poly(&p),
                    extension,
                    refinements: outs,
                }),
                holds,
            )
        }

        Params::Classify(orbit) => {
            let w = window(opts, orbit.window);
            let (report, check) = classify(f(), orbit, w)?;
            let holds = report.extension_ok;
            Outcome::new(
                Output::Classify(ClassifyOut {
                    holds,
                    ordinary: report.n == 0,
                    report: OrbitReportWire::from_report(&report),
                    extension: extension_out(&check, w),
                }),
                holds,
            )
        }

        Params::WitnessSearch { m, candidates, window: spec_window } => {
            let w = window(opts, *spec_window);
            let candidates = candidates.clone().unwrap_or_else(|| default_candidates(&spec.field));
            let found = witness_search(f(), *m, &candidates, w)?;
            let holds = found.is_some();
            Outcome::new(
                Output::WitnessSearch(WitnessSearchOut {
                    found: holds,
                    candidates: candidates.len(),
                    leading: found.as_ref().map(|r| UniPolyWire::from_poly(&r.leading_component())),
                    report: found.as_ref().map(OrbitReportWire::from_report),
                }),
                holds,
            )
        }

        Params::GraphSample {
            orbit,
            num_bound,
            den_bound,
            region,
        } => {
            let w = window(opts, orbit.window);
            let (report, check) = classify(f(), orbit, w)?;
            let extension = extension_out(&check, w);
            let cloud = if report.extension_ok {
                Some(graph_cloud(f(), &report, *num_bound, *den_bound, region.as_ref())?)
            } else {
                None
            };
            let mut on_graph = true;
            if let Some(cloud) = &cloud {
                for p in cloud.iter() {
                    on_graph &= f().evaluate(&p.x)? == p.y;
                }
            }
            let holds = report.extension_ok && on_graph;
            let mut outcome = Outcome::new(
                Output::GraphSample(GraphSampleOut {
                    holds,
                    report: OrbitReportWire::from_report(&report),
                    extension,
                    points: cloud.as_ref().map_or(0, PointCloud::len),
                    on_graph,
                }),
                holds,
            );
            outcome.cloud = cloud;
            outcome
        }

        Params::Sanjuan {
            x0,
            x1,
            num_bound,
            den_bound,
            coverage,
        } => {
            let a = spec.additive.as_ref().expect("validated sanjuan specs carry an additive map");
            let det = &(x0 * &a.eval(x1)?) - &(x1 * &a.eval(x0)?);
            let discontinuous = a.is_discontinuous();
            if det.is_zero() {
                return Ok(Outcome::new(
                    Output::Sanjuan(SanJuanOut {
                        independent: false,
                        discontinuous,
                        determinant: element_to_wire(&det),
                        points: 0,
                        coverage: None,
                    }),
                    false,
                ));
            }
            let cloud = san_juan_sample(a, x0, x1, *den_bound, *num_bound)?;
            let cov = match coverage {
                Some((region, eps, grid)) => Some(coverage_metric(&cloud, region, eps, *grid)?),
                None => None,
            };
            let mut outcome = Outcome::new(
                Output::Sanjuan(SanJuanOut {
                    independent: true,
                    discontinuous,
                    determinant: element_to_wire(&det),
                    points: cloud.len(),
                    coverage: cov,
                }),
                true,
            );
            outcome.cloud = Some(cloud);
            outcome
        }

        Params::Density { generators, oracle } => {
            let verdict = subgroup_dense(generators);
            let replayed = replay_verdict(generators, &verdict)?;
            let oracle = match oracle {
                Some(o) => Some(density_bruteforce_oracle(generators, &o.region, &o.eps, o.coef_bound, o.grid)?),
                None => None,
            };
            let dense = verdict.dense;
            Outcome::new(
                Output::Density(DensityOut {
                    dense,
                    verdict,
                    replayed,
                    oracle,
                }),
                dense,
            )
        }

        Params::Kronecker { thetas } => {
            let verdict = kronecker_dense(thetas)?;
            let replayed = replay_verdict(&GeneratorSet::kronecker(thetas)?, &verdict)?;
            let dense = verdict.dense;
            Outcome::new(Output::Kronecker(KroneckerOut { dense, verdict, replayed }), dense)
        }

        Params::DjokovicVerify { steps, x, terms } => {
            let terms = match terms {
                Some(t) => t.clone(),
                None => djokovic_expand(steps)?,
            };
            let check = djokovic_verify_terms(f(), steps, &terms, x)?;
            Outcome::new(
                Output::DjokovicVerify(DjokovicOut {
                    holds: check.holds,
                    lhs: element_to_wire(&check.lhs),
                    rhs: element_to_wire(&check.rhs),
                    terms: terms.len(),
                }),
                check.holds,
            )
        }
    })
}
