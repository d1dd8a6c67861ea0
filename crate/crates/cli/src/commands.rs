use serde_json::{json, Value};

use meb_kit_core::convexity::{barycentric_circumradius, AABox};
use meb_kit_core::diameter::diameter_doublesweep_seeded;
use meb_kit_core::meb::{badoiu_clarkson, CoreSetRun};
use meb_kit_core::rng::derive_seed;
use meb_kit_core::tester::TestVerdict;
use meb_kit_core::{
    caratheodory_reduce, diameter_bruteforce, diameter_calipers_2d, elzinga_hearn_dual, exact_meb, exact_mkeb,
    fractional_helly_beta, gen_instance, helly_check_boxes, hopp_reeve_meb, jung_bound, k_g_tester, kt_residuals,
    nodim_caratheodory, one_s_tester, outlier_meb_sample, radon_partition, stream_2approx, stream_eps_2d,
    ConvexBody, ConvexCombination, DualOptions, InstanceKind, MebSolution, PointSet, StartPoint,
};

use crate::args::*;
use crate::io;
use crate::report::CliError;

type Out = Result<Value, CliError>;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report payloads serialize")
}

fn ball_payload(s: &MebSolution) -> Value {
    json!({
        "center": s.center().coords(),
        "radius": s.radius(),
        "s": s.s,
        "support": s.support.indices,
        "multipliers": s.support.multipliers,
        "iterations": s.iterations,
        "algorithm": s.algorithm,
    })
}

pub fn meb(points: &PointSet, a: &MebArgs) -> Out {
    Ok(match a.algo {
        MebAlgo::Exact => ball_payload(&exact_meb(points)?),
        MebAlgo::Hr => ball_payload(&hopp_reeve_meb(points)?),
        MebAlgo::Bc => {
            let CoreSetRun {
                solution, core_indices, ..
            } = badoiu_clarkson(points, a.k, StartPoint::First)?;
            let mut v = ball_payload(&solution);
            v["core_indices"] = to_value(&core_indices);
            v
        }
        MebAlgo::Eh => {
            let sol = elzinga_hearn_dual(
                points,
                DualOptions {
                    tol: a.tol,
                    max_iter: a.max_iter,
                },
            )?;
            let kt = kt_residuals(points, &sol.solution.ball, &sol.lambda)?;
            let mut v = ball_payload(&sol.solution);
            v["gap"] = json!(sol.gap);
            v["dual_value"] = json!(sol.dual_value);
            v["kt_residuals"] = to_value(&kt);
            v
        }
    })
}

pub fn mkeb(points: &PointSet, a: &MkebArgs, seed: u64) -> Out {
    let n = points.len();
    if a.sample {
        return Ok(to_value(&outlier_meb_sample(points, a.eps, a.delta, seed)?));
    }
    let k = match (a.k, a.z) {
        (Some(k), _) => k,
        (None, Some(z)) if z < n => n - z,
        (None, Some(z)) => return Err(CliError::usage(format!("--z {z} leaves no points out of {n}"))),
        (None, None) => return Err(CliError::usage("mkeb needs --k, --z or --sample")),
    };
    Ok(to_value(&exact_mkeb(points, k)?))
}

pub fn diameter(points: &PointSet, a: &DiameterArgs, seed: u64) -> Out {
    Ok(match a.algo {
        DiameterAlgo::Brute => to_value(&diameter_bruteforce(points)?),
        DiameterAlgo::Calipers => to_value(&diameter_calipers_2d(points)?),
        DiameterAlgo::Sweep => to_value(&diameter_doublesweep_seeded(points, seed)?),
        DiameterAlgo::Stream2 => {
            let (e, sketch) = stream_2approx(points.points())?;
            json!({"estimate": e, "lower": e, "upper": 2.0 * e, "sketch": sketch})
        }
        DiameterAlgo::Streameps => {
            let (e, sketch) = stream_eps_2d(points.points(), a.eps)?;
            json!({
                "estimate": e,
                "lower": e,
                "upper": (1.0 + a.eps) * e,
                "directions": sketch.directions().len(),
            })
        }
    })
}

fn verdict_payload(v: &TestVerdict) -> Value {
    json!({
        "outcome": v.outcome,
        "witness": v.witness.as_ref().map(|w| json!({
            "indices": w.indices,
            "points": w.points.iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
        })),
        "rounds": v.rounds_used,
        "round_budget": v.round_budget,
        "seed": v.seed,
    })
}

pub fn test_cluster(points: &PointSet, a: &TestClusterArgs, seed: u64) -> Out {
    if a.trials == 0 {
        return Err(CliError::usage("--trials must be >= 1"));
    }
    let body = match a.body {
        BodyKind::Ball => ConvexBody::ball(a.radius)?,
        BodyKind::Box if a.half_extents.is_empty() => {
            return Err(CliError::usage("--body box needs --half-extents"))
        }
        BodyKind::Box => ConvexBody::aabox(a.half_extents.clone())?,
    };
    let trial_seed = |t: usize| if a.trials == 1 { seed } else { derive_seed(seed, t as u64) };
    let mut runs = Vec::with_capacity(a.trials);
    let mut hits = 0;
    for t in 0..a.trials {
        let s = trial_seed(t);
        let run = match a.mode {
            TestMode::OneS => {
                let v = one_s_tester(points, &body, a.eps, a.delta, s)?;
                hits += usize::from(!v.accepted());
                verdict_payload(&v)
            }
            TestMode::Kg => {
                let v = k_g_tester(points, &body, a.k, a.c, a.delta, s)?;
                hits += usize::from(!v.accepted());
                verdict_payload(&v)
            }
            TestMode::Outliers => {
                let sol = outlier_meb_sample(points, a.eps, a.delta, s)?;
                hits += usize::from(sol.covered.len() >= sol.k);
                let mut v = to_value(&sol);
                v["seed"] = json!(s);
                v
            }
        };
        runs.push(run);
    }
    let summary_key = match a.mode {
        TestMode::Outliers => "covering_trials",
        _ => "rejections",
    };
    Ok(json!({"trials": a.trials, summary_key: hits, "runs": runs}))
}

pub fn bounds(points: Option<&PointSet>, a: &BoundsArgs) -> Out {
    let need = || points.ok_or_else(|| CliError::usage("this bound needs --input"));
    Ok(match a.which {
        BoundKind::Jung => to_value(&jung_bound(need()?)?),
        BoundKind::Variant => {
            let p = need()?;
            let j = jung_bound(p)?;
            let beta = barycentric_circumradius(p)?;
            json!({
                "meb_radius": j.meb_radius,
                "barycentric": beta,
                "jung": j.bound,
                "bound": beta.min(j.bound),
            })
        }
        BoundKind::FractionalHelly => {
            let alpha = a.alpha.ok_or_else(|| CliError::usage("fractional-helly needs --alpha"))?;
            let d = match (a.dim, points) {
                (Some(d), _) => d,
                (None, Some(p)) => p.dim(),
                (None, None) => return Err(CliError::usage("fractional-helly needs --dim or --input")),
            };
            json!({"dim": d, "alpha": alpha, "beta": fractional_helly_beta(d, alpha)?})
        }
    })
}

fn combination(points: &PointSet, weights: &[f64]) -> Result<ConvexCombination, CliError> {
    if weights.is_empty() {
        return Ok(ConvexCombination::uniform(points));
    }
    Ok(ConvexCombination::from_weights(
        points,
        (0..points.len()).collect(),
        weights.to_vec(),
    )?)
}

pub fn convexity(points: &PointSet, a: &ConvexityArgs) -> Out {
    Ok(match a.op {
        ConvexityOp::Radon => to_value(&radon_partition(points)?),
        ConvexityOp::Caratheodory => {
            let combo = combination(points, &a.weights)?;
            to_value(&caratheodory_reduce(points, &combo)?)
        }
        ConvexityOp::Nodim => {
            let r = a.r.ok_or_else(|| CliError::usage("nodim needs --r"))?;
            let combo = combination(points, &a.weights)?;
            to_value(&nodim_caratheodory(points, &combo, r)?)
        }
        ConvexityOp::HellyBoxes => {
            // each row is lower_1..lower_d, upper_1..upper_d
            let width = points.dim();
            if width % 2 != 0 {
                return Err(CliError::input(
                    format!("box rows need an even number of columns, got {width}"),
                    None,
                ));
            }
            let d = width / 2;
            let boxes = points
                .iter()
                .map(|p| AABox::new(p.coords()[..d].to_vec(), p.coords()[d..].to_vec()))
                .collect::<Result<Vec<_>, _>>()?;
            to_value(&helly_check_boxes(&boxes)?)
        }
    })
}

pub fn gen(a: &GenArgs, seed: u64, format: Option<Format>) -> Out {
    let kind = match a.kind.as_str() {
        "uniform-ball" => InstanceKind::UniformBall,
        "sphere-surface" => InstanceKind::SphereSurface,
        "gaussian" => InstanceKind::Gaussian,
        "clustered" => InstanceKind::Clustered {
            k: a.k,
            separation: a.separation,
        },
        "clusterable" => InstanceKind::Clusterable { k1: a.k1, eps: a.eps },
        "far" => InstanceKind::Far { k2: a.k2, delta: a.delta },
        other => {
            return Err(CliError::usage(format!(
                "unknown kind {other:?}; expected one of {}",
                InstanceKind::NAMES.join(", ")
            )))
        }
    };
    let inst = gen_instance(kind, a.n, a.dim, seed)?;
    let mut v = json!({
        "instance": kind,
        "n": inst.points.len(),
        "dim": inst.points.dim(),
        "certificate": inst.certificate,
    });
    match &a.points {
        Some(path) => {
            io::write_points(path, io::format_for(path, format), &inst.points)?;
            v["points_path"] = json!(path);
        }
        None => v["points"] = json!(inst.points.iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>()),
    }
    Ok(v)
}
