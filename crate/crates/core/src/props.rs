//! Named properties checked exhaustively over every small topology.
//!
//! Each property runs over all labelled topologies on `1..=n` points (or,
//! for the product and function checks, over homeomorphism-class
//! representatives with at most three points) and reports the first
//! counterexample it meets.

use std::time::Instant;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebras::{
    bp_algebra, constructible_algebra, generate_algebra, generate_algebra_by_atoms, nwd_ideal, restrict_family,
    SetFamily,
};
use crate::axioms::{
    check_axiom, classify_space, is_infinity_subfit, is_t_nwd, AxiomId, AxiomId::*,
};
use crate::catalog::{product, product_point, subspace};
use crate::miner::{enumerate_topologies, MinerError};
use crate::operators::{
    alpha_modification, alpha_open_sets, closure, interior, is_dense, is_near_open, is_near_open_by_witness,
    is_nodec, is_nwd, is_regular_open, nwd_points, regular_open_interior, regular_open_sets, NearOpenKind,
};
use crate::pointset::PointSet;
use crate::space::{canonical_code, FiniteSpace};

pub const MAX_PROPOSITION_POINTS: usize = 4;
/// Factor and map spaces in the product and function checks.
pub const MAX_FACTOR_POINTS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub description: String,
    pub instances: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

struct Ctx {
    spaces: Vec<FiniteSpace>,
    reps: Vec<FiniteSpace>,
}

#[derive(Default)]
struct Tally {
    instances: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }

    fn done(&self) -> bool {
        self.counterexample.is_some()
    }
}

type Check = fn(&Ctx, &mut Tally);

pub struct Property {
    pub name: &'static str,
    pub description: &'static str,
    check: Check,
}

fn show(s: &FiniteSpace) -> String {
    format!("{}-point space with opens [{}]", s.carrier_size(), s.opens().iter().join(", "))
}

fn nonempty_subsets(s: &FiniteSpace) -> impl Iterator<Item = PointSet> {
    PointSet::all_subsets(s.carrier_size()).filter(|a| !a.is_empty())
}

fn sub(s: &FiniteSpace, a: PointSet) -> FiniteSpace {
    subspace(s, a).expect("nonempty subspace")
}


fn per_space(ctx: &Ctx, t: &mut Tally, f: impl Fn(&FiniteSpace) -> Result<(), String>) {
    for s in &ctx.spaces {
        let r = f(s);
        t.check(r.is_ok(), || format!("{}: {}", show(s), r.unwrap_err()));
        if t.done() {
            return;
        }
    }
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(s: &FiniteSpace, a: AxiomId, b: AxiomId) -> Result<(), String> {
    let (x, y) = (check_axiom(s, a), check_axiom(s, b));
    require(x == y, || format!("{a} is {x} but {b} is {y}"))
}

fn borel_oracle(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let alg = constructible_algebra(s);
        s.points().try_for_each(|x| {
            let single = s.singleton(x);
            let locally_closed = closure(s, single) & s.min_nbhd(x) == single;
            require(alg.contains(single) == locally_closed, || format!("point {x}"))
        })
    });
}

fn bp_oracle(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let alg = bp_algebra(s);
        s.points().try_for_each(|x| {
            let single = s.singleton(x);
            let expected = is_nwd(s, single) || s.is_open(single);
            require(alg.contains(single) == expected, || format!("point {x}"))
        })
    });
}

fn finite_collapse(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        same(s, TQuarter, THalf)?;
        same(s, T0, TD)?;
        same(s, TInfBp, TOmegaBp)
    });
}

fn meets(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let v = classify_space(s);
        let h = |a| v.holds(a);
        require(h(T1) == (h(TClosedOrNwd) && h(THalf)), || "T1 vs T_CLOSED_OR_NWD ∧ T_HALF".into())?;
        require(h(TClosedOrRo) == (h(TNwdOrRo) && h(THalf)), || "T_CLOSED_OR_RO vs T_NWD_OR_RO ∧ T_HALF".into())
    });
}

fn kappa_subfit(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let v = classify_space(s);
        let h = |a| v.holds(a);
        require(h(T1) == (h(TD) && h(Subfit)), || "T1 vs T_D ∧ SUBFIT".into())?;
        require(h(T1) == (h(TClosedMeetsRo) && h(RoSubfit)), || "T1 vs T_CLOSED_MEETS_RO ∧ RO_SUBFIT".into())?;
        require(!(h(TOmegaBp) && h(Subfit)) || h(TClosedOrNwd), || "T_OMEGA_BP ∧ SUBFIT".into())?;
        require(!(h(TNwdOrRo) && h(RoSubfit)) || h(TClosedOrNwd), || "T_NWD_OR_RO ∧ RO_SUBFIT".into())
    });
}

fn symmetric_subfit(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let symmetric = check_axiom(s, Symmetric);
        let hereditary = nonempty_subsets(s).all(|a| check_axiom(&sub(s, a), Subfit));
        require(symmetric == hereditary, || format!("SYMMETRIC is {symmetric}, hereditarily subfit is {hereditary}"))?;
        let inf = is_infinity_subfit(s);
        require(symmetric == inf, || format!("SYMMETRIC is {symmetric}, ∞-subfit is {inf}"))
    });
}

fn symmetric_collapse(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let v = classify_space(s);
        let h = |a| v.holds(a);
        require(!(h(Symmetric) && h(TInfBp)) || h(TClosedOrNwd), || "SYMMETRIC ∧ T_INF_BP".into())?;
        require(h(T1) == (h(Symmetric) && h(T0)), || "T1 vs SYMMETRIC ∧ T0".into())
    });
}

fn nodec_collapse(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        if !check_axiom(s, Nodec) {
            return Ok(());
        }
        same(s, TClosedOrNwd, T1)?;
        same(s, TNwdOrRo, TClosedOrRo)?;
        same(s, TOmegaBp, THalf)
    });
}

fn closed_or_nwd_collapse(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        same(s, TClosedOrNwd, T1)?;
        require(!is_t_nwd(s), || "nonempty finite space is T_Nwd".into())
    });
}

fn alpha_correspondence(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let a = alpha_modification(s);
        let pairs = [
            (TClosedOrNwd, T1),
            (TNwdOrRo, TClosedMeetsRo),
            (TNwdOrRo, TClosedOrRo),
            (TOmegaBp, TD),
            (TOmegaBp, THalf),
            (TInfBp, T0),
        ];
        pairs.into_iter().try_for_each(|(x, y)| {
            let (l, r) = (check_axiom(s, x), check_axiom(&a, y));
            require(l == r, || format!("{x} is {l} but {y} of the α-modification is {r}"))
        })
    });
}

fn alpha_modification_laws(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let a = alpha_modification(s);
        require(s.opens().iter().all(|&u| a.is_open(u)), || "τ ⊄ τ^α".into())?;
        require(regular_open_sets(s) == regular_open_sets(&a), || "regular open sets differ".into())?;
        require(alpha_modification(&a) == a, || "not idempotent".into())?;
        let nwd_s: Vec<_> = PointSet::all_subsets(s.carrier_size()).filter(|&b| is_nwd(s, b)).collect();
        let nwd_a: Vec<_> = PointSet::all_subsets(s.carrier_size()).filter(|&b| is_nwd(&a, b)).collect();
        require(nwd_s == nwd_a, || "nowhere dense sets differ".into())?;
        require(is_nodec(&a), || "α-modification is not nodec".into())?;
        require(a.opens() == alpha_open_sets(s).as_slice(), || "U \\ N differs from the α-open sets".into())
    });
}

fn near_open_forms(ctx: &Ctx, t: &mut Tally) {
    use NearOpenKind::*;
    per_space(ctx, t, |s| {
        PointSet::all_subsets(s.carrier_size()).try_for_each(|a| {
            for k in NearOpenKind::ALL {
                require(is_near_open(s, a, k) == is_near_open_by_witness(s, a, k), || format!("{k} forms disagree on {a}"))?;
            }
            let [semi, pre, alpha, beta] = [Semi, Pre, Alpha, Beta].map(|k| is_near_open(s, a, k));
            require(alpha == (semi && pre), || format!("α ≠ semi ∧ pre on {a}"))?;
            require((!semi || beta) && (!pre || beta), || format!("semi or pre without β on {a}"))?;
            require(!s.is_open(a) || alpha, || format!("open {a} not α-open"))
        })
    });
}

fn preopen_open_dense(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let dense: Vec<PointSet> = PointSet::all_subsets(s.carrier_size()).filter(|&d| is_dense(s, d)).collect();
        PointSet::all_subsets(s.carrier_size()).try_for_each(|a| {
            let split = s.opens().iter().any(|&u| dense.iter().any(|&d| u & d == a));
            let pre = is_near_open(s, a, NearOpenKind::Pre);
            require(pre == split, || format!("{a}: pre-open {pre}, open ∩ dense {split}"))
        })
    });
}

fn duality(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        PointSet::all_subsets(s.carrier_size()).try_for_each(|a| {
            require(interior(s, a) == closure(s, a.complement()).complement(), || format!("on {a}"))
        })
    });
}

fn regular_open(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let brute: Vec<PointSet> = PointSet::all_subsets(s.carrier_size()).filter(|&a| is_regular_open(s, a)).collect();
        require(brute.iter().all(|&a| s.is_open(a)), || "regular open set not open".into())?;
        require(brute == regular_open_sets(s), || "ro(U) misses a regular open set".into())?;
        s.opens().iter().try_for_each(|&u| {
            let r = regular_open_interior(s, u);
            require(regular_open_interior(s, r) == r, || format!("ro not idempotent on {u}"))
        })
    });
}

fn t_nwd_beta_open(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        nonempty_subsets(s).try_for_each(|a| {
            let sa = sub(s, a);
            let keeps = a.subsets().filter(|&b| is_nwd(s, b)).all(|b| is_nwd(&sa, b.restrict_to(a)));
            let beta = is_near_open(s, a, NearOpenKind::Beta);
            require(keeps == beta, || format!("{a}: keeps nwd sets {keeps}, β-open {beta}"))
        })
    });
}

fn bp_restriction_beta(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let bp = bp_algebra(s);
        nonempty_subsets(s).filter(|&u| is_near_open(s, u, NearOpenKind::Beta)).try_for_each(|u| {
            let local = bp_algebra(&sub(s, u)).sets;
            require(local == restrict_family(&bp.sets, u), || format!("β-open {u}"))
        })
    });
}

fn bp_restriction_semi(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let bp = bp_algebra(s);
        nonempty_subsets(s).filter(|&u| is_near_open(s, u, NearOpenKind::Semi)).try_for_each(|u| {
            require(bp.contains(u), || format!("semi-open {u} outside the BP algebra"))?;
            let local = bp_algebra(&sub(s, u)).sets;
            let trace = SetFamily::new(u.len(), bp.sets.within(u).iter().map(|a| a.restrict_to(u)));
            require(local == trace, || format!("semi-open {u}"))
        })
    });
}

fn preopen_ro_restriction(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let ro = SetFamily::new(s.carrier_size(), regular_open_sets(s));
        let v = classify_space(s);
        nonempty_subsets(s).filter(|&a| is_near_open(s, a, NearOpenKind::Pre)).try_for_each(|a| {
            let sa = sub(s, a);
            let local = SetFamily::new(a.len(), regular_open_sets(&sa));
            require(local == restrict_family(&ro, a), || format!("pre-open {a}: regular open traces differ"))?;
            [TClosedOrRo, TClosedMeetsRo, TNwdOrRo].into_iter().try_for_each(|ax| {
                require(!v.holds(ax) || check_axiom(&sa, ax), || format!("pre-open {a} loses {ax}"))
            })
        })
    });
}

fn beta_open_heredity(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let v = classify_space(s);
        nonempty_subsets(s).filter(|&u| is_near_open(s, u, NearOpenKind::Beta)).try_for_each(|u| {
            let su = sub(s, u);
            [TOmegaBp, TClosedOrNwd].into_iter().try_for_each(|ax| {
                require(!v.holds(ax) || check_axiom(&su, ax), || format!("β-open {u} loses {ax}"))
            })
        })
    });
}

fn dense_isolated(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let criterion = PointSet::all_subsets(s.carrier_size()).filter(|&d| is_dense(s, d)).all(|d| {
            d.iter().all(|x| (s.min_nbhd(x) & d) != s.singleton(x) || s.is_open(s.singleton(x)))
        });
        let bp = check_axiom(s, TOmegaBp);
        require(bp == criterion, || format!("T_OMEGA_BP is {bp}, dense-subset criterion is {criterion}"))
    });
}

fn quarter_criterion(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let n = s.carrier_size();
        let separated = |a: PointSet, b: PointSet| s.opens().iter().any(|u| a.is_subset(u) && u.is_disjoint(&b));
        let pt = |x| s.singleton(x);
        let definition = s.points().all(|x| {
            PointSet::all_subsets(n)
                .filter(|f| !f.contains(x))
                .all(|f| separated(pt(x), f) || separated(f, pt(x)))
        });
        let three_points = !s.points().any(|x| {
            let others = s.points().filter(move |&y| y != x);
            others.clone().any(|y| !separated(pt(x), pt(y))) && others.clone().any(|z| !separated(pt(z), pt(x)))
        });
        let q = check_axiom(s, TQuarter);
        require(q == definition && q == three_points, || {
            format!("T_QUARTER {q}, finite-set definition {definition}, three-point form {three_points}")
        })
    });
}

fn hereditary(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let subs: Vec<(PointSet, FiniteSpace)> = nonempty_subsets(s).map(|a| (a, sub(s, a))).collect();
        for ax in [TD, THalf, TQuarter] {
            let all = subs.iter().all(|(_, x)| check_axiom(x, ax));
            require(check_axiom(s, ax) == all, || format!("{ax} not hereditary"))?;
        }
        let closed: Vec<&FiniteSpace> = subs.iter().filter(|(a, _)| s.is_closed(*a)).map(|(_, x)| x).collect();
        let inf = closed.iter().all(|x| check_axiom(x, TInfBp));
        require(check_axiom(s, T0) == inf, || "T0 vs closed subspaces T_INF_BP".into())?;
        let nwd_ro = closed.iter().all(|x| check_axiom(x, TNwdOrRo));
        require(check_axiom(s, T1) == nwd_ro, || "T1 vs closed subspaces T_NWD_OR_RO".into())
    });
}

fn pairs(ctx: &Ctx) -> impl Iterator<Item = (&FiniteSpace, &FiniteSpace)> {
    ctx.reps.iter().cartesian_product(ctx.reps.iter())
}

fn product_preservation(ctx: &Ctx, t: &mut Tally) {
    for (a, b) in pairs(ctx) {
        let p = product(a, b).expect("small product");
        for ax in [TD, TOmegaBp, TClosedMeetsRo, TNwdOrRo, TClosedOrNwd] {
            if check_axiom(a, ax) && check_axiom(b, ax) {
                t.check(check_axiom(&p, ax), || format!("{ax} lost in {} × {}", show(a), show(b)));
            }
        }
    }
}

fn nwd_in_product(ctx: &Ctx, t: &mut Tally) {
    for (a, b) in pairs(ctx) {
        let p = product(a, b).expect("small product");
        let nb = b.carrier_size();
        for (x, y) in a.points().cartesian_product(b.points()) {
            let point = p.singleton(product_point(nb, x, y));
            let direct = is_nwd(&p, point);
            let factorwise = is_nwd(a, a.singleton(x)) || is_nwd(b, b.singleton(y));
            let rect = closure(a, a.singleton(x))
                .iter()
                .cartesian_product(closure(b, b.singleton(y)).iter().collect::<Vec<_>>())
                .fold(p.empty_set(), |acc, (u, v)| acc.with(product_point(nb, u, v)));
            let closure_ok = closure(&p, point) == rect;
            let by_interior = interior(&p, rect).is_empty();
            t.check(direct == factorwise && direct == by_interior && closure_ok, || {
                format!("point ({x},{y}) of {} × {}", show(a), show(b))
            });
        }
    }
}

fn t_nwd_absorption(ctx: &Ctx, t: &mut Tally) {
    for (a, b) in pairs(ctx) {
        if is_t_nwd(a) {
            let p = product(a, b).expect("small product");
            t.check(is_t_nwd(&p), || format!("{} × {}", show(a), show(b)));
        }
    }
}

/// Every function from the points of `x` to the points of `y`, as the
/// list of images.
fn functions(x: &FiniteSpace, y: &FiniteSpace) -> impl Iterator<Item = Vec<usize>> {
    (0..x.carrier_size()).map(|_| y.points()).multi_cartesian_product()
}

fn preimage(f: &[usize], x: &FiniteSpace, target: PointSet) -> PointSet {
    x.points().filter(|&p| target.contains(f[p])).fold(x.empty_set(), |acc, p| acc.with(p))
}

fn fibers_hold(f: &[usize], x: &FiniteSpace, y: &FiniteSpace, ax: AxiomId) -> bool {
    y.points().all(|q| {
        let fib = preimage(f, x, y.singleton(q));
        fib.is_empty() || check_axiom(&sub(x, fib), ax)
    })
}

fn borel_function(ctx: &Ctx, t: &mut Tally) {
    for (x, y) in pairs(ctx) {
        if !check_axiom(y, TD) {
            continue;
        }
        let alg = constructible_algebra(x);
        for f in functions(x, y) {
            let measurable = y.opens().iter().all(|&u| alg.contains(preimage(&f, x, u)));
            if measurable && fibers_hold(&f, x, y, TD) {
                t.check(check_axiom(x, TD), || format!("f = {f:?} from {} to {}", show(x), show(y)));
            }
        }
    }
}

fn bp_function(ctx: &Ctx, t: &mut Tally) {
    for (x, y) in pairs(ctx) {
        if !check_axiom(y, TOmegaBp) {
            continue;
        }
        let alg = bp_algebra(x);
        let y_nwd = nwd_points(y);
        for f in functions(x, y) {
            let measurable = y.opens().iter().all(|&u| alg.contains(preimage(&f, x, u)));
            let nwd_pulls_back = preimage(&f, x, y_nwd).iter().all(|p| is_nwd(x, x.singleton(p)));
            if measurable && nwd_pulls_back && fibers_hold(&f, x, y, TOmegaBp) {
                t.check(check_axiom(x, TOmegaBp), || format!("f = {f:?} from {} to {}", show(x), show(y)));
            }
        }
    }
}

fn algebra_minimality(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        for alg in [constructible_algebra(s), bp_algebra(s)] {
            require(alg.sets.is_algebra(), || "not an algebra".into())?;
            require(alg.base.iter().all(|a| alg.contains(a)), || "misses a generator".into())?;
            let atoms = generate_algebra_by_atoms(s.carrier_size(), &alg.base);
            require(alg.sets == atoms, || "differs from the atom construction".into())?;
        }
        let again = generate_algebra(s.carrier_size(), &constructible_algebra(s).sets).sets;
        require(again == constructible_algebra(s).sets, || "generation not idempotent".into())
    });
}

fn specialization_roundtrip(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let order = s.specialization_preorder();
        require(FiniteSpace::from_preorder(&order) == *s, || "preorder does not recover the topology".into())?;
        s.points().cartesian_product(s.points()).try_for_each(|(x, y)| {
            let in_closure = closure(s, s.singleton(y)).contains(x);
            let in_nbhd = s.min_nbhd(x).contains(y);
            require(order.leq(x, y) == in_closure && in_closure == in_nbhd, || format!("pair ({x},{y})"))
        })
    });
}

fn min_nbhd(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        s.points().try_for_each(|x| {
            let m = s.min_nbhd(x);
            let meet = s.opens().iter().filter(|u| u.contains(x)).fold(s.carrier(), |acc, &u| acc & u);
            require(m == meet && s.is_open(m), || format!("point {x}"))
        })
    });
}

fn nwd_ideal_check(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let brute = SetFamily::new(s.carrier_size(), PointSet::all_subsets(s.carrier_size()).filter(|&a| is_nwd(s, a)));
        require(nwd_ideal(s) == brute, || "nwd ideal".into())
    });
}

fn canonical_invariance(ctx: &Ctx, t: &mut Tally) {
    per_space(ctx, t, |s| {
        let code = canonical_code(s).expect("small carrier");
        let n = s.carrier_size();
        (0..n).permutations(n).try_for_each(|perm| {
            require(canonical_code(&s.permuted(&perm)).unwrap() == code, || format!("permutation {perm:?}"))
        })
    });
}

pub const PROPERTIES: &[Property] = &[
    Property { name: "borel_oracle", description: "{x} is in the constructible algebra iff it is locally closed", check: borel_oracle },
    Property { name: "bp_oracle", description: "{x} is in the BP algebra iff it is nowhere dense or open", check: bp_oracle },
    Property { name: "finite_collapse", description: "T_QUARTER = T_HALF, T0 = T_D, T_INF_BP = T_OMEGA_BP", check: finite_collapse },
    Property { name: "meets", description: "T1 = T_CLOSED_OR_NWD ∧ T_HALF and T_CLOSED_OR_RO = T_NWD_OR_RO ∧ T_HALF", check: meets },
    Property { name: "kappa_subfit", description: "subfitness turns T_D, T_CLOSED_MEETS_RO into T1 and T_OMEGA_BP, T_NWD_OR_RO into T_CLOSED_OR_NWD", check: kappa_subfit },
    Property { name: "symmetric_subfit", description: "SYMMETRIC iff every subspace is SUBFIT iff ∞-subfit", check: symmetric_subfit },
    Property { name: "symmetric_collapse", description: "SYMMETRIC ∧ T_INF_BP ⇒ T_CLOSED_OR_NWD and T1 = SYMMETRIC ∧ T0", check: symmetric_collapse },
    Property { name: "nodec_collapse", description: "on nodec spaces T_CLOSED_OR_NWD = T1, T_NWD_OR_RO = T_CLOSED_OR_RO, T_OMEGA_BP = T_HALF", check: nodec_collapse },
    Property { name: "closed_or_nwd_collapse", description: "on finite spaces T_CLOSED_OR_NWD = T1 and no space is T_Nwd", check: closed_or_nwd_collapse },
    Property { name: "alpha_correspondence", description: "axioms of a space match classical axioms of its α-modification", check: alpha_correspondence },
    Property { name: "alpha_modification", description: "τ ⊆ τ^α, same regular open and nowhere dense sets, idempotent, nodec", check: alpha_modification_laws },
    Property { name: "near_open_forms", description: "operator and witness forms agree; α = semi ∧ pre; semi, pre ⇒ β; open ⇒ α", check: near_open_forms },
    Property { name: "preopen_open_dense", description: "pre-open sets are the intersections of open and dense sets", check: preopen_open_dense },
    Property { name: "duality", description: "int A = X \\ cl(X \\ A)", check: duality },
    Property { name: "regular_open", description: "regular open sets are open and ro is idempotent", check: regular_open },
    Property { name: "t_nwd_beta_open", description: "A keeps every nowhere dense subset nowhere dense iff A is β-open", check: t_nwd_beta_open },
    Property { name: "bp_restriction_beta", description: "BP algebra of a β-open subspace is the trace of the BP algebra", check: bp_restriction_beta },
    Property { name: "bp_restriction_semi", description: "semi-open U is in the BP algebra and its BP algebra is BP(X) ∩ P(U)", check: bp_restriction_semi },
    Property { name: "preopen_ro_restriction", description: "regular open sets of a pre-open subspace are traces; RO-based axioms inherited", check: preopen_ro_restriction },
    Property { name: "beta_open_heredity", description: "β-open subspaces inherit T_OMEGA_BP and T_CLOSED_OR_NWD", check: beta_open_heredity },
    Property { name: "dense_isolated", description: "T_OMEGA_BP iff isolated points of dense subsets are isolated", check: dense_isolated },
    Property { name: "quarter_criterion", description: "T_QUARTER matches the finite-set separation definition and the three-point form", check: quarter_criterion },
    Property { name: "hereditary", description: "T_D, T_HALF, T_QUARTER hereditary; T0 and T1 via closed subspaces", check: hereditary },
    Property { name: "product_preservation", description: "binary products keep T_D, T_OMEGA_BP, T_CLOSED_MEETS_RO, T_NWD_OR_RO, T_CLOSED_OR_NWD", check: product_preservation },
    Property { name: "nwd_in_product", description: "a point of a product is nowhere dense iff a coordinate is", check: nwd_in_product },
    Property { name: "t_nwd_absorption", description: "a product with a T_Nwd factor is T_Nwd (vacuous on finite spaces)", check: t_nwd_absorption },
    Property { name: "borel_function", description: "constructible maps into T_D spaces with T_D fibers have T_D domains", check: borel_function },
    Property { name: "bp_function", description: "BP maps into T_OMEGA_BP spaces with T_OMEGA_BP fibers have T_OMEGA_BP domains", check: bp_function },
    Property { name: "algebra_minimality", description: "generated families are the least algebras over their generators", check: algebra_minimality },
    Property { name: "specialization_roundtrip", description: "topology and specialization preorder determine each other", check: specialization_roundtrip },
    Property { name: "min_nbhd", description: "min_nbhd(x) is the intersection of the open sets containing x", check: min_nbhd },
    Property { name: "nwd_ideal", description: "nowhere dense sets are the subsets of nowhere dense points", check: nwd_ideal_check },
    Property { name: "canonical_invariance", description: "canonical code is invariant under relabelling", check: canonical_invariance },
];

pub fn property_names() -> impl Iterator<Item = &'static str> {
    PROPERTIES.iter().map(|p| p.name)
}

/// Runs every property, or the one named `which`, over all topologies on
/// `1..=n` points.
pub fn verify_propositions(n: usize, which: Option<&str>) -> Result<Vec<PropertyOutcome>, MinerError> {
    if n > MAX_PROPOSITION_POINTS {
        return Err(MinerError::CarrierTooLarge { size: n, max: MAX_PROPOSITION_POINTS });
    }
    let selected: Vec<&Property> = match which {
        Some(name) => vec![PROPERTIES
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| MinerError::UnknownProperty(name.to_string()))?],
        None => PROPERTIES.iter().collect(),
    };
    let mut spaces = Vec::new();
    for k in 1..=n {
        spaces.extend(enumerate_topologies(k, false)?.0);
    }
    let mut reps = Vec::new();
    for k in 1..=n.min(MAX_FACTOR_POINTS) {
        reps.extend(enumerate_topologies(k, true)?.0);
    }
    let ctx = Ctx { spaces, reps };
    Ok(selected
        .into_iter()
        .map(|p| {
            let start = Instant::now();
            let mut tally = Tally::default();
            (p.check)(&ctx, &mut tally);
            PropertyOutcome {
                name: p.name.to_string(),
                description: p.description.to_string(),
                instances: tally.instances,
                passed: tally.counterexample.is_none(),
                counterexample: tally.counterexample,
                elapsed_ms: start.elapsed().as_millis(),
            }
        })
        .collect())
}
