"""Brute-force (op)cartesianness and hom-object universality checkers.

All checkers quantify over enumerated base objects and total objects up
to a budget and return an explicit outcome: true, false with a witness,
or "not checked" when the enumeration would exceed its cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import Fibration, HomObject, TotalMor

DEFAULT_BUDGET = 6
DEFAULT_CANDIDATE_CAP = 10**6


@dataclass(frozen=True)
class CheckResult:
    status: str  # "true" | "false" | "not-checked"
    witness: str | None = None

    @property
    def is_true(self):
        return self.status == "true"

    @property
    def is_false(self):
        return self.status == "false"


def is_cartesian(fib: Fibration, f: TotalMor, budget: int = DEFAULT_BUDGET,
                 cap: int = DEFAULT_CANDIDATE_CAP) -> CheckResult:
    """f: X -> Y over u is cartesian iff every g over a factoring base
    morphism factors through f uniquely."""
    X, Y, u = f.src, f.dst, f.base
    I = fib.base_dom(u)
    steps = 0
    for W in fib.enumerate_base_objects(budget):
        for w in fib.all_base_maps(W, I):
            uw = fib.base_compose(u, w)
            for Z in fib.enumerate_total_objects_over(W, budget):
                gs = fib.total_mors_over(Z, Y, uw)
                if not gs:
                    continue
                hs = fib.total_mors_over(Z, X, w)
                steps += len(gs) * max(1, len(hs))
                if steps > cap:
                    return CheckResult("not-checked", "enumeration cap exceeded")
                for g in gs:
                    matching = [h for h in hs if fib.total_compose(f, h) == g]
                    if len(matching) != 1:
                        return CheckResult(
                            "false",
                            f"factoring map over base W with {len(matching)} factorizations")
    return CheckResult("true")


def is_opcartesian(fib: Fibration, f: TotalMor, budget: int = DEFAULT_BUDGET,
                   cap: int = DEFAULT_CANDIDATE_CAP) -> CheckResult:
    """Dual of is_cartesian: maps out of Y over factoring base morphisms."""
    X, Y, u = f.src, f.dst, f.base
    J = fib.base_cod(u)
    steps = 0
    for W in fib.enumerate_base_objects(budget):
        for w in fib.all_base_maps(J, W):
            wu = fib.base_compose(w, u)
            for Z in fib.enumerate_total_objects_over(W, budget):
                gs = fib.total_mors_over(X, Z, wu)
                if not gs:
                    continue
                hs = fib.total_mors_over(Y, Z, w)
                steps += len(gs) * max(1, len(hs))
                if steps > cap:
                    return CheckResult("not-checked", "enumeration cap exceeded")
                for g in gs:
                    matching = [h for h in hs if fib.total_compose(h, f) == g]
                    if len(matching) != 1:
                        return CheckResult(
                            "false",
                            f"factoring map over base W with {len(matching)} factorizations")
    return CheckResult("true")


def transported_universal(fib: Fibration, hom: HomObject, t) -> TotalMor:
    """t*(huniv) conjugated by the coherence isos: a fiber morphism
    (sigma∘t)*(X) -> (tau∘t)*(Y)."""
    moved = fib.reindex_fmor(t, hom.huniv)
    coh_src = fib.coh(t, hom.sigma, hom.X)
    coh_dst = fib.coh(t, hom.tau, hom.Y)
    return fib.fiber_compose(fib.fiber_invert(coh_dst), fib.fiber_compose(moved, coh_src))


def verify_hom_universal(fib: Fibration, hom: HomObject, budget: int = 3,
                         cap: int = DEFAULT_CANDIDATE_CAP) -> CheckResult:
    """Every span (K', sigma', tau', h') factors through hom by a unique t."""
    I = fib.base_cod(hom.sigma)
    J = fib.base_cod(hom.tau)
    steps = 0
    for Kp in fib.enumerate_base_objects(budget):
        for sigmap in fib.all_base_maps(Kp, I):
            rX = fib.reindex(sigmap, hom.X)
            for taup in fib.all_base_maps(Kp, J):
                rY = fib.reindex(taup, hom.Y)
                hps = fib.fiber_mors(rX, rY)
                ts = fib.all_base_maps(Kp, hom.K)
                steps += max(1, len(hps)) * max(1, len(ts))
                if steps > cap:
                    return CheckResult("not-checked", "enumeration cap exceeded")
                for hp in hps:
                    matching = []
                    for t in ts:
                        if fib.base_compose(hom.sigma, t) != sigmap:
                            continue
                        if fib.base_compose(hom.tau, t) != taup:
                            continue
                        if transported_universal(fib, hom, t) == hp:
                            matching.append(t)
                    if len(matching) != 1:
                        return CheckResult(
                            "false", f"span with {len(matching)} classifying maps")
                    produced = fib.hom_classify(hom, Kp, sigmap, taup, hp)
                    if produced != matching[0]:
                        return CheckResult("false", "hom_classify disagrees with the unique t")
    return CheckResult("true")
