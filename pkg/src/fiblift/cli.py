"""File-driven front end: parse job descriptions, dispatch to the engine,
and emit deterministic reports.

One JSON document per job; no interactive mode.  Reports are serialized
with sorted keys and fixed separators, so identical jobs produce
byte-identical output.  Exit codes: 0 ok, 1 failed, 2 undetermined,
3 not-checked, 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .fibrations import (
    CodomainFibration,
    FamCatFibration,
    FamObj,
    FamSetFibration,
    TotalMor,
    VertMap,
    make_instance,
)
from .kernel import serialize as ser
from .kernel.finset import FinMap, FinSet, StructureError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNDETERMINED = 2
EXIT_NOT_CHECKED = 3
EXIT_USAGE = 4

_STATUS_EXIT = {"ok": EXIT_OK, "failed": EXIT_FAILED,
                "undetermined": EXIT_UNDETERMINED, "not-checked": EXIT_NOT_CHECKED}

COMMANDS = ("ulp", "solve", "factor", "comonad-check", "free-algebra",
            "leibniz", "cube", "verify")


class JobError(ValueError):
    """Malformed job file or failed eager validation."""


@dataclass(frozen=True)
class JobSpec:
    command: str
    fibration: str
    payload: dict
    cap: int
    seed: int


@dataclass
class Report:
    command: str
    status: str
    results: dict
    seed: int
    cap: int

    def to_json(self) -> str:
        doc = {"command": self.command, "status": self.status,
               "seed": self.seed, "cap": self.cap, "results": self.results}
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    def to_text(self) -> str:
        lines = [f"command : {self.command}",
                 f"status  : {self.status}",
                 f"seed    : {self.seed}",
                 f"cap     : {self.cap}"]
        for key in sorted(self.results):
            lines.append(f"{key:>24} : {_render(self.results[key])}")
        return "\n".join(lines) + "\n"


def _render(v):
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_render(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_render(v[k])}" for k in sorted(v)) + "}"
    return str(v)


# --- vertical map (de)serialization per instance -----------------------------

def vertical_from_json(fib, d: dict, name: str) -> VertMap:
    try:
        if fib.kind == "codomain":
            over = ser.finset_from_json(d["over"])
            dom = ser.finmap_from_json(d["dom"])
            cod = ser.finmap_from_json(d["cod"])
            data = FinMap(dom.dom, cod.dom, tuple(d["table"]))
            return fib.vertical(dom, cod, fib.make_mor(dom, cod, _ident(over), data))
        if fib.kind == "fam_set":
            over = ser.finset_from_json(d["over"])
            dom = FamObj(over, tuple(ser.finset_from_json(s) for s in d["dom"]))
            cod = FamObj(over, tuple(ser.finset_from_json(s) for s in d["cod"]))
            comps = tuple(FinMap(dom.fibers[i], cod.fibers[i], tuple(t))
                          for i, t in enumerate(d["table"]))
            return fib.vertical(dom, cod, TotalMor(dom, cod, _ident(over), comps))
        if fib.kind == "fam_cat":
            over = ser.fincat_from_json(d["over"])
            dom = ser.diagram_from_json(d["dom"])
            cod = ser.diagram_from_json(d["cod"])
            comps = tuple(FinMap(dom.on_obj[a], cod.on_obj[a], tuple(t))
                          for a, t in enumerate(d["table"]))
            from .kernel.fincat import identity_functor
            return fib.vertical(dom, cod, TotalMor(dom, cod, identity_functor(over), comps))
    except (KeyError, StructureError, IndexError, ValueError) as e:
        raise JobError(f"invalid vertical map '{name}': {e}") from e
    raise JobError(f"fibration kind {fib.kind} not supported in job files")


def _ident(s: FinSet) -> FinMap:
    return FinMap(s, s, tuple(range(s.size)))


def carrier_size(fib, obj) -> int:
    from .awfs_free import _carrier_size
    return _carrier_size(fib, obj)


# --- job parsing --------------------------------------------------------------

def parse_job(path: str) -> JobSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError as e:
        raise JobError(f"job file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise JobError(f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(doc, dict):
        raise JobError("job document must be a JSON object")
    command = doc.get("command")
    if command not in COMMANDS:
        raise JobError(f"unknown command {command!r}; expected one of {COMMANDS}")
    cap = doc.get("cap", 6)
    if not isinstance(cap, int) or cap <= 0:
        raise JobError(f"cap must be a positive integer, got {cap!r}")
    seed = doc.get("seed", 0)
    if not isinstance(seed, int):
        raise JobError(f"seed must be an integer, got {seed!r}")
    fibration = "codomain"
    if "fibration" in doc:
        fibration = doc["fibration"].get("kind", "codomain") \
            if isinstance(doc["fibration"], dict) else doc["fibration"]
    payload = dict(doc)
    return JobSpec(command, fibration, payload, cap, seed)


def _get_fib(job: JobSpec):
    if job.fibration not in ("codomain", "fam_set", "fam_cat"):
        raise JobError(f"unsupported fibration kind in job files: {job.fibration}")
    return make_instance(job.fibration)


def _require_maps(job: JobSpec, *names):
    maps = job.payload.get("maps")
    if not isinstance(maps, dict):
        raise JobError("job must carry a 'maps' object")
    for n in names:
        if n not in maps:
            raise JobError(f"job references undefined map id '{n}'")
    return maps


# --- command implementations ----------------------------------------------------

def run(job: JobSpec) -> Report:
    handler = {
        "ulp": _run_ulp,
        "solve": _run_solve,
        "factor": _run_factor,
        "comonad-check": _run_comonad,
        "free-algebra": _run_free_algebra,
        "leibniz": _run_leibniz,
        "cube": _run_cube,
        "verify": _run_verify,
    }[job.command]
    return handler(job)


def _run_ulp(job: JobSpec) -> Report:
    from .lifting import classify, enumerate_solutions, universal_lifting_problem

    fib = _get_fib(job)
    maps = _require_maps(job, "m", "f")
    m = vertical_from_json(fib, maps["m"], "m")
    f = vertical_from_json(fib, maps["f"], "f")
    ulp = universal_lifting_problem(fib, m, f)
    sols = enumerate_solutions(fib, m, f, ulp)
    t = classify(fib, m, f, ulp, ulp, verify_unique=False)
    first = _mor_tables(fib, sols.first) if sols.fillers else None
    results = {
        "problem": "universal",
        "K": _base_size(fib, ulp.K),
        "solutionCount": len(sols.fillers),
        "firstSolution": first,
        "classified_t": "identity",
    }
    return Report("ulp", "ok", results, job.seed, job.cap)


def _run_solve(job: JobSpec) -> Report:
    from .lifting import enumerate_solutions, has_frlp, universal_lifting_problem

    fib = _get_fib(job)
    maps = _require_maps(job, "m", "f")
    m = vertical_from_json(fib, maps["m"], "m")
    f = vertical_from_json(fib, maps["f"], "f")
    ok, witness = has_frlp(fib, m, f)
    results = {"frlp": ok}
    if not ok:
        results["witnessK"] = _base_size(fib, witness.K)
    status = "ok" if ok else "failed"
    return Report("solve", status, results, job.seed, job.cap)


def _run_factor(job: JobSpec) -> Report:
    from .step_one import (algebra_solution_bijection, check_fibred, comonad,
                           factor)

    fib = _get_fib(job)
    maps = _require_maps(job, "m", "f")
    m = vertical_from_json(fib, maps["m"], "m")
    f = vertical_from_json(fib, maps["f"], "f")
    fact = factor(fib, m, f)
    algs, sols, bij = algebra_solution_bijection(fib, m, f, fact)
    cm = comonad(fib, m)
    laws = cm.check_counit_laws(f) and cm.check_coassociativity(f)
    fibred = True
    for t in _reindex_probes(fib, f, job.cap):
        rf = fib.reindex_vert(t, f)
        if not check_fibred(fib, m, rf, f, fib.cartesian_lift(t, f.dom),
                            fib.cartesian_lift(t, f.cod), cm=cm):
            fibred = False
    results = {
        "L1": carrier_size(fib, fact.f.dom),
        "K1": carrier_size(fib, fact.K1),
        "R1": carrier_size(fib, fact.f.cod),
        "algebraCount": len(algs),
        "solutionCount": len(sols.fillers),
        "lawsOk": laws,
        "fibredOk": fibred,
    }
    status = "ok" if (bij and laws and fibred) else "failed"
    return Report("factor", status, results, job.seed, job.cap)


def _reindex_probes(fib, f, cap):
    out = []
    if fib.kind in ("codomain", "fam_set"):
        J = f.over
        for n in range(min(cap, 2) + 1):
            for t in fib.all_base_maps(FinSet(n), J):
                out.append(t)
    elif fib.kind == "fam_cat":
        for W in fib.enumerate_base_objects(2):
            out.extend(fib.all_base_maps(W, f.over))
    return out


def _run_comonad(job: JobSpec) -> Report:
    from .step_one import check_coalgebra_laws, comonad

    fib = _get_fib(job)
    maps = _require_maps(job, "m", "f")
    m = vertical_from_json(fib, maps["m"], "m")
    f = vertical_from_json(fib, maps["f"], "f")
    cm = comonad(fib, m)
    counit = cm.check_counit_laws(f)
    coassoc = cm.check_coassociativity(f)
    coalg = check_coalgebra_laws(fib, m, cm=cm)
    ok = counit and coassoc and coalg
    return Report("comonad-check", "ok" if ok else "failed",
                  {"counitLaws": counit, "coassociativity": coassoc,
                   "generatorCoalgebra": coalg},
                  job.seed, job.cap)


def _run_free_algebra(job: JobSpec) -> Report:
    from .awfs_free import free_monad

    fib = _get_fib(job)
    maps = _require_maps(job, "m", "f")
    m = vertical_from_json(fib, maps["m"], "m")
    f = vertical_from_json(fib, maps["f"], "f")
    fm = free_monad(fib, m, f, stage_cap=job.cap)
    results = {
        "stageSizes": fm.chain.carrier_sizes,
        "stabilizedAt": fm.chain.stabilized_at,
        "status": fm.status,
    }
    if fm.status == "ok":
        results["freeCarrier"] = carrier_size(fib, fm.free.obj.dom)
        results["monadAlgebraBijection"] = fm.algebra_bijection_ok
        status = "ok" if fm.algebra_bijection_ok else "failed"
    else:
        status = "undetermined"
    return Report("free-algebra", status, results, job.seed, job.cap)


def _run_leibniz(job: JobSpec) -> Report:
    from .leibniz import hom_count_adjunction, pullback_cotensor, pushout_product

    fib = _get_fib(job)
    if fib.kind != "codomain":
        raise JobError("leibniz jobs require the codomain instance")
    maps = _require_maps(job, "f", "g")
    f = vertical_from_json(fib, maps["f"], "f")
    g = vertical_from_json(fib, maps["g"], "g")
    pp = pushout_product(fib, f, g)
    results = {
        "pushoutCorner": carrier_size(fib, pp.corner),
        "pushoutTarget": carrier_size(fib, pp.map.cod),
        "pushoutCertificate": pp.certificate_ok,
    }
    status = "ok" if pp.certificate_ok else "failed"
    if f.over == g.over or f.over == fib.base_terminal():
        cot = pullback_cotensor(fib, f, g)
        results["cotensorSource"] = carrier_size(fib, cot.map.dom)
        results["cotensorCorner"] = carrier_size(fib, cot.corner)
        results["cotensorCertificate"] = cot.certificate_ok
        if f.over == g.over:
            results["homCountAdjunction"] = hom_count_adjunction(fib, f, f, g)
        if not cot.certificate_ok:
            status = "failed"
    return Report("leibniz", status, results, job.seed, job.cap)


def _run_cube(job: JobSpec) -> Report:
    from .cubical import (TRUNCATION_BANNER, check_de_morgan_laws,
                          check_lattice_laws, dm_free, extensionality_check,
                          face_classifier, face_lattice, interval_classifier,
                          kan_setup, kan_structures, cube_cat_trunc)

    sub = job.payload.get("cube")
    if sub not in ("dm", "face", "ext", "kan"):
        raise JobError(f"unknown cube subcommand {sub!r}")
    if sub == "dm":
        n = job.payload.get("names", 1)
        if not isinstance(n, int) or n < 0 or n > 2:
            raise JobError("dm needs 0 <= names <= 2")
        alg = dm_free(tuple("abc"[:n]))
        ok = check_de_morgan_laws(alg)
        return Report("cube", "ok" if ok else "failed",
                      {"subcommand": "dm", "names": n, "size": alg.size(),
                       "laws": ok}, job.seed, job.cap)
    if sub == "face":
        n = job.payload.get("names", 1)
        if not isinstance(n, int) or n < 0 or n > 3:
            raise JobError("face needs 0 <= names <= 3")
        fl = face_lattice(tuple("abc"[:n]))
        ok = check_lattice_laws(fl)
        return Report("cube", "ok" if ok else "failed",
                      {"subcommand": "face", "names": n, "size": fl.size(),
                       "laws": ok}, job.seed, job.cap)
    if sub == "ext":
        which = job.payload.get("classifier", "face")
        if which not in ("face", "interval"):
            raise JobError("ext classifier must be 'face' or 'interval'")
        cc = cube_cat_trunc(job.payload.get("k", 1))
        cl = face_classifier(cc) if which == "face" else interval_classifier(cc, 1)
        ok, witness = extensionality_check(cl, stage_bound=job.payload.get("k", 1))
        results = {"subcommand": "ext", "classifier": which,
                   "extensional": ok, "banner": TRUNCATION_BANNER}
        if witness is not None:
            i, x, y = witness
            alg = cc.algebras[i] if which == "interval" else None
            results["witnessStage"] = list(cc.objects[i])
            if which == "interval":
                results["witness"] = _dm_name(alg, x) + " vs " + _dm_name(alg, y)
        return Report("cube", "ok" if ok else "failed", results, job.seed, job.cap)
    # kan
    k = job.payload.get("k", 1)
    endpoint = job.payload.get("endpoint", 1)
    path = job.payload.get("input")
    setup = kan_setup(k, endpoint)
    if path is None:
        from .kernel.fincat import identity_nat
        psh_map = identity_nat(setup.fib.base_terminal())
    else:
        with open(path, "r", encoding="utf-8") as fh:
            psh_map = ser.nat_from_json(json.load(fh))
    rep = kan_structures(psh_map, setup=setup)
    return Report("cube", "ok",
                  {"subcommand": "kan", "k": k, "endpoint": endpoint,
                   "homSizes": list(rep.hom_sizes), "count": rep.count,
                   "banner": rep.banner},
                  job.seed, job.cap)


def _dm_name(alg, x) -> str:
    meets = alg.elements[x]
    if not meets:
        return "0"
    parts = []
    for s in meets:
        if not s:
            return "1"
        lits = ["~" + n if p == 0 else n for (n, p) in sorted(s)]
        parts.append("&".join(lits))
    return "|".join(sorted(parts))


def _run_verify(job: JobSpec) -> Report:
    from .verify_suites import run_suite

    suite = job.payload.get("suite", "kernel")
    results = run_suite(suite, job.seed, job.cap)
    status = results.pop("status")
    return Report("verify", status, results, job.seed, job.cap)


def _base_size(fib, K) -> int:
    if fib.kind in ("codomain", "fam_set"):
        return K.size
    if fib.kind == "fam_cat":
        return K.objects.size
    return sum(s.size for s in K.on_obj)


def _mor_tables(fib, mor: TotalMor):
    if fib.kind == "codomain":
        return list(mor.data.table)
    if fib.kind in ("fam_set", "fam_cat", "presheaf_codomain"):
        return [list(c.table) for c in mor.data]
    return None


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fiblift",
        description="lifting problems over Grothendieck fibrations, verified "
                    "by exhaustive enumeration on finite instances")
    parser.add_argument("--job", help="path to a JSON job document")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--cap", type=int, default=None,
                        help="override the job's enumeration cap")
    parser.add_argument("--seed", type=int, default=None,
                        help="override the job's corpus seed")
    sub = parser.add_subparsers(dest="subcommand")
    cube = sub.add_parser("cube", help="cubical-set subcommands")
    cube_sub = cube.add_subparsers(dest="cube_command", required=True)
    dm_p = cube_sub.add_parser("dm")
    dm_p.add_argument("--names", type=int, default=1)
    face_p = cube_sub.add_parser("face")
    face_p.add_argument("--names", type=int, default=1)
    ext_p = cube_sub.add_parser("ext")
    ext_p.add_argument("--classifier", choices=("face", "interval"), default="face")
    kan_p = cube_sub.add_parser("kan")
    kan_p.add_argument("--input", default=None)
    kan_p.add_argument("--k", type=int, default=1)

    args = parser.parse_args(argv)
    try:
        if args.subcommand == "cube":
            payload = {"command": "cube", "cube": args.cube_command}
            if args.cube_command in ("dm", "face"):
                payload["names"] = args.names
            if args.cube_command == "ext":
                payload["classifier"] = args.classifier
            if args.cube_command == "kan":
                payload["input"] = args.input
                payload["k"] = args.k
            job = JobSpec("cube", "presheaf_codomain", payload,
                          args.cap or 6, args.seed or 0)
        else:
            if not args.job:
                parser.print_usage(sys.stderr)
                return EXIT_USAGE
            job = parse_job(args.job)
            if args.cap is not None:
                job = JobSpec(job.command, job.fibration, job.payload, args.cap, job.seed)
            if args.seed is not None:
                job = JobSpec(job.command, job.fibration, job.payload, job.cap, args.seed)
        report = run(job)
    except JobError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    text = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return _STATUS_EXIT.get(report.status, EXIT_FAILED)


if __name__ == "__main__":
    sys.exit(main())
