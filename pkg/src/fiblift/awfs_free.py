"""Bounded free-algebra iteration: pointed endofunctors on slices, free
monads, natural composition of algebras, and awfs assembly with law
verification.

For a generating family m and a vertical map f: X -> Y, the slice pointed
endofunctor sends g (a map into Y) to <f, R1 g>: X + K1 g -> Y.  Its
algebras are maps under f carrying an R1-algebra structure, so an initial
algebra is the free R1-algebra on f.  The chain iterates the endofunctor
with the standard successor step (a coequalizer forcing the two unit
images to agree) and declares stabilization when the connecting map
becomes invertible; it never claims nonexistence on cap exhaustion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fibrations.base import FiberCoproduct, Fibration, TotalMor, VertMap
from .fibrations.vertical import Square, VerticalArrowFibration
from .kernel.finset import FinMap, StructureError
from .lifting import enumerate_solutions, universal_lifting_problem
from .step_one import (
    Factorization,
    algebra_to_solution,
    factor,
    k1_action,
    solution_to_algebra,
)

DEFAULT_STAGE_CAP = 16
DEFAULT_SIZE_CAP = 10**4


def _carrier_size(fib: Fibration, obj) -> int:
    if fib.kind == "codomain":
        return obj.dom.size
    if fib.kind == "fam_set":
        return sum(s.size for s in obj.fibers)
    if fib.kind == "fam_cat":
        return sum(s.size for s in obj.on_obj)
    if fib.kind == "presheaf_codomain":
        return sum(s.size for s in obj.source.on_obj)
    raise StructureError(f"unknown instance kind {fib.kind}")


class SlicePointedEndo:
    """g |-> <f, R1 g>: X + K1 g -> anchor, with point L1 then inclusion."""

    def __init__(self, fib: Fibration, m: VertMap, f: VertMap):
        self.fib = fib
        self.m = m
        self.f = f
        self.anchor = f.cod
        self._fact_cache: dict = {}

    def factor_slice(self, g: VertMap) -> Factorization:
        if g not in self._fact_cache:
            self._fact_cache[g] = factor(self.fib, self.m, g)
        return self._fact_cache[g]

    def apply(self, g: VertMap):
        """Returns (T g as a slice object, point: g -> T g, coproduct data,
        factorization of g)."""
        fib = self.fib
        fact = self.factor_slice(g)
        cp = fib.fiber_coproduct(self.f.dom, fact.K1)
        tmap = cp.case(self.f.map, fact.R1)
        tg = VertMap(self.f.over, cp.obj, self.anchor, tmap)
        point = fib.fiber_compose(cp.in1, fact.L1)
        return tg, point, cp, fact

    def algebras_on(self, g: VertMap):
        """All T-algebra structures on g: maps a: T g -> g in the slice
        with a ∘ point = id."""
        fib = self.fib
        tg, point, cp, fact = self.apply(g)
        return [a for a in fib.fiber_fillers(point, g.map, fib.fiber_id(g.dom), tg.map)]


@dataclass(frozen=True)
class TAlgebra:
    """A slice-endofunctor algebra split into its two components."""

    obj: VertMap        # slice object over the anchor
    ins: TotalMor       # X -> carrier (the f-component)
    alg: TotalMor       # K1(obj) -> carrier (the R1-algebra component)


@dataclass
class AlgChain:
    endo: SlicePointedEndo
    stages: list                 # slice objects g_0, g_1, ...
    connecting: list             # x_n : g_n -> g_{n+1}
    quotients: list              # q_{n+1} : T(g_n) -> g_{n+1}
    coprods: list                # coproduct data of T(g_n)
    stabilized_at: int | None
    status: str                  # "stabilized" | "undetermined"

    @property
    def carrier_sizes(self):
        return [_carrier_size(self.endo.fib, g.dom) for g in self.stages]

    def free_algebra(self) -> TAlgebra:
        if self.status != "stabilized":
            raise StructureError("chain did not stabilize")
        n = self.stabilized_at
        fib = self.endo.fib
        x_inv = fib.fiber_invert(self.connecting[n])
        a = fib.fiber_compose(x_inv, self.quotients[n + 1])
        cp = self.coprods[n]
        g_n = self.stages[n]
        ins = fib.fiber_compose(a, cp.in0)
        alg = fib.fiber_compose(a, cp.in1)
        return TAlgebra(g_n, ins, alg)


def iterate_chain(endo: SlicePointedEndo, seed: VertMap,
                  stage_cap: int = DEFAULT_STAGE_CAP,
                  size_cap: int = DEFAULT_SIZE_CAP) -> AlgChain:
    """Iterate g_{n+1} = T(g_n) with the coequalizer successor; stabilize
    when the connecting map is invertible, else report "undetermined"."""
    fib = endo.fib
    stages = [seed]
    connecting = []
    quotients = [None]
    coprods = []
    g1, point0, cp0, _ = endo.apply(seed)
    stages.append(g1)
    connecting.append(point0)
    quotients.append(fib.fiber_id(g1.dom))
    coprods.append(cp0)
    n = 0
    while True:
        if fib.fiber_mor_is_iso(connecting[n]):
            return AlgChain(endo, stages, connecting, quotients, coprods, n, "stabilized")
        if n + 1 >= stage_cap or _carrier_size(fib, stages[n + 1].dom) > size_cap:
            return AlgChain(endo, stages, connecting, quotients, coprods, None, "undetermined")
        g_n, g_n1 = stages[n], stages[n + 1]
        tg_n1, point_n1, cp_n1, fact_n1 = endo.apply(g_n1)
        # two maps T(g_n) -> T(g_{n+1}) whose coequalizer forces the unit
        # images to coincide
        t_of_x = _t_on_slice_mor(endo, g_n, g_n1, connecting[n])
        eta_q = fib.fiber_compose(point_n1, quotients[n + 1])
        ce = fib.fiber_coequalizer(t_of_x, eta_q)
        new_map = ce.induce(tg_n1.map)
        g_n2 = VertMap(seed.over, ce.obj, endo.anchor, new_map)
        q_n2 = ce.q
        x_n1 = fib.fiber_compose(q_n2, point_n1)
        stages.append(g_n2)
        connecting.append(x_n1)
        quotients.append(q_n2)
        coprods.append(cp_n1)
        n += 1


def _t_on_slice_mor(endo: SlicePointedEndo, g_src: VertMap, g_dst: VertMap,
                    u: TotalMor) -> TotalMor:
    """T(u): T(g_src) -> T(g_dst) for a slice morphism u."""
    fib = endo.fib
    tg_s, _, cp_s, fact_s = endo.apply(g_src)
    tg_d, _, cp_d, fact_d = endo.apply(g_dst)
    k = k1_action(fib, fact_s, fact_d, u, fib.fiber_id(endo.anchor))
    return cp_s.case(cp_d.in0, fib.fiber_compose(cp_d.in1, k))


def induced_morphism(chain: AlgChain, dst_endo: SlicePointedEndo,
                     target: TAlgebra, x_comp: TotalMor, w: TotalMor) -> TotalMor:
    """The canonical morphism from the chain's free algebra to a target
    algebra of a possibly different slice endofunctor, over the component
    maps x_comp: X_src -> X_dst and w: anchor_src -> anchor_dst."""
    fib = chain.endo.fib
    if chain.status != "stabilized":
        raise StructureError("chain did not stabilize")
    n_star = chain.stabilized_at
    seed = chain.stages[0]
    u = _initial_slice_morphism(fib, seed, target.obj, w)
    fact_t = dst_endo.factor_slice(target.obj)
    for n in range(n_star):
        g_n = chain.stages[n]
        cp_n = chain.coprods[n]
        fact_n = chain.endo.factor_slice(g_n)
        k = k1_action(fib, fact_n, fact_t, u, w)
        through = cp_n.case(fib.fiber_compose(target.ins, x_comp),
                            fib.fiber_compose(target.alg, k))
        if n == 0:
            u = through
        else:
            # factor through the coequalizer quotient q_{n+1}
            u = _through_quotient(fib, chain.quotients[n + 1], through)
    return u


def _initial_slice_morphism(fib: Fibration, seed: VertMap, target: VertMap,
                            w: TotalMor) -> TotalMor:
    """The unique slice-over-w morphism out of the initial slice object."""
    candidates = fib.total_mors_over(seed.dom, target.dom, fib.base_id(seed.over))
    out = [c for c in candidates
           if fib.fiber_compose(target.map, c) == fib.fiber_compose(w, seed.map)]
    if len(out) != 1:
        raise StructureError("seed is not initial in its slice")
    return out[0]


def _through_quotient(fib: Fibration, q: TotalMor, g: TotalMor) -> TotalMor:
    """Factor g through a quotient map q (g must coequalize what q does)."""
    if fib.kind == "codomain":
        table = [None] * q.dst.dom.size
        for z in range(q.src.dom.size):
            val = g.data(z)
            if table[q.data(z)] not in (None, val):
                raise StructureError("map does not factor through the quotient")
            table[q.data(z)] = val
        if any(v is None for v in table):
            raise StructureError("quotient not covered")
        return TotalMor(q.dst, g.dst, g.base, FinMap(q.dst.dom, g.dst.dom, tuple(table)))
    comps = []
    for c, qc in enumerate(q.data):
        gc = g.data[c]
        table = [None] * qc.cod.size
        for z in range(qc.dom.size):
            val = gc(z)
            if table[qc(z)] not in (None, val):
                raise StructureError("map does not factor through the quotient")
            table[qc(z)] = val
        if any(v is None for v in table):
            raise StructureError("quotient not covered")
        dstc = _component_set(fib, q.dst, c)
        tgt = gc.cod
        comps.append(FinMap(dstc, tgt, tuple(table)))
    return TotalMor(q.dst, g.dst, g.base, tuple(comps))


def _component_set(fib, obj, c):
    if fib.kind == "fam_set":
        return obj.fibers[c]
    if fib.kind == "fam_cat":
        return obj.on_obj[c]
    if fib.kind == "presheaf_codomain":
        return obj.source.on_obj[c]
    raise StructureError("unexpected instance kind")


@dataclass(frozen=True)
class FreeMonadResult:
    status: str                  # "ok" | "undetermined"
    chain: AlgChain
    free: TAlgebra | None        # free algebra on f
    unit: TotalMor | None        # insertion X -> carrier
    mult: TotalMor | None        # carrier of R(Rf) -> carrier of Rf
    mult_chain: AlgChain | None
    algebra_bijection_ok: bool | None


def step_endofunctor(fib: Fibration, m: VertMap, f: VertMap) -> SlicePointedEndo:
    return SlicePointedEndo(fib, m, f)


def initial_seed(fib: Fibration, f: VertMap) -> VertMap:
    z = fib.fiber_initial(f.over)
    to_anchor = fib.total_mors_over(z, f.cod, fib.base_id(f.over))
    return VertMap(f.over, z, f.cod, to_anchor[0])


def free_monad(fib: Fibration, m: VertMap, f: VertMap,
               stage_cap: int = DEFAULT_STAGE_CAP,
               size_cap: int = DEFAULT_SIZE_CAP,
               check_bijection: bool = True) -> FreeMonadResult:
    """Free R1-algebra on f via the bounded chain; on stabilization the
    induced monad's algebra structures are checked to biject with
    R1-algebra structures (the canonical comparison)."""
    endo = step_endofunctor(fib, m, f)
    chain = iterate_chain(endo, initial_seed(fib, f), stage_cap, size_cap)
    if chain.status != "stabilized":
        return FreeMonadResult("undetermined", chain, None, None, None, None, None)
    free = chain.free_algebra()
    unit = free.ins
    # multiplication: the induced morphism from the free algebra on the
    # carrier to the free algebra itself
    endo2 = step_endofunctor(fib, m, free.obj)
    chain2 = iterate_chain(endo2, initial_seed(fib, free.obj), stage_cap, size_cap)
    if chain2.status != "stabilized":
        return FreeMonadResult("undetermined", chain, free, unit, None, chain2, None)
    target = TAlgebra(free.obj, fib.fiber_id(free.obj.dom), free.alg)
    mult = induced_morphism(chain2, endo2, target,
                            fib.fiber_id(free.obj.dom), fib.fiber_id(f.cod))
    bij = None
    if check_bijection:
        bij = _check_monad_algebra_bijection(fib, m, f, endo, chain, free,
                                             chain2, mult)
    return FreeMonadResult("ok", chain, free, unit, mult, chain2, bij)


def _check_monad_algebra_bijection(fib, m, f, endo, chain, free, chain2, mult) -> bool:
    """Monad-algebra structures on f biject with R1-algebra structures via
    precomposition with the canonical pointed-endofunctor morphism."""
    fact = endo.factor_slice(f)
    # xi_f : K1 f -> carrier: K1 of the insertion square, then the free
    # algebra structure
    fact_free = endo.factor_slice(free.obj)
    k = k1_action(fib, fact, fact_free, free.ins, fib.fiber_id(f.cod))
    xi = fib.fiber_compose(free.alg, k)
    # monad algebras: slice maps a: carrier -> X with unit and
    # multiplication laws
    cands = fib.fiber_fillers(free.ins, f.map, fib.fiber_id(f.dom), free.obj.map)
    monad_algs = []
    for a in cands:
        # R(a): carrier of R(Rf) -> carrier of Rf, the algebra morphism
        # induced by the slice map a out of the free algebra on the carrier
        target = TAlgebra(free.obj, free.ins, free.alg)
        ra = induced_morphism(chain2, endo, target, a, fib.fiber_id(f.cod))
        if fib.fiber_compose(a, ra) == fib.fiber_compose(a, mult):
            monad_algs.append(a)
    r1_algs = fib.fiber_fillers(fact.L1, f.map, fib.fiber_id(f.dom), fact.R1)
    image = [fib.fiber_compose(a, xi) for a in monad_algs]
    return (len(monad_algs) == len(r1_algs)
            and all(x in r1_algs for x in image)
            and len(set(image)) == len(image))


class SwappedSlicePointedEndo(SlicePointedEndo):
    """The same endofunctor with the coproduct taken in the other order:
    a legitimately different canonical choice, used to cross-check that
    independently constructed free algebras are isomorphic."""

    def apply(self, g: VertMap):
        fib = self.fib
        fact = self.factor_slice(g)
        cp = fib.fiber_coproduct(fact.K1, self.f.dom)
        tmap = cp.case(fact.R1, self.f.map)
        tg = VertMap(self.f.over, cp.obj, self.anchor, tmap)
        point = fib.fiber_compose(cp.in0, fact.L1)
        swapped = FiberCoproduct(cp.obj, cp.in1, cp.in0,
                                 lambda u, v, cp=cp: cp.case(v, u))
        return tg, point, swapped, fact


def free_algebras_isomorphic(fib: Fibration, m: VertMap,
                             a: TAlgebra, b: TAlgebra) -> bool:
    """Search for an algebra isomorphism between two free algebras on the
    same map: a fiber iso commuting with the displays, insertions, and
    structure maps."""
    fact_a = factor(fib, m, a.obj)
    fact_b = factor(fib, m, b.obj)
    for phi in fib.fiber_mors(a.obj.dom, b.obj.dom):
        if not fib.fiber_mor_is_iso(phi):
            continue
        if fib.fiber_compose(b.obj.map, phi) != a.obj.map:
            continue
        if fib.fiber_compose(phi, a.ins) != b.ins:
            continue
        k = k1_action(fib, fact_a, fact_b, phi, fib.fiber_id(a.obj.cod))
        if fib.fiber_compose(phi, a.alg) == fib.fiber_compose(b.alg, k):
            return True
    return False


def free_monad_swapped(fib: Fibration, m: VertMap, f: VertMap,
                       stage_cap: int = DEFAULT_STAGE_CAP,
                       size_cap: int = DEFAULT_SIZE_CAP):
    """Free algebra computed with the swapped coproduct convention."""
    endo = SwappedSlicePointedEndo(fib, m, f)
    chain = iterate_chain(endo, initial_seed(fib, f), stage_cap, size_cap)
    if chain.status != "stabilized":
        return None
    return chain.free_algebra()


def verify_initiality(fib: Fibration, m: VertMap, f: VertMap,
                      fm: FreeMonadResult, corpus_targets) -> bool:
    """The stabilized algebra is initial: for every corpus algebra there is
    exactly one algebra morphism out of it (under f)."""
    endo = fm.chain.endo
    free = fm.free
    fact_free = endo.factor_slice(free.obj)
    for g in corpus_targets:
        tg, point, cp, fact_g = endo.apply(g)
        for a in endo.algebras_on(g):
            ins_g = fib.fiber_compose(a, cp.in0)
            alg_g = fib.fiber_compose(a, cp.in1)
            count = 0
            for u in fib.fiber_fillers(free.ins, g.map, ins_g, free.obj.map):
                # u: carrier -> g with u ∘ ins_free = ins_g and slice compat;
                # algebra-morphism condition on the R1 component
                k = k1_action(fib, fact_free, fact_g, u, fib.fiber_id(f.cod))
                if fib.fiber_compose(u, free.alg) == fib.fiber_compose(alg_g, k):
                    count += 1
            if count != 1:
                return False
    return True


@dataclass(frozen=True)
class AwfsData:
    status: str
    stabilized_stages: dict
    monad_laws_ok: bool
    comonad_laws_ok: bool
    distributive_laws_ok: bool
    lawfs_morphism_ok: bool
    details: dict


class AwfsAssembly:
    """The awfs algebraically free on step-one, with every verification the
    corpus supports: monad laws for R, comonad laws for L, the mixed
    distributive law, and the step-one comparison respecting
    comultiplication."""

    def __init__(self, fib: Fibration, m: VertMap,
                 stage_cap: int = DEFAULT_STAGE_CAP,
                 size_cap: int = DEFAULT_SIZE_CAP):
        self.fib = fib
        self.m = m
        self.stage_cap = stage_cap
        self.size_cap = size_cap
        self._fm: dict = {}

    def free(self, f: VertMap) -> FreeMonadResult:
        if f not in self._fm:
            self._fm[f] = free_monad(self.fib, self.m, f, self.stage_cap,
                                     self.size_cap, check_bijection=False)
        return self._fm[f]

    # functorial factorization of the awfs
    def left(self, f: VertMap) -> VertMap:
        fm = self.free(f)
        return VertMap(f.over, f.dom, fm.free.obj.dom, fm.free.ins)

    def right(self, f: VertMap) -> VertMap:
        return self.free(f).free.obj

    def carrier_action(self, f_src: VertMap, f_dst: VertMap,
                       u: TotalMor, v: TotalMor) -> TotalMor:
        """R (equivalently the K-part of L) on a square (u, v): the unique
        algebra morphism between the free algebras."""
        fm_s, fm_d = self.free(f_src), self.free(f_dst)
        target = TAlgebra(fm_d.free.obj, fm_d.free.ins, fm_d.free.alg)
        return induced_morphism(fm_s.chain, fm_d.chain.endo, target, u, v)

    def mult(self, f: VertMap) -> TotalMor:
        """mu_f: carrier R(Rf) -> carrier Rf."""
        fib = self.fib
        fm = self.free(f)
        fm2 = self.free(fm.free.obj)
        target = TAlgebra(fm.free.obj, fib.fiber_id(fm.free.obj.dom), fm.free.alg)
        return induced_morphism(fm2.chain, fm2.chain.endo, target,
                                fib.fiber_id(fm.free.obj.dom), fib.fiber_id(f.cod))

    def comult(self, f: VertMap) -> TotalMor:
        """delta_f: carrier Rf -> carrier R(Lf), the freeness-induced map
        into the composite of the two free algebras."""
        fib = self.fib
        fm = self.free(f)
        lf = self.left(f)
        fml = self.free(lf)
        comp_map = fib.fiber_compose(fm.free.obj.map, fml.free.obj.map)
        comp_obj = VertMap(f.over, fml.free.obj.dom, f.cod, comp_map)
        comp_alg = compose_algebras(fib, self.m, fml.free.obj, fml.free.alg,
                                    fm.free.obj, fm.free.alg)
        target = TAlgebra(comp_obj, fml.free.ins, comp_alg)
        return induced_morphism(fm.chain, self.free(f).chain.endo, target,
                                fib.fiber_id(f.dom), fib.fiber_id(f.cod))

    # --- law checks ------------------------------------------------------
    def check_monad_laws(self, f: VertMap) -> bool:
        fib = self.fib
        fm = self.free(f)
        rf = fm.free.obj
        fm2 = self.free(rf)
        mu = self.mult(f)
        # left unit: mu ∘ (unit at Rf)
        if fib.fiber_compose(mu, fm2.free.ins) != fib.fiber_id(rf.dom):
            return False
        # right unit: mu ∘ R(unit at f)
        r_unit = self.carrier_action(f, rf, fm.free.ins, fib.fiber_id(f.cod))
        if fib.fiber_compose(mu, r_unit) != fib.fiber_id(rf.dom):
            return False
        # associativity
        fm3 = self.free(fm2.free.obj)
        mu_r = self.mult(rf)
        r_mu = self.carrier_action(fm2.free.obj, rf, mu, fib.fiber_id(f.cod))
        lhs = fib.fiber_compose(mu, r_mu)
        rhs = fib.fiber_compose(mu, mu_r)
        return lhs == rhs

    def check_comonad_laws(self, f: VertMap) -> bool:
        fib = self.fib
        fm = self.free(f)
        lf = self.left(f)
        fml = self.free(lf)
        delta = self.comult(f)
        # counit at Lf: R(Lf)-map after delta
        if fib.fiber_compose(fml.free.obj.map, delta) != fib.fiber_id(fm.free.obj.dom):
            return False
        # L(counit at f): the carrier action along (id, Rf-map)
        l_eps = self.carrier_action(lf, f, fib.fiber_id(f.dom), fm.free.obj.map)
        if fib.fiber_compose(l_eps, delta) != fib.fiber_id(fm.free.obj.dom):
            return False
        # coassociativity
        llf = self.left(lf)
        delta_l = self.comult(lf)
        l_delta = self.carrier_action(lf, llf, fib.fiber_id(f.dom), delta)
        lhs = fib.fiber_compose(delta_l, delta)
        rhs = fib.fiber_compose(l_delta, delta)
        return lhs == rhs

    def check_distributive_law(self, f: VertMap) -> bool:
        """The mixed distributive-law axioms for the canonical LR => RL
        whose components are (delta_f, mu_f)."""
        fib = self.fib
        vert = VerticalArrowFibration(fib)
        fm = self.free(f)
        rf, lf = self.right(f), self.left(f)

        def lam(g: VertMap) -> TotalMor:
            """lambda_g: L(Rg) -> R(Lg) as a V(E) square."""
            lrg = self.left(self.right(g))
            rlg = self.right(self.left(g))
            return TotalMor(lrg, rlg, fib.base_id(g.over),
                            Square(self.comult(g), self.mult(g)))

        def L_sq(src: VertMap, dst: VertMap, u, v) -> TotalMor:
            k = self.carrier_action(src, dst, u, v)
            return TotalMor(self.left(src), self.left(dst), u.base, Square(u, k))

        def R_sq(src: VertMap, dst: VertMap, u, v) -> TotalMor:
            k = self.carrier_action(src, dst, u, v)
            return TotalMor(self.right(src), self.right(dst), u.base, Square(k, v))

        # counit compatibility: R(eps_f) ∘ lambda = eps_{Rf}
        eps_f_u, eps_f_v = fib.fiber_id(f.dom), fm.free.obj.map
        lhs = vert.fiber_compose(R_sq(lf, f, eps_f_u, eps_f_v), lam(f))
        eps_rf = TotalMor(self.left(rf), rf, fib.base_id(f.over),
                          Square(fib.fiber_id(rf.dom), self.free(rf).free.obj.map))
        if lhs != eps_rf:
            return False
        # unit compatibility: lambda ∘ L(unit_f) = unit_{Lf}
        unit_u, unit_v = fm.free.ins, fib.fiber_id(f.cod)
        lhs = vert.fiber_compose(lam(f), L_sq(f, rf, unit_u, unit_v))
        unit_lf = TotalMor(lf, self.right(lf), fib.base_id(f.over),
                           Square(self.free(lf).free.ins, fib.fiber_id(rf.dom)))
        if lhs != unit_lf:
            return False
        # comultiplication compatibility:
        # R(Sigma_f) ∘ lambda_f = lambda_{Lf} ∘ L(lambda_f) ∘ Sigma_{Rf}
        sigma_f_u, sigma_f_v = fib.fiber_id(f.dom), self.comult(f)
        lhs = vert.fiber_compose(R_sq(lf, self.left(lf), sigma_f_u, sigma_f_v),
                                 lam(f))
        sigma_rf = TotalMor(self.left(rf), self.left(self.left(rf)),
                            fib.base_id(f.over),
                            Square(fib.fiber_id(rf.dom), self.comult(rf)))
        lam_f = lam(f)
        l_lam = self._L_of_square(self.left(rf), self.right(lf),
                                  lam_f.data.on_dom, lam_f.data.on_cod)
        rhs = vert.fiber_compose(lam(lf), vert.fiber_compose(l_lam, sigma_rf))
        if lhs != rhs:
            return False
        # multiplication compatibility:
        # lambda_f ∘ L(mu_f) = mu_{Lf} ∘ R(lambda_f) ∘ lambda_{Rf}
        mu_sq_u, mu_sq_v = self.mult(f), fib.fiber_id(f.cod)
        lhs = vert.fiber_compose(lam(f), L_sq(self.right(rf), rf, mu_sq_u, mu_sq_v))
        r_lam = self._R_of_square(self.left(rf), self.right(lf),
                                  lam_f.data.on_dom, lam_f.data.on_cod)
        mu_lf = TotalMor(self.right(self.right(lf)), self.right(lf),
                         fib.base_id(f.over),
                         Square(self.mult(lf), fib.fiber_id(rf.dom)))
        rhs = vert.fiber_compose(mu_lf, vert.fiber_compose(r_lam, lam(rf)))
        return lhs == rhs

    def _L_of_square(self, src: VertMap, dst: VertMap, u, v) -> TotalMor:
        k = self.carrier_action(src, dst, u, v)
        return TotalMor(self.left(src), self.left(dst), u.base, Square(u, k))

    def _R_of_square(self, src: VertMap, dst: VertMap, u, v) -> TotalMor:
        k = self.carrier_action(src, dst, u, v)
        return TotalMor(self.right(src), self.right(dst), u.base, Square(k, v))

    def check_lawfs_morphism(self, f: VertMap) -> bool:
        """The comparison xi: step-one -> awfs respects comultiplication
        (the double-functor condition transported through the chain)."""
        fib = self.fib
        from .step_one import comonad as _comonad

        fm = self.free(f)
        fact = factor(fib, self.m, f)
        fact_free = factor(fib, self.m, fm.free.obj)
        k = k1_action(fib, fact, fact_free, fm.free.ins, fib.fiber_id(f.cod))
        xi_f = fib.fiber_compose(fm.free.alg, k)
        lf_awfs = self.left(f)
        cm = _comonad(fib, self.m)
        sigma1 = cm.comultiplication(f)
        l1f = fact.left
        # xi at Lf (the awfs left part), with the K1-comparison along xi_f
        fact_l1 = factor(fib, self.m, l1f)
        fact_lawfs = factor(fib, self.m, lf_awfs)
        k_cmp = k1_action(fib, fact_l1, fact_lawfs, fib.fiber_id(f.dom), xi_f)
        fml = self.free(lf_awfs)
        fact_freel = factor(fib, self.m, fml.free.obj)
        k2 = k1_action(fib, fact_lawfs, fact_freel, fml.free.ins,
                       fib.fiber_id(lf_awfs.cod))
        xi_lf = fib.fiber_compose(fml.free.alg, k2)
        lhs = fib.fiber_compose(self.comult(f), xi_f)
        rhs = fib.fiber_compose(xi_lf,
                                fib.fiber_compose(k_cmp, sigma1.data.on_cod))
        return lhs == rhs


def assemble_awfs(fib: Fibration, m: VertMap, corpus,
                  stage_cap: int = DEFAULT_STAGE_CAP,
                  size_cap: int = DEFAULT_SIZE_CAP) -> AwfsData:
    """Run the free-algebra engine over a corpus of vertical maps and check
    every law the assembled awfs must satisfy."""
    asm = AwfsAssembly(fib, m, stage_cap, size_cap)
    stages = {}
    details = {}
    for idx, f in enumerate(corpus):
        fm = asm.free(f)
        if fm.status != "ok":
            return AwfsData("undetermined", stages, False, False, False, False,
                            {"failed_at": idx})
        stages[idx] = fm.chain.stabilized_at
    monad_ok = all(asm.check_monad_laws(f) for f in corpus)
    comonad_ok = all(asm.check_comonad_laws(f) for f in corpus)
    dist_ok = all(asm.check_distributive_law(f) for f in corpus)
    lawfs_ok = all(asm.check_lawfs_morphism(f) for f in corpus)
    status = "ok" if (monad_ok and comonad_ok and dist_ok and lawfs_ok) else "failed"
    return AwfsData(status, stages, monad_ok, comonad_ok, dist_ok, lawfs_ok, details)


def compose_algebras(fib: Fibration, m: VertMap, f: VertMap, alg_f: TotalMor,
                     g: VertMap, alg_g: TotalMor) -> TotalMor:
    """An R1-algebra on g∘f from algebras on f and g: lift in two steps
    through the universal lifting problem (the natural composition)."""
    from .lifting import classify, transfer_solution, LiftFamily

    if f.cod != g.dom or f.over != g.over:
        raise StructureError("compose_algebras: maps are not composable")
    gf = VertMap(f.over, f.dom, g.cod, fib.fiber_compose(g.map, f.map))
    fact_gf = factor(fib, m, gf)
    fact_f = factor(fib, m, f)
    fact_g = factor(fib, m, g)
    sol_f = algebra_to_solution(fib, fact_f, alg_f)
    sol_g = algebra_to_solution(fib, fact_g, alg_g)
    prob = fact_gf.problem
    rfmap = fib.reindex_fmor(prob.tau, f.map)
    # step 1: lift the bottom against g
    prob_g = LiftFamily(m, g, prob.K, prob.sigma, prob.tau,
                        fib.fiber_compose(rfmap, prob.top), prob.bot)
    t_g = classify(fib, m, g, prob_g, ulp=fact_g.problem, verify_unique=False)
    j1 = transfer_solution(fib, fact_g.problem, sol_g, t_g)
    # step 2: lift against f
    prob_f = LiftFamily(m, f, prob.K, prob.sigma, prob.tau, prob.top, j1)
    t_f = classify(fib, m, f, prob_f, ulp=fact_f.problem, verify_unique=False)
    j2 = transfer_solution(fib, fact_f.problem, sol_f, t_f)
    return solution_to_algebra(fib, fact_gf, j2)
