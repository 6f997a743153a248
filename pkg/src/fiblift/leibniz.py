"""Pushout product and pullback cotensor for the cartesian monoidal
structure on the codomain instances, with the correspondence between
universal-lifting-problem solutions on both sides of the adjunction.

The external pushout product of f over I and g over J lands in the fiber
over I x J; the fiberwise versions (both maps over one base) drive the
generating families and the adjunction transposes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fibrations.base import Fibration, TotalMor, VertMap
from .fibrations.codomain import CodomainFibration
from .fibrations.presheaf import PresheafCodomainFibration, _pointwise_pullback
from .kernel.exponentials import slice_exponential
from .kernel.finset import FinMap, FinSet, StructureError, identity
from .kernel.fincat import Diagram, NatTransData
from .kernel.limits import product, pullback, verify_pushout
from .lifting import enumerate_solutions, universal_lifting_problem


# --- external tensor (codomain over FinSet) --------------------------------

def tensor_obj(fib, X, Y):
    """X over I times Y over J, displayed over I x J (codomain instance)."""
    if fib.kind != "codomain":
        raise StructureError("external tensor implemented for the codomain instance")
    base = product(X.cod, Y.cod)
    carrier = product(X.dom, Y.dom)
    table = tuple(base.pair_index(X(u), Y(w)) for (u, w) in carrier.pairs)
    return FinMap(carrier.apex, base.apex, table), carrier, base


def tensor_mor(fib, phi: TotalMor, psi: TotalMor):
    """Componentwise product of two fiber morphisms (codomain instance)."""
    sX, sc, sb = tensor_obj(fib, phi.src, psi.src)
    dX, dc, db = tensor_obj(fib, phi.dst, psi.dst)
    table = tuple(dc.pair_index(phi.data(u), psi.data(w)) for (u, w) in sc.pairs)
    return TotalMor(sX, dX, identity(sb.apex), FinMap(sX.dom, dX.dom, table))


@dataclass(frozen=True)
class PushoutProductResult:
    f: VertMap
    g: VertMap
    corner: object          # total object
    map: VertMap            # f ⊗̂ g : corner -> V ⊗ Y
    i_vx: TotalMor          # V⊗X -> corner
    i_uy: TotalMor          # U⊗Y -> corner
    certificate_ok: bool


def pushout_product(fib: Fibration, f: VertMap, g: VertMap) -> PushoutProductResult:
    """The corner map of f over I and g over J in the fiber over I x J."""
    mX = tensor_mor(fib, f.map, fib.fiber_id(g.dom))    # U⊗X -> V⊗X
    Ug = tensor_mor(fib, fib.fiber_id(f.dom), g.map)    # U⊗X -> U⊗Y
    po = fib.fiber_pushout(mX, Ug)
    mY = tensor_mor(fib, f.map, fib.fiber_id(g.cod))    # U⊗Y -> V⊗Y
    Vg = tensor_mor(fib, fib.fiber_id(f.cod), g.map)    # V⊗X -> V⊗Y
    corner_map = po.induce(Vg, mY)
    cert = verify_pushout(mX.data, Ug.data, po.obj.dom, po.i0.data, po.i1.data,
                          cocone_budget=2)
    result = VertMap(fib.obj_over(po.obj), po.obj, Vg.dst, corner_map)
    return PushoutProductResult(f, g, po.obj, result, po.i0, po.i1, cert.ok)


# --- fiberwise tensor, pushout product and cotensor -------------------------

def fiber_tensor(fib: Fibration, A, B):
    """The product of two objects in one fiber, with projections."""
    if fib.kind == "codomain":
        pb = pullback(A, B)
        disp = pb.p0.then(A)
        ident = identity(A.cod)
        return (disp,
                TotalMor(disp, A, ident, pb.p0),
                TotalMor(disp, B, ident, pb.p1),
                pb)
    if fib.kind == "presheaf_codomain":
        return _presheaf_fiber_tensor(fib, A, B)
    raise StructureError("fiber tensor implemented for codomain-style instances")


def _presheaf_fiber_tensor(fib, A, B):
    diagram, pairs, p0, p1 = _pointwise_pullback(A, B)
    disp = NatTransData(diagram, A.target, tuple(
        A.components[c].compose(p0.components[c])
        for c in range(fib.shape.objects.size)))
    ident = fib.base_id(A.target)
    return (disp,
            TotalMor(disp, A, ident, tuple(p0.components)),
            TotalMor(disp, B, ident, tuple(p1.components)),
            pairs)


def fiber_tensor_mor(fib: Fibration, phi: TotalMor, psi: TotalMor):
    """phi x psi between fiber tensors."""
    sT, sp0, sp1, sdec = fiber_tensor(fib, phi.src, psi.src)
    dT, dp0, dp1, ddec = fiber_tensor(fib, phi.dst, psi.dst)
    if fib.kind == "codomain":
        table = tuple(ddec.pair_index(phi.data(u), psi.data(w)) for (u, w) in sdec.pairs)
        return TotalMor(sT, dT, identity(sT.cod), FinMap(sT.dom, dT.dom, table))
    comps = tuple(
        FinMap(sT.source.on_obj[c], dT.source.on_obj[c],
               tuple(ddec[c].index((phi.data[c](u), psi.data[c](w)))
                     for (u, w) in sdec[c]))
        for c in range(fib.shape.objects.size))
    return TotalMor(sT, dT, fib.base_id(sT.target), comps)


def fiber_pushout_product(fib: Fibration, f: VertMap, g: VertMap):
    """The corner map of two vertical maps over one base object."""
    if f.over != g.over:
        raise StructureError("fiberwise pushout product needs a shared base object")
    mX = fiber_tensor_mor(fib, f.map, fib.fiber_id(g.dom))
    Ug = fiber_tensor_mor(fib, fib.fiber_id(f.dom), g.map)
    po = fib.fiber_pushout(mX, Ug)
    mY = fiber_tensor_mor(fib, f.map, fib.fiber_id(g.cod))
    Vg = fiber_tensor_mor(fib, fib.fiber_id(f.cod), g.map)
    corner_map = po.induce(Vg, mY)
    result = VertMap(f.over, po.obj, Vg.dst, corner_map)
    return PushoutProductResult(f, g, po.obj, result, po.i0, po.i1, True)


@dataclass(frozen=True)
class CotensorResult:
    """The fiberwise cotensor {A, Z}: hom object restricted to the diagonal."""

    obj: object          # total object over J
    A: object
    Z: object
    keys: tuple          # codomain: per element (j, mapping table over fibers)


def fiber_cotensor(fib: Fibration, A, Z) -> CotensorResult:
    if fib.kind != "codomain":
        raise StructureError("fiber cotensor implemented for the codomain instance")
    J = A.cod
    exp = slice_exponential(J, A, Z)
    return CotensorResult(exp.display, A, Z, exp.keys)


def cotensor_postcompose(fib, cot_src: CotensorResult, cot_dst: CotensorResult,
                         g: TotalMor) -> TotalMor:
    """{A, g}: {A, Z} -> {A, Z'} for a fiber morphism g: Z -> Z'."""
    index = {k: n for n, k in enumerate(cot_dst.keys)}
    table = tuple(index[(j, tuple(g.data(v) for v in tab))]
                  for (j, tab) in cot_src.keys)
    return TotalMor(cot_src.obj, cot_dst.obj, identity(cot_src.obj.cod),
                    FinMap(cot_src.obj.dom, cot_dst.obj.dom, table))


def cotensor_precompose(fib, cot_src: CotensorResult, cot_dst: CotensorResult,
                        h: TotalMor) -> TotalMor:
    """{h, Z}: {A, Z} -> {A', Z} for a fiber morphism h: A' -> A."""
    index = {k: n for n, k in enumerate(cot_dst.keys)}
    table = []
    for (j, tab) in cot_src.keys:
        afib = cot_src.A.fiber(j)
        apfib = cot_dst.A.fiber(j)
        lut = dict(zip(afib, tab))
        table.append(index[(j, tuple(lut[h.data(a)] for a in apfib))])
    return TotalMor(cot_src.obj, cot_dst.obj, identity(cot_src.obj.cod),
                    FinMap(cot_src.obj.dom, cot_dst.obj.dom, tuple(table)))


@dataclass(frozen=True)
class PullbackCotensorResult:
    f: VertMap
    g: VertMap
    corner: object
    map: VertMap          # {f, g}^ : {V, X} -> corner
    certificate_ok: bool
    parts: tuple


def reindex_to_base(fib: Fibration, m0: VertMap, J) -> VertMap:
    """Reindex a vertical map over the terminal base object to the fiber over J."""
    bang = fib.base_to_terminal(J)
    return fib.reindex_vert(bang, m0)


def pullback_cotensor(fib: Fibration, f: VertMap, g: VertMap) -> PullbackCotensorResult:
    """The corner map {V,X} -> {U,X} x_{U,Y} {V,Y} in the fiber over the
    shared base.  A left argument over the terminal base is reindexed
    first."""
    if f.over != g.over:
        if f.over == fib.base_terminal():
            f = reindex_to_base(fib, f, g.over)
        else:
            raise StructureError("pullback cotensor needs a shared base object "
                                 "(or a left argument over the terminal)")
    U, V = f.dom, f.cod
    X, Y = g.dom, g.cod
    c_vx = fiber_cotensor(fib, V, X)
    c_ux = fiber_cotensor(fib, U, X)
    c_uy = fiber_cotensor(fib, U, Y)
    c_vy = fiber_cotensor(fib, V, Y)
    a = cotensor_postcompose(fib, c_ux, c_uy, g.map)     # {U,X} -> {U,Y}
    b = cotensor_precompose(fib, c_vy, c_uy, f.map)      # {V,Y} -> {U,Y}
    obj, p0, p1, pair = fib.fiber_pullback(a, b)
    to_ux = cotensor_precompose(fib, c_vx, c_ux, f.map)
    to_vy = cotensor_postcompose(fib, c_vx, c_vy, g.map)
    corner_map = pair(to_ux, to_vy)
    from .kernel.limits import verify_pullback
    cert = verify_pullback(a.data, b.data, obj.dom, p0.data, p1.data, cone_budget=2)
    result = VertMap(f.over, c_vx.obj, obj, corner_map)
    return PullbackCotensorResult(
        f, g, obj, result, cert.ok, (c_vx, c_ux, c_uy, c_vy, p0, p1))


def hom_count_adjunction(fib: Fibration, a: VertMap, f: VertMap, g: VertMap) -> bool:
    """|Hom(a ⊗̂ f, g)| == |Hom(a, {f,g}^)| in the arrow category of a fiber."""
    lhs_map = fiber_pushout_product(fib, a, f).map
    rhs_map = pullback_cotensor(fib, f, g).map
    from .fibrations.vertical import VerticalArrowFibration
    vfib = VerticalArrowFibration(fib)
    lhs = len(vfib.fiber_mors(lhs_map, g))
    rhs = len(vfib.fiber_mors(a, rhs_map))
    return lhs == rhs


def generating_family(fib: Fibration, delta: VertMap, cls: VertMap) -> PushoutProductResult:
    """The endpoint-against-classifier family over the classifier's base:
    delta (over the terminal) is reindexed and pushout-multiplied with the
    classifier family fiberwise, giving interval +_1 I -> interval x I."""
    if delta.over != fib.base_terminal():
        raise StructureError("the endpoint family must live over the terminal base")
    rd = reindex_to_base(fib, delta, cls.over)
    return fiber_pushout_product(fib, rd, cls)


def check_pushout_product_reindex(fib: Fibration, f: VertMap, g: VertMap,
                                  s, t) -> bool:
    """(s x t)*(f ⊗̂ g) is canonically isomorphic to (s*f) ⊗̂ (t*g): the
    mediating comparison built from the tensor comparisons is an iso
    commuting with the corner maps (codomain instance)."""
    pp = pushout_product(fib, f, g)
    rf = fib.reindex_vert(s, f)
    rg = fib.reindex_vert(t, g)
    ppr = pushout_product(fib, rf, rg)
    # the product base map s x t and the pairing decode
    bsrc = product(s.dom, t.dom)
    bdst = product(s.cod, t.cod)
    st = FinMap(bsrc.apex, bdst.apex,
                tuple(bdst.pair_index(s(k), t(l)) for (k, l) in bsrc.pairs))

    def tensor_cmp(A, B):
        """s*A ⊗ t*B -> (s x t)*(A ⊗ B), elementwise."""
        rA = fib.reindex(s, A)
        rB = fib.reindex(t, B)
        ten, tc, tb = tensor_obj(fib, rA, rB)
        tgt_ten, tgt_c, tgt_b = tensor_obj(fib, A, B)
        moved = pullback(st, tgt_ten)
        ra_pairs = fib.reindex_pairs(s, A)
        rb_pairs = fib.reindex_pairs(t, B)
        table = []
        for (p, q) in tc.pairs:
            k, a = ra_pairs[p]
            l, b = rb_pairs[q]
            table.append(moved.pair_index(bsrc.pair_index(k, l),
                                          tgt_c.pair_index(a, b)))
        return ten, FinMap(ten.dom, moved.apex, table), moved

    # legs of the comparison cocone through the reindexed injections
    vx_ten, vx_cmp, vx_moved = tensor_cmp(f.cod, g.dom)
    uy_ten, uy_cmp, uy_moved = tensor_cmp(f.dom, g.cod)
    vy_ten, vy_cmp, vy_moved = tensor_cmp(f.cod, g.cod)
    r_i0 = fib.reindex_fmor(st, pp.i_vx)
    r_i1 = fib.reindex_fmor(st, pp.i_uy)
    r_corner = fib.reindex_fmor(st, TotalMor(pp.corner, pp.map.cod,
                                             identity(fib.obj_over(pp.corner)),
                                             pp.map.map.data))
    leg_vx = r_i0.data.compose(vx_cmp)
    leg_uy = r_i1.data.compose(uy_cmp)
    # mediate out of the reindexed-corner pushout
    comparison = None
    try:
        po_obj = ppr.corner
        med = None
        table = [None] * po_obj.dom.size
        for idx in range(ppr.i_vx.src.dom.size):
            cls_ = ppr.i_vx.data(idx)
            val = leg_vx(idx)
            if table[cls_] is not None and table[cls_] != val:
                return False
            table[cls_] = val
        for idx in range(ppr.i_uy.src.dom.size):
            cls_ = ppr.i_uy.data(idx)
            val = leg_uy(idx)
            if table[cls_] is not None and table[cls_] != val:
                return False
            table[cls_] = val
        if any(v is None for v in table):
            return False
        rc = fib.reindex(st, pp.corner)
        cmp_map = FinMap(po_obj.dom, rc.dom, tuple(table))
    except StructureError:
        return False
    if not cmp_map.is_iso():
        return False
    # corner maps must match across the comparison
    lhs = r_corner.data.compose(cmp_map)
    rhs = vy_cmp.compose(ppr.map.map.data)
    return lhs.table == rhs.table


@dataclass(frozen=True)
class AdjunctionReport:
    left_count: int
    right_count: int
    bijection_ok: bool


class _TransposeCtx:
    """Element decodes shared by the uncurrying/currying formulas.

    All decodes are for the codomain instance: the reindexed generator
    carriers are pullback-pair sets, the corner is a pushout of tensor
    carriers, and the cotensors are slice exponentials.
    """

    def __init__(self, fib, m0, m, f, left_gen, cot):
        self.fib = fib
        self.m0, self.m, self.f = m0, m, f
        self.left_gen, self.cot = left_gen, cot
        rm0 = reindex_to_base(fib, m0, m.over)
        self.rm0 = rm0
        # tensor carriers with pair decodes
        self.bu = fiber_tensor(fib, rm0.cod, m.dom)[3]
        self.av = fiber_tensor(fib, rm0.dom, m.cod)[3]
        self.bv = fiber_tensor(fib, rm0.cod, m.cod)[3]
        # reindexed-m0 carriers decode to (base point, original element)
        self.a_pairs = fib.reindex_pairs(fib.base_to_terminal(m.over), m0.dom)
        self.b_pairs = fib.reindex_pairs(fib.base_to_terminal(m.over), m0.cod)
        # cotensor components
        self.c_vx, self.c_ux, self.c_uy, self.c_vy, self.p0, self.p1 = cot.parts
        self.aj_pairs = fib.reindex_pairs(fib.base_to_terminal(f.over), m0.dom)
        self.bj_pairs = fib.reindex_pairs(fib.base_to_terminal(f.over), m0.cod)
        # corner pullback decode: R-corner elements are ({A,X}, {B,Y}) pairs
        from .kernel.limits import pullback as _pb
        a_map = cotensor_postcompose(fib, self.c_ux, self.c_uy, f.map)
        b_map = cotensor_precompose(fib, self.c_vy, self.c_uy,
                                    reindex_to_base(fib, m0, f.over).map)
        self.rcorner_pairs = _pb(a_map.data, b_map.data).pairs

    def corner_eval_top(self, q, top_r_lookup, bot_r_lookup):
        """Evaluate the uncurried top edge at a corner element q: read the
        value off any pushout preimage and assert all preimages agree."""
        po_i0 = self.left_gen.i_vx.data   # (B'⊗U) -> corner
        po_i1 = self.left_gen.i_uy.data   # (A'⊗V) -> corner
        vals = set()
        for src_idx, cls in enumerate(po_i0.table):
            if cls != q:
                continue
            bprime, u = self.bu.pairs[src_idx]
            b0 = self.b_pairs[bprime][1]
            e = top_r_lookup(u)
            vals.add(self._cot_key_eval_b(self.c_vx, e, b0))
        for src_idx, cls in enumerate(po_i1.table):
            if cls != q:
                continue
            aprime, v = self.av.pairs[src_idx]
            a0 = self.a_pairs[aprime][1]
            r = bot_r_lookup(v)
            e_ax = self.rcorner_pairs[r][0]
            vals.add(self._cot_key_eval(self.c_ux, e_ax, a0))
        if len(vals) != 1:
            raise AssertionError("inconsistent corner evaluation: engine bug")
        return vals.pop()

    def _cot_key_eval(self, cot, e, a0):
        jj, tab = cot.keys[e]
        fibpos = [self.aj_pairs[p][1] for p in cot.A.fiber(jj)]
        return tab[fibpos.index(a0)]

    def _cot_key_eval_b(self, cot, e, b0):
        jj, tab = cot.keys[e]
        fibpos = [self.bj_pairs[p][1] for p in cot.A.fiber(jj)]
        return tab[fibpos.index(b0)]


def ulp_adjunction_check(fib: Fibration, m0: VertMap, m: VertMap,
                         f: VertMap) -> AdjunctionReport:
    """Solutions of ULP(I*(m0) ⊗̂ m, f) correspond to solutions of
    ULP(m, {m0, f}^): counts compared and, for the codomain instance, the
    explicit transpose verified to be a mutually-inverse bijection."""
    if m0.over != fib.base_terminal():
        raise StructureError("m0 must live over the terminal base object")
    rm0 = reindex_to_base(fib, m0, m.over)
    left_gen = fiber_pushout_product(fib, rm0, m)
    cot = pullback_cotensor(fib, m0, f)
    lulp = universal_lifting_problem(fib, left_gen.map, f)
    rulp = universal_lifting_problem(fib, m, cot.map)
    lsols = enumerate_solutions(fib, left_gen.map, f, lulp)
    rsols = enumerate_solutions(fib, m, cot.map, rulp)
    ok = len(lsols.fillers) == len(rsols.fillers)
    if ok and fib.kind == "codomain" and rulp.K.size > 0:
        ok = _verify_transpose_bijection(fib, m0, m, f, left_gen, cot,
                                         lulp, rulp, lsols, rsols)
    return AdjunctionReport(len(lsols.fillers), len(rsols.fillers), ok)


def _uncurry_right_ulp(fib, ctx: _TransposeCtx, rulp):
    """The family of lifting problems of the corner against f over the
    right-hand hom object, obtained by uncurrying the right universal
    problem elementwise."""
    from .lifting import LiftFamily

    m, f = ctx.m, ctx.f
    corner = ctx.left_gen.map
    sigma_i = rulp.sigma
    tau_j = rulp.tau
    KR = rulp.K
    rcor_dom = fib.reindex(sigma_i, corner.dom)
    rcor_cod = fib.reindex(sigma_i, corner.cod)
    rx = fib.reindex(tau_j, f.dom)
    ry = fib.reindex(tau_j, f.cod)
    src_pairs = fib.reindex_pairs(sigma_i, corner.dom)
    srcb_pairs = fib.reindex_pairs(sigma_i, corner.cod)
    dst_pairs = fib.reindex_pairs(tau_j, f.dom)
    dstb_pairs = fib.reindex_pairs(tau_j, f.cod)
    ru_pairs = fib.reindex_pairs(sigma_i, m.dom)
    rv_pairs = fib.reindex_pairs(sigma_i, m.cod)
    rcd_pairs = fib.reindex_pairs(tau_j, ctx.cot.map.dom)
    rcc_pairs = fib.reindex_pairs(tau_j, ctx.cot.map.cod)

    def top_lookup(k):
        def lut(u):
            sidx = ru_pairs.index((k, u))
            return rcd_pairs[rulp.top.data(sidx)][1]
        return lut

    def bot_lookup(k):
        def lut(v):
            sidx = rv_pairs.index((k, v))
            return rcc_pairs[rulp.bot.data(sidx)][1]
        return lut

    top_tab = []
    for (k, q) in src_pairs:
        x = ctx.corner_eval_top(q, top_lookup(k), bot_lookup(k))
        top_tab.append(dst_pairs.index((k, x)))
    bot_tab = []
    for (k, bv_el) in srcb_pairs:
        bprime, v = ctx.bv.pairs[bv_el]
        b0 = ctx.b_pairs[bprime][1]
        r = bot_lookup(k)(v)
        e_by = ctx.rcorner_pairs[r][1]
        y = ctx._cot_key_eval_b(ctx.c_vy, e_by, b0)
        bot_tab.append(dstb_pairs.index((k, y)))
    top = TotalMor(rcor_dom, rx, fib.base_id(KR),
                   FinMap(rcor_dom.dom, rx.dom, tuple(top_tab)))
    bot = TotalMor(rcor_cod, ry, fib.base_id(KR),
                   FinMap(rcor_cod.dom, ry.dom, tuple(bot_tab)))
    fam = LiftFamily(corner, f, KR, sigma_i, tau_j, top, bot)
    fam.validate(fib)
    return fam


def _verify_transpose_bijection(fib, m0, m, f, left_gen, cot, lulp, rulp,
                                lsols, rsols) -> bool:
    """Each left solution transfers along the uncurried classification and
    curries to a right solution; the assignment must be a bijection."""
    from .lifting import classify, transfer_solution

    ctx = _TransposeCtx(fib, m0, m, f, left_gen, cot)
    uncurried = _uncurry_right_ulp(fib, ctx, rulp)
    phi = classify(fib, left_gen.map, f, uncurried, ulp=lulp, verify_unique=False)
    rv_pairs = fib.reindex_pairs(rulp.sigma, m.cod)
    rcd_pairs = fib.reindex_pairs(rulp.tau, cot.map.dom)
    rbv_pairs = fib.reindex_pairs(rulp.sigma, left_gen.map.cod)
    rX = fib.reindex(rulp.sigma, m.cod)
    rC = fib.reindex(rulp.tau, cot.map.dom)
    transposed = []
    for j_l in lsols.fillers:
        moved = transfer_solution(fib, lulp, j_l, phi)
        rxd_pairs = fib.reindex_pairs(rulp.tau, f.dom)
        table = []
        ok = True
        for (k, v) in rv_pairs:
            jj = rulp.tau(k)
            b0fib = [ctx.bj_pairs[p][1] for p in ctx.c_vx.A.fiber(jj)]
            values = []
            for b0 in b0fib:
                bprime = ctx.b_pairs.index((rulp.sigma(k), b0))
                bv_el = ctx.bv.pairs.index((bprime, v))
                sidx = rbv_pairs.index((k, bv_el))
                values.append(rxd_pairs[moved.data(sidx)][1])
            key = (jj, tuple(values))
            if key not in ctx.c_vx.keys:
                ok = False
                break
            e = ctx.c_vx.keys.index(key)
            table.append(rcd_pairs.index((k, e)))
        if not ok:
            return False
        cand = TotalMor(rX, rC, fib.base_id(rulp.K),
                        FinMap(rX.dom, rC.dom, tuple(table)))
        if cand not in rsols.fillers:
            return False
        transposed.append(cand)
    return len(set(transposed)) == len(rsols.fillers)
