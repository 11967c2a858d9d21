"""Machine verification of the duality statements on fixtures.

Each verification computes both sides through independent pipelines
and compares invariants degree by degree; nothing is asserted in
advance.  Over a field the statement is Serre duality for the stable
category; over the integers it is local duality at a prime, compared
through finite shadows (Matlis duals and p-primary parts).
"""

from .approximation import gprojective_approximation, serre_operator
from .gorenstein import conakayama, gorenstein_check
from .localization import (
    PrimeSite,
    local_cohomology_graded,
    matlis_dual_finite,
    prime_sites,
    singular_locus,
)
from .matrix import Matrix, solve_matrix
from .modules import ModuleError, ModuleMap, simple_modules
from .rings import ZZ
from .rmodules import PresentedRModule
from .serialize import SCHEMA_PREFIX, resolve_module, trivial_module
from .tate import (
    NotGProjectiveError,
    is_gprojective,
    stable_hom_space,
    stable_syzygy,
    tate_ext,
)


class DualityReport:
    """Per-degree comparison table plus pairing probes.

    The verdict is "pass" only when every degree matched and every
    probe passed; degrees flagged not-comparable push the verdict to
    "inconclusive", never to a silent pass.
    """

    def __init__(self, algebra_name, module_names, site, shift, table,
                 probes=(), notes=()):
        self.algebra_name = algebra_name
        self.module_names = list(module_names)
        self.site = site
        self.shift = shift
        self.table = list(table)
        self.probes = list(probes)
        self.notes = list(notes)

    @property
    def verdict(self):
        if any(row["match"] is False for row in self.table):
            return "fail"
        if any(not p.get("pass", True) for p in self.probes):
            return "fail"
        if any(row["match"] is None for row in self.table):
            return "inconclusive"
        return "pass"

    def to_json(self):
        return {
            "schema": "%s/duality-report/1" % SCHEMA_PREFIX,
            "algebra": self.algebra_name,
            "modules": self.module_names,
            "site": self.site.to_json() if self.site else None,
            "shift": self.shift,
            "table": self.table,
            "probes": self.probes,
            "notes": self.notes,
            "verdict": self.verdict,
        }

    def __repr__(self):
        return "DualityReport(%s, %s, shift=%d, %s)" % (
            self.algebra_name, "/".join(self.module_names), self.shift,
            self.verdict)


def _gprojective_input(m, depth, seed, notes):
    ml = m.as_left()
    v = is_gprojective(ml, depth=depth, seed=seed)
    if v.status == "Yes":
        return ml
    tri = gprojective_approximation(ml, depth=depth, seed=seed)
    notes.append(
        "%s is not Gorenstein projective; its approximation's "
        "G-projective part stands in" % ml.name)
    return tri.gprojective_part


def _require_gorenstein(algebra, depth, what):
    gv = gorenstein_check(algebra, depth=depth)
    if gv.status != "Gorenstein":
        raise ModuleError(
            "%s needs a Gorenstein algebra; gorenstein_check said %s"
            % (what, gv.status))
    return gv


def verify_serre_duality_field(algebra, m, n, window=(-3, 3), depth=8,
                               seed=0, shift_form="serre"):
    """dim Ext-hat^i(M, N) against dim Ext-hat^(-1-i)(N, S M).

    The field case: the site has dimension 0, so the shift d(p) is -1.
    ``shift_form`` selects how the right side is computed: "serre"
    evaluates against S M directly, "suspension" uses the unshifted
    G-projective part of conakayama(M) and moves the degree instead;
    the two tables must agree, which the property tests exercise.
    """
    if not algebra.base.is_field:
        raise ModuleError("verify_serre_duality_field needs a field base")
    _require_gorenstein(algebra, depth, "Serre duality")
    notes = []
    ml = _gprojective_input(m, depth, seed, notes)
    nl = _gprojective_input(n, depth, seed, notes)
    lo, hi = window
    d_p = -1
    g_lhs = tate_ext(ml, nl, window=(lo, hi), depth=depth)
    if shift_form == "serre":
        sm = serre_operator(ml, 0, depth=depth, seed=seed)
        g_rhs = tate_ext(nl, sm, window=(d_p - hi, d_p - lo), depth=depth)
        rhs_deg = lambda i: d_p - i
    elif shift_form == "suspension":
        tm = gprojective_approximation(
            conakayama(ml), depth=depth, seed=seed).gprojective_part
        g_rhs = tate_ext(nl, tm, window=(-2 - hi, -2 - lo), depth=depth)
        rhs_deg = lambda i: -2 - i
    else:
        raise ValueError("shift_form must be 'serre' or 'suspension'")
    for g in (g_lhs, g_rhs):
        notes.extend(getattr(g, "notes", ()))
    table = []
    for i in range(lo, hi + 1):
        li = g_lhs[i]
        ri = g_rhs[rhs_deg(i)]
        table.append({
            "degree": i,
            "lhs": repr(li),
            "rhs": repr(ri),
            "match": li.free_rank == ri.free_rank,
        })
    site = prime_sites(algebra)[0]
    return DualityReport(algebra.name, [ml.name, nl.name], site, d_p,
                         table, notes=notes)


def verify_local_duality_integer(algebra, m, n, p, window=(-2, 2), depth=8,
                                 seed=0):
    """Matlis dual of Ext-hat^i(M, N) against the p-part of
    Ext-hat^(-i)(N, S M), the integer-site case with shift d(p) = 0.

    Degrees where either side is infinite are flagged "not comparable
    at this shadow level" rather than compared.
    """
    if algebra.base is not ZZ:
        raise ModuleError(
            "verify_local_duality_integer needs the integer base")
    _require_gorenstein(algebra, depth, "local duality")
    notes = []
    known = [s.p for s in prime_sites(algebra)]
    if p not in known:
        notes.append(
            "prime %d is not among the computed sites %r; the comparison "
            "is expected to be vacuous" % (p, known))
    ml = _gprojective_input(m, depth, seed, notes)
    nl = _gprojective_input(n, depth, seed, notes)
    lo, hi = window
    d_p = 0
    sm = serre_operator(ml, 1, depth=depth, seed=seed)
    g_lhs = tate_ext(ml, nl, window=(lo, hi), depth=depth)
    g_rhs = tate_ext(nl, sm, window=(d_p - hi, d_p - lo), depth=depth)
    for g in (g_lhs, g_rhs):
        notes.extend(getattr(g, "notes", ()))
    rhs_pp = local_cohomology_graded(g_rhs, p)
    notes.extend(rhs_pp.notes)
    table = []
    for i in range(lo, hi + 1):
        li = g_lhs[i]
        ri_raw = g_rhs[d_p - i]
        if not li.is_finite() or not ri_raw.is_finite():
            table.append({
                "degree": i,
                "lhs": repr(li),
                "rhs": repr(ri_raw),
                "match": None,
                "note": "not comparable at this shadow level",
            })
            continue
        lhs = matlis_dual_finite(li, p)
        rhs = rhs_pp[d_p - i]
        table.append({
            "degree": i,
            "lhs": repr(lhs),
            "rhs": repr(rhs),
            "match": lhs == rhs,
        })
    site = PrimeSite(ZZ, p, "requested site")
    return DualityReport(algebra.name, [ml.name, nl.name], site, d_p,
                         table, notes=notes)


# ---------------------------------------------------------------------
# the trace pairing


def _stably_nonzero(rel, coords, base):
    col = Matrix.from_cols(base, [coords], len(coords))
    return solve_matrix(rel, col) is None


def _stable_dim(base, hs, rel):
    return PresentedRModule(base, len(hs.gens), rel).normal_form.free_rank


def trace_pairing_probe(algebra, m, n, window=(0, 0), depth=8, seed=0):
    """Nondegeneracy of composition stable_hom(N, SM) x stable_hom(M, N)
    -> stable_hom(M, SM), probed at every syzygy shift in the window.

    Probing the pairing at the shift i covers the degree-i part of the
    duality, because stable maps out of the i-th syzygy are the degree-i
    Tate classes.
    """
    if not algebra.base.is_field:
        raise ModuleError("trace_pairing_probe needs a field base")
    b = algebra.base
    for x in (m, n):
        v = is_gprojective(x.as_left(), depth=depth, seed=seed)
        if v.status != "Yes":
            raise NotGProjectiveError(
                "the trace pairing is probed on Gorenstein projective "
                "modules; %s got %r" % (x.as_left().name, v), v)
    ml = m.as_left()
    nl = n.as_left()
    lo, hi = window
    probes = []
    for i in range(lo, hi + 1):
        mi = stable_syzygy(ml, i, depth=depth)
        smi = serre_operator(mi, 0, depth=depth, seed=seed)
        hs_w, rel_w = stable_hom_space(mi, nl)
        hs_v, rel_v = stable_hom_space(nl, smi)
        hs_u, rel_u = stable_hom_space(mi, smi)
        right_ok = True
        left_ok = True
        witness = None

        def composes_nonzero(g, f):
            comp = ModuleMap(mi, smi, g.matrix.mul(f.matrix))
            return _stably_nonzero(rel_u, hs_u.coords(comp), b)

        for j, f in enumerate(hs_w.gens):
            e_j = [b.one if t == j else b.zero for t in range(len(hs_w.gens))]
            if not _stably_nonzero(rel_w, e_j, b):
                continue
            if not any(composes_nonzero(g, f) for g in hs_v.gens):
                right_ok = False
                witness = "no partner for map %d of stable_hom(M, N)" % j
                break
        for j, g in enumerate(hs_v.gens):
            e_j = [b.one if t == j else b.zero for t in range(len(hs_v.gens))]
            if not _stably_nonzero(rel_v, e_j, b):
                continue
            if not any(composes_nonzero(g, f) for f in hs_w.gens):
                left_ok = False
                witness = "no partner for map %d of stable_hom(N, SM)" % j
                break
        probe = {
            "shift": i,
            "dims": {
                "stable_hom(M, N)": _stable_dim(b, hs_w, rel_w),
                "stable_hom(N, SM)": _stable_dim(b, hs_v, rel_v),
                "stable_hom(M, SM)": _stable_dim(b, hs_u, rel_u),
            },
            "right_kernel_zero": right_ok,
            "left_kernel_zero": left_ok,
            "pass": right_ok and left_ok,
        }
        if witness:
            probe["witness"] = witness
        probes.append(probe)
    return {
        "schema": "%s/trace-pairing/1" % SCHEMA_PREFIX,
        "algebra": algebra.name,
        "modules": [ml.name, nl.name],
        "range": [lo, hi],
        "probes": probes,
        "pass": all(p["pass"] for p in probes),
    }


# ---------------------------------------------------------------------
# the aggregated run report


def _default_module(algebra):
    if algebra.base.is_field:
        return simple_modules(algebra)[0][1]
    return trivial_module(algebra)


def _config_modules(algebra, config):
    mm = config.get("modules") or {}
    m = resolve_module(mm["M"], algebra) if "M" in mm \
        else _default_module(algebra)
    n = resolve_module(mm["N"], algebra) if "N" in mm \
        else _default_module(algebra)
    return m, n


_OUTCOME_ORDER = {"ok": 0, "skipped": 0, "inconclusive": 1, "fail": 2}


def report(algebra, config=None):
    """Aggregated verification run, deterministic given seeds.

    ``config`` keys: "checks" (list drawn from gorenstein,
    singular_locus, serre, local, pairing), "depth", "seed", "range",
    "prime", and "modules" ({"M": spec, "N": spec} as accepted by
    resolve_module).  Sections that do not apply are skipped with a
    reason, never silently dropped.
    """
    config = dict(config or {})
    depth = int(config.get("depth", 8))
    seed = int(config.get("seed", 0))
    window = tuple(config.get("range", (-2, 2)))
    checks = list(config.get("checks", ["gorenstein"]))
    sections = []

    def add(name, outcome, payload):
        sections.append({"name": name, "outcome": outcome, "payload": payload})

    gv = None
    if "gorenstein" in checks or any(
            c in checks for c in ("serre", "local", "pairing")):
        gv = gorenstein_check(algebra, depth=max(depth, 12))
    if "gorenstein" in checks:
        outcome = "inconclusive" if gv.status == "Inconclusive" else "ok"
        add("gorenstein", outcome, gv.to_json())
    if "singular_locus" in checks:
        sl = singular_locus(algebra, depth=max(depth, 12))
        outcome = "ok"
        if any(s.status == "probably singular" for s in sl):
            outcome = "inconclusive"
        add("singular_locus", outcome,
            {"sites": [s.to_json() for s in sl]})

    duality_checks = [c for c in ("serre", "local", "pairing")
                      if c in checks]
    if duality_checks and gv.status != "Gorenstein":
        for c in duality_checks:
            add(c, "skipped",
                {"reason": "gorenstein_check said %s" % gv.status})
        duality_checks = []
    if duality_checks:
        try:
            m, n = _config_modules(algebra, config)
        except (ModuleError, KeyError, OSError, ValueError) as exc:
            for c in duality_checks:
                add(c, "skipped", {"reason": "no usable modules: %s" % exc})
            duality_checks = []
    for c in duality_checks:
        if c == "serre":
            if not algebra.base.is_field:
                add(c, "skipped", {"reason": "needs a field base"})
                continue
            rep = verify_serre_duality_field(
                algebra, m, n, window=window, depth=depth, seed=seed)
            add(c, {"pass": "ok", "fail": "fail",
                    "inconclusive": "inconclusive"}[rep.verdict],
                rep.to_json())
        elif c == "local":
            if algebra.base.is_field:
                add(c, "skipped", {"reason": "needs the integer base"})
                continue
            primes = [int(config["prime"])] if "prime" in config else \
                [s.p for s in prime_sites(algebra)]
            if not primes:
                add(c, "skipped", {"reason": "no candidate sites"})
                continue
            payloads = []
            worst = "ok"
            for p in primes:
                rep = verify_local_duality_integer(
                    algebra, m, n, p, window=window, depth=depth, seed=seed)
                payloads.append(rep.to_json())
                o = {"pass": "ok", "fail": "fail",
                     "inconclusive": "inconclusive"}[rep.verdict]
                if _OUTCOME_ORDER[o] > _OUTCOME_ORDER[worst]:
                    worst = o
            add(c, worst, {"reports": payloads})
        elif c == "pairing":
            if not algebra.base.is_field:
                add(c, "skipped", {"reason": "needs a field base"})
                continue
            notes = []
            mg = _gprojective_input(m, depth, seed, notes)
            ng = _gprojective_input(n, depth, seed, notes)
            probe = trace_pairing_probe(
                algebra, mg, ng, window=window, depth=depth, seed=seed)
            if notes:
                probe["notes"] = notes
            add(c, "ok" if probe["pass"] else "fail", probe)

    worst = "ok"
    for s in sections:
        if _OUTCOME_ORDER[s["outcome"]] > _OUTCOME_ORDER[worst]:
            worst = s["outcome"]
    return {
        "schema": "%s/report/1" % SCHEMA_PREFIX,
        "algebra": algebra.name,
        "config": {
            "checks": checks, "depth": depth, "seed": seed,
            "range": list(window),
        },
        "sections": sections,
        "verdict": {"ok": "pass", "inconclusive": "inconclusive",
                    "fail": "fail"}[worst],
    }
