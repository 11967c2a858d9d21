"""JSON wire formats: algebras, modules, complexes, canonical dumps.

Scalars travel as strings ("3", "-1/2") so no precision is lost; each
base ring knows how to format and parse its own elements.  Relation
matrices serialize one relation per entry, that is column by column.
"""

import json
import os
import re

from .algebra import FiniteAlgebra
from .matrix import Matrix
from .modules import AlgebraModule
from .rings import GF, QQ, ZZ, ring_from_json, ring_to_json

SCHEMA_PREFIX = "gorlab"


def scalar_to_json(base, a):
    return base.format(a)


def scalar_from_json(base, s):
    return base.parse(s)


def vector_to_json(base, v):
    return [base.format(a) for a in v]


def vector_from_json(base, doc):
    return [base.parse(s) for s in doc]


def matrix_to_json(mat):
    """Column-major: one inner list per column."""
    return [vector_to_json(mat.base, mat.col(c)) for c in range(mat.ncols)]


def matrix_from_json(base, doc, nrows):
    cols = [vector_from_json(base, c) for c in doc]
    for c in cols:
        if len(c) != nrows:
            raise ValueError(
                "matrix column has %d entries, expected %d" % (len(c), nrows))
    return Matrix.from_cols(base, cols, nrows)


def algebra_to_json(algebra):
    b = algebra.base
    return {
        "base": ring_to_json(b),
        "rank": algebra.rank,
        "unit": vector_to_json(b, algebra.unit),
        "mult": [[vector_to_json(b, algebra.mult[i][j])
                  for j in range(algebra.rank)]
                 for i in range(algebra.rank)],
        "name": algebra.name,
    }


def algebra_from_json(doc):
    b = ring_from_json(doc["base"])
    n = int(doc["rank"])
    unit = vector_from_json(b, doc["unit"])
    mult = [[vector_from_json(b, doc["mult"][i][j]) for j in range(n)]
            for i in range(n)]
    if len(unit) != n or len(mult) != n or any(len(row) != n for row in mult):
        raise ValueError("algebra tables do not match the declared rank")
    name = doc.get("name")
    return FiniteAlgebra(b, mult, unit, name=name).assert_valid()


def module_to_json(m, algebra_ref=None):
    b = m.base
    return {
        "algebra": algebra_ref or m.algebra.name,
        "side": m.side,
        "generators": m.gens,
        "relations": matrix_to_json(m.relations),
        "action": {str(i): matrix_to_json(m.action[i])
                   for i in range(m.algebra.rank)},
        "name": m.name,
    }


def module_from_json(doc, algebra):
    b = algebra.base
    g = int(doc["generators"])
    side = doc.get("side", "left")
    rel = matrix_from_json(b, doc.get("relations", []), g)
    action = []
    for i in range(algebra.rank):
        key = str(i)
        if key not in doc["action"]:
            raise ValueError("missing action matrix for basis element %d" % i)
        cols = matrix_from_json(b, doc["action"][key], g)
        if cols.ncols != g:
            raise ValueError(
                "action matrix %d is %dx%d, expected %dx%d"
                % (i, cols.nrows, cols.ncols, g, g))
        action.append(cols)
    m = AlgebraModule(algebra, side, g, rel, action, name=doc.get("name"))
    m.check()
    return m


def complex_to_json(cx):
    """Degreewise dump of a chain complex with a "degrees" wrapper."""
    out = {
        "schema": "%s/complex/1" % SCHEMA_PREFIX,
        "range": [cx.lo, cx.hi],
        "degrees": {},
        "differentials": {},
    }
    for i in range(cx.lo, cx.hi + 1):
        out["degrees"][str(i)] = module_to_json(cx.module(i))
        if i < cx.hi:
            out["differentials"][str(i)] = matrix_to_json(cx.diff(i).matrix)
    return out


def dump_json(doc):
    """Canonical rendering: UTF-8, sorted keys, trailing newline."""
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


# ---------------------------------------------------------------------
# preset resolution for the CLI

_PRESET_RE = re.compile(r"^([a-z_0-9]+)(?:\(([^)]*)\))?$")


def _parse_base_tag(tok):
    if tok == "Q":
        return QQ
    if tok == "Z":
        return ZZ
    m = re.match(r"^F(\d+)$", tok)
    if m:
        return GF(int(m.group(1)))
    raise ValueError("unrecognized base tag %r (use Q, Z, or F<p>)" % tok)


def resolve_algebra(spec):
    """An algebra from a preset name like "cyclic(4)" or a JSON path.

    Preset grammar: name(arg, ...) with integer arguments and an
    optional trailing base tag Q, Z, or F<p>.  Available names:
    truncated_poly(n[, base]), upper_triangular(n[, base]),
    quantum_exterior(q[, base]), cyclic(n[, base]) for the group
    algebra of C_n (base defaults to Z), symmetric(3[, base]), and
    fat_point([base]).
    """
    from .presets import (commutative_fat_point, group_algebra,
                          quantum_exterior, truncated_poly,
                          upper_triangular)
    if os.path.exists(spec) or spec.endswith(".json"):
        with open(spec, "r", encoding="utf-8") as fh:
            return algebra_from_json(json.load(fh))
    m = _PRESET_RE.match(spec)
    if not m:
        raise ValueError("unrecognized algebra spec %r" % spec)
    name = m.group(1)
    raw = [t.strip() for t in (m.group(2) or "").split(",") if t.strip()]
    base = None
    if raw and not raw[-1].lstrip("-").isdigit():
        base = _parse_base_tag(raw.pop())
    ints = [int(t) for t in raw]
    if name == "truncated_poly":
        return truncated_poly(ints[0], base or QQ)
    if name == "upper_triangular":
        return upper_triangular(ints[0], base or QQ)
    if name == "quantum_exterior":
        b = base or QQ
        return quantum_exterior(b.from_int(ints[0]), b)
    if name == "cyclic":
        return group_algebra("cyclic", ints[0], base or ZZ)
    if name == "symmetric":
        return group_algebra("symmetric", ints[0] if ints else 3, base or QQ)
    if name == "fat_point":
        return commutative_fat_point(base or QQ)
    raise ValueError("unknown preset %r" % name)


def resolve_module(spec, algebra):
    """A module from a JSON path or an inline JSON document.

    The short names "trivial" (rank-1 module with every basis element
    acting as the identity, when that is a valid action) and
    "simple(i)" (the i-th simple over a field base) are also accepted.
    """
    from .modules import simple_modules
    if isinstance(spec, dict):
        return module_from_json(spec, algebra)
    m = re.match(r"^simple\((\d+)\)$", spec)
    if m:
        sims = simple_modules(algebra)
        return sims[int(m.group(1))][1]
    if spec == "trivial":
        return trivial_module(algebra)
    with open(spec, "r", encoding="utf-8") as fh:
        return module_from_json(json.load(fh), algebra)


def trivial_module(algebra, name=None):
    """The rank-1 module where every basis element acts as 1.

    Valid exactly when summing coordinates is an algebra map, as it is
    for group algebras; anything else fails the structural check.
    """
    b = algebra.base
    m = AlgebraModule(
        algebra, "left", 1, Matrix.zeros(b, 1, 0),
        [Matrix(b, [[b.one]], 1) for _ in range(algebra.rank)],
        name=name or ("Z" if not b.is_field else "k (trivial)"))
    m.check()
    return m
