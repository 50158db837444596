"""Deterministic JSON encodings for contexts, subspaces, spreads and reports.

Field elements are hex strings of their coefficient bytes, least
significant byte first (bit j of the value is the coefficient of x^j), so
files stay valid across coordinate-frame changes.  The modulus gets the
same packing over D+1 bits.  Spread members are written in canonical sort
order; re-loading and re-serializing a file is a no-op.
"""

from __future__ import annotations

import json

from .analysis import ClassificationResult, VerificationReport
from .errors import ParameterError
from .fields import (DEFAULT_MAX_DEGREE, FieldCtx, TowerSpec, make_context,
                     smallest_primitive_modulus)
from .linalg import CoordFrame, Subspace, coord_frame, span
from .spreads import Spread, SpreadParams


def element_to_hex(x: int, D: int) -> str:
    return x.to_bytes((D + 7) // 8, "little").hex()


def element_from_hex(s: str, D: int) -> int:
    x = int.from_bytes(bytes.fromhex(s), "little")
    if x >> D:
        raise ParameterError(f"element {s!r} does not fit in {D} bits")
    return x


def context_to_json(ctx: FieldCtx) -> dict:
    return {
        "e": ctx.e,
        "m": ctx.m,
        "modulus_hex": element_to_hex(ctx.modulus, ctx.D + 1),
    }


def context_from_json(d: dict, max_degree: int = DEFAULT_MAX_DEGREE) -> FieldCtx:
    e, m = int(d["e"]), int(d["m"])
    D = 2 * e * m
    modulus = element_from_hex(d["modulus_hex"], D + 1)
    if modulus == smallest_primitive_modulus(D):
        return make_context(e, m, max_degree)
    return FieldCtx(e, m, modulus=modulus, max_degree=max_degree)


def subspace_to_json(X: Subspace) -> list[str]:
    D = X.frame.ctx.D
    return [element_to_hex(b, D) for b in X.basis]


def subspace_from_json(frame: CoordFrame, data: list[str]) -> Subspace:
    D = frame.ctx.D
    return span(frame, [element_from_hex(s, D) for s in data])


def spread_to_json(S: Spread) -> dict:
    if not S.members:
        raise ParameterError("cannot serialize an empty spread")
    ctx = S.members[0].frame.ctx
    chain = list(S.params.tower.chain) if S.params is not None else None
    zetas = list(S.params.zeta_exponents) if S.params is not None else None
    return {
        "context": context_to_json(ctx),
        "kind": S.kind,
        "provenance": S.provenance,
        "chain": chain,
        "zeta_exponents": zetas,
        "members": [subspace_to_json(X) for X in S.members],
    }


def spread_from_json(d: dict, max_degree: int = DEFAULT_MAX_DEGREE) -> Spread:
    ctx = context_from_json(d["context"], max_degree)
    frame = coord_frame(ctx)
    members = [subspace_from_json(frame, mdata) for mdata in d["members"]]
    members = tuple(sorted(members, key=lambda s: s.sort_key))
    kind = d["kind"]
    params = None
    if d.get("chain") is not None and d.get("zeta_exponents") is not None:
        tower = TowerSpec(ctx, tuple(d["chain"]))
        params = SpreadParams(tower, tuple(d["zeta_exponents"]), kind)
    return Spread(members=members, kind=kind, params=params,
                  provenance=d.get("provenance", "file"))


def report_to_json(r: VerificationReport) -> dict:
    return {
        "member_count": r.member_count,
        "dims_ok": r.dims_ok,
        "all_ts_or_ti": r.all_ts_or_ti,
        "pairwise_trivial": r.pairwise_trivial,
        "covered": r.covered,
        "expected": r.expected,
        "pass": r.passed,
        "mode": r.mode,
    }


def classification_to_json(res: ClassificationResult) -> dict:
    return {
        "chain": list(res.chain),
        "e": res.e,
        "tuple_count": res.tuple_count,
        "class_count": res.class_count,
        "classes": [
            {"rep_exponents": list(rep), "orbit_size": size, "aut_order": aut}
            for rep, size, aut in zip(res.representatives, res.orbit_sizes,
                                      res.aut_orders)
        ],
        "bound": {"num": res.bound.numerator, "den": res.bound.denominator},
        "bound_satisfied": res.bound_satisfied,
        "theorem_ok": res.theorem_ok,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
