"""Spread verification, equivalence testing and Galois-orbit classification.

Verification has two modes.  Counting mode certifies the partition by
arithmetic: once the members are totally singular (resp. isotropic) of the
right dimension and meet pairwise in 0, covering exactly as many nonzero
vectors as the space has singular (resp. nonzero) ones forces every such
vector into exactly one member.  Exhaustive mode additionally enumerates
every member vector and compares the union against the full singular set.

Equivalence of elliptic parameter tuples is decided by simultaneous Galois
conjugacy of the zeta elements, and classification enumerates the orbits
of admissible exponent tuples under the full Galois group of the ambient
field.  The headline lower bound for the number of classes is the product
of the subgroup orders divided by the order of that Galois group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import ParameterError, ResourceError
from .fields import TowerSpec
from .forms import (FormCtx, elliptic_singular_count, is_totally_isotropic,
                    is_totally_singular, singular_vectors)
from .linalg import apply_galois, scale_subspace, trivial_meet
from .spreads import Spread, SpreadParams

MODES = ("counting", "exhaustive")
EXHAUSTIVE_MAX_DEGREE = 18
DEFAULT_MAX_TUPLES = 1 << 20


@dataclass
class VerificationReport:
    member_count: int
    dims_ok: bool
    all_ts_or_ti: bool
    pairwise_trivial: bool
    covered: int
    expected: int
    passed: bool
    mode: str


def verify_spread(fc: FormCtx, S: Spread, mode: str = "counting",
                  scan_max_degree: int = EXHAUSTIVE_MAX_DEGREE) -> VerificationReport:
    """Check the spread axioms; failures are reported, never raised.

    The spread's `verified` field is stamped with the outcome.
    """
    if mode not in MODES:
        raise ParameterError(f"mode must be one of {MODES}, got {mode!r}")
    ctx = fc.frame.ctx
    qm = 1 << (ctx.e * ctx.m)
    want_members = qm + 1
    want_dim = ctx.m - 1 if S.kind == "elliptic" else ctx.m

    member_count = len(S.members)
    dims_ok = all(X.dim == want_dim for X in S.members)
    if S.kind == "elliptic":
        all_flag = all(is_totally_singular(fc, X) for X in S.members)
    else:
        all_flag = all(is_totally_isotropic(fc, X) for X in S.members)

    pairwise = True
    for i, Xi in enumerate(S.members):
        for j in range(i + 1, member_count):
            if not trivial_meet(Xi, S.members[j]):
                pairwise = False
                break
        if not pairwise:
            break

    counted = sum(X.size() - 1 for X in S.members)
    if mode == "counting":
        covered = counted
        if S.kind == "elliptic":
            expected = elliptic_singular_count(ctx)
        else:
            expected = (1 << ctx.D) - 1
    else:
        if ctx.D > scan_max_degree:
            raise ResourceError(
                f"exhaustive verification over GF(2^{ctx.D}) exceeds the "
                f"budget of 2^{scan_max_degree}")
        union: set[int] = set()
        for X in S.members:
            union.update(X.vectors())
        union.discard(0)
        covered = len(union)
        pairwise = pairwise and covered == counted
        if S.kind == "elliptic":
            sing = singular_vectors(fc, scan_max_degree)
            expected = len(sing)
            if (member_count == want_members and dims_ok and all_flag
                    and pairwise and covered == expected):
                # mathematically forced at this point; guards against bugs
                assert union == sing
        else:
            expected = (1 << ctx.D) - 1

    passed = (member_count == want_members and dims_ok and all_flag
              and pairwise and covered == expected)
    S.verified = "pass" if passed else "fail"
    return VerificationReport(member_count, dims_ok, all_flag, pairwise,
                              covered, expected, passed, mode)


def verify_transitive(S: Spread, theta0: int) -> bool:
    """True iff scaling by theta0 permutes the members in a single
    (q^m + 1)-cycle."""
    if not S.members:
        return False
    ctx = S.members[0].frame.ctx
    count = (1 << (ctx.e * ctx.m)) + 1
    if len(S.members) != count:
        return False
    index = {X.rows: i for i, X in enumerate(S.members)}
    if len(index) != count:
        return False
    perm = []
    for X in S.members:
        img = scale_subspace(X, theta0)
        t = index.get(img.rows)
        if t is None:
            return False
        perm.append(t)
    seen, i = 0, 0
    while True:
        i = perm[i]
        seen += 1
        if i == 0:
            break
        if seen > count:
            return False
    return seen == count


class EquivalenceResult(NamedTuple):
    equivalent: bool
    witness: int | None  # least Galois power conjugating one tuple onto the other


def params_equivalent(p: SpreadParams, p2: SpreadParams) -> EquivalenceResult:
    """Decide equivalence of two elliptic parameter sets: same chain and a
    single Galois power carrying every zeta onto its counterpart.

    Exact under the certified regime (q^m > 8); advisory below it.
    """
    if p.kind != p2.kind:
        raise ParameterError("cannot compare parameters of mixed kinds")
    if p.kind != "elliptic":
        raise ParameterError("the equivalence criterion applies to elliptic "
                             "parameters")
    ctx, ctx2 = p.tower.ctx, p2.tower.ctx
    if not ctx.same_field(ctx2) or p.tower.chain != p2.tower.chain:
        return EquivalenceResult(False, None)
    zs, zs2 = p.zetas(), p2.zetas()
    for k in range(ctx.D):
        if all(ctx.frobenius(z, k) == z2 for z, z2 in zip(zs, zs2)):
            return EquivalenceResult(True, k)
    return EquivalenceResult(False, None)


def theorem_bound(tower: TowerSpec) -> Fraction:
    """Product of (q^{m_i} + 1) over the interior chain, divided by twice
    m_1 * log2(q) (the order of the Galois group of the quadratic extension
    of F_1); for a two-term chain m_1 is read as m."""
    ctx = tower.ctx
    num = 1
    for mi in tower.chain[1:-1]:
        num *= (1 << (ctx.e * mi)) + 1
    m1 = tower.chain[1] if tower.n >= 2 else ctx.m
    return Fraction(num, 2 * m1 * ctx.e)


@dataclass
class ClassificationResult:
    e: int
    chain: tuple[int, ...]
    tuple_count: int
    class_count: int
    representatives: tuple[tuple[int, ...], ...]
    orbit_sizes: tuple[int, ...]
    aut_orders: tuple[int, ...]
    bound: Fraction
    bound_satisfied: bool
    theorem_ok: bool


def classify_tower(tower: TowerSpec,
                   max_tuples: int = DEFAULT_MAX_TUPLES) -> ClassificationResult:
    """Partition all admissible zeta-exponent tuples into Galois orbits.

    Tuples live in exponent space: position i ranges over 1..q^{m_i}, one
    representative per nontrivial element of the norm-1 subgroup of order
    q^{m_i} + 1.  The Galois group acts by simultaneous multiplication of
    the exponents by powers of 2; representatives are the lexicographically
    least tuples of their orbits.
    """
    ctx = tower.ctx
    subs = [(1 << (ctx.e * mi)) + 1 for mi in tower.chain[1:-1]]
    total = 1
    for N in subs:
        total *= N - 1
    if total > max_tuples:
        raise ResourceError(
            f"{total} zeta tuples exceed the classification budget of "
            f"{max_tuples}")
    mults = [[pow(2, j, N) for N in subs] for j in range(ctx.D)]
    seen: set[tuple[int, ...]] = set()
    reps, sizes, stabilizers = [], [], []
    for t in itertools.product(*[range(1, N) for N in subs]):
        if t in seen:
            continue
        orbit = set()
        stab = 0
        for row in mults:
            img = tuple((k * mj) % N for k, mj, N in zip(t, row, subs))
            orbit.add(img)
            if img == t:
                stab += 1
        seen |= orbit
        reps.append(t)
        sizes.append(len(orbit))
        stabilizers.append(stab)
    qm = 1 << (ctx.e * ctx.m)
    auts = tuple((qm + 1) * (ctx.q - 1) * s for s in stabilizers)
    bound = theorem_bound(tower)
    class_count = len(reps)
    return ClassificationResult(
        e=ctx.e,
        chain=tower.chain,
        tuple_count=total,
        class_count=class_count,
        representatives=tuple(reps),
        orbit_sizes=tuple(sizes),
        aut_orders=auts,
        bound=bound,
        bound_satisfied=class_count > bound,
        theorem_ok=ctx.e * ctx.m > 3,
    )


def aut_order(params: SpreadParams) -> int:
    """(q^m + 1) * (q - 1) * s with s the number of Galois powers fixing
    every zeta: the order of the known automorphism group of the elliptic
    spread (the full group, under the certified regime)."""
    if params.kind != "elliptic":
        raise ParameterError("automorphism order is computed for elliptic "
                             "parameters")
    ctx = params.tower.ctx
    zs = params.zetas()
    s = sum(1 for k in range(ctx.D)
            if all(ctx.frobenius(z, k) == z for z in zs))
    qm = 1 << (ctx.e * ctx.m)
    return (qm + 1) * (ctx.q - 1) * s


def galois_image_spread(S: Spread, k: int) -> Spread:
    """Memberwise Galois image of a spread, re-canonicalized; the parameters
    transform by multiplying every exponent by 2^k in its subgroup."""
    if not S.members:
        raise ParameterError("cannot map an empty spread")
    ctx = S.members[0].frame.ctx
    if not 0 <= k < ctx.D:
        raise ParameterError(f"Galois power {k} out of range 0..{ctx.D - 1}")
    members = tuple(sorted((apply_galois(X, k) for X in S.members),
                           key=lambda s: s.sort_key))
    params = S.params
    if params is not None:
        e = ctx.e
        new_exps = []
        for idx, kexp in enumerate(params.zeta_exponents):
            N = (1 << (e * params.tower.chain[idx + 1])) + 1
            new_exps.append((kexp * pow(2, k, N)) % N)
        params = SpreadParams(params.tower, tuple(new_exps), params.kind)
    return Spread(members=members, kind=S.kind, params=params,
                  provenance=S.provenance)
