"""Construction of cyclic spreads from trace kernels along a subfield chain.

For a divisor chain m = m_0 > m_1 > ... > m_n = 1 let W_i be the kernel of
the relative trace of F_i onto F_{i+1}, pick norm-1 elements zeta_i in the
quadratic extension of F_i (zeta_0 = 1, zeta_i != 1 for i >= 1), and set
gamma_i = zeta_0 * ... * zeta_i.  The base subspaces

    elliptic:    W_0 gamma_0 + ... + W_{n-1} gamma_{n-1}        (dim m-1)
    symplectic:  the same sum plus K gamma_n                    (dim m)

are totally singular resp. totally isotropic, and their orbits under the
circle group give spreads with q^m + 1 members, permuted cyclically.

Restriction sends a symplectic member to the span of its singular vectors;
on these orbits it recovers the elliptic spread and forgets zeta_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .errors import ConstructionError, DomainError, ParameterError
from .fields import FieldCtx, TowerSpec, zeta_element
from .forms import FormCtx, is_totally_isotropic, quad_form
from .linalg import Subspace, coord_frame, scale_subspace, span, subspace_sum

KINDS = ("elliptic", "symplectic")


def default_chain(m: int) -> tuple[int, ...]:
    """The chain of partial products of the prime factorization of m,
    primes in nondecreasing order: each term drops the smallest remaining
    prime, ending at 1."""
    if m <= 1 or m % 2 == 0:
        raise ParameterError(f"m must be an odd integer > 1, got {m}")
    primes = []
    rest, d = m, 3
    while d * d <= rest:
        while rest % d == 0:
            primes.append(d)
            rest //= d
        d += 2
    if rest > 1:
        primes.append(rest)
    chain = [m]
    for p in primes:
        chain.append(chain[-1] // p)
    return tuple(chain)


@dataclass(frozen=True)
class SpreadParams:
    """A tower plus zeta choices, addressed by exponents of the circle
    generator: exponent k at position i means zeta_i = theta_0^(k * (q^m+1)/(q^{m_i}+1)).

    Elliptic parameters carry k_1 .. k_{n-1}, symplectic ones k_1 .. k_n;
    every addressed zeta_i must differ from 1.
    """

    tower: TowerSpec
    zeta_exponents: tuple[int, ...]
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "zeta_exponents", tuple(self.zeta_exponents))
        if self.kind not in KINDS:
            raise ParameterError(f"kind must be one of {KINDS}, got {self.kind!r}")
        n = self.tower.n
        want = n - 1 if self.kind == "elliptic" else n
        if len(self.zeta_exponents) != want:
            raise ParameterError(
                f"{self.kind} parameters need {want} zeta exponent(s) for a "
                f"chain of length {n + 1}, got {len(self.zeta_exponents)}")
        e = self.tower.ctx.e
        for idx, k in enumerate(self.zeta_exponents):
            sub_order = (1 << (e * self.tower.chain[idx + 1])) + 1
            if k < 1:
                raise ParameterError(f"zeta exponent {k} at position {idx + 1} "
                                     f"must be >= 1")
            if k % sub_order == 0:
                raise ParameterError(
                    f"zeta exponent {k} at position {idx + 1} addresses the "
                    f"identity (its subgroup has order {sub_order})")

    @property
    def theorem_ok(self) -> bool:
        """True when q^m > 8, the regime in which the spread, transitivity
        and equivalence claims are certified rather than advisory."""
        return self.tower.ctx.e * self.tower.ctx.m > 3

    def zetas(self) -> tuple[int, ...]:
        return tuple(zeta_element(self.tower, i + 1, k)
                     for i, k in enumerate(self.zeta_exponents))


@dataclass(eq=False)
class Spread:
    """A constructed spread: canonical, de-duplicated, sorted members."""

    members: tuple[Subspace, ...]
    kind: str
    params: SpreadParams | None = None
    provenance: str = "tower"
    verified: str = "unverified"  # becomes "pass"/"fail" after verification

    def member_rows(self) -> set:
        return {X.rows for X in self.members}


def kernel_space(tower: TowerSpec, i: int) -> Subspace:
    """W_i: the trace kernel {x in F_i : trace onto F_{i+1} is 0}, as a
    K-subspace of dimension m_i - m_{i+1}.

    Solved as a GF(2)-linear system: membership in F_i is the vanishing of
    x^(2^{d_i}) + x and the trace is a sum of Frobenius powers.
    """
    if not 0 <= i <= tower.n - 1:
        raise ParameterError(f"kernel index {i} out of range 0..{tower.n - 1}")
    ctx = tower.ctx
    d_i = tower.subfield_deg(i)
    d_next = tower.subfield_deg(i + 1)
    steps = tower.chain[i] // tower.chain[i + 1]
    D = ctx.D
    fix_img = []
    tr_img = []
    for b in range(D):
        x = 1 << b
        fix_img.append(ctx.frobenius(x, d_i) ^ x)
        acc, y = 0, x
        for _ in range(steps):
            acc ^= y
            y = ctx.frobenius(y, d_next)
        tr_img.append(acc)
    rows = []
    for img in (fix_img, tr_img):
        for r in range(D):
            row = 0
            for b in range(D):
                if (img[b] >> r) & 1:
                    row |= 1 << b
            rows.append(row)
    basis = gf2.nullspace(rows, D)
    if len(basis) != d_i - d_next:
        raise ConstructionError(
            f"trace kernel W_{i} has GF(2)-dimension {len(basis)}, "
            f"expected {d_i - d_next}")
    sub = span(coord_frame(ctx), basis)
    if sub.dim != tower.chain[i] - tower.chain[i + 1]:
        raise ConstructionError(
            f"trace kernel W_{i} has K-dimension {sub.dim}, "
            f"expected {tower.chain[i] - tower.chain[i + 1]}")
    return sub


def gammas(params: SpreadParams) -> list[int]:
    """Partial products gamma_i = zeta_0 * ... * zeta_i, starting at gamma_0 = 1."""
    ctx = params.tower.ctx
    out = [1]
    for z in params.zetas():
        out.append(ctx.mul(out[-1], z))
    return out


def base_subspace(params: SpreadParams) -> Subspace:
    """The spread's base member at theta = 1."""
    tower = params.tower
    ctx = tower.ctx
    frame = coord_frame(ctx)
    gam = gammas(params)
    acc = span(frame, [])
    for i in range(tower.n):
        part = kernel_space(tower, i)
        if gam[i] != 1:
            part = scale_subspace(part, gam[i])
        acc = subspace_sum(acc, part)
    if params.kind == "symplectic":
        acc = subspace_sum(acc, span(frame, [gam[tower.n]]))
    want = ctx.m - 1 if params.kind == "elliptic" else ctx.m
    if acc.dim != want:
        raise ConstructionError(
            f"base subspace has dimension {acc.dim}, expected {want}; "
            f"the summands failed to be in direct sum")
    return acc


def orbit_spread(params: SpreadParams) -> Spread:
    """The full circle-group orbit of the base subspace: q^m + 1 members."""
    ctx = params.tower.ctx
    theta0 = ctx.circle_generator()
    count = (1 << (ctx.e * ctx.m)) + 1
    base = base_subspace(params)
    seen = {}
    cur = base
    for _ in range(count):
        seen[cur.rows] = cur
        cur = scale_subspace(cur, theta0)
    if len(seen) != count:
        raise ConstructionError(
            f"orbit produced {len(seen)} distinct members instead of {count}; "
            f"the circle action should be free on the base")
    members = tuple(sorted(seen.values(), key=lambda s: s.sort_key))
    return Spread(members=members, kind=params.kind, params=params)


def desarguesian_spread(ctx: FieldCtx) -> Spread:
    """The circle-group orbit of the middle subfield F itself: the classical
    symplectic spread with q^m + 1 members of dimension m."""
    frame = coord_frame(ctx)
    gf = ctx.subfield_generator(ctx.e * ctx.m)
    base = span(frame, [ctx.pow(gf, j) for j in range(ctx.m)])
    theta0 = ctx.circle_generator()
    count = (1 << (ctx.e * ctx.m)) + 1
    seen = {}
    cur = base
    for _ in range(count):
        seen[cur.rows] = cur
        cur = scale_subspace(cur, theta0)
    if len(seen) != count:
        raise ConstructionError(
            f"orbit produced {len(seen)} distinct members instead of {count}")
    members = tuple(sorted(seen.values(), key=lambda s: s.sort_key))
    return Spread(members=members, kind="symplectic", params=None,
                  provenance="desarguesian")


def restrict_singular(fc: FormCtx, X: Subspace) -> Subspace:
    """Span of the singular vectors of a totally isotropic m-space.

    On such a subspace Q is additive (the polarization vanishes) and
    semilinear over K, so its zero set is a hyperplane; the kernel is read
    off from Q on a GF(2) basis.
    """
    ctx = X.frame.ctx
    if X.dim != ctx.m:
        raise DomainError(
            f"restriction expects a subspace of dimension m = {ctx.m}, "
            f"got {X.dim}")
    if not is_totally_isotropic(fc, X):
        raise DomainError("restriction expects a totally isotropic subspace")
    vb = X.gf2_rows
    qv = [quad_form(fc, v) for v in vb]
    rows = []
    for bit in range(ctx.D):
        row = 0
        for b, val in enumerate(qv):
            if (val >> bit) & 1:
                row |= 1 << b
        rows.append(row)
    gens = []
    for combo in gf2.nullspace(rows, len(vb)):
        v = 0
        while combo:
            low = combo & -combo
            v ^= vb[low.bit_length() - 1]
            combo ^= low
        gens.append(v)
    sub = span(X.frame, gens)
    if sub.dim != ctx.m - 1:
        raise ConstructionError(
            f"singular vectors of the member span dimension {sub.dim}, "
            f"expected {ctx.m - 1}; the form is degenerate on the member")
    return sub


def restrict_spread(fc: FormCtx, S: Spread) -> Spread:
    """Memberwise restriction of a verified symplectic spread; the result is
    elliptic and independent of the final zeta choice."""
    if S.kind != "symplectic":
        raise ParameterError("restriction applies to symplectic spreads")
    if S.verified != "pass":
        raise ParameterError("restriction requires a spread that verified clean")
    restricted = [restrict_singular(fc, X) for X in S.members]
    seen = {X.rows: X for X in restricted}
    if len(seen) != len(S.members):
        raise ConstructionError("restriction collapsed distinct members")
    members = tuple(sorted(seen.values(), key=lambda s: s.sort_key))
    params = None
    if S.params is not None:
        params = SpreadParams(S.params.tower, S.params.zeta_exponents[:-1],
                              "elliptic")
    return Spread(members=members, kind="elliptic", params=params,
                  provenance="restriction")
