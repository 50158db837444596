"""The quadratic form Q(x) = T(x * conj(x)) onto K and its alternating form.

With T the trace of F = GF(q^m) onto K = GF(q) and conj the involution
x -> x^(q^m), the ambient field becomes an orthogonal K-space of minus
type: Q polarizes to the nondegenerate alternating form
B(x, y) = T(x*conj(y) + conj(x)*y), and the nonzero singular vectors
number (q^m + 1)(q^{m-1} - 1).

A :class:`FormCtx` optionally carries a shift element c, giving the
companion form Q'(x) = Q(x) + B(x, c)^2.  Squaring a linear functional
leaves the polarization untouched in characteristic 2, so the shifted
forms realize the other orthogonal structures compatible with B.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceError
from .fields import FieldCtx
from .linalg import CoordFrame, Subspace, _rref, coord_frame

# Exhaustive scans are priced per nonzero vector; these are the default caps.
CENSUS_MAX_DEGREE = 24
SCAN_MAX_DEGREE = 18


@dataclass(frozen=True)
class FormCtx:
    """An orthogonal structure on the ambient field over K.

    shift = 0 is the standard form Q; a nonzero shift c replaces it by
    Q(x) + B(x, c)^2, which has the same alternating form.
    """

    frame: CoordFrame
    shift: int = 0

    @property
    def n_deg(self) -> int:
        return self.frame.ctx.e


def form_context(ctx: FieldCtx, shift: int = 0) -> FormCtx:
    return FormCtx(coord_frame(ctx), shift)


def quad_form(fc: FormCtx, x: int) -> int:
    """Q(x) = T(x * conj(x)), a K-valued form with Q(t*x) = t^2 Q(x)."""
    ctx = fc.frame.ctx
    em = ctx.e * ctx.m
    v = ctx.rel_trace(ctx.mul(x, ctx.conjugate(x)), em, ctx.e)
    if fc.shift:
        b = bilinear_form(fc, x, fc.shift)
        v ^= ctx.mul(b, b)
    return v


def bilinear_form(fc: FormCtx, x: int, y: int) -> int:
    """B(x, y) = T(x*conj(y) + conj(x)*y); symmetric and alternating."""
    ctx = fc.frame.ctx
    u = ctx.mul(x, ctx.conjugate(y))
    return ctx.rel_trace(u ^ ctx.conjugate(u), ctx.e * ctx.m, ctx.e)


def variant_form(fc: FormCtx, c: int) -> FormCtx:
    """The form Q + B(., c)^2 on the same frame; shifts compose additively."""
    return FormCtx(fc.frame, fc.shift ^ c)


def is_totally_isotropic(fc: FormCtx, X: Subspace) -> bool:
    """B vanishes on X; by bilinearity it is enough to test basis pairs."""
    basis = X.basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if bilinear_form(fc, basis[i], basis[j]):
                return False
    return True


def is_totally_singular(fc: FormCtx, X: Subspace) -> bool:
    """Q vanishes on X.

    On a totally isotropic subspace Q is additive and semilinear over K,
    so vanishing on a basis forces vanishing everywhere; a non-isotropic
    subspace cannot be totally singular at all.
    """
    if not is_totally_isotropic(fc, X):
        return False
    return all(quad_form(fc, b) == 0 for b in X.basis)


def elliptic_singular_count(ctx: FieldCtx) -> int:
    """Nonzero singular vectors of a minus-type form on a 2m-space over GF(q)."""
    qm = 1 << (ctx.e * ctx.m)
    qm_1 = 1 << (ctx.e * (ctx.m - 1))
    return (qm + 1) * (qm_1 - 1)


def hyperbolic_singular_count(ctx: FieldCtx) -> int:
    """The plus-type companion count, with the two factors' roles swapped."""
    qm = 1 << (ctx.e * ctx.m)
    qm_1 = 1 << (ctx.e * (ctx.m - 1))
    return (qm - 1) * (qm_1 + 1)


def _q_values(fc: FormCtx):
    """Yield (x, Q(x)) for every nonzero x, one vector at a time.

    Uses the norm map: for x = g^t the product x*conj(x) lands in F, where
    T is a small lookup table.  With exp/log tables the walk is by vector
    int; without them it follows the exponent with one incremental
    multiplication per step.
    """
    ctx = fc.frame.ctx
    em = ctx.e * ctx.m
    tn = {y: ctx.rel_trace(y, em, ctx.e) for y in ctx.subfield_elements(em)}
    norm_exp = (1 << em) + 1
    shift = fc.shift
    if shift:
        contribs = [bilinear_form(fc, 1 << b, shift) for b in range(ctx.D)]
    mul = ctx.mul
    if ctx._exp is not None:
        exp, log, order = ctx._exp, ctx._log, ctx.order
        for x in range(1, (1 << ctx.D)):
            v = tn[exp[(log[x] * norm_exp) % order]]
            if shift:
                b = 0
                bits = x
                while bits:
                    low = bits & -bits
                    b ^= contribs[low.bit_length() - 1]
                    bits ^= low
                v ^= mul(b, b)
            yield x, v
    else:
        gF = ctx.pow(ctx.g, norm_exp)
        x, y = 1, 1
        for _ in range(ctx.order):
            v = tn[y]
            if shift:
                b = 0
                bits = x
                while bits:
                    low = bits & -bits
                    b ^= contribs[low.bit_length() - 1]
                    bits ^= low
                v ^= mul(b, b)
            yield x, v
            x = mul(x, ctx.g)
            y = mul(y, gF)


def singular_census(fc: FormCtx, max_degree: int = CENSUS_MAX_DEGREE) -> int:
    """Count the nonzero singular vectors by evaluating Q on every one."""
    ctx = fc.frame.ctx
    if ctx.D > max_degree:
        raise ResourceError(
            f"census over GF(2^{ctx.D}) exceeds the scan budget of 2^{max_degree}")
    return sum(1 for _, v in _q_values(fc) if v == 0)


def singular_vectors(fc: FormCtx, max_degree: int = SCAN_MAX_DEGREE) -> set[int]:
    """The set of nonzero singular vectors, for exhaustive verification."""
    ctx = fc.frame.ctx
    if ctx.D > max_degree:
        raise ResourceError(
            f"singular-vector scan over GF(2^{ctx.D}) exceeds the budget of "
            f"2^{max_degree}")
    return {x for x, v in _q_values(fc) if v == 0}


def radical_rank(fc: FormCtx) -> int:
    """K-rank of the Gram matrix of B on the power basis (2m = nondegenerate)."""
    frame = fc.frame
    rows = [[bilinear_form(fc, bi, bj) for bj in frame.basis] for bi in frame.basis]
    return len(_rref(frame.ctx, rows, frame.dim))


def census_report(fc: FormCtx, max_degree: int = CENSUS_MAX_DEGREE) -> dict:
    """Census plus quadric-type determination, as a JSON-ready dict."""
    ctx = fc.frame.ctx
    count = singular_census(fc, max_degree)
    expected = elliptic_singular_count(ctx)
    if radical_rank(fc) < fc.frame.dim:
        kind = "degenerate"
    elif count == expected:
        kind = "elliptic"
    elif count == hyperbolic_singular_count(ctx):
        kind = "hyperbolic"
    else:
        kind = "unknown"
    return {"nonzero_singular": count, "expected_elliptic": expected, "type": kind}
