"""GF(q)-linear algebra on the ambient field viewed as a 2m-dimensional space.

The coordinate frame is the power basis 1, g, ..., g^(2m-1) of GF(q^{2m})
over K = GF(q).  Coordinates are K-elements represented by their ambient
field ints, so all scalar arithmetic is delegated to the one field core.

A :class:`Subspace` is canonical: its rows are the reduced row-echelon
basis over K, so equal subspaces compare equal componentwise and can key
dicts and sets.  Alongside the K-echelon form each subspace carries a
bit-packed GF(2) echelon basis, which makes membership tests, pairwise
intersection triviality and vector enumeration cheap.
"""

from __future__ import annotations

import functools

from . import gf2
from .errors import ParameterError
from .fields import FieldCtx


class CoordFrame:
    """Coordinates of GF(q^{2m}) over K = GF(q) w.r.t. the power basis of g."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.dim = 2 * ctx.m
        self.basis = tuple(ctx.pow(ctx.g, j) for j in range(self.dim))
        gq = ctx.subfield_generator(ctx.e)
        self.scalar_basis = tuple(ctx.pow(gq, s) for s in range(ctx.e))
        self.scalars = tuple(ctx.subfield_elements(ctx.e))
        # Column (j*e + s) of the GF(2) change-of-basis matrix is the element
        # scalar_basis[s] * g^j; inverting it turns an element's D bits into
        # K-coordinates.
        D = ctx.D
        cols = [ctx.mul(sb, bj) for bj in self.basis for sb in self.scalar_basis]
        rows = []
        for r in range(D):
            row = 0
            for b, col in enumerate(cols):
                if (col >> r) & 1:
                    row |= 1 << b
            rows.append(row)
        self._from_bits = gf2.inverse(rows, D)

    def same_frame(self, other: "CoordFrame") -> bool:
        return self.ctx.same_field(other.ctx)

    def coords(self, x: int) -> tuple[int, ...]:
        """K-coordinate vector of x: the unique c with sum c_j g^j = x."""
        bits = gf2.matvec(self._from_bits, x)
        e = self.ctx.e
        out = []
        for j in range(self.dim):
            c = 0
            for s in range(e):
                if (bits >> (j * e + s)) & 1:
                    c ^= self.scalar_basis[s]
            out.append(c)
        return tuple(out)

    def uncoords(self, vec) -> int:
        x = 0
        mul = self.ctx.mul
        for c, b in zip(vec, self.basis):
            if c:
                x ^= mul(c, b)
        return x


@functools.lru_cache(maxsize=None)
def coord_frame(ctx: FieldCtx) -> CoordFrame:
    return CoordFrame(ctx)


def _rref(ctx: FieldCtx, rows, width: int):
    """Reduced row-echelon form over K of a list of coordinate rows."""
    pivots: list[tuple[int, list[int]]] = []
    mul = ctx.mul
    for row in rows:
        row = list(row)
        for col, prow in pivots:
            c = row[col]
            if c:
                for t in range(col, width):
                    if prow[t]:
                        row[t] ^= mul(c, prow[t])
        lead = next((t for t in range(width) if row[t]), None)
        if lead is None:
            continue
        c = row[lead]
        if c != 1:
            ci = ctx.inv(c)
            row = [mul(ci, v) if v else 0 for v in row]
        for _, prow in pivots:
            c = prow[lead]
            if c:
                for t in range(lead, width):
                    if row[t]:
                        prow[t] ^= mul(c, row[t])
        pivots.append((lead, row))
        pivots.sort(key=lambda p: p[0])
    return [tuple(r) for _, r in pivots]


class Subspace:
    """A K-subspace of the ambient field in reduced row-echelon form.

    Construct through :func:`span`; direct callers must pass rows already
    in canonical RREF.
    """

    __slots__ = ("frame", "rows", "dim", "basis", "gf2_rows")

    def __init__(self, frame: CoordFrame, rows: tuple[tuple[int, ...], ...]):
        self.frame = frame
        self.rows = rows
        self.dim = len(rows)
        self.basis = tuple(frame.uncoords(r) for r in rows)
        ctx = frame.ctx
        packed = [ctx.mul(sb, b) for b in self.basis for sb in frame.scalar_basis]
        self.gf2_rows = tuple(gf2.echelon(packed))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.frame.same_frame(other.frame)
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.frame.ctx.modulus, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, basis={[hex(b) for b in self.basis]})"

    @property
    def sort_key(self) -> tuple[int, ...]:
        return self.basis

    def member(self, x: int) -> bool:
        """True iff x lies in the subspace."""
        return gf2.reduce_row(self.gf2_rows, x) == 0

    def vectors(self):
        """Yield all q^dim vectors, starting with 0 (Gray-code order)."""
        basis = self.gf2_rows
        v = 0
        yield v
        for i in range(1, 1 << len(basis)):
            low = i & -i
            v ^= basis[low.bit_length() - 1]
            yield v

    def size(self) -> int:
        return 1 << (self.frame.ctx.e * self.dim)


def span(frame: CoordFrame, gens) -> Subspace:
    """Canonical K-span of a list of field elements (empty list allowed)."""
    rows = [frame.coords(x) for x in gens if x]
    return Subspace(frame, tuple(_rref(frame.ctx, rows, frame.dim)))


def zero_subspace(frame: CoordFrame) -> Subspace:
    return span(frame, [])


def _check_frames(X: Subspace, Y: Subspace) -> None:
    if not X.frame.same_frame(Y.frame):
        raise ParameterError("subspaces live in different fields")


def member(X: Subspace, x: int) -> bool:
    return X.member(x)


def intersect(X: Subspace, Y: Subspace) -> Subspace:
    """Canonical intersection, by reduction of the stacked [x|x], [y|0] rows:
    rows whose left half vanishes carry a basis of X ^ Y on the right."""
    _check_frames(X, Y)
    frame = X.frame
    w = frame.dim
    stacked = [list(r) + list(r) for r in X.rows]
    stacked += [list(r) + [0] * w for r in Y.rows]
    red = _rref(frame.ctx, stacked, 2 * w)
    gens = [frame.uncoords(row[w:]) for row in red if not any(row[:w])]
    return span(frame, gens)


def subspace_sum(X: Subspace, Y: Subspace) -> Subspace:
    _check_frames(X, Y)
    return span(X.frame, X.basis + Y.basis)


def scale_subspace(X: Subspace, theta: int) -> Subspace:
    """The subspace X*theta; multiplication by a fixed element is K-linear."""
    if theta == 0:
        raise ParameterError("cannot scale a subspace by 0")
    mul = X.frame.ctx.mul
    return span(X.frame, [mul(b, theta) for b in X.basis])


def apply_galois(X: Subspace, k: int) -> Subspace:
    """Image of X under x -> x^(2^k); K is Galois-stable, so the image is
    again a K-subspace, of the same dimension."""
    if k < 0:
        raise ParameterError(f"Galois power must be >= 0, got {k}")
    frob = X.frame.ctx.frobenius
    return span(X.frame, [frob(b, k) for b in X.basis])


def trivial_meet(X: Subspace, Y: Subspace) -> bool:
    """True iff X ^ Y = 0, via GF(2) rank additivity of the packed bases.

    Much cheaper than :func:`intersect` when only triviality is needed:
    the meet is zero exactly when the GF(2) dimensions add under the sum.
    """
    pivots = {r.bit_length() - 1: r for r in X.gf2_rows}
    for y in Y.gf2_rows:
        while y:
            lead = y.bit_length() - 1
            row = pivots.get(lead)
            if row is None:
                pivots[lead] = y
                break
            y ^= row
        else:
            return False
    return True
