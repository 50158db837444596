"""Arithmetic in GF(2^D) and its subfield lattice, for D = 2*e*m with m odd.

Field elements are plain ints: bit j is the coefficient of x^j in the
polynomial basis of GF(2)[x] modulo a primitive polynomial.  Zero and one
are therefore represented by 0 and 1, and addition is ``^``.

A :class:`FieldCtx` fixes the ambient field F2 = GF(q^{2m}) with q = 2^e.
Every subfield is realized inside the one ambient field as the fixed field
of a Frobenius power, so relative traces are closed-form sums and no
embedding bookkeeping is needed.  The distinguished subfields are

    F2 = GF(q^{2m})  >  F = GF(q^m)  >  K = GF(q),

with the conjugation x -> x^(q^m) fixing F, and the circle group
C = {t : t * conj(t) = 1}, cyclic of order q^m + 1.

The modulus is the lexicographically smallest primitive polynomial of its
degree (coefficients compared from the constant term upward), so contexts
are reproducible across runs and platforms and the residue of x is a
canonical primitive element.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import DomainError, ParameterError, ResourceError

DEFAULT_MAX_DEGREE = 40
# Full exp/log tables are built below this degree; above it, multiplication
# falls back to the shift-and-reduce loop.
_TABLE_MAX_DEGREE = 20


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_mul(a: int, b: int, modulus: int, deg: int) -> int:
    """Carryless multiply of a and b reduced modulo a degree-`deg` polynomial."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> deg) & 1:
            a ^= modulus
    return r


def _poly_pow(a: int, n: int, modulus: int, deg: int) -> int:
    r = 1
    while n:
        if n & 1:
            r = _poly_mul(r, a, modulus, deg)
        a = _poly_mul(a, a, modulus, deg)
        n >>= 1
    return r


def is_primitive(modulus: int, deg: int) -> bool:
    """True iff `modulus` is a primitive polynomial of degree `deg` over GF(2).

    Checks irreducibility via x^(2^deg) = x together with the subfield
    exclusions, then full multiplicative order of x via the prime factors
    of 2^deg - 1.
    """
    if modulus.bit_length() - 1 != deg or not modulus & 1:
        return False
    if _poly_pow(2, 1 << deg, modulus, deg) != 2:
        return False
    for p in prime_factors(deg):
        if _poly_pow(2, 1 << (deg // p), modulus, deg) == 2:
            return False
    order = (1 << deg) - 1
    for p in prime_factors(order):
        if _poly_pow(2, order // p, modulus, deg) == 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def smallest_primitive_modulus(deg: int) -> int:
    """Lexicographically smallest primitive polynomial of the given degree.

    Coefficient sequences (c_0, ..., c_deg) are compared from the constant
    term upward; every candidate has c_0 = c_deg = 1, so the search runs
    over the middle coefficients with c_1 most significant in the order.
    """
    for t in range(1 << (deg - 1)):
        mid = 0
        for j in range(1, deg):
            if (t >> (deg - 1 - j)) & 1:
                mid |= 1 << j
        cand = 1 | mid | (1 << deg)
        if is_primitive(cand, deg):
            return cand
    raise RuntimeError(f"no primitive polynomial of degree {deg}")  # pragma: no cover


class FieldCtx:
    """The ambient field GF(2^D), D = 2*e*m, with primitive modulus and g = x.

    Immutable after construction; all operations are pure functions of their
    arguments, so a context is safe to share between threads.
    """

    def __init__(self, e: int, m: int, modulus: int | None = None,
                 max_degree: int = DEFAULT_MAX_DEGREE):
        if e < 1:
            raise ParameterError(f"e must be >= 1, got {e}")
        if m <= 1 or m % 2 == 0:
            raise ParameterError(f"m must be an odd integer > 1, got {m}")
        D = 2 * e * m
        if D > max_degree:
            raise ResourceError(
                f"field degree {D} = 2*{e}*{m} exceeds the maximum {max_degree}")
        self.e = e
        self.m = m
        self.D = D
        self.q = 1 << e
        self.order = (1 << D) - 1
        if modulus is None:
            modulus = smallest_primitive_modulus(D)
        elif not is_primitive(modulus, D):
            raise ParameterError(
                f"modulus {modulus:#x} is not a primitive polynomial of degree {D}")
        self.modulus = modulus
        self.g = 2  # residue of x; primitive by choice of modulus
        self._frob_tables: dict[int, list[int]] = {}
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if D <= _TABLE_MAX_DEGREE:
            self._build_tables()

    def __repr__(self) -> str:
        return f"FieldCtx(e={self.e}, m={self.m}, D={self.D}, modulus={self.modulus:#x})"

    def same_field(self, other: "FieldCtx") -> bool:
        return (self.e, self.m, self.modulus) == (other.e, other.m, other.modulus)

    def _build_tables(self) -> None:
        size = 1 << self.D
        exp = [0] * self.order
        log = [0] * size
        v = 1
        modulus = self.modulus
        D = self.D
        for k in range(self.order):
            exp[k] = v
            log[v] = k
            v <<= 1
            if v >> D:
                v ^= modulus
        self._exp = exp
        self._log = log

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % self.order]
        return _poly_mul(a, b, self.modulus, self.D)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self._exp is not None:
            return self._exp[(-self._log[a]) % self.order]
        return _poly_pow(a, self.order - 1, self.modulus, self.D)

    def pow(self, a: int, k: int) -> int:
        """a^k; negative k means inverse powers (requires a != 0)."""
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] * k) % self.order]
        k %= self.order
        return _poly_pow(a, k, self.modulus, self.D)

    # -- Galois structure -------------------------------------------------

    def _frob_table(self, k: int) -> list[int]:
        # table[b] = (x^b)^(2^k); Frobenius powers are GF(2)-linear, so one
        # XOR pass per application replaces k repeated squarings.
        table = self._frob_tables.get(k)
        if table is None:
            if k == 1:
                table = [self.mul(1 << b, 1 << b) for b in range(self.D)]
            else:
                sq = self._frob_table(1)
                table = [1 << b for b in range(self.D)]
                for _ in range(k):
                    table = [_apply_bit_table(sq, v) for v in table]
            self._frob_tables[k] = table
        return table

    def frobenius(self, x: int, k: int) -> int:
        """x^(2^k), for k >= 0."""
        if k < 0:
            raise ParameterError(f"frobenius power must be >= 0, got {k}")
        k %= self.D
        if k == 0:
            return x
        return _apply_bit_table(self._frob_table(k), x)

    def conjugate(self, x: int) -> int:
        """The involution x -> x^(q^m); fixes exactly the middle subfield F."""
        return self.frobenius(x, self.e * self.m)

    def in_subfield(self, x: int, deg: int) -> bool:
        """True iff x lies in the subfield of degree `deg` over GF(2)."""
        if deg <= 0 or self.D % deg != 0:
            raise ParameterError(f"degree {deg} does not divide D = {self.D}")
        return self.frobenius(x, deg) == x

    def rel_trace(self, x: int, from_deg: int, to_deg: int) -> int:
        """Relative trace from the degree-`from_deg` subfield onto the
        degree-`to_deg` one: sum of x^(2^(to_deg*j)), j = 0..r-1."""
        if from_deg % to_deg != 0 or self.D % from_deg != 0 or to_deg <= 0:
            raise ParameterError(
                f"need to_deg | from_deg | D, got {to_deg} | {from_deg} | {self.D}")
        if not self.in_subfield(x, from_deg):
            raise DomainError(f"{x:#x} is not in the subfield of degree {from_deg}")
        acc = 0
        y = x
        for _ in range(from_deg // to_deg):
            acc ^= y
            y = self.frobenius(y, to_deg)
        return acc

    # -- distinguished elements and subfield enumeration -------------------

    def subfield_generator(self, deg: int) -> int:
        """Generator of the multiplicative group of the degree-`deg` subfield."""
        if deg <= 0 or self.D % deg != 0:
            raise ParameterError(f"degree {deg} does not divide D = {self.D}")
        return self.pow(self.g, self.order // ((1 << deg) - 1))

    def subfield_elements(self, deg: int):
        """Yield all 2^deg elements of the degree-`deg` subfield."""
        yield 0
        gen = self.subfield_generator(deg)
        v = 1
        for _ in range((1 << deg) - 1):
            yield v
            v = self.mul(v, gen)

    def circle_generator(self) -> int:
        """Canonical generator g^(q^m - 1) of the norm-1 circle group C;
        its order is q^m + 1."""
        return self.pow(self.g, (1 << (self.e * self.m)) - 1)


def _apply_bit_table(table: list[int], x: int) -> int:
    r = 0
    while x:
        low = x & -x
        r ^= table[low.bit_length() - 1]
        x ^= low
    return r


@functools.lru_cache(maxsize=None)
def _cached_context(e: int, m: int, max_degree: int) -> FieldCtx:
    return FieldCtx(e, m, max_degree=max_degree)


def make_context(e: int, m: int, max_degree: int = DEFAULT_MAX_DEGREE) -> FieldCtx:
    """Context for GF(2^(2em)) with the canonical smallest primitive modulus.

    Deterministic: identical arguments give the identical (cached) context.
    """
    return _cached_context(e, m, max_degree)


@dataclass(frozen=True)
class TowerSpec:
    """A divisor chain m = m_0 > m_1 > ... > m_n = 1 of subfields of F.

    Position i names the subfield F_i = GF(q^{m_i}); the quadratic subfield
    F_i^(2) = GF(q^{2 m_i}) sits above each.
    """

    ctx: FieldCtx
    chain: tuple[int, ...]

    def __post_init__(self):
        chain = tuple(self.chain)
        object.__setattr__(self, "chain", chain)
        if len(chain) < 2:
            raise ParameterError(f"chain must have at least two terms, got {chain}")
        if chain[0] != self.ctx.m:
            raise ParameterError(
                f"chain must start at m = {self.ctx.m}, got {chain}")
        if chain[-1] != 1:
            raise ParameterError(f"chain must end at 1, got {chain}")
        for a, b in zip(chain, chain[1:]):
            if a <= b or a % b != 0:
                raise ParameterError(
                    f"chain must be strictly decreasing with each term divisible "
                    f"by the next, got {chain}")

    @property
    def n(self) -> int:
        return len(self.chain) - 1

    def subfield_deg(self, i: int) -> int:
        """Degree over GF(2) of F_i."""
        return self.ctx.e * self.chain[i]

    def quadratic_deg(self, i: int) -> int:
        """Degree over GF(2) of F_i^(2)."""
        return 2 * self.ctx.e * self.chain[i]


def zeta_element(tower: TowerSpec, i: int, k: int) -> int:
    """The k-th element of the norm-1 subgroup C with F_i^(2), namely
    theta_0^(k * (q^m+1)/(q^{m_i}+1)).

    The subgroup C ^ F_i^(2) is cyclic of order q^{m_i} + 1 (m/m_i is odd),
    and the result is 1 exactly when q^{m_i} + 1 divides k.
    """
    if not 1 <= i <= tower.n:
        raise ParameterError(f"subfield index {i} out of range 1..{tower.n}")
    if k < 1:
        raise ParameterError(f"exponent k must be >= 1, got {k}")
    ctx = tower.ctx
    full = (1 << (ctx.e * ctx.m)) + 1
    sub = (1 << (ctx.e * tower.chain[i])) + 1
    return ctx.pow(ctx.circle_generator(), k * (full // sub))
