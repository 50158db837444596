"""Dense GF(2) linear algebra on bit-packed rows.

A matrix is a list of Python ints; bit j of a row is the entry in column j.
Row operations are single XORs, so everything here is fast for the widths
this package needs (at most a few dozen columns).
"""

from __future__ import annotations


def echelon(rows: list[int]) -> list[int]:
    """Reduced echelon basis of the row space, one row per pivot.

    Pivots are the leading (highest) set bits; the result is sorted by
    leading bit, descending, and is canonical for the row space.
    """
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            piv = basis.get(lead)
            if piv is None:
                basis[lead] = r
                break
            r ^= piv
    for lead in sorted(basis):
        row = basis[lead]
        for l2 in basis:
            if l2 > lead and (basis[l2] >> lead) & 1:
                basis[l2] ^= row
    return [basis[lead] for lead in sorted(basis, reverse=True)]


def rank(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            piv = basis.get(lead)
            if piv is None:
                basis[lead] = r
                break
            r ^= piv
    return len(basis)


def reduce_row(basis_desc: tuple[int, ...], x: int) -> int:
    """Reduce x against an echelon basis (rows sorted by leading bit, descending)."""
    for row in basis_desc:
        lead = row.bit_length() - 1
        if (x >> lead) & 1:
            x ^= row
    return x


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of {x : popcount(x & row) is even for every constraint row}.

    Each constraint row is a linear functional on GF(2)^ncols; the result
    spans the simultaneous kernel.
    """
    red: list[int] = []
    pivots: list[int] = []
    for r in rows:
        for p, pr in zip(pivots, red):
            if (r >> p) & 1:
                r ^= pr
        if r:
            lead = r.bit_length() - 1
            for i, existing in enumerate(red):
                if (existing >> lead) & 1:
                    red[i] = existing ^ r
            pivots.append(lead)
            red.append(r)
    pivot_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, r in zip(pivots, red):
            if (r >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def inverse(rows: list[int], n: int) -> list[int]:
    """Invert an n-by-n bit matrix given as n packed rows.

    Raises ValueError if the matrix is singular.
    """
    aug = [rows[i] | (1 << (n + i)) for i in range(n)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if (aug[i] >> col) & 1:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular over GF(2)")
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        for i in range(n):
            if i != col and (aug[i] >> col) & 1:
                aug[i] ^= prow
    return [a >> n for a in aug]


def matvec(rows: list[int], x: int) -> int:
    """Apply a bit matrix to a column vector: bit i of the result is <row_i, x>."""
    y = 0
    for i, r in enumerate(rows):
        if (r & x).bit_count() & 1:
            y |= 1 << i
    return y
