"""Exact dense linear algebra over prime fields.

Rows are packed into single Python integers with fixed-width fields, so the
hot row operation (row -= c * pivot) is one bignum multiply-add instead of a
Python-level loop over entries.  Fields are left unreduced while a row is
being eliminated and renormalized once at the end; the field width is chosen
with headroom for the worst-case accumulated value, so no mid-pass carry
handling is needed.
"""

from ..errors import ValidationError


class RowEchelonGF:
    """Incremental row-echelon accumulator over F_p.

    ``add_row`` reduces the incoming row against the pivots collected so
    far and, if anything survives, installs the remainder as a new monic
    pivot.  ``rank`` is the number of pivots installed.
    """

    def __init__(self, p: int, ncols: int):
        if p < 2:
            raise ValidationError("modulus must be at least 2")
        if ncols < 0:
            raise ValidationError("column count must be nonnegative")
        self.p = p
        self.ncols = ncols
        # Largest value a field can reach: an initial entry < p plus one
        # multiply-add of size (p-1)^2 per pivot, at most ncols of them.
        worst = (p - 1) + ncols * (p - 1) * (p - 1)
        bits = max(16, worst.bit_length() + 1)
        self._bits = (bits + 7) // 8 * 8  # byte-aligned for fast packing
        self._bytes = self._bits // 8
        self._mask = (1 << self._bits) - 1
        self._pivots = []  # (column, packed_row), sorted by column; rows monic

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _pack(self, residues) -> int:
        w = self._bytes
        return int.from_bytes(
            b"".join(v.to_bytes(w, "little") for v in residues), "little"
        )

    def _unpack(self, row):
        w = self._bytes
        raw = row.to_bytes(self.ncols * w, "little")
        return [
            int.from_bytes(raw[i * w : (i + 1) * w], "little")
            for i in range(self.ncols)
        ]

    def add_row(self, entries) -> bool:
        """Absorb a dense row (any ints); True if the rank grew."""
        p = self.p
        residues = [int(v) % p for v in entries]
        if len(residues) != self.ncols:
            raise ValidationError("row length does not match column count")
        return self._absorb(self._pack(residues))

    def add_row_sparse(self, items) -> bool:
        """Absorb a row given as (column, value) pairs; True if rank grew."""
        p = self.p
        row = 0
        seen = {}
        for col, v in items:
            if not 0 <= col < self.ncols:
                raise ValidationError(f"column {col} out of range")
            seen[col] = (seen.get(col, 0) + int(v)) % p
        for col, v in seen.items():
            if v:
                row += v << (col * self._bits)
        return self._absorb(row)

    def _absorb(self, row: int) -> bool:
        if not row:
            return False
        p = self.p
        bits = self._bits
        mask = self._mask
        for col, piv in self._pivots:
            c = ((row >> (col * bits)) & mask) % p
            if c:
                # Adds p-c times the monic pivot: the field at `col` becomes
                # a multiple of p, and only columns past earlier pivots grow.
                row += (p - c) * piv
        residues = [v % p for v in self._unpack(row)]
        lead = next((i for i, v in enumerate(residues) if v), None)
        if lead is None:
            return False
        inv = pow(residues[lead], p - 2, p)
        monic = self._pack(v * inv % p for v in residues)
        self._pivots.append((lead, monic))
        self._pivots.sort(key=lambda t: t[0])
        return True


def rank_mod(rows, p: int, ncols: int | None = None) -> int:
    """Rank of a matrix (list of dense rows) over F_p."""
    rows = [list(r) for r in rows]
    if ncols is None:
        if not rows:
            return 0
        ncols = len(rows[0])
    ech = RowEchelonGF(p, ncols)
    for r in rows:
        ech.add_row(r)
    return ech.rank


def det_mod(matrix, p: int) -> int:
    """Determinant of a square matrix over F_p, as an int in [0, p)."""
    m = [[int(v) % p for v in row] for row in matrix]
    k = len(m)
    for row in m:
        if len(row) != k:
            raise ValidationError("determinant needs a square matrix")
    det = 1
    for col in range(k):
        piv = next((r for r in range(col, k) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = (-det) % p
        det = (det * m[col][col]) % p
        inv = pow(m[col][col], p - 2, p)
        for r in range(col + 1, k):
            c = (m[r][col] * inv) % p
            if c:
                m[r] = [(a - c * b) % p for a, b in zip(m[r], m[col])]
    return det % p
