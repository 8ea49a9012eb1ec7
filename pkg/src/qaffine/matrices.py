"""Immutable sparse matrices over an arbitrary exact coefficient ring.

Entries may be :class:`~qaffine.scalars.Scalar` values, Python complex
numbers, or any ring-like objects supporting ``+``, ``*``, ``-`` and an
``is_zero`` predicate (or truthiness).  Zero entries are never stored.
"""
from __future__ import annotations

import json


def is_zero_entry(value) -> bool:
    probe = getattr(value, "is_zero", None)
    if probe is not None:
        return probe()
    return value == 0


class SparseMat:
    """A sparse ``rows x cols`` matrix with dict-of-position storage."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.data = {} if data is None else data

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries) -> "SparseMat":
        data = {}
        for i, j, v in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError("entry (%d, %d) outside %dx%d" % (i, j, rows, cols))
            if not is_zero_entry(v):
                acc = data.get((i, j))
                v = v if acc is None else acc + v
                if is_zero_entry(v):
                    data.pop((i, j), None)
                else:
                    data[i, j] = v
        return cls(rows, cols, data)

    @classmethod
    def identity(cls, n: int, one) -> "SparseMat":
        return cls(n, n, {(i, i): one for i in range(n)})

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int, one) -> "SparseMat":
        return cls.from_entries(rows, cols, [(i, j, one)])

    @classmethod
    def diagonal(cls, values) -> "SparseMat":
        values = list(values)
        n = len(values)
        return cls.from_entries(n, n, ((i, i, v) for i, v in enumerate(values)))

    # -- basic queries ----------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.data.get((i, j), 0)

    def entry(self, i: int, j: int, zero):
        return self.data.get((i, j), zero)

    def is_zero(self) -> bool:
        return not self.data

    def nnz(self) -> int:
        return len(self.data)

    def __eq__(self, other):
        if not isinstance(other, SparseMat):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if self.data.keys() != other.data.keys():
            diff = self - other
            return diff.is_zero()
        for key, v in self.data.items():
            if is_zero_entry(v - other.data[key]):
                continue
            return False
        return True

    def __hash__(self):
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def _check_shape(self, other: "SparseMat"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch: %dx%d vs %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))

    def __add__(self, other: "SparseMat") -> "SparseMat":
        self._check_shape(other)
        data = dict(self.data)
        for key, v in other.data.items():
            acc = data.get(key)
            v = v if acc is None else acc + v
            if is_zero_entry(v):
                data.pop(key, None)
            else:
                data[key] = v
        return SparseMat(self.rows, self.cols, data)

    def __neg__(self) -> "SparseMat":
        return SparseMat(self.rows, self.cols, {k: -v for k, v in self.data.items()})

    def __sub__(self, other: "SparseMat") -> "SparseMat":
        return self + (-other)

    def scaled(self, c) -> "SparseMat":
        if is_zero_entry(c):
            return SparseMat(self.rows, self.cols)
        return SparseMat(self.rows, self.cols, {k: c * v for k, v in self.data.items()})

    def __mul__(self, other: "SparseMat") -> "SparseMat":
        if not isinstance(other, SparseMat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch: %d vs %d" % (self.cols, other.rows))
        # group the right factor by row for sparse traversal
        by_row: dict[int, list] = {}
        for (k, j), v in other.data.items():
            by_row.setdefault(k, []).append((j, v))
        data: dict[tuple[int, int], object] = {}
        for (i, k), u in self.data.items():
            for j, v in by_row.get(k, ()):
                key = (i, j)
                acc = data.get(key)
                uv = u * v
                acc = uv if acc is None else acc + uv
                if is_zero_entry(acc):
                    data.pop(key, None)
                else:
                    data[key] = acc
        return SparseMat(self.rows, other.cols, data)

    def __pow__(self, n: int) -> "SparseMat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            raise ValueError("negative power not supported; invert explicitly")
        one = None
        for v in self.data.values():
            one = v * 0 + 1 if not hasattr(v, "ctx") else v.ctx.one
            break
        if one is None:
            raise ValueError("cannot infer the unit for an all-zero matrix")
        result = SparseMat.identity(self.rows, one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self) -> "SparseMat":
        return SparseMat(self.cols, self.rows, {(j, i): v for (i, j), v in self.data.items()})

    def map_entries(self, fn) -> "SparseMat":
        data = {}
        for key, v in self.data.items():
            image = fn(v)
            if not is_zero_entry(image):
                data[key] = image
        return SparseMat(self.rows, self.cols, data)

    # -- tensor structure --------------------------------------------------

    def kron(self, other: "SparseMat") -> "SparseMat":
        data = {}
        rc, cc = other.rows, other.cols
        for (i1, j1), u in self.data.items():
            for (i2, j2), v in other.data.items():
                w = u * v
                if not is_zero_entry(w):
                    data[i1 * rc + i2, j1 * cc + j2] = w
        return SparseMat(self.rows * rc, self.cols * cc, data)

    # -- serialization -----------------------------------------------------

    def to_json(self, render=str) -> str:
        entries = [[i, j, render(v)] for (i, j), v in sorted(self.data.items())]
        return json.dumps({"rows": self.rows, "cols": self.cols, "entries": entries},
                          separators=(", ", ": "))

    def __repr__(self):
        return "SparseMat(%dx%d, %d nonzero)" % (self.rows, self.cols, self.nnz())


def kron(*mats: SparseMat) -> SparseMat:
    result = mats[0]
    for m in mats[1:]:
        result = result.kron(m)
    return result


def embed(M: SparseMat, slot, legs: int = 3, dim: int | None = None) -> SparseMat:
    """Embed an operator on ``V (x) V`` into a tensor power of ``V``.

    ``slot`` picks the two legs it acts on (``12``, ``13``, ``23``, or
    ``21`` for the flip embedding into two legs); the remaining legs
    carry the identity.
    """
    slots = {12: (0, 1), 13: (0, 2), 23: (1, 2), 21: (1, 0)}
    if slot not in slots:
        raise ValueError("unknown slot %r" % (slot,))
    p, r = slots[slot]
    if max(p, r) >= legs:
        raise ValueError("slot %r does not fit in %d legs" % (slot, legs))
    if dim is None:
        d2 = M.rows
        dim = round(d2 ** 0.5)
        if dim * dim != d2 or M.cols != d2:
            raise ValueError("matrix is not an operator on V (x) V")
    total = dim ** legs
    strides = [dim ** (legs - 1 - t) for t in range(legs)]
    passive = [t for t in range(legs) if t not in (p, r)]
    data = {}
    for (i, j), v in M.data.items():
        i1, i2 = divmod(i, dim)
        j1, j2 = divmod(j, dim)
        base_i = i1 * strides[p] + i2 * strides[r]
        base_j = j1 * strides[p] + j2 * strides[r]
        # distribute over the identity on the passive legs
        offsets = [0]
        for t in passive:
            offsets = [o + k * strides[t] for o in offsets for k in range(dim)]
        for o in offsets:
            data[base_i + o, base_j + o] = v
    return SparseMat(total, total, data)
