"""Exterior algebra on a free module with a fixed ordered basis.

Basis multivectors e_S are indexed by bitmasks; bit i stands for e_{i+1}.
Coefficients are any ring elements supporting + and * (LaurentPoly,
RingFrac, int).
"""

from __future__ import annotations

from itertools import combinations


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: int):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def merge_sign(a: int, b: int) -> int:
    """Sign of e_A ^ e_B = sign * e_{A u B} for disjoint masks: (-1) to the
    number of pairs (i in A, j in B) with i > j."""
    inv = 0
    while b:
        low = b & -b
        # elements of A above this element of B
        inv += bin(a & ~((low << 1) - 1)).count("1")
        b ^= low
    return -1 if inv & 1 else 1


def subsets(m: int, k: int):
    """k-subsets of range(m) in lexicographic order (the block basis order)."""
    return list(combinations(range(m), k))


def complement(sub, m):
    s = set(sub)
    return tuple(i for i in range(m) if i not in s)


def shuffle_sign(first, m) -> int:
    """Sign of e_first ^ e_rest = sign * e_1 ^ ... ^ e_m."""
    a = mask_of(first)
    return merge_sign(a, ((1 << m) - 1) ^ a)


class MultiVector:
    """Homogeneous element of the exterior algebra of a rank-m free module."""

    __slots__ = ("m", "coeffs", "degree")

    def __init__(self, m: int, coeffs=None, degree=None):
        self.m = m
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}
        degs = {bin(k).count("1") for k in self.coeffs}
        if len(degs) > 1:
            raise ValueError("multivector is not homogeneous")
        self.degree = degs.pop() if degs else degree

    @classmethod
    def scalar(cls, m, c):
        return cls(m, {0: c}, 0)

    @classmethod
    def basis(cls, m, indices, one=1):
        return cls(m, {mask_of(indices): one}, len(indices))

    @classmethod
    def from_vector(cls, vec):
        return cls(len(vec), {1 << i: c for i, c in enumerate(vec)}, 1)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, indices, zero=0):
        return self.coeffs.get(mask_of(indices), zero)

    def wedge(self, other: "MultiVector") -> "MultiVector":
        if self.m != other.m:
            raise ValueError("ambient ranks differ")
        out = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                if a & b:
                    continue
                c = x * y
                if merge_sign(a, b) < 0:
                    c = -c
                k = a | b
                out[k] = out[k] + c if k in out else c
        deg = None
        if self.degree is not None and other.degree is not None:
            deg = self.degree + other.degree
        return MultiVector(self.m, out, deg)

    __xor__ = wedge

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return MultiVector(self.m, out, self.degree if self.degree is not None
                           else other.degree)

    def __neg__(self):
        return MultiVector(self.m, {k: -v for k, v in self.coeffs.items()}, self.degree)

    def scale(self, c):
        return MultiVector(self.m, {k: c * v for k, v in self.coeffs.items()}, self.degree)

    def vol(self, zero=0):
        """Coefficient of e_1 ^ ... ^ e_m."""
        return self.coeffs.get((1 << self.m) - 1, zero)

    def items(self):
        """(index tuple, coefficient) pairs in lexicographic order."""
        return sorted(((indices_of(k), v) for k, v in self.coeffs.items()),
                      key=lambda kv: kv[0])

    def __eq__(self, other):
        return (isinstance(other, MultiVector) and self.m == other.m
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.m, frozenset(self.coeffs)))

    def __repr__(self):
        terms = [f"{v}*e{''.join(str(i + 1) for i in s)}" for s, v in self.items()]
        return " + ".join(terms) if terms else "0"


def wedge_all(vectors, m=None):
    """v_1 ^ ... ^ v_k; the empty product is the scalar 1."""
    if not vectors:
        return MultiVector.scalar(m or 0, 1)
    out = MultiVector.from_vector(vectors[0])
    for v in vectors[1:]:
        out = out.wedge(MultiVector.from_vector(v))
    return out
