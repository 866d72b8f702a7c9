"""Finitely generated exterior algebra over the integers, Z2-graded.

Generators v1..vm anticommute (vi*vj = -vj*vi, so vi*vi = 0); a basis
element is a strictly increasing product of generators, stored internally
as a bitmask.  The even/odd grading by subset size makes this the standard
concrete Lie-nilpotent ring of index 2: [[x, y], z] = 0 holds identically.
"""

from __future__ import annotations

import random
from types import MappingProxyType
from typing import Iterable, Mapping

from .rings import Ring, commutator

MAX_RANK = 16


class GrassmannAlgebra(Ring):
    """Exterior algebra on ``rank`` anticommuting generators over the integers."""

    is_z2_graded = True

    def __init__(self, rank: int):
        if not 0 <= rank <= MAX_RANK:
            raise ValueError(f"rank must be between 0 and {MAX_RANK}")
        self.rank = rank

    @property
    def zero(self) -> GrassmannElem:
        return GrassmannElem._raw(self, {})

    @property
    def one(self) -> GrassmannElem:
        return GrassmannElem._raw(self, {0: 1})

    def from_int(self, k: int) -> GrassmannElem:
        return GrassmannElem._raw(self, {0: k} if k else {})

    def gen(self, i: int) -> GrassmannElem:
        """The generator v_i (1-based index)."""
        if not 1 <= i <= self.rank:
            raise KeyError(f"generator index {i} out of range 1..{self.rank}")
        return GrassmannElem._raw(self, {1 << (i - 1): 1})

    def gens(self) -> tuple[GrassmannElem, ...]:
        return tuple(self.gen(i) for i in range(1, self.rank + 1))

    def element(self, terms: Mapping[Iterable[int], int]) -> GrassmannElem:
        """Build an element from {(ascending 1-based indices): coefficient}."""
        return GrassmannElem(self, terms)

    def random_element(
        self,
        rng: random.Random,
        max_terms: int = 3,
        coeff_bound: int = 4,
        parity: int | None = None,
    ) -> GrassmannElem:
        """Random sparse element; parity 0/1 restricts to even/odd subsets."""
        if parity == 1 and self.rank == 0:
            return self.zero
        terms: dict[int, int] = {}
        for _ in range(rng.randint(1, max_terms)):
            mask = rng.randrange(1 << self.rank) if self.rank else 0
            while parity is not None and mask.bit_count() % 2 != parity:
                mask = rng.randrange(1 << self.rank)
            coeff = rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])
            terms[mask] = terms.get(mask, 0) + coeff
        return GrassmannElem._raw(self, {m: c for m, c in terms.items() if c})

    def __eq__(self, other) -> bool:
        return isinstance(other, GrassmannAlgebra) and self.rank == other.rank

    def __hash__(self) -> int:
        return hash(("GrassmannAlgebra", self.rank))

    def __repr__(self) -> str:
        return f"GrassmannAlgebra(rank={self.rank})"


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _merge_sign(left: int, right: int) -> int:
    # parity of the number of generator swaps needed to sort left|right:
    # each generator in `right` passes every larger-index generator of `left`
    swaps = 0
    rest = right
    while rest:
        low = rest & -rest
        swaps ^= (left >> low.bit_length()).bit_count() & 1
        rest ^= low
    return -1 if swaps else 1


class GrassmannElem:
    """Immutable exterior-algebra element: sparse table subset -> coefficient."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: GrassmannAlgebra, terms: Mapping):
        clean: dict[int, int] = {}
        for key, coeff in terms.items():
            if isinstance(key, int):
                mask = key
            else:
                indices = tuple(key)
                if list(indices) != sorted(set(indices)):
                    raise ValueError(f"subset {indices!r} must be strictly increasing")
                mask = 0
                for i in indices:
                    if not 1 <= i <= algebra.rank:
                        raise ValueError(f"generator index {i} out of range 1..{algebra.rank}")
                    mask |= 1 << (i - 1)
            if mask >> algebra.rank:
                raise ValueError("subset uses generators beyond the algebra rank")
            coeff = int(coeff)
            if coeff:
                clean[mask] = clean.get(mask, 0) + coeff
        self.algebra = algebra
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def _raw(cls, algebra: GrassmannAlgebra, terms: dict) -> GrassmannElem:
        self = object.__new__(cls)
        self.algebra = algebra
        self._terms = terms
        return self

    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        """Terms keyed by ascending 1-based generator indices."""
        return MappingProxyType({_mask_to_indices(m): c for m, c in self._terms.items()})

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other) -> GrassmannElem | None:
        if isinstance(other, GrassmannElem):
            if other.algebra != self.algebra:
                raise ValueError("operands live in exterior algebras of different rank")
            return other
        if isinstance(other, int):
            return self.algebra.from_int(other)
        return None

    def __add__(self, other) -> GrassmannElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mask, coeff in other._terms.items():
            new = out.get(mask, 0) + coeff
            if new:
                out[mask] = new
            else:
                del out[mask]
        return GrassmannElem._raw(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> GrassmannElem:
        return GrassmannElem._raw(self.algebra, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> GrassmannElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> GrassmannElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> GrassmannElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                if m1 & m2:
                    continue
                value = c1 * c2 * _merge_sign(m1, m2)
                mask = m1 | m2
                new = get(mask, 0) + value
                if new:
                    out[mask] = new
                else:
                    del out[mask]
        return GrassmannElem._raw(self.algebra, out)

    def __rmul__(self, other) -> GrassmannElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, exponent: int) -> GrassmannElem:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.algebra.one
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return (
            isinstance(other, GrassmannElem)
            and self.algebra == other.algebra
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mask in sorted(self._terms, key=lambda m: (m.bit_count(), _mask_to_indices(m))):
            coeff = self._terms[mask]
            body = "*".join(f"v{i}" for i in _mask_to_indices(mask))
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            pieces.append(("-" if coeff < 0 else "+", text))
        sign, text = pieces[0]
        rendered = f"-{text}" if sign == "-" else text
        for sign, text in pieces[1:]:
            rendered += f" {sign} {text}"
        return rendered

    def __repr__(self) -> str:
        return f"<GrassmannElem {self}>"


def graded_parts(x: GrassmannElem) -> tuple[GrassmannElem, GrassmannElem]:
    """Split x into (even, odd) components by subset-size parity."""
    even = {m: c for m, c in x._terms.items() if m.bit_count() % 2 == 0}
    odd = {m: c for m, c in x._terms.items() if m.bit_count() % 2 == 1}
    return GrassmannElem._raw(x.algebra, even), GrassmannElem._raw(x.algebra, odd)


def lie_nilpotency_check(
    rank: int, index: int, trials: int = 20, seed: int = 0
) -> bool:
    """Test the left-normed commutator identity of length index+1 on random elements.

    Evaluates [[...[[x1,x2],x3],...],x_{index+1}] over the rank-m exterior
    algebra on seeded random tuples (plus the generators themselves, so a
    failure at index 1 is always witnessed); True iff every evaluation is zero.
    """
    if index < 1:
        raise ValueError("index must be at least 1")
    algebra = GrassmannAlgebra(rank)
    rng = random.Random(seed)
    pools = []
    if rank:
        gens = algebra.gens()
        pools.append(tuple(gens[i % rank] for i in range(index + 1)))
    for _ in range(trials):
        pools.append(tuple(algebra.random_element(rng) for _ in range(index + 1)))
    for elements in pools:
        nested = elements[0]
        for x in elements[1:]:
            nested = commutator(nested, x)
        if not nested.is_zero():
            return False
    return True
