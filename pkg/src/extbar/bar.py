"""The (reduced, weighted) bar construction and its shuffle product.

For an augmented weighted dg-algebra ``A`` the bar construction has a basis
of words ``[a_1 | ... | a_n]`` whose letters are basis monomials of ``A`` of
positive weight.  A word has homological degree ``n + sum |a_i|`` (each
letter is suspended) and weight ``sum w(a_i)``; the empty word is the unit.
Weight slices stay finite dimensional because letters carry weight >= 1, so
a weight-``d`` word has at most ``d`` letters.

The differential combines letter-merging terms with letterwise inner
differentials, signed by the running suspended degree of the prefix; the
product is the signed shuffle.  When ``A`` is (1,1)-commutative its bar
construction is again a weighted dg-algebra of the same kind, so the
construction can be iterated (:func:`iterate_bar`).
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Mapping, Tuple

from .algebra import Bidegree, Element, Monomial, WdgAlgebra


class BarAlgebra(WdgAlgebra):
    """Bar construction of ``base``; monomials are tuples of base monomials."""

    def __init__(self, base: WdgAlgebra) -> None:
        super().__init__(base.ring)
        self.base = base

    def __repr__(self) -> str:
        return f"Bar({self.base!r})"

    @property
    def unit(self) -> Monomial:
        return ()

    def bidegree(self, word: Monomial) -> Bidegree:
        degree = len(word)
        weight = 0
        for letter in word:
            b = self.base.bidegree(letter)
            degree += b.degree
            weight += b.weight
        return Bidegree(degree, weight)

    def _build_weight_slice(self, weight: int) -> Dict[int, Tuple[Monomial, ...]]:
        if weight == 0:
            return {0: ((),)}
        out: Dict[int, List[Monomial]] = {}
        word: List[Monomial] = []

        def go(remaining: int, degree: int) -> None:
            if remaining == 0:
                out.setdefault(len(word) + degree, []).append(tuple(word))
                return
            for c in range(1, remaining + 1):
                for i, basis in self.base.weight_slice(c).items():
                    for letter in basis:
                        word.append(letter)
                        go(remaining - c, degree + i)
                        word.pop()

        go(weight, 0)
        return {i: tuple(ms) for i, ms in out.items()}

    def diff_monomial(self, word: Monomial) -> Element:
        n = len(word)
        degs = [self.base.bidegree(a).degree for a in word]
        # prefix[i] = i + |a_1| + ... + |a_i|, the suspended degree of the
        # first i letters; prefix[0] = 0.
        prefix = [0] * (n + 1)
        for i in range(1, n + 1):
            prefix[i] = prefix[i - 1] + 1 + degs[i - 1]
        out: Element = {}
        for i in range(1, n):
            sign = -1 if prefix[i] % 2 else 1
            for m, c in self.base.mul_monomials(word[i - 1], word[i]).items():
                self.add_into(out, {word[: i - 1] + (m,) + word[i + 1 :]: sign * c})
        for i in range(1, n + 1):
            sign = 1 if prefix[i - 1] % 2 else -1
            for m, c in self.base.diff_monomial(word[i - 1]).items():
                self.add_into(out, {word[: i - 1] + (m,) + word[i:]: sign * c})
        return out

    def mul_monomials(self, x: Monomial, y: Monomial) -> Element:
        p, q = len(x), len(y)
        sx = [self.base.bidegree(a).degree + 1 for a in x]  # suspended degrees
        sy = [self.base.bidegree(b).degree + 1 for b in y]
        out: Element = {}
        for xpos in itertools.combinations(range(p + q), p):
            in_x = set(xpos)
            ypos = [k for k in range(p + q) if k not in in_x]
            sign_exp = 0
            for i, pa in enumerate(xpos):
                for j, pb in enumerate(ypos):
                    if pb < pa:
                        sign_exp += sx[i] * sy[j]
            word: List[Monomial] = [None] * (p + q)  # type: ignore[list-item]
            for i, pa in enumerate(xpos):
                word[pa] = x[i]
            for j, pb in enumerate(ypos):
                word[pb] = y[j]
            self.add_into(out, {tuple(word): -1 if sign_exp % 2 else 1})
        return out


def bar(base: WdgAlgebra) -> BarAlgebra:
    """The bar construction of an augmented weighted dg-algebra."""
    return BarAlgebra(base)


def iterate_bar(base: WdgAlgebra, n: int) -> WdgAlgebra:
    """Apply the bar construction ``n`` times (``n = 0`` returns ``base``)."""
    if n < 0:
        raise ValueError("bar iteration count must be >= 0")
    out = base
    for _ in range(n):
        out = BarAlgebra(out)
    return out


def suspension_chain(bar_algebra: BarAlgebra, e: Mapping[Monomial, int]) -> Element:
    """Suspend an element of the base into one-letter words ``c -> [c]``.

    Raises ``ValueError`` if any monomial has weight zero (the unit component
    of the base has no suspension).  Raises degree by one, preserves weight,
    and anticommutes with the differentials, so cycles map to cycles.
    """
    base = bar_algebra.base
    for m in e:
        if base.bidegree(m).weight == 0:
            raise ValueError("cannot suspend a weight-zero element")
    return bar_algebra.element({(m,): c for m, c in e.items()})
