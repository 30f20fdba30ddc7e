"""Closed-form generator descriptions of the derived-functor tables.

A :class:`FreeAlgebraSpec` names a free bigraded algebra: an ordered list of
factors (divided-power, exterior or symmetric, optionally weight-twisted)
on families of generators, joined by plain or weight-signed tensor products.
Each generator carries a cohomological degree, a weight ``p**twist``, its
twist, and a multiplicity.

The exported builders produce, for any prime and any pair of the three
classical functor flavors (symmetric ``S``, exterior ``Lambda``, divided
power ``Gamma``), the generator description of the graded maps-algebra
between their twisted versions; :func:`poincare_dims` turns any spec into
exact bigraded dimension tables.  Two transforms implement the reduction of
twisted pairs to untwisted ones: :func:`twist_shift` trades a source twist
for a degree regrading of the target, and :func:`expand_by_even_offsets`
spreads each generator into a family along even degree offsets.  Composing
them from the untwisted tables must match the direct closed forms of
:func:`ext_twisted_predict` — that equality is this module's central
self-consistency property, exercised by the verification suites.

Integral tables for the symmetric source are assembled separately in
:func:`ext_integral_predict` from the Koszul closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from .algebra import (
    DIVIDED,
    EXTERIOR,
    SYMMETRIC,
    FreeAlgebra,
    WdgAlgebra,
    tensor_signed,
    weight_twist,
)
from .homology import AbelianGroup, TableKey
from .koszul import predicted_bar_homology
from .rings import GF, Ring

#: Functor names as used throughout the CLI and the table builders.
FUNCTORS = (SYMMETRIC, EXTERIOR, DIVIDED)  # "S", "Lambda", "Gamma"

_DUAL = {SYMMETRIC: DIVIDED, DIVIDED: SYMMETRIC, EXTERIOR: EXTERIOR}


def duality_flip(source: str, target: str) -> Tuple[str, str]:
    """The dual pair ``(Y*, X*)`` with S* = Gamma, Gamma* = S, Lambda* = Lambda;
    its table coincides with the table of ``(X, Y)``."""
    return _DUAL[target], _DUAL[source]


@dataclass(frozen=True)
class GeneratorFamily:
    """One generator: cohomological degree, weight (= p**twist), twist,
    multiplicity."""

    degree: int
    weight: int
    twist: int
    multiplicity: int = 1


@dataclass(frozen=True)
class AlgebraFactor:
    """A free factor on a generator list, optionally weight-twisted."""

    flavor: str
    generators: Tuple[GeneratorFamily, ...]
    weight_twisted: bool = False


@dataclass(frozen=True)
class FreeAlgebraSpec:
    """An ordered tensor product of free factors over F_p.

    ``junction_eps[i]`` is the sign parameter of the tensor product joining
    factor ``i`` to factor ``i+1`` (0 = plain, 1 = weight-signed).
    """

    p: int
    factors: Tuple[AlgebraFactor, ...]
    junction_eps: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        expected = max(len(self.factors) - 1, 0)
        if len(self.junction_eps) != expected:
            raise ValueError(
                f"need {expected} junction signs for {len(self.factors)} factors"
            )

    def truncate(self, weight_max: int) -> "FreeAlgebraSpec":
        """Drop generators too heavy to touch any slice within the cap."""
        factors = tuple(
            replace(
                f,
                generators=tuple(g for g in f.generators if g.weight <= weight_max),
            )
            for f in self.factors
        )
        return replace(self, factors=factors)

    def scaled_multiplicity(self, m: int) -> "FreeAlgebraSpec":
        factors = tuple(
            replace(
                f,
                generators=tuple(
                    replace(g, multiplicity=g.multiplicity * m) for g in f.generators
                ),
            )
            for f in self.factors
        )
        return replace(self, factors=factors)

    def all_generators(self) -> List[Tuple[str, GeneratorFamily]]:
        return [(f.flavor, g) for f in self.factors for g in f.generators]


def _spec(p: int, *factors: AlgebraFactor, eps: Iterable[int] = ()) -> FreeAlgebraSpec:
    eps = tuple(eps)
    if not eps:
        eps = (0,) * max(len(factors) - 1, 0)
    return FreeAlgebraSpec(p, tuple(factors), eps)


# ----------------------------------------------------------------------
# dimension tables
# ----------------------------------------------------------------------


def _family_series(
    flavor: str, fam: GeneratorFamily, weight_max: int
) -> Dict[TableKey, int]:
    """Bigraded Hilbert series of a free algebra on a single family,
    truncated by weight: binomials for an exterior generator, multiset
    coefficients for symmetric/divided-power ones."""
    if fam.weight < 1:
        raise ValueError("generator weights must be >= 1")
    out: Dict[TableKey, int] = {}
    j = 0
    while j * fam.weight <= weight_max:
        if flavor == EXTERIOR:
            if j > fam.multiplicity:
                break
            c = comb(fam.multiplicity, j)
        else:
            c = comb(fam.multiplicity + j - 1, j)
        if c:
            out[(j * fam.degree, j * fam.weight)] = c
        j += 1
    return out


def _convolve(
    a: Dict[TableKey, int], b: Dict[TableKey, int], weight_max: int
) -> Dict[TableKey, int]:
    out: Dict[TableKey, int] = {}
    for (i1, d1), c1 in a.items():
        for (i2, d2), c2 in b.items():
            if d1 + d2 > weight_max:
                continue
            key = (i1 + i2, d1 + d2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def poincare_dims(spec: FreeAlgebraSpec, weight_max: int) -> Dict[TableKey, int]:
    """Exact dimensions per (cohomological degree, weight), zeros omitted.

    Weight twists and junction signs change products, never dimensions.
    """
    table: Dict[TableKey, int] = {(0, 0): 1}
    for flavor, fam in spec.all_generators():
        table = _convolve(table, _family_series(flavor, fam, weight_max), weight_max)
    return dict(sorted(table.items()))


def build_spec_algebra(spec: FreeAlgebraSpec, ring: Optional[Ring] = None) -> WdgAlgebra:
    """Realize a spec as an explicit algebra (zero differential), for
    structural checks such as (1,eps)-commutativity."""
    ring = ring if ring is not None else GF(spec.p)

    def one(factor: AlgebraFactor) -> WdgAlgebra:
        alg: WdgAlgebra = FreeAlgebra(
            factor.flavor,
            [(g.degree, g.weight, g.multiplicity) for g in factor.generators],
            ring,
        )
        return weight_twist(alg) if factor.weight_twisted else alg

    if not spec.factors:
        return FreeAlgebra(SYMMETRIC, [], ring)
    out = one(spec.factors[0])
    for eps, factor in zip(spec.junction_eps, spec.factors[1:]):
        out = tensor_signed(out, one(factor), eps)
    return out


# ----------------------------------------------------------------------
# generator lists for the computed theories
# ----------------------------------------------------------------------


def _twist_range(p: int, weight_max: int, offset: int = 0) -> Iterable[int]:
    """All k >= 0 with p**(k + offset) <= weight_max."""
    k = 0
    while p ** (k + offset) <= weight_max:
        yield k
        k += 1


def cartan_field_generators(
    p: int, n: int, weight_max: int, m: int = 1
) -> FreeAlgebraSpec:
    """Generator description of the mod-p homology of the n-fold bar
    construction of divided powers on m weight-1 generators in degree 2.

    One family per admissible word of height ``n + 2``: degree the word
    degree, weight ``p**twisting``.  For odd primes, odd-degree words span
    an exterior factor and even-degree words a divided-power factor; at
    p = 2 everything is divided-power.  Words heavier than the cap are cut.
    """
    from .words import enumerate_words, word_degree, word_twisting

    height = n + 2
    t_max = 0
    while p ** (t_max + 1) <= weight_max:
        t_max += 1
    bound = (height + 2 * t_max) * p**t_max
    ext: List[GeneratorFamily] = []
    div: List[GeneratorFamily] = []
    for w in enumerate_words(p, height, bound):
        t = word_twisting(w)
        if p**t > weight_max:
            continue
        fam = GeneratorFamily(word_degree(w, p), p**t, t, m)
        if p != 2 and fam.degree % 2:
            ext.append(fam)
        else:
            div.append(fam)
    factors: List[AlgebraFactor] = []
    if ext:
        factors.append(AlgebraFactor(EXTERIOR, tuple(ext)))
    factors.append(AlgebraFactor(DIVIDED, tuple(div)))
    return _spec(p, *factors)


def ext_twisted_predict(
    source: str,
    target: str,
    p: int,
    s: int,
    t: int,
    weight_max: int,
    m: int = 1,
) -> FreeAlgebraSpec:
    """Closed-form generator description of the graded maps-algebra from the
    (s+t)-twisted source to the s-twisted target, truncated by weight.

    All nine flavor pairs are covered.  ``m`` is the rank of the evaluation
    variable (each family repeats m times).
    """
    if source not in FUNCTORS or target not in FUNCTORS:
        raise ValueError(f"functors must be in {FUNCTORS}")
    if s < 0 or t < 0:
        raise ValueError("twists must be >= 0")
    W = weight_max
    ps = p**s

    def fam(degree: int, twist: int) -> GeneratorFamily:
        return GeneratorFamily(degree, p**twist, twist, m)

    def single(flavor: str, fams: Iterable[GeneratorFamily]) -> FreeAlgebraSpec:
        kept = tuple(f for f in fams if f.weight <= W)
        return _spec(p, AlgebraFactor(flavor, kept))

    # Pairs with symmetric target: the dual flavor of the source on one
    # parametrized family at even degrees.
    if target == SYMMETRIC:
        return single(
            _DUAL[source], (fam(2 * i * p**t, t + s) for i in range(ps))
        )

    # Pairs with source Gamma or the exterior-exterior pair: a single family.
    if source == DIVIDED or (source == EXTERIOR and target == EXTERIOR):
        if target == EXTERIOR:
            flavor = EXTERIOR if source == DIVIDED else DIVIDED
            degrees = ((2 * i + 1) * p**t - 1 for i in range(ps))
        else:  # target Gamma, source Gamma
            flavor = DIVIDED
            degrees = ((2 * i + 2) * p**t - 2 for i in range(ps))
        return single(flavor, (fam(a, t + s) for a in degrees))

    # Remaining sources: S with target Lambda/Gamma, Lambda with target Gamma.
    if target == EXTERIOR:  # source S
        if p == 2:
            fams = [
                fam((2 * i + 1) * 2 ** (k + t) - 1, k + t + s)
                for k in _twist_range(2, W, offset=t + s)
                for i in range(ps)
            ]
            return single(DIVIDED, fams)
        left = [
            fam((2 * i + 1) * p ** (k + t) - 1, k + t + s)
            for k in _twist_range(p, W, offset=t + s)
            for i in range(ps)
        ]
        right = [
            fam((2 * i + 1) * p ** (k + 1 + t) - 2, k + 1 + t + s)
            for k in _twist_range(p, W, offset=1 + t + s)
            for i in range(ps)
        ]
        return _spec(
            p,
            AlgebraFactor(EXTERIOR, tuple(f for f in left if f.weight <= W)),
            AlgebraFactor(DIVIDED, tuple(f for f in right if f.weight <= W), True),
            eps=(1,),
        )

    if source == EXTERIOR:  # (Lambda, Gamma)
        if p == 2:
            fams = [
                fam((2 * i + 2) * 2 ** (k + t) - 2**k - 1, k + t + s)
                for k in _twist_range(2, W, offset=t + s)
                for i in range(ps)
            ]
            return single(DIVIDED, fams)
        left = [
            fam((2 * i + 2) * p ** (k + t) - p**k - 1, k + t + s)
            for k in _twist_range(p, W, offset=t + s)
            for i in range(ps)
        ]
        right = [
            fam((2 * i + 2) * p ** (k + 1 + t) - p ** (k + 1) - 2, k + 1 + t + s)
            for k in _twist_range(p, W, offset=1 + t + s)
            for i in range(ps)
        ]
        return _spec(
            p,
            AlgebraFactor(EXTERIOR, tuple(f for f in left if f.weight <= W)),
            AlgebraFactor(DIVIDED, tuple(f for f in right if f.weight <= W), True),
            eps=(1,),
        )

    # (S, Gamma)
    if p == 2:
        fams = [
            fam((2 * i + 2) * 2 ** (k + l + t) - 2**k - 1, k + l + t + s)
            for k in _twist_range(2, W, offset=t + s)
            for l in _twist_range(2, W, offset=k + t + s)
            for i in range(ps)
        ]
        return single(DIVIDED, fams)
    first = [
        fam((2 * i + 2) * p ** (k + t) - 2, k + t + s)
        for k in _twist_range(p, W, offset=t + s)
        for i in range(ps)
    ]
    second = [
        fam((2 * i + 2) * p ** (k + l + 1 + t) - 2 * p**k - 1, k + l + 1 + t + s)
        for k in _twist_range(p, W, offset=1 + t + s)
        for l in _twist_range(p, W, offset=k + 1 + t + s)
        for i in range(ps)
    ]
    third = [
        fam((2 * i + 2) * p ** (k + l + 2 + t) - 2 * p ** (k + 1) - 2, k + l + 2 + t + s)
        for k in _twist_range(p, W, offset=2 + t + s)
        for l in _twist_range(p, W, offset=k + 2 + t + s)
        for i in range(ps)
    ]
    return _spec(
        p,
        AlgebraFactor(DIVIDED, tuple(f for f in first if f.weight <= W)),
        AlgebraFactor(EXTERIOR, tuple(f for f in second if f.weight <= W)),
        AlgebraFactor(DIVIDED, tuple(f for f in third if f.weight <= W)),
        eps=(0, 0),
    )


def ext_field_predict(
    source: str, target: str, p: int, weight_max: int, m: int = 1
) -> FreeAlgebraSpec:
    """Untwisted field tables: :func:`ext_twisted_predict` at s = t = 0."""
    return ext_twisted_predict(source, target, p, 0, 0, weight_max, m)


# ----------------------------------------------------------------------
# the two reduction transforms
# ----------------------------------------------------------------------

_REGRADE_PER_WEIGHT = {
    SYMMETRIC: lambda p, t: 0,
    EXTERIOR: lambda p, t: p**t - 1,
    DIVIDED: lambda p, t: 2 * (p**t - 1),
}


def twist_shift(spec: FreeAlgebraSpec, t: int, target: str) -> FreeAlgebraSpec:
    """Trade a source twist by ``t`` for a target-dependent regrading:
    each generator (a, w, r) becomes (a + w*alpha, w*p**t, r + t) with
    alpha = 0 / p**t - 1 / 2(p**t - 1) for target S / Lambda / Gamma."""
    if t < 0:
        raise ValueError("twist must be >= 0")
    alpha = _REGRADE_PER_WEIGHT[target](spec.p, t)
    scale = spec.p**t

    def shift(g: GeneratorFamily) -> GeneratorFamily:
        return GeneratorFamily(
            g.degree + g.weight * alpha, g.weight * scale, g.twist + t, g.multiplicity
        )

    factors = tuple(
        replace(f, generators=tuple(shift(g) for g in f.generators))
        for f in spec.factors
    )
    return replace(spec, factors=factors)


def expand_by_even_offsets(spec: FreeAlgebraSpec, s: int) -> FreeAlgebraSpec:
    """Spread each generator (a, w, r) into the p**s generators
    (a + 2i*p**r, w*p**s, r + s) for 0 <= i < p**s.

    This is the generator-level shadow of raising both twists by s: the
    offsets run over even multiples of p to the generator's own twist.
    """
    if s < 0:
        raise ValueError("parameter must be >= 0")
    p = spec.p
    count = p**s

    def expand(g: GeneratorFamily) -> Tuple[GeneratorFamily, ...]:
        return tuple(
            GeneratorFamily(
                g.degree + 2 * i * p**g.twist,
                g.weight * count,
                g.twist + s,
                g.multiplicity,
            )
            for i in range(count)
        )

    factors = tuple(
        replace(f, generators=tuple(ng for g in f.generators for ng in expand(g)))
        for f in spec.factors
    )
    return replace(spec, factors=factors)


# ----------------------------------------------------------------------
# integral tables
# ----------------------------------------------------------------------


def ext_integral_predict(
    source: str,
    target: str,
    m: int,
    weight_max: int,
    max_codegree: Optional[int] = None,
) -> Dict[TableKey, AbelianGroup]:
    """Integral tables for the symmetric source, assembled from the Koszul
    closed forms: keys are (cohomological degree, weight).

    Only ``source = "S"`` with target exterior or divided-power is defined
    integrally here; other sources reduce to field/duality cases.
    """
    if source != SYMMETRIC:
        raise ValueError("integral tables are computed for the symmetric source")
    if target == EXTERIOR:
        n = 1
    elif target == DIVIDED:
        n = 2
    else:
        raise ValueError("integral target must be Lambda or Gamma")
    homology = predicted_bar_homology(n, m, weight_max)
    out: Dict[TableKey, AbelianGroup] = {}
    for (j, d), group in homology.items():
        i = (n + 2) * d - j
        if i < 0:
            raise ValueError(f"class at ({j}, {d}) regrades to negative degree")
        if max_codegree is not None and i > max_codegree:
            continue
        out[(i, d)] = group
    return dict(sorted(out.items()))
