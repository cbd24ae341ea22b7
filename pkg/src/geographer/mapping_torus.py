"""Cohomology of the mapping torus of a surface diffeomorphism.

For a twist word phi on a genus g surface, the mapping torus Y fibers over
the circle and its cohomology is controlled by the map A = phi^* - 1 on
H^1 of the fiber: H^1(Y) is spanned by the pullback theta of the circle
volume class together with lifts of the fixed classes of phi^*, and the
connecting map mu identifies H^2(Y) modulo the fiber class with the free
part of the cokernel of A. Degeneracy and nullity downstream are real
ranks, so all bases here are rational-rank data; the integral torsion of A
is computed and reported as a diagnostic only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import linalg, surfaces
from .errors import ConsistencyError
from .surfaces import TwistWord


@dataclass(frozen=True)
class MappingTorus:
    """Mapping torus of a twist word; the monodromy matrix is derived."""

    word: TwistWord

    @property
    def genus(self) -> int:
        return self.word.genus

    @cached_property
    def monodromy(self) -> np.ndarray:
        m = surfaces.compose_word(self.word)
        m.setflags(write=False)
        return m


@dataclass(frozen=True)
class WangData:
    """Ranks and tagged bases of H^1(Y) and H^2(Y).

    ``invariant_basis`` rows span the fixed lattice of the monodromy on
    H^1 of the fiber; together with theta they give H^1(Y). ``mu_basis``
    rows are fiber classes whose images under the connecting map, wedged
    with theta, complete the fiber volume class Omega to a basis of H^2(Y).
    ``torsion`` lists the nontrivial elementary divisors of phi^* - 1.
    """

    genus: int
    b1: int
    b2: int
    invariant_basis: tuple[tuple[int, ...], ...]
    mu_basis: tuple[tuple[int, ...], ...]
    torsion: tuple[int, ...]
    h1_tags: tuple[str, ...]
    h2_tags: tuple[str, ...]

    def __post_init__(self):
        if self.b1 != 1 + len(self.invariant_basis):
            raise ConsistencyError("b1(Y) must be 1 + dim of the fixed subspace")
        if self.b2 != self.b1:
            raise ConsistencyError("a closed oriented 3-manifold has b1 = b2")
        if len(self.mu_basis) != self.b2 - 1:
            raise ConsistencyError("mu image must have rank b2(Y) - 1")

    @property
    def invariant_matrix(self) -> np.ndarray:
        return linalg.to_matrix(self.invariant_basis) if self.invariant_basis \
            else linalg.zeros(0, 2 * self.genus)


def _wedge_tag(vector, genus: int) -> str:
    symbol = surfaces.class_symbol(vector, genus)
    multi_term = "+" in symbol or "-" in symbol[1:]
    return f"({symbol})^theta" if multi_term else f"{symbol}^theta"


def wang_cohomology(
    torus: MappingTorus,
    invariant_basis=None,
    mu_basis=None,
) -> WangData:
    """Wang-sequence cohomology data of a mapping torus.

    Optional preferred bases replace the generically computed ones after
    being verified exactly: a preferred invariant basis must be a saturated
    spanning set of ker(phi^* - 1), and a preferred mu basis must map to a
    lattice basis of the free part of coker(phi^* - 1). A failed check
    raises :class:`ConsistencyError`.
    """
    g = torus.genus
    n = 2 * g
    a = torus.monodromy - linalg.identity(n)
    sf = linalg.smith_form(a)
    fixed_rank = n - sf.rank

    if invariant_basis is None:
        inv = linalg.kernel_basis(a)
    else:
        inv = linalg.to_matrix(invariant_basis) if len(invariant_basis) else linalg.zeros(0, n)
        if inv.shape != (fixed_rank, n):
            raise ConsistencyError(
                f"invariant basis has shape {inv.shape}, expected ({fixed_rank}, {n})"
            )
        if fixed_rank and not (a @ inv.T == 0).all():
            raise ConsistencyError("invariant basis vector not fixed by the monodromy")
        if fixed_rank and linalg.elementary_divisors(inv):
            raise ConsistencyError("invariant basis does not span a saturated lattice")

    if mu_basis is None:
        mu = linalg.cokernel_free_basis(a)
    else:
        mu = linalg.to_matrix(mu_basis) if len(mu_basis) else linalg.zeros(0, n)
        if mu.shape != (fixed_rank, n):
            raise ConsistencyError(
                f"mu basis has shape {mu.shape}, expected ({fixed_rank}, {n})"
            )
        if fixed_rank:
            coords = linalg.cokernel_free_coordinates(sf, mu)
            if not linalg.is_unimodular(coords):
                raise ConsistencyError("mu basis is not a lattice basis of the free cokernel")

    inv_rows = tuple(tuple(int(x) for x in row) for row in inv)
    mu_rows = tuple(tuple(int(x) for x in row) for row in mu)
    return WangData(
        genus=g,
        b1=fixed_rank + 1,
        b2=fixed_rank + 1,
        invariant_basis=inv_rows,
        mu_basis=mu_rows,
        torsion=linalg.elementary_divisors(a),
        h1_tags=("theta",) + tuple(surfaces.class_symbol(r, g) for r in inv_rows),
        h2_tags=("Omega",) + tuple(_wedge_tag(r, g) for r in mu_rows),
    )


def mu_image(torus: MappingTorus) -> tuple[tuple[tuple[int, ...], ...], tuple[str, ...]]:
    """Basis of the lattice of fiber-trivial classes in H^2(Y), with tags."""
    data = wang_cohomology(torus)
    return data.mu_basis, data.h2_tags[1:]


@lru_cache(maxsize=None)
def bundle_wang_data(d: int, k: int, g: int) -> WangData:
    """Wang data of the standard bundle monodromy, on its canonical bases.

    The fixed lattice is spanned by b_1 .. b_d and the untouched handles
    a_{d+1}, b_{d+1}, .., a_k, b_k; the free cokernel by a_1 .. a_d and the
    same untouched handles. Both choices are verified against the generic
    computation, so a wrong canonical basis cannot slip through.
    """
    word = surfaces.bundle_monodromy_word(d, k, g)
    torus = MappingTorus(word)
    inv_rows = [surfaces.b_curve(i, g) for i in range(1, d + 1)]
    mu_rows = [surfaces.a_curve(i, g) for i in range(1, d + 1)]
    for i in range(d + 1, k + 1):
        inv_rows.extend((surfaces.a_curve(i, g), surfaces.b_curve(i, g)))
        mu_rows.extend((surfaces.a_curve(i, g), surfaces.b_curve(i, g)))
    return wang_cohomology(torus, invariant_basis=inv_rows, mu_basis=mu_rows)


def fiber_restrictions(data: WangData) -> tuple[int, ...]:
    """Restriction to the fiber of each H^2(Y) basis class.

    The fiber volume class restricts to 1; every mu-image class dies.
    """
    return (1,) + (0,) * len(data.mu_basis)


def restriction_to_fiber(data: WangData, coefficients) -> int:
    """Fiber restriction of an H^2(Y) class given in the tagged basis."""
    coeffs = tuple(coefficients)
    if len(coeffs) != data.b2:
        raise ValueError(
            f"H^2 coefficient vector of length {len(coeffs)}, expected {data.b2}"
        )
    restrictions = fiber_restrictions(data)
    return sum(int(c) * r for c, r in zip(coeffs, restrictions))
