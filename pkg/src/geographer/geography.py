"""Admissible triples and their constructive realization.

A triple (a, b, c) of signature, first Betti number and degeneracy is
admissible when a is a non-positive multiple of 8, 0 <= c <= b with b - c
even, and b >= max(0, 2 + a/4). Every admissible triple is realized by a
minimal symplectic 4-manifold of Kodaira dimension one: bundle manifolds
cover a = 0, fiber sums with E(n) cover a <= -16, and Dolgachev sums cover
a = -8. The nullity variant drops the parity constraint, forbids c = b - 1,
and is only partially realizable; unsettled triples are returned as
:class:`OpenProblem` values, never errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .bundle_manifold import BundleManifoldSpec, InvariantCertificate, construct
from .circle_bundle import nullity_closed_form
from .errors import ConsistencyError, InadmissibleError
from .fiber_sum import (
    DolgachevSurface,
    EllipticSurface,
    FiberSumSpec,
    elliptic_invariants,
    fiber_sum_invariants,
)

RecipeSpec = Union[BundleManifoldSpec, FiberSumSpec, EllipticSurface, DolgachevSurface]

#: Default Dolgachev multiplicities: the smallest coprime pair >= 2.
DEFAULT_DOLGACHEV = (2, 3)


def is_admissible(a: int, b: int, c: int) -> bool:
    """Exact admissibility predicate for degeneracy triples."""
    if a > 0 or a % 8 != 0:
        return False
    if not 0 <= c <= b:
        return False
    if (b - c) % 2 != 0:
        return False
    return b >= max(0, 2 + a // 4)


def is_null_admissible(a: int, b: int, c: int) -> bool:
    """Nullity variant: no parity constraint, but c = b - 1 is impossible.

    A manifold with nullity b1 - 1 would leave a single cup-nontrivial
    line in H^1, contradicting skewness of the cup square.
    """
    if a > 0 or a % 8 != 0:
        return False
    if not 0 <= c <= b:
        return False
    if c == b - 1:
        return False
    return b >= max(0, 2 + a // 4)


@dataclass(frozen=True)
class Recipe:
    """A construction together with its certified triple.

    ``triple_kind`` records whether the third coordinate of ``triple`` is
    the degeneracy or the nullity of the construction.
    """

    kind: str
    spec: RecipeSpec
    label: str
    certificate: InvariantCertificate
    triple: tuple[int, int, int]
    triple_kind: str = "degeneracy"
    family: str | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class OpenProblem:
    """A null-admissible triple with no known realizing construction."""

    triple: tuple[int, int, int]
    reason: str
    notes: tuple[str, ...] = ()


def default_genus(k: int, floor: int | None = None) -> int:
    """Genus max(k, 2, floor): large enough for every family and for kappa = 1."""
    return max(k, 2, floor or 0)


def _certify(recipe: Recipe) -> Recipe:
    """Abort loudly when a certificate does not match its target triple."""
    cert = recipe.certificate
    realized = cert.degeneracy if recipe.triple_kind == "degeneracy" else cert.nullity
    got = (cert.sigma, cert.b1, realized)
    if got != recipe.triple:
        raise ConsistencyError(
            f"recipe {recipe.label} certifies {got}, target was {recipe.triple}"
        )
    if cert.kappa != 1:
        raise ConsistencyError(f"recipe {recipe.label} has kappa = {cert.kappa}, not 1")
    return recipe


def _bundle_recipe(
    spec: BundleManifoldSpec,
    triple: tuple[int, int, int],
    triple_kind: str,
    family: str | None = None,
    notes: tuple[str, ...] = (),
) -> Recipe:
    return _certify(
        Recipe(
            kind="bundle",
            spec=spec,
            label=spec.label,
            certificate=construct(spec),
            triple=triple,
            triple_kind=triple_kind,
            family=family,
            notes=notes,
        )
    )


def _sum_recipe(spec: FiberSumSpec, triple: tuple[int, int, int], triple_kind="degeneracy") -> Recipe:
    kind = "fiber_sum" if isinstance(spec.base, EllipticSurface) else "dolgachev_sum"
    return _certify(
        Recipe(
            kind=kind,
            spec=spec,
            label=spec.label,
            certificate=fiber_sum_invariants(spec),
            triple=triple,
            triple_kind=triple_kind,
        )
    )


def realize(a: int, b: int, c: int, genus: int | None = None) -> Recipe:
    """Deterministic recipe for an admissible triple.

    a = 0, b even: the zero-Euler-class family covers c < b and the
    d = k = b - 1 tag-1 bundle covers c = b. a = 0, b odd: tag-2 bundles
    cover c < b and the same tag-1 bundle covers c = b. a <= -16: fiber
    sum with E(-a/8) of weight d = c, k = (b + c) / 2. a = -8: the same
    sum with a Dolgachev surface. ``genus`` raises the genus floor.
    """
    if not is_admissible(a, b, c):
        raise InadmissibleError(_admissibility_failure(a, b, c))
    if a == 0:
        return _realize_signature_zero(b, c, genus)
    k = (b + c) // 2
    g = default_genus(k, genus)
    base = EllipticSurface(-a // 8) if a <= -16 else DolgachevSurface(*DEFAULT_DOLGACHEV)
    return _sum_recipe(FiberSumSpec(base, c, k, g), (a, b, c))


def _realize_signature_zero(b: int, c: int, genus: int | None) -> Recipe:
    if c == b:
        # d = k = b - 1 with a twisted-block Euler class, any parity of b.
        spec = BundleManifoldSpec(b - 1, b - 1, default_genus(b - 1, genus), 1)
        family = f"B1({(b - 2) // 2})" if b % 2 == 0 else f"B1({(b - 1) // 2})"
        return _bundle_recipe(spec, (0, b, c), "degeneracy", family)
    if b % 2 == 0:
        ell = b // 2
        i = c // 2
        spec = BundleManifoldSpec(c, ell - 1 + i, default_genus(ell - 1 + i, genus), 0)
        return _bundle_recipe(spec, (0, b, c), "degeneracy", f"B0({i})")
    ell = (b - 1) // 2
    i = (c - 1) // 2
    spec = BundleManifoldSpec(c - 1, ell + i, default_genus(ell + i, genus), 2)
    return _bundle_recipe(
        spec,
        (0, b, c),
        "degeneracy",
        f"B2({i})",
        notes=(
            "a zero-Euler-class bundle would also cover this odd-b triple; "
            "the tag-2 family is preferred for a uniform index range",
        ),
    )


def _admissibility_failure(a: int, b: int, c: int) -> str:
    if a > 0 or a % 8 != 0:
        return "signature must be a non-positive multiple of 8"
    if not 0 <= c <= b:
        return "degeneracy must satisfy 0 <= c <= b"
    if (b - c) % 2 != 0:
        return "b - c must be even"
    return f"b must be at least max(0, 2 + a/4) = {max(0, 2 + a // 4)}"


def _null_admissibility_failure(a: int, b: int, c: int) -> str:
    if c == b - 1 and 0 <= c <= b:
        return "nullity b - 1 is impossible: one class would have a nonzero cup square"
    if a > 0 or a % 8 != 0:
        return "signature must be a non-positive multiple of 8"
    if not 0 <= c <= b:
        return "nullity must satisfy 0 <= c <= b"
    return f"b must be at least max(0, 2 + a/4) = {max(0, 2 + a // 4)}"


OPEN_RING_NOTE = (
    "a realizing manifold would need an H^1 basis x, y, z with x cup y nonzero "
    "and every other product of basis classes zero"
)


def realize_null(a: int, b: int, c: int, genus: int | None = None) -> Recipe | OpenProblem:
    """Recipe with nullity c, or the open cases as explicit values.

    For a = 0 the bundle families are searched exactly (tag order 0, 1, 2,
    then increasing weights). For a < 0 the only nullity the constructions
    certify is 0 via b1 = 0, so b = c = 0 triples get the fiber-sum recipe
    of the same signature and everything else is open.
    """
    if not is_null_admissible(a, b, c):
        raise InadmissibleError(_null_admissibility_failure(a, b, c))
    if a == 0:
        found = _search_bundle_nullity(b, c, genus)
        if found is not None:
            return found
        notes = (OPEN_RING_NOTE,) if (a, b, c) == (0, 3, 1) else ()
        return OpenProblem(
            triple=(a, b, c),
            reason=(
                f"no bundle family has b1 = {b} and nullity = {c}; whether a "
                "symplectic 4-manifold realizes this nullity triple is open"
            ),
            notes=notes,
        )
    if b == 0:
        k = 0
        g = default_genus(k, genus)
        base = EllipticSurface(-a // 8) if a <= -16 else DolgachevSurface(*DEFAULT_DOLGACHEV)
        return _sum_recipe(FiberSumSpec(base, 0, k, g), (a, 0, 0), "nullity")
    return OpenProblem(
        triple=(a, b, c),
        reason=(
            "nullity is only computed for bundle manifolds and for simply "
            "connected sums; no construction certifies this triple"
        ),
    )


def _search_bundle_nullity(b: int, c: int, genus: int | None) -> Recipe | None:
    for tag in (0, 1, 2):
        for k in range(0, b + 1):
            for d in range(0, k + 1):
                if tag == 1 and d == 0:
                    continue
                if tag == 2 and d == k:
                    continue
                b1 = 2 * k - d + 2 if tag == 0 else 2 * k - d + 1
                if b1 != b:
                    continue
                if nullity_closed_form(d, k, tag) != c:
                    continue
                spec = BundleManifoldSpec(d, k, default_genus(k, genus), tag)
                return _bundle_recipe(spec, (0, b, c), "nullity")
    return None


def enumerate_region(
    sigma_min: int, b1_max: int, genus: int | None = None
) -> Iterator[Recipe]:
    """All admissible triples with sigma_min <= a <= 0 and b <= b1_max.

    Deterministic order: a descending from 0, then b ascending, then c
    ascending; every yielded recipe is certificate-checked.
    """
    if sigma_min > 0:
        raise InadmissibleError("sigma lower bound must be non-positive")
    if b1_max < 0:
        raise InadmissibleError("b1 bound must be non-negative")
    for a in range(0, sigma_min - 1, -8):
        for b in range(0, b1_max + 1):
            for c in range(0, b + 1):
                if is_admissible(a, b, c):
                    yield realize(a, b, c, genus=genus)


def simply_connected_geography(sigma: int) -> Recipe:
    """The classical simply connected realization of one signature.

    Every negative multiple of 8 occurs: Dolgachev surfaces give -8 and
    E(n) gives -8n. Note E(2) is the K3 surface, whose Kodaira dimension
    is 0; all other outputs have kappa = 1.
    """
    if sigma >= 0 or sigma % 8 != 0:
        raise InadmissibleError("signature must be a negative multiple of 8")
    if sigma == -8:
        base: EllipticSurface | DolgachevSurface = DolgachevSurface(*DEFAULT_DOLGACHEV)
        kind = "dolgachev"
    else:
        base = EllipticSurface(-sigma // 8)
        kind = "elliptic"
    cert = elliptic_invariants(base)
    if (cert.sigma, cert.b1, cert.degeneracy) != (sigma, 0, 0):
        raise ConsistencyError(f"{base.label} does not certify ({sigma}, 0, 0)")
    notes = ()
    if cert.kappa != 1:
        notes = ("E(2) is the K3 surface: Kodaira dimension 0, not 1",)
    return Recipe(
        kind=kind,
        spec=base,
        label=base.label,
        certificate=cert,
        triple=(sigma, 0, 0),
        triple_kind="degeneracy",
        notes=notes,
    )
