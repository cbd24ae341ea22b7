"""First (co)homology of a closed oriented surface and its twist actions.

A genus ``g`` surface carries the symplectic basis a1, b1, ..., ag, bg of
H_1 with a_i . b_i = +1, and the dual basis alpha_1, beta_1, ... of H^1.
A Dehn twist along a simple closed curve acts on these lattices by an
integral transvection; words of twists compose to integral symplectic
matrices. Everything here is a pure function of integer data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg


def basis_labels(genus: int) -> tuple[str, ...]:
    """Symbols of the homology basis, in the order a1, b1, ..., ag, bg."""
    labels = []
    for i in range(1, genus + 1):
        labels.append(f"a{i}")
        labels.append(f"b{i}")
    return tuple(labels)


def a_curve(i: int, genus: int) -> tuple[int, ...]:
    """Coefficient vector of the class a_i."""
    _check_handle(i, genus)
    return tuple(1 if j == 2 * (i - 1) else 0 for j in range(2 * genus))


def b_curve(i: int, genus: int) -> tuple[int, ...]:
    """Coefficient vector of the class b_i."""
    _check_handle(i, genus)
    return tuple(1 if j == 2 * i - 1 else 0 for j in range(2 * genus))


def _check_handle(i: int, genus: int) -> None:
    if not 1 <= i <= genus:
        raise ValueError(f"handle index {i} out of range for genus {genus}")


def intersection_form(genus: int) -> np.ndarray:
    """Block diagonal skew form J with J(a_i, b_i) = +1.

    The same matrix also represents the cup-product pairing of H^1 in the
    dual basis (alpha_i pairs with beta_i to +1), so it doubles as the
    symplectic condition matrix for monodromy actions.
    """
    if genus < 1:
        raise ValueError("genus must be positive")
    j = linalg.zeros(2 * genus, 2 * genus)
    for i in range(genus):
        j[2 * i, 2 * i + 1] = 1
        j[2 * i + 1, 2 * i] = -1
    return j


# The pairing induced on H^1 by the dual basis has the same matrix as the
# intersection form on H_1.
cup_form = intersection_form


@dataclass(frozen=True)
class Twist:
    """One Dehn twist letter: a primitive curve class and a nonzero power."""

    curve: tuple[int, ...]
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "curve", tuple(int(x) for x in self.curve))
        object.__setattr__(self, "power", int(self.power))
        if self.power == 0:
            raise ValueError("twist power must be nonzero")
        if not linalg.is_primitive(self.curve):
            raise ValueError(f"twist curve {self.curve} is not primitive")

    def inverse(self) -> "Twist":
        return Twist(self.curve, -self.power)


@dataclass(frozen=True)
class TwistWord:
    """An ordered product of twists; the leftmost letter acts last."""

    genus: int
    letters: tuple[Twist, ...] = ()

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be positive")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if len(letter.curve) != 2 * self.genus:
                raise ValueError(
                    f"curve of length {len(letter.curve)} in a genus {self.genus} word"
                )

    def inverse(self) -> "TwistWord":
        return TwistWord(self.genus, tuple(l.inverse() for l in reversed(self.letters)))


def twist_transvection(curve, genus: int, power: int = 1) -> np.ndarray:
    """Action on H^1 of the ``power``-fold twist along ``curve``.

    With c the coefficient column of the curve and J the intersection
    form, the matrix is I - power * (J c) c^T. The sign is pinned by the
    convention that the twist along a_i sends alpha_i to alpha_i + beta_i
    and fixes beta_i; the opposite handedness only flips signs that cancel
    in every rank computed downstream.
    """
    letter = Twist(tuple(curve), power)
    if len(letter.curve) != 2 * genus:
        raise ValueError(f"curve of length {len(letter.curve)} for genus {genus}")
    j = intersection_form(genus)
    c = linalg.zeros(2 * genus, 1)
    for i, x in enumerate(letter.curve):
        c[i, 0] = x
    return linalg.identity(2 * genus) - letter.power * ((j @ c) @ c.T)


def compose_word(word: TwistWord) -> np.ndarray:
    """Pullback action on H^1 of the whole word.

    Pullbacks compose in the opposite order of the diffeomorphisms, so the
    matrix of the leftmost (last applied) letter multiplies from the right.
    """
    m = linalg.identity(2 * word.genus)
    for letter in word.letters:
        m = twist_transvection(letter.curve, word.genus, letter.power) @ m
    return m


def homology_action(m: np.ndarray) -> np.ndarray:
    """Induced map on H_1, the adjoint of the H^1 action under evaluation."""
    return m.T.copy()


def is_symplectic(m) -> bool:
    """M^T J M = J together with det M = 1."""
    mat = linalg.to_matrix(m)
    n = mat.shape[0]
    if mat.shape[1] != n or n % 2 != 0 or n == 0:
        return False
    j = intersection_form(n // 2)
    return bool((mat.T @ j @ mat == j).all()) and linalg.det(mat) == 1


def bundle_monodromy_word(d: int, k: int, g: int) -> TwistWord:
    """The monodromy word of the bundle family with weights (d, k, g).

    Reading left to right: for every handle i above k the pair of a
    positive twist along b_i and a negative twist along a_i; handles
    between d+1 and k are untouched; handles 1..d get one positive twist
    along a_i. The letters for distinct handles commute.
    """
    _check_weights(d, k, g)
    letters: list[Twist] = []
    for i in range(g, k, -1):
        letters.append(Twist(b_curve(i, g)))
        letters.append(Twist(a_curve(i, g), -1))
    for i in range(d, 0, -1):
        letters.append(Twist(a_curve(i, g)))
    return TwistWord(g, tuple(letters))


def _check_weights(d: int, k: int, g: int) -> None:
    if g < 1:
        raise ValueError("genus must be positive")
    if not 0 <= d <= k <= g:
        raise ValueError(f"weights must satisfy 0 <= d <= k <= g, got ({d}, {k}, {g})")


def invariant_subspace(m) -> np.ndarray:
    """Saturated integral basis (rows) of the fixed subspace ker(M - I)."""
    mat = linalg.to_matrix(m)
    if mat.shape[0] != mat.shape[1]:
        raise ValueError("monodromy matrix must be square")
    return linalg.kernel_basis(mat - linalg.identity(mat.shape[0]))


def class_symbol(vector, genus: int) -> str:
    """Render an H^1 coefficient vector against the a/b symbols."""
    labels = basis_labels(genus)
    terms = []
    for coeff, label in zip(vector, labels):
        coeff = int(coeff)
        if coeff == 0:
            continue
        if coeff == 1:
            terms.append(f"+{label}")
        elif coeff == -1:
            terms.append(f"-{label}")
        else:
            terms.append(f"{coeff:+d}*{label}")
    if not terms:
        return "0"
    joined = "".join(terms)
    return joined[1:] if joined.startswith("+") else joined
