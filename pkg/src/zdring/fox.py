"""Free differential calculus on Z[F_m] and projections onto other models.

``fox_derivative`` implements the unique derivations d/da_i on the group
ring of a free group determined by

    d(a_j)/d(a_i) = delta_ij,      d(uv)/d(a_i) = du/d(a_i) + u * dv/d(a_i),

from which d(a_i^-1)/d(a_i) = -a_i^-1.  They satisfy the fundamental
identity  w - 1 = sum_i dw/d(a_i) * (a_i - 1),  checked exactly by
``fundamental_identity_check``.  ``theta`` pushes a free-group ring element
through the homomorphism sending each generator to a chosen image.
"""

from __future__ import annotations

from typing import Sequence

from .groups import FreeGroupSpec, GroupElement, GroupSpec
from .ring import RingElement, geometric_sum

__all__ = [
    "fox_derivative",
    "fox_power_rule_check",
    "fundamental_identity_check",
    "theta",
]


def _letters(w: GroupElement):
    """Split a reduced word into single-generator letters (index, sign)."""
    for g, e in w.key:
        sign = 1 if e > 0 else -1
        for _ in range(abs(e)):
            yield g, sign


def _require_free(w: GroupElement) -> FreeGroupSpec:
    if not isinstance(w.spec, FreeGroupSpec):
        raise ValueError("Fox derivatives are defined over free groups only")
    return w.spec


def fox_derivative(w: GroupElement, i: int) -> RingElement:
    """The derivative of a reduced word with respect to generator ``a{i}``.

    ``i`` is 1-based, matching the generator names.  Computed by a single
    left-to-right pass with the product rule, so the cost is linear in the
    word length.
    """
    spec = _require_free(w)
    if not 1 <= i <= spec.rank:
        raise ValueError(f"generator index {i} out of range 1..{spec.rank}")
    target = i - 1
    acc: dict = {}
    prefix = spec.identity()
    for g, sign in _letters(w):
        letter = GroupElement(spec, ((g, sign),))
        if g == target:
            if sign == 1:
                term = prefix
                delta = 1
            else:
                term = prefix * letter
                delta = -1
            acc[term] = acc.get(term, 0) + delta
        prefix = prefix * letter
    return RingElement(spec, acc)


def fox_power_rule_check(w: GroupElement, n: int, i: int) -> bool:
    """True iff d(w^n) = (1 + w + ... + w^(n-1)) * dw, both sides computed
    independently."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    lhs = fox_derivative(w**n, i)
    rhs = geometric_sum(w, n) * fox_derivative(w, i)
    return lhs == rhs


def fundamental_identity_check(w: GroupElement) -> bool:
    """True iff w - 1 = sum_i dw/d(a_i) * (a_i - 1) holds exactly."""
    spec = _require_free(w)
    rhs = RingElement.zero(spec)
    for i, gen in enumerate(spec.generators(), start=1):
        rhs = rhs + fox_derivative(w, i) * (gen - 1)
    return rhs == w - 1


def theta(
    p: RingElement, target: GroupSpec, images: Sequence[GroupElement]
) -> RingElement:
    """Apply the ring homomorphism extending ``a_i -> images[i-1]``.

    ``p`` must live over a free group and ``images`` must supply one target
    element per generator.  The caller is responsible for the images
    satisfying whatever relations the intended conclusion needs.
    """
    if not isinstance(p.spec, FreeGroupSpec):
        raise ValueError("theta projects from a free-group ring")
    if len(images) != p.spec.rank:
        raise ValueError(f"expected {p.spec.rank} generator images, got {len(images)}")
    for img in images:
        if img.spec != target:
            raise ValueError("generator image lies in the wrong group")
    acc: dict = {}
    for g, c in p.terms():
        image = target.identity()
        for gen, e in g.key:
            image = image * images[gen] ** e
        acc[image] = acc.get(image, 0) + c
    return RingElement(target, acc)
