"""Isotropy bookkeeping above a signed diagram.

The reductive part of an orbit stabilizer is a product of one factor per
level of the diagram, acting on the multiplicity space of that level.  Only
levels whose shifted kind is real orthogonal contribute components, one
two-element generator per nonzero side of the multiplicity signature.
Admissible orbit data are tracked as bit vectors over those generators,
relative to a fixed base point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .partitions import DomainError
from .realforms import (
    KOrbit,
    RealForm,
    Signature,
    SignedDiagram,
    SpaceKind,
    descended_form,
    multiplicity_signatures,
    signed_descent,
)


@dataclass(frozen=True)
class LeviFactor:
    level: int
    kind: SpaceKind
    signature: Signature

    def to_json(self):
        return {"level": self.level,
                "kind": [self.kind.eps, self.kind.eps_dot],
                "signature": self.signature.to_json()}


def levi_factors(ko: KOrbit):
    """One factor per level of the diagram, kind shifted by the level,
    acting on the multiplicity signature there.  Zero-size factors are
    retained."""
    kind = ko.form.kind
    return [LeviFactor(level, kind.shifted(level), m)
            for level, m in multiplicity_signatures(ko.diagram)]


def generator_label(level: int, side: str) -> str:
    return f"l{level}{side}"


@dataclass(frozen=True)
class ComponentGroup:
    """Elementary abelian 2-group with one labeled generator per
    contributing (level, side) slot."""

    generators: tuple

    def size(self) -> int:
        return 2 ** len(self.generators)

    def labels(self):
        return [generator_label(l, s) for l, s in self.generators]

    def to_json(self):
        return {"generators": self.labels(), "size": self.size()}


def component_group(ko: KOrbit) -> ComponentGroup:
    """Generators live at the levels whose shifted kind is real orthogonal,
    one per nonzero side of the multiplicity signature.  Quaternionic forms
    never produce any."""
    gens = []
    for f in levi_factors(ko):
        if not f.kind.is_real_orthogonal():
            continue
        if f.signature.plus > 0:
            gens.append((f.level, "+"))
        if f.signature.minus > 0:
            gens.append((f.level, "-"))
    return ComponentGroup(tuple(gens))


def genuine_parity(ko: KOrbit) -> int:
    """Parity flag separating the two-fold covers seen by real symplectic
    forms: the parity of the leading column size there, 0 elsewhere."""
    if not ko.form.kind.is_real_symplectic():
        return 0
    cols = ko.columns()
    return cols[0] % 2 if cols else 0


@dataclass(frozen=True)
class AdmissibleDatum:
    """A character of the orbit's component group, written as bits over the
    group generators relative to the base point."""

    orbit: KOrbit
    group: ComponentGroup
    bits: tuple
    genuine_parity: int

    def __post_init__(self):
        if len(self.bits) != len(self.group.generators):
            raise DomainError("bit vector length does not match the "
                              "generator count")
        if any(b not in (0, 1) for b in self.bits):
            raise DomainError("bits must be 0 or 1")

    def bit_map(self):
        return {generator_label(l, s): b
                for (l, s), b in zip(self.group.generators, self.bits)}

    def to_json(self):
        return {"orbit": self.orbit.diagram.to_json(),
                "bits": self.bit_map(),
                "genuine_parity": self.genuine_parity}


def admissible_data(ko: KOrbit):
    """All characters of the component group, ordered lexicographically by
    bit vector.  The count is 2 to the number of generators; quaternionic
    forms always get exactly one datum."""
    group = component_group(ko)
    par = genuine_parity(ko)
    return [AdmissibleDatum(ko, group, bits, par)
            for bits in itertools.product((0, 1),
                                          repeat=len(group.generators))]


def _descent_pair_check(ko: KOrbit, ko_prime: KOrbit):
    if ko_prime.diagram != signed_descent(ko.diagram):
        raise DomainError("the second orbit is not the signed descent of "
                          "the first")
    expected = descended_form(ko.form, ko.diagram)
    if ko_prime.form != expected:
        raise DomainError(f"descent form mismatch: expected "
                          f"{expected.name()}, got {ko_prime.form.name()}")


def alpha_pullback(ko: KOrbit, datum_prime: AdmissibleDatum) -> tuple:
    """Bits induced on ko's component group from a datum on its signed
    descent.

    The stabilizer of the big orbit embeds level by level into that of the
    descended one, a generator at level l landing at level l - 1 with the
    sides swapped; level-0 generators map to the identity and receive 0.
    """
    ko_prime = datum_prime.orbit
    _descent_pair_check(ko, ko_prime)
    prime_bits = {gen: b for gen, b in zip(datum_prime.group.generators,
                                           datum_prime.bits)}
    flip = {"+": "-", "-": "+"}
    out = []
    for level, side in component_group(ko).generators:
        if level == 0:
            out.append(0)
        else:
            out.append(prime_bits.get((level - 1, flip[side]), 0))
    return tuple(out)


def characters_of_form(form: RealForm):
    """Characters of the component group of the symmetry group itself:
    (eta_plus, eta_minus) pairs for real orthogonal forms, restricted to the
    nonzero sides; the trivial character alone for every other kind."""
    if not form.kind.is_real_orthogonal():
        return [(0, 0)]
    plus_range = (0, 1) if form.signature.plus > 0 else (0,)
    minus_range = (0, 1) if form.signature.minus > 0 else (0,)
    return [(a, b) for a in plus_range for b in minus_range]


def lift_admissible(ko: KOrbit, datum_prime: AdmissibleDatum,
                    chi) -> AdmissibleDatum:
    """Admissible datum on ko obtained from one on its signed descent,
    twisted by a character chi of the symmetry group.

    chi restricts to the even-level generators of a real orthogonal form
    (eta_plus on the plus side, eta_minus on the minus side) and is trivial
    for the other kinds; the result XORs that restriction with the pullback
    of datum_prime.
    """
    eta_plus, eta_minus = chi
    if (eta_plus, eta_minus) != (0, 0) and not ko.form.kind.is_real_orthogonal():
        raise DomainError(f"a {ko.form.kind.name()} form has no nontrivial "
                          f"symmetry-group character")
    group = component_group(ko)
    pulled = alpha_pullback(ko, datum_prime)
    bits = []
    for (level, side), base in zip(group.generators, pulled):
        res = 0
        if ko.form.kind.is_real_orthogonal() and level % 2 == 0:
            res = eta_plus if side == "+" else eta_minus
        bits.append(base ^ res)
    return AdmissibleDatum(ko, group, tuple(bits), genuine_parity(ko))
