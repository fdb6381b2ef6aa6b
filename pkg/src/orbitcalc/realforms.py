"""Real forms and their nilpotent orbit parameters.

A form is a pair (eps, eps_dot) of signs together with a signature.  Orbits
of the symmetry group of a form on the odd part of its symmetric-pair
decomposition are parameterized by signed Young diagrams: one signature per
column, weakly compatible along the diagram and subject to level conditions
read from the kind.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import NamedTuple

from .partitions import DomainError, check_eps
from .orbits import ComplexOrbit


@dataclass(frozen=True, order=True)
class Signature:
    """Pair of nonnegative multiplicities (plus, minus)."""

    plus: int
    minus: int

    def __post_init__(self):
        if self.plus < 0 or self.minus < 0:
            raise DomainError(f"signature ({self.plus},{self.minus}) has a "
                              f"negative component")

    def dual(self) -> "Signature":
        return Signature(self.minus, self.plus)

    def total(self) -> int:
        return self.plus + self.minus

    def __add__(self, other):
        return Signature(self.plus + other.plus, self.minus + other.minus)

    def __sub__(self, other):
        return Signature(self.plus - other.plus, self.minus - other.minus)

    def geq(self, other) -> bool:
        return self.plus >= other.plus and self.minus >= other.minus

    def to_json(self):
        return [self.plus, self.minus]

    def __str__(self):
        return f"{self.plus},{self.minus}"


def signature_geq(a, b) -> bool:
    """Componentwise comparison of signatures."""
    return as_signature(a).geq(as_signature(b))


def as_signature(s) -> Signature:
    if isinstance(s, Signature):
        return s
    p, m = s
    return Signature(int(p), int(m))


class SpaceKind(NamedTuple):
    """The two signs classifying a form: eps for the symmetry of the form,
    eps_dot for the square of the extra involution."""

    eps: int
    eps_dot: int

    def opposite(self) -> "SpaceKind":
        return SpaceKind(-self.eps, -self.eps_dot)

    def shifted(self, level: int) -> "SpaceKind":
        if level % 2 == 0:
            return self
        return self.opposite()

    def is_real_orthogonal(self):
        return self == (1, 1)

    def is_real_symplectic(self):
        return self == (-1, -1)

    def is_quaternionic(self):
        return self.eps_dot == -self.eps

    def name(self) -> str:
        return {(1, 1): "real orthogonal", (-1, -1): "real symplectic",
                (1, -1): "quaternionic orthogonal",
                (-1, 1): "quaternionic symplectic"}[tuple(self)]

    def legal_signature(self, sig) -> bool:
        """Which signatures occur for this kind: anything for real
        orthogonal, balanced for real symplectic and quaternionic
        orthogonal, both components even for quaternionic symplectic."""
        sig = as_signature(sig)
        if self == (1, 1):
            return True
        if self == (-1, 1):
            return sig.plus % 2 == 0 and sig.minus % 2 == 0
        return sig.plus == sig.minus

    def legal_signatures(self, dim: int):
        if dim < 0 or (self.eps == -1 and dim % 2 == 1):
            return
        for p in range(dim + 1):
            s = Signature(p, dim - p)
            if self.legal_signature(s):
                yield s

    def form_name(self, sig) -> str:
        sig = as_signature(sig)
        if self == (1, 1):
            return f"O({sig.plus},{sig.minus})"
        if self == (-1, -1):
            return f"Sp({sig.total()},R)"
        if self == (1, -1):
            return f"O*({sig.total()})"
        return f"Sp({sig.plus // 2},{sig.minus // 2})"


KINDS = (SpaceKind(1, 1), SpaceKind(-1, -1), SpaceKind(-1, 1), SpaceKind(1, -1))


@dataclass(frozen=True)
class RealForm:
    kind: SpaceKind
    signature: Signature

    def __post_init__(self):
        object.__setattr__(self, "kind", SpaceKind(*self.kind))
        object.__setattr__(self, "signature", as_signature(self.signature))
        check_eps(self.kind.eps)
        check_eps(self.kind.eps_dot)
        if not self.kind.legal_signature(self.signature):
            raise DomainError(
                f"signature {self.signature} is not legal for a "
                f"{self.kind.name()} space")

    @property
    def dim(self) -> int:
        return self.signature.total()

    def name(self) -> str:
        return self.kind.form_name(self.signature)

    def to_json(self):
        return {"eps": self.kind.eps, "eps_dot": self.kind.eps_dot,
                "signature": self.signature.to_json()}


_FORM_PATTERNS = (
    (re.compile(r"^O\((\d+),(\d+)\)$"), lambda p, q:
        RealForm(SpaceKind(1, 1), Signature(p, q))),
    (re.compile(r"^Sp\((\d+),R\)$"), lambda n, _=None:
        RealForm(SpaceKind(-1, -1), Signature(n // 2, n - n // 2))
        if n % 2 == 0 else None),
    (re.compile(r"^O\*\((\d+)\)$"), lambda n, _=None:
        RealForm(SpaceKind(1, -1), Signature(n // 2, n - n // 2))
        if n % 2 == 0 else None),
    (re.compile(r"^Sp\((\d+),(\d+)\)$"), lambda p, q:
        RealForm(SpaceKind(-1, 1), Signature(2 * p, 2 * q))),
)


def parse_form(text: str) -> RealForm:
    """Read a form from its classical name: O(p,q), Sp(2n,R), Sp(p,q) with
    quaternionic multiplicities, or O*(2n)."""
    cleaned = text.strip().replace(" ", "")
    for pattern, build in _FORM_PATTERNS:
        m = pattern.match(cleaned)
        if m:
            form = build(*(int(g) for g in m.groups()))
            if form is None:
                raise DomainError(f"form {text!r} has an odd dimension")
            return form
    raise DomainError(f"unknown form string {text!r}")


@dataclass(frozen=True)
class SignedDiagram:
    """Tuple of column signatures, leftmost first."""

    cols: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "cols", tuple(as_signature(c) for c in self.cols))
        if not is_signed_diagram(self.cols):
            raise DomainError(
                f"columns {[str(c) for c in self.cols]} do not satisfy the "
                f"dual-dominance chain of a signed diagram")

    def underlying(self) -> tuple:
        return tuple(c.total() for c in self.cols)

    def total(self) -> Signature:
        t = Signature(0, 0)
        for c in self.cols:
            t = t + c
        return t

    def tail_total(self, start: int) -> Signature:
        t = Signature(0, 0)
        for c in self.cols[start:]:
            t = t + c
        return t

    def to_json(self):
        return [c.to_json() for c in self.cols]

    def __str__(self):
        return "|".join(str(c) for c in self.cols) if self.cols else "-"


def parse_diagram(text: str) -> SignedDiagram:
    cleaned = text.strip()
    if cleaned in ("", "-"):
        return SignedDiagram(())
    cols = []
    for part in cleaned.split("|"):
        bits = part.split(",")
        if len(bits) != 2:
            raise DomainError(f"column {part!r} is not of the form p,m")
        try:
            cols.append(Signature(int(bits[0]), int(bits[1])))
        except ValueError:
            raise DomainError(
                f"column {part!r} is not a pair of integers") from None
    return SignedDiagram(tuple(cols))


def is_signed_diagram(cols) -> bool:
    """Validity of a signature chain: positive totals, and every column
    dominates the dual of the next one componentwise."""
    try:
        sigs = [as_signature(c) for c in cols]
    except DomainError:
        return False
    if any(c.total() <= 0 for c in sigs):
        return False
    sigs.append(Signature(0, 0))
    return all(a.geq(b.dual()) for a, b in zip(sigs, sigs[1:]))


def multiplicity_signatures(diagram: SignedDiagram):
    """Signature of the multiplicity space at each level: the part of column
    l not matched against column l+1, with the matching dualized at odd
    levels.  Returns (level, Signature) pairs, zero entries included."""
    cols = list(diagram.cols) + [Signature(0, 0)]
    out = []
    for l in range(len(diagram.cols)):
        if l % 2 == 0:
            m = cols[l] - cols[l + 1].dual()
        else:
            m = cols[l].dual() - cols[l + 1]
        out.append((l, m))
    return out


def is_realizable(diagram: SignedDiagram, kind: SpaceKind) -> bool:
    """Whether the diagram labels an orbit for a form of the given kind:
    every level's multiplicity signature must be legal for the level's
    shifted kind."""
    if not is_signed_diagram(diagram.cols):
        return False
    for level, m in multiplicity_signatures(diagram):
        if not SpaceKind(*kind).shifted(level).legal_signature(m):
            return False
    return True


@dataclass(frozen=True)
class KOrbit:
    """An orbit on the odd part for a real form, named by its signed
    diagram."""

    form: RealForm
    diagram: SignedDiagram

    def __post_init__(self):
        if self.diagram.total() != self.form.signature:
            raise DomainError(
                f"diagram totals {self.diagram.total()} but the form has "
                f"signature {self.form.signature}")
        if not is_realizable(self.diagram, self.form.kind):
            raise DomainError(
                f"diagram {self.diagram} fails a multiplicity-signature "
                f"level condition for a {self.form.kind.name()} space")

    def columns(self) -> tuple:
        return self.diagram.underlying()

    def to_json(self):
        return {"form": self.form.to_json(),
                "diagram": self.diagram.to_json()}


def enumerate_k_orbits(form: RealForm, orbit: ComplexOrbit):
    """All orbit parameters over the given complex orbit for the form, in
    lexicographic order of their column signatures."""
    if form.kind.eps != orbit.eps:
        raise DomainError(f"orbit sign {orbit.eps:+d} does not match the "
                          f"{form.kind.name()} kind")
    if form.dim != orbit.dim_v:
        raise DomainError(f"form dimension {form.dim} differs from orbit "
                          f"dimension {orbit.dim_v}")
    found = []
    choices = [range(c + 1) for c in orbit.columns]
    for plus_parts in itertools.product(*choices):
        cols = tuple(Signature(p, c - p)
                     for p, c in zip(plus_parts, orbit.columns))
        if not is_signed_diagram(cols):
            continue
        d = SignedDiagram(cols)
        if d.total() != form.signature:
            continue
        if not is_realizable(d, form.kind):
            continue
        found.append(KOrbit(form, d))
    found.sort(key=lambda ko: ko.diagram.cols)
    return found


def signed_descent(diagram: SignedDiagram) -> SignedDiagram:
    """Drop the leftmost column signature."""
    return SignedDiagram(diagram.cols[1:])


def gen_descent_signed(diagram: SignedDiagram, sig_v_prime) -> SignedDiagram:
    """Signed diagram of the generalized descent to a space with the given
    signature: the leftmost column is dropped and the slack signature
    (target minus what remains) is absorbed into the new leading column.

    Exists exactly when the target signature dominates the tail of the
    input; at zero slack it is the ordinary signed descent.
    """
    sig_v_prime = as_signature(sig_v_prime)
    tail = diagram.cols[1:]
    t = SignedDiagram(tail).total()
    if not sig_v_prime.geq(t):
        raise DomainError(
            f"no generalized descent: target signature {sig_v_prime} does "
            f"not dominate the descended total {t}")
    slack = sig_v_prime - t
    if tail:
        cols = (tail[0] + slack,) + tail[1:]
    elif slack.total() > 0:
        cols = (slack,)
    else:
        cols = ()
    return SignedDiagram(cols)


def descended_form(form: RealForm, diagram: SignedDiagram) -> RealForm:
    """Form of the descent space: opposite kind, signature of the tail."""
    return RealForm(form.kind.opposite(), diagram.tail_total(1))


def induce_real(diagram: SignedDiagram, l: int, kind: SpaceKind):
    """Signed diagrams induced from a descended diagram [d_1, ..., d_k] by
    an l-dimensional middle block, for an ambient space of the given kind.

    Returns (KOrbit-free) pairs (SignedDiagram, component_index).  The real
    orthogonal kind produces a single diagram carrying index 2, the image of
    the attached component map having index two there; every other kind
    produces one diagram of index 1 per legal signature of an
    opposite-kind space of dimension l minus the leading column size.
    """
    kind = SpaceKind(*kind)
    d1 = diagram.cols[0] if diagram.cols else Signature(0, 0)
    c1 = d1.total()
    if l < c1:
        raise DomainError(f"middle block size {l} is smaller than the "
                          f"leading column size {c1}")
    spare = l - c1
    out = []
    if kind.is_real_orthogonal():
        if spare % 2 == 0:
            raise DomainError(
                f"middle block size {l} must differ from the leading column "
                f"size {c1} by an odd amount for a real orthogonal space")
        half = spare // 2
        s = Signature(half, half)
        head = (d1 + s + Signature(1, 1), d1.dual() + s)
        out.append((SignedDiagram(head + diagram.cols), 2))
    else:
        opposite = kind.opposite()
        legal = list(opposite.legal_signatures(spare))
        if not legal:
            raise DomainError(
                f"no {opposite.name()} space of dimension {spare} exists "
                f"for the middle block")
        for s in legal:
            head = (d1 + s, d1.dual() + s.dual())
            out.append((SignedDiagram(head + diagram.cols), 1))
    seen = set()
    dedup = []
    for d, idx in out:
        if d.cols not in seen:
            seen.add(d.cols)
            dedup.append((d, idx))
    return dedup
