"""Descent chains and unipotent representation counts.

A chain tracks an orbit parameter through repeated signed descents down to
the zero orbit, recording the intermediate forms.  Representation counts
attach one representation per admissible datum of each orbit parameter over
a fixed complex orbit, so totals are sums of component group sizes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .partitions import DomainError, nil_p_violation
from .orbits import ComplexOrbit, InfinitesimalCharacter, infinitesimal_character
from .realforms import (
    KOrbit,
    RealForm,
    SignedDiagram,
    enumerate_k_orbits,
    signed_descent,
)
from .isotropy import characters_of_form, component_group, genuine_parity


_CIRC_DROP = {
    (1, 1): 2,       # real orthogonal
    (-1, -1): 0,     # real symplectic
    (1, -1): 3,      # quaternionic orthogonal
    (-1, 1): 1,      # quaternionic symplectic
}


def dim_circ(form: RealForm) -> int:
    """Effective dimension of a form: the dimension lowered by a constant
    depending only on the kind."""
    return form.dim - _CIRC_DROP[tuple(form.kind)]


@dataclass(frozen=True)
class DescentChain:
    """Forms and orbit parameters visited by iterated signed descent.

    steps[j] is the pair (form, orbit) living j descents down; the chain
    ends with the zero orbit, and a virtual zero-dimensional space sits one
    step past the end.
    """

    steps: tuple

    def __len__(self):
        return len(self.steps)

    def forms(self):
        return [form for form, _ in self.steps]

    def dims(self):
        """Dimensions of the spaces in the chain, terminal zero included."""
        return [form.dim for form, _ in self.steps] + [0]

    def to_json(self):
        return [{"form": form.to_json(), "diagram": ko.diagram.to_json()}
                for form, ko in self.steps]


def descent_chain_steps(form: RealForm, ko: KOrbit) -> DescentChain:
    """Assemble the chain of iterated signed descents without any membership
    gate.  Step j carries the kind shifted j times and the tail signature
    from column j onward."""
    if ko.form != form:
        raise DomainError("orbit parameter does not live on the given form")
    steps = []
    cols = ko.diagram.cols
    count = max(len(cols), 1)
    for j in range(count):
        kind_j = form.kind.shifted(j)
        sig_j = ko.diagram.tail_total(j)
        form_j = RealForm(kind_j, sig_j)
        steps.append((form_j, KOrbit(form_j, SignedDiagram(cols[j:]))))
    return DescentChain(tuple(steps))


def build_descent_chain(form: RealForm, ko: KOrbit, parity: int) -> DescentChain:
    """Chain of iterated signed descents for an orbit in the preferred
    family of the given column parity."""
    cols = ko.columns()
    if cols:
        msg = nil_p_violation(cols, form.kind.eps, parity)
        if msg is not None:
            raise DomainError(f"orbit is outside the preferred family: {msg}")
    return descent_chain_steps(form, ko)


def chain_in_convergent_range(chain: DescentChain) -> bool:
    """The two displayed inequalities along the chain: positive effective
    dimension strictly before the last step, and at every later step the
    neighbouring dimensions outweigh twice the effective dimension."""
    k = len(chain.steps) - 1
    dims = chain.dims()
    circ = [dim_circ(form) for form in chain.forms()]
    for j in range(k):
        if circ[j] <= 0:
            return False
    for j in range(1, k + 1):
        if dims[j + 1] + dims[j - 1] <= 2 * circ[j]:
            return False
    return True


def enumerate_eta(chain: DescentChain):
    """All tuples of symmetry-group characters along the chain, one factor
    per chain step."""
    per_step = [characters_of_form(form) for form in chain.forms()]
    return [tuple(combo) for combo in itertools.product(*per_step)]


@dataclass(frozen=True)
class OrbitCount:
    k_orbit: KOrbit
    component_size: int

    def to_json(self):
        return {"diagram": self.k_orbit.diagram.to_json(),
                "count": self.component_size}


@dataclass(frozen=True)
class ClassificationRow:
    form: RealForm
    parity: int
    orbit: ComplexOrbit
    inf_char: InfinitesimalCharacter
    counts: tuple
    genuine: bool

    @property
    def total(self) -> int:
        return sum(c.component_size for c in self.counts)

    def to_json(self):
        return {"form": self.form.to_json(),
                "parity": self.parity,
                "orbit_columns": list(self.orbit.columns),
                "inf_char": self.inf_char.to_json(),
                "k_orbits": [c.to_json() for c in self.counts],
                "total": self.total,
                "genuine": self.genuine}


def count_unipotent(form: RealForm, orbit: ComplexOrbit,
                    parity: int) -> ClassificationRow:
    """Attached representation count for one complex orbit: one
    representation per admissible datum of each orbit parameter, so the
    total adds the component group sizes over the parameters.

    The orbit must belong to the preferred family for the parity, and match
    the form in sign and dimension.
    """
    if form.kind.eps != orbit.eps:
        raise DomainError(f"orbit sign {orbit.eps:+d} does not match the "
                          f"{form.kind.name()} kind")
    if form.dim != orbit.dim_v:
        raise DomainError(f"form dimension {form.dim} differs from orbit "
                          f"dimension {orbit.dim_v}")
    msg = nil_p_violation(orbit.columns, orbit.eps, parity) if orbit.columns \
        else None
    if msg is not None:
        raise DomainError(f"orbit is outside the preferred family: {msg}")
    counts = []
    genuine = False
    for ko in enumerate_k_orbits(form, orbit):
        counts.append(OrbitCount(ko, component_group(ko).size()))
        if genuine_parity(ko) == 1:
            genuine = True
    return ClassificationRow(form, parity, orbit,
                             infinitesimal_character(orbit), tuple(counts),
                             genuine)


def classify(form: RealForm, parity: int):
    """One ClassificationRow per orbit of the preferred family on the form,
    in enumeration order."""
    from .orbits import enumerate_nil_p
    return [count_unipotent(form, o, parity)
            for o in enumerate_nil_p(form.kind.eps, form.dim, parity)]


def classification_csv(rows) -> str:
    """Flat CSV with one line per orbit parameter; rows with no parameters
    still produce one line with empty parameter fields."""
    import csv
    import io
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["form", "parity", "orbit_columns", "inf_char",
                     "k_orbit_diagram", "|A_X|", "total"])
    for row in rows:
        name = row.form.name()
        cols = " ".join(str(c) for c in row.orbit.columns)
        chi = " ".join(row.inf_char.to_json())
        flag = " genuine" if row.genuine else ""
        parity = f"{row.parity}{flag}"
        if not row.counts:
            writer.writerow([name, parity, cols, chi, "", "0", "0"])
            continue
        for c in row.counts:
            writer.writerow([name, parity, cols, chi, str(c.k_orbit.diagram),
                             str(c.component_size), str(row.total)])
    return buf.getvalue()
