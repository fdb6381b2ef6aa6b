"""Nilpotent orbits of the complex orthogonal and symplectic groups.

Everything here is plain diagram combinatorics: enumeration, infinitesimal
characters, the duality map, moment-map transfer between the two column
types, parabolic induction from a descended orbit, and orbit dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import (
    DomainError,
    all_partitions,
    check_columns,
    check_eps,
    dominates,
    eps_collapse,
    eps_sign,
    in_nil_p,
    is_type_partition,
    nil_p_violation,
    size,
    transpose,
    type_collapse,
)


@dataclass(frozen=True)
class ComplexOrbit:
    """A nilpotent orbit, stored by its column partition.

    eps is +1 for the orthogonal series and -1 for the symplectic one;
    dim_v is the dimension of the underlying space.
    """

    eps: int
    dim_v: int
    columns: tuple

    def __post_init__(self):
        object.__setattr__(self, "columns", check_columns(self.columns))
        check_eps(self.eps)
        if size(self.columns) != self.dim_v:
            raise DomainError(f"columns sum to {size(self.columns)}, "
                              f"not to dim {self.dim_v}")
        if not is_type_partition(self.columns, self.eps):
            raise DomainError(f"columns {list(self.columns)} are not a type "
                              f"partition for eps = {self.eps:+d}")

    def rows(self) -> tuple:
        return transpose(self.columns)

    def is_zero(self) -> bool:
        return len(self.columns) <= 1

    def to_json(self):
        return {"eps": self.eps, "dim": self.dim_v,
                "columns": list(self.columns)}

    def __str__(self):
        series = "sp" if self.eps == -1 else "o"
        body = ",".join(str(c) for c in self.columns)
        return f"{series}({self.dim_v})[{body}]"


class InfinitesimalCharacter:
    """A multiset of half-integers, compared up to permutations and sign
    changes.  Entries are canonicalized to absolute values sorted in
    decreasing order."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        vals = sorted((abs(Fraction(e)) for e in entries), reverse=True)
        object.__setattr__(self, "entries", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("InfinitesimalCharacter is immutable")

    def __eq__(self, other):
        if not isinstance(other, InfinitesimalCharacter):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return f"InfinitesimalCharacter({[str(e) for e in self.entries]})"

    def to_json(self):
        return [str(e) for e in self.entries]


def enumerate_orbits(eps, n):
    """All nilpotent orbits for the eps-series in dimension n, in increasing
    lexicographic order of their columns."""
    check_eps(eps)
    if n < 0:
        raise DomainError(f"dimension {n} is negative")
    cols = [p for p in all_partitions(n) if is_type_partition(p, eps)]
    cols.sort()
    return [ComplexOrbit(eps, n, c) for c in cols]


def enumerate_nil_p(eps, n, parity):
    """The orbits of enumerate_orbits(eps, n) lying in the preferred family
    for the given column parity."""
    return [o for o in enumerate_orbits(eps, n)
            if in_nil_p(o.columns, eps, parity)]


def _rho(eps_l, r):
    """The half-integer string attached to one column of height r and sign
    eps_l: r/2 - 1, ..., down to (r odd part), with floor(r/2) entries for
    sign +1 and floor((r+1)/2) entries for sign -1."""
    half = Fraction(r, 2)
    if eps_l == 1:
        return [half - j for j in range(1, r // 2 + 1)]
    return [half - j for j in range((r + 1) // 2)]


def infinitesimal_character(orbit: ComplexOrbit) -> InfinitesimalCharacter:
    """Concatenation of the column strings, one per column with alternating
    signs starting at the orbit's own sign.  Always has floor(dim/2)
    entries."""
    entries = []
    for l, c in enumerate(orbit.columns):
        entries.extend(_rho(eps_sign(orbit.eps, l), c))
    assert len(entries) == orbit.dim_v // 2
    return InfinitesimalCharacter(entries)


@dataclass(frozen=True)
class DualityResult:
    dual: ComplexOrbit
    half_h: InfinitesimalCharacter
    checked: bool

    def to_json(self):
        return {"dual": self.dual.to_json(),
                "half_h": self.half_h.to_json(),
                "checked": self.checked}


def bv_dual(orbit: ComplexOrbit) -> DualityResult:
    """Dual orbit on the other series, together with one half of the weighted
    diagram element of that dual orbit.

    Rows of the dual are obtained by a single box move and a type collapse:
    grow the first column for a symplectic input, shrink the last column for
    an odd orthogonal input, collapse in place for an even orthogonal input.
    The checked flag records whether the input lies in the preferred family
    for the parity of dim V; only then is half_h guaranteed to agree with
    infinitesimal_character(orbit).
    """
    cols = orbit.columns
    n = orbit.dim_v
    if orbit.eps == -1:
        raw = (cols[0] + 1,) + cols[1:] if cols else (1,)
        dual_rows = type_collapse(raw, "B")
        dual_eps, dual_dim = 1, n + 1
    elif n % 2 == 1:
        raw = cols[:-1] + (cols[-1] - 1,)
        raw = tuple(r for r in raw if r > 0)
        dual_rows = type_collapse(raw, "C")
        dual_eps, dual_dim = -1, n - 1
    else:
        dual_rows = type_collapse(cols, "D")
        dual_eps, dual_dim = 1, n
    dual = ComplexOrbit(dual_eps, dual_dim, transpose(dual_rows))
    entries = []
    odd_rows = 0
    for r in dual_rows:
        v = Fraction(r - 1, 2)
        while v > 0:
            entries.append(v)
            v -= 1
        if r % 2 == 1:
            odd_rows += 1
    entries.extend([Fraction(0)] * (odd_rows // 2))
    checked = in_nil_p(cols, orbit.eps, n % 2)
    return DualityResult(dual, InfinitesimalCharacter(entries), checked)


def _max_tail_columns(n, caps):
    """Columns of the largest partition of n whose tail sums respect the
    caps: sum of columns from index m onward stays <= caps[m - 1], with
    missing caps read as zero.

    Maximality is simultaneous in every tail sum, which is possible because
    the feasible tail vectors are closed under pointwise maximum.  Each
    column is therefore forced to the smallest height allowed by the caps
    ahead of it.
    """
    cols = []
    shift = 0
    while n > 0:
        best = 1
        # one index past the known caps always has cap 0
        for ahead in range(1, len(caps) - shift + 2):
            cap = caps[shift + ahead - 1] if shift + ahead - 1 < len(caps) else 0
            need = -((cap - n) // ahead)
            if need > best:
                best = need
        cols.append(best)
        n -= best
        shift += 1
    assert all(a >= b for a, b in zip(cols, cols[1:]))
    return tuple(cols)


def theta_lift_complex(orbit_prime: ComplexOrbit, dim_v: int) -> ComplexOrbit:
    """Orbit on the opposite series whose closure is the moment-map transfer
    of the closure of orbit_prime into dimension dim_v.

    The rank of the j-th power of any transferred element is capped by the
    rank of the (j-1)-st power on the source side.  The result is the type
    collapse of the largest partition obeying those caps; when dim_v exceeds
    the source dimension by at least the first source column this reduces to
    prepending dim_v minus the source dimension as a new first column.
    """
    eps = -orbit_prime.eps
    if dim_v < 0:
        raise DomainError(f"dimension {dim_v} is negative")
    if eps == -1 and dim_v % 2 == 1:
        raise DomainError(f"no skew form in odd dimension {dim_v}")
    src = orbit_prime.columns
    caps = tuple(sum(src[m:]) for m in range(len(src) + 1))  # caps[m] bounds tail m+1
    cols = _max_tail_columns(dim_v, caps)
    rows = eps_collapse(transpose(cols), eps)
    return ComplexOrbit(eps, dim_v, transpose(rows))


def gen_descent_complex(orbit: ComplexOrbit, dim_v_prime: int) -> ComplexOrbit:
    """Orbit of the generalized descent: the smallest orbit on the opposite
    series, in dimension dim_v_prime, reached from orbit through the moment
    map correspondence.

    The columns are [c_1 + slack, c_2, ..., c_k] where slack is
    dim_v_prime - (c_1 + ... + c_k); it exists exactly when the slack is
    nonnegative, and equals the ordinary descent at slack zero.
    """
    tail = orbit.columns[1:]
    t = sum(tail)
    slack = dim_v_prime - t
    if slack < 0:
        raise DomainError(
            f"no generalized descent: target dimension {dim_v_prime} is "
            f"smaller than the rank {t} of the orbit")
    eps_p = -orbit.eps
    if eps_p == -1 and dim_v_prime % 2 == 1:
        raise DomainError(f"no skew form in odd dimension {dim_v_prime}")
    if dim_v_prime == 0:
        return ComplexOrbit(eps_p, 0, ())
    first = (tail[0] if tail else 0) + slack
    cols = (first,) + tail[1:] if first > 0 else tail[1:]
    return ComplexOrbit(eps_p, dim_v_prime, cols)


def good_for_gen_descent(orbit: ComplexOrbit) -> bool:
    """True when the two leading columns exist and agree; then transfer back
    from the generalized descent recovers the orbit closure."""
    cols = orbit.columns
    return len(cols) >= 2 and cols[0] == cols[1]


_REAL_ORTHOGONAL_KIND = (1, 1)


def induce_complex(orbit: ComplexOrbit, l: int, kind) -> ComplexOrbit:
    """Orbit induced from a descended orbit [c_1, ..., c_k] by rebuilding two
    leading columns out of an l-dimensional middle block.

    kind is the (eps, eps_dot) pair of the ambient space.  The real
    orthogonal kind splits the block as l+1, l-1; every other kind gives the
    doubled column l, l.
    """
    eps, _eps_dot = kind
    if eps != orbit.eps:
        raise DomainError(f"orbit sign {orbit.eps:+d} does not match the "
                          f"ambient kind sign {eps:+d}")
    c1 = orbit.columns[0] if orbit.columns else 0
    if l < c1:
        raise DomainError(f"middle block size {l} is smaller than the "
                          f"leading column {c1}")
    if tuple(kind) == _REAL_ORTHOGONAL_KIND:
        head = (l + 1, l - 1)
    else:
        head = (l, l)
    cols = tuple(c for c in head if c > 0) + orbit.columns
    try:
        return ComplexOrbit(orbit.eps, orbit.dim_v + 2 * l, cols)
    except DomainError as exc:
        raise DomainError(f"induction from {list(orbit.columns)} with block "
                          f"size {l} is not defined: {exc}") from exc


def orbit_dimension(orbit: ComplexOrbit) -> int:
    """Complex dimension of the orbit.

    dim of the ambient Lie algebra minus the centralizer dimension
    (sum of squared columns plus or minus the odd row count, halved).
    """
    n = orbit.dim_v
    g_dim = n * (n + 1) // 2 if orbit.eps == -1 else n * (n - 1) // 2
    odd_rows = sum(1 for r in orbit.rows() if r % 2 == 1)
    twice_cent = sum(c * c for c in orbit.columns)
    twice_cent += odd_rows if orbit.eps == -1 else -odd_rows
    assert twice_cent % 2 == 0
    return g_dim - twice_cent // 2
