"""Column partitions and Young diagram primitives.

A nilpotent operator X on an n-dimensional space is recorded by its column
partition [c_0, ..., c_k], where c_l = dim Ker(X^(l+1)) - dim Ker(X^l).
Columns are weakly decreasing and positive; the empty tuple stands for the
zero-dimensional space.  Row lengths (Jordan block sizes) are the transpose.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Raised when an input violates one of the documented validity conditions.

    The message always names the condition that failed.
    """


def check_columns(columns) -> tuple:
    cols = tuple(int(c) for c in columns)
    for c in cols:
        if c <= 0:
            raise DomainError(f"column {c} is not a positive integer")
    for a, b in zip(cols, cols[1:]):
        if a < b:
            raise DomainError(f"columns {list(cols)} are not weakly decreasing")
    return cols


def check_eps(eps: int) -> int:
    if eps not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {eps!r}")
    return eps


def size(columns) -> int:
    return sum(columns)


def depth(columns) -> int:
    """Largest l with X^l != 0, read off the diagram; -1 for the empty one."""
    return len(check_columns(columns)) - 1


def transpose(partition) -> tuple:
    """Conjugate partition, turning columns into rows and back."""
    p = tuple(partition)
    if not p:
        return ()
    return tuple(sum(1 for c in p if c > i) for i in range(max(p)))


def column_descent(columns) -> tuple:
    """Remove the leftmost column; the empty diagram descends to itself."""
    return check_columns(columns)[1:]


def eps_sign(eps: int, level: int) -> int:
    # the sign attached to column l alternates along the diagram
    return eps if level % 2 == 0 else -eps


def is_type_partition(columns, eps) -> bool:
    """Whether the columns label a nilpotent orbit of the eps-symmetric group
    (symmetric form for eps = +1, skew form for eps = -1).

    The test is parity of tail sums: sum(c_l for l >= i) must be even for
    every odd i when eps = +1, and for every even i when eps = -1.
    Equivalently on rows: even row lengths appear an even number of times
    (eps = +1), or odd row lengths do (eps = -1).
    """
    cols = check_columns(columns)
    check_eps(eps)
    start = 1 if eps == 1 else 0
    for i in range(start, len(cols) + 1, 2):
        if sum(cols[i:]) % 2 != 0:
            return False
    return True


def nil_p_violation(columns, eps, parity):
    """Name the first failed membership condition for the preferred family,
    or return None if the columns belong to it.

    Membership requires a type partition in which every column has the given
    parity and c_l >= c_{l+1} + 2 holds at every level l of sign +1.
    """
    cols = check_columns(columns)
    check_eps(eps)
    if parity not in (0, 1):
        raise DomainError(f"parity must be 0 or 1, got {parity!r}")
    if not is_type_partition(cols, eps):
        return (f"columns {list(cols)} are not a type partition for "
                f"eps = {eps:+d}")
    for l, c in enumerate(cols):
        if c % 2 != parity:
            return f"column c_{l} = {c} does not have parity {parity}"
    for l in range(len(cols) - 1):
        if eps_sign(eps, l) == 1 and cols[l] < cols[l + 1] + 2:
            return (f"column gap c_{l} >= c_{l + 1} + 2 is required at levels "
                    f"of sign +1, but {cols[l]} < {cols[l + 1] + 2}")
    return None


def in_nil_p(columns, eps, parity) -> bool:
    """Membership in the preferred orbit family (fixed column parity, gaps of
    at least 2 at the +1-sign levels).  The empty partition belongs for
    either parity."""
    cols = check_columns(columns)
    if not is_type_partition(cols, eps):
        raise DomainError(f"columns {list(cols)} are not a type partition "
                          f"for eps = {eps:+d}")
    return nil_p_violation(cols, eps, parity) is None


_COLLAPSE = {
    # kind -> (parity of parts that must pair up, required parity of the size)
    "B": (0, 1),
    "D": (0, 0),
    "C": (1, 0),
}


def is_collapse_type(rows, kind) -> bool:
    """Row-multiplicity test: even parts pair up for B/D, odd parts for C."""
    bad, _ = _collapse_params(kind)
    counts = {}
    for r in rows:
        counts[r] = counts.get(r, 0) + 1
    return all(n % 2 == 0 for r, n in counts.items() if r % 2 == bad)


def _collapse_params(kind):
    if kind not in _COLLAPSE:
        raise DomainError(f"collapse kind must be B, C or D, got {kind!r}")
    return _COLLAPSE[kind]


def type_collapse(rows, kind) -> tuple:
    """Largest partition of the requested type dominated by the input rows.

    Repeatedly takes the largest part of the wrong parity occurring an odd
    number of times, shrinks its last copy by one box, and moves that box to
    the largest part lying at least two lower (appending a new part 1 when
    none exists).  Fixed points are exactly the partitions of the type, so
    the map is idempotent.
    """
    bad, size_parity = _collapse_params(kind)
    parts = sorted((int(r) for r in rows), reverse=True)
    if any(r <= 0 for r in parts):
        raise DomainError("rows must be positive integers")
    n = sum(parts)
    if n % 2 != size_parity:
        raise DomainError(f"size {n} has the wrong parity for a {kind} collapse")
    while True:
        q = _largest_offender(parts, bad)
        if q is None:
            return tuple(parts)
        i = len(parts) - 1 - parts[::-1].index(q)
        parts[i] -= 1
        if parts[i] == 0:
            parts.pop(i)
        for j, p in enumerate(parts):
            if p <= q - 2:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts.sort(reverse=True)


def _largest_offender(parts, bad):
    counts = {}
    for r in parts:
        counts[r] = counts.get(r, 0) + 1
    offenders = [r for r, n in counts.items() if r % 2 == bad and n % 2 == 1]
    return max(offenders) if offenders else None


def eps_collapse(rows, eps) -> tuple:
    """Collapse rows to the orthogonal type (eps = +1) or symplectic type
    (eps = -1); the orthogonal kind letter is chosen by the size parity."""
    check_eps(eps)
    n = sum(rows)
    if eps == -1:
        kind = "C"
    else:
        kind = "B" if n % 2 else "D"
    return type_collapse(rows, kind)


def dominates(a, b) -> bool:
    """Row-partition dominance: every leading partial sum of a is >= that
    of b.  Requires equal totals."""
    ra, rb = tuple(a), tuple(b)
    if sum(ra) != sum(rb):
        return False
    ta = tb = 0
    for i in range(max(len(ra), len(rb))):
        ta += ra[i] if i < len(ra) else 0
        tb += rb[i] if i < len(rb) else 0
        if ta < tb:
            return False
    return True


def all_partitions(n, max_part=None):
    """Yield every partition of n as a weakly decreasing tuple."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest
