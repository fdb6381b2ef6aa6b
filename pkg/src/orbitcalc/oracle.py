"""Exact matrix oracles.

Everything combinatorial in this package has a matrix shadow: nilpotent
elements compatible with an explicit bilinear form, involution forms for the
symmetric-pair decomposition, and moment-map transfer elements between two
forms.  The constructions here build those matrices over the rationals (or
Gaussian rationals) and read partitions and signatures back off them by
exact rank computations, providing an independent route to the answers the
closed formulas produce.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    GaussianRational,
    identity,
    is_zero_matrix,
    mat_add,
    mat_eq,
    mat_inverse,
    mat_mul,
    mat_scale,
    mat_transpose,
    rank,
    solve_affine,
    stack,
    zeros,
)
from .partitions import (
    DomainError,
    all_partitions,
    check_eps,
    dominates,
    is_collapse_type,
    is_type_partition,
    transpose,
    type_collapse,
)
from .orbits import (
    ComplexOrbit,
    enumerate_orbits,
    gen_descent_complex,
    orbit_dimension,
    theta_lift_complex,
)
from .realforms import (
    KINDS,
    RealForm,
    Signature,
    SignedDiagram,
    SpaceKind,
    enumerate_k_orbits,
)


@dataclass
class NilpotentModel:
    """A nilpotent matrix together with the form it preserves and the string
    basis layout used to build it."""

    eps: int
    dim: int
    columns: tuple
    x: list
    gram: list
    strings: tuple


def _string_plan(eps, rows):
    """Group Jordan strings into self-paired and cross-paired blocks.

    A block of size r can pair with itself only when r - 1 has the parity
    of the form sign; other sizes must occur evenly and pair up.
    """
    plan = []
    for r, m in sorted(Counter(rows).items(), reverse=True):
        if (r % 2 == 1) == (eps == 1):
            plan.extend([("self", r)] * m)
        else:
            if m % 2 != 0:
                raise DomainError(f"rows of length {r} cannot pair up")
            plan.extend([("pair", r)] * (m // 2))
    return plan


def _fill_self_gram(g, base, r):
    for i in range(r):
        g[base + i][base + r - 1 - i] = Fraction((-1) ** i)


def _fill_pair_gram(g, eps, bu, bw, r):
    for i in range(r):
        g[bu + i][bw + r - 1 - i] = Fraction((-1) ** i)
        g[bw + i][bu + r - 1 - i] = Fraction(eps * (-1) ** (r - 1 - i))


def jordan_model(eps, columns) -> NilpotentModel:
    """Nilpotent matrix with the given column partition inside the Lie
    algebra of the split eps-form, together with that form.

    The basis is a union of shift strings; strings of self-pairing length
    carry an alternating-sign antidiagonal block of the form, other lengths
    are paired off in dual couples.
    """
    check_eps(eps)
    cols = tuple(columns)
    if not is_type_partition(cols, eps):
        raise DomainError(f"columns {list(cols)} are not a type partition "
                          f"for eps = {eps:+d}")
    rows = transpose(cols)
    n = sum(cols)
    x = zeros(n, n)
    g = zeros(n, n)
    strings = []
    base = 0
    for shape, r in _string_plan(eps, rows):
        if shape == "self":
            for i in range(r - 1):
                x[base + i + 1][base + i] = Fraction(1)
            _fill_self_gram(g, base, r)
            strings.append(("self", r, base))
            base += r
        else:
            bu, bw = base, base + r
            for b in (bu, bw):
                for i in range(r - 1):
                    x[b + i + 1][b + i] = Fraction(1)
            _fill_pair_gram(g, eps, bu, bw, r)
            strings.append(("pair", r, bu, bw))
            base += 2 * r
    assert base == n
    return NilpotentModel(eps, n, cols, x, g, tuple(strings))


def partition_from_matrix(x) -> tuple:
    """Column partition of a nilpotent matrix, from exact kernel dimensions
    of its powers."""
    n = len(x)
    cols = []
    power = identity(n)
    prev_rank = n
    for _ in range(n):
        if prev_rank == 0:
            break
        power = mat_mul(power, x)
        r = rank(power)
        if r == prev_rank:
            raise DomainError("matrix is not nilpotent")
        cols.append(prev_rank - r)
        prev_rank = r
    assert all(a >= b for a, b in zip(cols, cols[1:]))
    return tuple(cols)


def split_gram(eps, n):
    """Antidiagonal split form: all ones for the symmetric kind, signed
    halves for the skew kind."""
    check_eps(eps)
    if eps == -1 and n % 2 == 1:
        raise DomainError(f"no skew form in odd dimension {n}")
    g = zeros(n, n)
    for i in range(n):
        if eps == 1:
            g[i][n - 1 - i] = Fraction(1)
        else:
            g[i][n - 1 - i] = Fraction(1 if i < n // 2 else -1)
    return g


def form_checks(x, g, eps):
    """Names of the compatibility conditions an element of the form's Lie
    algebra must satisfy, with their truth values."""
    xt = mat_transpose(x)
    return [
        ("gram symmetry", mat_eq(mat_transpose(g), mat_scale(g, Fraction(eps)))),
        ("gram nondegenerate", rank(g) == len(g)),
        ("form invariance", is_zero_matrix(mat_add(mat_mul(xt, g),
                                                   mat_mul(g, x)))),
    ]


# ---------------------------------------------------------------------------
# signed models


@dataclass
class SignedModel:
    kind: SpaceKind
    x: list
    gram: list
    cartan: list
    diagram: tuple


def _self_start_allowed(kind, r):
    # a string may pair with itself only for the two real kinds, at the
    # length parity matching both signs
    odd = r % 2 == 1
    return (odd == (kind.eps == 1)) and (odd == (kind.eps_dot == 1))


def _partner_start(kind, r, s):
    return kind.eps_dot * (1 if (r - 1) % 2 == 0 else -1) * s


def signed_configs(kind, rows):
    """All ways to organize the Jordan strings of the rows into self blocks
    and coupled blocks with start signs, for the given kind.  Yields tuples
    of ("self" | "pair", length, start)."""
    kind = SpaceKind(*kind)
    per_group = []
    for r, m in sorted(Counter(rows).items(), reverse=True):
        opts = []
        if _self_start_allowed(kind, r):
            sigmas = range(m, -1, -2)
        else:
            sigmas = [0] if m % 2 == 0 else []
        for sigma in sigmas:
            pairs = (m - sigma) // 2
            for self_plus in range(sigma + 1):
                for pair_plus in range(pairs + 1):
                    opts.append(
                        (("self", r, 1),) * self_plus
                        + (("self", r, -1),) * (sigma - self_plus)
                        + (("pair", r, 1),) * pair_plus
                        + (("pair", r, -1),) * (pairs - pair_plus))
        per_group.append(opts)
    for combo in itertools.product(*per_group):
        yield tuple(itertools.chain.from_iterable(combo))


def _config_ladder(kind, config):
    depth = max((r for _, r, _ in config), default=0)
    plus = [0] * depth
    minus = [0] * depth
    for shape, r, s in config:
        starts = [s]
        if shape == "pair":
            starts.append(_partner_start(kind, r, s))
        for st in starts:
            for l in range(r):
                val = st * (1 if (r - 1 - l) % 2 == 0 else -1)
                if val > 0:
                    plus[l] += 1
                else:
                    minus[l] += 1
    return tuple(Signature(p, m) for p, m in zip(plus, minus))


def reachable_diagrams(kind, columns):
    """Map from reachable signed-column ladders to one string configuration
    producing each, over all form-compatible string models of the complex
    orbit."""
    rows = transpose(columns)
    out = {}
    for config in signed_configs(kind, rows):
        ladder = _config_ladder(kind, config)
        out.setdefault(ladder, config)
    return out


def signed_jordan_model(kind, config) -> SignedModel:
    """Matrices (x, gram, cartan) realizing one string configuration: x
    shifts along strings, gram pairs them antidiagonally, and the cartan
    form is diagonal with entries alternating along each string (values in
    the fourth roots of unity matching the kind)."""
    kind = SpaceKind(*kind)
    n = sum(r if shape == "self" else 2 * r for shape, r, _ in config)
    x = zeros(n, n)
    g = zeros(n, n)
    lam = zeros(n, n)

    def l_entry(label):
        if kind.eps_dot == 1:
            return Fraction(label)
        return GaussianRational(0, label)

    base = 0
    for shape, r, s in config:
        if shape == "self":
            for i in range(r - 1):
                x[base + i + 1][base + i] = Fraction(1)
            _fill_self_gram(g, base, r)
            for i in range(r):
                lam[base + i][base + i] = l_entry(s * (-1) ** i)
            base += r
        else:
            bu, bw = base, base + r
            sw = _partner_start(kind, r, s)
            for b, st in ((bu, s), (bw, sw)):
                for i in range(r - 1):
                    x[b + i + 1][b + i] = Fraction(1)
                for i in range(r):
                    lam[b + i][b + i] = l_entry(st * (-1) ** i)
            _fill_pair_gram(g, kind.eps, bu, bw, r)
            base += 2 * r
    return SignedModel(kind, x, g, lam, _config_ladder(kind, config))


def signed_model_checks(model: SignedModel):
    """Compatibility equations for a signed model, by name."""
    kind = model.kind
    checks = form_checks(model.x, model.gram, kind.eps)
    lt = mat_transpose(model.cartan)
    eye = identity(len(model.x))
    checks.extend([
        ("cartan square", mat_eq(mat_mul(model.cartan, model.cartan),
                                 mat_scale(eye, Fraction(kind.eps_dot)))),
        ("cartan isometry", mat_eq(mat_mul(mat_mul(lt, model.gram),
                                           model.cartan), model.gram)),
        ("odd part", is_zero_matrix(mat_add(mat_mul(model.cartan, model.x),
                                            mat_mul(model.x, model.cartan)))),
    ])
    return checks


def signed_diagram_from_matrix(x, cartan) -> SignedDiagram:
    """Signed column ladder of a nilpotent element anticommuting with the
    involution form: per power of x, the kernel is split into the two
    cartan eigenspaces by exact rank computations (over the Gaussian
    rationals when the form squares to -1)."""
    n = len(x)
    if not is_zero_matrix(mat_add(mat_mul(cartan, x), mat_mul(x, cartan))):
        raise DomainError("element does not anticommute with the involution "
                          "form")
    square = mat_mul(cartan, cartan)
    eye = identity(n)
    if mat_eq(square, eye):
        eigenvalues = (Fraction(1), Fraction(-1))
    elif mat_eq(square, mat_scale(eye, Fraction(-1))):
        eigenvalues = (GaussianRational(0, 1), GaussianRational(0, -1))
    else:
        raise DomainError("involution form does not square to +1 or -1")
    columns = partition_from_matrix(x)
    cols = []
    prev = [0, 0]
    power = identity(n)
    for _ in columns:
        power = mat_mul(power, x)
        dims = []
        for lam in eigenvalues:
            shifted = [[cartan[i][j] - (lam if i == j else 0)
                        for j in range(n)] for i in range(n)]
            dims.append(n - rank(stack(power, shifted)))
        cols.append(Signature(dims[0] - prev[0], dims[1] - prev[1]))
        prev = dims
    diagram = SignedDiagram(tuple(cols))
    assert diagram.underlying() == columns
    return diagram


# ---------------------------------------------------------------------------
# transfer elements


def _complement_blocks(model: NilpotentModel):
    """Hyperbolic pairs and norm vectors of the twisted pairing on a
    complement of the kernel of x, read from the string layout.

    The twisted pairing of the model couples string positions i and
    r - 2 - i with value (-1)^i; for a self string of even length this
    leaves one middle vector of self-pairing (-1)^(r/2 - 1)."""
    pairs = []
    norms = []
    for s in model.strings:
        if s[0] == "self":
            _, r, base = s
            for i in range((r - 1) // 2):
                pairs.append((base + i, base + r - 2 - i, Fraction((-1) ** i)))
            if (r - 1) % 2 == 1:
                mid = (r - 2) // 2
                norms.append((base + mid, Fraction((-1) ** mid)))
        else:
            _, r, bu, bw = s
            for i in range(r - 1):
                pairs.append((bu + i, bw + r - 2 - i, Fraction((-1) ** i)))
    return pairs, norms


def _kernel_positions(model: NilpotentModel):
    ends = []
    for s in model.strings:
        if s[0] == "self":
            _, r, base = s
            ends.append(base + r - 1)
        else:
            _, r, bu, bw = s
            ends.extend([bu + r - 1, bw + r - 1])
    return ends


def _embed_complement(model: NilpotentModel, gp):
    """Matrix mapping the model space into the split form gp: zero on the
    kernel of the model element, isometric for the twisted pairing on the
    complement.  Returns (matrix, unused pairs, leftover unit vectors) or
    None when the complement does not fit.

    The leftover description spans the orthogonal complement of the image:
    untouched hyperbolic pairs of gp, plus vectors of self-pairing +-1 (one
    per half-used hyperbolic plane, possibly the split center).
    """
    n_t = len(gp)
    pairs, norms = _complement_blocks(model)
    if 2 * len(pairs) + len(norms) > n_t:
        return None
    t = zeros(n_t, model.dim)
    free = [(a, n_t - 1 - a) for a in range(n_t // 2)]
    center = (n_t - 1) // 2 if n_t % 2 == 1 else None
    for src_a, src_b, beta in pairs:
        fa, fb = free.pop()
        t[fa][src_a] = Fraction(1)
        # scale so the target pairing reproduces beta
        t[fb][src_b] = beta / gp[fa][fb]
    ones = []
    queue = list(norms)
    while queue:
        if len(queue) == 1 and center is not None:
            idx, nu = queue.pop()
            t[center][idx] = Fraction(1) if nu == 1 else GaussianRational(0, 1)
            center = None
            continue
        fa, fb = free.pop()
        gamma = gp[fa][fb]
        idx, nu = queue.pop()
        t[fa][idx] = Fraction(1)
        t[fb][idx] = nu / (2 * gamma)
        if queue:
            # a second norm vector fits in the same hyperbolic plane
            idx2, nu2 = queue.pop()
            scale = GaussianRational(0, 1) if nu2 == nu else Fraction(1)
            t[fa][idx2] = scale * Fraction(1)
            t[fb][idx2] = scale * (-nu) / (2 * gamma)
        else:
            vec = [Fraction(0)] * n_t
            vec[fa] = Fraction(1)
            vec[fb] = -nu / (2 * gamma)
            ones.append((vec, -nu))
    if center is not None:
        vec = [Fraction(0)] * n_t
        vec[center] = Fraction(1)
        ones.append((vec, gp[center][center]))
    return t, free, ones


def _isotropic_frame(gp, free, ones, eps_t):
    """Basis of a maximal totally isotropic subspace of the leftover blocks,
    over the Gaussian rationals for a symmetric target."""
    n_t = len(gp)
    if eps_t == -1:
        frame = []
        for a, b in free:
            vec = [Fraction(0)] * n_t
            vec[a] = Fraction(1)
            frame.append(vec)
        return frame
    units = []
    for a, b in free:
        gamma = gp[a][b]
        v1 = [Fraction(0)] * n_t
        v1[a] = Fraction(1)
        v1[b] = 1 / (2 * gamma)
        v2 = [Fraction(0)] * n_t
        v2[a] = GaussianRational(0, 1)
        v2[b] = GaussianRational(0, -1) / (2 * gamma)
        units.extend([v1, v2])
    for vec, q in ones:
        if q == 1:
            units.append(list(vec))
        else:
            units.append([GaussianRational(0, 1) * x for x in vec])
    frame = []
    for j in range(len(units) // 2):
        u, w = units[2 * j], units[2 * j + 1]
        frame.append([x + GaussianRational(0, 1) * y for x, y in zip(u, w)])
    return frame


def lift_closure_sample(orbit_prime: ComplexOrbit, dim_v: int, trials=32,
                        seed=20240801, bound=5) -> ComplexOrbit:
    """Largest orbit met by moment-map transfer elements over the closure of
    orbit_prime.

    For every orbit in the closure, transfer elements with that source-side
    image are built from an exact isometric embedding of the twisted
    pairing, with the kernel of the source model sent to random vectors of
    a maximal totally isotropic complement.  Up to isometries of the target
    form, which do not move partitions, every transfer element arises this
    way, so the dominance maximum of the sampled target-side partitions
    converges to the transfer of the closure.
    """
    eps = -orbit_prime.eps
    if eps == -1 and dim_v % 2 == 1:
        raise DomainError(f"no skew form in odd dimension {dim_v}")
    if dim_v == 0:
        return ComplexOrbit(eps, 0, ())
    g = split_gram(eps, dim_v)
    rng = random.Random(seed)
    src_rows = orbit_prime.rows()
    seen = set()
    for stratum in enumerate_orbits(orbit_prime.eps, orbit_prime.dim_v):
        if not dominates(src_rows, stratum.rows()):
            continue
        model = jordan_model(stratum.eps, stratum.columns)
        embedded = _embed_complement(model, g)
        if embedded is None:
            continue
        base, free, ones = embedded
        frame = _isotropic_frame(g, free, ones, eps)
        kernel_idx = _kernel_positions(model)
        m_target = mat_mul(model.gram, model.x)
        gram_inv = mat_inverse(model.gram) if model.dim else []
        if model.dim:
            gb = mat_mul(g, base)
            assert mat_eq(mat_mul(mat_transpose(base), gb), m_target)
            # frame orthogonal to the embedded image and totally isotropic;
            # together with the base congruence this makes every sampled s
            # below an exact transfer element, so no per-trial check is run
            for a, vec in enumerate(frame):
                pair_base = [sum((vec[i] * gb[i][j] for i in range(dim_v)),
                                 Fraction(0)) for j in range(model.dim)]
                assert not any(pair_base)
                for other in frame[a:]:
                    gw = [sum((g[i][j] * other[j] for j in range(dim_v)),
                              Fraction(0)) for i in range(dim_v)]
                    assert not sum((vec[i] * gw[i] for i in range(dim_v)),
                                   Fraction(0))
        rounds = trials if frame and kernel_idx else 1
        for _ in range(rounds):
            s = [row[:] for row in base]
            for pos in kernel_idx:
                coeffs = [GaussianRational(rng.randint(-bound, bound),
                                           rng.randint(-bound, bound))
                          for _ in frame]
                for i in range(dim_v):
                    s[i][pos] = sum((c * vec[i] for c, vec in
                                     zip(coeffs, frame)), Fraction(0))
            if model.dim:
                x = mat_mul(mat_mul(s, gram_inv), mat_mul(mat_transpose(s), g))
            else:
                x = zeros(dim_v, dim_v)
            seen.add(transpose(partition_from_matrix(x)))
    if not seen:
        raise DomainError("no transfer element was sampled")
    tops = [p for p in seen if all(dominates(p, q) for q in seen)]
    if len(tops) != 1:
        raise DomainError("sampled transfer images have no unique maximum; "
                          "increase trials")
    return ComplexOrbit(eps, dim_v, transpose(tops[0]))


def gen_descent_sample(orbit: ComplexOrbit, dim_v_prime: int) -> ComplexOrbit:
    """Image partition of an explicit minimal-rank transfer element out of a
    model of the orbit.

    The element kills the kernel of the model and embeds a complement
    isometrically (for the twisted pairing) into the target split form, so
    its source-side image is exactly the model; the partition of the
    target-side image is returned.  Gaussian rational entries appear when a
    norm vector needs an imaginary unit.
    """
    eps_p = -orbit.eps
    if eps_p == -1 and dim_v_prime % 2 == 1:
        raise DomainError(f"no skew form in odd dimension {dim_v_prime}")
    model = jordan_model(orbit.eps, orbit.columns)
    rank_x = model.dim - (orbit.columns[0] if orbit.columns else 0)
    if rank_x > dim_v_prime:
        raise DomainError(
            f"no generalized descent: target dimension {dim_v_prime} is "
            f"smaller than the rank {rank_x} of the orbit")
    if dim_v_prime == 0:
        return ComplexOrbit(eps_p, 0, ())
    n, np = model.dim, dim_v_prime
    gp = split_gram(eps_p, np)
    t, _, _ = _embed_complement(model, gp)
    g_inv = mat_inverse(model.gram) if n else []
    tt = mat_transpose(t)
    if n:
        back = mat_mul(mat_mul(g_inv, tt), gp)      # adjoint of t
        assert mat_eq(mat_mul(back, t), model.x)
        image = mat_mul(t, back)
    else:
        image = zeros(np, np)
    cols = partition_from_matrix(image)
    return ComplexOrbit(eps_p, np, cols)


# ---------------------------------------------------------------------------
# consistency suites


def collapse_oracle(rows, kind):
    """Dominance maximum over all partitions of the type below the input,
    by exhaustive enumeration."""
    n = sum(rows)
    candidates = [p for p in all_partitions(n)
                  if is_collapse_type(p, kind) and dominates(rows, p)]
    tops = [p for p in candidates
            if all(dominates(p, q) for q in candidates)]
    if len(tops) != 1:
        raise DomainError(f"no unique dominance maximum below {list(rows)}")
    return tops[0]


def centralizer_dimension_oracle(orbit: ComplexOrbit) -> int:
    """Dimension of the centralizer of a model element inside the form's
    Lie algebra, via the rank of the bracket map on an explicit basis."""
    model = jordan_model(orbit.eps, orbit.columns)
    n = model.dim
    if n == 0:
        return 0
    g = model.gram
    # basis of the Lie algebra: solve e^T g + g e = 0 entrywise
    rows = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for a in range(n):
                row[a * n + i] += g[a][j]
                row[a * n + j] += g[i][a]
            rows.append(row)
    basis = solve_affine(rows, [Fraction(0)] * len(rows))[1]
    if not basis:
        return 0
    images = []
    for vec in basis:
        e = [vec[i * n:(i + 1) * n] for i in range(n)]
        br = mat_add(mat_mul(model.x, e), mat_scale(mat_mul(e, model.x),
                                                    Fraction(-1)))
        images.append([br[i][j] for i in range(n) for j in range(n)])
    return len(basis) - rank(mat_transpose(images))


def orbit_dimension_oracle(orbit: ComplexOrbit) -> int:
    n = orbit.dim_v
    g_dim = n * (n + 1) // 2 if orbit.eps == -1 else n * (n - 1) // 2
    return g_dim - centralizer_dimension_oracle(orbit)


def check_collapse(max_size=10):
    """Greedy collapse against the exhaustive dominance maximum."""
    cases = 0
    failures = []
    for kind in ("B", "C", "D"):
        for n in range(max_size + 1):
            for rows in all_partitions(n):
                try:
                    got = type_collapse(rows, kind)
                except DomainError:
                    continue
                cases += 1
                want = collapse_oracle(rows, kind)
                if got != want:
                    failures.append(f"collapse {list(rows)} kind {kind}: "
                                    f"greedy {list(got)} vs maximum "
                                    f"{list(want)}")
    return {"cases": cases, "failures": failures}


def check_models(max_dim=8):
    """Jordan models reproduce their partitions and preserve their forms."""
    cases = 0
    failures = []
    for eps in (1, -1):
        for n in range(max_dim + 1):
            for orbit in enumerate_orbits(eps, n):
                cases += 1
                model = jordan_model(eps, orbit.columns)
                bad = [name for name, ok in form_checks(model.x, model.gram,
                                                        eps) if not ok]
                if bad:
                    failures.append(f"{orbit}: model violates {bad}")
                got = partition_from_matrix(model.x)
                if got != orbit.columns:
                    failures.append(f"{orbit}: extracted columns {list(got)}")
    return {"cases": cases, "failures": failures}


def check_dimension(max_dim=7):
    """Closed-form orbit dimension against the centralizer-rank count."""
    cases = 0
    failures = []
    for eps in (1, -1):
        for n in range(max_dim + 1):
            for orbit in enumerate_orbits(eps, n):
                cases += 1
                formula = orbit_dimension(orbit)
                counted = orbit_dimension_oracle(orbit)
                if formula != counted:
                    failures.append(f"{orbit}: formula {formula}, "
                                    f"centralizer count gives {counted}")
    return {"cases": cases, "failures": failures}


def check_lift(max_dim=6, trials=12, seed=20240801, bound=5):
    """Combinatorial transfer against the sampled moment-map maximum."""
    cases = 0
    failures = []
    for eps_src in (1, -1):
        for n_src in range(max_dim + 1):
            if eps_src == -1 and n_src % 2 == 1:
                continue
            for source in enumerate_orbits(eps_src, n_src):
                for n_tgt in range(max_dim + 1):
                    if eps_src == 1 and n_tgt % 2 == 1:
                        continue
                    cases += 1
                    want = theta_lift_complex(source, n_tgt)
                    got = lift_closure_sample(source, n_tgt, trials=trials,
                                              seed=seed, bound=bound)
                    if got.columns != want.columns:
                        failures.append(
                            f"lift {source} to dimension {n_tgt}: formula "
                            f"{list(want.columns)}, sampled "
                            f"{list(got.columns)}")
    return {"cases": cases, "failures": failures}


def check_descent(max_dim=8, extra=3):
    """Generalized descent formula against the minimal transfer element."""
    cases = 0
    failures = []
    for eps in (1, -1):
        for n in range(max_dim + 1):
            if eps == -1 and n % 2 == 1:
                continue
            for orbit in enumerate_orbits(eps, n):
                rank_x = n - (orbit.columns[0] if orbit.columns else 0)
                for n_tgt in range(rank_x, rank_x + extra + 1):
                    if eps == 1 and n_tgt % 2 == 1:
                        continue
                    cases += 1
                    want = gen_descent_complex(orbit, n_tgt)
                    got = gen_descent_sample(orbit, n_tgt)
                    if got.columns != want.columns:
                        failures.append(
                            f"descent {orbit} to dimension {n_tgt}: formula "
                            f"{list(want.columns)}, transfer gives "
                            f"{list(got.columns)}")
    return {"cases": cases, "failures": failures}


def _ladder_total(ladder):
    plus = sum(s.plus for s in ladder)
    minus = sum(s.minus for s in ladder)
    return Signature(plus, minus)


def check_k_orbits(max_rank=2):
    """Signed diagram enumeration against string-model reachability, and
    model extraction back to the diagram."""
    cases = 0
    failures = []
    for kind in KINDS:
        max_n = 2 * max_rank + (1 if kind.eps == 1 else 0)
        for n in range(max_n + 1):
            if kind.eps == -1 and n % 2 == 1:
                continue
            for orbit in enumerate_orbits(kind.eps, n):
                ladders = reachable_diagrams(kind, orbit.columns)
                for ladder, config in ladders.items():
                    cases += 1
                    model = signed_jordan_model(kind, config)
                    bad = [name for name, ok in signed_model_checks(model)
                           if not ok]
                    if bad:
                        failures.append(f"{kind.name()} {orbit} model "
                                        f"violates {bad}")
                    extracted = signed_diagram_from_matrix(model.x,
                                                           model.cartan)
                    if extracted.cols != ladder:
                        failures.append(
                            f"{kind.name()} {orbit}: extraction "
                            f"{extracted} from a model of {SignedDiagram(ladder)}")
                for sig in kind.legal_signatures(n):
                    cases += 1
                    form = RealForm(kind, sig)
                    expected = {ko.diagram.cols
                                for ko in enumerate_k_orbits(form, orbit)}
                    sampled = {lad for lad in ladders
                               if _ladder_total(lad) == sig}
                    if expected != sampled:
                        failures.append(
                            f"{form.name()} {orbit}: enumeration finds "
                            f"{sorted(map(str, map(SignedDiagram, expected)))}, "
                            f"models reach "
                            f"{sorted(map(str, map(SignedDiagram, sampled)))}")
    return {"cases": cases, "failures": failures}


ORACLE_SUITES = {
    "collapse": check_collapse,
    "models": check_models,
    "dimension": check_dimension,
    "lift": check_lift,
    "descent": check_descent,
    "korbits": check_k_orbits,
}
