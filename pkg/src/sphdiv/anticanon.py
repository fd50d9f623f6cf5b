"""Anticanonical weight, divisor coefficients, and the valuation cone.

The distinguished anticanonical section has B-weight
kappa = 2 rho_S - 2 rho_{Sp}; its divisor is sum(m_i D_i) over the
colors plus every G-stable boundary divisor with coefficient 1, where
m_i is 1 for colors of type a/2a and <alpha^vee, kappa> for type b.
An exhaustive bounded search doubles as an independent uniqueness
oracle for the decomposition kappa = sum(m_i chi_i).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .datum import SphericalDatum
from .errors import InconsistencyError, InsufficientDataError
from .lunatypes import ColorType, resolved_types
from .rootsys import Coweight, RootSystem, Weight, pair, two_rho

ENUM_MAX_COLORS = 8
ENUM_MAX_BOUND = 12


def kappa(rs: RootSystem, Sp=()) -> Weight:
    """2 rho_S - 2 rho_{Sp} in fundamental coordinates: coordinate i is
    2 - <alpha_i^vee, 2 rho_{Sp}>, so it vanishes exactly on Sp."""
    t = two_rho(rs, sorted(Sp))
    fund = tuple(2 - x for x in t.fund)
    return Weight(fund, (0,) * rs.central_rank)


def color_coefficient(datum: SphericalDatum, color) -> int:
    """The divisor coefficient of one color: 1 for types a/2a, and the
    common value <alpha^vee, kappa> over its moving roots for type b."""
    if isinstance(color, str):
        color = datum.color(color)
    kind = resolved_types(datum)[color.name]
    if kind is not ColorType.B:
        return 1
    kap = kappa(datum.rs, datum.Sp)
    values = {alpha: pair(alpha, kap) for alpha in color.moved_by}
    distinct = set(values.values())
    if len(distinct) != 1:
        detail = ", ".join(f"{datum.rs.root_name(a)}->{v}" for a, v in values.items())
        raise InconsistencyError(
            f"color {color.name}: type-b coefficient differs across moving roots ({detail})")
    value = distinct.pop()
    if value.denominator != 1 or value < 1:
        raise InconsistencyError(
            f"color {color.name}: coefficient {value} is not a positive integer")
    return int(value)


@dataclass(frozen=True)
class AnticanonicalDivisor:
    """Coefficients of the anticanonical section's divisor."""
    color_coeffs: tuple[tuple[str, int], ...]
    boundary_count: int
    boundary_coeff: int = 1

    def coefficient(self, name: str) -> int:
        for n, m in self.color_coeffs:
            if n == name:
                return m
        raise KeyError(name)


def anticanonical_divisor(datum: SphericalDatum) -> AnticanonicalDivisor:
    coeffs = tuple((c.name, color_coefficient(datum, c)) for c in datum.colors)
    return AnticanonicalDivisor(coeffs, datum.boundary_count)


def verify_decomposition(datum: SphericalDatum) -> bool:
    """Does sum(m_i chi_i) equal kappa on the fundamental coordinates?
    Central parts are ignored; every color must carry chi."""
    missing = [c.name for c in datum.colors if c.chi is None]
    if missing:
        raise InsufficientDataError(f"colors without chi: {', '.join(missing)}")
    total = [Fraction(0)] * datum.rs.rank
    for c in datum.colors:
        m = color_coefficient(datum, c)
        for k, x in enumerate(c.chi.fund):
            total[k] += m * x
    return tuple(total) == kappa(datum.rs, datum.Sp).fund


def enumerate_positive_solutions(kap: Weight, chis, bound: int) -> list[tuple[int, ...]]:
    """All integer vectors (m_1..m_k), 1 <= m_i <= bound, with
    sum(m_i chi_i) = kappa on fundamental coordinates, in lexicographic
    order.

    This is a deliberately independent exhaustive search (used to certify
    uniqueness of the closed-form coefficients); it prunes branches only
    with sound per-coordinate interval bounds on the remaining partial
    sums, so no solution under the bound can be missed.  Rejected when
    k > 8 or bound > 12.
    """
    chis = list(chis)
    k = len(chis)
    if k > ENUM_MAX_COLORS or bound > ENUM_MAX_BOUND:
        raise ValueError(
            f"enumeration cap exceeded (k={k} > {ENUM_MAX_COLORS} or "
            f"bound={bound} > {ENUM_MAX_BOUND})")
    if bound < 1:
        return []
    n = len(kap.fund)
    cols = []
    for chi in chis:
        if len(chi.fund) != n:
            raise ValueError("chi dimension mismatch")
        cols.append(tuple(chi.fund))
    target = tuple(kap.fund)
    if k == 0:
        return [()] if all(x == 0 for x in target) else []

    # suffix interval bounds per coordinate
    lo = [[Fraction(0)] * n for _ in range(k + 1)]
    hi = [[Fraction(0)] * n for _ in range(k + 1)]
    for j in range(k - 1, -1, -1):
        for c in range(n):
            a, b = cols[j][c], bound * cols[j][c]
            if a > b:
                a, b = b, a
            lo[j][c] = lo[j + 1][c] + a
            hi[j][c] = hi[j + 1][c] + b

    found = []
    partial = [Fraction(0)] * n
    m = [0] * k

    def walk(j):
        for c in range(n):
            rest = target[c] - partial[c]
            if rest < lo[j][c] or rest > hi[j][c]:
                return
        if j == k:
            found.append(tuple(m))
            return
        col = cols[j]
        for v in range(1, bound + 1):
            m[j] = v
            for c in range(n):
                partial[c] += col[c]
            walk(j + 1)
        for c in range(n):
            partial[c] -= bound * col[c]

    walk(0)
    return found


# ------------------------------------------------------------- cone

@dataclass(frozen=True)
class ValuationCone:
    """The cone {v : <v, sigma> <= 0 for every spherical root sigma},
    presented by its defining halfspace weights."""
    halfspaces: tuple[Weight, ...]


def valuation_cone(datum: SphericalDatum) -> ValuationCone:
    if datum.spherical_roots is None:
        raise InsufficientDataError("no spherical roots: valuation cone unknown")
    return ValuationCone(tuple(datum.spherical_roots))


def cone_contains(cone: ValuationCone, v: Coweight) -> bool:
    return all(pair(v, s) <= 0 for s in cone.halfspaces)


def _require_cone_data(datum: SphericalDatum):
    if datum.spherical_roots is None:
        raise InsufficientDataError("no spherical roots given")
    if datum.lattice_M is None:
        raise InsufficientDataError("no lattice M given")
    mvecs = [mu.coords() for mu in datum.lattice_M]
    if linalg.rank(mvecs) != len(mvecs):
        raise InconsistencyError("lattice M basis is dependent")
    rows = []
    for i, s in enumerate(datum.spherical_roots):
        sol = linalg.solve_columns(mvecs, s.coords()) if mvecs else None
        if sol is None:
            raise InconsistencyError(f"spherical root {i} lies outside span(M)")
        rows.append(tuple(sol))
    return mvecs, rows


def _lift_functional(mvecs, x, dim) -> Coweight:
    """A coweight on the full character space restricting to the
    functional mu_j -> x_j on the lattice basis.

    The unknown v satisfies sum_r v_r mu_j[r] = x_j, so the columns of
    the system are the coordinate slices (mu_0[r], mu_1[r], ...).
    """
    if not mvecs:
        return Coweight((Fraction(0),) * dim)
    cols = [tuple(mu[r] for mu in mvecs) for r in range(dim)]
    sol = linalg.solve_columns(cols, tuple(x))
    if sol is None:
        raise InconsistencyError("lattice basis is dependent, cannot lift")
    return Coweight(tuple(sol))


def cone_generator_directions(datum: SphericalDatum) -> list[Coweight]:
    """Spanning generator directions of the valuation cone as coweights:
    the negated dual basis of the spherical roots plus both signs of a
    basis of the lineality space, all expressed against the M basis."""
    mvecs, rows = _require_cone_data(datum)
    dim = datum.rs.rank + datum.rs.central_rank
    m = len(mvecs)
    s = len(rows)
    dirs = []
    if s:
        for kidx in range(s):
            e = [Fraction(0)] * s
            e[kidx] = Fraction(1)
            d = linalg.solve_columns([tuple(r[j] for r in rows) for j in range(m)], tuple(e))
            # d has <sigma_i, d> = delta_{i,k}; the ray is its negation
            if d is None:
                raise InconsistencyError("spherical roots dependent in M coordinates")
            dirs.append([-x for x in d])
        lin = linalg.nullspace(rows)
    else:
        lin = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(m))
               for i in range(m)]
    for l in lin:
        dirs.append(list(l))
        dirs.append([-x for x in l])
    return [_lift_functional(mvecs, d, dim) for d in dirs]


def cone_interior_witness(datum: SphericalDatum) -> Coweight:
    """A point with <v, sigma> = -1 for every spherical root (strictly
    interior when there are any; the origin otherwise)."""
    mvecs, rows = _require_cone_data(datum)
    dim = datum.rs.rank + datum.rs.central_rank
    m = len(mvecs)
    if not rows:
        return _lift_functional(mvecs, [Fraction(0)] * m, dim)
    target = [Fraction(-1)] * len(rows)
    x = linalg.solve_columns([tuple(r[j] for r in rows) for j in range(m)], tuple(target))
    if x is None:
        raise InconsistencyError("spherical roots dependent in M coordinates")
    return _lift_functional(mvecs, x, dim)


def uniqueness_certificate(datum: SphericalDatum) -> bool:
    """True when only mu = 0 pairs to zero with the whole valuation cone,
    i.e. the cone is full-dimensional in Hom(M, Q).  With independent
    spherical roots this always holds: the dual-basis point with every
    pairing -1 is an interior witness."""
    mvecs, rows = _require_cone_data(datum)
    if rows and linalg.rank(rows) != len(rows):
        raise InconsistencyError("spherical roots dependent: no certificate")
    witness = cone_interior_witness(datum)
    cone = valuation_cone(datum)
    if not cone_contains(cone, witness):
        raise InconsistencyError("interior witness fell outside the cone")
    return True


def generator_order_shift(datum: SphericalDatum, mu: Weight, nu: Coweight) -> Fraction:
    """Vanishing order along nu of the section scaled by a character mu:
    1 + <nu, mu>.  mu must lie in span(M) when M is given."""
    if datum.lattice_M is not None:
        mvecs = [m.coords() for m in datum.lattice_M]
        if not linalg.in_span(mvecs, mu.coords()):
            raise InsufficientDataError("mu is not in the span of M")
    return Fraction(1) + pair(nu, mu)
