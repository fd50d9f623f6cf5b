"""Color types from exact Lie-algebra presentations.

A presentation realizes the ambient algebra as block-diagonal rational
matrices (blocks of size >= 2 are traceless, size-1 blocks are central),
with the subalgebra h of the generic stabilizer, a Borel subalgebra b,
and an sl2 triple (e, h, f) for every simple root.  For a simple root
alpha outside Sp the stabilizer meets the minimal parabolic
p_alpha = b + span{f_alpha}; projecting it to the alpha-sl2 and
classifying the span decides the color type:

    span dim 3                    -> whole sl2 (only legal inside Sp)
    span dim 2, or dim 1 nilpotent -> contains a nilpotent -> type b
    span dim 1 semisimple          -> torus-like -> type a or 2a

Torus-like images are split by (in order) an explicit normalizer
witness, the chi pairing, or the spherical roots; otherwise the type
stays unresolved.  Whether an sl2 element is semisimple or nilpotent is
decided exactly by its determinant (x^2 = -det(x) * id for traceless x).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .datum import ColorRecord, SphericalDatum
from .errors import InconsistencyError, InsufficientDataError, UnresolvedTypeError
from .lunatypes import ColorType, classify_luna
from .rootsys import RootSystem, pair, positive_roots

Matrix = tuple  # tuple of row tuples of Fraction
Element = tuple  # tuple of per-block Matrix


def _mat(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _zero(n) -> Matrix:
    return tuple((Fraction(0),) * n for _ in range(n))


def _madd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mscale(c, a: Matrix) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def _mmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _mbracket(a: Matrix, b: Matrix) -> Matrix:
    return _madd(_mmul(a, b), _mscale(-1, _mmul(b, a)))


def element(blocks, mats) -> Element:
    """Build an algebra element from per-block row lists."""
    if len(mats) != len(blocks):
        raise ValueError("wrong number of blocks")
    out = []
    for n, m in zip(blocks, mats):
        mm = _mat(m)
        if len(mm) != n or any(len(r) != n for r in mm):
            raise ValueError(f"block of size {n} got a {len(mm)}x? matrix")
        out.append(mm)
    return tuple(out)


def zero_element(blocks) -> Element:
    return tuple(_zero(n) for n in blocks)


def eadd(x: Element, y: Element) -> Element:
    return tuple(_madd(a, b) for a, b in zip(x, y))


def escale(c, x: Element) -> Element:
    return tuple(_mscale(c, a) for a in x)


def bracket(x: Element, y: Element) -> Element:
    return tuple(_mbracket(a, b) for a, b in zip(x, y))


def vectorize(x: Element) -> tuple:
    return tuple(v for blk in x for row in blk for v in row)


def unvectorize(blocks, vec) -> Element:
    out = []
    pos = 0
    for n in blocks:
        rows = []
        for _ in range(n):
            rows.append(tuple(Fraction(v) for v in vec[pos:pos + n]))
            pos += n
        out.append(tuple(rows))
    return tuple(out)


def is_zero_element(x: Element) -> bool:
    return all(v == 0 for v in vectorize(x))


def algebra_dim(blocks) -> int:
    return sum(n * n - 1 if n >= 2 else 1 for n in blocks)


@dataclass(frozen=True)
class LiePresentation:
    """An exact matrix model of the group pair, bound to its root system."""
    rs: RootSystem
    blocks: tuple[int, ...]
    h_basis: tuple[Element, ...]
    b_basis: tuple[Element, ...]
    triples: tuple[tuple[Element, Element, Element], ...]
    witnesses: tuple[tuple[str, int, Matrix], ...] = ()

    def witness_for(self, color_name: str, alpha: int) -> Matrix | None:
        for cn, a, w in self.witnesses:
            if cn == color_name and a == alpha:
                return w
        return None


def make_presentation(rs, blocks, h_basis, b_basis, triples, witnesses=()) -> LiePresentation:
    """Construct and structurally check a presentation: block shapes,
    per-block tracelessness, and the sl2 bracket relations of every
    triple.  The costlier span checks live in validate_presentation."""
    blocks = tuple(int(n) for n in blocks)
    if len(triples) != rs.rank:
        raise ValueError(f"expected {rs.rank} triples, got {len(triples)}")

    def check(x: Element, what: str) -> Element:
        if len(x) != len(blocks):
            raise ValueError(f"{what}: wrong block count")
        for n, blk in zip(blocks, x):
            if len(blk) != n or any(len(r) != n for r in blk):
                raise ValueError(f"{what}: block shape mismatch")
            if n >= 2:
                tr = sum(blk[i][i] for i in range(n))
                if tr != 0:
                    raise ValueError(f"{what}: block trace {tr} != 0")
        return x

    h_basis = tuple(check(x, f"h_basis[{i}]") for i, x in enumerate(h_basis))
    b_basis = tuple(check(x, f"b_basis[{i}]") for i, x in enumerate(b_basis))
    fixed = []
    for i, (e, h, f) in enumerate(triples):
        name = rs.root_name(i)
        for x, tag in ((e, "e"), (h, "h"), (f, "f")):
            check(x, f"triple {name}.{tag}")
        if bracket(e, f) != h:
            raise ValueError(f"triple {name}: [e, f] != h")
        if bracket(h, e) != escale(2, e):
            raise ValueError(f"triple {name}: [h, e] != 2e")
        if bracket(h, f) != escale(-2, f):
            raise ValueError(f"triple {name}: [h, f] != -2f")
        fixed.append((e, h, f))
    wit = []
    for cn, a, w in witnesses:
        m = _mat(w)
        if len(m) != 2 or any(len(r) != 2 for r in m):
            raise ValueError(f"witness for ({cn}, {rs.root_name(a)}): not 2x2")
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if det not in (1, -1):
            raise ValueError(f"witness for ({cn}, {rs.root_name(a)}): det {det} not +-1")
        wit.append((cn, int(a), m))
    return LiePresentation(rs, blocks, h_basis, tuple(b_basis), tuple(fixed), tuple(wit))


def validate_presentation(pres: LiePresentation) -> None:
    """Full span checks: h closed under bracket, and every e_alpha and
    h_alpha inside span(b)."""
    hvecs = [vectorize(x) for x in pres.h_basis]
    for i, x in enumerate(pres.h_basis):
        for j, y in enumerate(pres.h_basis):
            if j < i:
                continue
            z = bracket(x, y)
            if not is_zero_element(z) and not linalg.in_span(hvecs, vectorize(z)):
                raise ValueError(f"h_basis not bracket-closed at pair ({i}, {j})")
    bvecs = [vectorize(x) for x in pres.b_basis]
    for i, (e, h, _) in enumerate(pres.triples):
        if not linalg.in_span(bvecs, vectorize(e)):
            raise ValueError(f"e for {pres.rs.root_name(i)} is outside span(b)")
        if not linalg.in_span(bvecs, vectorize(h)):
            raise ValueError(f"h for {pres.rs.root_name(i)} is outside span(b)")


@lru_cache(maxsize=64)
def open_orbit_check(pres: LiePresentation) -> bool:
    """Does span(b, h) fill the whole algebra?  (The basepoint lies in
    the open B-orbit exactly when this holds.)"""
    vecs = [vectorize(x) for x in pres.b_basis] + [vectorize(x) for x in pres.h_basis]
    return linalg.rank(vecs) == algebra_dim(pres.blocks)


def parabolic_basis(pres: LiePresentation, alpha: int) -> list[Element]:
    """b extended by the negative root vector f_alpha."""
    pres.rs._check_index(alpha)
    return list(pres.b_basis) + [pres.triples[alpha][2]]


def stabilizer_in_parabolic(pres: LiePresentation, alpha: int) -> list[Element]:
    """Basis of h intersected with the minimal parabolic p_alpha."""
    hvecs = [vectorize(x) for x in pres.h_basis]
    pvecs = [vectorize(x) for x in parabolic_basis(pres, alpha)]
    inter = linalg.intersect(hvecs, pvecs)
    return [unvectorize(pres.blocks, v) for v in inter]


@lru_cache(maxsize=64)
def _positive_root_vectors(pres: LiePresentation):
    """Root vectors e_beta for every positive root, generated upward from
    the simple triples by bracketing along root strings."""
    rs = pres.rs
    out = {}
    for root in positive_roots(rs):
        coeffs = root.simple_coeffs
        if root.height == 1:
            i = next(k for k, c in enumerate(coeffs) if c)
            out[coeffs] = pres.triples[i][0]
            continue
        built = None
        for i, c in enumerate(coeffs):
            if c <= 0:
                continue
            down = list(coeffs)
            down[i] -= 1
            prev = out.get(tuple(down))
            if prev is None:
                continue
            cand = bracket(pres.triples[i][0], prev)
            if not is_zero_element(cand):
                built = cand
                break
        if built is None:
            raise InconsistencyError(
                f"presentation has no root vector for {coeffs} (triples degenerate)")
        out[coeffs] = built
    return out


@lru_cache(maxsize=256)
def _adapted_basis(pres: LiePresentation, alpha: int):
    """Vectors spanning p_alpha, ordered [e_alpha, h_alpha, f_alpha,
    kernel...], where the kernel block is ker(alpha) in the torus, the
    central blocks, and every other positive root vector."""
    rs = pres.rs
    e, h, f = pres.triples[alpha]
    kernel = []
    # torus part killed by alpha: alpha_i(h_j) is the Cartan entry C[j][i]
    col = [tuple(Fraction(rs.cartan[j][alpha]) for j in range(rs.rank))]
    for combo in linalg.nullspace(col):
        t = zero_element(pres.blocks)
        for j, c in enumerate(combo):
            if c:
                t = eadd(t, escale(c, pres.triples[j][1]))
        kernel.append(t)
    for bi, n in enumerate(pres.blocks):
        if n == 1:
            mats = [[[1]] if k == bi else [[0] * m for _ in range(m)]
                    for k, m in enumerate(pres.blocks)]
            kernel.append(element(pres.blocks, mats))
    rootvecs = _positive_root_vectors(pres)
    unit = [0] * rs.rank
    unit[alpha] = 1
    unit = tuple(unit)
    for coeffs, vec in sorted(rootvecs.items()):
        if coeffs != unit:
            kernel.append(vec)
    cols = [vectorize(x) for x in (e, h, f)] + [vectorize(x) for x in kernel]
    return cols


_E2 = _mat([[0, 1], [0, 0]])
_H2 = _mat([[1, 0], [0, -1]])
_F2 = _mat([[0, 0], [1, 0]])


def dphi_project(pres: LiePresentation, alpha: int, x: Element) -> Matrix:
    """Image of x in the alpha-sl2: write x = c_e e + c_h h + c_f f + r
    with r in the kernel of the projection and return the corresponding
    2x2 matrix c_e E + c_h H + c_f F.  x must lie in p_alpha."""
    pres.rs._check_index(alpha)
    cols = _adapted_basis(pres, alpha)
    sol = linalg.solve_columns(cols, vectorize(x))
    if sol is None:
        raise ValueError(
            f"element is not in the minimal parabolic of {pres.rs.root_name(alpha)}")
    ce, ch, cf = sol[0], sol[1], sol[2]
    out = _madd(_madd(_mscale(ce, _E2), _mscale(ch, _H2)), _mscale(cf, _F2))
    return out


class ImageClass(Enum):
    TORUS_LIKE = "torus_like"
    CONTAINS_NILPOTENT = "contains_nilpotent"
    FULL = "full"


@dataclass(frozen=True)
class Sl2Image:
    basis: tuple[Matrix, ...]
    kind: ImageClass


def _det2(m: Matrix) -> Fraction:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def classify_image(vectors) -> Sl2Image:
    """Classify the span of traceless 2x2 matrices by dimension; a line
    is torus-like exactly when its generator has nonzero determinant
    (semisimple), since x^2 = -det(x) id for traceless x."""
    mats = [_mat(v) for v in vectors]
    for m in mats:
        if len(m) != 2 or any(len(r) != 2 for r in m):
            raise ValueError("sl2 image vectors must be 2x2")
        if m[0][0] + m[1][1] != 0:
            raise ValueError("sl2 image vectors must be traceless")
    coords = [(m[0][0], m[0][1], m[1][0]) for m in mats]
    basis_coords = linalg.span_basis(coords)
    dim = len(basis_coords)
    basis = tuple(_mat([[a, b], [c, -a]]) for a, b, c in basis_coords)
    if dim == 0:
        raise InconsistencyError(
            "sl2 image is zero: the stabilizer image must be at least one-dimensional")
    if dim == 3:
        return Sl2Image(basis, ImageClass.FULL)
    if dim == 2:
        return Sl2Image(basis, ImageClass.CONTAINS_NILPOTENT)
    kind = ImageClass.TORUS_LIKE if _det2(basis[0]) != 0 else ImageClass.CONTAINS_NILPOTENT
    return Sl2Image(basis, kind)


def image_for_root(pres: LiePresentation, alpha: int) -> Sl2Image:
    """Stabilizer in p_alpha, pushed through the projection and classified."""
    stab = stabilizer_in_parabolic(pres, alpha)
    if not stab:
        raise InconsistencyError(
            f"stabilizer meets the parabolic of {pres.rs.root_name(alpha)} trivially")
    return classify_image([dphi_project(pres, alpha, x) for x in stab])


def _minv2(m: Matrix) -> Matrix:
    d = _det2(m)
    if d == 0:
        raise ValueError("witness is singular")
    return _mat([[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]])


def resolve_torus_like(image: Sl2Image, witness: Matrix | None = None,
                       chi_pairing=None) -> ColorType | None:
    """Split a torus-like image into a or 2a.

    A witness that conjugates the generator to its negative certifies 2a;
    one that centralizes it is discarded.  Failing that, a chi pairing of
    2 means 2a and 1 means a.  Returns None when neither decides.
    """
    if image.kind is not ImageClass.TORUS_LIKE:
        raise ValueError("resolve_torus_like wants a torus-like image")
    t = image.basis[0]
    if witness is not None:
        w = _mat(witness)
        conj = _mmul(_mmul(w, t), _minv2(w))
        if conj == _mscale(-1, t):
            return ColorType.TWO_A
        if conj != t:
            raise InconsistencyError("witness does not normalize the image torus")
        # centralizing witness: uninformative, fall through
    if chi_pairing is not None:
        v = Fraction(chi_pairing)
        if v == 2:
            return ColorType.TWO_A
        if v == 1:
            return ColorType.A
        raise InconsistencyError(
            f"chi pairing {chi_pairing} is neither 1 nor 2 for a torus-like color")
    return None


def classify_knop(pres: LiePresentation, datum: SphericalDatum,
                  color: ColorRecord | str) -> ColorType:
    """Classify one color through the presentation, checking that every
    moving root gives the same answer.

    Requires the basepoint to be generic (open-orbit check).  A full sl2
    image at a moving root, or a torus-like image that the spherical
    roots call b, is reported as an inconsistency; a torus-like image
    with no witness, no chi and no spherical roots stays unresolved.
    """
    if isinstance(color, str):
        color = datum.color(color)
    if not open_orbit_check(pres):
        raise InconsistencyError(
            "basepoint is not generic: span(b, h) is a proper subalgebra")
    results = {}
    for alpha in color.moved_by:
        img = image_for_root(pres, alpha)
        if img.kind is ImageClass.FULL:
            raise InconsistencyError(
                f"color {color.name}: full sl2 image at moving root "
                f"{datum.rs.root_name(alpha)} (only legal inside Sp)")
        if img.kind is ImageClass.CONTAINS_NILPOTENT:
            results[alpha] = ColorType.B
            continue
        chi_pairing = pair(alpha, color.chi) if color.chi is not None else None
        kind = resolve_torus_like(img, pres.witness_for(color.name, alpha), chi_pairing)
        if kind is None and datum.spherical_roots is not None:
            luna = classify_luna(datum, color)
            if luna is ColorType.B:
                raise InconsistencyError(
                    f"color {color.name}: torus-like image but spherical roots say b")
            kind = luna
        if kind is None:
            raise UnresolvedTypeError(
                f"color {color.name}: torus-like at {datum.rs.root_name(alpha)}, "
                "no witness, chi or spherical roots to split a vs 2a")
        results[alpha] = kind
    distinct = set(results.values())
    if len(distinct) != 1:
        detail = ", ".join(f"{datum.rs.root_name(a)}->{k.value}"
                           for a, k in results.items())
        raise InconsistencyError(
            f"color {color.name}: moving roots disagree ({detail})")
    return distinct.pop()


# ------------------------------------------------------------- JSON

def _flat_to_rows(flat, n, where, conv):
    if len(flat) != n * n:
        raise ValueError(f"{where}: expected {n * n} entries, got {len(flat)}")
    vals = [conv(x, f"{where}[{i}]") for i, x in enumerate(flat)]
    return [vals[i * n:(i + 1) * n] for i in range(n)]


def presentation_to_json(pres: LiePresentation) -> dict:
    from .datum import rational_to_json

    def elem(x: Element):
        return [[rational_to_json(v) for row in blk for v in row] for blk in x]

    def mat2(m: Matrix):
        return [rational_to_json(v) for row in m for v in row]

    return {
        "blocks": list(pres.blocks),
        "h_basis": [elem(x) for x in pres.h_basis],
        "b_basis": [elem(x) for x in pres.b_basis],
        "triples": {
            pres.rs.root_name(i): {"e": elem(e), "h": elem(h), "f": elem(f)}
            for i, (e, h, f) in enumerate(pres.triples)
        },
        "witnesses": [
            {"color": cn, "root": pres.rs.root_name(a), "matrix": mat2(w)}
            for cn, a, w in pres.witnesses
        ],
    }


def presentation_from_json(obj, rs: RootSystem) -> LiePresentation:
    from .datum import rational_from_json
    from .errors import SchemaError

    if not isinstance(obj, dict):
        raise SchemaError("presentation: expected an object")
    unknown = set(obj) - {"blocks", "h_basis", "b_basis", "triples", "witnesses"}
    if unknown:
        raise SchemaError(f"presentation: unknown fields {sorted(unknown)}")
    blocks = obj.get("blocks")
    if not isinstance(blocks, list) or not all(isinstance(n, int) and n >= 1 for n in blocks):
        raise SchemaError("presentation.blocks: expected a list of positive sizes")

    def elem(raw, where):
        if not isinstance(raw, list) or len(raw) != len(blocks):
            raise SchemaError(f"{where}: expected {len(blocks)} block arrays")
        mats = []
        for bi, (n, flat) in enumerate(zip(blocks, raw)):
            if not isinstance(flat, list):
                raise SchemaError(f"{where}[{bi}]: expected a flat array")
            try:
                mats.append(_flat_to_rows(flat, n, f"{where}[{bi}]", rational_from_json))
            except ValueError as exc:
                raise SchemaError(str(exc)) from None
        return element(blocks, mats)

    h_basis = [elem(x, f"presentation.h_basis[{i}]")
               for i, x in enumerate(obj.get("h_basis", []))]
    b_basis = [elem(x, f"presentation.b_basis[{i}]")
               for i, x in enumerate(obj.get("b_basis", []))]
    traw = obj.get("triples", {})
    if not isinstance(traw, dict):
        raise SchemaError("presentation.triples: expected an object")
    triples = []
    for i in range(rs.rank):
        name = rs.root_name(i)
        if name not in traw:
            raise SchemaError(f"presentation.triples: missing {name}")
        t = traw[name]
        if not isinstance(t, dict) or any(tag not in t for tag in ("e", "h", "f")):
            raise SchemaError(f"presentation.triples.{name}: expected e, h and f")
        triples.append(tuple(elem(t[tag], f"presentation.triples.{name}.{tag}")
                             for tag in ("e", "h", "f")))
    witnesses = []
    for wi, wraw in enumerate(obj.get("witnesses", [])):
        where = f"presentation.witnesses[{wi}]"
        if not isinstance(wraw, dict):
            raise SchemaError(f"{where}: expected an object")
        cn = wraw.get("color")
        if not isinstance(cn, str) or not cn:
            raise SchemaError(f"{where}.color: expected a color name")
        try:
            a = rs.root_index(str(wraw.get("root")))
        except ValueError as exc:
            raise SchemaError(f"{where}.root: {exc}") from None
        flat = wraw.get("matrix")
        if not isinstance(flat, list):
            raise SchemaError(f"{where}.matrix: expected a flat array")
        try:
            rows = _flat_to_rows(flat, 2, f"{where}.matrix", rational_from_json)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
        witnesses.append((cn, a, _mat(rows)))
    try:
        return make_presentation(rs, blocks, h_basis, b_basis, triples, witnesses)
    except ValueError as exc:
        raise SchemaError(f"presentation: {exc}") from None
