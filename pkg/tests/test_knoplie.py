"""Presentation-side classification: exact brackets, parabolic
stabilizers, sl2 image classes, and the JSON codec for presentations."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sphdiv.catalog import builtin
from sphdiv.datum import ColorRecord, SphericalDatum
from sphdiv.errors import (InconsistencyError, InsufficientDataError, SchemaError,
                           UnresolvedTypeError)
from sphdiv.knoplie import (ImageClass, algebra_dim, bracket, classify_image,
                            classify_knop, dphi_project, eadd, element, escale,
                            image_for_root, is_zero_element, make_presentation,
                            open_orbit_check, parabolic_basis, presentation_from_json,
                            presentation_to_json, resolve_torus_like,
                            stabilizer_in_parabolic, unvectorize, validate_presentation,
                            vectorize, zero_element, _positive_root_vectors)
from sphdiv.lunatypes import ColorType, classify_luna
from sphdiv.rootsys import Weight, build_root_system, positive_roots

E = [[0, 1], [0, 0]]
H = [[1, 0], [0, -1]]
F = [[0, 0], [1, 0]]
E_LO, H_LO, F_LO = F, [[-1, 0], [0, 1]], E
ZERO2 = [[0, 0], [0, 0]]


def _mm(a, b):
    return [[sum(Fraction(a[i][k]) * Fraction(b[k][j]) for k in range(2))
             for j in range(2)] for i in range(2)]


def _inv2(m):
    (a, b), (c, d) = m
    det = Fraction(a) * d - Fraction(b) * c
    return [[d / det, -Fraction(b) / det], [-Fraction(c) / det, a / det]]


def _conj(g, x):
    return _mm(_mm(g, x), _inv2(g))


def _triple_diag_pres(conjugators):
    """sl2 x sl2 x sl2 with h the diagonal sl2 twisted factorwise."""
    rs = build_root_system("A1xA1xA1")
    blocks = (2, 2, 2)

    def emb(i, m):
        mats = [ZERO2, ZERO2, ZERO2]
        mats[i] = m
        return element(blocks, mats)

    h_basis = [element(blocks, [_conj(g, u) for g in conjugators])
               for u in (E, H, F)]
    b_basis = [emb(i, H_LO) for i in range(3)] + [emb(i, E_LO) for i in range(3)]
    triples = [(emb(i, E_LO), emb(i, H_LO), emb(i, F_LO)) for i in range(3)]
    return make_presentation(rs, blocks, h_basis, b_basis, triples)


IDENTITY3 = ([[1, 0], [0, 1]],) * 3
TWISTED3 = ([[1, 0], [0, 1]], [[1, 1], [0, 1]], [[0, -1], [1, 0]])


# ---------------------------------------------------------------- arithmetic

def test_bracket_sl2_relations():
    blocks = (2,)
    e, h, f = (element(blocks, [m]) for m in (E, H, F))
    assert bracket(e, f) == h
    assert bracket(h, e) == escale(2, e)
    assert bracket(h, f) == escale(-2, f)
    assert is_zero_element(bracket(e, e))


def test_vectorize_round_trip():
    blocks = (2, 1, 2)
    x = element(blocks, [E, [[5]], H])
    assert unvectorize(blocks, vectorize(x)) == x
    assert len(vectorize(x)) == 4 + 1 + 4


def test_element_shape_checks():
    with pytest.raises(ValueError, match="blocks"):
        element((2, 2), [E])
    with pytest.raises(ValueError):
        element((3,), [E])


def test_algebra_dim():
    assert algebra_dim((2,)) == 3
    assert algebra_dim((3,)) == 8
    assert algebra_dim((1,)) == 1
    assert algebra_dim((2, 2, 2)) == 9
    assert algebra_dim((2, 1)) == 4


def test_zero_element_and_eadd():
    blocks = (2,)
    z = zero_element(blocks)
    x = element(blocks, [H])
    assert eadd(x, z) == x
    assert is_zero_element(eadd(x, escale(-1, x)))


# ---------------------------------------------------------------- construction

def _sl2_pres(h_mats, witnesses=()):
    rs = build_root_system("A1")
    blocks = (2,)
    h_basis = [element(blocks, [m]) for m in h_mats]
    b_basis = [element(blocks, [H_LO]), element(blocks, [E_LO])]
    triples = [(element(blocks, [E_LO]), element(blocks, [H_LO]),
                element(blocks, [F_LO]))]
    return make_presentation(rs, blocks, h_basis, b_basis, triples, witnesses)


def test_make_presentation_wrong_triple_count():
    rs = build_root_system("A2")
    with pytest.raises(ValueError, match="expected 2 triples"):
        make_presentation(rs, (2,), [], [], [])


def test_make_presentation_rejects_trace():
    with pytest.raises(ValueError, match="trace"):
        _sl2_pres([[[1, 0], [0, 1]]])


def test_make_presentation_rejects_broken_triple():
    rs = build_root_system("A1")
    blocks = (2,)
    bad = [(element(blocks, [E]), element(blocks, [H]), element(blocks, [E]))]
    with pytest.raises(ValueError, match=r"\[e, f\] != h"):
        make_presentation(rs, blocks, [], [element(blocks, [H])], bad)


def test_make_presentation_rejects_bad_witness():
    with pytest.raises(ValueError, match="det"):
        _sl2_pres([H], witnesses=(("D1", 0, [[2, 0], [0, 1]]),))
    with pytest.raises(ValueError, match="2x2"):
        _sl2_pres([H], witnesses=(("D1", 0, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),))


def test_witness_lookup():
    w = [[0, 1], [-1, 0]]
    pres = _sl2_pres([H], witnesses=(("D1", 0, w),))
    assert pres.witness_for("D1", 0) is not None
    assert pres.witness_for("D2", 0) is None


def test_validate_presentation_accepts_catalog():
    for key, n in (("sl2_mod_T", None), ("brion_5_1", 3), ("brion_5_2", None)):
        validate_presentation(builtin(key, n).presentation)


def test_validate_presentation_rejects_open_h():
    # span{E, F} is not bracket-closed ([E, F] = H)
    pres = _sl2_pres([E, F])
    with pytest.raises(ValueError, match="bracket-closed"):
        validate_presentation(pres)


def test_validate_presentation_rejects_e_outside_b():
    rs = build_root_system("A1")
    blocks = (2,)
    pres = make_presentation(
        rs, blocks, [element(blocks, [H])], [element(blocks, [H_LO])],
        [(element(blocks, [E_LO]), element(blocks, [H_LO]),
          element(blocks, [F_LO]))])
    with pytest.raises(ValueError, match="outside span"):
        validate_presentation(pres)


# ---------------------------------------------------------------- open orbit

def test_open_orbit_catalog_entries():
    for key, n in (("sl2_mod_T", None), ("sl2_mod_N", None), ("sl2_mod_U", None),
                   ("brion_5_1", 2), ("brion_5_1", 4), ("brion_5_2", None)):
        assert open_orbit_check(builtin(key, n).presentation)


def test_open_orbit_fails_for_untwisted_diagonal():
    assert not open_orbit_check(_triple_diag_pres(IDENTITY3))


def test_open_orbit_holds_for_twisted_diagonal():
    assert open_orbit_check(_triple_diag_pres(TWISTED3))


# ---------------------------------------------------------------- stabilizers

def test_parabolic_basis_adds_f():
    pres = builtin("sl2_mod_U", None).presentation
    pb = parabolic_basis(pres, 0)
    assert len(pb) == len(pres.b_basis) + 1
    assert pb[-1] == pres.triples[0][2]


def test_stabilizer_dims_untwisted_vs_twisted():
    untwisted = _triple_diag_pres(IDENTITY3)
    assert [len(stabilizer_in_parabolic(untwisted, a)) for a in range(3)] == [2, 2, 2]
    twisted = _triple_diag_pres(TWISTED3)
    assert [len(stabilizer_in_parabolic(twisted, a)) for a in range(3)] == [1, 1, 1]


def test_stabilizer_members_lie_in_h_and_parabolic():
    pres = builtin("brion_5_2", None).presentation
    from sphdiv.linalg import in_span
    hvecs = [vectorize(x) for x in pres.h_basis]
    for alpha in range(3):
        pvecs = [vectorize(x) for x in parabolic_basis(pres, alpha)]
        for s in stabilizer_in_parabolic(pres, alpha):
            assert in_span(hvecs, vectorize(s))
            assert in_span(pvecs, vectorize(s))


# ---------------------------------------------------------------- projection

def test_dphi_sends_triple_to_standard_triple():
    pres = builtin("sl2_mod_U", None).presentation
    e, h, f = pres.triples[0]
    assert dphi_project(pres, 0, e) == tuple(map(tuple, map(lambda r: tuple(Fraction(x) for x in r), E)))
    assert dphi_project(pres, 0, h) == tuple(tuple(Fraction(x) for x in r) for r in H)
    assert dphi_project(pres, 0, f) == tuple(tuple(Fraction(x) for x in r) for r in F)


def test_dphi_kills_other_factors():
    pres = builtin("brion_5_1", 2).presentation
    e2 = pres.triples[1][0]  # positive root vector of the other factor
    out = dphi_project(pres, 0, e2)
    assert all(x == 0 for row in out for x in row)
    h2 = pres.triples[1][1]  # kernel of alpha1 in the torus
    out = dphi_project(pres, 0, h2)
    assert all(x == 0 for row in out for x in row)


def test_dphi_rejects_outside_parabolic():
    pres = builtin("brion_5_1", 2).presentation
    f2 = pres.triples[1][2]
    with pytest.raises(ValueError, match="not in the minimal parabolic"):
        dphi_project(pres, 0, f2)


def test_dphi_is_linear_on_stabilizer():
    pres = builtin("brion_5_2", None).presentation
    (s,) = stabilizer_in_parabolic(pres, 0)
    one = dphi_project(pres, 0, s)
    three = dphi_project(pres, 0, escale(3, s))
    assert three == tuple(tuple(3 * x for x in row) for row in one)


def test_dphi_kills_central_blocks():
    # mixed (2, 1) blocks: the size-1 block lands in the projection kernel
    rs = build_root_system("A1+T1")
    blocks = (2, 1)
    h_basis = [element(blocks, [[[0, 1], [1, 0]], [[1]]])]
    b_basis = [element(blocks, [H_LO, [[0]]]), element(blocks, [E_LO, [[0]]]),
               element(blocks, [ZERO2, [[1]]])]
    triples = [(element(blocks, [E_LO, [[0]]]), element(blocks, [H_LO, [[0]]]),
                element(blocks, [F_LO, [[0]]]))]
    pres = make_presentation(rs, blocks, h_basis, b_basis, triples)
    x = element(blocks, [H_LO, [[5]]])
    assert dphi_project(pres, 0, x) == tuple(tuple(Fraction(v) for v in r) for r in H)
    y = element(blocks, [ZERO2, [[7]]])
    out = dphi_project(pres, 0, y)
    assert all(v == 0 for row in out for v in row)


def test_positive_root_vectors_cover_all_roots():
    pres = builtin("brion_5_1", 3).presentation
    vecs = _positive_root_vectors(pres)
    assert len(vecs) == len(positive_roots(pres.rs))
    assert all(not is_zero_element(v) for v in vecs.values())


def test_positive_root_vectors_degenerate():
    # two triples sharing one sl2: [e, e] = 0 kills the (1,1) root vector
    rs = build_root_system("A2")
    blocks = (2,)
    t = (element(blocks, [E_LO]), element(blocks, [H_LO]), element(blocks, [F_LO]))
    pres = make_presentation(rs, blocks, [], [t[1], t[0]], [t, t])
    with pytest.raises(InconsistencyError, match="degenerate"):
        _positive_root_vectors(pres)


# ---------------------------------------------------------------- image class

def test_classify_image_full():
    assert classify_image([E, H, F]).kind is ImageClass.FULL


def test_classify_image_two_dim():
    assert classify_image([E, H]).kind is ImageClass.CONTAINS_NILPOTENT


def test_classify_image_nilpotent_line():
    assert classify_image([E]).kind is ImageClass.CONTAINS_NILPOTENT


def test_classify_image_torus_lines():
    assert classify_image([H]).kind is ImageClass.TORUS_LIKE
    s = [[0, 1], [1, 0]]  # det -1, semisimple
    assert classify_image([s]).kind is ImageClass.TORUS_LIKE


def test_classify_image_dedups_spanning_sets():
    img = classify_image([H, [[2, 0], [0, -2]]])
    assert img.kind is ImageClass.TORUS_LIKE
    assert len(img.basis) == 1


def test_classify_image_zero_rejected():
    with pytest.raises(InconsistencyError, match="zero"):
        classify_image([ZERO2])
    with pytest.raises(InconsistencyError):
        classify_image([])


def test_classify_image_input_checks():
    with pytest.raises(ValueError, match="traceless"):
        classify_image([[[1, 0], [0, 1]]])
    with pytest.raises(ValueError, match="2x2"):
        classify_image([[[1]]])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
                min_size=1, max_size=3),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_classify_image_conjugation_invariant(trips, g):
    mats = [[[a, b], [c, -a]] for a, b, c in trips]
    if all(all(x == 0 for x in row) for m in mats for row in m):
        return
    det = Fraction(g[0]) * g[3] - Fraction(g[1]) * g[2]
    if det == 0:
        return
    gm = [[g[0], g[1]], [g[2], g[3]]]
    conj = [_conj(gm, m) for m in mats]
    assert classify_image(mats).kind is classify_image(conj).kind


# ---------------------------------------------------------------- resolution

def test_resolve_with_flipping_witness():
    img = classify_image([H])
    assert resolve_torus_like(img, witness=[[0, 1], [-1, 0]]) is ColorType.TWO_A


def test_resolve_centralizing_witness_falls_to_chi():
    img = classify_image([H])
    assert resolve_torus_like(img, witness=[[1, 0], [0, 1]], chi_pairing=1) is ColorType.A
    assert resolve_torus_like(img, witness=[[1, 0], [0, 1]]) is None


def test_resolve_rejects_non_normalizing_witness():
    img = classify_image([H])
    with pytest.raises(InconsistencyError, match="normalize"):
        resolve_torus_like(img, witness=[[1, 1], [0, 1]])


def test_resolve_by_chi():
    img = classify_image([H])
    assert resolve_torus_like(img, chi_pairing=1) is ColorType.A
    assert resolve_torus_like(img, chi_pairing=2) is ColorType.TWO_A
    with pytest.raises(InconsistencyError, match="neither 1 nor 2"):
        resolve_torus_like(img, chi_pairing=3)


def test_resolve_nothing_given():
    assert resolve_torus_like(classify_image([H])) is None


def test_resolve_wants_torus_like():
    with pytest.raises(ValueError, match="torus-like"):
        resolve_torus_like(classify_image([E]))


def test_resolve_rejects_singular_witness():
    with pytest.raises(ValueError, match="singular"):
        resolve_torus_like(classify_image([H]), witness=[[1, 0], [0, 0]])


# ---------------------------------------------------------------- classify_knop

@pytest.mark.parametrize("key,n,want", [
    ("sl2_mod_T", None, {"D1": ColorType.A, "D2": ColorType.A}),
    ("sl2_mod_N", None, {"D1": ColorType.TWO_A}),
    ("sl2_mod_U", None, {"D1": ColorType.B}),
    ("brion_5_1", 3, {"D1": ColorType.B, "D2": ColorType.B}),
    ("brion_5_2", None, {"D12": ColorType.A, "D13": ColorType.A,
                         "D23": ColorType.A}),
])
def test_classify_knop_catalog(key, n, want):
    entry = builtin(key, n)
    got = {c.name: classify_knop(entry.presentation, entry.datum, c)
           for c in entry.datum.colors}
    assert got == want


def test_classify_knop_accepts_color_name():
    entry = builtin("sl2_mod_U", None)
    assert classify_knop(entry.presentation, entry.datum, "D1") is ColorType.B


def test_classify_knop_matches_luna_where_both_apply():
    for key, n in (("sl2_mod_T", None), ("sl2_mod_N", None), ("sl2_mod_U", None),
                   ("brion_5_2", None)):
        entry = builtin(key, n)
        for c in entry.datum.colors:
            assert classify_knop(entry.presentation, entry.datum, c) is \
                classify_luna(entry.datum, c)


def test_classify_knop_requires_generic_basepoint():
    pres = _triple_diag_pres(IDENTITY3)
    rs = pres.rs
    datum = SphericalDatum(rs, frozenset(),
                           (ColorRecord("D", (0,), "a"),
                            ColorRecord("Dx", (1, 2), "a")))
    with pytest.raises(InconsistencyError, match="not generic"):
        classify_knop(pres, datum, "D")


def test_classify_knop_rejects_full_image_at_mover():
    # h is the whole sl2: the image at the moving root is full
    pres = _sl2_pres([E, H, F])
    rs = pres.rs
    datum = SphericalDatum(rs, frozenset(), (ColorRecord("D", (0,)),))
    with pytest.raises(InconsistencyError, match="full sl2"):
        classify_knop(pres, datum, "D")


def test_classify_knop_torus_like_vs_luna_b_conflict():
    # torus-like stabilizer but an empty spherical-root set calls it b
    pres = _sl2_pres([[[0, 1], [1, 0]]])
    rs = pres.rs
    datum = SphericalDatum(rs, frozenset(), (ColorRecord("D", (0,)),),
                           None, ())
    with pytest.raises(InconsistencyError, match="say b"):
        classify_knop(pres, datum, "D")


def test_classify_knop_unresolved_without_any_split():
    pres = _sl2_pres([[[0, 1], [1, 0]]])
    rs = pres.rs
    datum = SphericalDatum(rs, frozenset(), (ColorRecord("D", (0,)),))
    with pytest.raises(UnresolvedTypeError):
        classify_knop(pres, datum, "D")


def test_classify_knop_disagreeing_movers():
    # factor 1 contributes a nilpotent line, factor 2 a torus line
    rs = build_root_system("A1xA1")
    blocks = (2, 2)

    def emb(i, m):
        mats = [ZERO2, ZERO2]
        mats[i] = m
        return element(blocks, mats)

    s = [[0, 1], [1, 0]]
    h_basis = [emb(0, F_LO), emb(1, s)]
    b_basis = [emb(i, H_LO) for i in range(2)] + [emb(i, E_LO) for i in range(2)]
    triples = [(emb(i, E_LO), emb(i, H_LO), emb(i, F_LO)) for i in range(2)]
    pres = make_presentation(rs, blocks, h_basis, b_basis, triples)
    assert open_orbit_check(pres)
    datum = SphericalDatum(rs, frozenset(),
                           (ColorRecord("D", (0, 1),
                                        chi=Weight((Fraction(1), Fraction(1)), ())),))
    with pytest.raises(InconsistencyError, match="disagree"):
        classify_knop(pres, datum, "D")


def test_image_for_root_empty_stabilizer():
    # h spanned by the lowest root vector of sl3 misses the minimal
    # parabolic of a1 entirely
    rs = build_root_system("A2")
    blocks = (3,)

    def e3(i, j):
        m = [[0] * 3 for _ in range(3)]
        m[i][j] = 1
        return element(blocks, [m])

    def d3(a, b, c):
        return element(blocks, [[[a, 0, 0], [0, b, 0], [0, 0, c]]])

    h1, h2 = d3(1, -1, 0), d3(0, 1, -1)
    b_basis = [h1, h2, e3(0, 1), e3(0, 2), e3(1, 2)]
    triples = [(e3(0, 1), h1, e3(1, 0)), (e3(1, 2), h2, e3(2, 1))]
    pres = make_presentation(rs, blocks, [e3(2, 0)], b_basis, triples)
    with pytest.raises(InconsistencyError, match="trivially"):
        image_for_root(pres, 0)


# ---------------------------------------------------------------- JSON codec

@pytest.mark.parametrize("key,n", [
    ("sl2_mod_T", None), ("sl2_mod_N", None), ("sl2_mod_U", None),
    ("brion_5_1", 2), ("brion_5_1", 4), ("brion_5_2", None),
])
def test_presentation_json_round_trip(key, n):
    pres = builtin(key, n).presentation
    doc = presentation_to_json(pres)
    again = presentation_from_json(doc, pres.rs)
    assert again == pres
    assert presentation_to_json(again) == doc


def _upres_doc():
    return presentation_to_json(builtin("sl2_mod_U", None).presentation)


@pytest.mark.parametrize("mutate", [
    pytest.param(lambda d: "x", id="not-object"),
    pytest.param(lambda d: {**d, "extra": 1}, id="unknown-field"),
    pytest.param(lambda d: {**d, "blocks": [0]}, id="bad-block-size"),
    pytest.param(lambda d: {**d, "blocks": "2"}, id="blocks-not-list"),
    pytest.param(lambda d: {**d, "triples": {}}, id="missing-triple"),
    pytest.param(lambda d: {**d, "triples": {"a1": [1, 2, 3]}}, id="triple-not-object"),
    pytest.param(lambda d: {**d, "triples": {"a1": {"e": d["triples"]["a1"]["e"]}}},
                 id="triple-missing-tags"),
    pytest.param(lambda d: {**d, "h_basis": [[[1, 0, 0]]]}, id="flat-length"),
    pytest.param(lambda d: {**d, "h_basis": [[[0.5, 0, 0, 0]]]}, id="float-entry"),
    pytest.param(lambda d: {**d, "witnesses": [{"root": "a1", "matrix": [1, 0, 0, 1]}]},
                 id="witness-no-color"),
    pytest.param(lambda d: {**d, "witnesses": [{"color": "D1", "root": "a9",
                                                "matrix": [1, 0, 0, 1]}]},
                 id="witness-bad-root"),
    pytest.param(lambda d: {**d, "witnesses": [{"color": "D1", "root": "a1",
                                                "matrix": [1, 0, 0]}]},
                 id="witness-short-matrix"),
])
def test_presentation_json_rejection(mutate):
    rs = build_root_system("A1")
    with pytest.raises(SchemaError):
        presentation_from_json(mutate(_upres_doc()), rs)


def test_presentation_json_wraps_structural_errors():
    doc = _upres_doc()
    doc["triples"]["a1"]["h"] = doc["triples"]["a1"]["e"]  # [e,f] != h now
    rs = build_root_system("A1")
    with pytest.raises(SchemaError, match="triple"):
        presentation_from_json(doc, rs)
