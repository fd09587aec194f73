"""Paving cells: nonemptiness, both dimension formulas, profiles, Betti."""

import pytest

from hessenpave.hessenberg import (
    borel_space,
    enumerate_hessenberg,
    full_space,
    parse_hessenberg,
)
from hessenpave.paving import (
    cell_dimension,
    cell_dimension_lie,
    cell_nonempty,
    compute_paving,
    paving_record,
    poincare_polynomial,
    row_dimension_profile,
)
from hessenpave.rootcore import (
    build_root_system,
    enumerate_weyl,
    format_word,
    identity_element,
    parse_word,
)

SMALL = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3),
         ("D", 3), ("D", 4)]


@pytest.fixture(scope="module")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="module")
def peterson(a2):
    return parse_hessenberg(a2, "h=2,3,3")


def test_nonempty_examples(a2, peterson):
    e = identity_element(a2)
    assert cell_nonempty(e, borel_space(a2))
    assert not cell_nonempty(parse_word(a2, "1"), borel_space(a2))
    assert not cell_nonempty(parse_word(a2, "1 2"), peterson)


def test_dimension_examples(a2, peterson):
    e = identity_element(a2)
    assert cell_dimension(e, peterson) == 0
    w0 = parse_word(a2, "1 2 1")
    assert cell_dimension(w0, peterson) == 2
    assert cell_dimension_lie(w0, peterson) == 2
    assert cell_dimension_lie(parse_word(a2, "1"), peterson) == 1
    full = full_space(a2)
    for w in enumerate_weyl(a2):
        assert cell_dimension(w, full) == w.length
    with pytest.raises(ValueError):
        cell_dimension(parse_word(a2, "1"), borel_space(a2))


def test_row_profile_examples(a2, peterson):
    w0 = parse_word(a2, "1 2 1")
    assert row_dimension_profile(identity_element(a2), peterson) == (0, 0)
    assert row_dimension_profile(w0, full_space(a2)) == (2, 1)
    assert row_dimension_profile(w0, peterson) == (1, 1)


def test_compute_paving_examples(a2, peterson):
    cells = compute_paving(a2, borel_space(a2))
    live = [c for c in cells if c.nonempty]
    assert len(live) == 1 and live[0].w.length == 0 and live[0].dim == 0

    live = {format_word(c.w): c.dim
            for c in compute_paving(a2, peterson) if c.nonempty}
    assert live == {"": 0, "1": 1, "2": 1, "1 2 1": 2}

    h223 = parse_hessenberg(a2, "h=2,2,3")
    live = {format_word(c.w): c.dim
            for c in compute_paving(a2, h223) if c.nonempty}
    assert live == {"": 0, "1": 1}


def test_poincare_examples(a2, peterson):
    assert poincare_polynomial(a2, full_space(a2)).coefficients == (1, 2, 2, 1)
    assert poincare_polynomial(a2, peterson).coefficients == (1, 2, 1)
    h223 = parse_hessenberg(a2, "h=2,2,3")
    assert poincare_polynomial(a2, h223).coefficients == (1, 1)
    assert poincare_polynomial(a2, borel_space(a2)).coefficients == (1,)


@pytest.mark.parametrize("lie_type,rank", SMALL)
def test_dimension_formulas_agree(lie_type, rank):
    rs = build_root_system(lie_type, rank)
    for space in enumerate_hessenberg(rs):
        for w in enumerate_weyl(rs):
            if cell_nonempty(w, space):
                assert cell_dimension(w, space) == cell_dimension_lie(w, space)


@pytest.mark.parametrize("lie_type,rank", SMALL)
def test_row_profiles_sum_and_nonnegative(lie_type, rank):
    rs = build_root_system(lie_type, rank)
    for space in enumerate_hessenberg(rs):
        for w in enumerate_weyl(rs):
            if cell_nonempty(w, space):
                profile = row_dimension_profile(w, space)
                assert len(profile) == rank
                assert all(p >= 0 for p in profile)
                assert sum(profile) == cell_dimension(w, space)


@pytest.mark.parametrize("lie_type,rank",
                         [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_monotonicity_and_bounds(lie_type, rank):
    rs = build_root_system(lie_type, rank)
    spaces = enumerate_hessenberg(rs)
    elems = enumerate_weyl(rs)
    data = {
        s.negative_part: {
            w: (cell_dimension(w, s) if cell_nonempty(w, s) else None)
            for w in elems
        }
        for s in spaces
    }
    for s in spaces:
        dims = [d for d in data[s.negative_part].values() if d is not None]
        bound = len(s.negative_part)
        assert max(dims) <= bound
        if data[s.negative_part][elems[-1]] is not None:
            assert max(dims) == bound
        for w in elems:
            d = data[s.negative_part][w]
            if d is not None:
                assert d <= w.length
    for s1 in spaces:
        for s2 in spaces:
            if s1.negative_part <= s2.negative_part:
                for w in elems:
                    d1 = data[s1.negative_part][w]
                    d2 = data[s2.negative_part][w]
                    if d1 is not None:
                        assert d2 is not None and d2 >= d1


@pytest.mark.parametrize("lie_type,rank", SMALL)
def test_identity_cell_always_single_point(lie_type, rank):
    rs = build_root_system(lie_type, rank)
    for space in enumerate_hessenberg(rs):
        betti = poincare_polynomial(rs, space)
        assert betti.coefficients[0] == 1
        assert betti.total == sum(
            1 for w in enumerate_weyl(rs) if cell_nonempty(w, space))


def test_full_space_betti_is_length_generating_function():
    """Independent oracle: the length generating function of the Weyl group
    is the product of q-integers over the degrees of the type."""
    degrees = {
        ("A", 3): [2, 3, 4],
        ("B", 3): [2, 4, 6],
        ("C", 3): [2, 4, 6],
        ("D", 4): [2, 4, 6, 4],
    }
    for (lie_type, rank), degs in degrees.items():
        rs = build_root_system(lie_type, rank)
        poly = [1]
        for d in degs:
            factor = [1] * d
            out = [0] * (len(poly) + d - 1)
            for i, a in enumerate(poly):
                for j, b in enumerate(factor):
                    out[i + j] += a * b
            poly = out
        betti = poincare_polynomial(rs, full_space(rs))
        assert list(betti.coefficients) == poly


def test_d3_matches_a3_under_diagram_isomorphism():
    """The exceptional isomorphism D3 ≅ A3 (center of the A3 diagram maps
    to the fork node) must carry pavings to pavings cell by cell.  This
    pits the type-D stage machinery against the type-A path, which is
    independently backed by the finite-field oracle."""
    d3 = build_root_system("D", 3)
    a3 = build_root_system("A", 3)

    def to_a3(root):
        c = root.coeffs
        return a3.root((c[1], c[0], c[2]))

    assert {to_a3(r) for r in d3.positive_roots} == set(a3.positive_roots)
    relabel = {1: 2, 2: 1, 3: 3}
    from hessenpave.hessenberg import from_negative_roots
    from hessenpave.rootcore import parse_word
    for s_d in enumerate_hessenberg(d3):
        s_a = from_negative_roots(a3, [to_a3(r) for r in s_d.negative_part])
        for w_d in enumerate_weyl(d3):
            word = " ".join(str(relabel[i]) for i in w_d.word)
            w_a = parse_word(a3, word)
            assert cell_nonempty(w_d, s_d) == cell_nonempty(w_a, s_a)
            if cell_nonempty(w_d, s_d):
                assert cell_dimension(w_d, s_d) == cell_dimension(w_a, s_a)


@pytest.mark.parametrize("lie_type,rank",
                         [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("B", 4)])
def test_peterson_betti_numbers_are_binomial(lie_type, rank):
    """The Peterson space (all negative simple roots) has binomial Betti
    numbers in every classical type: one nonempty cell per subset of the
    simple roots, of dimension the subset size."""
    from math import comb
    from hessenpave.hessenberg import from_negative_roots
    rs = build_root_system(lie_type, rank)
    peterson = from_negative_roots(rs, [-a for a in rs.simple_roots])
    betti = poincare_polynomial(rs, peterson).coefficients
    assert betti == tuple(comb(rank, k) for k in range(rank + 1))


def test_paving_record_shape(a2, peterson):
    record = paving_record(a2, peterson)
    assert record["betti"] == [1, 2, 1]
    assert record["hessenberg"]["neg"] == ["0,-1", "-1,0"]
    assert len(record["cells"]) == 6
    empty = [c for c in record["cells"] if not c["nonempty"]]
    assert all(c["dim"] is None and c["row_profile"] is None for c in empty)
    lengths = [c["length"] for c in record["cells"]]
    assert lengths == sorted(lengths)


def test_mixed_system_rejected(a2):
    b2 = build_root_system("B", 2)
    with pytest.raises(ValueError):
        cell_nonempty(identity_element(b2), borel_space(a2))
