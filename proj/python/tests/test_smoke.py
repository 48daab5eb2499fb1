import pytest

try:
    import krcrystals as k
except ImportError:  # running against the build tree
    import _krc as k


def test_types_and_levels():
    t = k.AffineType.parse("C3~1")
    assert str(t) == "C3~1"
    assert t.rank == 3
    assert k.level("C3~1", [1, 0, 1, 0]) == 2
    assert k.level("B3~1", [0, 0, 1, 0]) == 2
    assert k.c_r("C3~1", 2) == 2
    assert k.c_r("C3~1", 3) == 1


def test_dominant_weights():
    lvl1 = k.dominant_weights("C3~1", 1)
    assert lvl1 == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert len(k.dominant_weights("C3~1", 2)) == 10


def test_figure1_crystal():
    c = k.build("C3~1", 2, 1)
    assert c.size == 14
    assert c.has_affine
    v = c.find("-2,-1")
    assert c.element(c.f(0, v)) == "[1,-2]"
    # exactly four 0-arrows
    zeros = sum(1 for x in range(c.size) if c.f(0, x) >= 0)
    assert zeros == 4


def test_check_and_tau():
    rep = k.check("C3~1", 2, 2)
    assert rep["verdict"] == "perfect"
    assert rep["level"] == 1
    assert rep["tau"] == [0, 1, 2, 3]

    rep = k.check("C3~1", 2, 1)
    assert rep["verdict"] == "not_perfect"
    sizes = [len(cls["elements"]) for cls in rep["minimal_classes"]]
    assert sizes == [1, 2, 2, 1]

    rep = k.check("D4~1", 4, 1)
    assert rep["verdict"] == "partial"

    assert k.tau("A2~1", 1, 1, [1, 0, 0]) == [0, 0, 1]


def test_minimal_elements():
    v, s = k.minimal_element("C3~1", 2, 2, [0, 0, 1, 0])
    assert s == "[1,2;-2,-1]"
    v, s = k.minimal_element("A2~1", 1, 2, [1, 1, 0])
    assert s == "[1;2]"
    with pytest.raises(ValueError):
        k.minimal_element("C3~1", 2, 2, [0, 1, 1, 0])  # wrong level


def test_decomposition():
    dec = k.classical_decomposition("C3~1", 2, 2)
    assert [0, 0, 2, 0] in dec and [0, 2, 0, 0] in dec and [0, 0, 0, 0] in dec
