import digitop as dt
import pytest


def test_images_and_products():
    d = dt.diamond()
    assert len(d) == 4
    assert [1, 0] in d
    sq = dt.product(dt.interval(1), dt.interval(1))
    assert len(sq) == 4 and sq.dim == 2
    assert dt.subdivide_image(dt.interval(1), 2) == dt.interval(3)
    assert dt.Image.from_json(d.to_json()) == d


def test_maps():
    f = dt.Map(dt.interval(2), dt.interval(1), [([0], [0]), ([1], [0]), ([2], [1])])
    assert f.continuous
    g = dt.Map(dt.interval(1), dt.interval(2), [([0], [0]), ([1], [2])])
    assert not g.continuous
    assert dt.count_maps(dt.interval(1), dt.interval(1)) == 4
    assert dt.maps_adjacent(dt.identity(dt.interval(1)), dt.constant_map(dt.interval(1), [0], dt.interval(1)))


def test_homotopy():
    d = dt.diamond()
    assert dt.is_contractible(d)["outcome"] == "no"
    r = dt.is_contractible(dt.interval(3))
    assert r["outcome"] == "yes"
    assert len(r["witness"]["stages"]) >= 2
    h = dt.homotopic(dt.identity(d), dt.constant_map(d, [1, 0], d))
    assert h["outcome"] == "no"


def test_retractions():
    o = dt.retraction("origin", 2, 1)
    assert o["check"]["ok"] and o["domain_size"] == 48
    e = dt.retraction("endpoints", 1, 1)
    assert e["check"]["ok"] and e["p"] == 4
    with pytest.raises(ValueError):
        dt.retraction("middle", 1, 1)


def test_circle():
    loop = [[1, 0], [0, 1], [-1, 0], [0, -1], [1, 0]]
    assert dt.winding_number(loop) == 4
    assert dt.winding_index(loop) == 1
    assert dt.lift_path(loop, 0) == [0, 1, 2, 3, 4]
    assert dt.cover_point(-1) == [0, -1]


def test_dcat():
    r = dt.dcat(dt.diamond(), 4)
    assert (r["lower"], r["upper"]) == (1, 1)
    assert dt.dcat(dt.interval(2))["upper"] == 0
    minus = dt.Image([[0, 1], [-1, 0], [0, -1]])
    assert dt.is_subdivision_categorical(minus, dt.diamond(), 2)["outcome"] == "yes"


def test_errors():
    with pytest.raises(ValueError):
        dt.Image([[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        dt.fixture("torus")
