import os

import pytest

import _heaplab as hl


def data_file(name):
    root = os.environ.get(
        "HEAPLAB_DATA",
        os.path.join(os.path.dirname(__file__), "..", "..", "data"),
    )
    return os.path.join(root, name)


def test_example_heap():
    s = hl.path(3)
    h = s.heap("1 3 2 1 3")
    assert len(h) == 5
    assert h.word == "1 3 2 1 3"
    assert h.factors == "(1 3)(2)(1 3)"
    assert h.minimal() == [0, 1]
    assert h.maximal() == [3, 4]
    assert h.layers() == [[0, 1], [2], [3, 4]]
    assert h.doubled().word == "1 3 2 1 3 2 1 3"
    assert h.opposite() == h
    assert h.labels == ["1", "3", "2", "1", "3"]


def test_structure_io():
    s = hl.Structure.load(data_file("a3.graph"))
    assert s.signature() == "pieces[1 2 3] conc[1-2 2-3]"
    t = hl.Structure.parse("piece 1\npiece 2\npiece 3\nconc 1 2\nconc 2 3\n")
    assert s == t
    assert s.adjacent("1", "2") and not s.adjacent("1", "3")
    assert s.commute("1", "3")
    assert s.edges() == [("1", "2"), ("2", "3")]
    assert "graph concurrency {" in s.dot()
    assert "digraph heap {" in s.heap("1 2").dot()


def test_heap_operations():
    s = hl.path(3)
    a = s.heap("1 3")
    b = s.heap("2 1 3")
    assert a.compose(b).word == "1 3 2 1 3"
    assert s.empty().compose(a) == a
    h = s.heap("1 2 3")
    assert h.delete_vertex(1).factors == "(1 3)"
    assert h.subheap([0, 2]).word == "1 3"
    assert s.trivial(["1", "3"]).factors == "(1 3)"
    assert s.layers([["1", "3"], ["2"]]).word == "1 3 2"
    assert h.opposite().word == "3 2 1"
    assert len({s.heap("1 3"), s.heap("3 1"), s.heap("1 2")}) == 2


def test_properties():
    s = hl.path(3)
    h = s.heap("1 3 2 1 3")
    assert not hl.has_p2(h)
    assert hl.balanced_convex_chains(h) == [[0, 2, 3], [1, 2, 4]]
    assert hl.contract(h, [0, 2, 3]).word == "1 3 3"
    assert hl.has_p2(s.heap("2 1 3 2"))
    ok, removals = hl.p1_search(s.heap("2 1 3 2"))
    assert ok and removals == [0, 2]
    mins, maxs = hl.descents(h)
    assert mins == [0, 1] and maxs == [3, 4]

    witness = hl.diamond().heap("1 3 2 4 1 3")
    assert hl.has_p2(witness) and not hl.has_p1(witness)


def test_boundary():
    s = hl.path(3)
    h = s.heap("1 3 2 1 3")
    assert hl.boundary_edges(h) == [(0, 3), (1, 4)]
    assert hl.boundary_matrix(h)[2] == [1, 1]
    assert hl.kernel_dim(h) == 1
    assert not hl.is_acyclic(h)
    for char in (0, 2, 5):
        assert hl.is_acyclic(s.heap("1 2 1"), char)
    assert not hl.is_strongly_acyclic(s.heap("1 2 1"))
    assert hl.is_strongly_acyclic(s.heap("2 1 3 2"))


def test_tl_rewriting():
    st = hl.Structure(["s", "t"], [("s", "t")])
    ss = hl.tl_reduce(st.heap("s s"))
    assert (ss.delta_exponent, ss.heap.word) == (1, "s")
    assert str(ss) == "delta^1 * (s)"
    sts = hl.tl_reduce(st.heap("s t s"))
    assert (sts.delta_exponent, sts.heap.word) == (0, "s")

    s = hl.path(3)
    h = s.heap("1 3 2 1 3")
    nf = hl.tl_reduce(h)
    assert (nf.delta_exponent, nf.heap.word) == (1, "1 3")
    for seed in range(5):
        alt = hl.tl_reduce_randomized(h, seed)
        assert alt.delta_exponent == nf.delta_exponent and alt.heap == nf.heap
    assert hl.in_monomial_basis(nf.heap)
    assert not hl.in_monomial_basis(h)
    entries = hl.deletion_test(s.heap("2 1 3 2"))
    assert [e.vertex for e in entries] == [0, 1, 2, 3]
    assert all(e.basis for e in entries)


def test_classification():
    tilde = hl.Structure.load(data_file("e6tilde.graph"))
    (comp,) = hl.classify(tilde)
    assert comp["tag"] == "AffineE6" and comp["regular"]
    assert hl.has_property_r(tilde)
    assert hl.classify(hl.gamma(1, 1, 2))[0]["tag"] == "D5"

    star = hl.star(4)
    (comp,) = hl.classify(star)
    assert comp["tag"] == "NonR(valency_ge_4)" and comp["reason"] == "valency_ge_4"
    w = hl.nonregular_witness(star)
    assert w["word"] == "x1 x2 c x3 x4"
    assert w["layers"] == [["x1", "x2"], ["c"], ["x3", "x4"]]
    assert w["heap"].factors == "(x1 x2)(c)(x3 x4)"
    assert hl.has_p2(w["heap"]) and not hl.has_p1(w["heap"])
    with pytest.raises(ValueError):
        hl.nonregular_witness(hl.path(3))


def test_enumeration_and_suites():
    s = hl.path(3)
    assert hl.count_heaps(s, 5) == 232
    all_heaps = hl.heaps(s, 4)
    assert len(all_heaps) == 88
    assert len(set(all_heaps)) == 88
    assert all_heaps[0] == s.empty()

    report = hl.run_suite("universal", s, 5)
    assert report["passed"] and report["status"] == "complete"
    assert report["counters"]["heaps"] == 232
    assert report["heaps_by_size"] == [1, 3, 8, 21, 55, 144]
    assert report["violations"] == []

    kernel = hl.run_suite("kernel", hl.cycle(4), 4, 2)
    assert kernel["passed"]


def test_error_mapping():
    s = hl.path(3)
    with pytest.raises(ValueError):
        s.heap("1 9")
    with pytest.raises(ValueError):
        hl.Structure(["a", "a"], [])
    with pytest.raises(RuntimeError):
        hl.Structure.parse("piece a\nconc a b\n")
    with pytest.raises(ValueError):
        hl.deletion_test(s.heap("1 1"))
