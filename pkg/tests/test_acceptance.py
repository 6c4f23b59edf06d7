"""Acceptance gate.  Every criterion runs at its stated tolerance and the
run ends with one PASS/FAIL line per criterion (see conftest)."""

import io
import random
import subprocess
import sys
import time
import timeit
from contextlib import contextmanager
from itertools import combinations

import numpy as np
import pytest

from hasse_complex import (
    Complex,
    LinkConditionError,
    Schema,
    build_mapping,
    closure,
    decimate,
    link,
    neighbors_down,
    neighbors_up,
    star,
)
from hasse_complex.mesh import (
    collapse_edge,
    dumps_off,
    load_off,
    orient,
    vertex_tangent,
    write_off,
)
from hasse_complex.oracle import NaiveComplex

from conftest import (
    DATA,
    HEX,
    HEX_POSITIONS,
    TETB,
    build,
    build_mesh,
    names,
    random_facets,
    record,
    refine_sphere,
)


@contextmanager
def criterion(label, detail=""):
    try:
        yield
    except BaseException:
        record(label, False, detail)
        raise
    record(label, True)


def edge_sums(mesh):
    return [
        sum(rel.data.orientation * rel.upper.data.orientation for rel in e._up.values())
        for e in mesh.level(1)
        if len(e._up) == 2
    ]


# 1 -------------------------------------------------------------------------


def test_c01_insertion_count_law():
    with criterion("1 insertion count law"):
        schema = Schema.bare(3)
        best = float("inf")
        for _ in range(20):
            cx = Complex(schema)
            t0 = time.perf_counter()
            cx.insert([1, 2, 3, 4])
            best = min(best, time.perf_counter() - t0)
        assert len(cx) + 1 == 16
        assert cx.counts().relations == 32
        assert cx.counts().levels == (4, 6, 4, 1)
        assert best < 1e-3, f"insertion took {best * 1e3:.3f} ms"


# 2 -------------------------------------------------------------------------

PRINTED = {
    "Link({3})": {(1,), (4,), (5,), (1, 4), (0, 1), (0, 5), (4, 5)},
    "Link({4})": {(5,), (2,), (3,), (1,), (3, 5), (1, 3), (1, 2), (2, 5)},
    "Link({3,4})": {(1,), (5,)},
}
SEEDS = {"Link({3})": [3], "Link({4})": [4], "Link({3,4})": [3, 4]}


@pytest.mark.parametrize("which", list(PRINTED))
def test_c02_printed_links(hexc, which):
    with criterion("2 reference link sets", f"{which} differs from the reference set"):
        got = names(link(hexc, hexc.get_simplex(SEEDS[which])))
        assert got == PRINTED[which], f"extra {sorted(got - PRINTED[which])}, missing {sorted(PRINTED[which] - got)}"


def test_c02_intersection(hexc):
    with criterion("2 reference link sets", "intersection check"):
        la = link(hexc, hexc.get_simplex([3]))
        lb = link(hexc, hexc.get_simplex([4]))
        lab = link(hexc, hexc.get_simplex([3, 4]))
        assert names(la & lb) == names(lab)
        assert (la & lb) == lab


# 3 -------------------------------------------------------------------------

VERBATIM = {
    (6,): {(3, 4), (3,), (4,)},
    (1, 6): {(1, 3, 4), (1, 3), (1, 4)},
    (0, 6): {(0, 3)},
    (0, 1, 6): {(0, 1, 3)},
    (0, 5, 6): {(0, 3, 5)},
    (1, 2, 6): {(1, 2, 4)},
    (2, 5, 6): {(2, 4, 5)},
}
# rows 3 and 7 of the printed table; these follow the map definition instead
BY_DEFINITION = {(5, 6): {(3, 4, 5), (3, 5), (4, 5)}, (2, 6): {(2, 4)}}


def test_c03_decimation_table(hexc):
    with criterion("3 decimation mapping table"):
        m = build_mapping(hexc, hexc.get_simplex([3, 4]))
        assert m.new_vertex == 6
        got = {k: v.names() for k, v in m.table.items()}
        assert len(got) == 9
        for target, group in {**VERBATIM, **BY_DEFINITION}.items():
            assert got[target] == group, target


# 4 -------------------------------------------------------------------------


def test_c04_decimation_vs_oracle():
    with criterion("4 decimation property suite"):
        rng = random.Random(2024)
        t0 = time.perf_counter()
        trials = 0
        while trials < 1000:
            facets = random_facets(rng, n_vertices=8, max_dim=3, max_facets=6)
            cx = build(facets)
            candidates = sorted(s.name for s in cx.simplices() if s.level >= 1)
            if not candidates:
                continue
            s = rng.choice(candidates)
            p = cx.new_vertex_key()
            decimate(cx, cx.get_simplex(s))
            cx.validate()
            assert NaiveComplex.is_closed(cx.names())
            assert cx.names() == NaiveComplex(facets).phi_image(s, p), (facets, s)
            trials += 1
        elapsed = time.perf_counter() - t0
        assert elapsed < 30, f"{elapsed:.1f} s"


# 5 -------------------------------------------------------------------------


def test_c05_oracle_equivalence():
    with criterion("5 oracle equivalence"):
        rng = random.Random(77)
        t0 = time.perf_counter()
        for _ in range(500):
            facets = random_facets(rng, n_vertices=8, max_dim=3, max_facets=6)
            cx, oracle = build(facets), NaiveComplex(facets)
            assert cx.names() == oracle.names()
            for s in cx.simplices():
                n = [s.name]
                assert names(star(cx, s)) == oracle.star(n)
                assert names(closure(cx, s)) == oracle.closure(n)
                assert names(link(cx, s)) == oracle.link(n)
                assert names(neighbors_up(cx, s)) == oracle.neighbors_up(s.name)
                assert names(neighbors_down(cx, s)) == oracle.neighbors_down(s.name)
        elapsed = time.perf_counter() - t0
        assert elapsed < 30, f"{elapsed:.1f} s"


# 6 -------------------------------------------------------------------------


def test_c06_orientation():
    with criterion("6 orientation constraint"):
        tetb = load_off(DATA / "tetb.off")
        assert orient(tetb).orientable
        sums = edge_sums(tetb)
        assert len(sums) == 6 and set(sums) == {0}

        rng = random.Random(6)
        for _ in range(100):
            mesh = build_mesh(refine_sphere(rng, rng.randint(1, 25)))
            assert orient(mesh).orientable
            assert set(edge_sums(mesh)) == {0}

        assert not orient(load_off(DATA / "mobius.off")).orientable


# 7 -------------------------------------------------------------------------


def test_c07_tangents():
    with criterion("7 tangent properties"):
        rng = np.random.default_rng(12)
        for _ in range(20):
            mesh = build_mesh(TETB, rng=rng)
            orient(mesh)
            before = {}
            for v in mesh.level(0):
                t = vertex_tangent(mesh, v)
                assert np.max(np.abs(t + t.T)) <= 1e-12
                before[v.name] = t
            for f in mesh.level(2):
                f.data.orientation = -f.data.orientation
            for v in mesh.level(0):
                assert np.max(np.abs(vertex_tangent(mesh, v) + before[v.name])) <= 1e-12

        tri = load_off(DATA / "triangle.off")
        orient(tri)
        want = np.array([[0.0, -0.5, 0.0], [0.5, 0.0, 0.0], [0.0, 0.0, 0.0]])
        for v in tri.level(0):
            assert np.max(np.abs(vertex_tangent(tri, v) - want)) <= 1e-12


# 8 -------------------------------------------------------------------------


@pytest.mark.parametrize("edge", list(combinations((1, 2, 3, 4), 2)))
def test_c08_topology_change(edge):
    with criterion("8 topology change demonstration"):
        mesh = build_mesh(TETB)
        collapse_edge(mesh, edge, guard=False)
        facets = [f.name for f in mesh.facets()]
        assert len(facets) == 1 and len(facets[0]) == 3

        mesh = build_mesh(TETB)
        before = mesh.names()
        with pytest.raises(LinkConditionError):
            collapse_edge(mesh, edge)
        assert mesh.names() == before


# 9 -------------------------------------------------------------------------


@pytest.mark.parametrize("facets, pos", [(TETB, None), (HEX, HEX_POSITIONS)], ids=["tetb", "hex"])
def test_c09_round_trip(facets, pos):
    with criterion("9 OFF round trip"):
        # keys 0..V-1 so that file indices coincide with names
        if pos is None:
            facets = [tuple(k - 1 for k in f) for f in facets]
        mesh = build_mesh(facets, pos, rng=np.random.default_rng(9))
        buf = io.StringIO()
        write_off(mesh, buf)
        back = load_off(io.StringIO(buf.getvalue()))
        assert back.names() == mesh.names()
        for v in mesh.level(0):
            k = v.name[0]
            assert back.position(k).tolist() == mesh.position(k).tolist()
        assert dumps_off(back) == buf.getvalue()


@pytest.mark.parametrize(
    "name, line", [("bad_header", 1), ("bad_counts", 2), ("bad_arity", 7), ("bad_index", 8), ("truncated", 5)]
)
def test_c09_parse_errors(name, line):
    from hasse_complex import OffParseError

    with criterion("9 OFF round trip"):
        with pytest.raises(OffParseError) as err:
            load_off(DATA / f"{name}.off")
        assert err.value.lineno == line


# 10 ------------------------------------------------------------------------


def cli(*argv):
    return subprocess.run([sys.executable, "-m", "hasse_complex", *map(str, argv)], capture_output=True)


@pytest.mark.parametrize(
    "argv, code",
    [
        (("info", DATA / "hex.off"), 0),
        (("info", DATA / "mobius.off"), 0),
        (("check-link", DATA / "hex.off", "--edge", 3, 4), 0),
        (("check-link", DATA / "tetb.off", "--edge", 0, 1), 1),
        (("decimate", DATA / "hex.off", "--edge", 3, 4, "-o", "{tmp}/hex.off"), 0),
        (("decimate", DATA / "tetb.off", "--edge", 0, 1, "-o", "{tmp}/tetb.off"), 1),
        (("decimate", DATA / "tetb.off", "--edge", 0, 1, "--no-guard", "-o", "{tmp}/tetb.off"), 0),
        (("tangents", DATA / "tetb.off"), 0),
        (("tangents", DATA / "mixed.off"), 0),
        (("tangents", DATA / "mobius.off"), 1),
        (("info", DATA / "bad_arity.off"), 2),
        (("tangents", DATA / "truncated.off"), 2),
        (("check-link", DATA / "hex.off", "--edge", 0, 2), 2),
        (("info",), 2),
    ],
)
def test_c10_cli(argv, code, tmp_path):
    with criterion("10 CLI determinism and exit codes", " ".join(map(str, argv[:1]))):
        argv = [str(a).format(tmp=tmp_path) for a in argv]
        first, second = cli(*argv), cli(*argv)
        assert first.returncode == second.returncode == code
        assert first.stdout == second.stdout
        assert first.stderr == second.stderr
        if argv[0] == "decimate" and code == 0:
            out = argv[argv.index("-o") + 1]
            assert load_off(out).counts().levels[2] > 0


# timing smoke --------------------------------------------------------------


def per_hop_seconds(n_vertices, rng):
    cx = Complex(Schema.bare(2))
    for _ in range(3 * n_vertices):
        cx.insert(rng.sample(range(n_vertices), 3))
    probes = []
    for f in list(cx.level(2))[:200]:
        a, b, c = f.name
        probes.append((cx.get_simplex([a]), [b, c]))

    def hop():
        for start, keys in probes:
            cx.get_simplex_up(start, keys)

    best = min(timeit.repeat(hop, number=50, repeat=7))
    return best / (50 * len(probes) * 2)


def test_timing_get_simplex_up_constant_per_hop():
    with criterion("T get_simplex_up per-hop latency"):
        rng = random.Random(1)
        small = per_hop_seconds(500, rng)
        large = per_hop_seconds(5000, rng)
        assert large / small < 2.0, f"{small * 1e9:.0f} ns vs {large * 1e9:.0f} ns"
