import random
from pathlib import Path

import numpy as np
import pytest

from hasse_complex import Complex, Schema
from hasse_complex.mesh import SurfaceMesh
from hasse_complex.oracle import NaiveComplex

DATA = Path(__file__).parent / "data"

TRI = [(1, 2, 3)]
TET = [(1, 2, 3, 4)]
HEX = [(0, 1, 3), (0, 3, 5), (1, 3, 4), (3, 4, 5), (1, 2, 4), (2, 4, 5)]
TETB = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
MOBIUS = [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4), (0, 1, 4)]
HEX_POSITIONS = {
    0: (-1.5, 0.0, 0.0),
    1: (0.0, 1.0, 0.0),
    2: (1.5, 0.0, 0.0),
    3: (-0.5, 0.0, 0.0),
    4: (0.5, 0.0, 0.0),
    5: (0.0, -1.0, 0.0),
}


def build(facets, dim=3, schema=None):
    cx = Complex(schema or Schema.bare(dim))
    for f in facets:
        cx.insert(f)
    return cx


def build_mesh(facets, positions=None, rng=None):
    mesh = SurfaceMesh()
    keys = sorted({k for f in facets for k in f})
    for k in keys:
        if positions is not None:
            pos = positions[k]
        elif rng is not None:
            pos = rng.normal(size=3)
        else:
            pos = (0.0, 0.0, 0.0)
        mesh.add_vertex(k, pos)
    for f in facets:
        mesh.insert(f)
    return mesh


def names(sset):
    return {s.name for s in sset}


def random_facets(rng: random.Random, n_vertices=8, max_dim=3, max_facets=6):
    out = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, max_dim + 1)
        out.append(tuple(rng.sample(range(n_vertices), size)))
    return out


def refine_sphere(rng: random.Random, steps: int):
    """Random triangulated sphere: start from the tetrahedron boundary and
    apply face splits and edge splits, then relabel the vertices randomly."""
    faces = {frozenset(f) for f in TETB}
    nxt = 5
    for _ in range(steps):
        if rng.random() < 0.5:
            f = rng.choice(sorted(faces, key=sorted))
            a, b, c = sorted(f)
            faces.remove(f)
            faces |= {frozenset((a, b, nxt)), frozenset((b, c, nxt)), frozenset((a, c, nxt))}
        else:
            f = rng.choice(sorted(faces, key=sorted))
            a, b = rng.sample(sorted(f), 2)
            pair = [g for g in faces if {a, b} <= g]
            assert len(pair) == 2
            for g in pair:
                faces.remove(g)
                (c,) = g - {a, b}
                faces |= {frozenset((a, c, nxt)), frozenset((b, c, nxt))}
        nxt += 1
    verts = sorted({v for f in faces for v in f})
    labels = rng.sample(range(3 * len(verts)), len(verts))
    relabel = dict(zip(verts, labels))
    return [tuple(sorted(relabel[v] for v in f)) for f in sorted(faces, key=sorted)]


def torus_facets(n=3, m=3):
    """Triangulated n x m grid torus (orientable, genus 1)."""
    def key(i, j):
        return (i % n) * m + (j % m)

    out = []
    for i in range(n):
        for j in range(m):
            out.append((key(i, j), key(i + 1, j), key(i + 1, j + 1)))
            out.append((key(i, j), key(i + 1, j + 1), key(i, j + 1)))
    return out


@pytest.fixture
def tri():
    return build(TRI, dim=2)


@pytest.fixture
def tet():
    return build(TET, dim=3)


@pytest.fixture
def hexc():
    return build(HEX, dim=2)


@pytest.fixture
def hex_oracle():
    return NaiveComplex(HEX)


@pytest.fixture
def hex_mesh():
    return build_mesh(HEX, HEX_POSITIONS)


@pytest.fixture
def tetb_mesh():
    return build_mesh(TETB, rng=np.random.default_rng(7))


# Acceptance results, keyed by criterion label.  Filled in by
# test_acceptance.py and printed once at the end of the run.
ACCEPTANCE = {}


def record(label, ok, detail=""):
    prev = ACCEPTANCE.get(label)
    if prev is None or prev[0]:
        ACCEPTANCE[label] = (ok, detail)
    elif not ok and detail:
        ACCEPTANCE[label] = (False, f"{prev[1]}; {detail}" if prev[1] else detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    def order(label):
        head = label.split()[0]
        return (int(head) if head.isdigit() else 99, label)

    for label in sorted(ACCEPTANCE, key=order):
        ok, detail = ACCEPTANCE[label]
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
