#!/usr/bin/env python3
"""Regenerate the 8-vertex Klein bottle facet list used by the corpus.

Starts from a 4x3 grid quotient (left/right edges glued with a flip,
top/bottom straight), then greedily contracts edges subject to the surface
link condition until the triangulation is vertex-minimal.  Every step is
re-verified: closed surface, Euler characteristic 0, and first homology
Z + Z/2 via an independent Smith-normal-form computation with sympy.
"""

from itertools import combinations

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form


def grid_klein(nx: int, ny: int):
    def normalize(x, y):
        y %= ny
        if x >= nx:
            x -= nx
            y = (ny - y) % ny
        return x * ny + y

    tris = set()
    for x in range(nx):
        for y in range(ny):
            c00 = normalize(x, y)
            c10 = normalize(x + 1, y)
            c01 = normalize(x, y + 1)
            c11 = normalize(x + 1, y + 1)
            tris.add(tuple(sorted((c00, c10, c11))))
            tris.add(tuple(sorted((c00, c11, c01))))
    return nx * ny, sorted(tris)


def edges_of(tris):
    out = {}
    for t in tris:
        for e in combinations(t, 2):
            out.setdefault(e, []).append(t)
    return out


def is_closed_surface(nverts, tris):
    if len(set(tris)) != len(tris):
        return False
    if any(len(set(t)) != 3 for t in tris):
        return False
    edge_map = edges_of(tris)
    if any(len(ts) != 2 for ts in edge_map.values()):
        return False
    # each vertex link must be a single cycle
    for v in range(nverts):
        star = [t for t in tris if v in t]
        if not star:
            return False
        link_edges = [tuple(sorted(set(t) - {v})) for t in star]
        adj = {}
        for a, b in link_edges:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        if any(len(nbrs) != 2 for nbrs in adj.values()):
            return False
        start = next(iter(adj))
        seen = {start}
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        if len(seen) != len(adj):
            return False
    return True


def homology_h1(nverts, tris):
    """H_1 of the surface via sympy SNF: (free rank, torsion factors)."""
    edges = sorted(edges_of(tris))
    eidx = {e: i for i, e in enumerate(edges)}
    d1 = [[0] * len(edges) for _ in range(nverts)]  # boundary of edges
    for j, (a, b) in enumerate(edges):
        d1[a][j] -= 1
        d1[b][j] += 1
    d2 = [[0] * len(tris) for _ in range(len(edges))]
    for j, t in enumerate(tris):
        for i in range(3):
            face = t[:i] + t[i + 1 :]
            d2[eidx[face]][j] += (-1) ** i
    m1, m2 = Matrix(d1), Matrix(d2)
    r1, r2 = m1.rank(), m2.rank()
    free = len(edges) - r1 - r2
    snf = smith_normal_form(m2)
    torsion = [
        int(snf[i, i]) for i in range(min(snf.shape)) if abs(snf[i, i]) > 1
    ]
    return free, sorted(abs(t) for t in torsion)


def contractible_edges(tris):
    edge_map = edges_of(tris)
    nbrs = {}
    for a, b in edge_map:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    out = []
    for (a, b), ts in sorted(edge_map.items()):
        opposite = {v for t in ts for v in t if v not in (a, b)}
        if nbrs[a] & nbrs[b] == opposite:
            out.append((a, b))
    return out


def contract(nverts, tris, edge):
    a, b = edge
    new_tris = set()
    for t in tris:
        if a in t and b in t:
            continue
        t2 = tuple(sorted(a if v == b else v for v in t))
        new_tris.add(t2)
    # relabel to keep vertices 0..n-2 contiguous
    used = sorted({v for t in new_tris for v in t})
    relabel = {v: i for i, v in enumerate(used)}
    return len(used), sorted(tuple(relabel[v] for v in t) for t in new_tris)


def search(nverts, tris, target, seen):
    """DFS over contraction sequences down to the target vertex count."""
    if nverts == target:
        return nverts, tris
    key = (nverts, tuple(tris))
    if key in seen:
        return None
    seen.add(key)
    for edge in contractible_edges(tris):
        nverts2, tris2 = contract(nverts, tris, edge)
        if not is_closed_surface(nverts2, tris2):
            continue
        found = search(nverts2, tris2, target, seen)
        if found:
            return found
    return None


def main():
    nverts, tris = grid_klein(4, 3)
    assert is_closed_surface(nverts, tris), "grid quotient is not a surface"
    assert nverts - len(edges_of(tris)) + len(tris) == 0, "Euler characteristic != 0"
    assert homology_h1(nverts, tris) == (1, [2]), "grid quotient is not a Klein bottle"
    print(f"start: {nverts} vertices, {len(tris)} triangles")
    found = search(nverts, tris, 8, set())
    assert found, "no 8-vertex contraction sequence found"
    nverts, tris = found
    assert is_closed_surface(nverts, tris)
    assert nverts - len(edges_of(tris)) + len(tris) == 0
    assert homology_h1(nverts, tris) == (1, [2])
    print(f"final: {nverts} vertices, {len(tris)} triangles")
    print("facets:")
    for t in tris:
        print(f"    {t},")


if __name__ == "__main__":
    main()
