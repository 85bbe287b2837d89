"""Flype moves read off face data, and flype-orbit closure.

A flype slides a crossing through a tangle.  On face data it is spotted
by a simple closed curve crossing the diagram in two edges and one
crossing, none mutually incident: the curve runs through one face of one
color (the edge-edge arc) and through the two opposite-color faces at the
crossing (the edge-crossing-edge arc).  Closing the set of reduced codes
under all such moves enumerates every reduced alternating diagram of a
prime alternating knot, by the flyping theorem.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import DTCode, GaussCode, crossing_count, normalize, positions, reduced_form, to_dt
from .embedding import FaceData, realize, trace_faces
from .errors import InvalidCandidate, OrbitOverflow

ORBIT_CAP = 100_000


@dataclass(frozen=True, order=True)
class FlypeCandidate:
    """Two edges and a crossing cut by one flype circle.

    e1 < e2 are 1-based edge ids; ee_color is the color of the face the
    edge-edge arc runs through (the crossing's two faces of the opposite
    color carry the other arc).
    """

    e1: int
    e2: int
    crossing: int
    ee_color: str


def _edge_endpoints(word: GaussCode, edge: int) -> tuple[int, int]:
    m = len(word)
    return word[edge - 1], word[edge % m]


def flype_candidates(fd: FaceData) -> set[FlypeCandidate]:
    """All EE/ECE-crossed pairs-plus-crossing identifying possible flypes."""
    word = fd.word
    if not word:
        return set()

    # EE[color]: unordered same-face edge pairs sharing no endpoint crossing
    ee: dict[str, set[tuple[int, int]]] = {"A": set(), "B": set()}
    for face, color in zip(fd.faces, fd.colors):
        edges = sorted({e for e, _ in face})
        for i, a in enumerate(edges):
            ends_a = set(_edge_endpoints(word, a))
            for b in edges[i + 1:]:
                if ends_a.isdisjoint(_edge_endpoints(word, b)):
                    ee[color].add((a, b))

    # the two same-color faces at each crossing (reduced: all four distinct)
    faces_at: dict[int, dict[str, list[int]]] = {}
    for idx, (face, color) in enumerate(zip(fd.faces, fd.colors)):
        for _, c in face:
            faces_at.setdefault(c, {"A": [], "B": []})[color].append(idx)

    out: set[FlypeCandidate] = set()
    for c, by_color in faces_at.items():
        for ece_color in ("A", "B"):
            pair = by_color[ece_color]
            if len(pair) != 2:
                continue  # non-reduced corner; no flype through it
            f1, f2 = (fd.edges_of_face(i) for i in pair)
            ok1 = {e for e in f1 if c not in _edge_endpoints(word, e)}
            ok2 = {e for e in f2 if c not in _edge_endpoints(word, e)}
            ee_color = "B" if ece_color == "A" else "A"
            for a in ok1:
                for b in ok2:
                    if a == b:
                        continue
                    key = (a, b) if a < b else (b, a)
                    if key in ee[ee_color]:
                        out.add(FlypeCandidate(key[0], key[1], c, ee_color))
    return out


def apply_flype(word: GaussCode, cand: FlypeCandidate) -> GaussCode:
    """Rewrite the word for one flype: move the crossing into the two edges.

    Both occurrences of the crossing label are deleted and re-inserted in
    the cyclic gaps after positions e1 and e2, then the word is relabeled.
    The candidate's positions must interleave around the circle the move
    cuts; otherwise InvalidCandidate is raised.
    """
    m = len(word)
    p, q = positions(word)[cand.crossing]
    j1, j2 = p + 1, q + 1  # 1-based
    i1, i2 = cand.e1, cand.e2
    # around the cycle the four cut points must alternate edge/crossing:
    # exactly one crossing occurrence inside the (i1, i2] stretch
    inside = [j for j in (j1, j2) if i1 < j <= i2]
    if len(inside) != 1:
        raise InvalidCandidate(
            f"crossing {cand.crossing} at {j1},{j2} does not separate edges {i1},{i2}"
        )
    out: list[int] = []
    for t in range(1, m + 1):
        if t != j1 and t != j2:
            out.append(word[t - 1])
        if t == i1 or t == i2:
            out.append(cand.crossing)
    return normalize(tuple(out))


def flype_neighbors(word: GaussCode) -> set[GaussCode]:
    """Reduced forms reachable by one flype from a reduced word."""
    fd = trace_faces(word, realize(word))
    return {reduced_form(apply_flype(word, cand)) for cand in flype_candidates(fd)}


def enumerate_orbit(word: GaussCode, cap: int = ORBIT_CAP) -> set[DTCode]:
    """Breadth-first closure under flypes; one DT code per reduced diagram."""
    start = reduced_form(word)
    seen: dict[DTCode, GaussCode] = {to_dt(start): start}
    queue = [start]
    while queue:
        current = queue.pop(0)
        for nb in flype_neighbors(current):
            key = to_dt(nb)
            if key not in seen:
                if len(seen) >= cap:
                    raise OrbitOverflow(f"orbit exceeded {cap} diagrams")
                seen[key] = nb
                queue.append(nb)
    return set(seen)
