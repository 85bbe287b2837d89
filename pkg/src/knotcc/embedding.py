"""Planar realization of Gauss words: rotation systems, faces, signs.

A word with n crossings describes a 4-valent graph traversed as a single
closed curve.  One handedness bit per crossing fixes the cyclic order of
the four strand-ends there (the two visits must interleave, leaving two
transverse orders).  An assignment embeds the curve in an orientable
surface; it lies in the sphere exactly when face tracing yields n+2
faces (Euler, V=n, E=2n), and that is the realizability test used here.

Darts are directed edges, two per edge.  Edge i (0-based) runs from word
position i to position i+1 mod 2n; its public 1-based id is i+1, "the
strand exiting position i+1".  Faces are orbits of the next-dart map:
arrive at a crossing through a slot, leave through the counterclockwise
next slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .codes import GaussCode, positions, validate
from .errors import NonRealizable

Theta = tuple[int, ...]

# slot tags at a crossing visit: arrival side of the earlier/later visit,
# departure side of the earlier/later visit
A_IN, A_OUT, B_IN, B_OUT = 0, 1, 2, 3

# counterclockwise slot cycles for the two transverse interleavings
_CCW = {
    0: (A_IN, B_IN, A_OUT, B_OUT),
    1: (A_IN, B_OUT, A_OUT, B_IN),
}


def _build_next(word: GaussCode, theta: dict[int, int] | Theta) -> list[int]:
    """Next-dart map for the assigned crossings; -1 where undefined.

    Dart ids: forward dart of edge i is 2i, backward is 2i+1.
    """
    m = len(word)
    pos = positions(word)
    if not isinstance(theta, dict):
        theta = {c: b for c, b in zip(sorted(pos), theta)}
    nxt = [-1] * (2 * m)
    for c, bit in theta.items():
        p, q = pos[c]
        # darts arriving through each slot of this crossing
        arrive = {
            A_IN: 2 * ((p - 1) % m),      # forward dart of edge ending at p
            A_OUT: 2 * p + 1,             # backward dart of edge leaving p
            B_IN: 2 * ((q - 1) % m),
            B_OUT: 2 * q + 1,
        }
        # darts departing through each slot
        depart = {
            A_IN: 2 * ((p - 1) % m) + 1,  # backward dart of that edge
            A_OUT: 2 * p,
            B_IN: 2 * ((q - 1) % m) + 1,
            B_OUT: 2 * q,
        }
        cyc = _CCW[bit]
        for k, slot in enumerate(cyc):
            nxt[arrive[slot]] = depart[cyc[(k - 1) % 4]]
    return nxt


def _count_cycles(nxt: list[int]) -> tuple[int, bool]:
    """(closed cycles, fully defined) of a partial permutation on darts."""
    size = len(nxt)
    state = [0] * size  # 0 unseen, 1 on current walk, 2 done
    cycles = 0
    complete = True
    for start in range(size):
        if state[start] or nxt[start] < 0:
            if nxt[start] < 0:
                complete = False
            continue
        d = start
        walk = []
        while d >= 0 and state[d] == 0:
            state[d] = 1
            walk.append(d)
            d = nxt[d]
        if d >= 0 and state[d] == 1:
            cycles += 1  # closed back onto the current walk
        if d < 0:
            complete = False
        for x in walk:
            state[x] = 2
    return cycles, complete


def _search(word: GaussCode, labels: list[int], pos, want_all: bool) -> list[Theta]:
    """DFS over handedness bits; prune when n+2 faces become unreachable."""
    n = len(labels)
    m = len(word)
    target = n + 2
    found: list[Theta] = []
    assigned: dict[int, int] = {}

    def recurse(k: int) -> bool:
        nxt = _build_next(word, assigned)
        cycles, complete = _count_cycles(nxt)
        if cycles + 4 * (n - k) < target:
            return False
        if k == n:
            if complete and cycles == target:
                found.append(tuple(assigned[c] for c in labels))
                return not want_all
            return False
        c = labels[k]
        for bit in (0, 1):
            assigned[c] = bit
            if recurse(k + 1):
                return True
            del assigned[c]
        return False

    recurse(0)
    return found


def realizations(word: GaussCode) -> list[Theta]:
    """Every handedness assignment achieving n+2 faces (test oracle)."""
    validate(word)
    if not word:
        return [()]
    pos = positions(word)
    return _search(word, sorted(pos), pos, want_all=True)


@lru_cache(maxsize=1 << 15)
def realize(word: GaussCode) -> Theta:
    """One planar rotation system, mirror-fixed so crossing 1 has sign +1.

    Raises NonRealizable when no assignment embeds the word in the sphere.
    """
    validate(word)
    if not word:
        return ()
    pos = positions(word)
    # parity precheck: every chord of a realizable word has odd span
    for p, q in pos.values():
        if (q - p) % 2 == 0:
            raise NonRealizable(f"chord parity fails for {word}")
    labels = sorted(pos)
    hit = _search(word, labels, pos, want_all=False)
    if not hit:
        raise NonRealizable(f"no spherical rotation system for {word}")
    theta = hit[0]
    if _sign_of(theta[0], pos[labels[0]][0]) < 0:
        theta = tuple(1 - b for b in theta)
    return theta


def validate_realizable(word: GaussCode) -> bool:
    """Ingestion gate: does the word embed in the sphere?"""
    try:
        realize(word)
        return True
    except NonRealizable:
        return False


def _sign_of(bit: int, first_pos: int) -> int:
    # Positive crossing: counterclockwise slot order equals
    # (over-in, under-in, over-out, under-out); with the alternating
    # convention (word position 1 an overpass) that collapses to a
    # parity match between the handedness bit and the first visit.
    return 1 if bit == first_pos % 2 else -1


def crossing_signs(word: GaussCode, theta: Theta) -> tuple[int, ...]:
    """Signs per crossing label under the alternating convention."""
    pos = positions(word)
    return tuple(_sign_of(theta[i], pos[c][0]) for i, c in enumerate(sorted(pos)))


@dataclass(frozen=True)
class FaceData:
    """Traced faces: per face a cyclic (edge id, crossing label) boundary."""

    word: GaussCode
    faces: tuple[tuple[tuple[int, int], ...], ...]
    colors: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def crossings_around(self, color: str) -> list[list[int]]:
        return [[c for _, c in f] for f, col in zip(self.faces, self.colors) if col == color]

    def edges_around(self, color: str) -> list[list[int]]:
        return [[e for e, _ in f] for f, col in zip(self.faces, self.colors) if col == color]

    def edges_of_face(self, idx: int) -> set[int]:
        return {e for e, _ in self.faces[idx]}


def trace_faces(word: GaussCode, theta: Theta) -> FaceData:
    """Faces as orbits of the next-dart map, checkerboard colored.

    Color A is the face containing the forward dart of edge 1.
    """
    if not word:
        return FaceData(word=(), faces=((), ()), colors=("A", "B"))
    m = len(word)
    nxt = _build_next(word, theta)
    face_of = [-1] * (2 * m)
    faces: list[tuple[tuple[int, int], ...]] = []
    for start in range(2 * m):
        if face_of[start] >= 0:
            continue
        idx = len(faces)
        orbit = []
        d = start
        while face_of[d] < 0:
            face_of[d] = idx
            edge_id = d // 2 + 1
            head_pos = (d // 2 + 1) % m if d % 2 == 0 else d // 2
            orbit.append((edge_id, word[head_pos]))
            d = nxt[d]
        faces.append(tuple(orbit))
    if len(faces) != m // 2 + 2:
        raise NonRealizable(f"rotation system traces {len(faces)} faces, not n+2")

    # checkerboard: faces across each edge differ; bipartition by BFS
    adj: list[set[int]] = [set() for _ in faces]
    for i in range(m):
        a, b = face_of[2 * i], face_of[2 * i + 1]
        adj[a].add(b)
        adj[b].add(a)
    colors = [""] * len(faces)
    colors[face_of[0]] = "A"
    queue = [face_of[0]]
    while queue:
        f = queue.pop()
        for g in adj[f]:
            if not colors[g]:
                colors[g] = "B" if colors[f] == "A" else "A"
                queue.append(g)
            elif colors[g] == colors[f]:
                raise NonRealizable("faces are not checkerboard colorable")
    return FaceData(word=word, faces=tuple(faces), colors=tuple(colors))


@dataclass(frozen=True)
class Diagram:
    """A realized word: rotation system plus derived face and sign data."""

    word: GaussCode
    theta: Theta

    @classmethod
    def from_word(cls, word: GaussCode) -> "Diagram":
        return cls(word=word, theta=realize(word))

    @property
    def n(self) -> int:
        return len(self.word) // 2

    @cached_property
    def faces(self) -> FaceData:
        return trace_faces(self.word, self.theta)

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return crossing_signs(self.word, self.theta)
