"""Unsigned Gauss codes, DT codes, and the rewrites the pipeline runs on.

A Gauss word is a double-occurrence word: each crossing label in 1..n
appears exactly twice in a word of length 2n.  Signs are omitted
throughout; over/under is recovered from the alternating convention and
mirror images are identified, so the unsigned word determines the knot
shadow completely.

Everything here is pure and operates on tuples of ints.  Canonical
choices (label normalization, lexicographically minimal dihedral image)
make words usable as dictionary keys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import MalformedPairing, MalformedWord, UnknownLabel

GaussCode = tuple[int, ...]
DTCode = tuple[int, ...]

_TOKEN_SPLIT = re.compile(r"[,\s]+")


@dataclass(frozen=True, order=True)
class KnotName:
    """Catalog identifier like 7_4; the unknot is 0_1."""

    crossings: int
    index: int

    def __str__(self) -> str:
        return f"{self.crossings}_{self.index}"

    @classmethod
    def parse(cls, text: str) -> "KnotName":
        head, _, tail = text.strip().partition("_")
        if not tail:
            raise ValueError(f"not a knot name: {text!r}")
        return cls(int(head), int(tail))


UNKNOT = KnotName(0, 1)


def validate(word: GaussCode) -> GaussCode:
    """Check double-occurrence validity; raise MalformedWord otherwise."""
    if len(word) % 2:
        raise MalformedWord(f"odd length {len(word)}")
    n = len(word) // 2
    counts: dict[int, int] = {}
    for c in word:
        counts[c] = counts.get(c, 0) + 1
    bad = {c: k for c, k in counts.items() if k != 2}
    if bad:
        raise MalformedWord(f"labels with occurrence != 2: {bad}")
    if counts and set(counts) != set(range(1, n + 1)):
        raise MalformedWord(f"labels not 1..{n}: {sorted(counts)}")
    return word


def normalize(word: tuple[int, ...]) -> GaussCode:
    """Relabel so first occurrences read 1, 2, 3, ... left to right."""
    seen: dict[int, int] = {}
    out = []
    for c in word:
        if c not in seen:
            seen[c] = len(seen) + 1
        out.append(seen[c])
    return tuple(out)


def parse_gauss(text: str) -> GaussCode:
    """Parse comma/space-separated labels into a normalized valid word."""
    toks = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    try:
        raw = tuple(int(t) for t in toks)
    except ValueError as exc:
        raise MalformedWord(f"non-integer token in {text!r}") from exc
    if any(c <= 0 for c in raw):
        raise MalformedWord("labels must be positive (codes are unsigned)")
    word = normalize(raw)
    if len(set(raw)) != len(set(word)):
        raise MalformedWord("duplicate labels collided during relabeling")
    return validate(word)


def render(word: GaussCode) -> str:
    """Text form: comma-separated labels, no brackets."""
    return ",".join(str(c) for c in word)


def crossing_count(word: GaussCode) -> int:
    return len(word) // 2


def positions(word: GaussCode) -> dict[int, tuple[int, int]]:
    """0-based (first, second) occurrence positions per label."""
    first: dict[int, int] = {}
    pos: dict[int, tuple[int, int]] = {}
    for i, c in enumerate(word):
        if c in first:
            pos[c] = (first[c], i)
        else:
            first[c] = i
    return pos


def to_dt(word: GaussCode) -> DTCode:
    """DT sequence [j(1),...,j(n)]: the even partner position of each odd one.

    Every realizable word pairs odd positions with even ones; if the word
    as given does not (possible only for garbage input), one re-rotation
    is attempted before giving up.
    """
    if not word:
        return ()
    for attempt in (word, word[1:] + word[:1]):
        pos = positions(attempt)
        if all((p + q) % 2 == 1 for p, q in pos.values()):
            n = len(attempt) // 2
            out = []
            for s in range(n):
                p, q = pos[attempt[2 * s]]
                partner = q if p == 2 * s else p
                out.append(partner + 1)
            return tuple(out)
    raise MalformedPairing(f"no odd/even pairing exists for {word}")


def from_dt(entries: DTCode) -> GaussCode:
    """Rebuild the normalized Gauss word placing label s at 2s-1 and j(s)."""
    n = len(entries)
    if len(set(entries)) != n or any(e % 2 or not 2 <= e <= 2 * n for e in entries):
        raise MalformedPairing(f"entries must be distinct evens in 2..{2 * n}: {entries}")
    word = [0] * (2 * n)
    for s, j in enumerate(entries, start=1):
        word[2 * s - 2] = s
        word[j - 1] = s
    if 0 in word:
        raise MalformedPairing(f"pairing is not a bijection: {entries}")
    return normalize(tuple(word))


def parse_dt(text: str) -> DTCode:
    toks = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    try:
        entries = tuple(int(t) for t in toks)
    except ValueError as exc:
        raise MalformedPairing(f"non-integer token in {text!r}") from exc
    from_dt(entries)
    return entries


def render_dt(entries: DTCode) -> str:
    """Text form used as the persisted table key, e.g. "4,6,2"."""
    return ",".join(str(e) for e in entries)


def dihedral_images(word: GaussCode):
    """All 4n rotations and reflected rotations, normalized."""
    m = len(word)
    rev = word[::-1]
    for k in range(m):
        yield normalize(word[k:] + word[:k])
        yield normalize(rev[k:] + rev[:k])


@lru_cache(maxsize=1 << 16)
def reduced_form(word: GaussCode) -> GaussCode:
    """Lexicographic minimum over the dihedral orbit; canonical per diagram."""
    if not word:
        return ()
    return min(dihedral_images(word))


def remove_kinks(word: GaussCode) -> GaussCode:
    """Delete cyclically adjacent equal-label pairs until none remain."""
    w = list(word)
    changed = True
    while changed and w:
        changed = False
        m = len(w)
        for i in range(m):
            j = (i + 1) % m
            if w[i] == w[j]:
                # delete the larger index first so the smaller stays valid
                for k in sorted((i, j), reverse=True):
                    del w[k]
                changed = True
                break
    return normalize(tuple(w))


def splice_at(word: GaussCode, label: int) -> GaussCode:
    """Non-Seifert splice at a crossing: w1.c.w2.c.w3 -> w1.rev(w2).w3.

    Kink pairs created by the rewrite are removed immediately, so every
    explicit splice costs one unknotting step and the result is reduced.
    """
    pos = positions(word)
    if label not in pos:
        raise UnknownLabel(f"label {label} not in word {word}")
    p, q = pos[label]
    spliced = word[:p] + word[p + 1:q][::-1] + word[q + 1:]
    return remove_kinks(spliced)


def _interval_is_summand(word: GaussCode, start: int, length: int) -> bool:
    m = len(word)
    inside = [word[(start + t) % m] for t in range(length)]
    seen: dict[int, int] = {}
    for c in inside:
        seen[c] = seen.get(c, 0) + 1
    return all(k == 2 for k in seen.values())


def decompose_connect_sum(word: GaussCode) -> tuple[GaussCode, ...]:
    """Split a kink-free word into prime connect summands (multiset).

    A cyclic interval whose labels all pair up inside it is a summand;
    all O(n^2) intervals are scanned, which is plenty at table scale.
    Returns normalized summand words sorted for multiset comparison.
    """
    if not word:
        return ()
    m = len(word)
    for length in range(2, m - 1, 2):
        for start in range(m):
            if _interval_is_summand(word, start, length):
                inside = tuple(word[(start + t) % m] for t in range(length))
                outside = tuple(word[(start + length + t) % m] for t in range(m - length))
                parts = decompose_connect_sum(normalize(inside))
                parts += decompose_connect_sum(normalize(outside))
                return tuple(sorted(parts))
    return (normalize(word),)
