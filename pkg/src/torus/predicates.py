from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from utils.config import get_thread_count

from .points import Exponent, translate, translates_between
from .simplex import TorusSimplex, relative_interiors_meet
from .simplicial_set import SimplicialSet


@dataclass
class GeometryCheck:
    """
    Outcome of an immersion or embedding check.

    Parameters:
    - ok: whether the property holds.
    - witness: (simplex, m) for a self-overlap, or (simplex, other, m) for two overlapping
      simplices; None when ok.
    - degenerate: simplices with affinely dependent vertices (excluded from the immersion test).
    """
    ok: bool
    witness: Optional[Tuple] = None
    degenerate: List[TorusSimplex] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        if len(self.witness) == 2:
            simplex, m = self.witness
            return f"{simplex} meets its own translate by {m}"
        first, second, m = self.witness
        return f"{first} meets {second} translated by {m}"


def _positive(m: Exponent) -> bool:
    for x in m:
        if x != 0:
            return x > 0
    return False


def _shifted(simplex: TorusSimplex, m: Exponent):
    return [translate(v, m) for v in simplex.vertices]


def self_overlap(simplex: TorusSimplex) -> Optional[Exponent]:
    """First lexicographically positive m with Int s meeting Int s + m, or None."""
    box = simplex.box()
    for m in translates_between(box, box):
        if _positive(m) and relative_interiors_meet(simplex.vertices, _shifted(simplex, m)):
            return m
    return None


def pair_overlap(first: TorusSimplex, second: TorusSimplex) -> Optional[Exponent]:
    """First m (lexicographic) with Int first meeting Int second + m, or None."""
    for m in translates_between(first.box(), second.box()):
        if relative_interiors_meet(first.vertices, _shifted(second, m)):
            return m
    return None


def _run(task, items: Sequence, threads: Optional[int]):
    threads = threads or get_thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(task, items))
    return [task(item) for item in items]


def is_immersed(X: SimplicialSet, threads: Optional[int] = None) -> GeometryCheck:
    """
    Check that no nondegenerate simplex overlaps a nonzero lattice translate of itself.

    Simplices with affinely dependent vertices are skipped and listed in the result.

    Returns:
    - GeometryCheck with witness (simplex, m) on failure.
    """
    candidates = [s for s in X.all_simplices() if s.dimension > 0]
    degenerate = [s for s in candidates if s.is_degenerate()]
    regular = [s for s in candidates if not s.is_degenerate()]
    results = _run(self_overlap, regular, threads)
    for simplex, m in zip(regular, results):
        if m is not None:
            return GeometryCheck(False, (simplex, m), degenerate)
    return GeometryCheck(True, None, degenerate)


def is_embedded(X: SimplicialSet, threads: Optional[int] = None) -> GeometryCheck:
    """
    Immersion plus pairwise disjoint relative interiors of distinct simplex images.

    Images are compared without vertex order. Degenerate simplices take part with the
    relative interior of their convex hull.

    Returns:
    - GeometryCheck with witness (simplex, other, m) when two images overlap.
    """
    immersed = is_immersed(X, threads)
    if not immersed:
        return immersed
    images = {}
    for s in X.all_simplices():
        images.setdefault(s.unordered_key(), s)
    ordered = [images[key] for key in sorted(images)]
    # degenerate images were skipped by the immersion pass
    for s in ordered:
        if s.is_degenerate() and s.dimension > 0:
            m = self_overlap(s)
            if m is not None:
                return GeometryCheck(False, (s, m), immersed.degenerate)
    pairs = [(a, b) for index, a in enumerate(ordered) for b in ordered[index + 1:]]
    results = _run(lambda pair: pair_overlap(*pair), pairs, threads)
    for (a, b), m in zip(pairs, results):
        if m is not None:
            return GeometryCheck(False, (a, b, m), immersed.degenerate)
    return GeometryCheck(True, None, immersed.degenerate)
