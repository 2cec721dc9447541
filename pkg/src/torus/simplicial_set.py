from typing import Dict, Iterable, List, Optional, Tuple

from algebra import FreeComplex
from exponents import Chain, ExponentTable, chains, exponent_table, max_chain_length

from .placement import Placement
from .points import translate
from .simplex import TorusSimplex


class SimplicialSet:
    """
    Graded collection of TorusSimplices with provenance.

    `simplices[k]` maps each k-simplex to the chains that generate it (empty list for
    simplices that were added without provenance, e.g. on import).

    Parameters:
    - n: dimension of the torus.
    """

    def __init__(self, n: int):
        self.n = n
        self.simplices: Dict[int, Dict[TorusSimplex, List[Chain]]] = {}

    def add(self, simplex: TorusSimplex, chain: Optional[Chain] = None):
        if simplex.n != self.n:
            raise ValueError(f"SimplicialSet: simplex lives in R^{simplex.n}, expected R^{self.n}")
        bucket = self.simplices.setdefault(simplex.dimension, {})
        provenance = bucket.setdefault(simplex, [])
        if chain is not None:
            provenance.append(chain)

    def __contains__(self, simplex: TorusSimplex) -> bool:
        return simplex in self.simplices.get(simplex.dimension, {})

    @property
    def dimension(self) -> int:
        nonempty = [k for k, bucket in self.simplices.items() if bucket]
        return max(nonempty) if nonempty else -1

    def simplices_of(self, k: int) -> List[TorusSimplex]:
        return sorted(self.simplices.get(k, {}))

    def all_simplices(self) -> List[TorusSimplex]:
        return [s for k in sorted(self.simplices) for s in self.simplices_of(k)]

    def count(self, k: int) -> int:
        return len(self.simplices.get(k, {}))

    def chain_count(self, k: int) -> int:
        return sum(len(p) for p in self.simplices.get(k, {}).values())

    def provenance(self, simplex: TorusSimplex) -> List[Chain]:
        return list(self.simplices.get(simplex.dimension, {}).get(simplex, []))

    def vertices(self) -> List[TorusSimplex]:
        return self.simplices_of(0)

    def degenerate(self, k: int) -> List[TorusSimplex]:
        return [s for s in self.simplices_of(k) if s.is_degenerate()]

    def face_closure_violation(self) -> Optional[Tuple[TorusSimplex, int]]:
        """First (simplex, j) whose j-th facet is missing, or None."""
        for k in sorted(self.simplices):
            if k == 0:
                continue
            for s in self.simplices_of(k):
                for j in range(k + 1):
                    if s.face(j) not in self:
                        return s, j
        return None

    def is_face_closed(self) -> bool:
        return self.face_closure_violation() is None

    def maximal(self) -> List[TorusSimplex]:
        """Simplices that are not an iterated face of another member: T as a union of images."""
        covered = set()
        result = []
        for k in sorted(self.simplices, reverse=True):
            level = self.simplices_of(k)
            for s in level:
                if s not in covered:
                    result.append(s)
            if k == 0:
                continue
            for s in set(level) | {c for c in covered if c.dimension == k}:
                for j in range(k + 1):
                    covered.add(s.face(j))
        return sorted(result, key=lambda s: (-s.dimension, s.vertices))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialSet):
            return NotImplemented
        mine = {k: set(b) for k, b in self.simplices.items() if b}
        theirs = {k: set(b) for k, b in other.simplices.items() if b}
        return self.n == other.n and mine == theirs

    def __repr__(self) -> str:
        counts = {k: self.count(k) for k in sorted(self.simplices)}
        return f"SimplicialSet(n={self.n}, counts={counts})"


def chain_simplex(chain: Chain, placement: Placement, n: int) -> TorusSimplex:
    """[x_i0, x_i1 + m_1, ..., x_ik + m_1 + ... + m_k] mod Z^n."""
    return TorusSimplex([translate(placement[i], offset)
                         for i, offset in zip(chain.indices, chain.offsets(n))])


def build_from_table(table: ExponentTable, P: Placement, verbose: bool = False) -> SimplicialSet:
    P.check_covers(table.labels, table.n)
    X = SimplicialSet(table.n)
    for k in range(max_chain_length(table) + 1):
        for chain in chains(table, k):
            X.add(chain_simplex(chain, P, table.n), chain)
        if verbose:
            print(f"X_{k}: {X.chain_count(k)} chains, {X.count(k)} distinct simplices")
    return X


def build_X(F: FreeComplex, P: Placement, verbose: bool = False) -> SimplicialSet:
    """
    The simplicial set X(F) over the torus for placement P, with chain provenance.

    Parameters:
    - F: FreeComplex.
    - P: Placement covering every label of F.
    - verbose: print per-dimension counts.

    Returns:
    - SimplicialSet
    """
    return build_from_table(exponent_table(F), P, verbose=verbose)


def simplices_from(items: Iterable[TorusSimplex], n: int) -> SimplicialSet:
    X = SimplicialSet(n)
    for s in items:
        X.add(s)
    return X
