from collections import Counter, deque
from typing import Dict, Hashable, List, Optional, Tuple

from utils.config import DEFAULTS

from .table import DiscreteInfo, Exponent, add_exponents, shift_set


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


class _Matcher:
    """Backtracking search for a relabeling plus per-index translations."""

    def __init__(self, a: DiscreteInfo, b: DiscreteInfo):
        self.a, self.b = a, b
        self.ta, self.tb = a.table, b.table
        self.zero = (0,) * a.n
        self.neighbors = {x: [] for x in a.labels}
        for (i, j) in self.ta.entries:
            self.neighbors[i].append(j)
            self.neighbors[j].append(i)
        self._signatures: Dict[Tuple[str, Hashable], Tuple] = {}

    def signature(self, side: str, label: Hashable) -> Tuple:
        key = (side, label)
        if key not in self._signatures:
            self._signatures[key] = self._signature(side, label)
        return self._signatures[key]

    def _signature(self, side: str, label: Hashable) -> Tuple:
        info = self.a if side == "a" else self.b
        table = info.table
        rows = sorted((table.gap(i, j), len(e)) for (i, j), e in table.entries.items() if i == label)
        cols = sorted((table.gap(i, j), len(e)) for (i, j), e in table.entries.items() if j == label)
        return info.degrees[label], tuple(rows), tuple(cols)

    def search_order(self, candidates: Dict[Hashable, List[Hashable]]) -> List[Hashable]:
        order: List[Hashable] = []
        seen = set()
        for root in sorted(self.a.labels, key=lambda x: (len(candidates[x]), str(x))):
            if root in seen:
                continue
            queue = deque([root])
            seen.add(root)
            while queue:
                x = queue.popleft()
                order.append(x)
                for y in self.neighbors[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
        return order

    def translation(self, x, y, sigma, shifts) -> Optional[Exponent]:
        for w in self.neighbors[x]:
            if w not in sigma:
                continue
            ea = self.ta.get(x, w)
            if ea:
                eb = self.tb.get(y, sigma[w])
                if not eb:
                    return None
                return add_exponents(_sub(min(eb), min(ea)), shifts[w])
            ea = self.ta.get(w, x)
            eb = self.tb.get(sigma[w], y)
            if not eb:
                return None
            return add_exponents(shifts[w], _sub(min(ea), min(eb)))
        return self.zero

    def consistent(self, x, y, t, sigma, shifts) -> bool:
        for w, v in sigma.items():
            if self.tb.get(y, v) != shift_set(self.ta.get(x, w), _sub(t, shifts[w])):
                return False
            if self.tb.get(v, y) != shift_set(self.ta.get(w, x), _sub(shifts[w], t)):
                return False
        return True

    def run(self) -> bool:
        candidates = {
            x: [y for y in self.b.labels if self.signature("b", y) == self.signature("a", x)]
            for x in self.a.labels}
        if any(not c for c in candidates.values()):
            return False
        order = self.search_order(candidates)
        sigma: Dict[Hashable, Hashable] = {}
        shifts: Dict[Hashable, Exponent] = {}
        used = set()

        def assign(index: int) -> bool:
            if index == len(order):
                return True
            x = order[index]
            for y in candidates[x]:
                if y in used:
                    continue
                t = self.translation(x, y, sigma, shifts)
                if t is None or not self.consistent(x, y, t, sigma, shifts):
                    continue
                sigma[x], shifts[x] = y, t
                used.add(y)
                if assign(index + 1):
                    return True
                del sigma[x], shifts[x]
                used.discard(y)
            return False

        return assign(0)


def discrete_equivalent(a: DiscreteInfo, b: DiscreteInfo) -> bool:
    """
    Decide whether two discrete informations agree up to a degree-preserving relabeling
    composed with per-index translations (E_ij -> E_ij + t_i - t_j).

    Raises:
        ValueError: if the index set is larger than the search cap.
    """
    cap = DEFAULTS["max_equivalence_labels"]
    if len(a.labels) > cap or len(b.labels) > cap:
        raise ValueError(f"discrete_equivalent: index sets are capped at {cap} labels")
    if a.n != b.n or len(a.labels) != len(b.labels):
        return False
    if Counter(a.degrees.values()) != Counter(b.degrees.values()):
        return False
    if len(a.table.entries) != len(b.table.entries):
        return False
    return _Matcher(a, b).run()
