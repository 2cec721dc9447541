from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Hashable, List, Optional, Tuple

from utils.config import get_thread_count

from .table import Exponent, ExponentTable, add_exponents


@dataclass(frozen=True)
class Chain:
    """
    A sequence of indices i_0..i_k with steps m_l in E_{i_l i_(l-1)}.
    """
    indices: Tuple[Hashable, ...]
    steps: Tuple[Exponent, ...]

    def __post_init__(self):
        if len(self.indices) != len(self.steps) + 1:
            raise ValueError("Chain: need exactly one step fewer than indices")

    @property
    def length(self) -> int:
        return len(self.steps)

    def offsets(self, n: int) -> List[Exponent]:
        """Cumulative translations 0, m_1, m_1 + m_2, ... attached to each vertex."""
        running = (0,) * n
        result = [running]
        for step in self.steps:
            running = add_exponents(running, step)
            result.append(running)
        return result

    def is_valid(self, table: ExponentTable) -> bool:
        return all(step in table.get(i, j) for j, i, step
                   in zip(self.indices, self.indices[1:], self.steps))


def _extend(table: ExponentTable, prefix: Chain, remaining: int, out: List[Chain]):
    if remaining == 0:
        out.append(prefix)
        return
    last = prefix.indices[-1]
    for nxt in table.successors(last):
        for step in sorted(table.get(nxt, last)):
            _extend(table, Chain(prefix.indices + (nxt,), prefix.steps + (step,)),
                    remaining - 1, out)


def chains_from(table: ExponentTable, start, k: int) -> List[Chain]:
    out: List[Chain] = []
    _extend(table, Chain((start,), ()), k, out)
    return out


def chains(table: ExponentTable, k: int, threads: Optional[int] = None) -> List[Chain]:
    """
    All chains of length k, ordered by start label, then successor label order, then
    lexicographic steps.

    Parameters:
    - table: ExponentTable.
    - k: chain length (number of steps), k >= 0.
    - threads: worker count for splitting over the first index; defaults to the
      COAMOEBA_THREADS setting.

    Returns:
    - list of Chain; k = 0 gives one chain per index.
    """
    if k < 0:
        raise ValueError("chains: length must be non-negative")
    threads = threads or get_thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda start: chains_from(table, start, k), table.labels))
    else:
        parts = [chains_from(table, start, k) for start in table.labels]
    return [chain for part in parts for chain in part]


def max_chain_length(table: ExponentTable) -> int:
    """Length of the longest chain; degrees rise along chains so this is finite."""
    degrees = table.degrees
    best = {label: 0 for label in table.labels}
    for j in sorted(table.labels, key=lambda label: -degrees[label]):
        for i in table.successors(j):
            best[j] = max(best[j], best[i] + 1)
    return max(best.values()) if best else 0
