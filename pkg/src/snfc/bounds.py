"""Upper and lower bounds on the secure computing rate, exactness detection, and
an exhaustive brute-force oracle for cross-checking the graph-theoretic path.

The upper bound minimizes, over wiretap sets W of size at most r, the capacity
of the origin-side minimum cut separating the sink from the sources feeding W
once W is deleted.  Restricting the sweep to primary wiretap sets (sets equal to
their own origin-side minimum cut) loses nothing and keeps the enumeration small.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .cuts import (
    CutReport,
    c_min,
    c_min_bar,
    c_min_bar_witness,
    is_primary,
    min_cut,
    residual,
    source_min_cuts,
)
from .errors import TooLarge
from .network import Network, reach_sets

ORACLE_EDGE_LIMIT = 16
CUT_SCAN_LIMIT = 200_000


class ExactCapacity(NamedTuple):
    value: int
    reason: str


@dataclass(frozen=True)
class BoundReport:
    r: int
    upper: int
    lower: int
    c_min: int
    c_min_bar: int
    witness_W: tuple[str, ...]
    witness_cut: tuple[str, ...]
    exact: ExactCapacity | None

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "upper": self.upper,
            "lower": self.lower,
            "c_min": self.c_min,
            "c_min_bar": self.c_min_bar,
            "witness_W": list(self.witness_W),
            "witness_cut": list(self.witness_cut),
            "exact": None if self.exact is None else {"value": self.exact.value, "reason": self.exact.reason},
        }


# -- the residual cut statistic ---------------------------------------------------

def _omega_report(net: Network, wiretap: tuple[str, ...]) -> CutReport:
    if not wiretap:
        # no edges removed: the smallest cut over all sources
        best = None
        for s in net.sources:
            report = min_cut(net, [s], net.sink)
            if best is None or report.capacity < best.capacity:
                best = report
        assert best is not None
        return best
    feeding = reach_sets(net, wiretap).feeding
    return min_cut(residual(net, wiretap), sorted(feeding), net.sink)


def omega(net: Network, wiretap: Iterable[str]) -> int:
    """Capacity left for the sources feeding the wiretap set once it is removed."""
    return _omega_report(net, tuple(net.check_edges(wiretap))).capacity


# -- wiretap-set enumeration --------------------------------------------------------

@lru_cache(maxsize=None)
def _primary_sets_of_size(net: Network, k: int) -> tuple[tuple[str, ...], ...]:
    if k == 0:
        return ((),)
    ids = sorted(net.edge_by_id)
    return tuple(c for c in itertools.combinations(ids, k) if is_primary(net, c))


def primary_wiretap_sets(net: Network, r: int, exact_size: bool = False) -> list[tuple[str, ...]]:
    """All primary wiretap sets of size <= r (or exactly r), lexicographically sorted.

    The empty set is the size-0 wiretap set and is included unless a positive
    exact size is requested.
    """
    sizes = [r] if exact_size else range(r + 1)
    out: list[tuple[str, ...]] = []
    for k in sizes:
        out.extend(_primary_sets_of_size(net, k))
    out.sort()
    return out


# -- bounds ---------------------------------------------------------------------------

def lower_bound(net: Network, r: int) -> int:
    return max(c_min(net) - r, 0)


def zero_capacity(net: Network, r: int) -> bool:
    return r >= c_min_bar(net)


def exact_capacity(net: Network, r: int) -> ExactCapacity | None:
    """The exact secure computing rate when one of the closed-form cases applies."""
    cm = c_min(net)
    if r == 0:
        return ExactCapacity(cm, "r_zero")
    cb = c_min_bar(net)
    if r >= cb:
        return ExactCapacity(0, "zero_capacity")
    if cm == cb:
        # r < cb = cm here, so the rate is positive
        return ExactCapacity(cm - r, "cmin_equals_cminbar")
    if r <= cm and _cut_structure_holds(net, r, cm):
        return ExactCapacity(cm - r, "cut_structure")
    return None


def _cut_structure_holds(net: Network, r: int, cm: int) -> bool:
    """Look for a smallest-capacity source whose minimum cut has r edges that no
    outside source can reach."""
    per_source = source_min_cuts(net)
    tight = {s for s, v in per_source.items() if v == cm}
    if not tight:
        return False
    ids = sorted(net.edge_by_id)
    total = 1
    for i in range(cm):
        total = total * (len(ids) - i) // (i + 1)
    if total > CUT_SCAN_LIMIT:
        return False  # give up conservatively; the caller falls back to bounds only
    for combo in itertools.combinations(ids, cm):
        rs = reach_sets(net, combo)
        if not (rs.separated & tight):
            continue
        outside = [s for s in net.sources if s not in rs.separated]
        poisoned = net.edges_reachable_from(outside) if outside else set()
        if sum(1 for eid in combo if eid not in poisoned) >= r:
            return True
    return False


def upper_bound(net: Network, r: int) -> BoundReport:
    """Best provable ceiling on the secure computing rate at security level r."""
    cm = c_min(net)
    cb = c_min_bar(net)
    if r >= cb:
        witness = c_min_bar_witness(net)
        upper = 0
        witness_cut: tuple[str, ...] = ()
    else:
        upper = None
        witness = ()
        witness_cut = ()
        for wset in primary_wiretap_sets(net, r):
            report = _omega_report(net, wset)
            if upper is None or report.capacity < upper:
                upper = report.capacity
                witness = wset
                witness_cut = report.cut_edges
        assert upper is not None
    assert max(cm - r, 0) <= upper <= cm, "closed-form bracket violated"
    exact = exact_capacity(net, r)
    if exact is not None:
        assert max(cm - r, 0) <= exact.value <= upper
    return BoundReport(
        r=r,
        upper=upper,
        lower=lower_bound(net, r),
        c_min=cm,
        c_min_bar=cb,
        witness_W=witness,
        witness_cut=witness_cut,
        exact=exact,
    )


# -- brute-force oracle -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _oracle_cut_stats(net: Network) -> tuple[tuple[int, int], ...]:
    """For every cut set C: (|C|, number of edges of C fed only by separated sources)."""
    ids = list(net.order)
    n = len(ids)
    index = {eid: i for i, eid in enumerate(ids)}
    out_arcs: dict[str, list[tuple[int, str]]] = {node: [] for node in net.nodes}
    for eid in ids:
        e = net.edge_by_id[eid]
        out_arcs[e.tail].append((index[eid], e.head))
    # per-edge bitmask of sources that can reach it
    feeders = [0] * n
    for si, s in enumerate(net.sources):
        reach = net.nodes_reachable_from([s])
        for eid in ids:
            if net.edge_by_id[eid].tail in reach:
                feeders[index[eid]] |= 1 << si
    stats = []
    for mask in range(1, 1 << n):
        separated = 0
        for si, s in enumerate(net.sources):
            stack = [s]
            seen = {s}
            alive = False
            while stack:
                u = stack.pop()
                if u == net.sink:
                    alive = True
                    break
                for ei, head in out_arcs[u]:
                    if not mask >> ei & 1 and head not in seen:
                        seen.add(head)
                        stack.append(head)
            if not alive:
                separated |= 1 << si
        if not separated:
            continue
        size = mask.bit_count()
        avail = sum(
            1
            for ei in range(n)
            if mask >> ei & 1 and feeders[ei] | separated == separated
        )
        stats.append((size, avail))
    return tuple(stats)


def upper_bound_oracle(net: Network, r: int) -> int:
    """Direct minimization over all (wiretap set, cut set) pairs; exponential in |E|."""
    if len(net.edges) > ORACLE_EDGE_LIMIT:
        raise TooLarge(f"oracle limited to {ORACLE_EDGE_LIMIT} edges")
    return min(size - min(r, avail) for size, avail in _oracle_cut_stats(net))
