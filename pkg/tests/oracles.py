"""Independent oracles used to pin derived values.

Everything in this file recomputes results from raw tables with naive
fixpoint or brute-force loops and imports nothing from catmod, so a bug
in the package cannot hide behind shared code.
"""

from __future__ import annotations


def naive_special_closure(
    elements: list[str],
    add: dict[tuple[str, str], str],
    zero: str,
    neg: dict[str, str],
) -> frozenset[tuple[str, str]]:
    """Least reflexive, symmetric, transitive, sum-closed pair set
    containing every group-axiom instance, by whole-set iteration."""
    pairs: set[tuple[str, str]] = {(x, x) for x in elements}
    for a in elements:
        pairs.add((add[a, zero], a))
        pairs.add((add[zero, a], a))
        pairs.add((add[a, neg[a]], zero))
        pairs.add((add[neg[a], a], zero))
        for b in elements:
            for c in elements:
                pairs.add((add[a, add[b, c]], add[add[a, b], c]))
    while True:
        grown = set(pairs)
        grown.update((b, a) for a, b in pairs)
        for a, b in pairs:
            for c, d in pairs:
                if b == c:
                    grown.add((a, d))
                grown.add((add[a, c], add[b, d]))
        if grown == pairs:
            return frozenset(pairs)
        pairs = grown


def naive_special_iso_closure(
    arrows: list[str],
    dom: dict[str, str],
    cod: dict[str, str],
    ident: dict[str, str],
    comp: dict[tuple[str, str], str],
    arr_add: dict[tuple[str, str], str],
    seeds: list[str],
) -> frozenset[str]:
    """Least arrow set containing identities and the given coherence
    components, closed under inverse, composition and addition."""

    def inverse_of(f: str) -> str | None:
        for g in arrows:
            if comp.get((g, f)) == ident[dom[f]] and comp.get((f, g)) == ident[cod[f]]:
                return g
        return None

    current: set[str] = set(ident.values()) | set(seeds)
    while True:
        grown = set(current)
        for f in current:
            inv = inverse_of(f)
            if inv is not None:
                grown.add(inv)
        for f in current:
            for g in current:
                if (f, g) in comp:
                    grown.add(comp[f, g])
                grown.add(arr_add[f, g])
        if grown == current:
            return frozenset(current)
        current = grown


def is_3cocycle(n: int, omega: dict[tuple[int, int, int], int]) -> bool:
    """Brute-force coboundary check for a 3-table on Z_n with Z_n values."""
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for t in range(n):
                    total = (
                        omega[y, z, t]
                        - omega[(x + y) % n, z, t]
                        + omega[x, (y + z) % n, t]
                        - omega[x, y, (z + t) % n]
                        + omega[x, y, z]
                    ) % n
                    if total != 0:
                        return False
    return True


def blocks_from_pairs(elements: list[str], pairs) -> dict[str, frozenset[str]]:
    """Connected components of a symmetric pair set, as element -> block."""
    neighbours: dict[str, set[str]] = {x: {x} for x in elements}
    for a, b in pairs:
        neighbours[a].add(b)
        neighbours[b].add(a)
    out: dict[str, frozenset[str]] = {}
    for start in elements:
        if start in out:
            continue
        seen = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in neighbours[x]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        block = frozenset(seen)
        for x in seen:
            out[x] = block
    return out


class RepOracle:
    """Recomputes rebuilt-arrow operations from arbitrary class
    representatives, reducing only at the very end.

    An operation is well defined exactly when every representative
    choice lands in one class; ``_reduce`` asserts that before
    returning the least member.
    """

    def __init__(
        self,
        g_elements: list[str],
        g_add: dict[tuple[str, str], str],
        g_neg: dict[str, str],
        h_add: dict[tuple[str, str], str],
        h_neg: dict[str, str],
        dot: dict[tuple[str, str], str],
        weak_pairs,
    ) -> None:
        self.g_add = g_add
        self.g_neg = g_neg
        self.h_add = h_add
        self.h_neg = h_neg
        self.dot = dot
        self.block = blocks_from_pairs(g_elements, weak_pairs)

    def _reduce(self, candidates: set[str]) -> str:
        blocks = {self.block[c] for c in candidates}
        assert len(blocks) == 1, f"representatives split across classes: {sorted(candidates)}"
        return min(next(iter(blocks)))

    def compose(self, g2: tuple[str, str, str], g1: tuple[str, str, str]) -> tuple[str, str, str]:
        assert g1[1] == g2[0]
        mids = {
            self.g_add[m2, m1]
            for m2 in self.block[g2[2]]
            for m1 in self.block[g1[2]]
        }
        return g1[0], g2[1], self._reduce(mids)

    def add(self, g1: tuple[str, str, str], g2: tuple[str, str, str]) -> tuple[str, str, str]:
        mids = {
            self.g_add[m1, self.dot[g1[0], m2]]
            for m1 in self.block[g1[2]]
            for m2 in self.block[g2[2]]
        }
        return (
            self.h_add[g1[0], g2[0]],
            self.h_add[g1[1], g2[1]],
            self._reduce(mids),
        )

    def inverse(self, g: tuple[str, str, str]) -> tuple[str, str, str]:
        mids = {self.g_neg[m] for m in self.block[g[2]]}
        return g[1], g[0], self._reduce(mids)

    def opposite(self, g: tuple[str, str, str]) -> tuple[str, str, str]:
        nd = self.h_neg[g[0]]
        mids = {self.dot[nd, self.g_neg[m]] for m in self.block[g[2]]}
        return nd, self.h_neg[g[1]], self._reduce(mids)
