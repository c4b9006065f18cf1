"""Permutation groups via a base and strong generating set.

Permutations are tuples ``p`` acting on ``range(n)`` by ``i -> p[i]``;
products compose left to right: ``mul(p, q)`` applies ``p`` first.
"""
from typing import Dict, List, Optional, Sequence, Tuple

Perm = Tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def orbit(point: int, gens: Sequence[Perm]) -> List[int]:
    seen = {point}
    out = [point]
    for x in out:
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


class StabilizerChain:
    """Deterministic Schreier-Sims stabilizer chain.

    ``base[i]`` is the i-th base point; ``transversals[i]`` maps each point
    of the i-th basic orbit to a coset representative ``u`` in the i-th
    stabilizer with ``u[base[i]] == point``.  Base points are chosen greedily
    as the point with the largest orbit under the current generators, ties
    broken by smallest index.
    """

    def __init__(self, gens: Sequence[Perm], degree: Optional[int] = None):
        gens = [tuple(g) for g in gens]
        if degree is None:
            if not gens:
                raise ValueError("degree required for the trivial group")
            degree = len(gens[0])
        self.degree = degree
        self.base: List[int] = []
        self.gens_at: List[List[Perm]] = []
        self.transversals: List[Dict[int, Perm]] = []
        gens = [g for g in gens if not is_identity(g)]
        if gens:
            self._extend_level(0, gens)
            self._schreier_sims()

    def _pick_base_point(self, gens):
        best, best_len = None, 0
        moved = sorted({i for g in gens for i in range(self.degree) if g[i] != i})
        seen = set()
        for p in moved:
            if p in seen:
                continue
            orb = orbit(p, gens)
            seen.update(orb)
            if len(orb) > best_len:
                best, best_len = min(orb), len(orb)
        return best

    def _extend_level(self, level, gens):
        if level == len(self.base):
            self.base.append(self._pick_base_point(gens))
            self.gens_at.append([])
            self.transversals.append({})
        self.gens_at[level].extend(gens)
        self._rebuild_transversal(level)

    def _rebuild_transversal(self, level):
        b = self.base[level]
        gens = self.gens_at[level]
        trans = {b: identity(self.degree)}
        queue = [b]
        for x in queue:
            for g in gens:
                y = g[x]
                if y not in trans:
                    trans[y] = mul(trans[x], g)
                    queue.append(y)
        self.transversals[level] = trans

    def sift(self, g: Perm, start: int = 0):
        """Strip ``g`` through the chain; returns ``(residue, level)``."""
        for i in range(start, len(self.base)):
            b = g[self.base[i]]
            u = self.transversals[i].get(b)
            if u is None:
                return g, i
            g = mul(g, inverse(u))
        return g, len(self.base)

    def _schreier_sims(self):
        level = len(self.base) - 1
        while level >= 0:
            added = self._check_level(level)
            if added is None:
                level -= 1
            else:
                level = added

    def _check_level(self, level):
        # Schreier generators u_x * s * u_{x^s}^{-1} must sift through level+1.
        trans = self.transversals[level]
        for x, u in list(trans.items()):
            for s in list(self.gens_at[level]):
                us = mul(u, s)
                h = mul(us, inverse(trans[us[self.base[level]]]))
                if is_identity(h):
                    continue
                res, j = self.sift(h, level + 1)
                if is_identity(res) and j == len(self.base):
                    continue
                if j == len(self.base):
                    self.base.append(self._pick_base_point([res]))
                    self.gens_at.append([])
                    self.transversals.append({})
                for lvl in range(level + 1, j + 1):
                    self.gens_at[lvl].append(res)
                    self._rebuild_transversal(lvl)
                return j
        return None

    def basic_orbit_sizes(self) -> List[int]:
        return [len(t) for t in self.transversals]

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def contains(self, g: Perm) -> bool:
        res, j = self.sift(tuple(g))
        return j == len(self.base) and is_identity(res)
