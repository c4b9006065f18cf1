"""Reflections and the Weyl group of ``E_{2,3,r}`` acting on ``Pic``.

Isometries are integer matrices acting on column coordinate vectors, so
the i-th column of a matrix is the image of ``e_i``.
"""
import random
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

import numpy as np

from . import intlinalg, permgroup
from .piclattice import DivisorClass, PicardLattice, enumerate_roots, pair


class InfiniteGroupError(ValueError):
    """Raised when a finite-group computation is requested for ``r >= 9``."""


@dataclass(frozen=True)
class Isometry:
    matrix: Tuple[Tuple[int, ...], ...]
    gram: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", M)
        Mt = intlinalg.transpose(M)
        if intlinalg.matmul(intlinalg.matmul(Mt, self.gram), M) != [list(r) for r in self.gram]:
            raise ValueError("matrix does not preserve the intersection form")

    @property
    def size(self) -> int:
        return len(self.matrix)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(intlinalg.matmul(self.matrix, other.matrix), self.gram)

    def __call__(self, x: DivisorClass) -> DivisorClass:
        return DivisorClass(intlinalg.matvec(self.matrix, x.coords))

    def inverse(self) -> "Isometry":
        # M^{-1} = G^{-1} M^T G, and G = G^{-1} for diag(+-1)
        G = self.gram
        return Isometry(intlinalg.matmul(intlinalg.matmul(G, intlinalg.transpose(self.matrix)), G), G)

    def power(self, k: int) -> "Isometry":
        if k < 0:
            return self.inverse().power(-k)
        result = identity_isometry_like(self)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(self.matrix[i][j] == int(i == j) for i in range(self.size) for j in range(self.size))


def identity_isometry(L: PicardLattice) -> Isometry:
    return Isometry(intlinalg.identity(L.rank), L.gram)


def identity_isometry_like(M: Isometry) -> Isometry:
    return Isometry(intlinalg.identity(M.size), M.gram)


@dataclass(frozen=True)
class DynkinDiagram:
    nodes: Tuple[int, ...]
    edges: FrozenSet[Tuple[int, int]]

    def neighbours(self, i: int) -> List[int]:
        return sorted({b if a == i else a for a, b in self.edges if i in (a, b)})


def reflection(L: PicardLattice, alpha: DivisorClass) -> Isometry:
    """Reflection ``x -> x + (x.alpha) alpha`` in a ``(-2)``-class."""
    if pair(L, alpha, alpha) != -2:
        raise ValueError(f"{alpha} is not a (-2)-class")
    n = L.rank
    g_alpha = [L.gram[j][j] * alpha[j] for j in range(n)]
    M = [[int(i == j) + alpha[i] * g_alpha[j] for j in range(n)] for i in range(n)]
    return Isometry(M, L.gram)


def simple_reflections(L: PicardLattice) -> List[Isometry]:
    return [reflection(L, a) for a in L.simple_roots]


def coxeter_word(L: PicardLattice) -> List[int]:
    return list(range(len(L.simple_roots)))


def word_to_isometry(L: PicardLattice, word: Sequence[int]) -> Isometry:
    """Product ``s_{w[0]} s_{w[1]} ...`` of simple reflections."""
    k = len(L.simple_roots)
    for i in word:
        if not 0 <= i < k:
            raise IndexError(f"simple root index {i} out of range 0..{k - 1}")
    M = np.array(intlinalg.identity(L.rank), dtype=object)
    refl = [np.array(s.matrix, dtype=object) for s in simple_reflections(L)]
    for i in word:
        M = M.dot(refl[i])
    return Isometry(M.tolist(), L.gram)


def random_word(L: PicardLattice, length: int, rng: random.Random) -> List[int]:
    return [rng.randrange(len(L.simple_roots)) for _ in range(length)]


def root_permutations(L: PicardLattice, roots: Sequence[DivisorClass]) -> List[Tuple[int, ...]]:
    """Permutation of ``roots`` induced by each simple reflection."""
    index = {r.coords: i for i, r in enumerate(roots)}
    perms = []
    for s in simple_reflections(L):
        p = []
        for r in roots:
            img = s(r).coords
            if img not in index:
                raise RuntimeError(f"reflection maps root {r} outside the root set")
            p.append(index[img])
        if sorted(p) != list(range(len(roots))):
            raise RuntimeError("reflection does not permute the root set")
        perms.append(tuple(p))
    return perms


def weyl_chain(L: PicardLattice) -> permgroup.StabilizerChain:
    """Stabilizer chain of ``W_X`` acting faithfully on its finite root set."""
    if L.r < 3:
        raise ValueError("Weyl group of E_{2,3,r} needs r >= 3")
    if not is_finite_weyl(L.r):
        raise InfiniteGroupError(f"W_X is infinite for r = {L.r}")
    roots = enumerate_roots(L)
    return permgroup.StabilizerChain(root_permutations(L, roots.classes), len(roots))


def weyl_order(L: PicardLattice) -> int:
    return weyl_chain(L).order()


def is_finite_weyl(r: int) -> bool:
    if r < 3:
        raise ValueError("r >= 3 expected")
    return r <= 8


def bfs_group_order(L: PicardLattice, limit: int = 100000) -> int:
    """Order of ``W_X`` by breadth-first enumeration of its matrices.

    Independent of the stabilizer chain; only practical for small groups.
    Raises RuntimeError once more than ``limit`` elements are seen.
    """
    gens = [np.array(s.matrix, dtype=np.int64) for s in simple_reflections(L)]
    start = np.eye(L.rank, dtype=np.int64)
    seen = {start.tobytes()}
    frontier = [start]
    while frontier:
        nxt = []
        for M in frontier:
            for g in gens:
                P = M @ g
                key = P.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(P)
                    if len(seen) > limit:
                        raise RuntimeError(f"more than {limit} elements")
        frontier = nxt
    return len(seen)


def dynkin_diagram(L: PicardLattice) -> DynkinDiagram:
    if L.r < 3:
        raise ValueError("r >= 3 expected")
    roots = L.simple_roots
    edges = set()
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            p = pair(L, roots[i], roots[j])
            if p not in (0, 1):
                raise RuntimeError(f"simple roots {i},{j} have product {p}; not simply laced")
            if p == 1:
                edges.add((i, j))
    return DynkinDiagram(tuple(range(len(roots))), frozenset(edges))


def diagram_automorphisms(D: DynkinDiagram) -> List[Tuple[int, ...]]:
    """All edge-preserving node permutations, by backtracking.

    Permutations are returned as tuples indexed by position in ``D.nodes``.
    """
    nodes = list(D.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    adj = [set() for _ in range(n)]
    for a, b in D.edges:
        adj[pos[a]].add(pos[b])
        adj[pos[b]].add(pos[a])
    deg = [len(a) for a in adj]
    out = []
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            out.append(tuple(image))
            return
        for c in range(n):
            if used[c] or deg[c] != deg[i]:
                continue
            if any((image[j] in adj[c]) != (j in adj[i]) for j in range(i)):
                continue
            image[i] = c
            used[c] = True
            extend(i + 1)
            used[c] = False
        image[i] = -1

    extend(0)
    return out
