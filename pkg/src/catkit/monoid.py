"""
Breadth-first closure of finitely generated monoids.

The engine is generic: elements are any hashable encodings (boolean
matrices, permutations, transformation tuples, ...) with an associative
product supplied by the caller.  Closure proceeds level by level with
generators applied on the right, so elements are numbered deterministically
by (word length, generator sequence) in lexicographic order and every
element carries a shortest witness word.

The right Cayley table is stored explicitly; arbitrary products are
recovered by walking witness words through it, so no full product table is
materialized unless asked for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence


class MonoidCapExceeded(RuntimeError):
    """Raised when closure discovers more elements than the configured cap."""


@dataclass
class MonoidTable:
    elements: list
    index: dict
    gens: tuple[int, ...]
    right: list[list[int]]
    words: list[tuple[int, ...]]
    _left: list[list[int]] | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def product(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j], via the witness word of j."""
        cur = i
        for g in self.words[j]:
            cur = self.right[cur][g]
        return cur

    def left_table(self) -> list[list[int]]:
        """left[i][g] = index of generators[g] * elements[i]."""
        if self._left is None:
            self._left = [[self.product(self.gens[g], i)
                           for g in range(len(self.gens))]
                          for i in range(len(self.elements))]
        return self._left

    def product_table(self) -> list[list[int]]:
        return [[self.product(i, j) for j in range(len(self))]
                for i in range(len(self))]

    def two_sided_ideal(self, a: int) -> frozenset[int]:
        """Indices of all elements x*a*y."""
        left = self.left_table()
        seen = {a}
        frontier = [a]
        while frontier:
            nxt = []
            for x in frontier:
                for g in range(len(self.gens)):
                    for y in (self.right[x][g], left[x][g]):
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def is_j_trivial(self) -> bool:
        """Distinct elements generate distinct two-sided principal ideals."""
        ideals = {self.two_sided_ideal(i) for i in range(len(self))}
        return len(ideals) == len(self)

    def idempotent_indices(self) -> list[int]:
        return [i for i in range(len(self)) if self.product(i, i) == i]

    def to_json_dict(self, element_repr: Callable = str,
                     max_product_table: int = 2000) -> dict:
        data = {
            "size": len(self),
            "generators": list(self.gens),
            "elements": [element_repr(x) for x in self.elements],
            "words": [list(word) for word in self.words],
            "right_cayley": [list(row) for row in self.right],
            "product_table": None,
        }
        if len(self) <= max_product_table:
            data["product_table"] = self.product_table()
        return data

    def right_cayley_dot(self, element_repr: Callable = None,
                         gen_labels: Sequence[str] | None = None) -> str:
        """The right Cayley graph in DOT format with generator-labeled edges."""
        if gen_labels is None:
            gen_labels = [f"g{g + 1}" for g in range(len(self.gens))]
        lines = ["digraph cayley {"]
        for i in range(len(self)):
            label = str(i) if element_repr is None else element_repr(self.elements[i])
            lines.append(f'  n{i} [label="{label}"];')
        for i, row in enumerate(self.right):
            for g, j in enumerate(row):
                lines.append(f'  n{i} -> n{j} [label="{gen_labels[g]}"];')
        lines.append("}")
        return "\n".join(lines)


def generate_monoid(generators: Sequence[Hashable], mul: Callable,
                    identity: Hashable, cap: int | None = None) -> MonoidTable:
    """Close a generating set under an associative product.

    The identity is adjoined as element 0.  Frontier expansion is
    sequential here; any parallel implementation must preserve the
    deterministic (word length, word) numbering this one produces.
    """
    elements = [identity]
    index = {identity: 0}
    words: list[tuple[int, ...]] = [()]
    right: list[list[int]] = []
    pos = 0
    while pos < len(elements):
        x = elements[pos]
        row = []
        for g, gen in enumerate(generators):
            y = mul(x, gen)
            j = index.get(y)
            if j is None:
                j = len(elements)
                if cap is not None and j >= cap:
                    raise MonoidCapExceeded(
                        f"monoid closure exceeded cap of {cap} elements")
                index[y] = j
                elements.append(y)
                words.append(words[pos] + (g,))
            row.append(j)
        right.append(row)
        pos += 1
    gens = tuple(index[g] for g in generators) if generators else ()
    return MonoidTable(elements=elements, index=index, gens=gens,
                       right=right, words=words)


def generators_match(a: MonoidTable, b: MonoidTable) -> bool:
    """True iff mapping the i-th generator of a to the i-th of b extends to
    an isomorphism.

    Since every element of a is reached by its witness word, it is enough
    to check that the generator-matched word map is well defined on the
    right Cayley table and bijective.
    """
    if len(a) != len(b) or len(a.gens) != len(b.gens):
        return False
    phi = [0] * len(a)
    for i in range(1, len(a)):
        cur = 0
        for g in a.words[i]:
            cur = b.right[cur][g]
        phi[i] = cur
    if len(set(phi)) != len(a):
        return False
    for i in range(len(a)):
        for g in range(len(a.gens)):
            if phi[a.right[i][g]] != b.right[phi[i]][g]:
                return False
    return True
