"""Brute-force cover oracle from branch tuples.

A branch tuple is a combinatorial witness that a cover exists: group
elements (a_1, b_1, .., a_g, b_g; g_1, .., g_b) satisfying the surface
relation prod [a_i, b_i] * prod g_i = e and generating the whole group.
The genus of the cover, and of every intermediate quotient, is then pure
orbit counting on coset spaces - no character theory involved - which
makes it an independent check of the Riemann-Hurwitz pipeline.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import SamplingExhausted
from .permgroup import PermGroup
from .rhprym import CoverSpec, RamificationSpec, genus_quotient


@dataclass(frozen=True)
class BranchTuple:
    """Handles and branch elements realizing a cover of a genus-g base."""

    group: PermGroup
    base_genus: int
    handles: tuple[tuple[int, int], ...]
    branch_elements: tuple[int, ...]

    def relation_product(self) -> int:
        G = self.group
        acc = G.identity_index
        for a, b in self.handles:
            acc = G.mul(acc, G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))))
        for g in self.branch_elements:
            acc = G.mul(acc, g)
        return acc

    def is_valid(self) -> bool:
        G = self.group
        if self.relation_product() != G.identity_index:
            return False
        if any(g == G.identity_index for g in self.branch_elements):
            return False
        seeds = [x for ab in self.handles for x in ab] + list(self.branch_elements)
        return len(G.subgroup_closure(seeds)) == G.order

    def to_json(self) -> dict:
        G = self.group
        return {
            "base_genus": self.base_genus,
            "handles": [
                [G.elements[a].cycle_str(), G.elements[b].cycle_str()]
                for a, b in self.handles
            ],
            "branch_elements": [G.elements[g].cycle_str() for g in self.branch_elements],
        }

    @classmethod
    def from_json(cls, G: PermGroup, doc: dict) -> "BranchTuple":
        from .permgroup import Permutation

        def idx(text):
            return G.index_of(Permutation.from_cycles(text, G.degree))

        return cls(
            group=G,
            base_genus=int(doc["base_genus"]),
            handles=tuple((idx(a), idx(b)) for a, b in doc["handles"]),
            branch_elements=tuple(idx(g) for g in doc["branch_elements"]),
        )


def sample_tuple(
    G: PermGroup,
    base_genus: int,
    branch_count: int,
    rng: random.Random,
    attempts: int = 500,
) -> BranchTuple:
    """Rejection-sample a valid branch tuple.

    Handles and all but the last branch element are uniform; the last
    branch element is forced by the relation and the draw is rejected if
    it is the identity or the tuple fails to generate the group.
    """
    order = G.order
    for _ in range(attempts):
        handles = tuple(
            (rng.randrange(order), rng.randrange(order)) for _ in range(base_genus)
        )
        acc = G.identity_index
        for a, b in handles:
            acc = G.mul(acc, G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))))
        branch: list[int] = []
        ok = True
        for _ in range(branch_count - 1):
            if order == 1:
                ok = False
                break
            g = rng.randrange(1, order)  # non-identity
            branch.append(g)
            acc = G.mul(acc, g)
        if not ok:
            break
        if branch_count:
            last = G.inv(acc)
            if last == G.identity_index:
                continue
            branch.append(last)
        elif acc != G.identity_index:
            continue
        t = BranchTuple(G, base_genus, handles, tuple(branch))
        if t.is_valid():
            return t
    raise SamplingExhausted(
        f"no valid tuple for g={base_genus}, b={branch_count} in {attempts} attempts"
    )


def oracle_genus(t: BranchTuple, subgroup: Iterable[int]) -> int:
    """Genus of X/H by counting orbits of each local monodromy on G/H.

    Over a branch point with monodromy g, the fiber of X/H -> Y has one
    point per cycle of g on the cosets, ramified with index the cycle
    length; Riemann-Hurwitz then gives the genus directly.
    """
    G = t.group
    act = G.coset_action(frozenset(subgroup))
    n = len(act.cosets)
    ram = sum(n - act.cycle_count(g) for g in t.branch_elements)
    g_h = 1 + Fraction(n * (t.base_genus - 1)) + Fraction(ram, 2)
    assert g_h.denominator == 1 and g_h >= 0, "tuple does not define a surface"
    return int(g_h)


def spec_from_tuple(t: BranchTuple) -> CoverSpec:
    """Tally branch elements into per-cyclic-class counts."""
    G = t.group
    counts: dict[int, int] = {}
    for g in t.branch_elements:
        k = G.cyclic_class_of_element(g)
        counts[k] = counts.get(k, 0) + 1
    return CoverSpec(G, t.base_genus, RamificationSpec(counts))


@dataclass(frozen=True)
class TupleVerification:
    """Per-quotient comparison of oracle genus and formula genus."""

    oracle: tuple[int, ...]
    formula: tuple[int, ...]
    mismatches: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_tuple(t: BranchTuple) -> TupleVerification:
    """Compare the orbit-counting genus with the character-free formula
    genus for X itself and every quotient X/H_i; report any mismatches."""
    G = t.group
    spec = spec_from_tuple(t)
    cyclic = G.cyclic_subgroup_classes()
    oracle = []
    formula = []
    for i, K in enumerate(cyclic):
        oracle.append(oracle_genus(t, K.subgroup_elements))
        formula.append(genus_quotient(spec, i))
    mism = tuple(i for i, (a, b) in enumerate(zip(oracle, formula)) if a != b)
    return TupleVerification(tuple(oracle), tuple(formula), mism)
