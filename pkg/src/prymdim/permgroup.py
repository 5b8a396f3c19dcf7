"""Fully enumerated permutation groups.

Every group is realized concretely: elements are permutations of
``{0..n-1}``, the whole group is closed breadth-first from its
generators, and an element is identified by its index into the table of
image tuples sorted lexicographically (so index 0 is the identity).
Conjugacy classes, cyclic-subgroup classes, coset actions and double
cosets are all computed by direct counting, which keeps every
downstream quantity exact and reproducible across runs.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    CapExceeded,
    DegreeMismatch,
    NotASubgroup,
    NotRationalGroup,
    ParseError,
)

DEFAULT_CAP = 200_000

_CYCLES_RE = re.compile(r"\s*(?:\([^()]*\)\s*)+")
_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..n-1}, stored as its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ParseError(f"not a bijection on 0..{n - 1}: {self.images!r}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(int(x) for x in images))

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation like ``(0 1)(2 3)``; ``()`` is the identity."""
        s = text.strip()
        if s in ("", "()"):
            return cls.identity(degree if degree else 1)
        if not _CYCLES_RE.fullmatch(s):
            raise ParseError(f"bad cycle notation: {text!r}")
        mapping: dict[int, int] = {}
        top = -1
        for body in _CYCLE_RE.findall(s):
            try:
                pts = [int(tok) for tok in body.replace(",", " ").split()]
            except ValueError as exc:
                raise ParseError(f"bad point in {text!r}") from exc
            if not pts:
                continue
            if any(p < 0 for p in pts):
                raise ParseError(f"negative point in {text!r}")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                if a in mapping:
                    raise ParseError(f"point {a} repeated in {text!r}")
                mapping[a] = b
            top = max(top, max(pts))
        n = max(top + 1, degree or 0)
        return cls(tuple(mapping.get(i, i) for i in range(n)))

    def degree(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: apply ``other`` first, then ``self``."""
        if len(self.images) != len(other.images):
            raise DegreeMismatch("cannot compose permutations of different degree")
        return Permutation(tuple(map(self.images.__getitem__, other.images)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def extend(self, degree: int) -> "Permutation":
        """Re-embed into a larger point set, fixing the new points."""
        if degree < len(self.images):
            raise DegreeMismatch("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(len(self.images), degree)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen: set[int] = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            j = self.images[i]
            while j != i:
                cyc.append(j)
                j = self.images[j]
            seen.update(cyc)
            out.append(tuple(cyc))
        return out

    def cycle_str(self) -> str:
        """Canonical cycle notation; the identity prints as ``()``."""
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles()]
        return "".join(parts) or "()"

    def __str__(self) -> str:
        return self.cycle_str()


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse either cycle notation or a one-line image array."""
    s = text.strip()
    if s.startswith("(") or s == "()":
        return Permutation.from_cycles(s, degree)
    s = s.strip("[]")
    toks = s.replace(",", " ").split()
    if not toks:
        raise ParseError(f"empty permutation text: {text!r}")
    try:
        images = [int(t) for t in toks]
    except ValueError as exc:
        raise ParseError(f"bad image array: {text!r}") from exc
    if degree is not None and len(images) < degree:
        images.extend(range(len(images), degree))
    return Permutation.from_images(images)


def parse_generators(texts: Sequence[str], degree: int | None = None) -> list[Permutation]:
    """Parse generator strings and lift them all to one common degree."""
    raw = [parse_permutation(t) for t in texts]
    n = max([degree or 1] + [p.degree() for p in raw])
    return [p.extend(n) for p in raw]


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]
    size: int
    element_order: int


@dataclass(frozen=True)
class CyclicClass:
    """A conjugacy class of cyclic subgroups, with a chosen generator.

    ``member_class_profile`` maps conjugacy-class index -> how many
    elements of the subgroup lie in that class; it is what the
    fixed-subspace dimension computation consumes.
    """

    generator: int
    subgroup_order: int
    subgroup_elements: tuple[int, ...]
    member_class_profile: Mapping[int, int]


@dataclass(frozen=True)
class CosetAction:
    """Left action of a group on the cosets of a subgroup.

    ``cosets`` holds the least element index of each coset, in discovery
    order; ``coset_of[x]`` is the coset index of element ``x``. Actions
    of arbitrary elements are derived on demand via ``element_action``.
    """

    group: "PermGroup"
    subgroup: tuple[int, ...]
    cosets: tuple[int, ...]
    coset_of: tuple[int, ...]
    generator_action: tuple[tuple[int, ...], ...]

    def element_action(self, x: int) -> tuple[int, ...]:
        """The permutation of coset indices induced by element ``x``."""
        G = self.group
        cof = self.coset_of
        return tuple(cof[G.mul(x, r)] for r in self.cosets)

    def cycle_count(self, x: int) -> int:
        """Number of orbits of the cyclic group <x> on the cosets."""
        act = self.element_action(x)
        seen = [False] * len(act)
        n = 0
        for c in range(len(act)):
            if seen[c]:
                continue
            n += 1
            j = c
            while not seen[j]:
                seen[j] = True
                j = act[j]
        return n


class PermGroup:
    """A finite permutation group, fully enumerated from its generators.

    Derived data (conjugacy classes, cyclic classes, coset actions,
    double-coset counts) is computed lazily and cached; the group itself
    is immutable after construction.
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: int | None = None,
        cap: int = DEFAULT_CAP,
    ):
        gens = list(generators)
        if degree is None:
            degree = gens[0].degree() if gens else 1
        if degree < 1:
            raise ValueError("degree must be positive")
        if cap < 1:
            raise ValueError("cap must be positive")
        for g in gens:
            if g.degree() != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree()} != group degree {degree}"
                )

        ident = tuple(range(degree))
        seen = {ident}
        frontier = [ident]
        gimgs = [g.images for g in gens]
        while frontier:
            nxt = []
            for a in frontier:
                get = a.__getitem__
                for g in gimgs:
                    c = tuple(map(get, g))
                    if c not in seen:
                        if len(seen) >= cap:
                            raise CapExceeded(f"group order exceeds cap {cap}")
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt

        imgs = sorted(seen)
        self.degree = degree
        self.generators = gens
        self.elements = [Permutation(t) for t in imgs]
        self.order = len(imgs)
        self._images = imgs
        self._index = {t: i for i, t in enumerate(imgs)}
        self.identity_index = self._index[ident]
        assert self.identity_index == 0  # identity is lexicographically least
        inv = []
        for t in imgs:
            it = [0] * degree
            for i, v in enumerate(t):
                it[v] = i
            inv.append(self._index[tuple(it)])
        self._inverse = inv
        self.generator_indices = [self._index[g.images] for g in gens]
        self._orders: dict[int, int] = {}
        self._classes: tuple[ConjugacyClass, ...] | None = None
        self._class_of: list[int] | None = None
        self._rational: bool | None = None
        self._cyclic: tuple[CyclicClass, ...] | None = None
        self._cyclic_of_class: dict[int, int] | None = None
        self._coset_actions: dict[frozenset[int], CosetAction] = {}
        self._dcc: dict[tuple[int, frozenset[int]], int] = {}
        self.cache: dict = {}  # cross-module memo slot (character table etc.)

    # -- element arithmetic -------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        """Index of element i composed with element j (j applied first)."""
        return self._index[tuple(map(self._images[i].__getitem__, self._images[j]))]

    def inv(self, i: int) -> int:
        return self._inverse[i]

    def conjugate(self, x: int, g: int) -> int:
        """Index of g x g^-1."""
        return self.mul(self.mul(g, x), self._inverse[g])

    def power(self, x: int, k: int) -> int:
        y = self.identity_index
        for _ in range(k % self.element_order(x)):
            y = self.mul(y, x)
        return y

    def element_order(self, x: int) -> int:
        k = self._orders.get(x)
        if k is None:
            k, y = 1, x
            while y != self.identity_index:
                y = self.mul(y, x)
                k += 1
            self._orders[x] = k
        return k

    def index_of(self, p: Permutation) -> int:
        try:
            return self._index[p.images]
        except KeyError:
            raise KeyError(f"{p.cycle_str()} is not an element of this group") from None

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self._index

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_str() for g in self.generators) or "-"
        return f"PermGroup(degree={self.degree}, order={self.order}, gens=[{gens}])"

    # -- subgroups ----------------------------------------------------------

    def subgroup_closure(self, seeds: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by the given element indices."""
        seeds = sorted(set(seeds) | {self.identity_index})
        found = set(seeds)
        frontier = list(seeds)
        while frontier:
            nxt = []
            for a in frontier:
                for s in seeds:
                    c = self.mul(a, s)
                    if c not in found:
                        found.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(found)

    def is_subgroup(self, elems: frozenset[int]) -> bool:
        if self.identity_index not in elems:
            return False
        if self.order % len(elems):
            return False
        if any(self._inverse[x] not in elems for x in elems):
            return False
        if len(elems) == self.order:
            return True
        if len(elems) ** 2 <= 10_000_000:
            return all(self.mul(a, b) in elems for a in elems for b in elems)
        return True  # too large for the quadratic check; coset fill re-verifies

    # -- conjugacy classes --------------------------------------------------

    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        """Conjugacy classes, identity first, then by (element order, size, least member)."""
        if self._classes is None:
            tmp = [-1] * self.order
            raw: list[list[int]] = []
            gens = self.generator_indices
            for x in range(self.order):
                if tmp[x] >= 0:
                    continue
                cid = len(raw)
                tmp[x] = cid
                members = [x]
                queue = [x]
                while queue:
                    y = queue.pop()
                    for g in gens:
                        z = self.conjugate(y, g)
                        if tmp[z] < 0:
                            tmp[z] = cid
                            members.append(z)
                            queue.append(z)
                raw.append(sorted(members))
            raw.sort(key=lambda m: (self.element_order(m[0]), len(m), m[0]))
            classes = tuple(
                ConjugacyClass(
                    representative=m[0],
                    members=tuple(m),
                    size=len(m),
                    element_order=self.element_order(m[0]),
                )
                for m in raw
            )
            class_of = [-1] * self.order
            for ci, cl in enumerate(classes):
                for x in cl.members:
                    class_of[x] = ci
            self._classes = classes
            self._class_of = class_of
        return self._classes

    def class_of(self, x: int) -> int:
        self.conjugacy_classes()
        assert self._class_of is not None
        return self._class_of[x]

    # -- rationality and cyclic-subgroup classes -----------------------------

    def is_rational_group(self) -> bool:
        """Power-map test: every x is conjugate to x^k for all k coprime to ord(x).

        Equivalent to all irreducible characters taking rational values.
        """
        if self._rational is None:
            ok = True
            for cl in self.conjugacy_classes():
                x, k = cl.representative, cl.element_order
                y = x
                for t in range(2, k):
                    y = self.mul(y, x)  # y = x^t
                    if math.gcd(t, k) == 1 and self.class_of(y) != self.class_of(x):
                        ok = False
                        break
                if not ok:
                    break
            self._rational = ok
        return self._rational

    def cyclic_subgroup_classes(self) -> tuple[CyclicClass, ...]:
        """One cyclic class per conjugacy class, ordered by subgroup order.

        For rational-character groups the conjugacy classes of cyclic
        subgroups biject with conjugacy classes of elements: the class of
        x maps to the class of <x>. Ties in subgroup order break by the
        generator's conjugacy-class index; the trivial subgroup is first.
        """
        if self._cyclic is None:
            if not self.is_rational_group():
                raise NotRationalGroup(
                    "cyclic classes biject with element classes only for "
                    "rational-character groups"
                )
            classes = self.conjugacy_classes()
            items = []
            for ci, cl in enumerate(classes):
                x = cl.representative
                powers = [self.identity_index]
                y = x
                while y != self.identity_index:
                    powers.append(y)
                    y = self.mul(y, x)
                profile: dict[int, int] = {}
                for p in powers:
                    pc = self.class_of(p)
                    profile[pc] = profile.get(pc, 0) + 1
                items.append(
                    (
                        len(powers),
                        ci,
                        CyclicClass(
                            generator=x,
                            subgroup_order=len(powers),
                            subgroup_elements=tuple(sorted(powers)),
                            member_class_profile=profile,
                        ),
                    )
                )
            items.sort(key=lambda t: (t[0], t[1]))
            self._cyclic = tuple(t[2] for t in items)
            self._cyclic_of_class = {t[1]: k for k, t in enumerate(items)}
        return self._cyclic

    def cyclic_class_of_element(self, x: int) -> int:
        """Index of the cyclic class generated by (the class of) x."""
        self.cyclic_subgroup_classes()
        assert self._cyclic_of_class is not None
        return self._cyclic_of_class[self.class_of(x)]

    # -- coset actions and double cosets --------------------------------------

    def coset_action(self, subgroup: Iterable[int]) -> CosetAction:
        """Action on left cosets xH; raises NotASubgroup for non-closed sets."""
        H = subgroup if isinstance(subgroup, frozenset) else frozenset(subgroup)
        cached = self._coset_actions.get(H)
        if cached is not None:
            return cached
        if not self.is_subgroup(H):
            raise NotASubgroup(f"{len(H)} elements do not form a subgroup")
        hs = sorted(H)
        coset_of = [-1] * self.order
        reps: list[int] = []
        for x in range(self.order):
            if coset_of[x] >= 0:
                continue
            c = len(reps)
            reps.append(x)
            for h in hs:
                y = self.mul(x, h)
                if coset_of[y] >= 0:
                    raise NotASubgroup("coset overlap: element set is not closed")
                coset_of[y] = c
        act = CosetAction(
            group=self,
            subgroup=tuple(hs),
            cosets=tuple(reps),
            coset_of=tuple(coset_of),
            generator_action=(),
        )
        gen_act = tuple(act.element_action(g) for g in self.generator_indices)
        act = CosetAction(self, tuple(hs), tuple(reps), tuple(coset_of), gen_act)
        # homomorphism spot-check on generator pairs
        for gi, g in enumerate(self.generator_indices):
            for hj, h in enumerate(self.generator_indices):
                gh = act.element_action(self.mul(g, h))
                composed = tuple(gen_act[gi][c] for c in gen_act[hj])
                assert gh == composed, "coset action is not a homomorphism"
        self._coset_actions[H] = act
        return act

    def double_coset_count(self, a, b) -> int:
        """#(A\\G/B) for A = <a> cyclic and B a subgroup.

        Computed as the number of orbits of A on the coset space G/B,
        i.e. the cycle count of a's induced coset permutation. ``a`` may
        be a CyclicClass or an element index; ``b`` a CyclicClass or an
        iterable of element indices.
        """
        gen = a.generator if isinstance(a, CyclicClass) else int(a)
        elems = b.subgroup_elements if isinstance(b, CyclicClass) else b
        B = elems if isinstance(elems, frozenset) else frozenset(elems)
        key = (gen, B)
        got = self._dcc.get(key)
        if got is None:
            got = self.coset_action(B).cycle_count(gen)
            self._dcc[key] = got
        return got


def group_from_generators(
    gens: Sequence[Permutation],
    cap: int = DEFAULT_CAP,
    degree: int | None = None,
) -> PermGroup:
    """Breadth-first closure of the generators into a PermGroup."""
    return PermGroup(gens, degree=degree, cap=cap)
