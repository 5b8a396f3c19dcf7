"""Weyl groups as permutation groups, with integrable-system presets.

Realizations: A_n permutes n+1 points; B_n/C_n are signed permutations
of n coordinates encoded on 2n points (point i is +e_{i+1}, point n+i is
-e_{i+1}); D_n is the even-sign subgroup on the same points; G_2 and F_4
permute their 12 and 48 roots (F_4 roots doubled to keep coordinates
integral).

Each group carries the data the branched-cover presets need: the
reflection representation (located in the character table by its trace),
the set of reflections, a Coxeter element, and the long/short reflection
classes for the non-simply-laced types.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exactla
from .chartable import CharacterTable, character_table, fixed_dim_matrix
from .errors import OutOfRegime, UnsupportedType
from .permgroup import CyclicClass, PermGroup, Permutation
from .rhprym import CoverSpec, RamificationSpec

SUPPORTED = {
    "A": range(1, 8),
    "B": range(2, 6),
    "C": range(2, 6),
    "D": range(4, 6),
    "G": (2,),
    "F": (4,),
}

_COXETER_NUMBER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n,
    "C": lambda n: 2 * n,
    "D": lambda n: 2 * n - 2,
    "G": lambda n: 6,
    "F": lambda n: 12,
}

_ORDER = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "G": lambda n: 12,
    "F": lambda n: 1152,
}

_LIE_DIM = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "G": lambda n: 14,
    "F": lambda n: 52,
}

_INVARIANT_DEGREES = {
    "A": lambda n: tuple(range(2, n + 2)),
    "B": lambda n: tuple(range(2, 2 * n + 1, 2)),
    "C": lambda n: tuple(range(2, 2 * n + 1, 2)),
    "D": lambda n: tuple(sorted(tuple(range(2, 2 * n - 1, 2)) + (n,))),
    "G": lambda n: (2, 6),
    "F": lambda n: (2, 6, 8, 12),
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@dataclass
class WeylGroup:
    """A Weyl group with the metadata the cover presets consume."""

    letter: str
    rank: int
    group: PermGroup
    lie_dim: int
    reflections: tuple[int, ...]
    coxeter: int
    reflection_rep: int
    long_reflection_class: int
    short_reflection_class: int
    coxeter_class: int
    invariant_degrees: tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def table(self) -> CharacterTable:
        return character_table(self.group)


# -- generators per type -------------------------------------------------------


def _transposition(n: int, i: int, j: int) -> Permutation:
    imgs = list(range(n))
    imgs[i], imgs[j] = imgs[j], imgs[i]
    return Permutation(tuple(imgs))


def _signed_gens(n: int) -> list[Permutation]:
    deg = 2 * n
    gens = []
    for i in range(n - 1):
        imgs = list(range(deg))
        imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
        imgs[n + i], imgs[n + i + 1] = imgs[n + i + 1], imgs[n + i]
        gens.append(Permutation(tuple(imgs)))
    imgs = list(range(deg))
    imgs[n - 1], imgs[2 * n - 1] = imgs[2 * n - 1], imgs[n - 1]
    gens.append(Permutation(tuple(imgs)))
    return gens


def _even_signed_gens(n: int) -> list[Permutation]:
    deg = 2 * n
    gens = _signed_gens(n)[:-1]
    imgs = list(range(deg))
    # reflection in e_{n-1} + e_n: e_{n-1} <-> -e_n
    imgs[n - 2], imgs[2 * n - 1] = imgs[2 * n - 1], imgs[n - 2]
    imgs[n - 1], imgs[2 * n - 2] = imgs[2 * n - 2], imgs[n - 1]
    gens.append(Permutation(tuple(imgs)))
    return gens


def _g2_roots() -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    short = [
        (1, -1, 0), (-1, 1, 0), (1, 0, -1), (-1, 0, 1), (0, 1, -1), (0, -1, 1),
    ]
    long = [
        (2, -1, -1), (-2, 1, 1), (-1, 2, -1), (1, -2, 1), (-1, -1, 2), (1, 1, -2),
    ]
    simple = [(1, -1, 0), (-1, 2, -1)]
    return sorted(short + long), simple


def _f4_roots() -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    roots: list[tuple[int, ...]] = []
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            v = [0, 0, 0, 0]
            v[i], v[j] = si, sj
            roots.append(tuple(v))
    for i in range(4):
        for s in (2, -2):
            v = [0, 0, 0, 0]
            v[i] = s
            roots.append(tuple(v))
    roots.extend(itertools.product((1, -1), repeat=4))
    simple = [(0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1)]
    return sorted(roots), simple


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _reflect(v, alpha) -> tuple[int, ...]:
    num = 2 * _dot(v, alpha)
    den = _dot(alpha, alpha)
    assert num % den == 0  # Cartan integrality on the root lattice
    q = num // den
    return tuple(x - q * a for x, a in zip(v, alpha))


def _root_perm(roots, index_of, alpha) -> Permutation:
    return Permutation(tuple(index_of[_reflect(r, alpha)] for r in roots))


# -- reflection-representation traces ------------------------------------------


def _trace_on_cartan(letter: str, rank: int, roots, simple):
    """Return a function mapping an image tuple to its trace on the Cartan."""
    if letter == "A":
        def trace(images):
            return sum(1 for i, v in enumerate(images) if v == i) - 1
        return trace
    if letter in ("B", "C", "D"):
        n = rank
        def trace(images):
            t = 0
            for i in range(n):
                if images[i] == i:
                    t += 1
                elif images[i] == n + i:
                    t -= 1
            return t
        return trace

    # G2/F4: solve for the matrix of the action in a basis of simple roots.
    ambient = len(roots[0])
    r = len(simple)
    basis_cols = [[Fraction(s[row]) for s in simple] for row in range(ambient)]
    for rows in itertools.combinations(range(ambient), r):
        square = exactla.RationalMatrix.from_rows([basis_cols[i] for i in rows])
        if exactla.determinant(square) != 0:
            break
    else:  # pragma: no cover - simple roots are independent
        raise AssertionError("simple roots are not independent")
    inv_cols = [exactla.solve(square, [1 if i == j else 0 for i in range(r)]) for j in range(r)]
    index_of = {v: i for i, v in enumerate(roots)}
    simple_idx = [index_of[s] for s in simple]

    def trace(images):
        t = Fraction(0)
        for col, si in enumerate(simple_idx):
            img = roots[images[si]]
            picked = [img[i] for i in rows]
            # coordinate of img along simple[col]: row `col` of inverse * picked
            t += sum(inv_cols[j][col] * picked[j] for j in range(r))
        assert t.denominator == 1
        return int(t)

    return trace


# -- construction ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _signed_perm_group(rank: int) -> PermGroup:
    # shared by B and C of equal rank: identical generators, same group
    return PermGroup(_signed_gens(rank))


@lru_cache(maxsize=None)
def weyl_group(letter: str, rank: int) -> WeylGroup:
    """Construct a supported Weyl group with verified invariants."""
    letter = letter.upper()
    if letter not in SUPPORTED or rank not in SUPPORTED[letter]:
        raise UnsupportedType(f"unsupported Weyl type {letter}{rank}")

    roots = simple = None
    if letter == "A":
        gens = [_transposition(rank + 1, i, i + 1) for i in range(rank)]
        G = PermGroup(gens)
    elif letter in ("B", "C"):
        G = _signed_perm_group(rank)
        gens = G.generators
    elif letter == "D":
        gens = _even_signed_gens(rank)
        G = PermGroup(gens)
    else:
        roots, simple = _g2_roots() if letter == "G" else _f4_roots()
        index_of = {v: i for i, v in enumerate(roots)}
        gens = [_root_perm(roots, index_of, a) for a in simple]
        G = PermGroup(gens)

    assert G.order == _ORDER[letter](rank), "group order mismatch"
    assert G.is_rational_group(), "Weyl groups have rational characters"

    lie_dim = _LIE_DIM[letter](rank)
    n_roots = lie_dim - rank

    trace = _trace_on_cartan(letter, rank, roots, simple)
    classes = G.conjugacy_classes()
    class_traces = [trace(G.elements[cl.representative].images) for cl in classes]

    table = character_table(G)
    matches = [
        j for j, row in enumerate(table.table) if list(row) == class_traces
    ]
    assert len(matches) == 1, "reflection representation not found in the table"
    reflection_rep = matches[0]

    refl_class_idx = [
        ci
        for ci, cl in enumerate(classes)
        if cl.element_order == 2 and class_traces[ci] == rank - 2
    ]
    reflections = tuple(
        sorted(x for ci in refl_class_idx for x in classes[ci].members)
    )
    assert len(reflections) == n_roots // 2, "reflection count != positive roots"

    cox = G.identity_index
    for g in G.generator_indices:
        cox = G.mul(cox, g)
    assert G.element_order(cox) == _COXETER_NUMBER[letter](rank), "Coxeter order"

    cyclic = G.cyclic_subgroup_classes()
    refl_cyclic = [G.cyclic_class_of_element(classes[ci].representative) for ci in refl_class_idx]
    if len(refl_cyclic) == 1:
        long_cls = short_cls = refl_cyclic[0]
    else:
        assert len(refl_cyclic) == 2, "unexpected number of reflection classes"
        a, b = refl_cyclic
        ga = G.elements[cyclic[a].generator].images
        gb = G.elements[cyclic[b].generator].images
        if letter in ("B", "C"):
            moved_a = sum(1 for i, v in enumerate(ga) if v != i)
            flips = a if moved_a == 2 else b
            swaps = b if moved_a == 2 else a
            # B: sign flip is the short root e_i; C: it is the long root 2e_i
            long_cls, short_cls = (swaps, flips) if letter == "B" else (flips, swaps)
        else:
            def root_norm(images):
                idx = next(
                    i for i, r in enumerate(roots)
                    if roots[images[i]] == tuple(-x for x in r)
                )
                return _dot(roots[idx], roots[idx])
            long_cls, short_cls = (a, b) if root_norm(ga) > root_norm(gb) else (b, a)

    degrees = _INVARIANT_DEGREES[letter](rank)
    assert sum(2 * d - 1 for d in degrees) == lie_dim, "invariant degrees"

    return WeylGroup(
        letter=letter,
        rank=rank,
        group=G,
        lie_dim=lie_dim,
        reflections=reflections,
        coxeter=cox,
        reflection_rep=reflection_rep,
        long_reflection_class=long_cls,
        short_reflection_class=short_cls,
        coxeter_class=G.cyclic_class_of_element(cox),
        invariant_degrees=degrees,
    )


def parse_weyl_label(label: str) -> tuple[str, int]:
    """Parse labels like ``A3`` or ``g2`` into (letter, rank)."""
    s = label.strip().upper()
    if len(s) < 2 or s[0] not in SUPPORTED or not s[1:].isdigit():
        raise UnsupportedType(f"bad Weyl label {label!r}")
    return s[0], int(s[1:])


# -- presets --------------------------------------------------------------------


def _reflection_counts(W: WeylGroup, total: int, split: str) -> dict[int, int]:
    if total == 0:
        return {}
    if W.long_reflection_class == W.short_reflection_class or split == "long":
        return {W.long_reflection_class: total}
    if split == "short":
        return {W.short_reflection_class: total}
    if split == "even":
        hi = (total + 1) // 2
        counts = {W.long_reflection_class: hi}
        if total - hi:
            counts[W.short_reflection_class] = total - hi
        return counts
    raise ValueError(f"unknown reflection split {split!r}")


def toda_preset(W: WeylGroup, split: str = "long") -> CoverSpec:
    """Cameral cover of P^1 for the periodic lattice system: 2r reflection
    branch points plus two points with Coxeter inertia (z = 0 and infinity)."""
    counts = dict(_reflection_counts(W, 2 * W.rank, split))
    counts[W.coxeter_class] = counts.get(W.coxeter_class, 0) + 2
    return CoverSpec(W.group, 0, RamificationSpec(counts))


def hitchin_preset(W: WeylGroup, genus: int, split: str = "long") -> CoverSpec:
    """Generic cameral cover for the cotangent integrable system on a base
    of genus >= 2: (dim g - r)(2g - 2) simple reflection branch points."""
    if genus < 2:
        raise ValueError("base genus must be at least 2")
    total = (W.lie_dim - W.rank) * (2 * genus - 2)
    return CoverSpec(W.group, genus, RamificationSpec(_reflection_counts(W, total, split)))


def markman_preset(W: WeylGroup, genus: int, deg_d: int, split: str = "long") -> CoverSpec:
    """Twisted variant: the canonical bundle is twisted by an effective
    divisor D, giving (dim g - r)(2g - 2 + deg D) reflection branch points."""
    if deg_d < 0:
        raise ValueError("deg D must be nonnegative")
    if 2 * genus - 2 + deg_d <= 0:
        raise ValueError("2g - 2 + deg D must be positive")
    total = (W.lie_dim - W.rank) * (2 * genus - 2 + deg_d)
    return CoverSpec(W.group, genus, RamificationSpec(_reflection_counts(W, total, split)))


def expected_base_dim(W: WeylGroup, genus: int, deg_d: int = 0) -> int:
    """Dimension of the base of the (possibly twisted) integrable system,
    counted independently through the invariant-polynomial degrees.

    Untwisted: sum_i h^0(K^{d_i}) = sum_i (2 d_i - 1)(g - 1) for g >= 2.
    Twisted by deg D > 0: sum_i h^0((K(D))^{d_i}) - r deg D, valid while
    every line-bundle degree d_i (2g - 2 + deg D) exceeds 2g - 2.
    """
    r = W.rank
    ds = W.invariant_degrees
    if deg_d == 0:
        if genus < 2:
            raise OutOfRegime("untwisted count needs base genus >= 2")
        return sum((2 * d - 1) * (genus - 1) for d in ds)
    if genus < 0 or 2 * genus - 2 + deg_d <= 0:
        raise OutOfRegime("2g - 2 + deg D must be positive")
    if any(d * (2 * genus - 2 + deg_d) <= 2 * genus - 2 for d in ds):
        raise OutOfRegime("line-bundle degrees too small for Riemann-Roch count")
    h0 = sum(d * (2 * genus - 2 + deg_d) - (genus - 1) for d in ds)
    return h0 - r * deg_d
