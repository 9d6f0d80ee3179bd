"""Bound quiver presentations of the supported algebra families.

Every algebra here is a finite category whose Hom spaces are spanned by at
most one basis morphism per (source, target, shift): composition of basis
morphisms is again a basis morphism or zero, never a proper sum.  The seven
families:

* ``linear-a``       vertices = weakly increasing d-tuples in {0,...,n-1}
* ``kupisch-a``      the subset cut out by a linear Kupisch series
* ``window``         weakly increasing d-tuples with entries in [a, b]
* ``zl-window``      window additionally bounded by a constant Loewy bound
* ``selfinj-atilde`` orbits of the constant-bound category under shifts by n
* ``atilde-kupisch`` orbits of an n-periodic series category under shifts by n
* ``tube-trunc``     orbits of the unbounded category, truncated at Loewy
                     length L so that all morphisms of path length >= L die

Orbit families store canonical representatives (first entry in {0,...,n-1})
and shift-tagged basis morphisms; composition adds the shift tags.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .combinat import (
    CYCLIC_A,
    LINEAR_A,
    IntTuple,
    KupischSeries,
    as_os,
    box_interval,
    canonical_orbit_rep,
    enumerate_os,
    enumerate_window_os,
    interlaces,
    is_os,
    loewy_len,
    mesh_from_coordinates,
    restrict_os,
    translate_tuple,
)
from .linalg import Mat, cokernel_projection


class BasisElt(NamedTuple):
    src: IntTuple
    dst: IntTuple
    shift: int

    def __str__(self) -> str:
        tag = f"%{self.shift:+d}" if self.shift else ""
        return f"{label(self.src)}->{label(self.dst)}{tag}"


class Arrow(NamedTuple):
    src: IntTuple
    direction: int  # 0-based coordinate being incremented
    dst: IntTuple
    shift: int

    @property
    def elt(self) -> BasisElt:
        return BasisElt(self.src, self.dst, self.shift)

    def name(self) -> str:
        tag = f"%{self.shift:+d}" if self.shift else ""
        return f"a{self.direction + 1}({label(self.src)}){tag}"


def label(t: Sequence[int]) -> str:
    return ",".join(str(x) for x in t)


FAMILIES = (
    "linear-a",
    "kupisch-a",
    "window",
    "zl-window",
    "selfinj-atilde",
    "atilde-kupisch",
    "tube-trunc",
)


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    d: int
    n: int | None = None
    series: KupischSeries | None = None
    bound: int | None = None
    window: tuple[int, int] | None = None

    @staticmethod
    def linear_an(n: int, d: int) -> "AlgebraSpec":
        return AlgebraSpec("linear-a", d, n=n)

    @staticmethod
    def kupisch_a(lengths, d: int) -> "AlgebraSpec":
        series = lengths if isinstance(lengths, KupischSeries) else KupischSeries.linear_a(lengths)
        return AlgebraSpec("kupisch-a", d, n=series.size, series=series)

    @staticmethod
    def window_spec(a: int, b: int, d: int) -> "AlgebraSpec":
        return AlgebraSpec("window", d, window=(a, b))

    @staticmethod
    def zl_window(ell: int, a: int, b: int, d: int) -> "AlgebraSpec":
        return AlgebraSpec("zl-window", d, bound=ell, window=(a, b))

    @staticmethod
    def selfinj_atilde(n: int, ell: int, d: int) -> "AlgebraSpec":
        return AlgebraSpec("selfinj-atilde", d, n=n, bound=ell)

    @staticmethod
    def atilde_kupisch(lengths, d: int) -> "AlgebraSpec":
        series = lengths if isinstance(lengths, KupischSeries) else KupischSeries.cyclic_a(lengths)
        return AlgebraSpec("atilde-kupisch", d, n=series.size, series=series)

    @staticmethod
    def tube_trunc(n: int, d: int, trunc: int) -> "AlgebraSpec":
        return AlgebraSpec("tube-trunc", d, n=n, bound=trunc)

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.d < 1:
            raise ValueError("d must be >= 1")
        fam = self.family
        if fam == "linear-a":
            if self.n is None or self.n < 1:
                raise ValueError("linear-a needs n >= 1")
        elif fam == "kupisch-a":
            if self.series is None or self.series.variant != LINEAR_A:
                raise ValueError("kupisch-a needs a linear Kupisch series")
            self.series.require_valid()
        elif fam == "window":
            if self.window is None or self.window[0] > self.window[1]:
                raise ValueError("window needs a <= b")
        elif fam == "zl-window":
            if self.window is None or self.window[0] > self.window[1]:
                raise ValueError("zl-window needs a <= b")
            if self.bound is None or self.bound < 2:
                raise ValueError("zl-window needs bound >= 2")
        elif fam == "selfinj-atilde":
            if self.n is None or self.n < 1:
                raise ValueError("selfinj-atilde needs n >= 1")
            if self.bound is None or self.bound < 2:
                raise ValueError("selfinj-atilde needs bound >= 2")
        elif fam == "atilde-kupisch":
            if self.series is None or self.series.variant != CYCLIC_A:
                raise ValueError("atilde-kupisch needs a cyclic Kupisch series")
            self.series.require_valid()
        elif fam == "tube-trunc":
            if self.n is None or self.n < 1:
                raise ValueError("tube-trunc needs n >= 1")
            if self.bound is None or self.bound < 1:
                raise ValueError("tube-trunc needs truncation >= 1")

    @property
    def is_orbit(self) -> bool:
        return self.family in ("selfinj-atilde", "atilde-kupisch", "tube-trunc")

    @property
    def orbit_modulus(self) -> int | None:
        return self.n if self.is_orbit else None

    def describe(self) -> dict:
        out: dict = {"family": self.family, "d": self.d}
        if self.n is not None:
            out["n"] = self.n
        if self.series is not None:
            out["series"] = list(self.series.lengths)
        if self.bound is not None:
            out["bound"] = self.bound
        if self.window is not None:
            out["window"] = list(self.window)
        return out

    @staticmethod
    def from_describe(obj: dict) -> "AlgebraSpec":
        fam = obj["family"]
        series = None
        if "series" in obj:
            variant = CYCLIC_A if fam == "atilde-kupisch" else LINEAR_A
            series = KupischSeries(variant, tuple(obj["series"]))
        return AlgebraSpec(
            fam,
            obj["d"],
            n=obj.get("n"),
            series=series,
            bound=obj.get("bound"),
            window=tuple(obj["window"]) if "window" in obj else None,
        )

    def __str__(self) -> str:
        return json.dumps(self.describe(), sort_keys=True)


class PresentedAlgebra:
    """A finite bound quiver algebra with a combinatorial basis predicate."""

    def __init__(self, spec: AlgebraSpec):
        spec.validate()
        self.spec = spec
        self.d = spec.d
        self.orbit_modulus = spec.orbit_modulus
        self.vertices: tuple[IntTuple, ...] = tuple(sorted(self._vertex_set()))
        self._vset = frozenset(self.vertices)
        self._arrows: tuple[Arrow, ...] | None = None
        self._arrows_from: dict[IntTuple, tuple[Arrow, ...]] | None = None
        self._arrows_into: dict[IntTuple, tuple[Arrow, ...]] | None = None
        self._factor_cache: dict[BasisElt, list[BasisElt]] = {}
        self._op: "OppositeAlgebra | None" = None

    # ------------------------------------------------------------------ vertex sets

    def _vertex_set(self) -> list[IntTuple]:
        spec = self.spec
        d = self.d
        fam = spec.family
        if fam == "linear-a":
            return enumerate_os(spec.n, d)
        if fam == "kupisch-a":
            return restrict_os(spec.series, d)
        if fam == "window":
            return enumerate_window_os(spec.window[0], spec.window[1], d)
        if fam == "zl-window":
            a, b = spec.window
            return [t for t in enumerate_window_os(a, b, d) if loewy_len(t) <= spec.bound]
        # orbit families: canonical representatives with first entry in [0, n)
        n = spec.n
        out = []
        for first in range(n):
            hi = first + self._orbit_band() - 1
            for rest in itertools.combinations_with_replacement(range(first, hi + 1), d - 1):
                t = (first,) + rest
                if self._ambient_vertex(t):
                    out.append(t)
        return out

    def _orbit_band(self) -> int:
        # ambient Hom out of a vertex dies beyond this Loewy reach
        spec = self.spec
        if spec.family == "atilde-kupisch":
            return spec.series.max_length
        return spec.bound

    def _ambient_vertex(self, t: Sequence[int]) -> bool:
        """Membership of an arbitrary integer tuple in the covering vertex set."""
        spec = self.spec
        if not is_os(t):
            return False
        fam = spec.family
        if fam == "linear-a":
            return 0 <= t[0] and t[-1] <= spec.n - 1
        if fam == "kupisch-a":
            return 0 <= t[0] and t[-1] <= spec.n - 1 and loewy_len(t) <= spec.series.lengths[t[-1]]
        if fam == "window":
            a, b = spec.window
            return a <= t[0] and t[-1] <= b
        if fam == "zl-window":
            a, b = spec.window
            return a <= t[0] and t[-1] <= b and loewy_len(t) <= spec.bound
        if fam == "atilde-kupisch":
            return loewy_len(t) <= spec.series.length_at(t[-1] % spec.n)
        return loewy_len(t) <= spec.bound

    def _ambient_hom(self, v: Sequence[int], u: Sequence[int]) -> bool:
        """Nonvanishing of the covering-category Hom from v to the ambient tuple u.

        Reduced box test: v interlaces u and every Loewy bound along the last
        coordinate of the interval [v, u] is respected.  The worst tuple in
        the box with last entry t has first entry v_1, so scanning t suffices.
        """
        spec = self.spec
        if not interlaces(v, u):
            return False
        fam = spec.family
        if fam in ("linear-a", "window"):
            return self._ambient_vertex(u)
        if fam == "kupisch-a":
            if u[-1] > spec.n - 1:
                return False
            return all(t - v[0] + 1 <= spec.series.lengths[t] for t in range(v[-1], u[-1] + 1))
        if fam == "zl-window":
            return self._ambient_vertex(u) and u[-1] - v[0] + 1 <= spec.bound
        if fam == "atilde-kupisch":
            n = spec.n
            return all(t - v[0] + 1 <= spec.series.length_at(t % n) for t in range(v[-1], u[-1] + 1))
        return u[-1] - v[0] + 1 <= spec.bound

    # ------------------------------------------------------------------ basis

    def is_vertex(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._vset

    def require_vertex(self, v: Sequence[int]) -> IntTuple:
        t = as_os(v)
        if len(t) != self.d:
            raise ValueError(f"expected a {self.d}-tuple, got {t}")
        if self.orbit_modulus is not None and not 0 <= t[0] < self.orbit_modulus:
            raise ValueError(f"{t} is not a canonical representative (first entry must be in [0,{self.orbit_modulus}))")
        if t not in self._vset:
            raise ValueError(f"{t} is not a vertex")
        return t

    def shifted(self, t: Sequence[int], k: int) -> IntTuple:
        n = self.orbit_modulus
        return tuple(x + k * n for x in t) if n else tuple(t)

    def hom_basis(self, v: Sequence[int], w: Sequence[int]) -> tuple[BasisElt, ...]:
        v, w = tuple(v), tuple(w)
        if v not in self._vset or w not in self._vset:
            return ()
        n = self.orbit_modulus
        if n is None:
            return (BasisElt(v, w, 0),) if self._ambient_hom(v, w) else ()
        lo = -((w[0] - v[0]) // n)  # ceil((v0 - w0)/n)
        hi = (v[0] + self._orbit_band() - 1 - w[-1]) // n
        out = []
        for k in range(lo, hi + 1):
            if self._ambient_hom(v, self.shifted(w, k)):
                out.append(BasisElt(v, w, k))
        return tuple(out)

    def hom_dim(self, v: Sequence[int], w: Sequence[int]) -> int:
        """Dimension of the Hom space; 0 for well-formed tuples outside the vertex set."""
        v, w = as_os(v), as_os(w)
        if len(v) != self.d or len(w) != self.d:
            raise ValueError(f"expected {self.d}-tuples")
        return len(self.hom_basis(v, w))

    def identity(self, v: Sequence[int]) -> BasisElt:
        v = self.require_vertex(v)
        return BasisElt(v, v, 0)

    def compose(self, f: BasisElt, g: BasisElt) -> BasisElt | None:
        """Composite of f: a -> b followed by g: b -> c, or None when zero."""
        if f.dst != g.src:
            raise ValueError(f"non-composable pair {f} , {g}")
        k = f.shift + g.shift
        if self._ambient_hom(f.src, self.shifted(g.dst, k)):
            return BasisElt(f.src, g.dst, k)
        return None

    def path_length(self, b: BasisElt) -> int:
        u = self.shifted(b.dst, b.shift)
        return sum(u_i - v_i for u_i, v_i in zip(u, b.src))

    def all_basis(self) -> list[BasisElt]:
        out = []
        for v in self.vertices:
            for w in self.vertices:
                out.extend(self.hom_basis(v, w))
        return out

    def algebra_dimension(self) -> int:
        return sum(self.hom_dim(v, w) for v in self.vertices for w in self.vertices)

    # ------------------------------------------------------------------ arrows

    def arrows(self) -> tuple[Arrow, ...]:
        if self._arrows is None:
            found = []
            for v in self.vertices:
                for i in range(self.d):
                    t = v[:i] + (v[i] + 1,) + v[i + 1 :]
                    if not is_os(t) or not self._ambient_vertex(t):
                        continue
                    if self.orbit_modulus is None:
                        found.append(Arrow(v, i, t, 0))
                    else:
                        rep, s = canonical_orbit_rep(t, self.orbit_modulus)
                        found.append(Arrow(v, i, rep, s))
            self._arrows = tuple(found)
        return self._arrows

    def arrows_from(self, v: Sequence[int]) -> tuple[Arrow, ...]:
        if self._arrows_from is None:
            table: dict[IntTuple, list[Arrow]] = {u: [] for u in self.vertices}
            for a in self.arrows():
                table[a.src].append(a)
            self._arrows_from = {u: tuple(r) for u, r in table.items()}
        return self._arrows_from[tuple(v)]

    def arrows_into(self, v: Sequence[int]) -> tuple[Arrow, ...]:
        if self._arrows_into is None:
            table: dict[IntTuple, list[Arrow]] = {u: [] for u in self.vertices}
            for a in self.arrows():
                table[a.dst].append(a)
            self._arrows_into = {u: tuple(r) for u, r in table.items()}
        return self._arrows_into[tuple(v)]

    # ------------------------------------------------------------------ module-level combinatorics

    def summands(self) -> list[IntTuple]:
        """Index tuples (length d+1) of the distinguished module's summands."""
        spec = self.spec
        d1 = self.d + 1
        fam = spec.family
        if fam == "linear-a":
            return enumerate_os(spec.n, d1)
        if fam == "kupisch-a":
            return restrict_os(spec.series, d1)
        if fam == "window":
            return enumerate_window_os(spec.window[0], spec.window[1], d1)
        if fam == "zl-window":
            a, b = spec.window
            return [t for t in enumerate_window_os(a, b, d1) if loewy_len(t) <= spec.bound]
        n = spec.n
        out = []
        for first in range(n):
            hi = first + self._orbit_band() - 1
            for rest in itertools.combinations_with_replacement(range(first, hi + 1), d1 - 1):
                t = (first,) + rest
                if self._summand_allowed(t):
                    out.append(t)
        return sorted(out)

    def _summand_allowed(self, t: IntTuple) -> bool:
        spec = self.spec
        if spec.family == "atilde-kupisch":
            return loewy_len(t) <= spec.series.length_at(t[-1] % spec.n)
        return loewy_len(t) <= spec.bound

    def is_summand(self, lam: Sequence[int]) -> bool:
        t = tuple(lam)
        if len(t) != self.d + 1 or not is_os(t):
            return False
        spec = self.spec
        fam = spec.family
        if fam == "linear-a":
            return 0 <= t[0] and t[-1] <= spec.n - 1
        if fam == "kupisch-a":
            return 0 <= t[0] and t[-1] <= spec.n - 1 and loewy_len(t) <= spec.series.lengths[t[-1]]
        if fam == "window":
            a, b = spec.window
            return a <= t[0] and t[-1] <= b
        if fam == "zl-window":
            a, b = spec.window
            return a <= t[0] and t[-1] <= b and loewy_len(t) <= spec.bound
        if not 0 <= t[0] < spec.n:
            return False
        return self._summand_allowed(t)

    def module_hom_formula(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        """Closed-form dim Hom between the interval modules at lam and mu.

        Interlacing count; orbit families sum over the contributing shifts of
        the target.  Both arguments must be summand representatives.
        """
        lam, mu = tuple(lam), tuple(mu)
        for t in (lam, mu):
            if not self.is_summand(t):
                raise ValueError(f"{t} does not index a summand")
        n = self.orbit_modulus
        if n is None:
            return int(interlaces(lam, mu))
        lo = -((mu[0] - lam[0]) // n)
        hi = (lam[1] - mu[0]) // n
        return sum(1 for k in range(lo, hi + 1) if interlaces(lam, tuple(x + k * n for x in mu)))

    @property
    def has_global_dimension_d(self) -> bool:
        """Families whose nonprojective summands have projective dimension exactly d."""
        return self.spec.family in ("linear-a", "window")

    def top_ext_formula(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        """Closed-form dim of the degree-d extension space (hereditary-type families only)."""
        if not self.has_global_dimension_d:
            raise ValueError("top-degree formula only applies to the unrestricted families")
        shifted = translate_tuple(lam, 1)
        if not self.is_summand(shifted):
            return 0
        return int(interlaces(tuple(mu), shifted))

    def interval_support(self, lam: Sequence[int]) -> dict[IntTuple, list[int]]:
        """Support of the interval module at lam: vertex -> ambient shift list.

        The support box runs from the first d entries to the last d entries
        of lam.  For orbit families each box tuple is recorded under its
        canonical representative together with its shift.
        """
        lam = tuple(lam)
        if len(lam) != self.d + 1:
            raise ValueError(f"expected a {self.d + 1}-tuple")
        lo, hi = lam[:-1], lam[1:]
        support: dict[IntTuple, list[int]] = {}
        for t in box_interval(lo, hi):
            if self.orbit_modulus is None:
                rep, s = t, 0
            else:
                rep, s = canonical_orbit_rep(t, self.orbit_modulus)
            if rep in self._vset:
                support.setdefault(rep, []).append(s)
        for shifts in support.values():
            shifts.sort()
        return support

    # ------------------------------------------------------------------ misc

    def vertex_label(self, v: Sequence[int]) -> str:
        return label(v)

    def opposite(self) -> "OppositeAlgebra":
        if self._op is None:
            self._op = OppositeAlgebra(self)
        return self._op

    def __repr__(self) -> str:
        return f"PresentedAlgebra({self.spec})"


class OppositeAlgebra:
    """The same vertices with all basis morphisms formally reversed."""

    def __init__(self, base):
        self.base = base
        self.spec = base.spec
        self.d = base.d
        self.orbit_modulus = base.orbit_modulus
        self.vertices = base.vertices
        self._vset = frozenset(base.vertices)
        self._arrows: tuple[Arrow, ...] | None = None
        self._arrows_from: dict[IntTuple, tuple[Arrow, ...]] | None = None
        self._arrows_into: dict[IntTuple, tuple[Arrow, ...]] | None = None
        self._factor_cache: dict[BasisElt, list[BasisElt]] = {}

    @staticmethod
    def _flip(b: BasisElt) -> BasisElt:
        return BasisElt(b.dst, b.src, -b.shift)

    def is_vertex(self, v) -> bool:
        return tuple(v) in self._vset

    def require_vertex(self, v):
        return self.base.require_vertex(v)

    def hom_basis(self, v, w) -> tuple[BasisElt, ...]:
        return tuple(self._flip(b) for b in self.base.hom_basis(tuple(w), tuple(v)))

    def hom_dim(self, v, w) -> int:
        return self.base.hom_dim(tuple(w), tuple(v))

    def identity(self, v) -> BasisElt:
        return self.base.identity(v)

    def compose(self, f: BasisElt, g: BasisElt) -> BasisElt | None:
        if f.dst != g.src:
            raise ValueError(f"non-composable pair {f} , {g}")
        res = self.base.compose(self._flip(g), self._flip(f))
        return None if res is None else self._flip(res)

    def path_length(self, b: BasisElt) -> int:
        return self.base.path_length(self._flip(b))

    def arrows(self) -> tuple[Arrow, ...]:
        if self._arrows is None:
            self._arrows = tuple(
                sorted(Arrow(a.dst, a.direction, a.src, -a.shift) for a in self.base.arrows())
            )
        return self._arrows

    def arrows_from(self, v) -> tuple[Arrow, ...]:
        if self._arrows_from is None:
            table: dict[IntTuple, list[Arrow]] = {u: [] for u in self.vertices}
            for a in self.arrows():
                table[a.src].append(a)
            self._arrows_from = {u: tuple(r) for u, r in table.items()}
        return self._arrows_from[tuple(v)]

    def arrows_into(self, v) -> tuple[Arrow, ...]:
        if self._arrows_into is None:
            table: dict[IntTuple, list[Arrow]] = {u: [] for u in self.vertices}
            for a in self.arrows():
                table[a.dst].append(a)
            self._arrows_into = {u: tuple(r) for u, r in table.items()}
        return self._arrows_into[tuple(v)]

    def all_basis(self) -> list[BasisElt]:
        return [self._flip(b) for b in self.base.all_basis()]

    def algebra_dimension(self) -> int:
        return self.base.algebra_dimension()

    def vertex_label(self, v) -> str:
        return label(v)

    def opposite(self):
        return self.base

    def __repr__(self) -> str:
        return f"Opposite({self.base!r})"


def build(spec: AlgebraSpec) -> PresentedAlgebra:
    """Construct the presented algebra of a validated spec."""
    alg = PresentedAlgebra(spec)
    if not alg.vertices:
        raise ValueError(f"spec {spec} produces an empty vertex set")
    return alg


def factor_into_arrows(alg, b: BasisElt) -> list[BasisElt]:
    """Factor a basis morphism into a composable chain of arrow morphisms."""
    cache = alg._factor_cache
    if b in cache:
        return cache[b]
    if b.src == b.dst and b.shift == 0:
        cache[b] = []
        return []
    for a in alg.arrows_from(b.src):
        if a.elt == b:
            cache[b] = [a.elt]
            return [a.elt]
        for g in alg.hom_basis(a.dst, b.dst):
            if g.shift == b.shift - a.shift and alg.compose(a.elt, g) == b:
                chain = [a.elt] + factor_into_arrows(alg, g)
                cache[b] = chain
                return chain
    raise ValueError(f"basis morphism {b} does not factor through any arrow")


# ---------------------------------------------------------------------- relations


def commutation_relations(alg) -> list[dict]:
    """Commutativity relation instances, with missing routes recording zero relations.

    Each record lists the routes (as arrow pairs) that exist in the quiver.
    Two routes mean an honest commutativity relation; a single route means
    the corresponding composite is a zero relation.
    """
    out = []
    for v in alg.vertices:
        from_v = {a.direction: a for a in alg.arrows_from(v)}
        for i in range(alg.d):
            for j in range(i + 1, alg.d):
                routes = []
                ai, aj = from_v.get(i), from_v.get(j)
                if ai is not None:
                    nxt = {a.direction: a for a in alg.arrows_from(ai.dst)}
                    if j in nxt:
                        routes.append((ai, nxt[j]))
                if aj is not None:
                    nxt = {a.direction: a for a in alg.arrows_from(aj.dst)}
                    if i in nxt:
                        routes.append((aj, nxt[i]))
                if routes:
                    out.append({"vertex": v, "i": i, "j": j, "routes": routes})
    return out


def minimal_zero_relations(alg) -> list[list[Arrow]]:
    """Monomial zero relations: arrow chains that vanish but whose proper tails survive.

    Together with the commutativity instances these present the algebra
    (checked against the basis predicate by the graded comparison in the
    test-suite for desk-size instances).
    """
    out = []
    for g in sorted(alg.all_basis()):
        if g.src == g.dst and g.shift == 0:
            continue
        chain = factor_into_arrows(alg, g)
        arrows_by_elt = {a.elt: a for a in alg.arrows()}
        for a in alg.arrows_from(g.dst):
            if alg.compose(g, a.elt) is not None:
                continue
            if len(chain) == 1:
                tail_ok = True
            else:
                tail = alg.hom_basis(chain[0].dst, g.dst)
                tail_elt = next(t for t in tail if alg.compose(chain[0], t) == g)
                tail_ok = alg.compose(tail_elt, a.elt) is not None
            if tail_ok:
                out.append([arrows_by_elt[e] for e in chain] + [a])
    return out


# ---------------------------------------------------------------------- exports


def export_dot(alg) -> str:
    lines = ["digraph quiver {"]
    for v in alg.vertices:
        lines.append(f'  "{label(v)}";')
    for a in alg.arrows():
        attr = f'label="a{a.direction + 1}"'
        if a.shift:
            attr += f', taillabel="{a.shift:+d}"'
        lines.append(f'  "{label(a.src)}" -> "{label(a.dst)}" [{attr}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _qpa_arrow_name(a: Arrow) -> str:
    core = "_".join(str(x).replace("-", "m") for x in a.src)
    name = f"a{a.direction + 1}_{core}"
    if a.shift:
        name += f"_s{str(a.shift).replace('-', 'm')}"
    return name


def export_qpa(alg) -> str:
    """A GAP/QPA script building the quiver and the relation ideal.

    QPA composes paths left to right, so a route (first, second) is emitted
    as ``first * second``.
    """
    idx = {v: i + 1 for i, v in enumerate(alg.vertices)}
    arrows = alg.arrows()
    arrow_specs = ", ".join(f'[{idx[a.src]},{idx[a.dst]},"{_qpa_arrow_name(a)}"]' for a in arrows)
    lines = [
        f"quiver := Quiver({len(alg.vertices)}, [{arrow_specs}]);",
        "kQ := PathAlgebra(Rationals, quiver);",
        "gens := GeneratorsOfAlgebra(kQ);",
    ]
    for k, a in enumerate(arrows):
        lines.append(f"{_qpa_arrow_name(a)} := gens[{len(alg.vertices) + k + 1}];")
    rels = []
    for rec in commutation_relations(alg):
        routes = rec["routes"]
        words = [f"{_qpa_arrow_name(r[0])}*{_qpa_arrow_name(r[1])}" for r in routes]
        rels.append(" - ".join(words) if len(words) == 2 else words[0])
    for chain in minimal_zero_relations(alg):
        if len(chain) == 2 and chain[0].direction != chain[1].direction:
            continue  # mixed length-2 zeros already arise from single-route records
        rels.append("*".join(_qpa_arrow_name(a) for a in chain))
    body = ",\n  ".join(rels) if rels else ""
    lines.append(f"relations := [\n  {body}\n];")
    lines.append("A := kQ/Ideal(kQ, relations);")
    return "\n".join(lines) + "\n"


def export_json(alg) -> str:
    payload = {
        "family": alg.spec.family,
        "params": alg.spec.describe(),
        "orbit_modulus": alg.orbit_modulus,
        "vertices": [list(v) for v in alg.vertices],
        "arrows": [
            {"source": list(a.src), "i": a.direction + 1, "target": list(a.dst), "shift": a.shift}
            for a in alg.arrows()
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def import_json(text: str) -> PresentedAlgebra:
    payload = json.loads(text)
    alg = build(AlgebraSpec.from_describe(payload["params"]))
    got = [list(v) for v in alg.vertices]
    if got != payload["vertices"]:
        raise ValueError("vertex set mismatch on import")
    return alg


# ---------------------------------------------------------------------- quivers with relations


class QArrow(NamedTuple):
    aid: int
    src: object
    dst: object


class QRelation(NamedTuple):
    src: object
    dst: object
    degree: int
    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]  # (coefficient, arrow-id path)


class GradedCapExceeded(RuntimeError):
    pass


class QuiverWithRelations:
    """A quiver with homogeneous path relations, and its graded Hom dimensions.

    ``graded_hom_dims`` computes dim of every graded piece of the quotient of
    the path algebra by the two-sided ideal the relations generate, degree by
    degree: new relations enter only through their last two slots once lower
    degrees are fixed, so each step is a small exact cokernel.
    """

    def __init__(self, vertices: Iterable, arrows: list[QArrow], relations: list[QRelation]):
        self.vertices = tuple(vertices)
        self.arrows = tuple(arrows)
        self.relations = tuple(relations)
        self._into: dict[object, list[QArrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            self._into[a.dst].append(a)

    def graded_hom_dims(self, dim_cap: int = 64, deg_cap: int = 256) -> dict[tuple, dict[int, int]]:
        dims: dict[tuple, dict[int, int]] = {}
        for v in self.vertices:
            for (u, m), k in self._graded_from(v, dim_cap, deg_cap).items():
                if k:
                    dims.setdefault((v, u), {})[m] = k
        return dims

    def _graded_from(self, v, dim_cap: int, deg_cap: int) -> dict[tuple, int]:
        basis_dim: dict[object, int] = {u: 0 for u in self.vertices}
        basis_dim[v] = 1
        history: list[dict[object, int]] = [dict(basis_dim)]
        # mult[m][aid]: Mat sending degree-m classes at a.src to degree-(m+1) classes at a.dst
        mult: list[dict[int, Mat]] = []
        out: dict[tuple, int] = {(v, 0): 1}
        m = 0
        while True:
            cur = history[m]
            if all(x == 0 for x in cur.values()):
                break
            if m >= deg_cap:
                raise GradedCapExceeded(f"degree cap {deg_cap} exceeded from source {v}")
            step_mult: dict[int, Mat] = {}
            nxt: dict[object, int] = {u: 0 for u in self.vertices}
            for u in self.vertices:
                inc = [a for a in self._into[u] if cur[a.src] > 0]
                if not inc:
                    continue
                offsets: dict[int, int] = {}
                total = 0
                for a in inc:
                    offsets[a.aid] = total
                    total += cur[a.src]
                rel_cols: list[list[Fraction]] = []
                for rel in self.relations:
                    if rel.dst != u or rel.degree > m + 1:
                        continue
                    src_deg = m + 1 - rel.degree
                    src_dim = history[src_deg].get(rel.src, 0)
                    if src_dim == 0:
                        continue
                    for col in range(src_dim):
                        vecs: dict[object, list[Fraction]] = {}
                        acc = [Fraction(0)] * total
                        ok_any = False
                        for coeff, path in rel.terms:
                            vec = [Fraction(0)] * src_dim
                            vec[col] = Fraction(1)
                            cur_deg = src_deg
                            alive = True
                            for aid in path[:-1]:
                                mat = mult[cur_deg].get(aid)
                                if mat is None or mat.rows == 0:
                                    alive = False
                                    break
                                vec = [
                                    sum(mat.data[r][c] * vec[c] for c in range(mat.cols))
                                    for r in range(mat.rows)
                                ]
                                cur_deg += 1
                            if not alive or all(x == 0 for x in vec):
                                continue
                            last = path[-1]
                            if last not in offsets:
                                continue
                            base = offsets[last]
                            for r, x in enumerate(vec):
                                acc[base + r] += coeff * x
                            ok_any = True
                        if ok_any and any(x != 0 for x in acc):
                            rel_cols.append(acc)
                if rel_cols:
                    smat = Mat([list(row) for row in zip(*rel_cols)], total, len(rel_cols))
                    proj = cokernel_projection(smat)
                else:
                    proj = Mat.identity(total)
                new_dim = proj.rows
                if new_dim > dim_cap:
                    raise GradedCapExceeded(f"dimension cap {dim_cap} exceeded at {(v, u)}")
                nxt[u] = new_dim
                if new_dim:
                    out[(u, m + 1)] = out.get((u, m + 1), 0) + new_dim
                for a in inc:
                    off = offsets[a.aid]
                    block = Mat(
                        [row[off : off + cur[a.src]] for row in proj.data], proj.rows, cur[a.src]
                    )
                    step_mult[a.aid] = block
            mult.append(step_mult)
            history.append(nxt)
            m += 1
        return out


def presentation_quiver(alg) -> QuiverWithRelations:
    """The algebra's quiver together with its emitted relations.

    Matching this quotient's graded dimensions against the basis predicate
    certifies that the exported relation list presents the algebra.
    """
    arrows = []
    aid_of: dict[BasisElt, int] = {}
    for a in alg.arrows():
        qa = QArrow(len(arrows), a.src, a.dst)
        aid_of[a.elt] = qa.aid
        arrows.append(qa)
    relations: list[QRelation] = []
    for rec in commutation_relations(alg):
        terms = []
        sign = Fraction(1)
        for first, second in rec["routes"]:
            terms.append((sign, (aid_of[first.elt], aid_of[second.elt])))
            sign = -sign
        end = rec["routes"][0][1]
        relations.append(QRelation(rec["vertex"], end.dst, 2, tuple(terms)))
    for chain in minimal_zero_relations(alg):
        if len(chain) == 2 and chain[0].direction != chain[1].direction:
            continue  # covered by single-route commutation records
        path = tuple(aid_of[a.elt] for a in chain)
        relations.append(QRelation(chain[0].src, chain[-1].dst, len(chain), ((Fraction(1), path),)))
    return QuiverWithRelations(alg.vertices, arrows, relations)


# ---------------------------------------------------------------------- mesh presentation

MeshVertex = tuple[IntTuple, int]  # (slope tuple of length d, slice)


@dataclass
class MeshPresentation:
    """The slice-and-connecting-arrow presentation on slope coordinates.

    Vertices are pairs (p, s) with p a weakly increasing nonnegative slope
    tuple of length d and s the slice index; they correspond to the
    (d+1)-tuples of the standard presentation via ``mesh_from_coordinates``.
    Arrows: b_1..b_d move within a slice (p -> p + e_i), the connecting
    arrow b_0 drops all slopes by one and advances the slice, and exists
    exactly when p_1 > 0.  Relations: slice commutators and the mixed
    commutators exchanging b_0 with each b_j, both with the usual zero
    conventions at missing arrows.
    """

    d: int
    bound: int | None
    window: tuple[int, int]
    vertices: tuple[MeshVertex, ...]
    quiver: QuiverWithRelations
    arrow_index: dict[tuple[MeshVertex, int], QArrow]

    def to_standard(self, v: MeshVertex) -> IntTuple:
        return mesh_from_coordinates(v[0], v[1])

    @staticmethod
    def from_standard(lam: Sequence[int]) -> MeshVertex:
        return tuple(a - lam[0] for a in lam[1:]), lam[0]

    def standard_spec(self) -> AlgebraSpec:
        a, b = self.window
        if self.bound is None:
            return AlgebraSpec.window_spec(a, b, self.d + 1)
        return AlgebraSpec.zl_window(self.bound, a, b, self.d + 1)


def mesh_presentation(d: int, bound: int | None, window: tuple[int, int]) -> MeshPresentation:
    if d < 1:
        raise ValueError("d must be >= 1")
    a, b = window
    if a > b:
        raise ValueError("empty window")
    if bound is not None and bound < 2:
        raise ValueError("bound must be >= 2 when given")
    std_spec = (
        AlgebraSpec.window_spec(a, b, d + 1)
        if bound is None
        else AlgebraSpec.zl_window(bound, a, b, d + 1)
    )
    std = build(std_spec)
    vertices = tuple(sorted(MeshPresentation.from_standard(lam) for lam in std.vertices))
    vset = set(vertices)

    arrows: list[QArrow] = []
    arrow_index: dict[tuple[MeshVertex, int], QArrow] = {}

    def add_arrow(src: MeshVertex, direction: int, dst: MeshVertex) -> None:
        qa = QArrow(len(arrows), src, dst)
        arrows.append(qa)
        arrow_index[(src, direction)] = qa

    for p, s in vertices:
        for i in range(1, d + 1):
            q = p[: i - 1] + (p[i - 1] + 1,) + p[i:]
            if is_os(q) and (q, s) in vset:
                add_arrow((p, s), i, (q, s))
        if p[0] > 0:
            q = tuple(x - 1 for x in p)
            if (q, s + 1) in vset:
                add_arrow((p, s), 0, (q, s + 1))

    def route(src: MeshVertex, first: int, second: int) -> tuple[int, ...] | None:
        a1 = arrow_index.get((src, first))
        if a1 is None:
            return None
        a2 = arrow_index.get((a1.dst, second))
        if a2 is None:
            return None
        return (a1.aid, a2.aid)

    relations: list[QRelation] = []

    def add_relation(src: MeshVertex, r1: tuple[int, ...] | None, r2: tuple[int, ...] | None) -> None:
        terms = []
        if r1 is not None:
            terms.append((Fraction(1), r1))
        if r2 is not None:
            terms.append((Fraction(-1), r2))
        if not terms:
            return
        end_arrow = arrows[terms[0][1][-1]]
        relations.append(QRelation(src, end_arrow.dst, 2, tuple(terms)))

    for v in vertices:
        for i in range(1, d + 1):
            for j in range(i + 1, d + 1):
                add_relation(v, route(v, i, j), route(v, j, i))
        for j in range(1, d + 1):
            add_relation(v, route(v, 0, j), route(v, j, 0))

    quiver = QuiverWithRelations(vertices, arrows, relations)
    return MeshPresentation(d, bound, window, vertices, quiver, arrow_index)
