"""Combinatorial singular curves: chord diagrams, covers, admissible paths.

A curve is stored as its non-singular cover plus a finite matching: a disjoint
union of lines and circles (circumference 1), each with oriented open arcs,
marked rational points, and a pairing of marks lying in oriented arcs. Paths
are homotopy classes of monotone lifts: a class is an endpoint pair plus a
signed displacement (universal-cover coordinates on circles). Constant paths
at singular points are a single canonical value. Higher-valence singularities
(a mark in two pairs) are rejected at parse time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .f2core import DegreeData, GammaContext

Frac = Fraction

def _parse_frac(s) -> Frac:
    if isinstance(s, int):
        return Frac(s)
    if isinstance(s, str):
        return Frac(s)
    raise ValueError(f"expected rational literal, got {s!r}")


def frac_str(x: Frac) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


@dataclass(frozen=True, order=True)
class Arc:
    lo: Frac  # circle: in [0,1); line: any rational (use +-10**9 sentinels for rays)
    hi: Frac
    direction: int  # +1 or -1


@dataclass(frozen=True, order=True)
class Component:
    kind: str  # "line" | "circle"
    arcs: tuple  # oriented open arcs; the complement is unoriented
    full_orient: int = 0  # +-1 if the whole component is oriented

    def __post_init__(self):
        if self.kind not in ("line", "circle"):
            raise ValueError(f"unknown component kind {self.kind}")
        if self.full_orient and self.arcs:
            raise ValueError("give either full_orient or arcs, not both")
        for a in self.arcs:
            if a.lo >= a.hi:
                raise ValueError("empty oriented arc")
            if self.kind == "circle" and not (0 <= a.lo < 1 and a.hi <= 1):
                raise ValueError("circle arcs must sit inside [0,1]")


@dataclass(frozen=True, eq=False)
class ZPoint:
    """A point of the singular curve: regular (component, coordinate) or a
    singular point labelled by its matched-pair index."""

    kind: str  # "reg" | "sing"
    comp: int
    coord: Frac  # reg: coordinate (circles: in [0,1)); sing: pair index

    def key(self):
        k = self.__dict__.get("_key")
        if k is None:
            k = (self.kind, self.comp, self.coord)
            object.__setattr__(self, "_key", k)
        return k

    def __eq__(self, other):
        return isinstance(other, ZPoint) and self.key() == other.key()

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.key())
            object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other):
        return self.key() < other.key()


def reg(comp: int, coord: Frac) -> ZPoint:
    return ZPoint("reg", comp, Frac(coord))

def sing(pair: int) -> ZPoint:
    return ZPoint("sing", -1, Frac(pair))


@dataclass(frozen=True, eq=False)
class PathClass:
    """An admissible homotopy class, stored by its monotone cover lift.

    Non-constant: component, start coordinate, signed displacement (on circles
    the start lies in [0,1) and start+disp is a universal-cover coordinate).
    Constant: ``const_at`` holds the canonical Z-point; comp/start are
    sentinels for singular constants.
    """

    comp: int
    start: Frac
    disp: Frac
    const_at: Optional[ZPoint] = None

    def key(self):
        k = self.__dict__.get("_key")
        if k is None:
            c = self.const_at.key() if self.const_at is not None else ()
            k = (self.comp, self.start, self.disp, c)
            object.__setattr__(self, "_key", k)
        return k

    def __eq__(self, other):
        return isinstance(other, PathClass) and self.key() == other.key()

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.key())
            object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other):
        return self.key() < other.key()

    @property
    def is_const(self) -> bool:
        return self.const_at is not None

    @property
    def end(self) -> Frac:
        return self.start + self.disp

    def inverse(self) -> "PathClass":
        if self.is_const:
            return self
        return path(self.comp, self.end, -self.disp)


def path(comp: int, start: Frac, disp: Frac) -> PathClass:
    start, disp = Frac(start), Frac(disp)
    if disp == 0:
        raise ValueError("use const_path for constants")
    return PathClass(comp, start, disp)


@dataclass(frozen=True, order=True)
class XiEnd:
    """A designated unoriented end of a line component carrying slots.

    Slots sit at ``base + k*side`` for k = 1, 2, ...; ``side`` +1 is the
    positive end (outgoing ξ+), -1 the negative end (incoming ξ-).
    """

    name: str
    comp: int
    side: int
    base: Frac = Frac(0)

    def slot(self, k: int) -> Frac:
        return self.base + self.side * k


@dataclass(frozen=True)
class CurveModel:
    components: tuple  # Component
    mark_ids: tuple  # mark id strings, globally unique
    mark_pos: tuple  # (comp, coord) aligned with mark_ids
    matching: tuple  # pairs (i, j) of indices into mark_ids
    xi_ends: tuple = ()  # XiEnd

    def __post_init__(self):
        seen: dict = {}
        for mid, (c, x) in zip(self.mark_ids, self.mark_pos):
            comp = self.components[c]
            if comp.kind == "circle" and not 0 <= x < 1:
                raise ValueError(f"circle mark {mid} out of [0,1)")
            if (c, x) in seen.values() or mid in seen:
                raise ValueError(f"duplicate mark {mid}")
            seen[mid] = (c, x)
        used: set = set()
        for (i, j) in self.matching:
            for k in (i, j):
                if k in used:
                    raise ValueError("mark in more than one matched pair (n_z > 4 unsupported)")
                used.add(k)
                c, x = self.mark_pos[k]
                if not self._oriented_at(c, x):
                    raise ValueError("matched marks must lie in the oriented open part")
        for xi in self.xi_ends:
            if self.components[xi.comp].kind != "line":
                raise ValueError("ray ends attach to line components")
            first = xi.slot(1)
            for c, x in self.mark_pos:
                if c == xi.comp and (x - first) * xi.side >= 0:
                    raise ValueError("marks at or beyond the first ray slot")
            for a in self.components[xi.comp].arcs:
                for b in (a.lo, a.hi):
                    if (b - first) * xi.side > 0:
                        raise ValueError("oriented arc inside a ray end")
            if self.components[xi.comp].full_orient:
                raise ValueError("ray ends must be unoriented")

    def _oriented_at(self, comp: int, x: Frac) -> bool:
        c = self.components[comp]
        if c.full_orient:
            return True
        return any(a.lo < x < a.hi for a in c.arcs)

    # -- marks and singular points -----------------------------------------

    def mark_index_at(self, comp: int, coord: Frac):
        for k, (c, x) in enumerate(self.mark_pos):
            if c == comp and x == coord:
                return k
        return None

    def pair_of_mark(self, mark_index: int):
        for p, (i, j) in enumerate(self.matching):
            if mark_index in (i, j):
                return p
        return None

    def pair_points(self, pair: int):
        i, j = self.matching[pair]
        return (self.mark_pos[i], self.mark_pos[j])

    def project(self, comp: int, coord: Frac) -> ZPoint:
        """The Z-point under a cover point."""
        if self.components[comp].kind == "circle":
            coord = coord % 1
        k = self.mark_index_at(comp, coord)
        if k is not None:
            p = self.pair_of_mark(k)
            if p is not None:
                return sing(p)
        return reg(comp, coord)

    def lifts(self, z: ZPoint) -> tuple:
        """Cover preimages of a Z-point."""
        if z.kind == "reg":
            return ((z.comp, z.coord),)
        return self.pair_points(int(z.coord))

    def zpoint_of_mark(self, mark_id: str) -> ZPoint:
        k = self.mark_ids.index(mark_id)
        return self.project(*self.mark_pos[k])

    # -- topology -----------------------------------------------------------

    def z_components(self) -> dict:
        """Map cover component -> index of its topological component of Z."""
        parent = list(range(len(self.components)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (i, j) in self.matching:
            a, b = find(self.mark_pos[i][0]), find(self.mark_pos[j][0])
            if a != b:
                parent[b] = a
        return {c: find(c) for c in range(len(self.components))}

    def without_matching(self) -> "CurveModel":
        return CurveModel(self.components, self.mark_ids, self.mark_pos, (), self.xi_ends)

    # -- admissibility -------------------------------------------------------

    def admissible_disp(self, comp: int, start: Frac, disp: Frac) -> bool:
        """Does the monotone lift from start with this displacement respect
        the orientation of every oriented arc it crosses?"""
        if disp == 0:
            return True
        c = self.components[comp]
        d = 1 if disp > 0 else -1
        if c.full_orient:
            return d == c.full_orient
        lo, hi = (start, start + disp) if d > 0 else (start + disp, start)
        for a in c.arcs:
            if a.direction == d:
                continue
            if c.kind == "line":
                if max(lo, a.lo) < min(hi, a.hi):
                    return False
            else:
                if hi - lo >= 1:
                    return False
                k0 = (lo - a.hi).__floor__()
                for k in (k0, k0 + 1, k0 + 2):
                    if max(lo, a.lo + k) < min(hi, a.hi + k):
                        return False
        return True


def const_path(curve: CurveModel, z: ZPoint) -> PathClass:
    if z.kind == "sing":
        return PathClass(-1, Frac(0), Frac(0), z)
    return PathClass(z.comp, z.coord, Frac(0), z)


def cover_path(curve: CurveModel, comp: int, start: Frac, end_lift: Frac) -> PathClass:
    """The class of the monotone lift from start to end_lift (normalized)."""
    start, end_lift = Frac(start), Frac(end_lift)
    if curve.components[comp].kind == "circle":
        shift = start.__floor__()
        start, end_lift = start - shift, end_lift - shift
    if start == end_lift:
        return const_path(curve, curve.project(comp, start))
    return path(comp, start, end_lift - start)


def src(curve: CurveModel, p: PathClass) -> ZPoint:
    if p.is_const:
        return p.const_at
    return curve.project(p.comp, p.start)


def dst(curve: CurveModel, p: PathClass) -> ZPoint:
    if p.is_const:
        return p.const_at
    return curve.project(p.comp, p.end)


def start_lifts(curve: CurveModel, p: PathClass) -> tuple:
    """Cover representatives of the class: one for non-constant paths, one
    per preimage for constants at singular points."""
    if not p.is_const:
        return ((p.comp, p.start, p.disp),)
    return tuple((c, x, Frac(0)) for (c, x) in curve.lifts(p.const_at))


def is_admissible(curve: CurveModel, p: PathClass) -> bool:
    if p.is_const:
        return True
    return curve.admissible_disp(p.comp, p.start, p.disp)


def compose_paths(curve: CurveModel, b: PathClass, a: PathClass) -> Optional[PathClass]:
    """b∘a (a first). None when the composite is not admissible; across a
    singular point the two cover lifts must concatenate at the same preimage."""
    if dst(curve, a) != src(curve, b):
        raise ValueError("endpoint mismatch")
    if a.is_const:
        return b
    if b.is_const:
        return a
    if a.comp != b.comp:
        return None
    end_a = a.end
    if curve.components[a.comp].kind == "circle":
        if (end_a - b.start).denominator != 1:
            return None
    else:
        if end_a != b.start:
            return None
    out = cover_path(curve, a.comp, a.start, end_a + b.disp)
    if out.is_const or is_admissible(curve, out):
        return out
    return None


# ---------------------------------------------------------------------------
# multiplicities and intersections (cover level)


def _count_co(circle: bool, a: Frac, b: Frac, u: Frac) -> int:
    """Lattice translates of u in [a, b) (plain membership on lines)."""
    if not circle:
        return 1 if a <= u < b else 0
    return max(0, (b - u).__ceil__() - (a - u).__ceil__())


def _count_oc(circle: bool, a: Frac, b: Frac, u: Frac) -> int:
    """Lattice translates of u in (a, b]."""
    if not circle:
        return 1 if a < u <= b else 0
    return max(0, (b - u).__floor__() - (a - u).__floor__())


def m_plus_at(curve: CurveModel, lift: tuple, comp: int, u: Frac, side: int) -> int:
    """Departures m^+ through the direction (comp, u, side) of a cover lift."""
    c0, x, d = lift
    if c0 != comp or d == 0:
        return 0
    circle = curve.components[comp].kind == "circle"
    if d > 0:
        return _count_co(circle, x, x + d, u) if side > 0 else 0
    return _count_oc(circle, x + d, x, u) if side < 0 else 0


def m_minus_at(curve: CurveModel, lift: tuple, comp: int, u: Frac, side: int) -> int:
    """Arrivals m^- through the direction (comp, u, side) of a cover lift."""
    c0, x, d = lift
    if c0 != comp or d == 0:
        return 0
    circle = curve.components[comp].kind == "circle"
    if d > 0:
        return _count_oc(circle, x, x + d, u) if side < 0 else 0
    return _count_co(circle, x + d, x, u) if side > 0 else 0


def tangential_multiplicity(curve: CurveModel, comp: int, u: Frac, side: int,
                            sign: str, a: PathClass) -> int:
    """m_c^±: departures (+) / arrivals (-) of the class through a direction."""
    if a.is_const:
        return 0
    fn = m_plus_at if sign == "+" else m_minus_at
    return fn(curve, (a.comp, a.start, a.disp), comp, u, side)


def _affine_crossings(d0: Frac, d1: Frac, circle: bool) -> int:
    """Graph crossings of two monotone affine lifts with endpoint offsets d0, d1."""
    if not circle:
        return 1 if (d0 > 0 > d1) or (d0 < 0 < d1) else 0
    return abs(d1.__floor__() - d0.__floor__())


def i_lifts(curve: CurveModel, l1: tuple, l2: tuple) -> int:
    """Intersection count of two cover lifts (affine-graph minimum)."""
    c1, x1, d1 = l1
    c2, x2, d2 = l2
    if c1 != c2:
        return 0
    circle = curve.components[c1].kind == "circle"
    if d1 == 0 and d2 == 0:
        return 0
    if d1 == 0 or d2 == 0:
        if d1 == 0:
            (c2, x2, d2), (c1, x1, d1) = l1, l2
        # le:m=i against the constant at (c2, x2)
        tot = 0
        for side in (+1, -1):
            tot += m_plus_at(curve, (c1, x1, d1), c2, x2, side)
            tot += m_minus_at(curve, (c1, x1, d1), c2, x2, side)
        same = (lambda a, b: (a - b).denominator == 1) if circle else (lambda a, b: a == b)
        tot += 1 if same(x1, x2) else 0
        tot += 1 if same(x1 + d1, x2) else 0
        assert tot % 2 == 0
        return tot // 2
    return _affine_crossings(x2 - x1, (x2 + d2) - (x1 + d1), circle)


def intersection_count(curve: CurveModel, a: PathClass, b: PathClass) -> int:
    """i(a, b): sum over cover lift pairs; endpoints must be distinct points
    of Z unless one class is constant (le:m=i)."""
    if not (a.is_const or b.is_const):
        if src(curve, a) == src(curve, b) or dst(curve, a) == dst(curve, b):
            raise ValueError("endpoint-equality violation in the non-identity case")
    if a.is_const and b.is_const and a.const_at == b.const_at:
        raise ValueError("identical constants have no finite intersection count")
    return sum(i_lifts(curve, la, lb)
               for la in start_lifts(curve, a) for lb in start_lifts(curve, b))


def intersection_count_sampler(curve: CurveModel, a: PathClass, b: PathClass) -> int:
    """Independent oracle: count roots of the difference of affine lifts.

    Each lift is parametrized affinely on [0,1]; a graph crossing is a root of
    delta(t) = k for an integer k (k = 0 on lines). Interior roots weigh 1,
    endpoint roots 1/2 apiece (they occur only against constant classes)."""
    tot = Frac(0)
    for (c1, x1, d1) in start_lifts(curve, a):
        for (c2, x2, d2) in start_lifts(curve, b):
            if c1 != c2 or (d1 == 0 and d2 == 0):
                continue
            circle = curve.components[c1].kind == "circle"
            delta0 = x2 - x1
            delta1 = (x2 + d2) - (x1 + d1)
            if circle:
                lo = min(delta0, delta1)
                hi = max(delta0, delta1)
                ks = range(lo.__floor__(), hi.__floor__() + 2)
            else:
                ks = (0,)
            slope = delta1 - delta0
            for k in ks:
                if slope == 0:
                    continue
                t = (Frac(k) - delta0) / slope
                if not 0 <= t <= 1:
                    continue
                tot += Frac(1, 2) if t in (0, 1) else Frac(1)
    assert tot.denominator == 1
    return int(tot)


# ---------------------------------------------------------------------------
# connecting classes


@dataclass(frozen=True)
class Connector:
    """An element ζ of I(ζ1, ζ2), kept with its transported class ζ̄."""

    zeta: PathClass
    zbar_disp: Frac  # displacement of ζ̄ = ζ2 ∘ ζ ∘ ζ1^{-1}

    def key(self):
        return (self.zeta.key(), self.zbar_disp)

    def __lt__(self, other):
        return self.key() < other.key()


def connectors(curve: CurveModel, a: PathClass, b: PathClass) -> list:
    """I(a, b): classes ζ: a(0) -> b(0) with ζ and ζ̄ = b∘ζ∘a^{-1} of opposite
    orientation, enumerated on cover lifts (smoothness is automatic there).

    With displacements d1, d2 of the lifts and Δ = d1 - d2, the opposite
    orientation condition pins the connector displacement e strictly between
    0 and Δ (so |I(a,b)| = i(a,b), matching the inversion count)."""
    out = []
    for (c1, x1, d1) in start_lifts(curve, a):
        for (c2, x2, d2) in start_lifts(curve, b):
            if c1 != c2:
                continue
            circle = curve.components[c1].kind == "circle"
            delta = d1 - d2
            lo, hi = (Frac(0), delta) if delta > 0 else (delta, Frac(0))
            frac = x2 - x1
            if circle:
                k0 = (lo - frac).__ceil__()
                cands = []
                k = k0
                while frac + k < hi:
                    if frac + k > lo:
                        cands.append(frac + k)
                    k += 1
            else:
                cands = [frac] if lo < frac < hi else []
            for e in cands:
                out.append(Connector(cover_path(curve, c1, x1, x1 + e), e + d2 - d1))
    return sorted(out)


def connecting_classes(curve: CurveModel, a: PathClass, b: PathClass) -> list:
    """I(a,b) ∪ I(b,a): both directions, so the count is 2·i(a,b)."""
    return sorted(c.zeta for c in connectors(curve, a, b)) + \
        sorted(c.zeta for c in connectors(curve, b, a))


# ---------------------------------------------------------------------------
# grading context over a curve


class GammaZ(GammaContext):
    """Γ_{Z_exc^+}(Z) arithmetic over a fixed finite node set per component.

    R-part keys: ("arc", comp, k) for the k-th arc between consecutive nodes
    (cyclic on circles). L-part keys: ("e", comp, coord) for the increasing
    direction at a node; the decreasing direction is its negative. Folding
    rewrites directions at singular points as half a component class.
    """

    def __init__(self, curve: CurveModel, nodes: dict):
        self.curve = curve
        self.nodes = {c: tuple(sorted(set(v))) for c, v in nodes.items()}
        self.zcomp = curve.z_components()

    @staticmethod
    def for_points(curve: CurveModel, points) -> "GammaZ":
        nodes: dict = {}
        for (c, x) in points:
            nodes.setdefault(c, set()).add(x)
        return GammaZ(curve, {c: tuple(v) for c, v in nodes.items()})

    # -- chains --------------------------------------------------------------

    def arcs_of(self, comp: int) -> list:
        ns = self.nodes.get(comp, ())
        circle = self.curve.components[comp].kind == "circle"
        if circle:
            return [(ns[k], ns[(k + 1) % len(ns)] + (1 if k == len(ns) - 1 else 0))
                    for k in range(len(ns))]
        return [(ns[k], ns[k + 1]) for k in range(len(ns) - 1)]

    def rpart_of_lift(self, lift: tuple) -> dict:
        comp, x, d = lift
        if d == 0:
            return {}
        out = {}
        circle = self.curve.components[comp].kind == "circle"
        ns = self.nodes.get(comp, ())
        for endpoint in (x, x + d):
            e = endpoint % 1 if circle else endpoint
            if e not in ns:
                raise ValueError(f"path endpoint {e} is not a node of component {comp}")
        lo, hi = (x, x + d) if d > 0 else (x + d, x)
        sgn = 1 if d > 0 else -1
        for k, (a, b) in enumerate(self.arcs_of(comp)):
            if circle:
                cnt = max(0, (hi - b).__floor__() - (lo - a).__ceil__() + 1)
                # count integer shifts t with lo <= a+t and b+t <= hi
            else:
                cnt = 1 if lo <= a and b <= hi else 0
            if cnt:
                out[("arc", comp, k)] = out.get(("arc", comp, k), 0) + sgn * cnt
        return out

    def rpart_of_path(self, p: PathClass) -> dict:
        if p.is_const:
            return {}
        return self.rpart_of_lift((p.comp, p.start, p.disp))

    # -- m_c from a chain ----------------------------------------------------

    def _weights_at(self, r: dict, comp: int, u: Frac):
        """(weight of arc left of u, weight of arc right of u)."""
        ns = self.nodes.get(comp, ())
        arcs = self.arcs_of(comp)
        circle = self.curve.components[comp].kind == "circle"
        k = ns.index(u)
        wr = r.get(("arc", comp, k), 0) if k < len(arcs) else 0
        if circle:
            wl = r.get(("arc", comp, (k - 1) % len(ns)), 0)
        else:
            wl = r.get(("arc", comp, k - 1), 0) if k > 0 else 0
        return wl, wr

    def m_dir(self, r: dict, comp: int, u: Frac, side: int) -> int:
        wl, wr = self._weights_at(r, comp, u)
        return wr if side > 0 else -wl

    # -- pairing and folding ---------------------------------------------------

    def pair(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for comp, ns in self.nodes.items():
            for u in ns:
                wl_b, wr_b = self._weights_at(b, comp, u)
                jump = wr_b - wl_b
                if not jump:
                    continue
                wl_a, wr_a = self._weights_at(a, comp, u)
                v = -(wl_a + wr_a) * jump
                if v:
                    key = ("e", comp, u)
                    out[key] = out.get(key, 0) + v
        return out

    def _exc_direction(self, comp: int, u: Frac):
        """The positive (departure) direction at a matched mark, else None."""
        k = self.curve.mark_index_at(comp, u)
        if k is None or self.curve.pair_of_mark(k) is None:
            return None
        c = self.curve.components[comp]
        if c.full_orient:
            return c.full_orient
        for a in c.arcs:
            if a.lo < u < a.hi:
                return a.direction
        raise AssertionError("matched mark outside the oriented part")

    def fold(self, l: dict):
        mas: dict = {}
        rest: dict = {}
        for (tag, comp, u), v in l.items():
            d = self._exc_direction(comp, u)
            if d is None:
                rest[(tag, comp, u)] = rest.get((tag, comp, u), 0) + v
            else:
                omega = self.zcomp[comp]
                mas[omega] = mas.get(omega, 0) + v * d
        return mas, {k: v for k, v in rest.items() if v}

    def omega(self, comp: int) -> int:
        return self.zcomp[comp]


def diagram_from_json(text: str) -> CurveModel:
    """Strict parser for the chord-diagram file format."""
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("top level must be an object")
    allowed = {"components", "matching", "rayEnds"}
    if set(data) - allowed:
        raise ValueError(f"unknown keys: {sorted(set(data) - allowed)}")
    comps = []
    mark_ids = []
    mark_pos = []
    comp_index = {}
    for cd in data.get("components", []):
        keys = set(cd) - {"id", "kind", "orientation", "arcs", "marks"}
        if keys:
            raise ValueError(f"unknown component keys: {sorted(keys)}")
        kind = cd.get("kind")
        if kind not in ("interval", "circle"):
            raise ValueError(f"component kind must be interval|circle, got {kind!r}")
        kind = "line" if kind == "interval" else "circle"
        orientation = cd.get("orientation", "none")
        arcs = []
        full = 0
        if orientation in ("+", "-"):
            full = 1 if orientation == "+" else -1
        elif orientation == "none":
            full = 0
        else:
            raise ValueError(f"orientation must be +|-|none, got {orientation!r}")
        for ad in cd.get("arcs", []):
            if set(ad) - {"from", "to", "dir"}:
                raise ValueError("unknown arc keys")
            d = {"+": 1, "-": -1}.get(ad.get("dir"))
            if d is None:
                raise ValueError("arc dir must be +|-")
            arcs.append(Arc(_parse_frac(ad["from"]), _parse_frac(ad["to"]), d))
        idx = len(comps)
        comp_index[cd.get("id", str(idx))] = idx
        comps.append(Component(kind, tuple(sorted(arcs)), full))
        for md in cd.get("marks", []):
            if set(md) - {"id", "at"}:
                raise ValueError("unknown mark keys")
            mark_ids.append(str(md["id"]))
            mark_pos.append((idx, _parse_frac(md["at"])))
    matching = []
    for pair in data.get("matching", []):
        if len(pair) != 2:
            raise ValueError("matching entries are pairs of mark ids")
        a, b = (mark_ids.index(str(pair[0])), mark_ids.index(str(pair[1])))
        matching.append((min(a, b), max(a, b)))
    rays = []
    for rd in data.get("rayEnds", []):
        if set(rd) - {"id", "component", "end", "base"}:
            raise ValueError("unknown rayEnd keys")
        side = {"+": 1, "-": -1}.get(rd.get("end"))
        if side is None:
            raise ValueError("rayEnd end must be +|-")
        rays.append(XiEnd(str(rd["id"]), comp_index[str(rd["component"])], side,
                          _parse_frac(rd.get("base", 0))))
    return CurveModel(tuple(comps), tuple(mark_ids), tuple(mark_pos),
                      tuple(sorted(set(matching))), tuple(sorted(rays)))


def diagram_to_json(curve: CurveModel) -> str:
    comps = []
    for idx, c in enumerate(curve.components):
        cd: dict = {"id": f"c{idx}", "kind": "interval" if c.kind == "line" else "circle"}
        if c.full_orient:
            cd["orientation"] = "+" if c.full_orient > 0 else "-"
        elif c.arcs:
            cd["arcs"] = [{"from": frac_str(a.lo), "to": frac_str(a.hi),
                           "dir": "+" if a.direction > 0 else "-"} for a in c.arcs]
        cd["marks"] = [{"id": mid, "at": frac_str(x)}
                       for mid, (cc, x) in zip(curve.mark_ids, curve.mark_pos) if cc == idx]
        comps.append(cd)
    return json.dumps({
        "components": comps,
        "matching": [[curve.mark_ids[i], curve.mark_ids[j]] for (i, j) in curve.matching],
        "rayEnds": [{"id": r.name, "component": f"c{r.comp}",
                     "end": "+" if r.side > 0 else "-", "base": frac_str(r.base)}
                    for r in curve.xi_ends],
    }, indent=1, sort_keys=True)


# ---------------------------------------------------------------------------
# class enumeration


def admissible_classes(curve: CurveModel, z1: ZPoint, z2: ZPoint, winding: int) -> list:
    """All admissible classes z1 -> z2 within the winding bound.

    On circles the classes kept are those whose lift displacement d satisfies
    |d| <= winding + fractional offset (at most ``winding`` full turns).
    """
    out = []
    if z1 == z2:
        out.append(const_path(curve, z1))
    for (c1, x1) in curve.lifts(z1):
        for (c2, x2) in curve.lifts(z2):
            if c1 != c2:
                continue
            circle = curve.components[c1].kind == "circle"
            if circle:
                base = (x2 - x1) - (x2 - x1).__floor__()
                disps = [base + k for k in range(-winding - 1, winding + 1)
                         if base + k != 0 and abs(base + k) < winding + 1]
            else:
                disps = [x2 - x1] if x2 != x1 else []
            for d in disps:
                if curve.admissible_disp(c1, x1, d):
                    out.append(path(c1, x1, d))
    return sorted(set(out), key=lambda p: p.key())
