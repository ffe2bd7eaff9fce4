"""Formal sums over GF(2) and the graded-group arithmetic shared by all modules.

Everything here is exact: coefficients live in GF(2) (a term set with XOR
addition), gradings in a group ``(1/2)Z^components x L x R`` whose half-integer
coordinates are stored doubled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping


class F2Sum:
    """A finite formal sum of basis tokens with coefficients in GF(2).

    Addition is symmetric difference of term sets; the empty sum is zero.
    Tokens must be hashable and totally ordered amongst themselves.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Hashable] = ()):
        acc: set = set()
        for t in terms:
            if t in acc:
                acc.discard(t)
            else:
                acc.add(t)
        self.terms = frozenset(acc)

    @staticmethod
    def zero() -> "F2Sum":
        return F2Sum()

    @staticmethod
    def of(*tokens: Hashable) -> "F2Sum":
        return F2Sum(tokens)

    def __add__(self, other: "F2Sum") -> "F2Sum":
        return F2Sum(self.terms ^ other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, F2Sum) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def map(self, f: Callable[[Hashable], "F2Sum"]) -> "F2Sum":
        """Linear extension of a token-level map ``f: token -> F2Sum``."""
        out = F2Sum()
        for t in self.terms:
            out = out + f(t)
        return out

    def sorted_terms(self) -> list:
        return sorted(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "F2Sum(0)"
        return "F2Sum(" + " + ".join(repr(t) for t in self.sorted_terms()) + ")"


def add(a: F2Sum, b: F2Sum) -> F2Sum:
    """Sum of two GF(2) formal sums (symmetric difference of term sets)."""
    return a + b


def _canon(d: Mapping) -> tuple:
    return tuple(sorted((k, v) for k, v in d.items() if v != 0))


def _merge(*dicts: Mapping) -> dict:
    out: dict = {}
    for d in dicts:
        for k, v in d.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v != 0}


def _neg(d: Mapping) -> dict:
    return {k: -v for k, v in d.items()}


@dataclass(frozen=True)
class DegreeData:
    """An element of the grading group (1/2)Z^{components} x L x R.

    ``maslov`` stores doubled half-integers per component, ``mpart`` integer
    coefficients on chosen orbit representatives of local directions, ``rpart``
    integer multiplicities on reference arcs (plus winding, for circles).
    All three are canonical sorted tuples with zero entries dropped.
    """

    maslov: tuple = ()
    mpart: tuple = ()
    rpart: tuple = ()

    @staticmethod
    def make(maslov2: Mapping = (), mpart: Mapping = (), rpart: Mapping = ()) -> "DegreeData":
        return DegreeData(_canon(dict(maslov2)), _canon(dict(mpart)), _canon(dict(rpart)))

    def maslov_dict(self) -> dict:
        return dict(self.maslov)

    def m_dict(self) -> dict:
        return dict(self.mpart)

    def r_dict(self) -> dict:
        return dict(self.rpart)

    def is_identity(self) -> bool:
        return not (self.maslov or self.mpart or self.rpart)


class GammaContext:
    """Grading-group structure: the pairing on R and the folding of L.

    Subclasses provide the bilinear map ``pair(a, b)`` landing in L (dict of
    orbit-representative directions) and ``fold(l)`` rewriting exceptional
    direction generators as half a component class, returning
    ``(doubled-maslov additions per component, remaining L dict)``.
    """

    def pair(self, a: Mapping, b: Mapping) -> dict:
        raise NotImplementedError

    def fold(self, l: Mapping) -> tuple[dict, dict]:
        return {}, dict(l)

    # -- group operations --------------------------------------------------

    def degree(self, maslov2: Mapping, l: Mapping, r: Mapping) -> DegreeData:
        extra, rest = self.fold(l)
        return DegreeData.make(_merge(dict(maslov2), extra), rest, dict(r))

    def mul(self, g: DegreeData, h: DegreeData) -> DegreeData:
        """Group product ``(m, a)(n, b) = (m + n + <a, b>, a + b)``."""
        corr = self.pair(g.r_dict(), h.r_dict())
        extra, rest = self.fold(corr)
        mas = _merge(g.maslov_dict(), h.maslov_dict(), extra)
        mp = _merge(g.m_dict(), h.m_dict(), rest)
        rp = _merge(g.r_dict(), h.r_dict())
        return DegreeData.make(mas, mp, rp)

    def inv(self, g: DegreeData) -> DegreeData:
        """Inverse: ``(m, a)^{-1} = (-m + <a, a>, -a)``."""
        corr = self.pair(g.r_dict(), g.r_dict())
        extra, rest = self.fold(corr)
        mas = _merge(_neg(g.maslov_dict()), extra)
        mp = _merge(_neg(g.m_dict()), rest)
        return DegreeData.make(mas, mp, _neg(g.r_dict()))


def gamma_mul(ctx: GammaContext, g: DegreeData, h: DegreeData) -> DegreeData:
    return ctx.mul(g, h)


def check_d_squared(basis: Iterable[Hashable], d: Callable[[Hashable], F2Sum]) -> list:
    """Return the tokens x (from ``basis``) with d(d(x)) != 0.

    The image of ``d`` must stay inside ``basis``; an unknown token raises.
    """
    base = set(basis)
    bad = []
    for x in sorted(base):
        dx = d(x)
        for y in dx:
            if y not in base:
                raise ValueError(f"d image leaves the declared basis: {y!r}")
        if dx.map(d):
            bad.append(x)
    return bad
