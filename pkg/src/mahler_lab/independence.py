"""Multiplicative independence of {k, lambda_1, ..., lambda_d}.

Three tiers, chosen by the kind of numbers involved:

* ``exact``: positive rationals. Exponent vectors over a coprime basis of
  all numerators and denominators; independence is an integer kernel
  computation and is decided outright.
* ``quadratic``: numbers in one real quadratic field. An LLL search on
  high-precision logarithms proposes relations with entries at most H and
  each proposal is checked by exact field arithmetic. Without a surviving
  candidate the answer is ``undecided``, together with a lattice bound that
  excludes every relation of height at most H.
* ``bounded``: anything else (isolated algebraic intervals). Same search,
  but candidates cannot be checked exactly, so the result is never
  ``dependent`` or ``independent``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

import mpmath

from .errors import (
    HypothesisUnavailable,
    IncommensurableBases,
    InvalidInput,
    MixedFields,
    NonPositiveElement,
)
from .exact import QuadraticNumber, RealRoot, integer_kernel, lll_reduce
from .exact.lattice import gram_schmidt_norms

DEFAULT_H = 50
DEFAULT_DPS = 60

Number = Union[QuadraticNumber, RealRoot]


def _as_number(x) -> Number:
    if isinstance(x, (QuadraticNumber, RealRoot)):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QuadraticNumber(x, 0, 1)
    raise InvalidInput(f"unsupported element type {type(x).__name__}")


def _is_positive(x: Number) -> bool:
    if isinstance(x, QuadraticNumber):
        return x.sign() > 0
    return x.lo > 0


@dataclass(frozen=True)
class Element:
    """A positive real number with provenance.

    ``weight`` e means the element enters the comparison as ``value^(1/e)``;
    this does not change whether a multiplicative relation exists.
    """

    value: Number
    tag: str = ""
    weight: int = 1

    def to_json(self) -> dict:
        return {"value": self.value.to_json(), "tag": self.tag, "weight": self.weight}


@dataclass(frozen=True)
class RescaleRecord:
    common_base: int
    bases: tuple[int, ...]
    exponents: tuple[int, ...]
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "common_base": self.common_base,
            "bases": list(self.bases),
            "exponents": list(self.exponents),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class MultiplicativeSet:
    base_k: int
    elements: tuple[Element, ...]
    common_base: Optional[RescaleRecord] = None

    def __post_init__(self):
        if not isinstance(self.base_k, int) or self.base_k < 2:
            raise InvalidInput("base_k must be an integer >= 2")
        elems = tuple(e if isinstance(e, Element) else Element(_as_number(e)) for e in self.elements)
        for e in elems:
            if not _is_positive(e.value):
                raise NonPositiveElement(
                    f"element {e.tag or e.value} is not positive; only positive real eigenvalues are supported"
                )
        object.__setattr__(self, "elements", elems)

    @classmethod
    def of(cls, k: int, values: Sequence, tags: Optional[Sequence[str]] = None) -> "MultiplicativeSet":
        tags = list(tags) if tags is not None else [""] * len(values)
        return cls(k, tuple(Element(_as_number(v), t) for v, t in zip(values, tags)))

    def numbers(self) -> list[Number]:
        """k followed by the element values."""
        return [QuadraticNumber(self.base_k, 0, 1)] + [e.value for e in self.elements]

    def to_json(self) -> dict:
        return {
            "k": self.base_k,
            "elements": [e.to_json() for e in self.elements],
            "common_base": None if self.common_base is None else self.common_base.to_json(),
        }


@dataclass(frozen=True)
class IndependenceVerdict:
    status: str  # independent | dependent | undecided
    tier: str  # exact | quadratic | bounded
    relation: Optional[tuple[int, ...]] = None
    search_bound: Optional[int] = None
    precision_used: Optional[int] = None
    certificate: str = ""
    candidates_refuted: int = 0
    margin_certified: bool = False

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "relation": None if self.relation is None else list(self.relation),
            "hypothesis_tier": self.tier,
            "H": self.search_bound,
            "precision": self.precision_used,
            "certificate": self.certificate,
            "candidates_refuted": self.candidates_refuted,
            "margin_certified": self.margin_certified,
        }


# ---------------------------------------------------------------------------
# exact tier
# ---------------------------------------------------------------------------


def coprime_basis(values: Sequence[int]) -> list[int]:
    """Pairwise coprime integers > 1 whose products give every input."""
    basis = sorted({v for v in values if v > 1})
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                a, b = basis[i], basis[j]
                g = gcd(a, b)
                if g > 1:
                    rest = [x for t, x in enumerate(basis) if t not in (i, j)]
                    basis = sorted({x for x in rest + [a // g, b // g, g] if x > 1})
                    changed = True
                    break
            if changed:
                break
    return basis


def _valuations(n: int, basis: Sequence[int]) -> list[int]:
    out = []
    for b in basis:
        e = 0
        while n % b == 0:
            n //= b
            e += 1
        out.append(e)
    if n != 1:
        raise AssertionError("coprime basis does not cover the input")
    return out


def exponent_matrix(numbers: Sequence[Fraction]) -> tuple[list[int], list[list[int]]]:
    """Rows indexed by a coprime basis, columns by the numbers."""
    ints = []
    for x in numbers:
        ints += [x.numerator, x.denominator]
    basis = coprime_basis(ints)
    cols = [
        [a - b for a, b in zip(_valuations(x.numerator, basis), _valuations(x.denominator, basis))]
        for x in numbers
    ]
    rows = [[col[i] for col in cols] for i in range(len(basis))]
    return basis, rows


def relation_holds(numbers: Sequence[Number], relation: Sequence[int]) -> bool:
    """Exact check of prod numbers[j]^relation[j] == 1."""
    acc = QuadraticNumber(1, 0, 1)
    for x, e in zip(numbers, relation):
        if e:
            acc = acc * (x**e)
    return acc == 1


def independence_rational(mset: MultiplicativeSet) -> IndependenceVerdict:
    nums = mset.numbers()
    if not all(isinstance(x, QuadraticNumber) and x.is_rational for x in nums):
        raise InvalidInput("the exact tier needs rational elements")
    fracs = [x.a for x in nums]
    basis, rows = exponent_matrix(fracs)
    kernel = integer_kernel(rows)
    cert = f"exponent matrix over coprime basis {basis}"
    if not kernel:
        return IndependenceVerdict("independent", "exact", certificate=cert + "; integer kernel is trivial")
    rel = tuple(kernel[0])
    if not relation_holds(nums, rel):
        raise AssertionError("kernel vector failed exact verification")
    return IndependenceVerdict("dependent", "exact", rel, certificate=cert + f"; kernel rank {len(kernel)}")


# ---------------------------------------------------------------------------
# search tiers
# ---------------------------------------------------------------------------


def _log(x: Number, dps: int):
    with mpmath.workdps(dps + 10):
        return mpmath.log(x.to_mpf(dps + 10))


def relation_search(numbers: Sequence[Number], H: int, dps: int):
    """LLL candidates for integer relations among log(numbers).

    Returns (candidates, min_gs_norm2, bound2). Every relation with entries at
    most H is a lattice vector of squared length at most ``bound2``; if the
    smallest Gram-Schmidt norm of the reduced basis exceeds it, no such
    relation exists.
    """
    n = len(numbers)
    scale = mpmath.mpf(10) ** (dps - 15)
    with mpmath.workdps(dps + 10):
        col = [int(mpmath.nint(scale * _log(x, dps))) for x in numbers]
    basis = [[int(i == j) for j in range(n)] + [col[i]] for i in range(n)]
    reduced = lll_reduce(basis)
    cands = []
    for b in reduced:
        e = b[:n]
        if any(e) and max(abs(x) for x in e) <= H:
            g = 0
            for x in e:
                g = gcd(g, x)
            e = [x // g for x in e]
            first = next(x for x in e if x)
            cands.append(tuple(e if first > 0 else [-x for x in e]))
    norms = gram_schmidt_norms(reduced)
    # rounding the scaled logs moves the last coordinate by at most n*H/2 (+1 slack)
    bound2 = n * H * H + (Fraction(n * H, 2) + 1) ** 2
    return cands, min(norms), bound2


def _single_field(nums: Sequence[QuadraticNumber]) -> int:
    fields = {x.field() for x in nums} - {1}
    if len(fields) > 1:
        raise MixedFields(f"elements lie in different fields Q(sqrt(D)), D in {sorted(fields)}")
    return fields.pop() if fields else 1


def independence_quadratic(mset: MultiplicativeSet, H: int = DEFAULT_H,
                           dps: int = DEFAULT_DPS) -> IndependenceVerdict:
    nums = mset.numbers()
    if not all(isinstance(x, QuadraticNumber) for x in nums):
        raise InvalidInput("the quadratic tier needs rational or quadratic elements")
    D = _single_field(nums)
    cands, min_norm, bound2 = relation_search(nums, H, dps)
    refuted = 0
    for rel in cands:
        if relation_holds(nums, rel):
            return IndependenceVerdict("dependent", "quadratic", rel, H, dps,
                                       f"relation verified exactly in Q(sqrt({D}))", refuted)
        refuted += 1
    certified = min_norm > bound2
    if certified:
        cert = (f"no relation with max|e_i| <= {H}: every LLL candidate refuted exactly in "
                f"Q(sqrt({D})) and the reduced lattice excludes all such relations "
                f"(min Gram-Schmidt norm^2 {float(min_norm):.3g} > {float(bound2):.3g})")
    else:
        cert = (f"every LLL candidate refuted exactly in Q(sqrt({D})), but the lattice bound "
                f"does not exclude all relations with max|e_i| <= {H}")
    return IndependenceVerdict("undecided", "quadratic", None, H, dps, cert, refuted, certified)


def independence_bounded(mset: MultiplicativeSet, H: int = DEFAULT_H,
                         dps: int = DEFAULT_DPS) -> IndependenceVerdict:
    nums = mset.numbers()
    cands, min_norm, bound2 = relation_search(nums, H, dps)
    if cands:
        rel = cands[0]
        with mpmath.workdps(dps):
            resid = abs(mpmath.fsum(e * _log(x, dps) for e, x in zip(rel, nums)))
        return IndependenceVerdict("undecided", "bounded", None, H, dps,
                                   f"numerical candidate {list(rel)} (|residual| {mpmath.nstr(resid, 3)}) "
                                   "cannot be verified exactly", 0, False)
    certified = min_norm > bound2
    return IndependenceVerdict("undecided", "bounded", None, H, dps,
                               f"no numerical relation with max|e_i| <= {H}", 0, certified)


def decide_independence(mset: MultiplicativeSet, H: int = DEFAULT_H, dps: int = DEFAULT_DPS) -> IndependenceVerdict:
    """Dispatch to the strongest applicable tier."""
    nums = mset.numbers()
    if all(isinstance(x, QuadraticNumber) and x.is_rational for x in nums):
        return independence_rational(mset)
    if all(isinstance(x, QuadraticNumber) for x in nums):
        return independence_quadratic(mset, H, dps)
    return independence_bounded(mset, H, dps)


# ---------------------------------------------------------------------------
# mixed bases
# ---------------------------------------------------------------------------


def perfect_power(n: int) -> tuple[int, int]:
    """(r, t) with n = r^t and t maximal."""
    best = (n, 1)
    for t in range(2, n.bit_length() + 1):
        r = round(n ** (1 / t))
        for c in (r - 1, r, r + 1):
            if c > 1 and c**t == n:
                best = (c, t)
    return best


def rescale_common_base(groups: Sequence[tuple[int, Sequence[Element]]]) -> MultiplicativeSet:
    """Merge element lists attached to bases k_i into one set over k0.

    Each k_i must equal k0^(e_i). An element attached to k_i is replaced by
    its exact e_i-th root when that root lies in the same field; otherwise it
    is kept with weight e_i.
    """
    if not groups:
        raise InvalidInput("nothing to rescale")
    roots = [perfect_power(k) for k, _ in groups]
    radicals = {r for r, _ in roots}
    if len(radicals) != 1:
        raise IncommensurableBases(
            f"bases {[k for k, _ in groups]} are not powers of one common integer"
        )
    r = radicals.pop()
    g = 0
    for _, t in roots:
        g = gcd(g, t)
    k0 = r**g
    exps = tuple(t // g for _, t in roots)
    elems = []
    notes = []
    for (k, group), e in zip(groups, exps):
        for el in group:
            el = el if isinstance(el, Element) else Element(_as_number(el))
            if e == 1:
                elems.append(el)
                continue
            root = el.value.nth_root(e) if isinstance(el.value, QuadraticNumber) else None
            if root is not None:
                elems.append(Element(root, f"{el.tag}^(1/{e})" if el.tag else "", el.weight))
                notes.append(f"{el.value} = ({root})^{e} exactly")
            else:
                elems.append(Element(el.value, el.tag, el.weight * e))
                notes.append(f"{el.value} kept with weight {el.weight * e}")
    record = RescaleRecord(k0, tuple(k for k, _ in groups), exps, tuple(notes))
    return MultiplicativeSet(k0, tuple(elems), record)


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

INDEPENDENT_TEXT = "algebraically independent over C(z), and over C(z)(M)"
CAVEAT_TEXT = "independent (hypothesis numerically certified, exactness caveat recorded)"
INCONCLUSIVE_TEXT = "inconclusive: theorem hypothesis not established"


@dataclass(frozen=True)
class AnalyzedFunction:
    """A function with a certified eigenvalue and/or growth constant."""

    name: str
    k: int
    eigenvalue: Optional[Number] = None  # lambda_F from the Mahler equation
    growth: Optional[Number] = None  # alpha_f from a nonnegative representation
    notes: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class VerdictReport:
    theorem: str
    verdict: str
    conclusion: str
    independence: IndependenceVerdict
    multiplicative_set: MultiplicativeSet
    functions: tuple[str, ...]

    def to_json(self) -> dict:
        out = {
            "status": self.independence.status,
            "relation": None if self.independence.relation is None else list(self.independence.relation),
            "theorem": self.theorem,
            "hypothesis_tier": self.independence.tier,
            "H": self.independence.search_bound,
            "verdict": self.verdict,
            "conclusion": self.conclusion,
            "functions": list(self.functions),
            "independence": self.independence.to_json(),
            "set": self.multiplicative_set.to_json(),
        }
        return out


def verdict_report(functions: Sequence[AnalyzedFunction], H: int = DEFAULT_H,
                   dps: int = DEFAULT_DPS) -> VerdictReport:
    """Turn a list of analysed functions into an algebraic-independence verdict.

    The eigenvalue path ("main") is used when every function has lambda_F;
    otherwise the growth-constant path ("mainreg") when every function has
    alpha_f. The implication only runs one way: a dependent or undecided set
    yields an inconclusive verdict, never a dependence claim about the
    functions.
    """
    if not functions:
        raise InvalidInput("need at least one function")
    if all(f.eigenvalue is not None for f in functions):
        theorem, pick = "main", (lambda f: f.eigenvalue)
    elif all(f.growth is not None for f in functions):
        theorem, pick = "mainreg", (lambda f: f.growth)
    else:
        missing = [f.name for f in functions if f.eigenvalue is None and f.growth is None]
        if missing:
            raise HypothesisUnavailable(f"no certified eigenvalue or growth constant for {missing}")
        theorem, pick = "main+mainreg", (lambda f: f.eigenvalue if f.eigenvalue is not None else f.growth)
    groups: dict[int, list[Element]] = {}
    for f in functions:
        groups.setdefault(f.k, []).append(Element(_as_number(pick(f)), f.name))
    if len(groups) == 1:
        (k, elems), = groups.items()
        mset = MultiplicativeSet(k, tuple(elems))
    else:
        mset = rescale_common_base(sorted(groups.items()))
    ind = decide_independence(mset, H, dps)
    d = len(functions)
    if ind.status == "independent":
        verdict = "independent"
        conclusion = f"{INDEPENDENT_TEXT} (transcendence degree {d})"
    elif ind.status == "undecided" and ind.tier == "quadratic" and ind.margin_certified:
        verdict = CAVEAT_TEXT
        conclusion = f"{INDEPENDENT_TEXT} (transcendence degree {d}), subject to the recorded caveat"
    else:
        verdict = "inconclusive"
        conclusion = INCONCLUSIVE_TEXT
    return VerdictReport(theorem, verdict, conclusion, ind, mset, tuple(f.name for f in functions))


def log_k(x: Number, k: int) -> float:
    return math.log(float(x)) / math.log(k)
