"""Forbidden odd-cycle families, their degree thresholds, and verdicts.

For a family with shortest missing odd cycle C_{2ell+1} and longest member
C_{2k+1}, a family-free graph with minimum degree above
``max(n / (2(2ell+1)), 2n / (2k+3))`` is bipartite, and at equality the only
non-bipartite graph is BC_{2ell+1}(n) or C_{2k+3}(n/(2k+3)), whichever term is
larger.  Small n is outside the proven range except for families containing
every odd cycle up to their maximum; see :attr:`FamilyProfile.unconditional`.

All comparisons are exact: ``delta * den`` against ``num * n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cycles import has_cycle_of_length, shortest_odd_cycle
from .graph import Graph, is_bipartite, min_degree
from .proofkit import recognize_bc_graph, recognize_cycle_blowup


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class OddFamily:
    lengths: frozenset[int]

    def __init__(self, lengths):
        lengths = frozenset(int(x) for x in lengths)
        if not lengths:
            raise FamilyError("an odd-cycle family must be nonempty")
        bad = sorted(x for x in lengths if x < 3 or x % 2 == 0)
        if bad:
            raise FamilyError(f"family members must be odd and >= 3, got {bad}")
        object.__setattr__(self, "lengths", lengths)

    @classmethod
    def parse(cls, text: str) -> OddFamily:
        try:
            return cls(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            if isinstance(exc, FamilyError):
                raise
            raise FamilyError(f"cannot parse family {text!r}") from None

    def __str__(self) -> str:
        return ",".join(str(x) for x in sorted(self.lengths))

    def reduced(self) -> OddFamily:
        """C_3, ..., C_{2ell-1} together with C_{2k+1}."""
        p = family_profile(self)
        return OddFamily([2 * j + 1 for j in range(1, p.ell)] + [2 * p.k + 1])


class Regime(str, enum.Enum):
    PREFIX_COMPLETE = "prefix-complete"
    ELL_DOMINANT = "ell-dominant"
    K_DOMINANT = "k-dominant"
    TIE = "tie"


def regime_for(ell: int, k: int) -> Regime:
    if ell > k:
        return Regime.PREFIX_COMPLETE
    bc_term = Fraction(1, 2 * (2 * ell + 1))
    blowup_term = Fraction(2, 2 * k + 3)
    if bc_term > blowup_term:
        return Regime.ELL_DOMINANT
    if bc_term < blowup_term:
        return Regime.K_DOMINANT
    return Regime.TIE


@dataclass(frozen=True)
class FamilyProfile:
    ell: int
    k: int
    regime: Regime

    @property
    def unconditional(self) -> bool:
        """True when the bipartiteness claim holds for every n (the prefix-complete case)."""
        return self.regime is Regime.PREFIX_COMPLETE


def family_profile(fam: OddFamily) -> FamilyProfile:
    ell = 1
    while 2 * ell + 1 in fam.lengths:
        ell += 1
    k = (max(fam.lengths) - 1) // 2
    return FamilyProfile(ell, k, regime_for(ell, k))


def degree_threshold(profile: FamilyProfile) -> Fraction:
    """Coefficient c with threshold c * n, as an exact fraction."""
    blowup_term = Fraction(2, 2 * profile.k + 3)
    if profile.regime is Regime.PREFIX_COMPLETE:
        return blowup_term
    return max(Fraction(1, 2 * (2 * profile.ell + 1)), blowup_term)


def find_forbidden_cycle(g: Graph, fam: OddFamily) -> list[int] | None:
    """A cycle of ``g`` whose length lies in ``fam``, shortest lengths first."""
    if 3 in fam.lengths:
        rows = g.rows
        for u, v in g.edges():
            common = rows[u] & rows[v]
            if common:
                return [u, v, (common & -common).bit_length() - 1]
    found = shortest_odd_cycle(g)
    if found is None:
        return None
    girth, witness = found
    for length in sorted(fam.lengths):
        if length < girth:
            continue
        if length == girth:
            return witness
        cycle = has_cycle_of_length(g, length)
        if cycle is not None:
            return cycle
    return None


def is_family_free(g: Graph, fam: OddFamily) -> bool:
    return find_forbidden_cycle(g, fam) is None


class Verdict(str, enum.Enum):
    NOT_APPLICABLE = "not-applicable"
    BIPARTITE_CONSISTENT = "bipartite-consistent"
    EXTREMAL_MATCH_BC = "extremal-match-BC"
    EXTREMAL_MATCH_BLOWUP = "extremal-match-blowup"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass
class Classification:
    verdict: Verdict
    reason: str
    min_degree: int | None = None
    relation: str | None = None  # "above", "equal" or "below" the threshold
    witness: list[int] | None = None
    reduced: Verdict | None = None  # verdict for the reduced family, when it differs from fam

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value, "reason": self.reason}
        if self.min_degree is not None:
            out["minDegree"] = self.min_degree
        if self.relation is not None:
            out["relation"] = self.relation
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reduced is not None:
            out["reducedVerdict"] = self.reduced.value
        return out


def degree_relation(delta: int, n: int, threshold: Fraction) -> str:
    lhs = delta * threshold.denominator
    rhs = threshold.numerator * n
    return "above" if lhs > rhs else "equal" if lhs == rhs else "below"


# Both recognizers characterize their family exactly, so a match fixes the
# graph up to isomorphism and no canonical labelling is needed (it is slow on
# twin-heavy blow-ups).  The tests cross-check against are_isomorphic.


def _matches_bc(g: Graph, ell: int) -> bool:
    if g.n % (2 * (2 * ell + 1)):
        return False
    return recognize_bc_graph(g) == (ell, g.n // (2 * (2 * ell + 1)))


def _matches_blowup(g: Graph, m: int) -> bool:
    if g.n % m:
        return False
    return recognize_cycle_blowup(g) == (m, [g.n // m] * m)


def _classify(g: Graph, fam: OddFamily, profile: FamilyProfile) -> Classification:
    witness = find_forbidden_cycle(g, fam)
    if witness is not None:
        return Classification(Verdict.NOT_APPLICABLE, "forbidden-cycle", witness=witness)
    if g.n == 0 or is_bipartite(g) is not None:
        return Classification(Verdict.BIPARTITE_CONSISTENT, "bipartite")
    delta = min_degree(g)
    relation = degree_relation(delta, g.n, degree_threshold(profile))
    odd = shortest_odd_cycle(g)[1]
    if relation == "below":
        return Classification(Verdict.NOT_APPLICABLE, "below-threshold", delta, relation, odd)
    if relation == "equal":
        regime = profile.regime
        if regime in (Regime.ELL_DOMINANT, Regime.TIE) and _matches_bc(g, profile.ell):
            return Classification(Verdict.EXTREMAL_MATCH_BC, "equality-case", delta, relation)
        if regime is not Regime.ELL_DOMINANT and _matches_blowup(g, 2 * profile.k + 3):
            return Classification(Verdict.EXTREMAL_MATCH_BLOWUP, "equality-case", delta, relation)
        return Classification(Verdict.COUNTEREXAMPLE, "non-extremal-at-equality", delta, relation, odd)
    return Classification(Verdict.COUNTEREXAMPLE, "non-bipartite-above-threshold", delta, relation, odd)


def check_graph_against_theorem(g: Graph, fam: OddFamily) -> Classification:
    """Classify ``g`` against the threshold theorem for ``fam``.

    When ``fam`` differs from its reduced family, the reduced family's
    verdict is attached as ``reduced``.
    """
    result = _classify(g, fam, family_profile(fam))
    red = fam.reduced()
    if red != fam:
        result.reduced = _classify(g, red, family_profile(red)).verdict
    return result
