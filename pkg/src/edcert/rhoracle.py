"""Exact decision of small-genus curve actions via branch-data search.

A finite group acts faithfully on a compact Riemann surface of genus g
with quotient orbifold data (h; m_1, ..., m_r) exactly when the
Riemann-Hurwitz identity

    2g - 2 = |G| * (2h - 2 + sum(1 - 1/m_i))

holds and there is a generating vector: elements a_1, b_1, ..., a_h, b_h
and c_1, ..., c_r of G with ord(c_i) = m_i exactly,
prod [a_i, b_i] * prod c_j = 1, generating the whole group.  This module
enumerates all candidate data up to a genus bound and searches vectors
exhaustively, so for groups within its caps it decides "acts on genus <= g"
outright instead of relying on the Hurwitz 84(g-1) shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, WidthExceeded
from .permgroup import PermGroup, StabilizerChain
from .permutation import Permutation

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Signature:
    """Orbifold branch datum: quotient genus and branching periods.

    Periods are normalized to ascending order, so equal multisets compare
    equal.
    """

    orbit_genus: int
    periods: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(sorted(self.periods)))

    def label(self) -> str:
        inner = ",".join(map(str, self.periods)) if self.periods else "-"
        return f"({self.orbit_genus}; {inner})"

    def to_json(self) -> dict:
        return {"orbit_genus": self.orbit_genus, "periods": list(self.periods)}


@dataclass(frozen=True)
class GeneratingVector:
    hyperbolic: tuple[tuple[Permutation, Permutation], ...]
    elliptic: tuple[Permutation, ...]

    def to_json(self) -> dict:
        return {
            "hyperbolic": [[a.cycle_string(), b.cycle_string()] for a, b in self.hyperbolic],
            "elliptic": [c.cycle_string() for c in self.elliptic],
        }


@dataclass(frozen=True)
class OracleVerdict:
    verdict: str  # yes / no / unknown
    genus: int | None = None
    signature: Signature | None = None
    vector: GeneratingVector | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "genus": self.genus,
            "signature": self.signature.to_json() if self.signature else None,
            "vector": self.vector.to_json() if self.vector else None,
            "reason": self.reason,
        }


def rh_genus(order: int, sig: Signature) -> Fraction:
    """Genus forced on the cover by the Riemann-Hurwitz identity (may be a
    non-integer Fraction, in which case the datum is unrealizable)."""
    total = Fraction(2 * sig.orbit_genus - 2)
    for m in sig.periods:
        total += 1 - Fraction(1, m)
    return (order * total + 2) / 2


def _period_choices(group: PermGroup, cap: int) -> list[int]:
    """Divisors >= 2 of element orders: the only admissible periods."""
    divisors: set[int] = set()
    for o in set(group.element_orders(cap)):
        for d in range(2, o + 1):
            if o % d == 0:
                divisors.add(d)
    return sorted(divisors)


def enumerate_signatures(
    group: PermGroup, genus_max: int, caps: Caps = DEFAULT_CAPS
) -> list[tuple[int, Signature]]:
    """All (genus, signature) pairs with genus in [0, genus_max] satisfying
    the Riemann-Hurwitz identity with periods drawn from element orders.

    Output is sorted by (genus, quotient genus, periods) and duplicate-free;
    periods are canonical ascending tuples.
    """
    if group.order > caps.oracle_enumeration:
        raise CapExceeded(
            f"order {group.order} exceeds the oracle enumeration cap {caps.oracle_enumeration}",
            needed=group.order,
            cap=caps.oracle_enumeration,
        )
    order = group.order
    choices = _period_choices(group, caps.oracle_enumeration)
    results: list[tuple[int, Signature]] = []
    # sum(1 - 1/m_i) <= (2*genus_max - 2)/|G| + 2 - 2h, and each term >= 1/2
    h = 0
    while True:
        budget = Fraction(2 * genus_max - 2, order) + 2 - 2 * h
        if budget < 0:
            break

        def emit(h: int, partial: tuple[int, ...], total: Fraction) -> None:
            g2 = order * (2 * h - 2 + total) + 2
            if g2 % 2 == 0 and 0 <= g2 // 2 <= genus_max:
                results.append((int(g2 // 2), Signature(h, partial)))

        def extend(partial: tuple[int, ...], total: Fraction, start: int) -> None:
            emit(h, partial, total)
            for idx in range(start, len(choices)):
                m = choices[idx]
                term = 1 - Fraction(1, m)
                if total + term > budget:
                    break  # larger periods only increase the term
                extend(partial + (m,), total + term, idx)

        extend((), Fraction(0), 0)
        h += 1
    results.sort(key=lambda pair: (pair[0], pair[1].orbit_genus, pair[1].periods))
    return results


def validate_vector(group: PermGroup, sig: Signature, vec: GeneratingVector) -> bool:
    """Independent witness check: exact orders, product one, generation.

    Deliberately recomputes everything from scratch rather than trusting
    the search that produced the vector.
    """
    if len(vec.hyperbolic) != sig.orbit_genus or len(vec.elliptic) != len(sig.periods):
        return False
    if sorted(c.order() for c in vec.elliptic) != sorted(sig.periods):
        return False
    product = Permutation.identity(group.degree)
    for a, b in vec.hyperbolic:
        product = product * a * b * a.inverse() * b.inverse()
    for c in vec.elliptic:
        product = product * c
    if not product.is_identity():
        return False
    everything = [p for ab in vec.hyperbolic for p in ab] + list(vec.elliptic)
    for p in everything:
        if p not in group:
            return False
    chain = StabilizerChain([p.images for p in everything], group.degree)
    return chain.order() == group.order


def find_generating_vector(
    group: PermGroup, sig: Signature, caps: Caps = DEFAULT_CAPS
) -> GeneratingVector | None:
    """Depth-first search for a generating vector realizing the signature.

    Deterministic order: the first slot ranges over conjugacy-class
    representatives only (a global conjugation normalizes any vector so
    that its first entry is a representative), later slots over all
    elements in enumeration order; elliptic slots are filled in descending
    period order with the last one forced by the product condition.
    """
    if group.order > caps.oracle_search:
        raise CapExceeded(
            f"order {group.order} exceeds the vector-search cap {caps.oracle_search}",
            needed=group.order,
            cap=caps.oracle_search,
        )
    h = sig.orbit_genus
    periods = sorted(sig.periods, reverse=True)
    r = len(periods)
    if r + 2 * h > caps.vector_width:
        raise WidthExceeded(
            f"signature needs {r + 2 * h} slots, width cap is {caps.vector_width}"
        )
    if rh_genus(group.order, sig).denominator != 1:
        return None

    els = group.elements(caps.oracle_search)
    orders = group.element_orders(caps.oracle_search)
    by_order: dict[int, list[Permutation]] = {}
    for p, o in zip(els, orders):
        by_order.setdefault(o, []).append(p)
    for m in periods:
        if m not in by_order:
            return None
    reps = group.class_representatives(caps.oracle_search)
    identity = group.identity()

    target = group.order
    degree = group.degree

    def generates(parts: list[Permutation]) -> bool:
        chain = StabilizerChain([p.images for p in parts], degree)
        return chain.order() == target

    hyperbolic: list[Permutation] = []
    elliptic: list[Permutation] = []

    def candidates(slot_order, first_slot):
        if first_slot:
            return [p for p in reps if slot_order is None or p.order() == slot_order]
        if slot_order is None:
            return els
        return by_order[slot_order]

    def search_elliptic(i: int, prefix: Permutation) -> GeneratingVector | None:
        if i == r - 1 and r >= 1:
            last = prefix.inverse()
            if last.order() != periods[-1]:
                return None
            parts = hyperbolic + elliptic + [last]
            if not generates(parts):
                return None
            return GeneratingVector(
                hyperbolic=tuple(zip(hyperbolic[0::2], hyperbolic[1::2])),
                elliptic=tuple(elliptic + [last]),
            )
        if i == r:  # r == 0: product of commutators alone must be trivial
            if not prefix.is_identity():
                return None
            parts = hyperbolic + elliptic
            if not parts or not generates(parts):
                return None
            return GeneratingVector(
                hyperbolic=tuple(zip(hyperbolic[0::2], hyperbolic[1::2])),
                elliptic=tuple(elliptic),
            )
        first_slot = (h == 0 and i == 0)
        for c in candidates(periods[i], first_slot):
            elliptic.append(c)
            found = search_elliptic(i + 1, prefix * c)
            if found:
                return found
            elliptic.pop()
        return None

    def search_hyperbolic(j: int, prefix: Permutation) -> GeneratingVector | None:
        if j == 2 * h:
            return search_elliptic(0, prefix)
        first_slot = (j == 0)
        for x in candidates(None, first_slot):
            hyperbolic.append(x)
            if j % 2 == 1:
                a, b = hyperbolic[-2], hyperbolic[-1]
                commutator = a * b * a.inverse() * b.inverse()
                found = search_hyperbolic(j + 1, prefix * commutator)
            else:
                found = search_hyperbolic(j + 1, prefix)
            if found:
                return found
            hyperbolic.pop()
        return None

    if r == 0 and h == 0:
        return None  # no slots: only the trivial group acts, never faithfully here
    return search_hyperbolic(0, identity)


def acts_on_genus_le(group: PermGroup, genus: int, caps: Caps = DEFAULT_CAPS) -> OracleVerdict:
    """Does the group act nontrivially on some smooth curve of genus <= g?

    Requires a nonabelian simple group (there nontrivial means faithful);
    anything else, or any cap overrun, degrades to `unknown`, never to a
    wrong verdict.
    """
    try:
        simple = group.is_simple_nonabelian(caps.enumeration)
    except CapExceeded:
        return OracleVerdict(UNKNOWN, reason="simplicity undecided within enumeration cap")
    if not simple:
        return OracleVerdict(UNKNOWN, reason="oracle requires a nonabelian simple group")
    try:
        sigs = enumerate_signatures(group, genus, caps)
    except CapExceeded:
        return OracleVerdict(UNKNOWN, reason="group exceeds the signature enumeration cap")
    if not sigs:
        return OracleVerdict(NO, reason=f"no admissible branch data up to genus {genus}")
    incomplete = False
    for g, sig in sigs:
        try:
            vec = find_generating_vector(group, sig, caps)
        except (CapExceeded, WidthExceeded):
            incomplete = True
            continue
        if vec is not None:
            if not validate_vector(group, sig, vec):
                raise AssertionError(f"search produced an invalid vector for {sig.label()}")
            return OracleVerdict(YES, genus=g, signature=sig, vector=vec)
    if incomplete:
        return OracleVerdict(UNKNOWN, reason="some branch data exceeded search caps")
    return OracleVerdict(NO, reason=f"all branch data up to genus {genus} exhausted")
