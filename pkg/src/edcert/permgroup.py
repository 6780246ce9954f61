"""Finite permutation groups backed by a deterministic stabilizer chain.

The chain is built with the classical (non-randomized) Schreier-Sims
algorithm, so orders, membership tests and element enumeration are exact
and reproducible bit for bit: generators are processed in the order given,
orbits in breadth-first discovery order, and every search below iterates
in a fixed order.  Groups are immutable after construction; all methods
are pure and cache only values derived from the group itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .config import DEFAULT_CAPS
from .errors import CapExceeded, NotDividing, ValidationError
from .permutation import (
    Permutation,
    compose,
    identity_tuple,
    invert,
    tuple_order,
)


class EdcertInternalError(AssertionError):
    """Invariant violation inside the engine; indicates a bug, not bad input."""


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[tuple[int, ...]] = []
        # transversal[q] maps the base point to q
        self.transversal: dict[int, tuple[int, ...]] = {point: identity_tuple(degree)}


def _first_moved(p: Sequence[int]) -> int:
    for i, pi in enumerate(p):
        if pi != i:
            return i
    raise ValueError("identity permutation moves no point")


class StabilizerChain:
    """Base, strong generators and transversals for ⟨generators⟩."""

    __slots__ = ("degree", "levels", "_identity")

    def __init__(self, generators: Iterable[Sequence[int]], degree: int):
        self.degree = degree
        self._identity = identity_tuple(degree)
        self.levels: list[_Level] = []
        gens = [tuple(g) for g in generators]
        gens = [g for g in gens if g != self._identity]
        for g in gens:
            if len(g) != degree:
                raise ValidationError("generator degree mismatch")
            if all(g[lvl.point] == lvl.point for lvl in self.levels):
                self._append_level(_first_moved(g))
        for g in gens:
            self._insert_generator(g)
        for i in reversed(range(len(self.levels))):
            self._complete(i)

    # -- construction internals ------------------------------------------

    def _append_level(self, point: int) -> None:
        self.levels.append(_Level(point, self.degree))

    def _insert_generator(self, g: tuple[int, ...]) -> None:
        """Attach g to every level whose base prefix it fixes."""
        for lvl in self.levels:
            lvl.gens.append(g)
            if g[lvl.point] != lvl.point:
                return

    def _rebuild_orbit(self, i: int) -> None:
        lvl = self.levels[i]
        transversal = {lvl.point: self._identity}
        queue = [lvl.point]
        head = 0
        while head < len(queue):
            gamma = queue[head]
            head += 1
            u = transversal[gamma]
            for s in lvl.gens:
                delta = s[gamma]
                if delta not in transversal:
                    transversal[delta] = compose(u, s)
                    queue.append(delta)
        lvl.transversal = transversal

    def _sift(self, g: tuple[int, ...], start: int) -> tuple[tuple[int, ...], int]:
        """Strip g against levels start.. ; returns (residue, stuck level)."""
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            u = lvl.transversal.get(g[lvl.point])
            if u is None:
                return g, i
            g = compose(g, invert(u))
        return g, len(self.levels)

    def _complete(self, i: int) -> None:
        """Make level i complete: every Schreier generator sifts to identity.

        Residues are inserted as strong generators on the deeper levels and
        those levels are re-completed deepest first, the textbook recursion.
        """
        lvl = self.levels[i]
        self._rebuild_orbit(i)
        for gamma in list(lvl.transversal):
            u = lvl.transversal[gamma]
            for s in lvl.gens:
                v = lvl.transversal[s[gamma]]
                schreier = compose(compose(u, s), invert(v))
                if schreier == self._identity:
                    continue
                residue, j = self._sift(schreier, i + 1)
                if residue == self._identity:
                    continue
                if j == len(self.levels):
                    self._append_level(_first_moved(residue))
                for k in range(i + 1, j + 1):
                    self.levels[k].gens.append(residue)
                for k in range(j, i, -1):
                    self._complete(k)

    # -- queries -----------------------------------------------------------

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.transversal)
        return n

    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(lvl.transversal) for lvl in self.levels)

    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self.levels)

    def contains(self, g: Sequence[int]) -> bool:
        residue, _ = self._sift(tuple(g), 0)
        return residue == self._identity

    def elements_raw(self) -> list[tuple[int, ...]]:
        """All elements, in the deterministic transversal-product order."""
        elems = [self._identity]
        for lvl in reversed(self.levels):
            new = []
            for point in sorted(lvl.transversal):
                u = lvl.transversal[point]
                new.extend(compose(h, u) for h in elems)
            elems = new
        return elems


class PermGroup:
    """An immutable permutation group of fixed degree.

    The trivial group is written ``PermGroup((), degree=d)``; otherwise the
    degree is taken from the generators.
    """

    def __init__(self, generators: Iterable[Permutation | Sequence[int]], degree: int | None = None):
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g) for g in generators)
        if degree is None:
            if not gens:
                raise ValidationError("degree is required for an empty generating set")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValidationError("generators must share one degree")
        self.generators = gens
        self.degree = degree
        self._chain = StabilizerChain([g.images for g in gens], degree)
        self.order = self._chain.order()
        self._elements: tuple[Permutation, ...] | None = None
        self._orders: tuple[int, ...] | None = None
        self._classes: tuple[tuple[Permutation, ...], ...] | None = None
        self._simple: bool | None = None

    # -- basic structure ---------------------------------------------------

    def base(self) -> tuple[int, ...]:
        return self._chain.base()

    def orbit_sizes(self) -> tuple[int, ...]:
        return self._chain.orbit_sizes()

    def __contains__(self, p: Permutation) -> bool:
        return p.degree == self.degree and self._chain.contains(p.images)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def subgroup(self, generators: Iterable[Permutation]) -> "PermGroup":
        return PermGroup(tuple(generators), degree=self.degree)

    def _check_cap(self, cap: int) -> None:
        if self.order > cap:
            raise CapExceeded(
                f"group order {self.order} exceeds the enumeration cap {cap}",
                needed=self.order,
                cap=cap,
            )

    # -- element-level queries (capped) -------------------------------------

    def elements(self, cap: int = DEFAULT_CAPS.enumeration) -> tuple[Permutation, ...]:
        self._check_cap(cap)
        if self._elements is None:
            out = []
            for images in self._chain.elements_raw():
                p = Permutation.__new__(Permutation)
                object.__setattr__(p, "images", images)
                out.append(p)
            self._elements = tuple(out)
        return self._elements

    def element_orders(self, cap: int = DEFAULT_CAPS.enumeration) -> tuple[int, ...]:
        if self._orders is None:
            self._orders = tuple(tuple_order(p.images) for p in self.elements(cap))
        return self._orders

    def max_element_order(self, cap: int = DEFAULT_CAPS.enumeration) -> int:
        return max(self.element_orders(cap))

    def has_element_of_order(self, m: int, cap: int = DEFAULT_CAPS.enumeration) -> bool:
        return m in set(self.element_orders(cap))

    def elements_of_order(self, m: int, cap: int = DEFAULT_CAPS.enumeration) -> tuple[Permutation, ...]:
        els = self.elements(cap)
        orders = self.element_orders(cap)
        return tuple(p for p, o in zip(els, orders) if o == m)

    def exponent(self, cap: int = DEFAULT_CAPS.enumeration) -> int:
        out = 1
        for o in set(self.element_orders(cap)):
            out = lcm(out, o)
        return out

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            (a * b).images == (b * a).images for i, a in enumerate(gens) for b in gens[i + 1:]
        )

    # -- conjugacy ----------------------------------------------------------

    def conjugacy_classes(self, cap: int = DEFAULT_CAPS.enumeration) -> tuple[tuple[Permutation, ...], ...]:
        """Partition into conjugacy classes; each class leads with the first
        member in enumeration order, which serves as its representative."""
        self._check_cap(cap)  # before the cache, so caps behave identically on every call
        if self._classes is not None:
            return self._classes
        els = self.elements(cap)
        index = {p.images: i for i, p in enumerate(els)}
        conj_pairs = [(g.images, invert(g.images)) for g in self.generators]
        seen = [False] * len(els)
        classes = []
        for i, rep in enumerate(els):
            if seen[i]:
                continue
            seen[i] = True
            members = [rep]
            queue = [rep.images]
            while queue:
                x = queue.pop()
                for g, ginv in conj_pairs:
                    y = compose(compose(ginv, x), g)
                    j = index[y]
                    if not seen[j]:
                        seen[j] = True
                        members.append(els[j])
                        queue.append(y)
            classes.append(tuple(members))
        self._classes = tuple(classes)
        return self._classes

    def class_representatives(self, cap: int = DEFAULT_CAPS.enumeration) -> tuple[Permutation, ...]:
        return tuple(cls[0] for cls in self.conjugacy_classes(cap))

    # -- normal structure ----------------------------------------------------

    def normal_closure(self, seeds: Iterable[Permutation]) -> "PermGroup":
        """Smallest normal subgroup containing the seeds.

        Closes the seed set under conjugation by the group generators,
        regenerating the chain whenever a conjugate falls outside the
        subgroup found so far.
        """
        seeds = list(seeds)
        for s in seeds:
            if s not in self:
                raise ValidationError("normal_closure seeds must lie in the group")
        closure_gens: list[Permutation] = []
        sub = StabilizerChain((), self.degree)
        conj_pairs = [(g.images, invert(g.images)) for g in self.generators]
        queue = [s for s in seeds if not s.is_identity()]
        while queue:
            x = queue.pop(0)
            if sub.contains(x.images):
                continue
            closure_gens.append(x)
            sub = StabilizerChain([g.images for g in closure_gens], self.degree)
            for g, ginv in conj_pairs:
                y = Permutation(compose(compose(ginv, x.images), g))
                queue.append(y)
        return PermGroup(closure_gens, degree=self.degree)

    def is_simple_nonabelian(self, cap: int = DEFAULT_CAPS.enumeration) -> bool:
        """True iff the group is nonabelian with no proper nontrivial normal
        subgroup, decided by normal closures of conjugacy-class representatives."""
        self._check_cap(cap)
        if self._simple is not None:
            return self._simple
        if self.order == 1 or self.is_abelian():
            self._simple = False
            return False
        result = True
        for cls in self.conjugacy_classes(cap):
            rep = cls[0]
            if rep.is_identity():
                continue
            if self.normal_closure([rep]).order != self.order:
                result = False
                break
        self._simple = result
        return result


# -- Sylow subgroups ----------------------------------------------------------


@dataclass(frozen=True)
class SylowReport:
    """A Sylow p-subgroup together with its isomorphism shape.

    shape is one of "cyclic", "elementary_abelian", "dihedral", "other";
    rank is set only for the elementary abelian case.
    """

    prime: int
    exponent: int
    order: int
    shape: str
    rank: int | None
    generators: tuple[Permutation, ...]

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "exponent": self.exponent,
            "order": self.order,
            "shape": self.shape,
            "rank": self.rank,
            "generators": [g.cycle_string() for g in self.generators],
        }


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _is_prime_power(n: int, p: int) -> bool:
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors in ascending order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _classify_p_group(sub: PermGroup, p: int, exponent: int) -> tuple[str, int | None]:
    orders = sub.element_orders()
    if max(orders) == sub.order:
        return "cyclic", None
    if max(orders) == p and sub.is_abelian():
        return "elementary_abelian", exponent
    if p == 2:
        els = sub.elements()
        half = sub.order // 2
        for x, ox in zip(els, orders):
            if ox != half:
                continue
            powers = {(x ** k).images for k in range(half)}
            x_inv = x.inverse()
            for t, ot in zip(els, orders):
                if ot == 2 and t.images not in powers and (t * x * t).images == x_inv.images:
                    return "dihedral", None
    return "other", None


def sylow_report(group: PermGroup, p: int, cap: int = DEFAULT_CAPS.enumeration) -> SylowReport:
    """Construct a Sylow p-subgroup by iterated extension and classify it.

    Starting from a Cauchy element of order p, repeatedly adjoins the first
    p-power-order element (in enumeration order) that normalizes the current
    subgroup without lying in it; each step multiplies the order by a power
    of p, so the loop reaches the full p^{v_p(|G|)}.
    """
    if not _is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if group.order % p:
        raise NotDividing(f"{p} does not divide the group order {group.order}")
    exponent = 0
    n = group.order
    while n % p == 0:
        exponent += 1
        n //= p
    target = p ** exponent

    els = group.elements(cap)
    orders = group.element_orders(cap)

    seed = next(g ** (o // p) for g, o in zip(els, orders) if o % p == 0)
    sub_gens = [seed]
    sub = group.subgroup(sub_gens)
    while sub.order < target:
        extension = None
        for g, o in zip(els, orders):
            if o == 1 or not _is_prime_power(o, p):
                continue
            if g in sub:
                continue
            ginv = g.inverse()
            if all((ginv * s * g) in sub for s in sub_gens):
                extension = g
                break
        if extension is None:  # cannot happen for p | |G|; guard against misuse
            raise EdcertInternalError("Sylow extension step found no normalizing p-element")
        sub_gens.append(extension)
        sub = group.subgroup(sub_gens)

    shape, rank = _classify_p_group(sub, p, exponent)
    return SylowReport(
        prime=p,
        exponent=exponent,
        order=sub.order,
        shape=shape,
        rank=rank,
        generators=tuple(sub_gens),
    )


# -- brute-force subgroup search ----------------------------------------------


def closed_subgroup(degree: int, seeds: Sequence[Permutation], limit: int) -> frozenset[tuple[int, ...]] | None:
    """Element set of ⟨seeds⟩, or None as soon as it exceeds `limit` elements."""
    seed_imgs = [s.images for s in seeds]
    elems = {identity_tuple(degree)}
    queue = list(elems)
    while queue:
        x = queue.pop()
        for s in seed_imgs:
            y = compose(x, s)
            if y not in elems:
                if len(elems) >= limit:
                    return None
                elems.add(y)
                queue.append(y)
    return frozenset(elems)


def max_proper_subgroup(
    group: PermGroup, cap: int = DEFAULT_CAPS.subgroup_search
) -> tuple[int, tuple[Permutation, ...]]:
    """Order and generators of a proper subgroup of maximal order.

    Exhausts subgroups generated by a conjugacy-class representative plus one
    further element (plus a third generator when |G| <= 60).  Up to
    conjugation this covers every 2-generated subgroup, hence every maximal
    subgroup of the nonabelian simple groups within the cap, which are the
    groups the certifier feeds to this oracle.
    """
    n = group.order
    if n == 1:
        raise ValidationError("the trivial group has no proper subgroup")
    if n > cap:
        raise CapExceeded(f"order {n} exceeds the subgroup-search cap {cap}", needed=n, cap=cap)

    els = [e for e in group.elements(cap=n) if not e.is_identity()]
    reps = [r for r in group.class_representatives(cap=n) if not r.is_identity()]
    limit = n // 2 + 1  # a proper subgroup has at most n/2 elements
    best = 1
    witness: tuple[Permutation, ...] = ()
    for rep in reps:
        if best < rep.order() < n:
            best = rep.order()
            witness = (rep,)
    for rep in reps:
        for b in els:
            sub = closed_subgroup(group.degree, (rep, b), limit)
            if sub is not None and len(sub) > best:
                best = len(sub)
                witness = (rep, b)
    if n <= 60:
        for rep in reps:
            for i, b in enumerate(els):
                for c in els[i + 1:]:
                    sub = closed_subgroup(group.degree, (rep, b, c), limit)
                    if sub is not None and len(sub) > best:
                        best = len(sub)
                        witness = (rep, b, c)
    return best, witness


def min_proper_subgroup_index(group: PermGroup, cap: int = DEFAULT_CAPS.subgroup_search) -> int:
    """Minimal index of a proper subgroup, by exhaustive generated-subgroup
    search (abelian groups short-circuit to their smallest prime divisor)."""
    n = group.order
    if n == 1:
        raise ValidationError("the trivial group has no proper subgroup")
    if n > cap:
        raise CapExceeded(f"order {n} exceeds the subgroup-search cap {cap}", needed=n, cap=cap)
    if group.is_abelian():
        return prime_factors(n)[0]
    best, _ = max_proper_subgroup(group, cap)
    return n // best
