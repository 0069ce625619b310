"""Left N-module machinery: annihilators, orbits, N-ideals, quotients, homs.

Subsets of a carrier are plain frozensets of element indices.  An N-ideal L
of a module M is a normal subgroup of (M,+) with r(l+m) - rm in L for all
r, l, m; these are exactly the kernels that admit quotient modules.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from .core import FiniteGroup, NearRing, _np, validate_group

BRUTEFORCE_ISO_CAP = 8
IDEAL_ENUM_ORDER_CAP = 64


@dataclass(frozen=True)
class NModule:
    """Finite left N-module: carrier group plus an n x m action table."""

    ring: NearRing
    carrier: FiniteGroup
    action: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IdealVerdict:
    kind: str  # not_subgroup | not_normal | not_N_ideal | N_ideal
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.kind == "N_ideal"


def validate_module(ring: NearRing, carrier: FiniteGroup, action) -> NModule:
    """Check both module laws (and unitarity when the ring is unital)."""
    n, m = ring.order, carrier.order
    action = tuple(tuple(row) for row in action)
    if len(action) != n or any(len(row) != m for row in action):
        raise ValueError(f"action table must be {n}x{m}")
    act = np.array(action, dtype=np.int64)
    radd = _np(ring.add)
    madd = _np(carrier.add)
    rmul = _np(ring.mul)
    for r1 in range(n):
        # (r1+r2)m == r1 m + r2 m
        lhs = act[radd[r1], :]
        rhs = madd[np.broadcast_to(act[r1], (n, m)), act]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            r2, x = bad[0]
            raise ValueError(f"additivity fails at (r1,r2,m)=({r1},{int(r2)},{int(x)})")
        # (r1 r2)m == r1 (r2 m)
        lhs = act[rmul[r1], :]
        rhs = act[r1][act]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            r2, x = bad[0]
            raise ValueError(f"associativity fails at (r1,r2,m)=({r1},{int(r2)},{int(x)})")
    if ring.one is not None:
        for x in range(m):
            if action[ring.one][x] != x:
                raise ValueError(f"module is not unitary at m={x}")
    return NModule(ring=ring, carrier=carrier, action=action)


@lru_cache(maxsize=4096)
def regular_representation(ring: NearRing) -> NModule:
    """N acting on itself by left multiplication; action table is mul."""
    return NModule(ring=ring, carrier=ring.group, action=ring.mul)


def annihilator(ring: NearRing, side: str, subset) -> frozenset[int]:
    """Left: {x : x*s = 0 for all s}; right: {x : s*x = 0 for all s}."""
    members = sorted(subset)
    if not members:
        raise ValueError("annihilator of the empty set is not defined")
    mul = ring.mul
    if side == "left":
        return frozenset(x for x in range(ring.order)
                         if all(mul[x][s] == 0 for s in members))
    if side == "right":
        return frozenset(x for x in range(ring.order)
                         if all(mul[s][x] == 0 for s in members))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def orbit(ring: NearRing, side: str, a: int) -> frozenset[int]:
    """Left: Na = {n*a}; right: aN = {a*n}."""
    mul = ring.mul
    if side == "left":
        return frozenset(mul[n][a] for n in range(ring.order))
    if side == "right":
        return frozenset(mul[a][n] for n in range(ring.order))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


@lru_cache(maxsize=4096)
def left_annihilators(ring: NearRing) -> tuple[frozenset[int], ...]:
    return tuple(annihilator(ring, "left", {a}) for a in range(ring.order))


@lru_cache(maxsize=4096)
def left_orbits(ring: NearRing) -> tuple[frozenset[int], ...]:
    return tuple(orbit(ring, "left", a) for a in range(ring.order))


def is_N_ideal(module: NModule, subset) -> IdealVerdict:
    """Decide the three conditions in order: subgroup, normal, N-ideal.

    Scan order is ascending indices throughout, so the stored witness is
    the first failure.
    """
    members = sorted(subset)
    m_n = module.carrier.order
    madd = module.carrier.add
    mneg = module.carrier.neg
    in_l = [False] * m_n
    for x in members:
        in_l[x] = True
    if not members or not in_l[0]:
        return IdealVerdict("not_subgroup", (0,))
    for l1 in members:
        for l2 in members:
            if not in_l[madd[l1][l2]]:
                return IdealVerdict("not_subgroup", (l1, l2))
    for x in range(m_n):
        for l in members:
            if not in_l[madd[madd[x][l]][mneg[x]]]:
                return IdealVerdict("not_normal", (x, l))
    # r(l+m) - rm in L for all r, l, m (vectorized per r)
    act = np.array(module.action, dtype=np.int64)
    madd_np = _np(module.carrier.add)
    mneg_np = np.array(mneg, dtype=np.int64)
    mem_np = np.array(members, dtype=np.int64)
    in_l_np = np.array(in_l, dtype=bool)
    for r in range(module.ring.order):
        shifted = act[r, madd_np[mem_np, :]]            # (|L|, m): r(l+m)
        val = madd_np[shifted, mneg_np[act[r]][None, :]]  # r(l+m) - rm
        bad = np.argwhere(~in_l_np[val])
        if len(bad):
            li, x = bad[0]
            return IdealVerdict("not_N_ideal", (r, int(members[li]), int(x)))
    return IdealVerdict("N_ideal")


def is_ideal(ring: NearRing, subset) -> str:
    """'left_ideal' iff an N-ideal of the regular representation;
    'two_sided_ideal' additionally requires LN contained in L."""
    verdict = is_N_ideal(regular_representation(ring), subset)
    if not verdict:
        return "not_left_ideal"
    in_l = frozenset(subset)
    for l in sorted(in_l):
        for x in range(ring.order):
            if ring.mul[l][x] not in in_l:
                return "left_ideal"
    return "two_sided_ideal"


def _ideal_closure(ring: NearRing, seed) -> frozenset[int]:
    """Smallest N-ideal of the regular representation containing seed."""
    n = ring.order
    add_np = _np(ring.add)
    mul_np = _np(ring.mul)
    neg_np = np.array(ring.neg, dtype=np.int64)
    members = set(seed) | {0}
    while True:
        mem = np.array(sorted(members), dtype=np.int64)
        new = set()
        sums = add_np[np.ix_(mem, mem)]
        new.update(int(v) for v in np.unique(sums))
        conj = add_np[add_np[:, mem], neg_np[:, None]]
        new.update(int(v) for v in np.unique(conj))
        shifted = mul_np[:, add_np[mem, :]]                   # (n, |L|, n): r(l+m)
        val = add_np[shifted, neg_np[mul_np][:, None, :]]     # r(l+m) - rm
        new.update(int(v) for v in np.unique(val))
        new.update(int(ring.neg[x]) for x in members)
        if new <= members:
            return frozenset(members)
        members |= new


def enumerate_left_ideals(ring: NearRing, cap: Optional[int] = None) -> list[frozenset[int]]:
    """All N-ideals of the regular representation, by closure from singleton
    seeds plus join saturation; ascending by size then lexicographic."""
    if ring.order > IDEAL_ENUM_ORDER_CAP:
        raise ValueError(f"ideal enumeration limited to order {IDEAL_ENUM_ORDER_CAP}")
    found = {frozenset({0})}
    for a in range(ring.order):
        found.add(_ideal_closure(ring, {a}))
        if cap is not None and len(found) > cap:
            raise ValueError(f"ideal count exceeds cap {cap} ({len(found)} found so far)")
    while True:
        joins = set()
        pairs = list(found)
        for i, l1 in enumerate(pairs):
            for l2 in pairs[i + 1:]:
                if not (l1 <= l2 or l2 <= l1):
                    joins.add(_ideal_closure(ring, l1 | l2))
        if joins <= found:
            break
        found |= joins
        if cap is not None and len(found) > cap:
            raise ValueError(f"ideal count exceeds cap {cap} ({len(found)} found so far)")
    return sorted(found, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class Quotient:
    """Factor module M/L with coset representatives = least member index."""

    module: NModule
    projection: tuple[int, ...]       # ambient index -> quotient index
    representatives: tuple[int, ...]  # quotient index -> ambient representative


def quotient_module(module: NModule, subset) -> Quotient:
    verdict = is_N_ideal(module, subset)
    if not verdict:
        raise ValueError(f"subset is not an N-ideal: {verdict.kind} at {verdict.witness}")
    members = sorted(subset)
    madd = module.carrier.add
    m_n = module.carrier.order
    rep_of = [min(madd[x][l] for l in members) for x in range(m_n)]
    reps = sorted(set(rep_of))
    q_index = {rep: i for i, rep in enumerate(reps)}
    proj = tuple(q_index[rep_of[x]] for x in range(m_n))
    q = len(reps)
    qadd = [[proj[madd[reps[i]][reps[j]]] for j in range(q)] for i in range(q)]
    qlabels = None
    if module.carrier.labels:
        qlabels = tuple(f"{module.carrier.label(r)}+L" for r in reps)
    carrier = validate_group(qadd, labels=qlabels)
    qact = [[proj[module.action[r][reps[i]]] for i in range(q)]
            for r in range(module.ring.order)]
    # Well-definedness: the action must not depend on the representative.
    for r in range(module.ring.order):
        for x in range(m_n):
            assert proj[module.action[r][x]] == qact[r][proj[x]], \
                "quotient action depends on coset representative"
    return Quotient(
        module=NModule(ring=module.ring, carrier=carrier,
                       action=tuple(tuple(row) for row in qact)),
        projection=proj,
        representatives=tuple(reps),
    )


# ---------------------------------------------------------------------------
# homomorphisms and isomorphisms
#
# A target can be a genuine NModule, or a subgroup of (N,+) viewed inside the
# regular representation (the shape of annihilator sets).  In the embedded
# case the action is the ambient multiplication, which may leave the subset;
# a hom must then map into the subset anyway, so such pairs simply fail.


class _Target:
    def __init__(self, ring: NearRing, obj: Union[NModule, frozenset, set]):
        self.ring = ring
        if isinstance(obj, NModule):
            self.elements = list(range(obj.carrier.order))
            self.zero = 0
            self._add = obj.carrier.add
            self._act = obj.action
            self._members = None
        else:
            members = frozenset(obj)
            if 0 not in members:
                raise ValueError("embedded target must contain 0")
            self.elements = sorted(members)
            self.zero = 0
            self._add = ring.add
            self._act = ring.mul
            self._members = members

    def add(self, x: int, y: int) -> Optional[int]:
        v = self._add[x][y]
        if self._members is not None and v not in self._members:
            return None
        return v

    def act(self, r: int, x: int) -> Optional[int]:
        v = self._act[r][x]
        if self._members is not None and v not in self._members:
            return None
        return v


@dataclass(frozen=True)
class HomResult:
    hom: Optional[tuple[int, ...]]  # M1 index -> target element, or None
    failure: Optional[str] = None
    failure_elements: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.hom is not None


def generated_submodule(module: NModule, g: int) -> frozenset[int]:
    """Closure of {g} under the action and subgroup generation."""
    madd = module.carrier.add
    seen = {0, g}
    frontier = [0, g]
    while frontier:
        x = frontier.pop()
        for r in range(module.ring.order):
            v = module.action[r][x]
            if v not in seen:
                seen.add(v)
                frontier.append(v)
        for y in list(seen):
            for v in (madd[x][y], madd[y][x]):
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        v = module.carrier.neg[x]
        if v not in seen:
            seen.add(v)
            frontier.append(v)
    return frozenset(seen)


def hom_from_cyclic_generator(module: NModule, g: int, target, b: int) -> HomResult:
    """The unique additive N-linear map sending g to b, if well defined.

    ``target`` is an NModule over the same ring or a frozenset embedded in
    the regular representation.  Failure names the violated relation.
    """
    ring = module.ring
    tv = target if isinstance(target, _Target) else _Target(ring, target)
    m_n = module.carrier.order
    if len(generated_submodule(module, g)) != m_n:
        raise ValueError(f"element {g} does not generate the module")
    if b not in tv.elements:
        return HomResult(None, "image_not_in_target", (b,))
    image: dict[int, int] = {0: tv.zero, g: b}
    if image.get(0) != tv.zero:
        return HomResult(None, "zero_relation", (0,))
    changed = True
    while changed:
        changed = False
        for x, y in sorted(image.items()):
            for r in range(ring.order):
                x2 = module.action[r][x]
                y2 = tv.act(r, y)
                if y2 is None:
                    return HomResult(None, "action_escapes_target", (r, x))
                if x2 in image:
                    if image[x2] != y2:
                        return HomResult(None, "action_relation", (r, x, x2))
                else:
                    image[x2] = y2
                    changed = True
            for x2, y2 in sorted(image.items()):
                x3 = module.carrier.add[x][x2]
                y3 = tv.add(y, y2)
                if y3 is None:
                    return HomResult(None, "sum_escapes_target", (x, x2))
                if x3 in image:
                    if image[x3] != y3:
                        return HomResult(None, "sum_relation", (x, x2, x3))
                else:
                    image[x3] = y3
                    changed = True
    assert len(image) == m_n
    return HomResult(hom=tuple(image[x] for x in range(m_n)))


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: Optional[tuple[int, ...]] = None  # M1 index -> target element

    def __bool__(self) -> bool:
        return self.isomorphic


def _is_bijection_onto(hom: tuple[int, ...], tv: _Target) -> bool:
    return len(set(hom)) == len(hom) == len(tv.elements)


def _iso_generator(module: NModule, tv: _Target) -> IsoResult:
    gen = None
    for g in range(module.carrier.order):
        if len(generated_submodule(module, g)) == module.carrier.order:
            gen = g
            break
    if gen is None:
        raise ValueError("module is not cyclic; generator mode does not apply")
    for b in tv.elements:
        res = hom_from_cyclic_generator(module, gen, tv, b)
        if res and _is_bijection_onto(res.hom, tv):
            return IsoResult(True, res.hom)
    return IsoResult(False)


def _iso_bruteforce(module: NModule, tv: _Target) -> IsoResult:
    m_n = module.carrier.order
    if m_n != len(tv.elements):
        return IsoResult(False)
    if m_n > BRUTEFORCE_ISO_CAP:
        raise ValueError(f"bruteforce isomorphism limited to |M| <= {BRUTEFORCE_ISO_CAP}")
    others = [e for e in tv.elements if e != tv.zero]
    madd = module.carrier.add
    for perm in itertools.permutations(others):
        hom = (tv.zero,) + perm
        ok = True
        for x in range(m_n):
            for y in range(m_n):
                if tv.add(hom[x], hom[y]) != hom[madd[x][y]]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        for r in range(module.ring.order):
            for x in range(m_n):
                if tv.act(r, hom[x]) != hom[module.action[r][x]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return IsoResult(True, hom)
    return IsoResult(False)


def modules_isomorphic(module: NModule, target, mode: str = "auto") -> IsoResult:
    """Does an additive N-linear bijection exist from ``module`` onto ``target``?

    generator: image of a cyclic generator determines the map (any order).
    bruteforce: scan all bijections fixing 0 (|M| <= 8).
    auto: generator when the module is cyclic, else bruteforce.
    """
    tv = _Target(module.ring, target)
    if mode == "generator":
        return _iso_generator(module, tv)
    if mode == "bruteforce":
        return _iso_bruteforce(module, tv)
    if mode == "auto":
        for g in range(module.carrier.order):
            if len(generated_submodule(module, g)) == module.carrier.order:
                return _iso_generator(module, tv)
        if module.carrier.order <= BRUTEFORCE_ISO_CAP:
            return _iso_bruteforce(module, tv)
        raise ValueError("module is not cyclic and exceeds the bruteforce cap")
    raise ValueError(f"unknown mode {mode!r}")
