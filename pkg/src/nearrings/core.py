"""Table-based finite right near-rings: validation, construction, serialization.

Everything is an index table: a group of order n is an n-by-n addition table
over element indices 0..n-1, and a near-ring adds an n-by-n multiplication
table on top.  All laws are checked exhaustively; every reported failure
carries a witness tuple that re-evaluates to a violation on the raw tables.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

# Construction refuses anything larger than this.
DEFAULT_ORDER_CAP = 4096
# Above this order, tables built componentwise from validated factors are
# trusted instead of re-running the O(n^3) law scans.
FULL_VALIDATION_CAP = 1024

TABLE_FORMAT = "nearring-table/1"


class TableFormatError(ValueError):
    """Malformed table document: bad shape, out-of-range index, missing field."""


class CapExceeded(ValueError):
    """Requested construction or scan exceeds the configured order cap."""


class AxiomViolation(Exception):
    """A named law fails on the tables.

    ``law`` is one of add_assoc, add_identity, add_inverse, mul_assoc,
    right_dist, unity; ``witness`` re-evaluates to a violation.
    """

    def __init__(self, law: str, witness, message: str | None = None):
        self.law = law
        self.witness = tuple(int(w) for w in witness)
        super().__init__(message or f"{law} fails at witness {self.witness}")


@dataclass(frozen=True)
class FiniteGroup:
    """Additive group as a Cayley table; index 0 is the identity."""

    order: int
    add: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    def sub(self, i: int, j: int) -> int:
        return self.add[i][self.neg[j]]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)


@dataclass(frozen=True)
class NearRingFlags:
    right_distributive: bool
    left_distributive: bool
    abelian_add: bool
    zero_symmetric: bool
    unital: bool
    commutative_mul: bool


@dataclass(frozen=True)
class NearRing:
    """Finite right near-ring: additive group plus multiplication table.

    ``factors`` / ``extension`` record construction provenance (direct
    products and the R x M extension) so structure-specific checks can
    recognise how an instance was built.
    """

    group: FiniteGroup
    mul: tuple[tuple[int, ...], ...]
    one: Optional[int]
    flags: NearRingFlags
    flag_witnesses: tuple[tuple[str, tuple[int, ...]], ...] = ()
    name: Optional[str] = None
    factors: Optional[tuple["NearRing", ...]] = None
    extension: Optional[tuple] = None

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def add(self) -> tuple[tuple[int, ...], ...]:
        return self.group.add

    @property
    def neg(self) -> tuple[int, ...]:
        return self.group.neg

    def label(self, i: int) -> str:
        return self.group.label(i)

    def sub(self, i: int, j: int) -> int:
        return self.group.sub(i, j)

    def is_ring(self) -> bool:
        return self.flags.abelian_add and self.flags.left_distributive


@lru_cache(maxsize=512)
def _np(table: tuple) -> np.ndarray:
    arr = np.array(table, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _check_table(table, n: int, field: str) -> tuple[tuple[int, ...], ...]:
    if len(table) != n:
        raise TableFormatError(f"{field}: expected {n} rows, got {len(table)}")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise TableFormatError(f"{field}: row {i} has {len(row)} entries, expected {n}")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise TableFormatError(f"{field}: entry {v!r} in row {i} out of range [0,{n})")
        rows.append(tuple(row))
    return tuple(rows)


def _assoc_witness(t: np.ndarray) -> Optional[tuple[int, int, int]]:
    """First (i,j,k) with (i.j).k != i.(j.k), scanning i ascending."""
    n = len(t)
    for i in range(n):
        lhs = t[t[i], :]          # (j,k) -> (i.j).k
        rhs = t[i, t]             # (j,k) -> i.(j.k)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            j, k = bad[0]
            return (i, int(j), int(k))
    return None


def _right_dist_witness(add: np.ndarray, mul: np.ndarray) -> Optional[tuple[int, int, int]]:
    """First (i,j,k) with (i+j)*k != i*k + j*k."""
    n = len(add)
    for i in range(n):
        lhs = mul[add[i], :]                    # (j,k) -> (i+j)*k
        rhs = add[mul[i][None, :], mul]         # (j,k) -> add[i*k, j*k]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            j, k = bad[0]
            return (i, int(j), int(k))
    return None


def _left_dist_witness(add: np.ndarray, mul: np.ndarray) -> Optional[tuple[int, int, int]]:
    """First (i,j,k) with i*(j+k) != i*j + i*k."""
    n = len(add)
    for i in range(n):
        lhs = mul[i, add]                        # (j,k) -> i*(j+k)
        rhs = add[mul[i][:, None], mul[i][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            j, k = bad[0]
            return (i, int(j), int(k))
    return None


def validate_group(add, labels=None) -> FiniteGroup:
    """Validate an addition table as a group with identity at index 0."""
    n = len(add)
    if n < 1:
        raise TableFormatError("empty addition table")
    table = _check_table(add, n, "add")
    for j in range(n):
        if table[0][j] != j or table[j][0] != j:
            raise AxiomViolation("add_identity", (j,))
    w = _assoc_witness(_np(table))
    if w is not None:
        raise AxiomViolation("add_assoc", w)
    neg = []
    for i in range(n):
        for j in range(n):
            if table[i][j] == 0 and table[j][i] == 0:
                neg.append(j)
                break
        else:
            raise AxiomViolation("add_inverse", (i,))
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise TableFormatError("labels: need n distinct strings")
    return FiniteGroup(order=n, add=table, neg=tuple(neg), labels=labels)


def _compute_flags(group: FiniteGroup, mul, one):
    """Exhaustive flag scans; returns (one, flags, witnesses)."""
    n = group.order
    add_np = _np(group.add)
    mul_np = _np(mul)
    witnesses: list[tuple[str, tuple[int, ...]]] = []

    w = _left_dist_witness(add_np, mul_np)
    left_dist = w is None
    if w:
        witnesses.append(("left_distributive", w))

    bad = np.argwhere(add_np != add_np.T)
    abelian = len(bad) == 0
    if not abelian:
        witnesses.append(("abelian_add", (int(bad[0][0]), int(bad[0][1]))))

    zs_bad = [x for x in range(n) if mul[x][0] != 0]
    zero_symmetric = not zs_bad
    if zs_bad:
        witnesses.append(("zero_symmetric", (zs_bad[0],)))

    bad = np.argwhere(mul_np != mul_np.T)
    comm = len(bad) == 0
    if not comm:
        witnesses.append(("commutative_mul", (int(bad[0][0]), int(bad[0][1]))))

    if one is not None:
        for x in range(n):
            if mul[one][x] != x or mul[x][one] != x:
                raise AxiomViolation("unity", (one, x), f"declared one={one} fails at {x}")
    else:
        for e in range(n):
            if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
                one = e
                break
    unital = one is not None
    flags = NearRingFlags(
        right_distributive=True,
        left_distributive=left_dist,
        abelian_add=abelian,
        zero_symmetric=zero_symmetric,
        unital=unital,
        commutative_mul=comm,
    )
    return one, flags, tuple(witnesses)


def validate_nearring(add, mul, one=None, labels=None, name=None,
                      group: FiniteGroup | None = None, **provenance) -> NearRing:
    """Validate tables as a right near-ring; flags are computed exhaustively."""
    if group is None:
        group = validate_group(add, labels=labels)
    n = group.order
    mul = _check_table(mul, n, "mul")
    if one is not None and not 0 <= one < n:
        raise TableFormatError(f"one: index {one} out of range [0,{n})")
    w = _assoc_witness(_np(mul))
    if w is not None:
        raise AxiomViolation("mul_assoc", w)
    w = _right_dist_witness(_np(group.add), _np(mul))
    if w is not None:
        raise AxiomViolation("right_dist", w)
    # 0*x = 0 is forced by right distributivity; a failure here means the
    # checks above are broken, not the input.
    assert all(mul[0][x] == 0 for x in range(n))
    one, flags, witnesses = _compute_flags(group, mul, one)
    return NearRing(group=group, mul=mul, one=one, flags=flags,
                    flag_witnesses=witnesses, name=name, **provenance)


# ---------------------------------------------------------------------------
# constructions


def build_M0(g: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> NearRing:
    """All maps g -> g fixing 0, pointwise addition, composition as product.

    Element order is lexicographic on the value vector (f(1),...,f(n-1)),
    which for g = Z3 reproduces the f1..f9 listing with f_i at index i-1.
    """
    n = g.order
    if n < 2:
        raise ValueError("base group must have order >= 2")
    order = n ** (n - 1)
    if order > cap:
        raise CapExceeded(f"|M0(G)| = {order} exceeds cap {cap}")
    vecs = [(0,) + tail for tail in itertools.product(range(n), repeat=n - 1)]
    index = {v: i for i, v in enumerate(vecs)}
    add = [
        [index[tuple(g.add[f[x]][h[x]] for x in range(n))] for h in vecs]
        for f in vecs
    ]
    mul = [
        [index[tuple(f[h[x]] for x in range(n))] for h in vecs]
        for f in vecs
    ]
    labels = tuple(f"f{i + 1}" for i in range(order))
    return validate_nearring(add, mul, labels=labels, name=f"m0_order{order}")


def _mixed_radix(orders: list[int]):
    """Row-major encode/decode between component tuples and flat indices."""
    def encode(parts):
        idx = 0
        for p, o in zip(parts, orders):
            idx = idx * o + p
        return idx

    def decode(idx):
        parts = []
        for o in reversed(orders):
            parts.append(idx % o)
            idx //= o
        return tuple(reversed(parts))

    return encode, decode


def build_product(factors, cap: int = DEFAULT_ORDER_CAP, name=None) -> NearRing:
    """Componentwise direct product; element index is row-major over factors."""
    factors = tuple(factors)
    if not factors:
        raise ValueError("need at least one factor")
    orders = [f.order for f in factors]
    total = 1
    for o in orders:
        total *= o
    if total > cap:
        raise CapExceeded(f"product order {total} exceeds cap {cap}")
    encode, decode = _mixed_radix(orders)
    elems = [decode(i) for i in range(total)]
    add = [
        [encode([f.add[a][b] for f, a, b in zip(factors, x, y)]) for y in elems]
        for x in elems
    ]
    mul = [
        [encode([f.mul[a][b] for f, a, b in zip(factors, x, y)]) for y in elems]
        for x in elems
    ]
    labels = None
    if all(f.group.labels for f in factors):
        labels = tuple(
            "(" + ",".join(f.label(p) for f, p in zip(factors, x)) + ")" for x in elems
        )
    one = None
    if all(f.one is not None for f in factors):
        one = encode([f.one for f in factors])
    if total <= FULL_VALIDATION_CAP:
        return validate_nearring(add, mul, one=one, labels=labels, name=name,
                                 factors=factors)
    # Correct by construction from validated factors; each law holds in the
    # product iff it holds in every factor.
    group = FiniteGroup(
        order=total,
        add=tuple(tuple(r) for r in add),
        neg=tuple(encode([f.neg[p] for f, p in zip(factors, x)]) for x in elems),
        labels=labels,
    )
    flags = NearRingFlags(
        right_distributive=True,
        left_distributive=all(f.flags.left_distributive for f in factors),
        abelian_add=all(f.flags.abelian_add for f in factors),
        zero_symmetric=all(f.flags.zero_symmetric for f in factors),
        unital=one is not None,
        commutative_mul=all(f.flags.commutative_mul for f in factors),
    )
    return NearRing(group=group, mul=tuple(tuple(r) for r in mul), one=one,
                    flags=flags, name=name, factors=factors)


def build_extension(ring: NearRing, module, cap: int = DEFAULT_ORDER_CAP,
                    name=None) -> NearRing:
    """Carrier R x M with <a1,m1>*<a2,m2> = <a1*a2, a1*m2 + m1>.

    Unital with one = <1,0>; not zero-symmetric unless M is trivial.
    ``module`` is an NModule over ``ring`` (see nearrings.nmodules).
    """
    if module.ring != ring:
        raise ValueError("module is not over the given ring")
    if not (ring.flags.abelian_add and ring.flags.left_distributive and ring.flags.unital):
        raise ValueError("extension base must be a unital ring")
    r_n, m_n = ring.order, module.carrier.order
    total = r_n * m_n
    if total > cap:
        raise CapExceeded(f"extension order {total} exceeds cap {cap}")
    radd, madd = ring.add, module.carrier.add
    act = module.action
    idx = lambda a, m: a * m_n + m
    add = [[0] * total for _ in range(total)]
    mul = [[0] * total for _ in range(total)]
    for a1 in range(r_n):
        for m1 in range(m_n):
            i = idx(a1, m1)
            for a2 in range(r_n):
                for m2 in range(m_n):
                    j = idx(a2, m2)
                    add[i][j] = idx(radd[a1][a2], madd[m1][m2])
                    mul[i][j] = idx(ring.mul[a1][a2], madd[act[a1][m2]][m1])
    labels = None
    if ring.group.labels and module.carrier.labels:
        labels = tuple(
            f"({ring.label(a)}|{module.carrier.label(m)})"
            for a in range(r_n) for m in range(m_n)
        )
    return validate_nearring(add, mul, one=idx(ring.one, 0), labels=labels,
                             name=name, extension=(ring, module))


# ---------------------------------------------------------------------------
# NearRing Table Format v1


@dataclass(frozen=True)
class RawTables:
    name: str
    order: int
    labels: Optional[tuple[str, ...]]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    one: Optional[int]


def parse_table(data) -> RawTables:
    """Parse a NearRing Table Format v1 document; shape checks only."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise TableFormatError("document must be a JSON object")
    if doc.get("format") != TABLE_FORMAT:
        raise TableFormatError(f'missing or unsupported "format" (want {TABLE_FORMAT!r})')
    for key in ("name", "order", "add", "mul"):
        if key not in doc:
            raise TableFormatError(f'missing required field "{key}"')
    name = doc["name"]
    if not isinstance(name, str):
        raise TableFormatError('"name" must be a string')
    n = doc["order"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise TableFormatError('"order" must be a positive integer')
    add = _check_table(doc["add"], n, "add")
    mul = _check_table(doc["mul"], n, "mul")
    labels = None
    if doc.get("labels") is not None:
        labels = doc["labels"]
        if (not isinstance(labels, list) or len(labels) != n
                or not all(isinstance(s, str) for s in labels)):
            raise TableFormatError('"labels" must be a list of n strings')
        if len(set(labels)) != n:
            raise TableFormatError('"labels" contains duplicates')
        labels = tuple(labels)
    one = doc.get("one")
    if one is not None and (not isinstance(one, int) or isinstance(one, bool)
                            or not 0 <= one < n):
        raise TableFormatError(f'"one" index {one!r} out of range [0,{n})')
    return RawTables(name=name, order=n, labels=labels, add=add, mul=mul, one=one)


def from_document(raw: RawTables) -> NearRing:
    """Validate parsed tables; re-indexes so the additive identity sits at 0."""
    n = raw.order
    ident = None
    for e in range(n):
        if all(raw.add[e][j] == j and raw.add[j][e] == j for j in range(n)):
            ident = e
            break
    add, mul, labels, one = raw.add, raw.mul, raw.labels, raw.one
    if ident is not None and ident != 0:
        old = [ident] + [i for i in range(n) if i != ident]
        pi = {o: i for i, o in enumerate(old)}
        add = tuple(tuple(pi[raw.add[a][b]] for b in old) for a in old)
        mul = tuple(tuple(pi[raw.mul[a][b]] for b in old) for a in old)
        if labels:
            labels = tuple(labels[o] for o in old)
        if one is not None:
            one = pi[one]
    return validate_nearring(add, mul, one=one, labels=labels, name=raw.name)


def load_nearring(path) -> NearRing:
    with open(path, "rb") as fh:
        return from_document(parse_table(fh.read()))


def to_document(ring: NearRing) -> dict:
    doc = {"format": TABLE_FORMAT, "name": ring.name or "nearring", "order": ring.order}
    if ring.group.labels:
        doc["labels"] = list(ring.group.labels)
    doc["add"] = [list(r) for r in ring.add]
    doc["mul"] = [list(r) for r in ring.mul]
    if ring.one is not None:
        doc["one"] = ring.one
    return doc


def emit_table(ring: NearRing) -> str:
    return json.dumps(to_document(ring), separators=(",", ":")) + "\n"
