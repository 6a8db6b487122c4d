"""Brute-force ground truth on objects small enough to enumerate: integer
partitions listed explicitly, tiny finite fields with exhaustively checked
axioms, conjugacy censuses of small matrix groups, and wreath-product
reflection groups built element by element.

Everything here is deliberately independent of the counting recurrences in
blockcensus.counting and the series machinery in blockcensus.slots; tests
compare the two routes, so nothing in this module may call them for its
own answers. The only imports from those modules sit in the comparison
helpers at the bottom, which exist precisely to confront the two sides.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import slots
from .blocks import ell_profile, valuation
from .counting import is_prime

__all__ = [
    "partitions_of",
    "conjugate_partition",
    "hook_lengths",
    "is_d_core",
    "d_core_census",
    "compositions_into",
    "multipartition_tuples",
    "multipartition_enumerate",
    "SmallField",
    "mat_identity",
    "mat_mul",
    "mat_det",
    "mat_inv",
    "mat_pow",
    "gl_order",
    "mulclose",
    "gl_generators",
    "ClassDatum",
    "MatrixGroupCensus",
    "gl_ell_class_census",
    "census_matches_weight_vectors",
    "gmpn_identity",
    "gmpn_mul",
    "gmpn_inv",
    "gmpn_elements",
    "gmpn_generators",
    "gmpn_class_count",
    "sl2_gf4_census",
    "a5_fixture_check",
]

# ---------------------------------------------------------------------------
# partitions, listed one by one

ENUM_MAX_COLOURS = 8
ENUM_MAX_SIZE = 12


def partitions_of(t: int, max_part: int | None = None):
    """Yield the partitions of t as weakly decreasing tuples, largest first."""
    if t < 0:
        raise ValueError("partition size must be >= 0")
    if max_part is None or max_part > t:
        max_part = t
    if t == 0:
        yield ()
        return
    for head in range(max_part, 0, -1):
        for rest in partitions_of(t - head, head):
            yield (head,) + rest


def conjugate_partition(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def hook_lengths(lam: tuple[int, ...]) -> list[int]:
    """All hook lengths of the diagram, row by row."""
    conj = conjugate_partition(lam)
    hooks = []
    for i, row in enumerate(lam):
        for j in range(row):
            hooks.append(row - j + conj[j] - i - 1)
    return hooks


def is_d_core(lam: tuple[int, ...], d: int) -> bool:
    if d < 1:
        raise ValueError("d must be >= 1")
    return all(h != d for h in hook_lengths(lam))


def d_core_census(m: int, d: int) -> int:
    """Count d-cores of size m by enumerating partitions and checking hooks."""
    return sum(1 for lam in partitions_of(m) if is_d_core(lam, d))


def compositions_into(total: int, parts: int):
    """Yield the weak compositions of total into exactly `parts` slots."""
    if parts < 0 or total < 0:
        raise ValueError("need total >= 0 and parts >= 0")
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for rest in compositions_into(total - head, parts - 1):
            yield (head,) + rest


class _PartitionLists:
    """Materialized partition lists by size, shared by the enumerators."""

    def __init__(self) -> None:
        self._lists: dict[int, tuple[tuple[int, ...], ...]] = {}

    def of(self, t: int) -> tuple[tuple[int, ...], ...]:
        if t not in self._lists:
            self._lists[t] = tuple(partitions_of(t))
        return self._lists[t]


_partition_lists = _PartitionLists()


def multipartition_tuples(s: int, t: int):
    """Yield every s-tuple of partitions with sizes summing to t. Only for
    small inputs; the counting path is multipartition_enumerate."""
    if s < 1 or t < 0:
        raise ValueError("need s >= 1 and t >= 0")
    for sizes in compositions_into(t, s):
        pools = [_partition_lists.of(sz) for sz in sizes]
        yield from itertools.product(*pools)


def multipartition_enumerate(s: int, t: int) -> int:
    """Count s-tuples of partitions of total size t by listing the size
    compositions and explicitly enumerated partition lists, never touching
    the divisor-sum recurrence. Capped to keep runtimes sane."""
    if s < 1 or t < 0:
        raise ValueError("need s >= 1 and t >= 0")
    if s > ENUM_MAX_COLOURS or t > ENUM_MAX_SIZE:
        raise ValueError(
            f"enumeration cap exceeded: s <= {ENUM_MAX_COLOURS} and "
            f"t <= {ENUM_MAX_SIZE}, got s={s}, t={t}"
        )
    total = 0
    for sizes in compositions_into(t, s):
        product = 1
        for sz in sizes:
            product *= len(_partition_lists.of(sz))
        total += product
    return total


# ---------------------------------------------------------------------------
# tiny finite fields with exhaustive axiom checks

_DEFAULT_MODULI = {
    # coefficients low to high, so (1, 1, 1) is 1 + x + x**2
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
}

_ALT_MODULI = {
    8: (1, 0, 1, 1),
}

_SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)


def _prime_power(q: int) -> tuple[int, int]:
    for p in (2, 3, 5, 7):
        if q % p == 0:
            k = 0
            rest = q
            while rest % p == 0:
                rest //= p
                k += 1
            if rest != 1:
                raise ValueError(f"q = {q} is not a prime power")
            return p, k
    raise ValueError(f"q = {q} is out of the supported range {_SUPPORTED_Q}")


class SmallField:
    """GF(q) for q <= 9, elements encoded as ints 0..q-1 via base-p digits
    (low digit first). Construction verifies every field axiom by
    exhaustion, so a reducible modulus is rejected rather than silently
    producing a non-field."""

    def __init__(self, q: int, modulus: tuple[int, ...] | None = None) -> None:
        if q not in _SUPPORTED_Q:
            raise ValueError(f"q = {q} is out of the supported range {_SUPPORTED_Q}")
        p, k = _prime_power(q)
        self.q = q
        self.p = p
        self.deg = k
        if k == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus = None
        else:
            if modulus is None:
                modulus = _DEFAULT_MODULI[q]
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {k} over GF({p}), "
                    f"coefficients listed low to high"
                )
            self.modulus = modulus
        self._build_tables()
        self._verify_axioms()

    # -- element codecs -----------------------------------------------------

    def _digits(self, e: int) -> list[int]:
        out = []
        for _ in range(self.deg):
            out.append(e % self.p)
            e //= self.p
        return out

    def _encode(self, digits: list[int]) -> int:
        e = 0
        for c in reversed(digits):
            e = e * self.p + (c % self.p)
        return e

    # -- table construction ---------------------------------------------------

    def _poly_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.deg
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        # reduce x**k = -(lower modulus coefficients), repeatedly
        for idx in range(len(prod) - 1, k - 1, -1):
            c = prod[idx]
            if c:
                prod[idx] = 0
                for j in range(k):
                    prod[idx - k + j] = (prod[idx - k + j] - c * self.modulus[j]) % p
        return self._encode(prod[:k])

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        if self.deg == 1:
            self._add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self._mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            self._add = [
                [
                    self._encode([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))])
                    for b in range(q)
                ]
                for a in range(q)
            ]
            self._mul = [[self._poly_mul(a, b) for b in range(q)] for a in range(q)]
        self._neg = [next(b for b in range(q) if self._add[a][b] == 0) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            hits = [b for b in range(1, q) if self._mul[a][b] == 1]
            if len(hits) != 1:
                raise ValueError(
                    f"modulus {self.modulus} does not define a field: "
                    f"element {a} has {len(hits)} inverses"
                )
            inv[a] = hits[0]
        self._inv = inv

    def _verify_axioms(self) -> None:
        q = self.q
        rng = range(q)
        for a in rng:
            if self._add[a][0] != a or self._mul[a][1] != a:
                raise ValueError("identity axiom failed")
            for b in rng:
                if self._add[a][b] != self._add[b][a] or self._mul[a][b] != self._mul[b][a]:
                    raise ValueError("commutativity axiom failed")
                for c in rng:
                    if self._add[self._add[a][b]][c] != self._add[a][self._add[b][c]]:
                        raise ValueError("additive associativity failed")
                    if self._mul[self._mul[a][b]][c] != self._mul[a][self._mul[b][c]]:
                        raise ValueError("multiplicative associativity failed")
                    lhs = self._mul[a][self._add[b][c]]
                    rhs = self._add[self._mul[a][b]][self._mul[a][c]]
                    if lhs != rhs:
                        raise ValueError("distributivity failed")
        for a in range(1, q):
            if self._mul[a][self._inv[a]] != 1:
                raise ValueError("multiplicative inverse failed")

    # -- arithmetic -----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def generator(self) -> int:
        """An element of multiplicative order q - 1."""
        for a in range(2, self.q):
            x, order = a, 1
            while x != 1:
                x = self._mul[x][a]
                order += 1
            if order == self.q - 1:
                return a
        return 1  # q = 2


# ---------------------------------------------------------------------------
# dense matrices over a SmallField, as tuples of row tuples


def mat_identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(field: SmallField, a, b):
    n = len(a)
    add, mul = field.add, field.mul
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = 0
            for t in range(n):
                acc = add(acc, mul(a[i][t], b[t][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_det(field: SmallField, a) -> int:
    n = len(a)
    if n == 1:
        return a[0][0]
    det = 0
    sign_flip = False
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1 :] for row in a[1:])
        term = field.mul(a[0][j], mat_det(field, minor))
        if sign_flip:
            term = field.neg(term)
        det = field.add(det, term)
        sign_flip = not sign_flip
    return det


def mat_inv(field: SmallField, a):
    n = len(a)
    work = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        scale = field.inv(work[col][col])
        work[col] = [field.mul(scale, x) for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [
                    field.sub(x, field.mul(factor, y)) for x, y in zip(work[r], work[col])
                ]
    return tuple(tuple(row[n:]) for row in work)


def mat_pow(field: SmallField, a, e: int):
    if e < 0:
        return mat_pow(field, mat_inv(field, a), -e)
    result = mat_identity(len(a))
    base = a
    while e:
        if e & 1:
            result = mat_mul(field, result, base)
        base = mat_mul(field, base, base)
        e >>= 1
    return result


def gl_order(n: int, q: int) -> int:
    order = 1
    for i in range(n):
        order *= q**n - q**i
    return order


def mulclose(field: SmallField, gens, cap: int):
    """Close a generator list under multiplication; error past `cap`."""
    identity = mat_identity(len(gens[0]))
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mat_mul(field, x, g)
                if y not in seen:
                    if len(seen) >= cap:
                        raise ValueError(f"mulclose cap {cap} exceeded")
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def gl_generators(field: SmallField, n: int):
    """A standard generating set: a diagonal torus generator, an n-cycle
    permutation matrix, and one transvection."""
    alpha = field.generator()
    diag = tuple(
        tuple((alpha if i == 0 else 1) if i == j else 0 for j in range(n)) for i in range(n)
    )
    if n == 1:
        return [diag]
    cycle = tuple(tuple(1 if j == (i - 1) % n else 0 for j in range(n)) for i in range(n))
    transvection = tuple(
        tuple(1 if i == j or (i, j) == (0, 1) else 0 for j in range(n)) for i in range(n)
    )
    return [diag, cycle, transvection]


# ---------------------------------------------------------------------------
# conjugacy census of ell-power-order elements in GL_n(q)

FULL_SCAN_LIMIT = 30_000
GROUP_ORDER_CAP = 10_000_000
MAX_N = 3


@dataclass(frozen=True)
class ClassDatum:
    representative: tuple
    size: int
    centralizer_order: int
    element_order: int


@dataclass(frozen=True)
class MatrixGroupCensus:
    group: str
    n: int
    q: int
    ell: int
    group_order: int
    classes: tuple[ClassDatum, ...]

    @property
    def ell_element_total(self) -> int:
        return sum(c.size for c in self.classes)


def _is_ell_power_element(field: SmallField, x, ell: int, nu: int) -> bool:
    y = x
    identity = mat_identity(len(x))
    for _ in range(nu):
        if y == identity:
            return True
        y = mat_pow(field, y, ell)
    return y == identity


def _element_order(field: SmallField, x, bound: int) -> int:
    identity = mat_identity(len(x))
    y = x
    order = 1
    while y != identity:
        y = mat_mul(field, y, x)
        order += 1
        if order > bound:
            raise ValueError("element order exceeds the group order bound")
    return order


def conjugacy_class(field: SmallField, x, conjugators):
    """Orbit of x under conjugation by the given (g, g**-1) pairs, closed
    by breadth-first search."""
    orbit = {x}
    frontier = [x]
    while frontier:
        new = []
        for z in frontier:
            for g, ginv in conjugators:
                y = mat_mul(field, ginv, mat_mul(field, z, g))
                if y not in orbit:
                    orbit.add(y)
                    new.append(y)
        frontier = new
    return orbit


def _sylow_subgroup(field, n, q, ell, nu, order, rng_seed):
    """Build one Sylow ell-subgroup. When ell divides q - 1 the diagonal
    torus plus an ell-cycle already generate it; otherwise take ell-parts
    of seeded-random elements until the size is right. Either way the
    result has order exactly ell**nu, so every ell-class meets it."""
    target = ell**nu
    gens = []
    if (q - 1) % ell == 0:
        # beta generates the ell-part of the unit group
        alpha = field.generator()
        cofactor = (q - 1) // ell ** valuation(ell, q - 1)
        beta = 1
        for _ in range(cofactor):
            beta = field.mul(beta, alpha)
        for i in range(n):
            gens.append(
                tuple(
                    tuple((beta if i == j2 else 1) if j1 == j2 else 0 for j2 in range(n))
                    for j1 in range(n)
                )
            )
        if ell <= n:
            cyc = list(range(n))
            cyc[:ell] = [(i + 1) % ell for i in range(ell)]
            gens.append(
                tuple(tuple(1 if j == cyc[i] else 0 for j in range(n)) for i in range(n))
            )
    gens = [g for g in gens if g != mat_identity(n)]
    group = mulclose(field, gens, 2 * target) if gens else {mat_identity(n)}
    rng = random.Random(rng_seed)
    tries = 0
    while len(group) < target:
        tries += 1
        if tries > 500:
            raise RuntimeError("failed to assemble the Sylow subgroup")
        entries = [rng.randrange(q) for _ in range(n * n)]
        g = tuple(tuple(entries[i * n : (i + 1) * n]) for i in range(n))
        if mat_det(field, g) == 0:
            continue
        y = mat_pow(field, g, order // target)
        if y not in group:
            gens.append(y)
            group = mulclose(field, gens, 2 * target)
    if len(group) != target:
        raise RuntimeError("Sylow subgroup has the wrong order")
    return group


def gl_ell_class_census(
    n: int,
    q: int,
    ell: int,
    modulus: tuple[int, ...] | None = None,
    rng_seed: int = 0,
) -> MatrixGroupCensus:
    """Conjugacy classes of ell-power-order elements of GL_n(q), computed
    by explicit matrix arithmetic. Small groups are scanned in full;
    larger ones are seeded from one Sylow ell-subgroup, which meets every
    ell-class, and closed under conjugation."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"census cap exceeded: n must be 1..{MAX_N}, got {n}")
    if not is_prime(ell) or ell == 2:
        raise ValueError(f"ell must be an odd prime, got {ell}")
    if q % ell == 0:
        raise ValueError("ell must not divide q")
    order = gl_order(n, q)
    if order > GROUP_ORDER_CAP:
        raise ValueError(
            f"census cap exceeded: |GL_{n}({q})| = {order} > {GROUP_ORDER_CAP}"
        )
    field = SmallField(q, modulus)
    nu = valuation(ell, order)
    identity = mat_identity(n)

    if n == 1:
        units = [(x,) for x in range(1, q)]
        classes = []
        for (x,) in sorted(units):
            mat = ((x,),)
            if _is_ell_power_element(field, mat, ell, nu):
                classes.append(
                    ClassDatum(mat, 1, q - 1, _element_order(field, mat, q - 1))
                )
        return MatrixGroupCensus("GL", n, q, ell, order, tuple(classes))

    gens = gl_generators(field, n)
    conjugators = [(g, mat_inv(field, g)) for g in gens]

    if q ** (n * n) <= FULL_SCAN_LIMIT:
        seeds = set()
        for entries in itertools.product(range(q), repeat=n * n):
            mat = tuple(entries[i * n : (i + 1) * n] for i in range(n))
            if mat_det(field, mat) != 0 and _is_ell_power_element(field, mat, ell, nu):
                seeds.add(mat)
        full_scan = True
    else:
        seeds = set(_sylow_subgroup(field, n, q, ell, nu, order, rng_seed))
        full_scan = False

    classes = []
    seen: set = set()
    for x in sorted(seeds):
        if x in seen:
            continue
        orbit = conjugacy_class(field, x, conjugators)
        seen |= orbit
        size = len(orbit)
        if order % size:
            raise RuntimeError("class size does not divide the group order")
        rep = min(orbit)
        classes.append(
            ClassDatum(rep, size, order // size, _element_order(field, x, order))
        )
    if full_scan and len(seen) != len(seeds):
        raise RuntimeError("class partition does not cover the scanned elements")
    classes.sort(key=lambda c: (c.size, c.representative))
    return MatrixGroupCensus("GL", n, q, ell, order, tuple(classes))


def census_matches_weight_vectors(
    census: MatrixGroupCensus, inventory: slots.SlotInventory | None = None
) -> bool:
    """Confront a brute-force census with the weight-vector calculus: the
    class count and the multiset of centralizer orders must both match the
    predictions read off the slot inventory for the same (n, q, ell)."""
    profile = ell_profile(census.q, census.ell)
    if inventory is None:
        inventory = slots.build_inventory(slots.LINEAR, census.ell, profile.d, profile.a)
    if (inventory.ell, inventory.d, inventory.a) != (census.ell, profile.d, profile.a):
        raise ValueError("inventory does not match the census parameters")
    w, r = divmod(census.n, profile.d)
    vectors = list(slots.enumerate_weight_vectors(inventory, w))
    if len(vectors) != len(census.classes):
        return False
    predicted = sorted(
        slots.centralizer_shape(inventory, vec, w, r).linear_order(census.q)
        for vec in vectors
    )
    actual = sorted(c.centralizer_order for c in census.classes)
    return predicted == actual


# ---------------------------------------------------------------------------
# wreath-product reflection groups G(m, p, n), element by element

GMPN_CAP = 1_000_000


def gmpn_identity(n: int):
    return (tuple(range(n)), (0,) * n)


def gmpn_mul(m: int, g, h):
    """Compose g then h: permutations act first-to-second, exponents add
    along the first permutation."""
    sg, eg = g
    sh, eh = h
    n = len(sg)
    perm = tuple(sh[sg[i]] for i in range(n))
    exps = tuple((eg[i] + eh[sg[i]]) % m for i in range(n))
    return (perm, exps)


def gmpn_inv(m: int, g):
    sg, eg = g
    n = len(sg)
    si = [0] * n
    for i, img in enumerate(sg):
        si[img] = i
    exps = tuple((-eg[si[j]]) % m for j in range(n))
    return (tuple(si), exps)


def gmpn_order(m: int, p: int, n: int) -> int:
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return m**n * fact // p


def gmpn_elements(m: int, p: int, n: int):
    """List the full group: pairs (permutation, exponent vector) with
    exponent sum divisible by p."""
    if p < 1 or m % p != 0:
        raise ValueError("need p >= 1 dividing m")
    if n < 1:
        raise ValueError("need n >= 1")
    size = gmpn_order(m, p, n)
    if size > GMPN_CAP:
        raise ValueError(f"enumeration cap exceeded: |G({m},{p},{n})| = {size} > {GMPN_CAP}")
    elements = []
    for perm in itertools.permutations(range(n)):
        for exps in itertools.product(range(m), repeat=n):
            if sum(exps) % p == 0:
                elements.append((perm, exps))
    if len(elements) != size:
        raise RuntimeError("element listing does not match the order formula")
    return elements


def gmpn_generators(m: int, p: int, n: int):
    gens = []
    ident = gmpn_identity(n)
    if n >= 2:
        swap = list(range(n))
        swap[0], swap[1] = swap[1], swap[0]
        gens.append((tuple(swap), (0,) * n))
        gens.append((tuple(range(1, n)) + (0,), (0,) * n))
        gens.append((tuple(range(n)), (1 % m, (m - 1) % m) + (0,) * (n - 2)))
    if p < m:
        gens.append((tuple(range(n)), (p % m,) + (0,) * (n - 1)))
    return [g for g in gens if g != ident]


def gmpn_class_count(m: int, p: int, n: int) -> int:
    """Number of conjugacy classes of G(m, p, n), found by partitioning an
    explicit element list under conjugation by generators."""
    elements = gmpn_elements(m, p, n)
    gens = gmpn_generators(m, p, n)
    pairs = [(g, gmpn_inv(m, g)) for g in gens]
    seen = set()
    count = 0
    covered = 0
    for x in elements:
        if x in seen:
            continue
        count += 1
        orbit = {x}
        frontier = [x]
        while frontier:
            new = []
            for z in frontier:
                for g, ginv in pairs:
                    y = gmpn_mul(m, ginv, gmpn_mul(m, z, g))
                    if y not in orbit:
                        orbit.add(y)
                        new.append(y)
            frontier = new
        seen |= orbit
        covered += len(orbit)
    if covered != len(elements):
        raise RuntimeError("conjugacy classes do not cover the group")
    return count


# ---------------------------------------------------------------------------
# one completely explicit block fixture: SL_2(4), which is the alternating
# group on five letters

def sl2_gf4_census() -> tuple[ClassDatum, ...]:
    """Conjugacy classes of SL_2(4) via a full 256-matrix scan, conjugating
    only within the group itself."""
    field = SmallField(4)
    elements = []
    for entries in itertools.product(range(4), repeat=4):
        mat = (entries[0:2], entries[2:4])
        if mat_det(field, mat) == 1:
            elements.append(mat)
    if len(elements) != 60:
        raise RuntimeError("SL_2(4) scan found the wrong number of matrices")
    conjugators = [(g, mat_inv(field, g)) for g in elements]
    classes = []
    seen: set = set()
    for x in sorted(elements):
        if x in seen:
            continue
        orbit = conjugacy_class(field, x, conjugators)
        seen |= orbit
        classes.append(
            ClassDatum(min(orbit), len(orbit), 60 // len(orbit), _element_order(field, x, 60))
        )
    classes.sort(key=lambda c: (c.element_order, c.size, c.representative))
    return tuple(classes)


def a5_fixture_check() -> dict:
    """Work the 60-element fixture end to end with rational character data:
    integrality and mod-3 agreement of central character values pins down
    the principal 3-block as {trivial, degree 4, degree 5}, and the two
    degree-3 characters have defect zero. Returns the headline numbers."""
    classes = sl2_gf4_census()
    sizes = tuple(c.size for c in classes)
    orders = tuple(c.element_order for c in classes)
    if sizes != (1, 15, 20, 12, 12) or orders != (1, 2, 3, 5, 5):
        raise RuntimeError(f"unexpected class data: sizes={sizes}, orders={orders}")
    degrees = (1, 3, 3, 4, 5)
    if sum(d * d for d in degrees) != 60:
        raise RuntimeError("degree sum check failed")
    # character values on the classes above, in the same order; the two
    # degree-3 characters are irrational on the order-5 classes and are
    # not needed: they have 3-defect zero and sit in singleton blocks.
    rational_rows = {
        1: (1, 1, 1, 1, 1),
        4: (4, 0, 1, -1, -1),
        5: (5, 1, -1, 0, 0),
    }
    central_rows = {}
    for degree, values in rational_rows.items():
        row = []
        for size, value in zip(sizes, values):
            num = size * value
            if num % degree:
                raise RuntimeError(
                    f"central character of the degree-{degree} row is not integral"
                )
            row.append(num // degree)
        central_rows[degree] = tuple(row)
    base = tuple(v % 3 for v in central_rows[1])
    for degree, row in central_rows.items():
        if tuple(v % 3 for v in row) != base:
            raise RuntimeError(
                f"degree-{degree} row leaves the principal 3-block unexpectedly"
            )
    # defect zero for the degree-3 pair: 3 divides the degree exactly as
    # often as it divides the group order
    if valuation(3, 60) != 1 or valuation(3, 3) != 1:
        raise RuntimeError("defect-zero check failed")
    return {
        "group_order": 60,
        "class_sizes": sizes,
        "element_orders": orders,
        "principal_block_size": len(rational_rows),
        "defect_zero_count": 2,
    }
