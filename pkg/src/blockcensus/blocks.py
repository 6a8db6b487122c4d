"""Block invariants of finite classical groups at odd primes: exact
character counts per block, defect group orders, abelianness, and the
verdict of the strong conjecture check k(B) <= |D| (strict unless the
defect group is abelian). Includes the sweep engine that turns parameter
ranges into a deterministic report.
"""

from __future__ import annotations

import hashlib
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import slots
from ._version import __version__
from .counting import (
    CountCache,
    composition_sum,
    d_core_count,
    exact_div,
    is_prime,
    k_ell_a_w,
    p_ell,
    shared_cache,
    val_factorial,
)

GL = "GL"
GU = "GU"
SLRANGE = "SLrange"
SURANGE = "SUrange"
PSLELL = "PSLell"
SP = "Sp"
SOODD = "SOodd"
SOEVEN_PLUS = "SOevenPlus"
SOEVEN_MINUS = "SOevenMinus"
GOEVEN_PLUS = "GOevenPlus"
GOEVEN_MINUS = "GOevenMinus"

FAMILIES = (
    GL,
    GU,
    SLRANGE,
    SURANGE,
    PSLELL,
    SP,
    SOODD,
    SOEVEN_PLUS,
    SOEVEN_MINUS,
    GOEVEN_PLUS,
    GOEVEN_MINUS,
)

# Weight-addressed families and the slot-calculus family each one maps to
# for the independent proof-path cross-check.
WEIGHT_FAMILIES = {
    GL: slots.LINEAR,
    GU: slots.UNITARY,
    SP: slots.SYMPLECTIC,
    SOODD: slots.SYMPLECTIC,
    GOEVEN_PLUS: slots.EVEN_ORTHOGONAL,
    GOEVEN_MINUS: slots.EVEN_ORTHOGONAL,
    SOEVEN_PLUS: slots.EVEN_ORTHOGONAL,
    SOEVEN_MINUS: slots.EVEN_ORTHOGONAL,
}

# For the even special orthogonal groups the block sum only bounds the true
# count from above (one such block may split in two there).
UPPER_BOUND_FAMILIES = frozenset({SOEVEN_PLUS, SOEVEN_MINUS})

PRINCIPAL_FAMILIES = (SLRANGE, SURANGE, PSLELL)

EXACT = "exact"
UPPER_BOUND = "upper_bound"

HOLDS_STRICT = "HOLDS_STRICT"
HOLDS_EQUALITY_ABELIAN = "HOLDS_EQUALITY_ABELIAN"
HOLDS_NONSTRICT = "HOLDS_NONSTRICT"
VIOLATION = "VIOLATION"
INCONCLUSIVE_UPPER_BOUND = "INCONCLUSIVE_UPPER_BOUND"

VERDICTS = (
    HOLDS_STRICT,
    HOLDS_EQUALITY_ABELIAN,
    HOLDS_NONSTRICT,
    VIOLATION,
    INCONCLUSIVE_UPPER_BOUND,
)

__all__ = [
    "FAMILIES",
    "WEIGHT_FAMILIES",
    "UPPER_BOUND_FAMILIES",
    "PRINCIPAL_FAMILIES",
    "VERDICTS",
    "EXACT",
    "UPPER_BOUND",
    "HOLDS_STRICT",
    "HOLDS_EQUALITY_ABELIAN",
    "HOLDS_NONSTRICT",
    "VIOLATION",
    "INCONCLUSIVE_UPPER_BOUND",
    "EllProfile",
    "BlockQuery",
    "BlockInvariants",
    "multiplicative_order",
    "valuation",
    "ell_profile",
    "ennola_profile",
    "k_unipotent_block",
    "k_principal_slrange",
    "k_principal_pslell",
    "defect_exponent",
    "is_abelian_defect",
    "verdict",
    "bound_thm_slnproof",
    "enumerate_unipotent_blocks_linear",
    "block_invariants",
    "SweepSpec",
    "CensusReport",
    "REPORT_COLUMNS",
    "sweep",
]


def multiplicative_order(x: int, modulus: int) -> int:
    if modulus < 2 or math.gcd(x, modulus) != 1:
        raise ValueError(f"{x} is not invertible modulo {modulus}")
    order = 1
    acc = x % modulus
    while acc != 1:
        acc = acc * x % modulus
        order += 1
    return order


def valuation(ell: int, n: int) -> int:
    """Exponent of the largest power of ell dividing n (n nonzero)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


@dataclass(frozen=True)
class EllProfile:
    """The (d, a) shape of a prime ell relative to a field size q: d is the
    order parameter and a the valuation of q**d - 1 at ell. Profiles may be
    synthetic (q omitted) so sweeps need not hunt for witness field sizes."""

    ell: int
    d: int
    a: int
    q: int | None = None

    def __post_init__(self) -> None:
        if not is_prime(self.ell):
            raise ValueError(f"ell must be prime, got {self.ell}")
        if self.a < 1:
            raise ValueError("a must be >= 1")
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.ell == 2:
            if self.d not in (1, 2):
                raise ValueError("for ell = 2 the order parameter is taken mod 4")
        elif (self.ell - 1) % self.d:
            raise ValueError(
                f"d={self.d} must divide ell-1={self.ell - 1} for odd ell"
            )

    @property
    def dprime(self) -> int:
        return self.d // math.gcd(self.d, 2)


def ell_profile(q: int, ell: int) -> EllProfile:
    """Profile of ell relative to q: multiplicative order of q mod ell for
    odd ell (mod 4 for ell = 2, where the block formulas then refuse to
    run), and the exact valuation a of q**d - 1."""
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    if q < 2:
        raise ValueError("q must be >= 2")
    if q % ell == 0:
        raise ValueError(f"ell={ell} divides q={q}; profile undefined")
    if ell == 2:
        d = 1 if q % 4 == 1 else 2
    else:
        d = multiplicative_order(q, ell)
    a = valuation(ell, q**d - 1)
    return EllProfile(ell, d, a, q)


def ennola_profile(q: int, ell: int) -> EllProfile:
    """Profile with q replaced by -q, the standard transfer to the unitary
    groups. Odd ell only."""
    if not is_prime(ell) or ell == 2:
        raise ValueError("ennola profiles are defined for odd primes only")
    if q % ell == 0:
        raise ValueError(f"ell={ell} divides q={q}; profile undefined")
    e = multiplicative_order(-q % ell, ell)
    a = valuation(ell, abs((-q) ** e - 1))
    return EllProfile(ell, e, a, q)


@dataclass(frozen=True)
class BlockQuery:
    """Addresses one block: a family tag, an ell-adic profile, and either a
    weight w (weight-addressed families) or a rank n with the index data
    (g, m) for the principal blocks of the special linear range."""

    family: str
    profile: EllProfile
    w: int | None = None
    n: int | None = None
    g: int = 0
    m: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.g < 0 or self.m < 0:
            raise ValueError("g and m must be >= 0")
        if self.w is not None and self.w < 0:
            raise ValueError("w must be >= 0")
        if self.n is not None and self.n < 1:
            raise ValueError("n must be >= 1")
        if self.w is not None and self.n is not None:
            if self.w * self.profile.dprime > self.n:
                raise ValueError(
                    f"weight {self.w} does not fit into rank {self.n} "
                    f"(w * d' = {self.w * self.profile.dprime})"
                )
        if self.family in (SOEVEN_PLUS, SOEVEN_MINUS, GOEVEN_PLUS, GOEVEN_MINUS):
            if self.n is not None and self.n < 4:
                raise ValueError("even orthogonal families need n >= 4")


def _require_odd(profile: EllProfile) -> None:
    if profile.ell == 2:
        raise ValueError(
            "ell = 2 unsupported: the block formulas here require odd ell"
        )


def exactness_for(family: str) -> str:
    return UPPER_BOUND if family in UPPER_BOUND_FAMILIES else EXACT


def k_unipotent_block(query: BlockQuery, cache: CountCache | None = None) -> int:
    """Number of ordinary irreducible characters in the weight-w unipotent
    block of the given family.

    Head colour count is denom + (ell**a - 1)/denom and tail colour count
    (ell**a - ell**(a-1))/denom, where denom is the order parameter d for
    the (general) linear and unitary families and 2d' for the symplectic
    and orthogonal ones. The result is exact except for the even special
    orthogonal groups, where it is only an upper bound (see exactness_for).
    """
    if query.family not in WEIGHT_FAMILIES:
        raise ValueError(f"family {query.family!r} is not weight-addressed")
    if query.w is None:
        raise ValueError("weight-addressed query needs w")
    profile = query.profile
    _require_odd(profile)
    ell, a = profile.ell, profile.a
    denom = profile.d if query.family in (GL, GU) else 2 * profile.dprime
    if (ell - 1) % denom:
        raise ValueError(f"slot denominator {denom} does not divide ell-1={ell - 1}")
    head = denom + exact_div(ell**a - 1, denom)
    tail = exact_div(ell**a - ell ** (a - 1), denom)
    return composition_sum(ell, head, tail, query.w, cache)


def k_principal_slrange(query: BlockQuery, cache: CountCache | None = None) -> int:
    """Character count of the principal block for a group between the
    special linear (or unitary) group and its general cousin, with index
    valuation g and centre valuation m, in the fully split case d = 1.

    Terms at i >= 1 exist only when ell**i divides n; the closing division
    by ell**g must be exact and failure signals a transcription bug.
    """
    if query.family not in (SLRANGE, SURANGE):
        raise ValueError(f"family {query.family!r} is not in the special linear range")
    if query.n is None:
        raise ValueError("principal-block query needs n")
    profile = query.profile
    _require_odd(profile)
    ell, a = profile.ell, profile.a
    n, g, m = query.n, query.g, query.m
    u = min(m, g)
    total = k_ell_a_w(ell, a, n, cache)
    for i in range(1, u + 1):
        step = ell**i
        if n % step:
            continue
        total += ell ** (2 * i - 2) * (ell**2 - 1) * k_ell_a_w(ell, a, n // step, cache)
    return exact_div(total, ell**g)


def k_principal_pslell(ell: int, a: int, cache: CountCache | None = None) -> int:
    """Character count of the principal block of the simple quotient in the
    boundary case n = ell, folded down from the special linear count; the
    division by ell is exact."""
    profile = EllProfile(ell, 1, a)
    _require_odd(profile)
    query = BlockQuery(SLRANGE, profile, n=ell, g=a, m=1)
    k_sl = k_principal_slrange(query, cache)
    return exact_div(k_sl + ell - 1, ell)


def defect_exponent(
    family: str,
    ell: int,
    a: int,
    w: int | None = None,
    n: int | None = None,
    g: int = 0,
) -> int:
    """Exponent e with |D| = ell**e for the addressed block.

    Weight-addressed families carry a wreath-shaped defect group of order
    ell**(a*w) * (w!)-part; the special linear range subtracts the index
    valuation g, and the simple quotient at n = ell additionally loses the
    centre."""
    if family in WEIGHT_FAMILIES:
        if w is None:
            raise ValueError("weight-addressed families need w")
        return a * w + val_factorial(ell, w)
    if family in (SLRANGE, SURANGE):
        if n is None:
            raise ValueError("special linear range needs n")
        return a * n + val_factorial(ell, n) - g
    if family == PSLELL:
        return a * ell + val_factorial(ell, ell) - a - 1
    raise ValueError(f"unknown family {family!r}")


def is_abelian_defect(w: int, ell: int) -> bool:
    """Whether the weight-w wreath-shaped defect group is abelian: true
    exactly when w < ell, the same condition as val_factorial(ell, w) = 0."""
    return w < ell


def _abelian_flag(family: str, query: BlockQuery) -> bool:
    if family in WEIGHT_FAMILIES:
        return is_abelian_defect(query.w, query.profile.ell)
    if family in (SLRANGE, SURANGE):
        return query.n < query.profile.ell
    # Simple quotient at n = ell: the quotient of the wreath-point defect
    # group by the centre is abelian only in the very smallest case.
    return (query.profile.ell, query.profile.a) == (3, 1)


def verdict(k_B: int, exactness: str, defect_exp: int, abelian: bool, ell: int) -> str:
    """Classify one block against the strong conjecture form.

    For exact counts: strict inequality, equality with abelian defect,
    equality with non-abelian defect (the strong form fails there, reported
    distinctly), or violation. An upper bound that exceeds the allowed
    threshold proves nothing and is reported inconclusive."""
    if exactness not in (EXACT, UPPER_BOUND):
        raise ValueError(f"unknown exactness {exactness!r}")
    order = ell**defect_exp
    threshold = order if abelian else order - 1
    if exactness == UPPER_BOUND and k_B > threshold:
        return INCONCLUSIVE_UPPER_BOUND
    if k_B > order:
        return VIOLATION
    if k_B == order:
        return HOLDS_EQUALITY_ABELIAN if abelian else HOLDS_NONSTRICT
    return HOLDS_STRICT


def bound_thm_slnproof(
    n: int, ell: int, a: int, m: int, cache: CountCache | None = None
) -> int:
    """Closed upper estimate dominating k_principal_slrange at g = a:
    (p_ell(n) * ell**(a n) + sum over i <= m with ell**i | n of
    p_ell(n / ell**i) * ell**(a n / ell**i + 2 i)) / ell**a."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_prime(ell) or ell == 2:
        raise ValueError("ell must be an odd prime")
    total = p_ell(ell, n, cache) * ell ** (a * n)
    for i in range(1, m + 1):
        step = ell**i
        if n % step:
            continue
        total += p_ell(ell, n // step, cache) * ell ** (a * (n // step) + 2 * i)
    return exact_div(total, ell**a)


def enumerate_unipotent_blocks_linear(
    n: int, d: int, cache: CountCache | None = None
) -> list[tuple[int, int]]:
    """Weights of the unipotent blocks of a rank-n linear group with order
    parameter d, with multiplicities given by the d-core counts of the
    leftover rank. Emitted in descending weight, zero multiplicities
    dropped."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    out = []
    for w in range(n // d, -1, -1):
        mult = d_core_count(n - w * d, d, cache)
        if mult:
            out.append((w, mult))
    return out


@dataclass(frozen=True)
class BlockInvariants:
    k_B: int
    exactness: str
    defect_exponent: int
    abelian_defect: bool
    verdict: str
    two_path_checked: bool = False


def _check_profile_consistency(family: str, profile: EllProfile) -> None:
    if profile.q is None:
        return
    derive = ennola_profile if family in (GU, SURANGE) else ell_profile
    derived = derive(profile.q, profile.ell)
    if (derived.d, derived.a) != (profile.d, profile.a):
        raise ValueError(
            f"profile (d={profile.d}, a={profile.a}) does not match q={profile.q}: "
            f"derived (d={derived.d}, a={derived.a})"
        )


def block_invariants(
    query: BlockQuery,
    cache: CountCache | None = None,
    check_two_path: bool = True,
) -> BlockInvariants:
    """Full invariant bundle for one block query.

    For weight-addressed families the closed-form count is recomputed along
    the slot-calculus path and the two values must agree exactly; a
    mismatch raises instead of producing a row, because it would mean the
    two formula transcriptions disagree."""
    cache = cache or shared_cache
    family = query.family
    profile = query.profile
    _require_odd(profile)
    _check_profile_consistency(family, profile)
    two_path_checked = False
    if family in WEIGHT_FAMILIES:
        k = k_unipotent_block(query, cache)
        if check_two_path:
            other = slots.block_count_proof_path(
                WEIGHT_FAMILIES[family], profile.ell, profile.d, profile.a, query.w, cache
            )
            if other != k:
                raise ArithmeticError(
                    f"two-path mismatch for {family} "
                    f"(ell={profile.ell}, d={profile.d}, a={profile.a}, w={query.w}): "
                    f"closed form {k}, slot calculus {other}"
                )
            two_path_checked = True
        exp = defect_exponent(family, profile.ell, profile.a, w=query.w)
    elif family in (SLRANGE, SURANGE):
        k = k_principal_slrange(query, cache)
        exp = defect_exponent(family, profile.ell, profile.a, n=query.n, g=query.g)
    elif family == PSLELL:
        k = k_principal_pslell(profile.ell, profile.a, cache)
        exp = defect_exponent(family, profile.ell, profile.a)
    else:
        raise ValueError(f"unknown family {family!r}")
    abelian = _abelian_flag(family, query)
    exactness = exactness_for(family)
    return BlockInvariants(
        k_B=k,
        exactness=exactness,
        defect_exponent=exp,
        abelian_defect=abelian,
        verdict=verdict(k, exactness, exp, abelian, profile.ell),
        two_path_checked=two_path_checked,
    )


def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@dataclass(frozen=True)
class SweepSpec:
    """Parameter ranges for a census sweep. d_values = None expands to all
    divisors of ell - 1 per ell. Weight families consume w_values, the
    special linear range consumes n_values and g_values (default (a,)),
    and the simple-quotient family is keyed by (ell, a) alone."""

    families: tuple[str, ...] = ()
    ell_values: tuple[int, ...] = ()
    d_values: tuple[int, ...] | None = None
    a_values: tuple[int, ...] = (1,)
    w_values: tuple[int, ...] = ()
    n_values: tuple[int, ...] = ()
    g_values: tuple[int, ...] | None = None
    q_values: tuple[int, ...] = ()

    def canonical(self) -> dict:
        return {
            "families": list(self.families),
            "ell_values": list(self.ell_values),
            "d_values": "divisors" if self.d_values is None else list(self.d_values),
            "a_values": list(self.a_values),
            "w_values": list(self.w_values),
            "n_values": list(self.n_values),
            "g_values": "per-a" if self.g_values is None else list(self.g_values),
            "q_values": list(self.q_values),
        }

    def validate(self) -> None:
        """Reject specs that cannot produce a meaningful sweep. Individual
        bad parameter combinations inside valid ranges become error rows
        instead."""
        if not self.families:
            raise ValueError("families list is empty")
        unknown = [f for f in self.families if f not in FAMILIES]
        if unknown:
            raise ValueError(f"unknown families: {', '.join(unknown)}")
        if not self.ell_values:
            raise ValueError("ell list is empty")
        for ell in self.ell_values:
            if ell == 2:
                raise ValueError(
                    "ell = 2 is not supported; the implemented block formulas "
                    "require odd primes"
                )
            if not is_prime(ell):
                raise ValueError(f"ell values must be prime, got {ell}")
        if not self.a_values:
            raise ValueError("a list is empty")
        needs_w = [f for f in self.families if f in WEIGHT_FAMILIES]
        if needs_w and not self.w_values:
            raise ValueError(f"families {needs_w} need w values")
        needs_n = [f for f in self.families if f in (SLRANGE, SURANGE)]
        if needs_n and not self.n_values:
            raise ValueError(f"families {needs_n} need n values")

    def row_params(self) -> list[dict]:
        """Flatten the ranges into per-row parameter dicts, in the fixed
        deterministic order (families outermost, then ell, d, a, then the
        weight or rank axis)."""
        rows = []
        qs = self.q_values or (None,)
        for family in self.families:
            if family in WEIGHT_FAMILIES:
                for ell in self.ell_values:
                    ds = self.d_values if self.d_values is not None else _divisors(ell - 1)
                    for d in ds:
                        for a in self.a_values:
                            for w in self.w_values:
                                for q in qs:
                                    rows.append(
                                        dict(family=family, ell=ell, d=d, a=a, w=w, q=q)
                                    )
            elif family in (SLRANGE, SURANGE):
                for ell in self.ell_values:
                    for a in self.a_values:
                        gs = self.g_values if self.g_values is not None else (a,)
                        for n in self.n_values:
                            for g in gs:
                                for q in qs:
                                    rows.append(
                                        dict(
                                            family=family,
                                            ell=ell,
                                            d=1,
                                            a=a,
                                            n=n,
                                            g=g,
                                            q=q,
                                        )
                                    )
            elif family == PSLELL:
                for ell in self.ell_values:
                    for a in self.a_values:
                        rows.append(dict(family=family, ell=ell, d=1, a=a, n=ell))
        return rows


REPORT_COLUMNS = (
    "family",
    "n",
    "ell",
    "d",
    "a",
    "w",
    "g",
    "m",
    "k_B",
    "exactness",
    "defect_exponent",
    "abelian",
    "verdict",
    "two_path_checked",
)


def _cell_text(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass
class CensusReport:
    rows: list[dict]
    metadata: dict
    errors: list[str] = field(default_factory=list)

    def row_strings(self) -> list[dict]:
        return [
            {col: _cell_text(row.get(col)) for col in REPORT_COLUMNS}
            for row in self.rows
        ]

    def has_violation(self) -> bool:
        return any(row.get("verdict") == VIOLATION for row in self.rows)

    def to_csv(self) -> str:
        lines = [f"# {key}: {self.metadata[key]}" for key in self.metadata]
        lines.append(",".join(REPORT_COLUMNS))
        for row in self.row_strings():
            lines.append(",".join(row[col] for col in REPORT_COLUMNS))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {"metadata": dict(self.metadata), "rows": self.row_strings()}
        return json.dumps(payload, indent=2) + "\n"

    def to_markdown(self) -> str:
        lines = [f"- {key}: {self.metadata[key]}" for key in self.metadata]
        lines.append("")
        lines.append("| " + " | ".join(REPORT_COLUMNS) + " |")
        lines.append("|" + "|".join(" --- " for _ in REPORT_COLUMNS) + "|")
        for row in self.row_strings():
            lines.append("| " + " | ".join(row[col] for col in REPORT_COLUMNS) + " |")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        if fmt == "md":
            return self.to_markdown()
        raise ValueError(f"unknown format {fmt!r}")


def spec_hash(spec: SweepSpec) -> str:
    canon = json.dumps(spec.canonical(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


def _evaluate_row(
    param: dict, cache: CountCache, check_two_path: bool
) -> tuple[dict, str | None]:
    family = param["family"]
    row = {col: None for col in REPORT_COLUMNS}
    row.update(
        family=family,
        ell=param.get("ell"),
        d=param.get("d"),
        a=param.get("a"),
        w=param.get("w"),
        n=param.get("n"),
        g=param.get("g"),
    )
    try:
        profile = EllProfile(param["ell"], param["d"], param["a"], param.get("q"))
        if family in WEIGHT_FAMILIES:
            query = BlockQuery(family, profile, w=param["w"], n=param.get("n"))
        elif family in (SLRANGE, SURANGE):
            m = min(valuation(profile.ell, param["n"]), profile.a)
            query = BlockQuery(family, profile, n=param["n"], g=param["g"], m=m)
            row.update(m=m)
        else:
            query = BlockQuery(family, profile, n=param["n"], g=profile.a, m=1)
            row.update(g=profile.a, m=1)
        inv = block_invariants(query, cache, check_two_path)
    except Exception as exc:
        row.update(verdict="ERROR")
        return row, f"{family} row {param}: {exc}"
    row.update(
        k_B=inv.k_B,
        exactness=inv.exactness,
        defect_exponent=inv.defect_exponent,
        abelian=inv.abelian_defect,
        verdict=inv.verdict,
        two_path_checked=inv.two_path_checked,
    )
    return row, None


def _warm_cache(params: list[dict], cache: CountCache) -> None:
    budgets = [p.get("w") or 0 for p in params] + [p.get("n") or 0 for p in params]
    if not budgets:
        return
    top = max(budgets)
    colours = set()
    for p in params:
        ell, d, a = p.get("ell"), p.get("d"), p.get("a")
        if not (ell and d and a) or ell == 2 or (ell - 1) % d:
            continue
        denom = d if p["family"] in (GL, GU) else 2 * (d // math.gcd(d, 2))
        if (ell - 1) % denom:
            continue
        colours.add(denom + (ell**a - 1) // denom)
        colours.add((ell**a - ell ** (a - 1)) // denom)
    cache.warm(sorted(colours), top)


def sweep(
    spec: SweepSpec,
    jobs: int = 1,
    cache: CountCache | None = None,
    check_two_path: bool = True,
    timestamp: str | None = None,
) -> CensusReport:
    """Evaluate every row of the sweep and assemble the report.

    Row order follows SweepSpec.row_params regardless of jobs; workers share
    the locked memo cache, so parallel runs return byte-identical reports."""
    cache = cache or shared_cache
    params = spec.row_params()
    _warm_cache(params, cache)
    if jobs > 1 and len(params) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(lambda p: _evaluate_row(p, cache, check_two_path), params)
            )
    else:
        results = [_evaluate_row(p, cache, check_two_path) for p in params]
    rows = [row for row, _ in results]
    errors = [msg for _, msg in results if msg]
    metadata = {
        "tool": "blockcensus",
        "version": __version__,
        "spec_hash": spec_hash(spec),
    }
    if timestamp is not None:
        metadata["timestamp"] = timestamp
    return CensusReport(rows=rows, metadata=metadata, errors=errors)
