"""Degree-n extensions F/Q as defining polynomials: archimedean signature,
decomposition profiles at unramified primes via mod-p factorization, declared
profiles at ramified primes (with a tame consistency guard), Klein-four local
analysis of biquadratic fields, and the root-number-over-extension evaluator.

A profile at p is a list of (e, f) pairs, one per prime of F above p. Ramified
primes are never factored p-adically here; their profiles are declared inputs,
checked against Sum e*f = n and the tame different bound v_p(disc) >= Sum f(e-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    TOP_VALUE,
    PolyFp,
    PolyQ,
    discriminant,
    factor_degrees,
    is_irreducible_mod_p,
    is_prime,
    iter_primes,
    legendre,
    sturm_real_roots,
    valuation,
)
from .ellcurve import (
    GOOD,
    SPLIT_MULT,
    UNKNOWN_23,
    CurveLocalData,
    local_root_number,
)
from .permgroup import GroupError, orbits, subgroup_closure

COMPUTED_UNRAMIFIED = "computed_unramified"
DECLARED_PROFILE = "declared"


class ExtensionError(ValueError):
    pass


class RequiresDeclaredProfile(ExtensionError):
    pass


class Incomputable(ExtensionError):
    """Root number over the extension cannot be evaluated; names the prime."""

    def __init__(self, prime, why):
        self.prime = prime
        self.why = why
        super().__init__(f"incomputable at p={prime}: {why}")


class PreconditionViolated(ExtensionError):
    pass


# ---------------------------------------------------------------- irreducibility


@dataclass(frozen=True)
class IrreducibilityCertificate:
    status: str  # "irreducible_mod_p" | "pattern_incompatible" | "unverified"
    witness_prime: int | None
    patterns: tuple[tuple[int, ...], ...]

    @property
    def certified(self) -> bool:
        return self.status in ("irreducible_mod_p", "pattern_incompatible")


def _splittable(pattern: tuple[int, ...], part: int) -> bool:
    """Can a sub-multiset of the factor degrees sum to `part`?"""
    reachable = 1  # bitmask of achievable sums
    for d in pattern:
        reachable |= reachable << d
    return bool(reachable >> part & 1)


def certify_irreducible(h: PolyQ, max_primes: int = 50) -> IrreducibilityCertificate:
    """Certify irreducibility over Q from mod-p factor patterns.

    Either some good prime has h irreducible mod p, or the observed patterns
    admit no common split n = a + (n-a); otherwise status "unverified" (never
    silently assumed irreducible).
    """
    if h.degree < 1:
        raise ExtensionError("constant polynomial")
    if h.degree == 1:
        return IrreducibilityCertificate("irreducible_mod_p", None, ())
    disc = discriminant(h)
    if disc == 0:
        raise ExtensionError("inseparable polynomial is reducible")
    patterns: list[tuple[int, ...]] = []
    count = 0
    for p in iter_primes():
        if count >= max_primes:
            break
        if valuation(h.leading(), p) != 0 or valuation(disc, p) != 0:
            continue
        count += 1
        fp = PolyFp.reduce(h, p)
        if is_irreducible_mod_p(fp):
            return IrreducibilityCertificate(
                "irreducible_mod_p", p, tuple(sorted(set(patterns)))
            )
        patterns.append(tuple(factor_degrees(fp)))
    uniq = tuple(sorted(set(patterns)))
    # h = h1*h2 with deg h1 = a forces every mod-p pattern to split as a + (n-a)
    compatible_split_exists = any(
        all(_splittable(pat, a) for pat in uniq) for a in range(1, h.degree // 2 + 1)
    )
    if uniq and not compatible_split_exists:
        return IrreducibilityCertificate("pattern_incompatible", None, uniq)
    return IrreducibilityCertificate("unverified", None, uniq)


# ---------------------------------------------------------------- profiles


@dataclass(frozen=True)
class ExtensionProfile:
    """Degree-n extension of Q: defining polynomial, signature, prime profiles."""

    poly: PolyQ
    signature: tuple[int, int]  # (r1, r2)
    prime_profiles: dict[int, tuple[tuple[int, int], ...]] = field(default_factory=dict)
    provenance: dict[int, str] = field(default_factory=dict)
    irreducibility: IrreducibilityCertificate | None = None

    @property
    def degree(self) -> int:
        return self.poly.degree

    def profile_at(self, p: int) -> tuple[tuple[int, int], ...] | None:
        return self.prime_profiles.get(p)


def profile_at_unramified(h: PolyQ, p: int) -> list[tuple[int, int]]:
    """[(1, f_i)] from the irreducible factor degrees of h mod p; only valid
    when p divides neither disc(h) nor the leading coefficient."""
    if valuation(h.leading(), p) != 0 or valuation(discriminant(h), p) != 0:
        raise RequiresDeclaredProfile(
            f"p={p} divides disc or leading coefficient; declare the profile"
        )
    fp = PolyFp.reduce(h, p)
    return [(1, d) for d in factor_degrees(fp)]


def check_declared_profile(
    h: PolyQ, p: int, declared: list[tuple[int, int]]
) -> tuple[bool, str]:
    """Accept iff Sum e*f = deg h and v_p(disc h) >= Sum f*(e-1) (tame bound)."""
    n = h.degree
    total = sum(e * f for e, f in declared)
    if total != n:
        return False, f"sum of e*f is {total}, expected the degree {n}"
    if any(e < 1 or f < 1 for e, f in declared):
        return False, "ramification indices and residue degrees must be >= 1"
    bound = sum(f * (e - 1) for e, f in declared)
    vd = valuation(discriminant(h), p)
    if not (vd is TOP_VALUE or vd >= bound):
        return False, f"v_{p}(disc) = {vd} is below the tame bound {bound}"
    return True, "accepted"


def build_profile(
    h: PolyQ,
    declared: dict[int, list[tuple[int, int]]] | None = None,
    primes: list[int] | None = None,
) -> ExtensionProfile:
    """Assemble an ExtensionProfile: Sturm signature, computed profiles at the
    requested unramified primes, declared (and checked) profiles elsewhere."""
    if h.degree < 1:
        raise ExtensionError("defining polynomial must be nonconstant")
    r1 = sturm_real_roots(h)
    if (h.degree - r1) % 2 != 0:
        raise ExtensionError("parity of real-root count contradicts the degree")
    r2 = (h.degree - r1) // 2
    declared = dict(declared or {})
    profiles: dict[int, tuple[tuple[int, int], ...]] = {}
    provenance: dict[int, str] = {}
    for p, pairs in sorted(declared.items()):
        ok, why = check_declared_profile(h, p, list(pairs))
        if not ok:
            raise ExtensionError(f"declared profile at p={p} rejected: {why}")
        profiles[p] = tuple(sorted(pairs))
        provenance[p] = DECLARED_PROFILE
    for p in sorted(primes or []):
        if p in profiles:
            continue
        profiles[p] = tuple(sorted(profile_at_unramified(h, p)))
        provenance[p] = COMPUTED_UNRAMIFIED
    cert = certify_irreducible(h)
    return ExtensionProfile(
        poly=h,
        signature=(r1, r2),
        prime_profiles=profiles,
        provenance=provenance,
        irreducibility=cert,
    )


def archimedean_place_count(profile: ExtensionProfile) -> int:
    """u = r1 + r2: places of F over the single archimedean place of Q."""
    r1, r2 = profile.signature
    return r1 + r2


# ---------------------------------------------------------------- decomposition pairs


@dataclass(frozen=True)
class DecompositionPair:
    """Generators of a decomposition group D and its inertia subgroup I <| D
    inside S_n; tame means D/I cyclic (checked on construction when set)."""

    degree: int
    decomposition_gens: tuple[tuple[int, ...], ...]
    inertia_gens: tuple[tuple[int, ...], ...]
    tame: bool = True

    def __post_init__(self):
        D = subgroup_closure(self.decomposition_gens or [tuple(range(self.degree))], self.degree)
        I = subgroup_closure(self.inertia_gens or [tuple(range(self.degree))], self.degree)
        dset = set(D)
        iset = set(I)
        if not iset <= dset:
            raise GroupError("inertia subgroup not contained in decomposition group")
        from .permgroup import compose, inverse

        for g in self.decomposition_gens:
            gi = inverse(g)
            for s in iset:
                if compose(compose(g, s), gi) not in iset:
                    raise GroupError("inertia subgroup is not normal in decomposition group")
        if self.tame:
            # D/I cyclic iff some x in D generates D together with I
            if not any(
                set(subgroup_closure(list(self.inertia_gens) + [x], self.degree)) == dset
                for x in D
            ):
                raise GroupError("tame flag set but D/I is not cyclic")

    def decomposition_elements(self):
        return subgroup_closure(
            self.decomposition_gens or [tuple(range(self.degree))], self.degree
        )

    def inertia_elements(self):
        return subgroup_closure(self.inertia_gens or [tuple(range(self.degree))], self.degree)


def profile_from_decomposition(pair: DecompositionPair) -> list[tuple[int, int]]:
    """(e, f) per D-orbit: f = number of I-orbits inside, e = |orbit| / f."""
    n = pair.degree
    d_orbits = orbits(pair.decomposition_gens, n)
    i_orbits = orbits(pair.inertia_gens, n)
    out = []
    for O in d_orbits:
        pts = set(O)
        f = sum(1 for io in i_orbits if set(io) <= pts)
        if len(O) % f:
            raise GroupError("inertia orbits do not tile the decomposition orbit")
        out.append((len(O) // f, f))
    return sorted(out)


def split_prime_count(pair: DecompositionPair, reduction: str) -> int:
    """Primes above p that stay split multiplicative: all D-orbits when the
    base reduction is split; D-orbits with an even number of I-orbits when
    non-split."""
    if reduction not in ("split", "nonsplit"):
        raise ExtensionError("reduction must be 'split' or 'nonsplit'")
    n = pair.degree
    d_orbits = orbits(pair.decomposition_gens, n)
    if reduction == "split":
        return len(d_orbits)
    i_orbits = orbits(pair.inertia_gens, n)
    count = 0
    for O in d_orbits:
        pts = set(O)
        f = sum(1 for io in i_orbits if set(io) <= pts)
        if f % 2 == 0:
            count += 1
    return count


def split_count_from_profile(pairs, reduction: str) -> int:
    if reduction == "split":
        return len(pairs)
    if reduction == "nonsplit":
        return sum(1 for _, f in pairs if f % 2 == 0)
    raise ExtensionError("reduction must be 'split' or 'nonsplit'")


# ---------------------------------------------------------------- root numbers over F


def _contribution_at(bundle: CurveLocalData, p: int, F: ExtensionProfile) -> int:
    L = bundle.reduction_at(p)
    if L is None or L.type == GOOD:
        return 1
    pairs = F.profile_at(p)
    if L.is_multiplicative:
        if pairs is None:
            raise Incomputable(p, "multiplicative prime with no profile for F")
        reduction = "split" if L.type == SPLIT_MULT else "nonsplit"
        s_p = split_count_from_profile(pairs, reduction)
        return -1 if s_p % 2 else 1
    # remaining cases need p split completely and a known local root number
    if pairs is None:
        raise Incomputable(p, f"{L.type} prime with no profile for F")
    if any((e, f) != (1, 1) for e, f in pairs):
        raise Incomputable(
            p, f"{L.type} prime must split completely in F (profile {list(pairs)})"
        )
    if L.type == UNKNOWN_23:
        raise Incomputable(p, "prime 2 or 3 divides the discriminant and is undeclared")
    w = local_root_number(L)
    return w ** F.degree


def root_number_over_extension(bundle: CurveLocalData, F: ExtensionProfile) -> int:
    """W(E/F) = (-1)^(r1+r2) * prod over bad primes of their contributions.

    Multiplicative p contributes (-1)^(s_p) with s_p read off the (e, f)
    profile; a declared/additive p must split completely and contributes its
    declared local root number to the power [F:Q].
    """
    w = -1 if archimedean_place_count(F) % 2 else 1
    for L in bundle.local:
        w *= _contribution_at(bundle, L.prime, F)
    return w


def root_number_ratio(
    bundle: CurveLocalData,
    F1: ExtensionProfile,
    F2: ExtensionProfile,
    designated: int,
) -> int:
    """W(E/F1) * W(E/F2) from the differing contributions at the designated
    prime only; every other bad prime (and the signature) must match."""
    if F1.signature != F2.signature:
        raise PreconditionViolated(
            f"signatures differ: {F1.signature} vs {F2.signature}"
        )
    L = bundle.reduction_at(designated)
    if L is None or not L.is_multiplicative:
        raise PreconditionViolated(
            f"designated prime {designated} is not multiplicative for the curve"
        )
    for other in bundle.local:
        if other.prime == designated:
            continue
        p1 = F1.profile_at(other.prime)
        p2 = F2.profile_at(other.prime)
        if p1 != p2:
            raise PreconditionViolated(
                f"profiles differ at non-designated bad prime {other.prime}"
            )
    c1 = _contribution_at(bundle, designated, F1)
    c2 = _contribution_at(bundle, designated, F2)
    return c1 * c2


# ---------------------------------------------------------------- quadratic fields


def quadratic_local(d: int, p: int) -> str:
    """Behavior of p in Q(sqrt(d)): 'split', 'inert' or 'ramified'."""
    if d in (0, 1):
        raise ExtensionError("d must be a squarefree integer != 0, 1")
    # squarefree check (desk scale)
    m = abs(d)
    q = 2
    while q * q <= m:
        if m % (q * q) == 0:
            raise ExtensionError(f"{d} is not squarefree")
        q += 1
    if not is_prime(p):
        raise ExtensionError(f"{p} is not prime")
    if p == 2:
        r = d % 8
        if r == 1:
            return "split"
        if r == 5:
            return "inert"
        return "ramified"  # d even or d = 2, 3 mod 4: 2 divides the field discriminant
    if d % p == 0:
        return "ramified"
    return "split" if legendre(d, p) == 1 else "inert"


@dataclass(frozen=True)
class KleinFourLocalData:
    """Local shape of the biquadratic field Q(sqrt(d1), sqrt(d2)) at p."""

    e: int
    f: int
    g: int
    decomposition_order: int
    inertia_order: int
    subfield_behavior: tuple[str, str, str]  # at d1, d2, d3 = d1*d2 / square part


def klein_four_local(d1: int, d2: int, p: int) -> KleinFourLocalData:
    """Decomposition of p in the V4 field from the three quadratic subfields.

    e = 2 iff p ramifies in some subfield, f = 2 iff p is inert in some
    subfield; |D| = e*f, |I| = e, and g = 4 / (e*f).
    """
    from math import gcd

    d3 = d1 * d2 // gcd(d1, d2) ** 2
    bs = tuple(quadratic_local(d, p) for d in (d1, d2, d3))
    e = 2 if "ramified" in bs else 1
    f = 2 if "inert" in bs else 1
    return KleinFourLocalData(
        e=e, f=f, g=4 // (e * f), decomposition_order=e * f, inertia_order=e,
        subfield_behavior=bs,
    )
