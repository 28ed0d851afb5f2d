"""Semistable hyperelliptic Jacobians: node primes of Y^2 = f(X), branch signs,
the component/orbit local root number, and the residue-extension engine with
its independent orbit-simulation oracle.

The local root number of a stable reduction is
    W_p = (-1)^(n + s + 1) * prod tau([z]) = (-1)^(s+1) * prod (-tau([z])),
n the number of Frobenius orbits of nodes, s the component count, tau = +1
iff Frobenius (to the power of the orbit degree) fixes the two branches.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algebra import PolyFp, PolyQ, discriminant, legendre, primes_up_to, valuation

CONDITIONAL_TOKEN = "conditional-on-parity-conjecture"


class JacobianError(ValueError):
    pass


@dataclass(frozen=True)
class StableModelData:
    """Combinatorics of a stable reduction at p: component count, and one
    (degree, branch sign) record per Frobenius orbit of nodes."""

    prime: int
    components: int
    all_components_absolutely_irreducible: bool
    orbit_list: tuple[tuple[int, int], ...]  # (degree d(z), tau in {+1,-1})

    def __post_init__(self):
        if self.components < 1:
            raise JacobianError("component count must be >= 1")
        for d, tau in self.orbit_list:
            if d < 1 or tau not in (1, -1):
                raise JacobianError("orbit records are (degree >= 1, sign +-1)")

    @property
    def orbit_count(self) -> int:
        return len(self.orbit_list)


@dataclass(frozen=True)
class NodePrimeRecord:
    """An odd prime where f mod p = unit * (X-a)^2 g(X), g separable, g(a) != 0."""

    prime: int
    node: int  # the double root a in F_p
    cofactor: PolyFp
    disc_valuation_one: bool

    def __post_init__(self):
        if self.cofactor(self.node) == 0:
            raise JacobianError("cofactor vanishes at the node")


def find_node_primes(f: PolyQ, bound: int) -> list[NodePrimeRecord]:
    """All odd primes p <= bound, not dividing the leading coefficient, where f
    mod p keeps its degree and acquires exactly one double root (X-a)^2 with a
    separable cofactor not vanishing at a.

    A prime with v_p(disc f) = 1 always has this shape; the flag records that
    fast pre-filter, but every prime is verified directly.
    """
    if f.degree < 5:
        raise JacobianError("hyperelliptic input needs degree >= 5")
    if any(c.denominator != 1 for c in f.coeffs):
        raise JacobianError("integral coefficients required")
    if not f.is_separable():
        raise JacobianError("f must be separable")
    disc = discriminant(f)
    out = []
    for p in primes_up_to(bound):
        if p == 2 or valuation(f.leading(), p) != 0:
            continue
        fp = PolyFp.reduce(f, p)
        g = fp.gcd(fp.derivative())
        if g.degree != 1:
            continue
        # monic linear gcd: root a = -constant term
        a = (-g[0]) % p
        lin = PolyFp(p, [-a, 1])
        q1, r1 = fp.divmod(lin)
        if not r1.is_zero():
            continue
        q2, r2 = q1.divmod(lin)
        if not r2.is_zero():
            continue
        cof = q2
        if cof(a) == 0:
            continue
        if cof.gcd(cof.derivative()).degree != 0:
            continue
        out.append(
            NodePrimeRecord(
                prime=p,
                node=a,
                cofactor=cof,
                disc_valuation_one=(valuation(disc, p) == 1),
            )
        )
    return out


def tau_sign(rec: NodePrimeRecord) -> int:
    """+1 iff the node's two branch directions are Frobenius-fixed, i.e. iff
    the cofactor value at the node is a nonzero square mod p."""
    val = rec.cofactor(rec.node)
    if val == 0:
        raise JacobianError("invalid record: cofactor vanishes at the node")
    return legendre(val, rec.prime)


def local_root_number_bks(M: StableModelData) -> int:
    """(-1)^(orbits + components + 1) times the product of branch signs."""
    w = -1 if (M.orbit_count + M.components + 1) % 2 else 1
    for _, tau in M.orbit_list:
        w *= tau
    return w


def _tau_after_extension(tau: int, dz: int, d: int) -> int:
    """Branch sign of any orbit piece after residue extension of degree d:
    unchanged +1; for tau = -1 it flips to +1 exactly when the maximal 2-power
    dividing 2*d(z) divides d."""
    if tau == 1:
        return 1
    two_power = (2 * dz) & -(2 * dz)
    return 1 if d % two_power == 0 else -1


def root_number_after_extension(M: StableModelData, residue_degrees) -> int:
    """Product of local root numbers over the primes above p in an extension
    with the given residue degrees.

    Each base orbit of degree d(z) splits into gcd(d, d(z)) orbits with a
    common branch sign; components are stable under residue extension when all
    are absolutely irreducible (enforced), so s is unchanged.
    """
    degrees = list(residue_degrees)
    if not degrees:
        raise JacobianError("at least one residue degree is required")
    if any(d < 1 for d in degrees):
        raise JacobianError("residue degrees are >= 1")
    if not M.all_components_absolutely_irreducible:
        raise JacobianError(
            "component count is only residue-stable when all components are "
            "absolutely irreducible"
        )
    total = 1
    for d in degrees:
        w = -1 if (M.components + 1) % 2 else 1
        for dz, tau in M.orbit_list:
            pieces = gcd(d, dz)
            tq = _tau_after_extension(tau, dz, d)
            w *= (-tq) ** pieces
        total *= w
    return total


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class RankGainRow:
    prime: int
    node: int
    tau: int
    base_w: int
    profile_a_w: int
    profile_b_w: int
    verdict: str


@dataclass(frozen=True)
class RankGainReport:
    poly: PolyQ
    target_degree: int
    rows: tuple[RankGainRow, ...]
    disclaimer: str = CONDITIONAL_TOKEN


def alternating_profiles(n: int) -> tuple[list[int], list[int]]:
    """Residue degrees over the node prime for the two alternating-group sides:
    profile A folds the moved four points into one (e=2, f=2) prime plus n-4
    split primes; profile B splits completely."""
    if n < 4:
        raise JacobianError("target degree must be >= 4")
    return [2] + [1] * (n - 4), [1] * n


def hyperelliptic_rank_gain_report(f: PolyQ, n: int, bound: int) -> RankGainReport:
    """For every node prime of Y^2 = f(X) up to the bound: the base local root
    number and its values over the two degree-n profiles, with the flip verdict.

    Every verdict is conditional on the parity conjecture; the stable model has
    one component (the reduction is birational to Y^2 = cofactor, absolutely
    irreducible), and a single node orbit of degree 1.
    """
    prof_a, prof_b = alternating_profiles(n)
    rows = []
    for rec in find_node_primes(f, bound):
        tau = tau_sign(rec)
        M = StableModelData(
            prime=rec.prime,
            components=1,
            all_components_absolutely_irreducible=True,
            orbit_list=((1, tau),),
        )
        wa = root_number_after_extension(M, prof_a)
        wb = root_number_after_extension(M, prof_b)
        verdict = "flip" if wa != wb else "no-flip"
        rows.append(
            RankGainRow(
                prime=rec.prime,
                node=rec.node,
                tau=tau,
                base_w=local_root_number_bks(M),
                profile_a_w=wa,
                profile_b_w=wb,
                verdict=verdict,
            )
        )
    return RankGainReport(poly=f, target_degree=n, rows=tuple(rows))


# ---------------------------------------------------------------- oracle


def orbit_simulation_root_number(M: StableModelData, residue_degrees) -> int:
    """Independent oracle: simulate Frobenius on the branch points (orbit of
    size d(z); the branch involution applied on wrap-around when tau = -1),
    take its d-th power, count node orbits and read off the branch signs, then
    apply the component/orbit sign formula over the extension."""
    degrees = list(residue_degrees)
    if not degrees:
        raise JacobianError("at least one residue degree is required")
    total = 1
    for d in degrees:
        perm: dict[tuple[int, int, int], tuple[int, int, int]] = {}
        for oid, (dz, tau) in enumerate(M.orbit_list):
            for i in range(dz):
                for sheet in (0, 1):
                    if i < dz - 1:
                        perm[(oid, i, sheet)] = (oid, i + 1, sheet)
                    else:
                        perm[(oid, i, sheet)] = (oid, 0, sheet if tau == 1 else 1 - sheet)

        def power(x, k):
            for _ in range(k):
                x = perm[x]
            return x

        nodes = [
            (oid, i) for oid, (dz, _) in enumerate(M.orbit_list) for i in range(dz)
        ]
        seen = set()
        n_orbits = 0
        sign_product = 1
        for nd in nodes:
            if nd in seen:
                continue
            n_orbits += 1
            length = 0
            cur = nd
            while cur not in seen:
                seen.add(cur)
                length += 1
                nxt = power((cur[0], cur[1], 0), d)
                cur = (nxt[0], nxt[1])
            end = power((nd[0], nd[1], 0), d * length)
            if (end[0], end[1]) != nd:
                raise JacobianError("orbit simulation lost track of a node")
            sign_product *= 1 if end[2] == 0 else -1
        w = -1 if (n_orbits + M.components + 1) % 2 else 1
        total *= w * sign_product
    return total
