"""Exact arithmetic substrate: rationals, polynomials over Q and F_p, factorization,
Sturm sequences, quadratic symbols.

Everything here is exact; no floating point is used anywhere. Rational is the
stdlib Fraction (already normalized: gcd(num, den) = 1, den >= 1).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt, lcm

Rational = Fraction


class AlgebraError(ValueError):
    pass


class NotASquare(Exception):
    """Signals that an exact polynomial square root does not exist."""


class _TopValue:
    """Valuation of 0: compares above every integer."""

    def __ge__(self, other):
        return True

    def __gt__(self, other):
        return not isinstance(other, _TopValue)

    def __le__(self, other):
        return isinstance(other, _TopValue)

    def __lt__(self, other):
        return False

    def __eq__(self, other):
        return isinstance(other, _TopValue)

    def __hash__(self):
        return hash("TopValue")

    def __repr__(self):
        return "TopValue"


TOP_VALUE = _TopValue()


# ----------------------------------------------------------------------------
# primes and quadratic symbols

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24 with these witnesses)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def iter_primes():
    """2, 3, 5, 7, ... via incremental trial division (desk scale)."""
    yield 2
    found = [2]
    n = 3
    while True:
        if all(n % p for p in found if p * p <= n):
            found.append(n)
            yield n
        n += 2


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, b in enumerate(sieve) if b]


def first_primes(count: int) -> list[int]:
    out = []
    for p in iter_primes():
        out.append(p)
        if len(out) == count:
            return out
    return out


def valuation(x: Rational | int, p: int):
    """p-adic valuation of a rational; valuation of 0 is TOP_VALUE."""
    if not is_prime(p):
        raise AlgebraError(f"valuation: {p} is not prime")
    x = Fraction(x)
    if x == 0:
        return TOP_VALUE
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise AlgebraError(f"legendre: {p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def rational_sqrt(q: Rational):
    """Exact square root of a rational, or None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def integer_is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


# ----------------------------------------------------------------------------
# polynomials over Q


class PolyQ:
    """Univariate polynomial over Q; coefficients ascending, degree -1 for 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs) -> PolyQ:
        return cls(list(coeffs)[::-1])

    @classmethod
    def x_power(cls, k: int, c=1) -> PolyQ:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> Rational:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def leading(self) -> Rational:
        if not self.coeffs:
            raise AlgebraError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: PolyQ) -> PolyQ:
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: PolyQ) -> PolyQ:
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> PolyQ:
        return PolyQ([-c for c in self.coeffs])

    def __mul__(self, other) -> PolyQ:
        if isinstance(other, (int, Fraction)):
            return PolyQ([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return PolyQ([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> PolyQ:
        out = PolyQ([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: PolyQ) -> tuple[PolyQ, PolyQ]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return PolyQ([]), self
        quo = [Fraction(0)] * (dq + 1)
        lc = other.leading()
        while len(rem) >= len(other.coeffs) and rem:
            c = rem[-1] / lc
            d = len(rem) - len(other.coeffs)
            quo[d] = c
            for i, b in enumerate(other.coeffs):
                rem[i + d] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return PolyQ(quo), PolyQ(rem)

    def __mod__(self, other: PolyQ) -> PolyQ:
        return self.divmod(other)[1]

    def __floordiv__(self, other: PolyQ) -> PolyQ:
        return self.divmod(other)[0]

    def derivative(self) -> PolyQ:
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x) -> Rational:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> PolyQ:
        if self.is_zero():
            return self
        lc = self.leading()
        return PolyQ([c / lc for c in self.coeffs])

    def compose_neg(self) -> PolyQ:
        """f(-X)."""
        return PolyQ([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def gcd(self, other: PolyQ) -> PolyQ:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self) -> PolyQ:
        if self.is_zero():
            raise AlgebraError("squarefree part of the zero polynomial")
        return (self // self.gcd(self.derivative())).monic()

    def is_separable(self) -> bool:
        return not self.is_zero() and self.gcd(self.derivative()).degree == 0

    def integer_model(self) -> tuple[list[int], int]:
        """(primitive integer coefficient list ascending, clearing denominator d):
        d*self has the returned integer coefficients times their content... the
        returned list is d*self's coefficients with positive gcd preserved."""
        d = 1
        for c in self.coeffs:
            d = lcm(d, c.denominator)
        return [int(c * d) for c in self.coeffs], d

    def primitive_integral(self) -> PolyQ:
        """Scale by a positive rational to primitive integer coefficients with
        positive leading coefficient."""
        if self.is_zero():
            return self
        ints, _ = self.integer_model()
        g = 0
        for c in ints:
            g = gcd(g, c)
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return PolyQ(ints)

    def __repr__(self):
        return f"PolyQ({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            else:
                xs = "X" if i == 1 else f"X^{i}"
                if c == 1:
                    parts.append(xs)
                elif c == -1:
                    parts.append(f"-{xs}")
                else:
                    parts.append(f"{c}*{xs}")
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def poly_from_descending_string(text: str) -> PolyQ:
    """Parse "1,0,-164,0,2304,0" (leading coefficient first) into a PolyQ."""
    items = [t.strip() for t in text.replace(";", ",").split(",") if t.strip()]
    return PolyQ.from_descending([Fraction(t) for t in items])


# ----------------------------------------------------------------------------
# resultants / discriminants (fraction-free over Z)


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant_int(a: list[int], b: list[int]) -> int:
    """Resultant of two integer polynomials (ascending coefficients)."""
    a = list(a)
    b = list(b)
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    n = da + db
    rows = []
    ra = a[::-1]
    rb = b[::-1]
    for i in range(db):
        rows.append([0] * i + ra + [0] * (n - da - 1 - i))
    for i in range(da):
        rows.append([0] * i + rb + [0] * (n - db - 1 - i))
    return _bareiss_det(rows)


def resultant(f: PolyQ, g: PolyQ) -> Rational:
    fi, df = f.integer_model()
    gi, dg = g.integer_model()
    r = resultant_int(fi, gi)
    return Fraction(r) / (Fraction(df) ** g.degree * Fraction(dg) ** f.degree)


def discriminant(f: PolyQ) -> Rational:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise AlgebraError("discriminant of a constant polynomial")
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / f.leading()


# ----------------------------------------------------------------------------
# Sturm sequences


def sturm_real_roots(f: PolyQ) -> int:
    """Number of distinct real roots (the input is replaced by its squarefree part)."""
    if f.is_zero():
        raise AlgebraError("Sturm count of the zero polynomial")
    f = f.squarefree_part()
    if f.degree == 0:
        return 0
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()

    def sign_changes(at_plus_infinity: bool) -> int:
        signs = []
        for p in chain:
            if p.is_zero():
                continue
            s = 1 if p.leading() > 0 else -1
            if not at_plus_infinity and p.degree % 2 == 1:
                s = -s
            signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return sign_changes(False) - sign_changes(True)


# ----------------------------------------------------------------------------
# exact polynomial square roots


def poly_sqrt_exact(h: PolyQ) -> PolyQ:
    """r with r^2 = h and positive leading coefficient; raises NotASquare.

    Top-down coefficient matching: fix r_d = sqrt(lc), then each lower r_k is
    determined linearly from the X^(d+k) coefficient of h.
    """
    if h.is_zero():
        return h
    if h.degree % 2 == 1:
        raise NotASquare(f"odd degree {h.degree}")
    d = h.degree // 2
    top = rational_sqrt(h.leading())
    if top is None:
        raise NotASquare(f"leading coefficient {h.leading()} is not a square")
    r = [Fraction(0)] * (d + 1)
    r[d] = top
    for k in range(d - 1, -1, -1):
        s = sum(r[i] * r[d + k - i] for i in range(k + 1, d))
        r[k] = (h[d + k] - s) / (2 * top)
    cand = PolyQ(r)
    if cand * cand == h:
        return cand
    raise NotASquare("coefficient match failed below the midpoint")


# ----------------------------------------------------------------------------
# polynomials over F_p and factorization


class PolyFp:
    """Univariate polynomial over F_p (p prime, checked at construction)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        if not is_prime(p):
            raise AlgebraError(f"PolyFp: modulus {p} is not prime")
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @classmethod
    def reduce(cls, f: PolyQ, p: int) -> PolyFp:
        """f mod p; denominators must be prime to p."""
        out = []
        for c in f.coeffs:
            if c.denominator % p == 0:
                raise AlgebraError(f"reduction mod {p}: denominator divisible by {p}")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return cls(p, out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, PolyFp) and self.p == other.p and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: PolyFp):
        if self.p != other.p:
            raise AlgebraError("mixed moduli")

    def __add__(self, other: PolyFp) -> PolyFp:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyFp(self.p, [(self[i] + other[i]) % self.p for i in range(n)])

    def __sub__(self, other: PolyFp) -> PolyFp:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyFp(self.p, [(self[i] - other[i]) % self.p for i in range(n)])

    def __mul__(self, other) -> PolyFp:
        if isinstance(other, int):
            return PolyFp(self.p, [c * other % self.p for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return PolyFp(self.p, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % self.p
        return PolyFp(self.p, out)

    def divmod(self, other: PolyFp) -> tuple[PolyFp, PolyFp]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError
        rem = list(self.coeffs)
        if len(rem) < len(other.coeffs):
            return PolyFp(self.p, []), self
        quo = [0] * (len(rem) - len(other.coeffs) + 1)
        inv = pow(other.coeffs[-1], -1, self.p)
        while len(rem) >= len(other.coeffs) and rem:
            c = rem[-1] * inv % self.p
            d = len(rem) - len(other.coeffs)
            quo[d] = c
            for i, b in enumerate(other.coeffs):
                rem[i + d] = (rem[i + d] - c * b) % self.p
            while rem and rem[-1] == 0:
                rem.pop()
        return PolyFp(self.p, quo), PolyFp(self.p, rem)

    def __mod__(self, other: PolyFp) -> PolyFp:
        return self.divmod(other)[1]

    def __floordiv__(self, other: PolyFp) -> PolyFp:
        return self.divmod(other)[0]

    def monic(self) -> PolyFp:
        if self.is_zero():
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return self * inv

    def gcd(self, other: PolyFp) -> PolyFp:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> PolyFp:
        return PolyFp(self.p, [i * c % self.p for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def pow_mod(self, e: int, mod: PolyFp) -> PolyFp:
        out = PolyFp(self.p, [1])
        base = self % mod
        while e:
            if e & 1:
                out = (out * base) % mod
            base = (base * base) % mod
            e >>= 1
        return out

    def __repr__(self):
        return f"PolyFp({self.p}, {list(self.coeffs)})"


def _pth_root(f: PolyFp) -> PolyFp:
    """For f with f' = 0: the g with g^p = f (coefficientwise, a^(1/p) = a in F_p)."""
    p = f.p
    return PolyFp(p, [f[i] for i in range(0, len(f.coeffs), p)])


def _squarefree_decomposition(f: PolyFp) -> list[tuple[PolyFp, int]]:
    """Monic f -> [(g_i, m_i)] with f = prod g_i^m_i, g_i squarefree and coprime."""
    p = f.p
    out: list[tuple[PolyFp, int]] = []

    def rec(f: PolyFp, mult: int):
        if f.degree == 0:
            return
        d = f.derivative()
        if d.is_zero():
            rec(_pth_root(f), mult * p)
            return
        c = f.gcd(d)
        w = f // c
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            z = w // y
            if z.degree > 0:
                out.append((z, mult * i))
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            rec(_pth_root(c), mult * p)

    rec(f.monic(), 1)
    return out


def _distinct_degree(f: PolyFp) -> list[tuple[PolyFp, int]]:
    """Squarefree monic f -> [(product of irreducibles of degree d, d)]."""
    p = f.p
    out = []
    x = PolyFp(p, [0, 1])
    h = x
    cur = f
    d = 0
    while cur.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, cur)
        g = (h - x % cur).gcd(cur)
        if g.degree > 0:
            out.append((g, d))
            cur = cur // g
            h = h % cur
    if cur.degree > 0:
        out.append((cur, cur.degree))
    return out


def _equal_degree_split(f: PolyFp, d: int, rng: random.Random) -> list[PolyFp]:
    """Cantor-Zassenhaus: split a monic product of degree-d irreducibles."""
    p = f.p
    if f.degree == d:
        return [f]
    n = f.degree
    while True:
        u = PolyFp(p, [rng.randrange(p) for _ in range(n)])
        if u.degree < 1:
            continue
        if p == 2:
            # trace map over F_{2^d}
            t = u
            acc = u
            for _ in range(d - 1):
                t = (t * t) % f
                acc = acc + t
            g = acc.gcd(f)
        else:
            g = u.gcd(f)
            if 0 < g.degree < f.degree:
                pass  # lucky split by a common factor
            else:
                w = u.pow_mod((p**d - 1) // 2, f)
                g = (w - PolyFp(p, [1])).gcd(f)
        if 0 < g.degree < f.degree:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def factor_mod_p(f: PolyFp, seed: int = 0) -> list[tuple[PolyFp, int]]:
    """Full factorization over F_p into monic irreducibles with multiplicities.

    Squarefree decomposition, then distinct-degree, then randomized equal-degree
    splitting (seeded). Output is sorted by (degree, coefficients), so it is
    identical for every seed.
    """
    if f.is_zero():
        raise AlgebraError("factorization of the zero polynomial")
    rng = random.Random(seed)
    out: list[tuple[PolyFp, int]] = []
    for part, mult in _squarefree_decomposition(f):
        for prod, d in _distinct_degree(part):
            for irr in _equal_degree_split(prod, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def factor_degrees(f: PolyFp, seed: int = 0) -> list[int]:
    """Sorted degree multiset of the irreducible factors (with multiplicity)."""
    degs = []
    for g, m in factor_mod_p(f, seed):
        degs.extend([g.degree] * m)
    return sorted(degs)


def is_irreducible_mod_p(f: PolyFp) -> bool:
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    sf = _squarefree_decomposition(f)
    if len(sf) != 1 or sf[0][1] != 1:
        return False
    dd = _distinct_degree(sf[0][0])
    return len(dd) == 1 and dd[0][1] == f.degree


# ----------------------------------------------------------------------------
# rational roots via Hensel lifting + rational reconstruction


def _rational_reconstruct(a: int, m: int) -> tuple[int, int] | None:
    """u/v with u = a*v mod m, |u|, v <= sqrt(m/2); None if there is none."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if t1 < 0:
        r1, t1 = -r1, -t1
    if gcd(r1, t1) != 1:
        return None
    return r1, t1


def rational_roots(f: PolyQ) -> list[Rational]:
    """All rational roots (no multiplicities), exact.

    Roots are found modulo a good prime, lifted by quadratic Hensel iteration,
    and recognized by rational reconstruction; every candidate is verified
    exactly. This avoids factoring the (possibly huge) trailing coefficient.
    """
    if f.is_zero():
        raise AlgebraError("roots of the zero polynomial")
    roots: set[Fraction] = set()
    ints, _ = f.integer_model()
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        ints = ints[k:]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    poly = PolyQ(ints)
    if poly.degree == 0:
        return sorted(roots)
    poly = poly.squarefree_part().primitive_integral()
    ints = [int(c) for c in poly.coeffs]
    if poly.degree == 1:
        roots.add(-poly[0] / poly[1])
        return sorted(roots)
    bound = max(abs(ints[0]), abs(ints[-1]))
    target = 2 * bound * bound + 1
    deriv = poly.derivative()
    dints = [int(c) for c in deriv.coeffs]
    for p in iter_primes():
        if p < 3 or ints[-1] % p == 0:
            continue
        fp = PolyFp(p, ints)
        if fp.gcd(fp.derivative()).degree != 0:
            continue
        res = []
        for r in range(p):
            if fp(r) == 0:
                res.append(r)
        # quadratic Hensel lift of each simple root, then reconstruct
        for r in res:
            m = p
            while m < target:
                m = m * m
                fr = _eval_int(ints, r, m)
                dr = _eval_int(dints, r, m)
                r = (r - fr * pow(dr, -1, m)) % m
            rec = _rational_reconstruct(r, m)
            if rec is not None:
                u, v = rec
                for cand in (Fraction(u, v), Fraction(-u, v)):
                    if poly(cand) == 0:
                        roots.add(cand)
        break
    # sign ambiguity in reconstruction is resolved by exact verification above
    return sorted(roots)


def _eval_int(coeffs: list[int], x: int, m: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % m
    return acc
