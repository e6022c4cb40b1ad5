"""Exact arithmetic in GF(q) for prime and prime-power q.

Field elements are integer representatives in ``0 .. q - 1``.  For an
extension field GF(p^m) the representative encodes a polynomial over GF(p)
in base p (least-significant digit = constant coefficient), reduced modulo
a fixed monic irreducible modulus.  The modulus is the first irreducible
candidate in ascending order of that base-p encoding, so construction is
reproducible across runs and machines.

Prime fields use direct modular arithmetic.  Extension fields multiply
through exp/log tables built once per field from the smallest generator of
the multiplicative group.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InputError, RangeError

MAX_Q = 1 << 16


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, m) with q = p**m and p prime; reject anything else."""
    if q < 2:
        raise InputError(f"field order must be at least 2, got {q}")
    if q > MAX_Q:
        raise InputError(f"field order {q} exceeds the supported cap {MAX_Q}")
    p = _smallest_prime_factor(q)
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise InputError(f"{q} is not a prime power")
    return p, m


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p), coefficient tuples in ascending degree ---


def _digits(v: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(v % p)
        v //= p
    return tuple(out)


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mod(a: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        factor = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(mod):
            a[shift + i] = (a[shift + i] - factor * c) % p
        a.pop()
    return _poly_trim(a)


def _poly_mulmod(a: tuple[int, ...], b: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            prod[i + j] = (prod[i + j] + ca * cb) % p
    return _poly_mod(tuple(prod), mod, p)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree up to deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for v in range(p**d):
            divisor = _digits(v, p, d) + (1,)
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _find_modulus(p: int, m: int) -> tuple[int, ...]:
    for v in range(p**m):
        cand = _digits(v, p, m) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # cannot happen


class FiniteField:
    """Arithmetic in GF(q) on the integer representatives ``0 .. q - 1``."""

    __slots__ = ("q", "p", "m", "modulus", "_exp", "_log")

    def __init__(self, q: int):
        p, m = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.m = m
        if m == 1:
            self.modulus = None
            self._exp = None
            self._log = None
        else:
            self.modulus = _find_modulus(p, m)
            self._build_tables()

    # -- representation ------------------------------------------------

    def _to_poly(self, a: int) -> tuple[int, ...]:
        out = []
        while a:
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _from_poly(self, c: tuple[int, ...]) -> int:
        out = 0
        for coef in reversed(c):
            out = out * self.p + coef
        return out

    def _mul_poly(self, a: int, b: int) -> int:
        return self._from_poly(
            _poly_mulmod(self._to_poly(a), self._to_poly(b), self.modulus, self.p)
        )

    def _pow_poly(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._mul_poly(out, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return out

    def _build_tables(self):
        order = self.q - 1
        factors = _prime_factors(order)
        gen = None
        for g in range(2, self.q):
            if all(self._pow_poly(g, order // f) != 1 for f in factors):
                gen = g
                break
        assert gen is not None
        exp = [0] * order
        log = [0] * self.q
        cur = 1
        for i in range(order):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_poly(cur, gen)
        assert cur == 1
        self._exp = exp
        self._log = log

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out, shift = 0, 1
        while a or b:
            out += (a + b) % self.p * shift
            a //= self.p
            b //= self.p
            shift *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        out, shift = 0, 1
        while a:
            out += (-a) % self.p * shift
            a //= self.p
            shift *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.q})")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def elements(self) -> range:
        """All q elements, zero first, ascending by representative."""
        return range(self.q)

    def validate(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise RangeError(f"{a!r} is not a canonical GF({self.q}) representative")
        return a

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    """Return the (cached) field of order q; q must be a prime power."""
    return FiniteField(q)
