"""Exact arithmetic in GF(2^n) with a polynomial-basis representation.

Field elements are plain ints: bit i of an element is the coefficient of
the degree-i basis monomial, so elements double as truth-table indices
(the element/index map is the identity).  0 and 1 are the additive and
multiplicative identities, addition is ``^``.  All operations are pure;
a Field never mutates after construction apart from internal caches.

Polynomials over F_2 (used for the modulus and the quadratic-family gcd
test) are also ints: bit i is the coefficient of X^i.
"""

from __future__ import annotations

from .errors import (
    DimensionTooSmall,
    DivisionByZero,
    NoSolution,
    NotADivisor,
    NotInSubfield,
    ReducibleModulus,
    UnsupportedDegree,
    ZeroElement,
)

MAX_DEGREE = 28

# Smallest irreducible polynomial of each degree (as a bitmask), so field
# construction is deterministic when no modulus is supplied.  Regenerable
# by scanning upward from 2^n with is_irreducible().
DEFAULT_MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xb,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11b,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201b,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002b,
    17: 0x20009,
    18: 0x40009,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001b,
    25: 0x2000009,
    26: 0x400001b,
    27: 0x8000027,
    28: 0x10000003,
}


# ---------------------------------------------------------------------------
# F_2[X] helpers on int bitmasks
# ---------------------------------------------------------------------------

def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two F_2[X] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    """Remainder of a modulo m over F_2[X]."""
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    return poly_mod(poly_mul(a, b), m)


def poly_gcd(a: int, b: int) -> int:
    """Greatest common divisor over F_2[X] (monic by construction)."""
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_factors(n: int) -> set[int]:
    fs = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            fs.add(d)
            n //= d
        d += 1
    if n > 1:
        fs.add(n)
    return fs


def is_irreducible(p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over F_2."""
    n = p.bit_length() - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = 0b10
    t = x
    for _ in range(n):
        t = poly_mulmod(t, t, p)
    if t != x:
        return False
    for q in _prime_factors(n):
        t = x
        for _ in range(n // q):
            t = poly_mulmod(t, t, p)
        if poly_gcd(t ^ x, p) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# F_2-linear algebra on int coordinate vectors
# ---------------------------------------------------------------------------

def _echelonize(vectors):
    """Echelon basis keyed by leading bit; zero vectors are dropped."""
    basis = {}
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            if lead in basis:
                v ^= basis[lead]
            else:
                basis[lead] = v
                break
    return basis


def rank(vectors) -> int:
    """Rank over F_2 of a list of int coordinate vectors."""
    return len(_echelonize(vectors))


def solve_f2(images: list[int], target: int):
    """Solve sum_j x_j * images[j] = target over F_2.

    Returns (solution_mask, kernel_basis); solution_mask is None when the
    target is outside the span.  kernel_basis spans {x : L(x) = 0}.
    """
    pivots = {}
    kernel = []
    for j, v in enumerate(images):
        c = 1 << j
        while v:
            lead = v.bit_length() - 1
            if lead in pivots:
                pv, pc = pivots[lead]
                v ^= pv
                c ^= pc
            else:
                pivots[lead] = (v, c)
                break
        if v == 0:
            kernel.append(c)
    t, combo = target, 0
    while t:
        lead = t.bit_length() - 1
        if lead not in pivots:
            return None, kernel
        pv, pc = pivots[lead]
        t ^= pv
        combo ^= pc
    return combo, kernel


def coset_min(x: int, kernel) -> int:
    """Smallest integer in the coset x + span(kernel)."""
    basis = _echelonize(kernel)
    for lead in sorted(basis, reverse=True):
        if (x >> lead) & 1:
            x ^= basis[lead]
    return x


# ---------------------------------------------------------------------------
# The field
# ---------------------------------------------------------------------------

class Field:
    """GF(2^n) under an explicit irreducible modulus.

    Elements are ints below 2^n.  For even n the subfield GF(2^m) with
    n = 2m is available through subfield()/trace_sub().
    """

    def __init__(self, n: int, modulus: int | None = None):
        if not 1 <= n <= MAX_DEGREE:
            raise UnsupportedDegree(f"n={n} outside 1..{MAX_DEGREE}")
        if modulus is None:
            modulus = DEFAULT_MODULI[n]
        if modulus.bit_length() - 1 != n:
            raise ReducibleModulus(
                f"modulus 0x{modulus:x} does not have degree {n}")
        if not is_irreducible(modulus):
            raise ReducibleModulus(f"modulus 0x{modulus:x} is reducible")
        self.n = n
        self.modulus = modulus
        self.m = n // 2 if n % 2 == 0 else None
        self.size = 1 << n
        # x^d mod modulus for d = n .. 2n-2, for product reduction
        red = [modulus ^ (1 << n)]
        for _ in range(n - 2):
            r = red[-1] << 1
            if (r >> n) & 1:
                r ^= modulus
            red.append(r)
        self._red = red
        self._sqr_basis = None
        self._frob_basis = {}
        self._tr_mask_cache = {}
        self._walsh_rows = None
        self._sqr_perm = None
        self._subfield = None
        self._theta = None

    # -- identity / serialization ------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Field) and self.n == other.n
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __repr__(self):
        return f"Field({self.describe()})"

    def describe(self) -> str:
        return f"n={self.n},mod=0x{self.modulus:x}"

    # -- ring operations ------------------------------------------------------

    def reduce(self, p: int) -> int:
        """Reduce a carry-less product (degree < 2n-1) by the modulus."""
        n = self.n
        while p >> n:
            d = p.bit_length() - 1
            p ^= (1 << d) | self._red[d - n]
        return p

    def mul(self, a: int, b: int) -> int:
        """Product of two field elements."""
        p = 0
        while b:
            if b & 1:
                p ^= a
            a <<= 1
            b >>= 1
        return self.reduce(p)

    def sqr(self, a: int) -> int:
        """Square via the Frobenius linear map."""
        if self._sqr_basis is None:
            self._sqr_basis = [self.reduce(1 << (2 * j)) for j in range(self.n)]
        r = 0
        j = 0
        while a:
            if a & 1:
                r ^= self._sqr_basis[j]
            a >>= 1
            j += 1
        return r

    def frob(self, a: int, k: int) -> int:
        """a^(2^k); k is taken modulo n."""
        k %= self.n
        if k == 0:
            return a
        basis = self._frob_basis.get(k)
        if basis is None:
            basis = [1 << j for j in range(self.n)]
            for _ in range(k):
                basis = [self.sqr(v) for v in basis]
            self._frob_basis[k] = basis
        r = 0
        j = 0
        while a:
            if a & 1:
                r ^= basis[j]
            a >>= 1
            j += 1
        return r

    def pow(self, a: int, e: int) -> int:
        """a^e; exponents act modulo 2^n - 1 on nonzero bases, 0^0 = 1."""
        if a == 0:
            return 1 if e == 0 else 0
        e %= self.size - 1
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.sqr(a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self.pow(a, -1)

    def sqrt(self, a: int) -> int:
        """Unique square root (the inverse Frobenius)."""
        return self.frob(a, self.n - 1)

    # -- traces ----------------------------------------------------------------

    def trace_mask(self, u: int = 1) -> int:
        """Mask M with Tr(u*x) = parity(x & M) for the absolute trace."""
        mask = self._tr_mask_cache.get(u)
        if mask is None:
            mask = 0
            for j in range(self.n):
                v = self.mul(u, 1 << j)
                t = 0
                for _ in range(self.n):
                    t ^= v
                    v = self.sqr(v)
                mask |= (t & 1) << j
            self._tr_mask_cache[u] = mask
        return mask

    def trace_abs(self, x: int) -> int:
        """Absolute trace sum_i x^(2^i), always 0 or 1."""
        return (x & self.trace_mask()).bit_count() & 1

    def trace_rel(self, x: int, k: int) -> int:
        """Relative trace onto GF(2^k): x + x^(2^k) + ... + x^(2^(n-k))."""
        if k <= 0 or self.n % k != 0:
            raise NotADivisor(f"k={k} does not divide n={self.n}")
        r = 0
        t = x
        for _ in range(self.n // k):
            r ^= t
            t = self.frob(t, k)
        return r

    def trace_sub(self, y: int) -> int:
        """Absolute trace of a subfield element, viewed inside GF(2^m)."""
        m = self._require_m()
        if self.frob(y, m) != y:
            raise NotInSubfield(f"element {y:#x} is not in GF(2^{m})")
        r = 0
        t = y
        for _ in range(m):
            r ^= t
            t = self.sqr(t)
        return r

    def subtrace_mask(self, lam: int = 1) -> int:
        """Mask M with Tr_sub(lam*y) = parity(y & M) for subfield y.

        Uses a fixed theta with theta + theta^(2^m) = 1, so the subfield
        trace extends to an absolute-trace functional on the whole field.
        """
        m = self._require_m()
        if self._theta is None:
            self._theta = self.solve_semilinear(m, 1)
        return self.trace_mask(self.mul(self._theta, lam))

    def _require_m(self) -> int:
        if self.m is None:
            raise NotInSubfield(f"n={self.n} is odd; no index-2 subfield")
        return self.m

    # -- subfield and bases ------------------------------------------------------

    def subfield(self) -> "SubfieldView":
        if self._subfield is None:
            m = self._require_m()
            members = tuple(y for y in range(self.size)
                            if self.frob(y, m) == y)
            self._subfield = SubfieldView(self, members)
        return self._subfield

    def is_normal(self, u: int, in_subfield: bool = False) -> bool:
        """True iff the Frobenius orbit of u is an F_2-basis of the (sub)field."""
        if u == 0:
            raise ZeroElement("0 is never a normal element")
        if in_subfield:
            d = self._require_m()
            if self.frob(u, d) != u:
                return False
        else:
            d = self.n
        orbit = []
        t = u
        for _ in range(d):
            orbit.append(t)
            t = self.sqr(t)
        return rank(orbit) == d

    def find_normal(self, seed: int = 0, in_subfield: bool = False) -> int:
        """First normal element met by a wrapped scan from the seed position."""
        cands = self.subfield().members if in_subfield else range(self.size)
        count = len(cands)
        for i in range(count):
            u = cands[(seed + i) % count]
            if u != 0 and self.is_normal(u, in_subfield=in_subfield):
                return u
        raise NoSolution("no normal element found")  # unreachable

    def lin_indep(self, elems) -> bool:
        """True iff the elements are linearly independent over F_2."""
        elems = list(elems)
        return rank(elems) == len(elems)

    def trace_zero_basis(self) -> list[int]:
        """Basis of the subfield hyperplane {y in GF(2^m) : Tr_sub(y) = 0}."""
        m = self._require_m()
        if m < 2:
            raise DimensionTooSmall("m >= 2 required for a trace-zero basis")
        basis = []
        chosen = []
        for y in self.subfield().members:
            if y == 0 or self.trace_sub(y) != 0:
                continue
            if rank(chosen + [y]) > len(chosen):
                chosen.append(y)
                basis.append(y)
                if len(basis) == m - 1:
                    break
        return basis

    def solve_semilinear(self, e: int, target: int) -> int:
        """Smallest solution of z + z^(2^e) = target, by linear algebra."""
        images = [(1 << j) ^ self.frob(1 << j, e) for j in range(self.n)]
        sol, kernel = solve_f2(images, target)
        if sol is None:
            raise NoSolution(
                f"target {target:#x} outside the image of z + z^(2^{e})")
        return coset_min(sol, kernel)

    # -- truth-table domain interface ---------------------------------------------

    def walsh_index(self, beta: int) -> int:
        """Map beta so Tr(beta*x) = parity(walsh_index(beta) & x)."""
        if self._walsh_rows is None:
            self._walsh_rows = [self.trace_mask(1 << i) for i in range(self.n)]
        r = 0
        i = 0
        while beta:
            if beta & 1:
                r ^= self._walsh_rows[i]
            beta >>= 1
            i += 1
        return r

    def squaring_perm(self) -> list[int]:
        """Index permutation x -> x^2 over the whole field."""
        if self._sqr_perm is None:
            self._sqr_perm = [self.sqr(x) for x in range(self.size)]
        return self._sqr_perm

    def header(self) -> str:
        return f"n={self.n} mod=0x{self.modulus:x}"


class SubfieldView:
    """The 2^m elements of GF(2^m) inside GF(2^(2m)), in index order."""

    def __init__(self, parent: Field, members: tuple[int, ...]):
        self.parent = parent
        self.members = members

    def __contains__(self, y: int) -> bool:
        return self.parent.frob(y, self.parent.m) == y

    def __len__(self) -> int:
        return len(self.members)


class BivariateDomain:
    """Index space GF(2^m) x GF(2^m) for bivariate constructions.

    The combined index is idx(x)*2^m + idx(y); the Walsh pairing is
    Tr_sub(b1*x) + Tr_sub(b2*y), applied half by half.
    """

    def __init__(self, base: Field):
        self.base = base
        self.n = 2 * base.n
        self.m = base.n
        self.size = 1 << self.n
        self._sqr_perm = None

    def __eq__(self, other):
        return isinstance(other, BivariateDomain) and self.base == other.base

    def __hash__(self):
        return hash(("xy", self.base))

    def __repr__(self):
        return f"BivariateDomain({self.base.describe()})"

    def index(self, x: int, y: int) -> int:
        return (x << self.m) | y

    def split(self, idx: int) -> tuple[int, int]:
        return idx >> self.m, idx & (self.base.size - 1)

    def walsh_index(self, beta: int) -> int:
        b1, b2 = self.split(beta)
        return (self.base.walsh_index(b1) << self.m) | self.base.walsh_index(b2)

    def squaring_perm(self) -> list[int]:
        if self._sqr_perm is None:
            sq = self.base.squaring_perm()
            self._sqr_perm = [(sq[x] << self.m) | sq[y]
                              for x in range(self.base.size)
                              for y in range(self.base.size)]
        return self._sqr_perm

    def header(self) -> str:
        return f"n={self.n} mod=0x{self.base.modulus:x} grid=xy"

    def describe(self) -> str:
        return f"n={self.n},mod=0x{self.base.modulus:x}"


def make_field(n: int, modulus: int | None = None) -> Field:
    """Field of degree n; the built-in default modulus when none is given."""
    return Field(n, modulus)


def parse_field_desc(text: str) -> Field:
    """Parse the 'n=<int>,mod=0x<hex>' field description."""
    parts = dict(p.split("=", 1) for p in text.strip().split(","))
    return Field(int(parts["n"]), int(parts["mod"], 16))
