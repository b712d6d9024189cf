"""Boolean functions over a field's index space and their exact transforms.

A TruthTable packs the 2^n values of f into one int (bit i = f(element i)).
The Walsh spectrum is indexed by field elements beta with the literal
pairing Tr(beta*x): the fast transform runs the standard butterfly and
re-indexes the output through the trace form, so paper-style dual formulas
compare bit for bit.  All arithmetic is integer-exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import FieldMismatch, NotBent, OddDimension
from .gf2n import BivariateDomain, Field

Domain = Field | BivariateDomain


class DualityClass(enum.Enum):
    SELF_DUAL = "SelfDual"
    ANTI_SELF_DUAL = "AntiSelfDual"
    NEITHER = "Neither"


@dataclass(frozen=True)
class TruthTable:
    domain: Domain
    bits: int

    def bit(self, i: int) -> int:
        return (self.bits >> i) & 1

    def to_bitlist(self) -> list[int]:
        size = self.domain.size
        raw = self.bits.to_bytes((size + 7) // 8, "little")
        out = []
        for byte in raw:
            for _ in range(8):
                out.append(byte & 1)
                byte >>= 1
        return out[:size]

    @staticmethod
    def from_bits(domain: Domain, values) -> "TruthTable":
        bits = 0
        for i, v in enumerate(values):
            if v:
                bits |= 1 << i
        return TruthTable(domain, bits)

    def weight(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class WalshSpectrum:
    domain: Domain
    values: tuple[int, ...]

    def parseval_holds(self) -> bool:
        return sum(v * v for v in self.values) == 1 << (2 * self.domain.n)

    def extrema(self) -> tuple[int, int]:
        mags = [abs(v) for v in self.values]
        return min(mags), max(mags)


@dataclass(frozen=True)
class AnfPoly:
    n: int
    monomials: frozenset[int]

    def degree(self) -> int:
        return max((m.bit_count() for m in self.monomials), default=0)


def fwht(values: list[int]) -> list[int]:
    """In-place fast transform over the n-cube; returns its argument."""
    size = len(values)
    h = 1
    while h < size:
        for i in range(0, size, h << 1):
            for j in range(i, i + h):
                x = values[j]
                y = values[j + h]
                values[j] = x + y
                values[j + h] = x - y
        h <<= 1
    return values


def walsh(f: TruthTable) -> WalshSpectrum:
    """Exact spectrum W(beta) = sum_x (-1)^(f(x) + Tr(beta*x))."""
    dom = f.domain
    signs = [1 - 2 * b for b in f.to_bitlist()]
    fwht(signs)
    values = tuple(signs[dom.walsh_index(beta)] for beta in range(dom.size))
    return WalshSpectrum(dom, values)


def walsh_naive(f: TruthTable) -> WalshSpectrum:
    """O(4^n) reference evaluation of the Walsh definition."""
    dom = f.domain
    signs = [1 - 2 * b for b in f.to_bitlist()]
    values = []
    for beta in range(dom.size):
        mask = dom.walsh_index(beta)
        values.append(sum(s if (mask & x).bit_count() % 2 == 0 else -s
                          for x, s in enumerate(signs)))
    return WalshSpectrum(dom, tuple(values))


def is_bent(spec: WalshSpectrum) -> bool:
    """True iff every |W(beta)| equals 2^(n/2)."""
    n = spec.domain.n
    if n % 2 != 0:
        raise OddDimension(f"bentness is undefined for odd n={n}")
    flat = 1 << (n // 2)
    return all(v == flat or v == -flat for v in spec.values)


def dual(spec: WalshSpectrum) -> TruthTable:
    """Dual table: W(beta) = 2^(n/2) * (-1)^dual(beta)."""
    if not is_bent(spec):
        raise NotBent("spectrum is not flat; no dual exists")
    bits = 0
    for beta, v in enumerate(spec.values):
        if v < 0:
            bits |= 1 << beta
    return TruthTable(spec.domain, bits)


def duality_class(f: TruthTable, fdual: TruthTable) -> DualityClass:
    """Pointwise comparison of a function with its dual."""
    if f.domain != fdual.domain:
        raise FieldMismatch("tables live on different domains")
    if f.bits == fdual.bits:
        return DualityClass.SELF_DUAL
    if f.bits ^ fdual.bits == (1 << f.domain.size) - 1:
        return DualityClass.ANTI_SELF_DUAL
    return DualityClass.NEITHER


def mobius(values: list[int]) -> list[int]:
    """In-place Moebius transform on the n-cube (its own inverse)."""
    size = len(values)
    h = 1
    while h < size:
        for i in range(0, size, h << 1):
            for j in range(i, i + h):
                values[j + h] ^= values[j]
        h <<= 1
    return values


def anf(f: TruthTable) -> AnfPoly:
    """Algebraic normal form of f over its index coordinates."""
    coeffs = mobius(f.to_bitlist())
    return AnfPoly(f.domain.n,
                   frozenset(i for i, c in enumerate(coeffs) if c))


def degree(f: TruthTable) -> int:
    """Algebraic degree; the zero function has degree 0 by convention."""
    return anf(f).degree()


def from_anf(domain: Domain, poly: AnfPoly) -> TruthTable:
    coeffs = [1 if i in poly.monomials else 0 for i in range(domain.size)]
    return TruthTable.from_bits(domain, mobius(coeffs))


def is_idempotent(f: TruthTable) -> bool:
    """True iff f(x^2) = f(x) for every x (field squaring, not index)."""
    bits = f.bits
    for i, j in enumerate(f.domain.squaring_perm()):
        if (bits >> i) & 1 != (bits >> j) & 1:
            return False
    return True


def add(f: TruthTable, g: TruthTable) -> TruthTable:
    """Pointwise XOR of two functions on the same domain."""
    if f.domain != g.domain:
        raise FieldMismatch("tables live on different domains")
    return TruthTable(f.domain, f.bits ^ g.bits)


def add_const(f: TruthTable, bit: int) -> TruthTable:
    if bit & 1:
        return TruthTable(f.domain, f.bits ^ ((1 << f.domain.size) - 1))
    return f


# ---------------------------------------------------------------------------
# File format: header line, then the packed bits hex-encoded (byte 0 first,
# lowest index in the least-significant bit of each byte).
# ---------------------------------------------------------------------------

def format_tt(f: TruthTable) -> str:
    size = f.domain.size
    payload = f.bits.to_bytes((size + 7) // 8, "little").hex()
    return f"BF {f.domain.header()}\n{payload}\n"


def parse_tt(text: str) -> TruthTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2 or not lines[0].startswith("BF "):
        raise FieldMismatch("not a truth-table file")
    fields = dict(tok.split("=", 1) for tok in lines[0][3:].split())
    n = int(fields["n"])
    mod = int(fields["mod"], 16)
    if fields.get("grid") == "xy":
        domain: Domain = BivariateDomain(Field(n // 2, mod))
    else:
        domain = Field(n, mod)
    raw = bytes.fromhex(lines[1].strip())
    expected = (domain.size + 7) // 8
    if len(raw) != expected:
        raise FieldMismatch(
            f"payload holds {len(raw)} bytes, expected {expected}")
    bits = int.from_bytes(raw, "little") & ((1 << domain.size) - 1)
    return TruthTable(domain, bits)


def save_tt(f: TruthTable, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_tt(f))


def load_tt(path) -> TruthTable:
    with open(path) as fh:
        return parse_tt(fh.read())
