"""Connection polynomials, the upper-triangular Toeplitz transform, and
its decomposition into two-diagonal matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitVec


@dataclass(frozen=True)
class ConnectionPolynomial:
    """Coefficients (c_0, ..., c_m) of a rate-1 convolution, c_0 = c_m = 1."""

    coeffs: tuple

    def __post_init__(self) -> None:
        c = tuple(self.coeffs)
        if not c or any(b not in (0, 1) for b in c):
            raise ValueError(f"coefficients must be a nonempty 0/1 sequence: {c}")
        if c[0] != 1 or c[-1] != 1:
            raise ValueError(f"c_0 and c_m must both be 1: {c}")
        object.__setattr__(self, "coeffs", c)

    @property
    def m(self) -> int:
        return len(self.coeffs) - 1

    @property
    def support(self) -> tuple:
        """Degrees t with c_t = 1."""
        return tuple(t for t, b in enumerate(self.coeffs) if b)

    def reciprocal(self) -> "ConnectionPolynomial":
        """Coefficients read in reverse order (c_m, ..., c_0)."""
        return ConnectionPolynomial(self.coeffs[::-1])

    def to_octal(self) -> str:
        """Octal numeral whose MSB-first binary expansion is (c_0..c_m)."""
        value = 0
        for b in self.coeffs:
            value = (value << 1) | b
        return format(value, "o")


IDENTITY_POLY = ConnectionPolynomial((1,))


def parse_octal(s: str) -> ConnectionPolynomial:
    """Read an octal numeral; its MSB-first binary expansion is (c_0..c_m)."""
    s = s.strip()
    if not s or any(ch not in "01234567" for ch in s):
        raise ValueError(f"not an octal numeral: {s!r}")
    value = int(s, 8)
    if value == 0:
        raise ValueError("connection polynomial cannot be zero")
    bits = tuple(int(ch) for ch in format(value, "b"))
    if bits[-1] != 1:
        raise ValueError(f"octal {s}: last coefficient c_m is 0")
    return ConnectionPolynomial(bits)


@dataclass(frozen=True)
class ToeplitzUT:
    """Upper-triangular Toeplitz matrix: entry (r, s) = c_{s-r} for
    0 <= s - r <= m, else 0."""

    N: int
    poly: ConnectionPolynomial

    def __post_init__(self) -> None:
        if self.poly.m > self.N - 1:
            raise ValueError(f"memory {self.poly.m} >= block length {self.N}")

    @property
    def first_row(self) -> BitVec:
        return self.row(1)

    def row(self, r: int) -> BitVec:
        """Row r (1-based): the coefficient pattern shifted right r-1 places."""
        if not 1 <= r <= self.N:
            raise ValueError(f"row {r} out of range 1..{self.N}")
        mask = (1 << self.N) - 1
        return BitVec(self.N, (self._poly_value() << (r - 1)) & mask)

    def _poly_value(self) -> int:
        value = 0
        for t in self.poly.support:
            value |= 1 << t
        return value


def toeplitz(c: ConnectionPolynomial, N: int) -> ToeplitzUT:
    """The N x N upper-triangular Toeplitz matrix of c."""
    return ToeplitzUT(N, c)


def conv_encode_value(value: int, c: ConnectionPolynomial, length: int) -> int:
    """v -> vT on a packed int."""
    mask = (1 << length) - 1
    acc = 0
    for t in c.support:
        acc ^= (value << t) & mask
    return acc


def conv_encode(v: BitVec, c: ConnectionPolynomial) -> BitVec:
    """Shift-register convolution u_j = XOR_t c_t v_{j-t}; equals v.T."""
    if v.length < c.m + 1:
        raise ValueError(f"vector length {v.length} < m+1 = {c.m + 1}")
    return BitVec(v.length, conv_encode_value(v.value, c, v.length))


def conv_decode(u: BitVec, c: ConnectionPolynomial) -> BitVec:
    """Invert v -> vT by back-substitution (T has a unit diagonal)."""
    if u.length < c.m + 1:
        raise ValueError(f"vector length {u.length} < m+1 = {c.m + 1}")
    taps = [t for t in c.support if t > 0]
    v = 0
    for j in range(u.length):
        bit = (u.value >> j) & 1
        for t in taps:
            if t <= j:
                bit ^= (v >> (j - t)) & 1
        v |= bit << j
    return BitVec(u.length, v)


def d_decomposition(c: ConnectionPolynomial) -> frozenset:
    """Degrees M with T = sum over m' in M of D_N^{m'} (GF(2), any valid N).

    D^{m'} contributes the identity plus the m'-th superdiagonal, so the
    nonzero degrees are supp(c) \\ {0} and D^0 is needed exactly when that
    set has even size (the stacked identities would otherwise cancel c_0).
    """
    upper = {t for t in c.support if t > 0}
    if len(upper) % 2 == 0:
        return frozenset(upper | {0})
    return frozenset(upper)
