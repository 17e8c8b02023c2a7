"""Polynomial algebra over GF(2).

A polynomial a_0 + a_1 X + ... + a_n X^n is stored as the integer
a_0 + a_1 2 + ... + a_n 2^n, i.e. bit i is the coefficient of X^i.
The zero polynomial is the integer 0 and reports degree -1 (the sentinel
for "minus infinity"). All heavy lifting happens on raw ints in the
module-private helpers; the BinaryPoly wrapper adds operators and
serialization on top.

This module also hosts the combinatorial helpers tied to GF(2) root
multiplicities: binomial parity, Hasse derivatives, the factorization of
the k-th cyclotomic polynomial mod 2, and the index sets I_t used by the
divisibility criteria.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import BothZero, EvenK, ZeroPolynomial
from .numth import euler_phi, multiplicative_order

# ---------------------------------------------------------------------------
# raw int helpers


def _deg(a):
    return a.bit_length() - 1


def _mul2(a, b):
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod2(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = _deg(b)
    q = 0
    while _deg(a) >= db:
        s = _deg(a) - db
        q |= 1 << s
        a ^= b << s
    return q, a


def _mod2(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = _deg(b)
    while _deg(a) >= db:
        a ^= b << (_deg(a) - db)
    return a


def _gcd2(a, b):
    while b:
        a, b = b, _mod2(a, b)
    return a


def _frobenius_pow(a, e):
    # a(X)^(2^j) = a(X^(2^j)) over GF(2): spread every set bit by the factor e = 2^j
    out = 0
    n = a
    while n:
        low = n & -n
        out |= 1 << ((low.bit_length() - 1) * e)
        n ^= low
    return out


# ---------------------------------------------------------------------------
# public wrapper


class BinaryPoly:
    """Immutable polynomial over GF(2), backed by an int bit-vector."""

    __slots__ = ("value",)

    def __init__(self, value=0):
        if isinstance(value, BinaryPoly):
            value = value.value
        if not isinstance(value, int) or value < 0:
            raise TypeError("BinaryPoly expects a nonnegative int bit-vector")
        object.__setattr__(self, "value", value)

    @classmethod
    def from_coeffs(cls, coeffs):
        """Build from an iterable of 0/1 coefficients, constant term first."""
        v = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                v |= 1 << i
        return cls(v)

    @property
    def degree(self):
        """Degree; -1 is the sentinel for the zero polynomial."""
        return _deg(self.value)

    def coeff(self, i):
        return (self.value >> i) & 1

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, BinaryPoly):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(("BinaryPoly", self.value))

    def __add__(self, other):
        return BinaryPoly(self.value ^ BinaryPoly(other).value)

    __sub__ = __add__
    __xor__ = __add__

    def __mul__(self, other):
        return BinaryPoly(_mul2(self.value, BinaryPoly(other).value))

    def __divmod__(self, other):
        q, r = _divmod2(self.value, BinaryPoly(other).value)
        return BinaryPoly(q), BinaryPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return BinaryPoly(_mod2(self.value, BinaryPoly(other).value))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out, base = 1, self.value
        while n:
            if n & 1:
                out = _mul2(out, base)
            base = _mul2(base, base)
            n >>= 1
        return BinaryPoly(out)

    def evaluate(self, x):
        """Horner evaluation at x, an element of any field of characteristic 2.

        x must support * and + with itself and expose its field's one via
        `x.field.one`; plain 0/1 ints also work for GF(2) itself.
        """
        if isinstance(x, int):
            x &= 1
            if self.value == 0:
                return 0
            return bin(self.value).count("1") & 1 if x else self.value & 1
        acc = x.field.zero
        one = x.field.one
        for i in range(self.degree, -1, -1):
            acc = acc * x
            if (self.value >> i) & 1:
                acc = acc + one
        return acc

    def to_hex(self):
        """Hex of the little-endian byte encoding of the coefficient bits."""
        n = max(1, (self.value.bit_length() + 7) // 8)
        return self.value.to_bytes(n, "little").hex()

    @classmethod
    def from_hex(cls, s):
        return cls(int.from_bytes(bytes.fromhex(s), "little"))

    def __repr__(self):
        if self.value == 0:
            return "BinaryPoly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.value >> i) & 1:
                terms.append("1" if i == 0 else ("X" if i == 1 else f"X^{i}"))
        return f"BinaryPoly({' + '.join(terms)})"


@dataclass(frozen=True)
class LinearComplexityResult:
    """Linear complexity L together with the minimal polynomial c(X)."""

    L: int
    minimal_poly: BinaryPoly
    method: str


# ---------------------------------------------------------------------------
# gcd / linear complexity


def poly_gcd(a, b):
    """Monic gcd over GF(2) (monic is automatic in characteristic 2)."""
    a, b = BinaryPoly(a), BinaryPoly(b)
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    return BinaryPoly(_gcd2(a.value, b.value))


def berlekamp_massey(bits):
    """Shortest LFSR for the *periodic* sequence whose period is `bits`.

    The input is one full period; it is processed twice so the register
    that reproduces the periodic extension (not merely the prefix) is
    found. Returns the length L and the connection polynomial
    c(X) = 1 + c_1 X + ... + c_L X^L with s_n = sum c_i s_{n-i}.
    """
    seq = [int(b) & 1 for b in bits]
    if not seq:
        raise ValueError("empty sequence")
    seq = seq + seq
    n_total = len(seq)
    c, b = 1, 1  # connection poly and previous connection poly, as bit-vectors
    L, m = 0, -1
    for n in range(n_total):
        d = 0
        cc = c
        i = 0
        while cc:
            if cc & 1:
                d ^= seq[n - i]
            cc >>= 1
            i += 1
        if d:
            t = c
            c ^= b << (n - m)
            if 2 * L <= n:
                L = n + 1 - L
                b = t
                m = n
    return LinearComplexityResult(L, BinaryPoly(c), "berlekamp_massey")


def lc_via_gcd(S, T):
    """Linear complexity from c(X) = (X^T - 1) / gcd(X^T - 1, S(X))."""
    S = BinaryPoly(S)
    if S.degree >= T:
        raise ValueError("deg S must be < T")
    xt1 = (1 << T) | 1  # X^T - 1 = X^T + 1 over GF(2)
    g = _gcd2(xt1, S.value)
    c, r = _divmod2(xt1, g)
    assert r == 0
    return LinearComplexityResult(T - _deg(g), BinaryPoly(c), "gcd_formula")


# ---------------------------------------------------------------------------
# Lucas parity, Hasse derivatives, multiplicities


def binom_mod2(n, t):
    """Parity of C(n, t): 1 iff every binary digit of t is <= that of n."""
    return 1 if (n & t) == t else 0


def hasse_derivative(f, t):
    """t-th Hasse derivative: sum of C(n, t) a_n X^(n-t) with mod-2 binomials."""
    f = BinaryPoly(f)
    out = 0
    v = f.value >> t
    n = t
    while v:
        if (v & 1) and (n & t) == t:
            out |= 1 << (n - t)
        v >>= 1
        n += 1
    return BinaryPoly(out)


def root_multiplicity(f, beta):
    """Exact multiplicity of beta as a root of f, via Hasse derivatives.

    beta is an element of a binary field (see BinaryPoly.evaluate). The
    multiplicity is the least t with f^(t)(beta) != 0.
    """
    f = BinaryPoly(f)
    if not f:
        raise ZeroPolynomial("zero polynomial has no defined multiplicity")
    for t in range(f.degree + 1):
        if hasse_derivative(f, t).evaluate(beta):
            return t
    return f.degree  # leading coefficient is nonzero, so unreachable


# ---------------------------------------------------------------------------
# cyclotomic polynomials over GF(2)


@lru_cache(maxsize=None)
def phi_mod2(n):
    """The n-th cyclotomic polynomial reduced mod 2, as an int bit-vector.

    Computed by dividing X^n - 1 by the proper-divisor cyclotomics; the
    divisions are exact because every divisor is monic.
    """
    rem = (1 << n) | 1
    for d in range(1, n):
        if n % d == 0:
            rem, r = _divmod2(rem, phi_mod2(d))
            assert r == 0
    return rem


@lru_cache(maxsize=None)
def factor_phi_mod2(k):
    """Distinct irreducible factors of the k-th cyclotomic polynomial mod 2.

    All factors have degree f = ord_k(2); there are phi(k)/f of them and
    they come back sorted by their int encoding (low-order coefficients
    weigh least), so the first entry is the canonical factor. Factors are
    found by trial division over candidate polynomials in encoding order;
    reducible candidates cannot divide since every irreducible factor has
    degree exactly f.
    """
    if k % 2 == 0:
        raise EvenK("k must be odd")
    f = multiplicative_order(2, k)
    rem = phi_mod2(k)
    count = euler_phi(k) // f
    if count == 1:
        return (BinaryPoly(rem),)
    out = []
    c = (1 << f) | 1
    while len(out) < count:
        if _deg(rem) == f:
            out.append(rem)
            rem = 1
            break
        if _mod2(rem, c) == 0:
            out.append(c)
            rem, r = _divmod2(rem, c)
            assert r == 0
        c += 2  # factors of Phi_k have constant term 1
    assert rem == 1 and len(out) == count
    return tuple(BinaryPoly(v) for v in out)


# ---------------------------------------------------------------------------
# index sets for the divisibility criteria


def bit_length_h(t):
    """Number of binary digits of t (0 for t = 0): the least h with t < 2^h.

    The strict bound matters: t = 2 gets h = 2, pairing it with order-4
    twist characters and modulus 8, which is what the t = 2 criterion uses.
    """
    return t.bit_length()


def index_set(t):
    """I_t: all i in [0, 2^h) whose binary digits dominate those of t."""
    h = bit_length_h(t)
    return [i for i in range(1 << h) if (i & t) == t]
