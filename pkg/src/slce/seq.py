"""SLCE sequence generation and elementary statistics.

The d-ary sequence of period T = q - 1 over the alphabet {0, ..., d-1}
assigns to position n the coset index i of alpha^n + 1 in the partition
of GF(q)* into the d cosets alpha^i <alpha^d>, and 0 when alpha^n + 1 = 0
(which happens exactly once per period, at n = T/2 for odd q). With the
dense dlog table the coset index is simply dlog(alpha^n + 1) mod d.

Everything downstream of generation (complexity, criteria) is binary-only;
d > 2 sequences can be generated but only serialized.
"""

import json
from dataclasses import dataclass

from .errors import BadAlphabet, NotBinary
from .ff import DEFAULT_SIZE_CAP, ExtField, build_field
from .numth import is_prime, two_adic_split
from .polybin import BinaryPoly


@dataclass(frozen=True)
class SlceSequence:
    field: ExtField
    d: int
    terms: tuple
    T: int
    u: int
    Tprime: int

    def ones_positions(self):
        """Positions n with s_n = 1 (binary sequences only)."""
        if self.d != 2:
            raise NotBinary("ones_positions is defined for d = 2")
        return tuple(n for n, s in enumerate(self.terms) if s)

    def to_bitstring(self):
        if self.d != 2:
            raise NotBinary("bitstring output is defined for d = 2")
        return "".join(str(b) for b in self.terms)

    def to_json(self):
        return {
            "p": self.field.p,
            "m": self.field.m,
            "d": self.d,
            "alpha_dlog_basis": "canonical",
            "terms": list(self.terms),
        }

    def to_json_str(self):
        return json.dumps(self.to_json(), sort_keys=True)


def generate_slce(field, d=2):
    """The SLCE sequence over GF(q) for a prime alphabet size d | q - 1."""
    q = field.q
    if not is_prime(d) or (q - 1) % d != 0:
        raise BadAlphabet(f"d = {d} must be a prime divisor of q - 1 = {q - 1}")
    T = q - 1
    terms = []
    for n in range(T):
        y = field.add_one_code(field.pow_alpha(n))
        terms.append(0 if y == 0 else field.dlog_code(y) % d)
    u, Tprime = two_adic_split(T)
    return SlceSequence(field, d, tuple(terms), T, u, Tprime)


def sequence_from_json(doc, size_cap=None):
    """Rebuild a sequence from its JSON form, regenerating the field."""
    field = build_field(doc["p"], doc["m"], size_cap or DEFAULT_SIZE_CAP)
    terms = tuple(doc["terms"])
    T = field.q - 1
    if len(terms) != T:
        raise ValueError("term count does not match the period q - 1")
    u, Tprime = two_adic_split(T)
    return SlceSequence(field, doc["d"], terms, T, u, Tprime)


def characteristic_poly(s):
    """S(X) = sum s_n X^n over one period, as a polynomial over GF(2)."""
    if s.d != 2:
        raise NotBinary("characteristic polynomial is defined for d = 2")
    v = 0
    for n, b in enumerate(s.terms):
        if b:
            v |= 1 << n
    return BinaryPoly(v)


def autocorrelation(s, tau):
    """Periodic autocorrelation sum of (-1)^(s_{n+tau} - s_n) for d = 2."""
    if s.d != 2:
        raise NotBinary("autocorrelation uses the +-1 convention, d = 2 only")
    T = s.T
    tau %= T
    mismatches = sum(1 for n in range(T) if s.terms[n] != s.terms[(n + tau) % T])
    return T - 2 * mismatches


def balance_report(s):
    """Counts per symbol over one period."""
    counts = {i: 0 for i in range(s.d)}
    for b in s.terms:
        counts[b] += 1
    return counts
