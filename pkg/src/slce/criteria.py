"""Divisibility criteria for root multiplicities of binary SLCE sequences.

For an odd-order root beta of X^T - 1 the vanishing of the t-th Hasse
derivative of S(X) at beta is equivalent to exact congruences between
Jacobi sums modulo powers of 2 times a prime over 2. This module computes
both sides independently:

  * ground truth: direct evaluation of sum C(n,t) s_n beta^n in GF(2^f);
  * criteria: exact cyclotomic-integer congruences (the numbered checks).

Every check is an if-and-only-if claim, so any disagreement between a
criterion and the direct evaluation is an implementation bug or an erratum
and must surface as a mismatch record, never be suppressed.

Naming: beta = gamma^e in the canonical GF(2^f); the paired character chi
sends alpha to z_k^e, so chi reduces to beta modulo the canonical prime.
The verification sweep quantifies over every unit e, i.e. over the whole
Galois orbit of beta, rather than stipulating one pairing.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclo import (
    Character,
    CycInt,
    IdealSpec,
    ideal_membership,
    k_sum,
    k_sum_counts,
    quadratic_gauss_closed,
    reduce_mod_P,
)
from .errors import HOutOfRange, NotBinary, NotSemiprimitive, PreconditionUnmet
from .ff import ResidueField, build_field, build_residue_field
from .numth import divisors, is_prime, two_adic_split, units
from .polybin import BinaryPoly, binom_mod2, bit_length_h, index_set
from .seq import characteristic_poly, generate_slce


# ---------------------------------------------------------------------------
# analysis contexts


class AnalysisContext:
    """One (sequence, k, e) instance: beta = gamma^e of order k, paired
    character chi = eta_{e/k}, canonical prime spec. Immutable; the K-sum
    vectors and the root-of-unity matrix rows are cached per twist level h."""

    __slots__ = ("seq", "field", "k", "e", "rf", "beta", "chi", "spec",
                 "_kcounts", "_rows", "_ones")

    def __init__(self, seq, k, e):
        field = seq.field
        if seq.d != 2:
            raise NotBinary("criteria are defined for binary sequences")
        if k % 2 == 0 or k <= 1:
            raise ValueError("k must be an odd integer > 1")
        if seq.Tprime % k != 0:
            raise ValueError(f"k = {k} does not divide T' = {seq.Tprime}")
        if math.gcd(e, k) != 1:
            raise ValueError(f"e = {e} is not a unit mod {k}")
        self.seq = seq
        self.field = field
        self.k = k
        self.e = e % k
        self.rf = build_residue_field(k)
        self.beta = self.rf.gamma ** self.e
        self.chi = Character(field, self.e * (field.q - 1) // k)
        self.spec = IdealSpec(self.rf, 0)
        assert reduce_mod_P(self.chi.value(field.alpha), self.spec) == self.beta
        self._kcounts = {}
        self._rows = {}
        self._ones = seq.ones_positions()

    def ideal_spec(self, h):
        return self.spec if h == 0 else IdealSpec(self.rf, h)

    def conductor(self, h):
        return self.k if h == 0 else (1 << h) * self.k

    def ksum_counts(self, h):
        """Exponent-count vectors of K(eta_{j/2^h} chi) for j < 2^h, in
        conductor 2^h k."""
        if h not in self._kcounts:
            qm1 = self.field.q - 1
            N = self.conductor(h)
            step = qm1 >> h
            self._kcounts[h] = [
                k_sum_counts(Character(self.field, j * step + self.chi.a), N)
                for j in range(1 << h)
            ]
        return self._kcounts[h]

    def ksum_vector(self, h):
        """The same K sums folded into the power basis."""
        N = self.conductor(h)
        return [CycInt.from_exponent_counts(N, c) for c in self.ksum_counts(h)]

    def matrix_rows(self, h):
        """Row i of the root-of-unity matrix applied to the signed K sums:
        sum over j of eta_{j/2^h}(-1) z_{2^h}^(-ij) K(eta_{j/2^h} chi),
        kept as exponent-count vectors. Row sums over subsets of i recover
        the pointwise K-form sums, so both matrix-style checks share this
        cache."""
        if h not in self._rows:
            T = self.seq.T
            N = self.conductor(h)
            two_h = 1 << h
            signed = []
            for j, counts in enumerate(self.ksum_counts(h)):
                if _eta_sign_at_minus_one(T, j, h) < 0:
                    counts = [-c for c in counts]
                signed.append(counts)
            rows = []
            for i in range(two_h):
                acc = [0] * N
                for j in range(two_h):
                    shift = ((-i * j) % two_h) * self.k % N
                    cj = signed[j]
                    rot = cj[N - shift:] + cj[:N - shift] if shift else cj
                    acc = [a + b for a, b in zip(acc, rot)]
                rows.append(acc)
            self._rows[h] = rows
        return self._rows[h]

    def __repr__(self):
        return f"AnalysisContext(q={self.field.q}, k={self.k}, e={self.e})"


def make_context(seq, k, e):
    return AnalysisContext(seq, k, e)


def admissible_contexts(seq):
    """All contexts of a binary sequence: odd k | T' with k > 1, unit e."""
    for k in divisors(seq.Tprime):
        if k == 1:
            continue
        for e in units(k):
            yield AnalysisContext(seq, k, e)


@lru_cache(maxsize=None)
def _rho_plus_one_signs(field):
    # signs[n] = rho(alpha^n + 1) as an int in {-1, 0, 1}; 0 at n = T/2
    signs = []
    for n in range(field.q - 1):
        y = field.add_one_code(field.pow_alpha(n))
        signs.append(0 if y == 0 else 1 - 2 * (field.dlog_code(y) & 1))
    return tuple(signs)


def _eta_sign_at_minus_one(T, j, h):
    # eta_{j/2^h}(-1) = zeta_{2^h}^(j T/2); always +-1
    exp = (j * (T // 2)) % (1 << h) if h else 0
    if exp == 0:
        return 1
    assert exp == 1 << (h - 1)
    return -1


def _check_t(ctx, t):
    if not 0 <= t < (1 << ctx.seq.u):
        raise ValueError(f"t = {t} outside [0, 2^u) with u = {ctx.seq.u}")


# ---------------------------------------------------------------------------
# ground truth


def derivative_vanishes_direct(ctx, t):
    """Does sum C(n,t) s_n beta^n vanish in GF(2^f)? This is the direct
    witness for the t-th Hasse derivative of S vanishing at beta."""
    _check_t(ctx, t)
    gp = ctx.rf.gamma_pow_bits()
    k, e = ctx.k, ctx.e
    acc = 0
    for n in ctx._ones:
        if n & t == t:
            acc ^= gp[n * e % k]
    return acc == 0


def coset_sum(ctx, i, h):
    """E_i = sum of s_n beta^n over n = i mod 2^h."""
    if not 0 <= h <= ctx.seq.u or not 0 <= i < (1 << h):
        raise ValueError("need 0 <= i < 2^h <= 2^u")
    gp = ctx.rf.gamma_pow_bits()
    k, e = ctx.k, ctx.e
    mask = (1 << h) - 1
    acc = 0
    for n in ctx._ones:
        if n & mask == i:
            acc ^= gp[n * e % k]
    return ctx.rf.element(acc)


# ---------------------------------------------------------------------------
# pointwise criteria


def thm1_check(ctx, t):
    """Criterion 1: C(T/2,t) + sum C(n,t) rho(alpha^n + 1) chi(alpha^n)
    lies in 2P, with every binomial read through its Lucas parity.

    The 0/1 reading is forced: the criterion is lifted from an identity in
    characteristic 2, and an even multiple of a ring element need not lie
    in 2P, so exact integer binomials change verdicts (q = 19, t = 1 is a
    counterexample) while the parity form agrees with the direct
    evaluation everywhere."""
    _check_t(ctx, t)
    T, k, e = ctx.seq.T, ctx.k, ctx.e
    signs = _rho_plus_one_signs(ctx.field)
    counts = [0] * k
    for n in range(T):
        if n & t == t:
            counts[n * e % k] += signs[n]
    counts[0] += binom_mod2(T // 2, t)
    value = CycInt.from_exponent_counts(k, counts)
    return ideal_membership(value, ctx.spec)


def thm2_check(ctx, t):
    """Criterion 2: the K-sum form of thm1_check, with h the bit length of
    t, tested modulo 2^(h+1) P Z[z_{2^h k}].

    The constant term is 2^h times the *parity* of C(T/2,t): the K-sum
    expansion multiplies the parity form of the pointwise criterion by
    2^h, and swapping in the exact binomial shifts the value by 2^h times
    an even integer, which need not lie in the modulus (q = 13, t = 1
    flips). The parity reading also makes the t = 1..3 closed forms
    literal specializations."""
    _check_t(ctx, t)
    h = bit_length_h(t)
    T = ctx.seq.T
    N = ctx.conductor(h)
    rows = ctx.matrix_rows(h)
    acc = [0] * N
    for i in index_set(t):
        acc = [a + b for a, b in zip(acc, rows[i])]
    acc[0] += (1 << h) * binom_mod2(T // 2, t)
    total = CycInt.from_exponent_counts(N, acc)
    return ideal_membership(total, ctx.ideal_spec(h))


def thm3_check(ctx, h):
    """Criterion 3: beta has multiplicity at least 2^h iff the 2^h x 2^h
    root-of-unity matrix applied to the twisted K-sums is congruent to
    -2^h times the indicator of T/2 mod 2^h, row by row, modulo
    2^(h+1) P Z[z_{2^h k}]."""
    if not 1 <= h <= ctx.seq.u:
        raise HOutOfRange(f"h = {h} outside 1..u = {ctx.seq.u}")
    T = ctx.seq.T
    N = ctx.conductor(h)
    two_h = 1 << h
    rows = ctx.matrix_rows(h)
    d_index = (T // 2) % two_h
    spec_h = ctx.ideal_spec(h)
    for i in range(two_h):
        acc = list(rows[i])
        if i == d_index:
            acc[0] += two_h
        if not ideal_membership(CycInt.from_exponent_counts(N, acc), spec_h):
            return False
    return True


def necessary_condition_check(ctx, h):
    """One-directional check: multiplicity >= 2^h forces every twisted K-sum
    to be congruent to -1 modulo 2 P Z[z_{2^h k}]. Never sufficient."""
    if not 1 <= h <= ctx.seq.u:
        raise HOutOfRange(f"h = {h} outside 1..u = {ctx.seq.u}")
    N = ctx.conductor(h)
    spec_h = ctx.ideal_spec(h)
    return all(
        ideal_membership(CycInt.from_int(N, 1) + Kj, spec_h, two_exponent=1)
        for Kj in ctx.ksum_vector(h)
    )


def prop_check(ctx, which):
    """Specializations of the congruences at t = which - 1 (which in 1..4),
    written out the way the closed forms are usually quoted. Props 3 and 4
    require q = 1 mod 4 (otherwise t = 2, 3 are out of range anyway)."""
    q = ctx.field.q
    if which == 1:
        K = ctx.ksum_vector(0)
        value = CycInt.from_int(ctx.k, 1) + K[0]
        return ideal_membership(value, ctx.spec, two_exponent=1)
    if which == 2:
        N = ctx.conductor(1)
        K = ctx.ksum_vector(1)
        if q % 4 == 1:
            value = K[0] - K[1]
        else:
            value = CycInt.from_int(N, 2) + K[0] + K[1]
        return ideal_membership(value, ctx.ideal_spec(1), two_exponent=2)
    if which not in (3, 4):
        raise ValueError("which must be in 1..4")
    if q % 4 != 1:
        raise PreconditionUnmet("props 3 and 4 require q = 1 mod 4")
    N = ctx.conductor(2)
    K = ctx.ksum_vector(2)
    z4 = CycInt.root(N, ctx.k)
    one = CycInt.from_int(N, 1)
    if which == 3:
        if q % 8 == 1:
            value = 2 * K[0] - (one - z4) * K[1] - (one + z4) * K[3]
        else:
            value = CycInt.from_int(N, 4) + 2 * K[0] + (one - z4) * K[1] + (one + z4) * K[3]
    else:
        if q % 8 == 1:
            value = K[0] + z4 * K[1] - K[2] - z4 * K[3]
        else:
            value = K[0] - z4 * K[1] - K[2] + z4 * K[3]
    return ideal_membership(value, ctx.ideal_spec(2), two_exponent=3)


# ---------------------------------------------------------------------------
# multiplicity profile


@lru_cache(maxsize=None)
def _residue_field_any(k):
    # the k = 1 "residue field" is GF(2) itself: Phi_1 = X + 1 mod 2,
    # gamma = 1; the public builder rejects k = 1, the profile needs it
    if k == 1:
        return ResidueField(1, 0b11, 1)
    return build_residue_field(k)


@dataclass(frozen=True)
class MultiplicityProfile:
    """Multiplicity of every odd-order root beta = gamma^e (order k | T')
    in S(X), capped at 2^u, plus the linear complexity they reconstruct."""

    entries: dict
    L: int

    def capped_total(self):
        return sum(self.entries.values())


def multiplicity_profile(seq):
    if seq.d != 2:
        raise NotBinary("multiplicity profile is defined for d = 2")
    T, u = seq.T, seq.u
    cap = 1 << u
    ones = seq.ones_positions()
    entries = {}
    for k in divisors(seq.Tprime):
        gp = _residue_field_any(k).gamma_pow_bits()
        for e in units(k):
            mult = cap
            for t in range(cap):
                acc = 0
                for n in ones:
                    if n & t == t:
                        acc ^= gp[n * e % k]
                if acc:
                    mult = t
                    break
            entries[(k, e)] = mult
    return MultiplicityProfile(entries, T - sum(entries.values()))


# ---------------------------------------------------------------------------
# semiprimitive case


@dataclass(frozen=True)
class SemiprimitiveParams:
    """Minimal v with 2^h k | p^v + 1 and m = 2vw, plus the analogous
    (v', w') for the untwisted order k."""

    p: int
    m: int
    k: int
    h: int
    v: int
    w: int
    vprime: int
    wprime: int


def _minimal_v(p, target, bound):
    for v in range(1, bound + 1):
        if (pow(p, v) + 1) % target == 0:
            return v
    return None


def semiprimitive_params(p, m, k, h):
    target = (1 << h) * k
    v = _minimal_v(p, target, m)
    if v is None:
        raise NotSemiprimitive(f"no v <= {m} with {target} | p^v + 1")
    if m % (2 * v) != 0:
        raise NotSemiprimitive(f"m = {m} is not of the form 2vw for v = {v}")
    w = m // (2 * v)
    vprime = _minimal_v(p, k, m)
    assert vprime is not None and m % (2 * vprime) == 0
    wprime = m // (2 * vprime)
    u, _ = two_adic_split(p**m - 1)
    assert h < u, "the twist level is always below the 2-adic valuation of T"
    return SemiprimitiveParams(p, m, k, h, v, w, vprime, wprime)


def lemma1_check(p, m, k, h, e=1):
    """In the semiprimitive case all 2^h twisted K-sums collapse to one
    rational integer of quadratic-Gauss-sum magnitude.

    Checked exactly: every K(eta_{i/2^h} chi) is the same CycInt constant,
    equal to +-G(rho) with G(rho) the (integer) closed form. The sign is
    deliberately free: direct summation gives K = +5 over GF(25) with
    k = 3, h = 1 while G(rho) = -5 there, and the parity rule for
    divisibility is consistent only with the summation sign.
    """
    semiprimitive_params(p, m, k, h)
    field = build_field(p, m)
    if math.gcd(e, k) != 1:
        raise ValueError(f"e = {e} is not a unit mod {k}")
    qm1 = field.q - 1
    N = k if h == 0 else (1 << h) * k
    g = quadratic_gauss_closed(p, m).as_int()
    a = e * qm1 // k
    step = qm1 >> h
    values = [
        k_sum(Character(field, i * step + a), conductor=N) for i in range(1 << h)
    ]
    first = values[0]
    if any(v != first for v in values[1:]):
        return False
    try:
        common = first.as_int()
    except ValueError:
        return False
    return common in (g, -g)


def semiprimitive_predict(p, m, k, h):
    """Parity rule for (1 + X + ... + X^(k-1))^(2^h) dividing S(X):
    w' even always suffices; for p = 3 mod 4, v'w' odd also does."""
    params = semiprimitive_params(p, m, k, h)
    if p % 4 == 1:
        return params.wprime % 2 == 0
    return params.wprime % 2 == 0 or (params.vprime * params.wprime) % 2 == 1


def all_ones_power_divides(seq, k, h):
    """Brute-force ground truth for semiprimitive_predict: does
    (1 + X + ... + X^(k-1))^(2^h) divide S(X)?"""
    base = BinaryPoly((1 << k) - 1)  # 1 + X + ... + X^(k-1)
    S = characteristic_poly(seq)
    if not S:
        return True
    return S % (base ** (1 << h)) == 0


# ---------------------------------------------------------------------------
# sweep runner


@dataclass(frozen=True)
class CriterionRecord:
    """One verdict pair: a criterion's prediction next to the ground truth."""

    q: int
    p: int
    m: int
    k: int
    e: int
    check: str
    index: int
    predicted: bool
    ground_truth: bool
    match: bool

    def to_json(self):
        return {
            "q": self.q, "p": self.p, "m": self.m, "k": self.k, "e": self.e,
            "check": self.check, "index": self.index,
            "predicted": self.predicted, "ground_truth": self.ground_truth,
            "match": self.match,
        }

    CSV_FIELDS = ("q", "p", "m", "k", "e", "check", "index",
                  "predicted", "ground_truth", "match")

    def to_row(self):
        return [getattr(self, f) for f in self.CSV_FIELDS]


_CHECK_TOKENS = {
    "1": "thm1", "thm1": "thm1",
    "2": "thm2", "thm2": "thm2",
    "3": "thm3", "thm3": "thm3",
    "prop1": "prop1", "prop2": "prop2", "prop3": "prop3", "prop4": "prop4",
    "necessary": "necessary", "nc": "necessary",
}

ALL_CHECKS = ("thm1", "thm2", "thm3", "prop1", "prop2", "prop3", "prop4", "necessary")


def normalize_checks(tokens):
    out = []
    for tok in tokens:
        tok = tok.strip().lower()
        if tok not in _CHECK_TOKENS:
            raise ValueError(f"unknown check token {tok!r}")
        name = _CHECK_TOKENS[tok]
        if name not in out:
            out.append(name)
    return tuple(out)


def odd_prime_powers(q_max):
    """(p, m, q) for every odd prime power q <= q_max, ascending in q."""
    out = []
    for p in range(3, q_max + 1, 2):
        if not is_prime(p):
            continue
        q, m = p, 1
        while q <= q_max:
            out.append((p, m, q))
            q *= p
            m += 1
    return sorted(out, key=lambda t: t[2])


def analyze_field(p, m, checks=ALL_CHECKS, size_cap=None):
    """All criterion records for one field, sorted canonically."""
    field = build_field(p, m) if size_cap is None else build_field(p, m, size_cap)
    seq = generate_slce(field, 2)
    profile = multiplicity_profile(seq)
    q, u = field.q, seq.u
    records = []

    def rec(ctx, check, index, predicted, ground_truth, match=None):
        records.append(CriterionRecord(
            q, p, m, ctx.k, ctx.e, check, index, predicted, ground_truth,
            (predicted == ground_truth) if match is None else match,
        ))

    for ctx in admissible_contexts(seq):
        mult = profile.entries[(ctx.k, ctx.e)]
        direct = [derivative_vanishes_direct(ctx, t) for t in range(1 << u)]
        for check in checks:
            if check == "thm1":
                for t in range(1 << u):
                    rec(ctx, check, t, thm1_check(ctx, t), direct[t])
            elif check == "thm2":
                for t in range(1 << u):
                    rec(ctx, check, t, thm2_check(ctx, t), direct[t])
            elif check == "thm3":
                for h in range(1, u + 1):
                    rec(ctx, check, h, thm3_check(ctx, h), mult >= (1 << h))
            elif check == "necessary":
                for h in range(1, u + 1):
                    pred = necessary_condition_check(ctx, h)
                    gt = mult >= (1 << h)
                    rec(ctx, check, h, pred, gt, match=not (gt and not pred))
            else:
                which = int(check[-1])
                t = which - 1
                if which >= 3 and q % 4 != 1:
                    continue
                rec(ctx, check, t, prop_check(ctx, which), direct[t])
    records.sort(key=lambda r: (r.q, r.k, r.e, r.check, r.index))
    return records


def run_verify(q_max, p_filter=None, checks=ALL_CHECKS, size_cap=None, jobs=1):
    """Criterion records over every admissible context with q <= q_max.

    Records come back sorted by (q, k, e, check, index); the summary counts
    contexts, checks and mismatches. Worker parallelism never changes the
    output because the merge re-sorts canonically.
    """
    fields = [(p, m) for p, m, _ in odd_prime_powers(q_max)
              if p_filter is None or p == p_filter]
    if jobs > 1 and len(fields) > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            chunks = pool.starmap(
                analyze_field, [(p, m, checks, size_cap) for p, m in fields]
            )
    else:
        chunks = [analyze_field(p, m, checks, size_cap) for p, m in fields]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (r.q, r.k, r.e, r.check, r.index))
    contexts = len({(r.q, r.k, r.e) for r in records})
    mismatches = sum(1 for r in records if not r.match)
    summary = {"contexts": contexts, "checks": len(records), "mismatches": mismatches}
    return records, summary
