"""Exact Clifford algebra of a split bilinear form in the projector basis.

The algebra G_n is generated by vectors (e_1 .. e_n) and covectors
(e^1 .. e^n) subject to

    (e_i)(e^j) + (e^j)(e_i) = delta_i^j * 1,
    (e_i)(e_j) + (e_j)(e_i) = 0,
    (e^i)(e^j) + (e^j)(e^i) = 0.

Around the vacuum idempotent (P) = (e_1)..(e_n)(e^n)..(e^1) one builds the
2^(2n) basis elements

    E(J, K)  =  (e^{j_1}) .. (e^{j_p}) (P) (e_{k_q}) .. (e_{k_1}),

where J = (j_1 < .. < j_p) and K = (k_1 < .. < k_q) are strictly increasing
multi-indices.  Note the vector word on the right runs through K in
*descending* order; an arbitrary word is brought to this form by
anticommuting factors, which only produces signs (see basis_word).  In this
storage the product collapses to the matrix-unit rule

    E(J, K) * E(J', K')  =  [K == J'] * E(J, K'),

so multiplication is exact, associative by construction, and sign-free.
All signs of the theory live in the embeddings of vectors/covectors and in
basis_word.  Coefficients are Fractions (or any exact ring element that
supports +, *, unary -, and truthiness testing for zero).
"""

from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from ._linalg import SingularMatrixError, as_matrix, identity, invert, is_symmetric

__all__ = [
    "AlgebraElement",
    "BasisElement",
    "DimensionMismatchError",
    "GradeError",
    "IndexRangeError",
    "Metric",
    "SingularMatrixError",
    "adjoint",
    "basis_elements",
    "basis_word",
    "canonicalize",
    "contract",
    "embed_covector",
    "embed_vector",
    "gen_delta",
    "projector_p",
    "projector_pi",
    "single",
    "unit",
    "zero",
]


class IndexRangeError(ValueError):
    """Index outside 1..n or grade outside 0..n."""


class DimensionMismatchError(ValueError):
    """Operands live in algebras of different dimension."""


class GradeError(ValueError):
    """Element has support outside the requested grade."""


def canonicalize(seq, n):
    """Sort an index tuple, tracking the permutation parity.

    Returns (sign, sorted_tuple) where sign is +1/-1 for the parity of the
    sorting permutation and 0 (with index ()) when an entry repeats, since a
    repeated index annihilates any antisymmetric component.
    """
    seq = tuple(seq)
    for x in seq:
        if not 1 <= x <= n:
            raise IndexRangeError(f"index {x} outside 1..{n}")
    if len(set(seq)) != len(seq):
        return 0, ()
    sign = 1
    items = list(seq)
    # insertion sort; counts inversions, fine for the short tuples used here
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(items)


def gen_delta(jp, k):
    """Generalized Kronecker delta det(delta^{jp_a}_{k_b}).

    Zero unless the two tuples are equal as sets of distinct indices, in
    which case it is the sign of the permutation taking k onto jp, computed
    by cycle decomposition instead of determinant expansion.
    """
    jp, k = tuple(jp), tuple(k)
    if len(jp) != len(k):
        return Fraction(0)
    if len(set(jp)) != len(jp) or set(jp) != set(k):
        return Fraction(0)
    pos = {v: i for i, v in enumerate(jp)}
    perm = [pos[v] for v in k]
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return Fraction(sign)


class BasisElement(NamedTuple):
    """One basis element E(upper, lower); both tuples strictly increasing."""

    upper: tuple
    lower: tuple

    def sort_key(self):
        return (len(self.upper), len(self.lower), self.upper, self.lower)

    def __str__(self):
        up = ",".join(map(str, self.upper))
        lo = ",".join(map(str, self.lower))
        return f"E[{up}|{lo}]"


def _check_multi_index(ix, n):
    ix = tuple(ix)
    if any(not 1 <= x <= n for x in ix):
        raise IndexRangeError(f"multi-index {ix} outside 1..{n}")
    if any(a >= b for a, b in zip(ix, ix[1:])):
        raise ValueError(f"multi-index {ix} must be strictly increasing")
    return ix


def basis_elements(n):
    """All 2^(2n) basis elements, in canonical order."""
    subsets = [c for p in range(n + 1) for c in combinations(range(1, n + 1), p)]
    return [BasisElement(j, k) for j in subsets for k in subsets]


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed; use Fraction")
    return c


class AlgebraElement:
    """Sparse exact linear combination of basis elements of G_n.

    Immutable after construction: every operation returns a new element.
    The term mapping never stores zero coefficients.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        if n < 1:
            raise IndexRangeError("dimension n must be >= 1")
        self.n = n
        clean = {}
        if terms:
            for be, c in terms.items():
                c = _coerce(c)
                if c:
                    _check_multi_index(be.upper, n)
                    _check_multi_index(be.lower, n)
                    clean[be] = c
        self._terms = clean

    # -- inspection ------------------------------------------------------

    def terms(self):
        """Terms as (BasisElement, coefficient) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, be):
        return self._terms.get(be, Fraction(0))

    def support(self):
        return frozenset(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- ring operations -------------------------------------------------

    def _require_same_n(self, other):
        if self.n != other.n:
            raise DimensionMismatchError(f"dimension mismatch: {self.n} != {other.n}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._require_same_n(other)
        out = dict(self._terms)
        for be, c in other._terms.items():
            s = out.get(be)
            s = c if s is None else s + c
            if s:
                out[be] = s
            else:
                out.pop(be, None)
        return AlgebraElement._raw(self.n, out)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return AlgebraElement._raw(self.n, {be: -c for be, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._require_same_n(other)
            out = {}
            for (j, k), c1 in self._terms.items():
                for (j2, k2), c2 in other._terms.items():
                    if k != j2:
                        continue
                    be = BasisElement(j, k2)
                    s = out.get(be)
                    p = c1 * c2
                    s = p if s is None else s + p
                    if s:
                        out[be] = s
                    else:
                        out.pop(be, None)
            return AlgebraElement._raw(self.n, out)
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def _scale(self, c):
        c = _coerce(c)
        if not c:
            return AlgebraElement._raw(self.n, {})
        return AlgebraElement._raw(self.n, {be: c * v for be, v in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    # -- construction ----------------------------------------------------

    @classmethod
    def _raw(cls, n, terms):
        """Build from an already-normalized term dict (no copies, no checks)."""
        el = object.__new__(cls)
        el.n = n
        el._terms = terms
        return el

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c} * {be}" for be, c in self.terms())

    def __repr__(self):
        return f"<G_{self.n}: {self}>"


def zero(n):
    return AlgebraElement._raw(n, {})


def single(n, upper, lower, coeff=1):
    """One validated basis term coeff * E(upper, lower)."""
    be = BasisElement(_check_multi_index(upper, n), _check_multi_index(lower, n))
    return AlgebraElement(n, {be: _coerce(coeff)})


def _canonical_lower(seq, n):
    """Sign and stored tuple for a vector word given in product order.

    The stored descending word for lower index K is (k_q .. k_1); sorting a
    q-element word contributes the usual parity, and the extra reversal
    contributes (-1)^(q(q-1)/2).
    """
    sign, ix = canonicalize(seq, n)
    if sign == 0:
        return 0, ()
    q = len(ix)
    if (q * (q - 1) // 2) % 2:
        sign = -sign
    return sign, ix


def basis_word(n, upper_seq, lower_seq, coeff=1):
    """Element for a raw generator word around the vacuum idempotent.

    upper_seq lists the covector factors left of the idempotent in product
    order; lower_seq lists the vector factors right of it in product order.
    Repeated factors annihilate the word.  Returns the canonical element,
    signs included.
    """
    su, up = canonicalize(upper_seq, n)
    if su == 0:
        return zero(n)
    sl, lo = _canonical_lower(lower_seq, n)
    if sl == 0:
        return zero(n)
    return single(n, up, lo, _coerce(coeff) * su * sl)


def projector_p(n):
    """The vacuum idempotent E([], [])."""
    return single(n, (), ())


def projector_pi(p, n):
    """Grade projector: sum of E(J, J) over all |J| = p."""
    if not 0 <= p <= n:
        raise IndexRangeError(f"grade {p} outside 0..{n}")
    terms = {BasisElement(j, j): Fraction(1) for j in combinations(range(1, n + 1), p)}
    return AlgebraElement._raw(n, terms)


def unit(n):
    """Two-sided identity: sum of all grade projectors."""
    terms = {}
    for p in range(n + 1):
        for j in combinations(range(1, n + 1), p):
            terms[BasisElement(j, j)] = Fraction(1)
    return AlgebraElement._raw(n, terms)


def _embed_signs(j, n):
    """Yield (sign, J, J + {j}) over subsets J avoiding j.

    sign = (-1)^(number of elements of J below j); fixed against the
    fermionic oracle so the anticommutation relations hold exactly.
    """
    others = [x for x in range(1, n + 1) if x != j]
    for p in range(len(others) + 1):
        for sub in combinations(others, p):
            below = sum(1 for s in sub if s < j)
            sign = -1 if below % 2 else 1
            merged = tuple(sorted(sub + (j,)))
            yield sign, sub, merged


def embed_vector(v, n=None):
    """Image of the vector v^j e_j in the projector basis.

    Expands e_j = sum over subsets J (j not in J) of +/- E(J, J + {j}).
    """
    v = tuple(_coerce(c) for c in v)
    n = len(v) if n is None else n
    if len(v) != n:
        raise DimensionMismatchError("component count must equal n")
    terms = {}
    for j, c in enumerate(v, start=1):
        if not c:
            continue
        for sign, sub, merged in _embed_signs(j, n):
            be = BasisElement(sub, merged)
            s = terms.get(be, Fraction(0)) + sign * c
            if s:
                terms[be] = s
            else:
                terms.pop(be, None)
    return AlgebraElement._raw(n, terms)


def embed_covector(a, n=None):
    """Image of the covector a_j e^j in the projector basis.

    Expands e^j = sum over subsets J (j not in J) of +/- E(J + {j}, J).
    """
    a = tuple(_coerce(c) for c in a)
    n = len(a) if n is None else n
    if len(a) != n:
        raise DimensionMismatchError("component count must equal n")
    terms = {}
    for j, c in enumerate(a, start=1):
        if not c:
            continue
        for sign, sub, merged in _embed_signs(j, n):
            be = BasisElement(merged, sub)
            s = terms.get(be, Fraction(0)) + sign * c
            if s:
                terms[be] = s
            else:
                terms.pop(be, None)
    return AlgebraElement._raw(n, terms)


class Metric:
    """Symmetric invertible matrix with exact inverse; raises if singular."""

    __slots__ = ("n", "g", "g_inv")

    def __init__(self, rows):
        self.g = as_matrix(rows)
        self.n = len(self.g)
        if not is_symmetric(self.g):
            raise ValueError("metric must be symmetric")
        self.g_inv = invert(self.g)

    @classmethod
    def euclidean(cls, n):
        return cls(identity(n))

    def flat(self, v):
        """Lower an index: vector components -> covector components."""
        v = tuple(_coerce(c) for c in v)
        return tuple(sum(self.g[i][j] * v[j] for j in range(self.n)) for i in range(self.n))

    def sharp(self, a):
        """Raise an index: covector components -> vector components."""
        a = tuple(_coerce(c) for c in a)
        return tuple(sum(self.g_inv[i][j] * a[j] for j in range(self.n)) for i in range(self.n))

    def pair(self, v, w):
        """g(v, w) on vector components."""
        v, w = tuple(v), tuple(w)
        return sum(self.g[i][j] * _coerce(v[i]) * _coerce(w[j])
                   for i in range(self.n) for j in range(self.n))

    def pair_inv(self, a, b):
        """g^{-1}(a, b) on covector components."""
        a, b = tuple(a), tuple(b)
        return sum(self.g_inv[i][j] * _coerce(a[i]) * _coerce(b[j])
                   for i in range(self.n) for j in range(self.n))

    def __eq__(self, other):
        return isinstance(other, Metric) and self.g == other.g

    def __repr__(self):
        return f"Metric({[list(r) for r in self.g]})"


def adjoint(x, g):
    """Metric adjunction: the involutive antihomomorphism with

        (e_i)+ = g_ij (e^j),   (e^i)+ = g^ij (e_j),   (P)+ = (P).

    Reverses each basis word and maps every factor through the metric,
    re-canonicalizing the resulting words.
    """
    if x.n != g.n:
        raise DimensionMismatchError("metric dimension must match element")
    n = x.n
    out = zero(n)
    for (up, lo), c in x._terms.items():
        # dagger of E(J,K): covector word from K (ascending), vector word
        # from J (descending), each factor contracted with g / g inverse.
        partial = [(c, (), ())]
        for k in lo:
            nxt = []
            for coeff, useq, lseq in partial:
                for a in range(1, n + 1):
                    w = g.g[k - 1][a - 1]
                    if w:
                        nxt.append((coeff * w, useq + (a,), lseq))
            partial = nxt
        for j in reversed(up):
            nxt = []
            for coeff, useq, lseq in partial:
                for b in range(1, n + 1):
                    w = g.g_inv[j - 1][b - 1]
                    if w:
                        nxt.append((coeff * w, useq, lseq + (b,)))
            partial = nxt
        for coeff, useq, lseq in partial:
            out = out + basis_word(n, useq, lseq, coeff)
    return out


def contract(x, p):
    """Full contraction of a pure grade-(p,p) element down to the vacuum line.

    E(J, K) with |J| = |K| = p contracts to [J == K] * E([], []); any term of
    a different grade raises GradeError.  On raw words built by basis_word
    this reproduces the generalized-delta contraction rule.
    """
    total = None
    for (up, lo), c in x._terms.items():
        if len(up) != p or len(lo) != p:
            raise GradeError(f"term E{(up, lo)} is not of grade ({p},{p})")
        if up == lo:
            total = c if total is None else total + c
    out = zero(x.n)
    if total is not None and total:
        return AlgebraElement._raw(x.n, {BasisElement((), ()): total})
    return out
