"""Exact polynomial field calculus over the invariant subspaces.

Field variables of rank p are indexed by strictly increasing multi-indices
I with |I| = p:

    y[I]        field components              kind 'y'
    pi[a][I]    frame momenta                 kind 'pi'
    p[mu][I]    polymomenta                   kind 'p'
    d[mu]y[I]   formal derivative symbols     kind 'Dy'
    d[mu]pi..   formal derivative symbols     kind 'Dpi'
    d[mu]p..    formal derivative symbols     kind 'Dp'

Polymomenta and frame momenta are related through an invertible frame map
L by p[mu][I] = L^mu_c pi[c][I].  The Latin metric is Euclidean
throughout, so raised and lowered field indices coincide.

All multi-index sums below run over strictly increasing tuples only; the
1/p! weights that would accompany sums over all index orderings are
absorbed by that convention (in nabla, nabla_adjoint, bracket and the
contraction step alike).

The derivative operator into Z_(p) and its adjoint are

    nabla F          = sum_I E([],I) dF/dy[I] + sum_{a,I} E([a],I) dF/dpi[a][I]
    nabla_adjoint G  = sum_I E(I,[]) dG/dy[I] + sum_{a,I} E(I,[a]) dG/dpi[a][I]

and the bracket of two rank-p observables written in y/p symbols is the
vacuum coefficient of

    contract( (nabla_adjoint G') * beta_mu * (nabla F'), p )

with G', F' rewritten in frame momenta and beta_mu the inverse-frame
contraction of the negative vector DKP family.  It equals the closed form

    sum_I ( dG/dy[I] dF/dp[mu][I] - dF/dy[I] dG/dp[mu][I] )

exactly, is antisymmetric, satisfies the Leibniz rule, and satisfies the
symmetrized double-bracket cyclic identity.
"""

from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .algebra import AlgebraElement, BasisElement, canonicalize, contract
from .dkp import FrameMap, beta_mu

__all__ = [
    "DwhEquations",
    "FieldPoly",
    "FieldSymbol",
    "KindError",
    "RankError",
    "bracket",
    "bracket_closed_form",
    "check_jacobi_sym",
    "check_leibniz",
    "dwh_derive",
    "nabla",
    "nabla_adjoint",
    "partial",
    "dp_sym",
    "dpi_sym",
    "dy_sym",
    "p_sym",
    "pi_sym",
    "y_sym",
    "symbol_poly",
]


class KindError(ValueError):
    """Operation applied to an unsupported symbol kind."""


class RankError(ValueError):
    """Symbol rank or index range does not match the context."""


_KIND_ORDER = {"y": 0, "pi": 1, "p": 2, "Dy": 3, "Dpi": 4, "Dp": 5}
_DERIVATIVE_KINDS = ("Dy", "Dpi", "Dp")


class FieldSymbol(NamedTuple):
    """One field-variable symbol: kind, leading indices, multi-index."""

    kind: str
    idx: tuple
    index: tuple

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.idx, self.index)

    def __str__(self):
        ilist = ",".join(map(str, self.index))
        if self.kind == "y":
            return f"y[{ilist}]"
        if self.kind in ("pi", "p"):
            return f"{self.kind}[{self.idx[0]}][{ilist}]"
        if self.kind == "Dy":
            return f"d[{self.idx[0]}]y[{ilist}]"
        if self.kind == "Dpi":
            return f"d[{self.idx[0]}]pi[{self.idx[1]}][{ilist}]"
        return f"d[{self.idx[0]}]p[{self.idx[1]}][{ilist}]"


def _check_canonical(ix):
    ix = tuple(ix)
    if any(a >= b for a, b in zip(ix, ix[1:])) or any(x < 1 for x in ix):
        raise RankError(f"multi-index {ix} must be strictly increasing and positive")
    return ix


def y_sym(I):
    return FieldSymbol("y", (), _check_canonical(I))


def pi_sym(a, I):
    return FieldSymbol("pi", (a,), _check_canonical(I))


def p_sym(mu, I):
    return FieldSymbol("p", (mu,), _check_canonical(I))


def dy_sym(mu, I):
    return FieldSymbol("Dy", (mu,), _check_canonical(I))


def dpi_sym(mu, a, I):
    return FieldSymbol("Dpi", (mu, a), _check_canonical(I))


def dp_sym(mu, nu, I):
    return FieldSymbol("Dp", (mu, nu), _check_canonical(I))


def symbol_poly(kind, idx, seq, n):
    """Polynomial for a symbol with a possibly unsorted multi-index.

    Sorting contributes the permutation sign; a repeated index yields the
    zero polynomial.
    """
    sign, ix = canonicalize(seq, n)
    if sign == 0:
        return FieldPoly.zero()
    sym = FieldSymbol(kind, tuple(idx), ix)
    return FieldPoly({((sym, 1),): Fraction(sign)})


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed; use Fraction")
    return c


class FieldPoly:
    """Sparse multivariate polynomial with Fraction coefficients.

    Monomials are sorted tuples of (FieldSymbol, exponent) pairs; the empty
    tuple is the constant monomial.  Immutable after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _coerce(c)
                if c:
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def of(cls, sym: FieldSymbol):
        return cls({((sym, 1),): Fraction(1)})

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return FieldPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return FieldPoly._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if not c:
                return FieldPoly.zero()
            return FieldPoly._raw({m: c * v for m, v in self.terms.items()})
        if not isinstance(other, FieldPoly):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _merge_monomials(m1, m2)
                s = out.get(m)
                prod = c1 * c2
                s = prod if s is None else s + prod
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return FieldPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        out = FieldPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldPoly.const(other)
        if not isinstance(other, FieldPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @staticmethod
    def _lift(other):
        if isinstance(other, (int, Fraction)):
            return FieldPoly.const(other)
        if isinstance(other, FieldPoly):
            return other
        return NotImplemented

    @classmethod
    def _raw(cls, terms):
        poly = object.__new__(cls)
        poly.terms = terms
        return poly

    # -- calculus ---------------------------------------------------------

    def partial(self, sym: FieldSymbol):
        """Formal partial derivative by a y/pi/p symbol."""
        if sym.kind in _DERIVATIVE_KINDS:
            raise KindError(f"cannot differentiate by derivative symbol {sym}")
        out = {}
        for mono, c in self.terms.items():
            for i, (s, e) in enumerate(mono):
                if s == sym:
                    if e == 1:
                        m = mono[:i] + mono[i + 1 :]
                    else:
                        m = mono[:i] + ((s, e - 1),) + mono[i + 1 :]
                    v = out.get(m, Fraction(0)) + c * e
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
                    break
        return FieldPoly._raw(out)

    def substitute(self, mapping):
        """Replace symbols by polynomials; mapping: FieldSymbol -> FieldPoly."""
        out = FieldPoly.zero()
        for mono, c in self.terms.items():
            prod = FieldPoly.const(c)
            for sym, e in mono:
                rep = mapping.get(sym)
                base = rep if rep is not None else FieldPoly.of(sym)
                prod = prod * base**e
            out = out + prod
        return out

    def symbols(self):
        return {s for mono in self.terms for s, _ in mono}

    def degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(
            self.terms.items(), key=lambda t: tuple((s.sort_key(), e) for s, e in t[0])
        ):
            factors = [str(c)]
            for s, e in mono:
                factors.append(f"{s}^{e}" if e > 1 else str(s))
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"FieldPoly({self})"


def _merge_monomials(m1, m2):
    exps = {}
    for s, e in m1:
        exps[s] = exps.get(s, 0) + e
    for s, e in m2:
        exps[s] = exps.get(s, 0) + e
    return tuple(sorted(exps.items(), key=lambda t: t[0].sort_key()))


def partial(f: FieldPoly, sym: FieldSymbol) -> FieldPoly:
    return f.partial(sym)


def _validate(f: FieldPoly, p, n, kinds):
    for s in f.symbols():
        if s.kind not in kinds:
            raise RankError(f"symbol {s} of kind {s.kind!r} not allowed here")
        if len(s.index) != p:
            raise RankError(f"symbol {s} has rank {len(s.index)}, expected {p}")
        if any(x > n for x in s.index) or any(x > n for x in s.idx):
            raise RankError(f"symbol {s} has an index outside 1..{n}")


def _multi_indices(n, p):
    return list(combinations(range(1, n + 1), p))


def nabla(f: FieldPoly, p, n) -> AlgebraElement:
    """Z_(p)-valued derivative of a polynomial in y/pi symbols."""
    _validate(f, p, n, ("y", "pi"))
    terms = {}
    for I in _multi_indices(n, p):
        c = f.partial(y_sym(I))
        if c:
            terms[BasisElement((), I)] = c
        for a in range(1, n + 1):
            c = f.partial(pi_sym(a, I))
            if c:
                terms[BasisElement((a,), I)] = c
    return AlgebraElement(n, terms)


def nabla_adjoint(g: FieldPoly, p, n) -> AlgebraElement:
    """Adjoint-placed derivative, supported on E(I,[]) and E(I,[a]) keys."""
    _validate(g, p, n, ("y", "pi"))
    terms = {}
    for I in _multi_indices(n, p):
        c = g.partial(y_sym(I))
        if c:
            terms[BasisElement(I, ())] = c
        for a in range(1, n + 1):
            c = g.partial(pi_sym(a, I))
            if c:
                terms[BasisElement(I, (a,))] = c
    return AlgebraElement(n, terms)


# -- frame-map substitutions ---------------------------------------------


def _subst_p_to_pi(f: FieldPoly, lam: FrameMap) -> FieldPoly:
    """Rewrite polymomenta in frame momenta: p[mu][I] -> L^mu_c pi[c][I]."""
    mapping = {}
    n = lam.n
    for s in f.symbols():
        if s.kind == "p":
            mu = s.idx[0]
            repl = FieldPoly.zero()
            for c in range(1, n + 1):
                w = lam.lam[mu - 1][c - 1]
                if w:
                    repl = repl + w * FieldPoly.of(pi_sym(c, s.index))
            mapping[s] = repl
    return f.substitute(mapping) if mapping else f


def _subst_pi_to_p(f: FieldPoly, lam: FrameMap) -> FieldPoly:
    """Rewrite frame momenta back in polymomenta: pi[c][I] -> (L^-1)^c_nu p[nu][I]."""
    mapping = {}
    n = lam.n
    for s in f.symbols():
        if s.kind == "pi":
            c = s.idx[0]
            repl = FieldPoly.zero()
            for nu in range(1, n + 1):
                w = lam.lam_inv[c - 1][nu - 1]
                if w:
                    repl = repl + w * FieldPoly.of(p_sym(nu, s.index))
            mapping[s] = repl
    return f.substitute(mapping) if mapping else f


def _subst_dpi_to_dp(f: FieldPoly, lam: FrameMap) -> FieldPoly:
    """Rewrite derivative symbols: d[mu]pi[c][I] -> (L^-1)^c_nu d[mu]p[nu][I]."""
    mapping = {}
    n = lam.n
    for s in f.symbols():
        if s.kind == "Dpi":
            mu, c = s.idx
            repl = FieldPoly.zero()
            for nu in range(1, n + 1):
                w = lam.lam_inv[c - 1][nu - 1]
                if w:
                    repl = repl + w * FieldPoly.of(dp_sym(mu, nu, s.index))
            mapping[s] = repl
    return f.substitute(mapping) if mapping else f


# -- covariant Hamiltonian field equations --------------------------------


class DwhEquations:
    """Derived field equations for a rank-p Hamiltonian.

    momentum: one equation per multi-index I,
        sum_mu d[mu]p[mu][I]  =  - dH/dy[I];
    field: one equation per (mu, I),
        d[mu]y[I]  =  dH/dp[mu][I].

    Both sides are expressed in y/p symbols, so the set is identical for
    every invertible frame map used in the derivation.
    """

    __slots__ = ("n", "p", "momentum", "field")

    def __init__(self, n, p, momentum, field):
        self.n = n
        self.p = p
        self.momentum = tuple(momentum)
        self.field = tuple(field)

    def equations(self):
        """(label, lhs, rhs) triples in deterministic order."""
        out = []
        for I, lhs, rhs in self.momentum:
            out.append((f"p-div[{','.join(map(str, I))}]", lhs, rhs))
        for (mu, I), lhs, rhs in self.field:
            out.append((f"y-deriv[{mu}][{','.join(map(str, I))}]", lhs, rhs))
        return out

    def lines(self):
        return [f"{label}: {lhs} = {rhs}" for label, lhs, rhs in self.equations()]

    def __eq__(self, other):
        if not isinstance(other, DwhEquations):
            return NotImplemented
        return (
            self.n == other.n
            and self.p == other.p
            and self.momentum == other.momentum
            and self.field == other.field
        )

    def __repr__(self):
        return "\n".join(self.lines())


def dwh_derive(h: FieldPoly, p, lam: FrameMap, n) -> DwhEquations:
    """Derive the covariant Hamiltonian equations for rank-p fields.

    h may be written in y/p symbols (polymomenta are substituted through the
    frame map internally) or directly in y/pi symbols.  The derivation
    equates, key by key, the coefficients of

        beta^mu d_mu Psi_(p)   and   nabla H,

    where Psi_(p) carries formal derivative symbols, and then normalizes
    the resulting equations to y/p symbols so the output does not depend on
    the frame map.
    """
    _validate(h, p, n, ("y", "p", "pi"))
    if lam.n != n:
        raise RankError("frame map dimension must match n")
    ht = _subst_p_to_pi(h, lam)

    # left side: beta^mu acting on the derivative expansion of Psi_(p);
    # coefficient matching against nabla(ht) per basis key
    rhs_el = nabla(ht, p, n)

    momentum = []
    field = []
    for I in _multi_indices(n, p):
        lhs_raw = FieldPoly.zero()
        for mu in range(1, n + 1):
            for c in range(1, n + 1):
                w = lam.lam[mu - 1][c - 1]
                if w:
                    lhs_raw = lhs_raw - w * FieldPoly.of(dpi_sym(mu, c, I))
        rhs_raw = rhs_el.coefficient(BasisElement((), I))
        if isinstance(rhs_raw, Fraction):
            rhs_raw = FieldPoly.const(rhs_raw)
        # normalized: sum_mu d[mu]p[mu][I] = -dH/dy[I]
        lhs = -_subst_dpi_to_dp(lhs_raw, lam)
        rhs = -_subst_pi_to_p(rhs_raw, lam)
        expected = FieldPoly.zero()
        for mu in range(1, n + 1):
            expected = expected + FieldPoly.of(dp_sym(mu, mu, I))
        assert lhs == expected  # frame map cancels in the divergence
        momentum.append((I, lhs, rhs))

        raw_by_c = []
        for c in range(1, n + 1):
            lhs_c = FieldPoly.zero()
            for mu in range(1, n + 1):
                w = lam.lam[mu - 1][c - 1]
                if w:
                    lhs_c = lhs_c + w * FieldPoly.of(dy_sym(mu, I))
            rhs_c = rhs_el.coefficient(BasisElement((c,), I))
            if isinstance(rhs_c, Fraction):
                rhs_c = FieldPoly.const(rhs_c)
            raw_by_c.append((lhs_c, rhs_c))
        # invert the frame map across the family: one equation per mu
        for nu in range(1, n + 1):
            lhs_nu = FieldPoly.zero()
            rhs_nu = FieldPoly.zero()
            for c in range(1, n + 1):
                w = lam.lam_inv[c - 1][nu - 1]
                if w:
                    lhs_nu = lhs_nu + w * raw_by_c[c - 1][0]
                    rhs_nu = rhs_nu + w * raw_by_c[c - 1][1]
            assert lhs_nu == FieldPoly.of(dy_sym(nu, I))
            field.append(((nu, I), lhs_nu, _subst_pi_to_p(rhs_nu, lam)))
    return DwhEquations(n, p, momentum, field)


# -- bracket ---------------------------------------------------------------


def bracket(g: FieldPoly, f: FieldPoly, mu, p, lam: FrameMap, n) -> FieldPoly:
    """Bracket of two rank-p observables in y/p symbols.

    Vacuum coefficient of contract((nabla_adjoint g') beta_mu (nabla f'), p)
    with g', f' rewritten in frame momenta; the result is rewritten back in
    polymomenta.  No 1/p! weight appears: the canonical-multi-index sums in
    the derivative operators absorb it.
    """
    _validate(g, p, n, ("y", "p"))
    _validate(f, p, n, ("y", "p"))
    gt = _subst_p_to_pi(g, lam)
    ft = _subst_p_to_pi(f, lam)
    left = nabla_adjoint(gt, p, n)
    right = nabla(ft, p, n)
    beta = beta_mu(lam, mu, "lower_neg", n)
    prod = left * beta * right
    c = contract(prod, p).coefficient(BasisElement((), ()))
    if isinstance(c, Fraction):
        c = FieldPoly.const(c)
    return _subst_pi_to_p(c, lam)


def bracket_closed_form(g: FieldPoly, f: FieldPoly, mu, p, n) -> FieldPoly:
    """sum_I ( dg/dy[I] df/dp[mu][I] - df/dy[I] dg/dp[mu][I] )."""
    _validate(g, p, n, ("y", "p"))
    _validate(f, p, n, ("y", "p"))
    out = FieldPoly.zero()
    for I in _multi_indices(n, p):
        ys = y_sym(I)
        ps = p_sym(mu, I)
        out = out + g.partial(ys) * f.partial(ps) - f.partial(ys) * g.partial(ps)
    return out


def _route(route):
    if route == "word":
        return lambda g, f, mu, p, lam, n: bracket(g, f, mu, p, lam, n)
    if route == "closed":
        return lambda g, f, mu, p, lam, n: bracket_closed_form(g, f, mu, p, n)
    raise ValueError(f"unknown bracket route {route!r}")


def check_leibniz(g, f, k, mu, p, lam, n, route="word"):
    """Residual {g*f, k} - f*{g, k} - g*{f, k}; zero iff the rule holds."""
    br = _route(route)
    return (
        br(g * f, k, mu, p, lam, n)
        - f * br(g, k, mu, p, lam, n)
        - g * br(f, k, mu, p, lam, n)
    )


def check_jacobi_sym(g, f, k, mu, nu, p, lam, n, route="word"):
    """Symmetrized double-bracket cyclic residual.

    (1/2) [ {{g,f}_mu, k}_nu + {{g,f}_nu, k}_mu ]  +  cyclic(g, f, k);
    the zero polynomial iff the generalized Jacobi identity holds.
    """
    br = _route(route)
    half = Fraction(1, 2)
    out = FieldPoly.zero()
    for x, y, z in ((g, f, k), (f, k, g), (k, g, f)):
        inner_mu = br(x, y, mu, p, lam, n)
        inner_nu = br(x, y, nu, p, lam, n)
        out = out + half * (
            br(inner_mu, z, nu, p, lam, n) + br(inner_nu, z, mu, p, lam, n)
        )
    return out
