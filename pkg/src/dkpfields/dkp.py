"""DKP generator families inside the split-form Clifford algebra.

A metric g on the vector side turns pairs of projected words into DKP
generators.  Five constructions are supported, tagged by family name:

    b_upper        b^a   = (^a P) + (P_{sharp a})
    b_upper_neg    b_^a  = (^a P) - (P_{sharp a})
    b_lower_neg    b__v  = (P_v) - (^{flat v} P)
    beta_lower     B_i   = (P_i) + (^{flat e_i} P)
    beta_lower_neg B__i  = (P_i) - g_ij (^j P)

Each family satisfies a trilinear relation

    x1 x2 x3 + x3 x2 x1 = s * (w(1,2) x3 + w(3,2) x1)

with s = +1 for the plain families and -1 for the underscored ones, and
w the inverse metric for covector arguments or the metric for vector
arguments.  check_trilinear returns the left-minus-right residual, which
is exactly zero when the relation holds.

Frame-mapped operators contract the Euclidean-metric families with an
invertible matrix L:  beta_mu('upper_neg') = L^mu_a b_^a and
beta_mu('lower_neg') = (L^-1)^a_mu b__a.  The delta-form triple relation

    B^mu B^nu B^ga + B^ga B^nu B^mu = -delta^{mu nu} B^ga - delta^{ga nu} B^mu

is *not* frame-covariant: contracting the trilinear relation with L turns
delta^{mu nu} into (L L^T)^{mu nu}, so the delta form survives exactly when
L has orthonormal rows.  ndkc_residual checks the delta form literally;
ndkc_induced_residual checks the transformed relation, which holds for
every invertible L and reduces to the delta form when L L^T = 1.
"""

from fractions import Fraction

from ._linalg import as_matrix, identity, invert, mat_mul, transpose
from .algebra import (
    IndexRangeError,
    Metric,
    embed_covector,
    embed_vector,
    projector_p,
    projector_pi,
    zero,
)

FAMILIES = ("b_upper", "b_upper_neg", "b_lower_neg", "beta_lower", "beta_lower_neg")

_COVECTOR_FAMILIES = ("b_upper", "b_upper_neg")


class FrameMap:
    """Invertible square frame matrix with exact cached inverse."""

    __slots__ = ("n", "lam", "lam_inv")

    def __init__(self, rows):
        self.lam = as_matrix(rows)
        self.n = len(self.lam)
        self.lam_inv = invert(self.lam)

    @classmethod
    def identity(cls, n):
        return cls(identity(n))

    def is_orthogonal(self):
        return mat_mul(self.lam, transpose(self.lam)) == identity(self.n)

    def __eq__(self, other):
        return isinstance(other, FrameMap) and self.lam == other.lam

    def __repr__(self):
        return f"FrameMap({[list(r) for r in self.lam]})"


def _basis_tuple(i, n):
    return tuple(Fraction(int(k == i)) for k in range(1, n + 1))


def _p_right(v, n):
    """(P_v) = (P) (v)."""
    return projector_p(n) * embed_vector(v, n)


def _p_left(a, n):
    """(^a P) = (a) (P)."""
    return embed_covector(a, n) * projector_p(n)


def make_generator(family, arg, g: Metric):
    """Build one DKP generator.

    The b-families take component tuples (covector for the upper families,
    vector for b_lower_neg); the beta families take a basis index 1..n.
    """
    n = g.n
    if family == "b_upper":
        return _p_left(arg, n) + _p_right(g.sharp(arg), n)
    if family == "b_upper_neg":
        return _p_left(arg, n) - _p_right(g.sharp(arg), n)
    if family == "b_lower_neg":
        return _p_right(arg, n) - _p_left(g.flat(arg), n)
    if family == "beta_lower":
        v = _basis_tuple(arg, n)
        return _p_right(v, n) + _p_left(g.flat(v), n)
    if family == "beta_lower_neg":
        v = _basis_tuple(arg, n)
        return _p_right(v, n) - _p_left(g.flat(v), n)
    raise ValueError(f"unknown family {family!r}")


def _pairing(family, x, y, g: Metric):
    if family in _COVECTOR_FAMILIES:
        return g.pair_inv(x, y)
    if family == "b_lower_neg":
        return g.pair(x, y)
    # beta families take indices
    return g.g[x - 1][y - 1]


def _family_sign(family):
    return 1 if family in ("b_upper", "beta_lower") else -1


def dkp_unit(n):
    """Idempotent identity of the DKP subalgebra: (P) + grade-1 projector."""
    return projector_p(n) + projector_pi(1, n)


def check_trilinear(family, args, g: Metric):
    """Residual L - R of the family's trilinear relation; zero iff it holds."""
    x1, x2, x3 = args
    b1 = make_generator(family, x1, g)
    b2 = make_generator(family, x2, g)
    b3 = make_generator(family, x3, g)
    lhs = b1 * b2 * b3 + b3 * b2 * b1
    s = _family_sign(family)
    rhs = (s * _pairing(family, x1, x2, g)) * b3 + (s * _pairing(family, x3, x2, g)) * b1
    return lhs - rhs


def beta_mu(lam: FrameMap, mu, variant, n=None):
    """Frame-mapped operator for spacetime index mu.

    'upper_neg' contracts b_^a with the frame matrix, 'lower_neg' contracts
    b__a with its inverse.  Both are built over the Euclidean metric.
    """
    n = lam.n if n is None else n
    if n != lam.n:
        raise IndexRangeError("frame map dimension must match n")
    if not 1 <= mu <= n:
        raise IndexRangeError(f"index {mu} outside 1..{n}")
    g = Metric.euclidean(n)
    out = zero(n)
    if variant == "upper_neg":
        for a in range(1, n + 1):
            w = lam.lam[mu - 1][a - 1]
            if w:
                out = out + w * make_generator("b_upper_neg", _basis_tuple(a, n), g)
        return out
    if variant == "lower_neg":
        for a in range(1, n + 1):
            w = lam.lam_inv[a - 1][mu - 1]
            if w:
                out = out + w * make_generator("b_lower_neg", _basis_tuple(a, n), g)
        return out
    raise ValueError(f"unknown variant {variant!r}")


def _triple(x, y, z):
    return x * y * z + z * y * x


def ndkc_residual(lam: FrameMap, mu, nu, gamma):
    """Residual of the literal delta-form triple relation for beta^mu.

    Exactly zero for every (mu, nu, gamma) iff the frame map has orthonormal
    rows; see module docstring.
    """
    bs = {m: beta_mu(lam, m, "upper_neg") for m in {mu, nu, gamma}}
    lhs = _triple(bs[mu], bs[nu], bs[gamma])
    d_mn = Fraction(int(mu == nu))
    d_gn = Fraction(int(gamma == nu))
    rhs = (-d_mn) * bs[gamma] + (-d_gn) * bs[mu]
    return lhs - rhs


def ndkc_induced_residual(lam: FrameMap, mu, nu, gamma):
    """Residual of the frame-transformed triple relation for beta^mu.

    The delta of the Euclidean relation transforms into L L^T, so

        B^mu B^nu B^ga + B^ga B^nu B^mu
            = -(L L^T)^{mu nu} B^ga - (L L^T)^{ga nu} B^mu

    holds exactly for every invertible frame map.
    """
    gram = mat_mul(lam.lam, transpose(lam.lam))
    bs = {m: beta_mu(lam, m, "upper_neg") for m in {mu, nu, gamma}}
    lhs = _triple(bs[mu], bs[nu], bs[gamma])
    rhs = (-gram[mu - 1][nu - 1]) * bs[gamma] + (-gram[gamma - 1][nu - 1]) * bs[mu]
    return lhs - rhs
