"""Named identity-check suites with seeded randomness.

Every suite returns a list of Check groups; each group counts individual
exact comparisons.  All randomness flows from one random.Random instance,
so a fixed seed reproduces the identical report byte for byte.
"""

import random
from fractions import Fraction
from itertools import combinations, product

from . import algebra as al
from . import dkp, fock, subspaces
from . import fields as fl
from ._linalg import identity as ident_rows
from ._linalg import invert, mat_mul

SUITE_NAMES = ("core", "dkp", "subspaces", "bracket")


class Check:
    """One named group of exact checks."""

    __slots__ = ("name", "run", "failed", "first_failure")

    def __init__(self, name):
        self.name = name
        self.run = 0
        self.failed = 0
        self.first_failure = ""

    def ok(self, cond, note=""):
        self.run += 1
        if not cond:
            self.failed += 1
            if not self.first_failure:
                self.first_failure = note() if callable(note) else note

    @property
    def passed(self):
        return self.failed == 0

    @property
    def detail(self):
        base = f"{self.run} checks"
        if self.failed:
            base += f", {self.failed} failed"
            if self.first_failure:
                base += f" (first: {self.first_failure})"
        return base


# -- random generators -----------------------------------------------------


def rand_fraction(rng, lo=-4, hi=4, den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_element(n, rng, nterms=4):
    bes = al.basis_elements(n)
    terms = {}
    for _ in range(nterms):
        terms[rng.choice(bes)] = rand_fraction(rng)
    return al.AlgebraElement(n, terms)


def rand_metric(n, rng):
    while True:
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rand_fraction(rng, -3, 3, 2)
        try:
            return al.Metric(rows)
        except (al.SingularMatrixError, ValueError):
            continue


def rand_frame(n, rng):
    while True:
        try:
            return dkp.FrameMap(
                [[rand_fraction(rng, -3, 3, 2) for _ in range(n)] for _ in range(n)]
            )
        except al.SingularMatrixError:
            continue


def rand_orthogonal_frame(n, rng):
    """Random rational orthogonal matrix: Cayley transform of antisymmetric A."""
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a[i][j] = rand_fraction(rng, -2, 2, 3)
            a[j][i] = -a[i][j]
    eye = ident_rows(n)
    plus = [[eye[i][j] + a[i][j] for j in range(n)] for i in range(n)]
    minus = [[eye[i][j] - a[i][j] for j in range(n)] for i in range(n)]
    return dkp.FrameMap(mat_mul(minus, invert(plus)))


def rand_vector(n, rng):
    return tuple(rand_fraction(rng, -3, 3, 2) for _ in range(n))


def rand_zp_element(n, p, rng):
    terms = {}
    for be in subspaces.zp_basis(n, p):
        if rng.random() < 0.6:
            c = rand_fraction(rng)
            if c:
                terms[be] = c
    return al.AlgebraElement(n, terms)


def rand_field_poly(n, p, rng, nterms=3, deg=2):
    syms = []
    for I in combinations(range(1, n + 1), p):
        syms.append(fl.y_sym(I))
        for mu in range(1, n + 1):
            syms.append(fl.p_sym(mu, I))
    out = fl.FieldPoly.zero()
    for _ in range(nterms):
        mono = fl.FieldPoly.const(rand_fraction(rng))
        for _ in range(rng.randint(0, deg)):
            mono = mono * fl.FieldPoly.of(rng.choice(syms))
        out = out + mono
    return out


def _basis_vectors(n):
    return [tuple(Fraction(int(k == i)) for k in range(1, n + 1)) for i in range(1, n + 1)]


# -- core suite --------------------------------------------------------------


def suite_core(n, rng, metric=None):
    checks = []

    c = Check("core/canonicalization")
    c.ok(al.canonicalize((2, 1), 3) == (-1, (1, 2)))
    c.ok(al.canonicalize((1, 1), 3) == (0, ()))
    c.ok(al.canonicalize((3, 1, 2), 3) == (1, (1, 2, 3)))
    c.ok(al.gen_delta((1, 2), (1, 2)) == 1)
    c.ok(al.gen_delta((2, 1), (1, 2)) == -1)
    c.ok(al.gen_delta((1, 3), (1, 2)) == 0)
    checks.append(c)

    c = Check("core/basis count")
    c.ok(len(al.basis_elements(n)) == 4**n)
    checks.append(c)

    vs = [al.embed_vector(v, n) for v in _basis_vectors(n)]
    cs = [al.embed_covector(a, n) for a in _basis_vectors(n)]
    u = al.unit(n)

    c = Check("core/clifford relations")
    for i in range(n):
        for j in range(n):
            c.ok((vs[i] * vs[j] + vs[j] * vs[i]).is_zero, f"vv {i + 1},{j + 1}")
            c.ok((cs[i] * cs[j] + cs[j] * cs[i]).is_zero, f"cc {i + 1},{j + 1}")
            want = u if i == j else al.zero(n)
            c.ok(vs[i] * cs[j] + cs[j] * vs[i] == want, f"vc {i + 1},{j + 1}")
    checks.append(c)

    c = Check("core/zero divisors of the idempotent")
    pp = al.projector_p(n)
    for _ in range(25):
        c.ok((al.embed_vector(rand_vector(n, rng), n) * pp).is_zero)
        c.ok((pp * al.embed_covector(rand_vector(n, rng), n)).is_zero)
    checks.append(c)

    c = Check("core/associativity")
    for _ in range(200):
        x, y, z = (rand_element(n, rng) for _ in range(3))
        c.ok((x * y) * z == x * (y * z), lambda: f"residual {(x * y) * z - x * (y * z)}")
    checks.append(c)

    c = Check("core/projector algebra")
    pis = [al.projector_pi(p, n) for p in range(n + 1)]
    total = al.zero(n)
    for p, pi_p in enumerate(pis):
        total = total + pi_p
        c.ok(pi_p * pi_p == pi_p, f"idempotent p={p}")
        for q, pi_q in enumerate(pis):
            if p != q:
                c.ok((pi_p * pi_q).is_zero, f"orthogonal {p},{q}")
    c.ok(total == u, "sum is unit")

    def pi_or_zero(p):
        return pis[p] if 0 <= p <= n else al.zero(n)

    for _ in range(10):
        a = al.embed_covector(rand_vector(n, rng), n)
        v = al.embed_vector(rand_vector(n, rng), n)
        for p in range(-1, n + 2):
            c.ok(a * pi_or_zero(p) == pi_or_zero(p + 1) * a, f"slide cov p={p}")
            c.ok(pi_or_zero(p) * v == v * pi_or_zero(p + 1), f"slide vec p={p}")
    imgs = {
        t
        for be in al.basis_elements(n)
        for t in (al.single(n, be.upper, be.lower) * pp,)
        if not t.is_zero
    }
    c.ok(len(imgs) == 2**n, "left ideal size")
    c.ok(all(next(iter(t.support())).lower == () for t in imgs), "left ideal support")
    checks.append(c)

    if n <= 3:
        c = Check("core/representation oracle")
        bes = al.basis_elements(n)
        singles = {be: al.single(n, be.upper, be.lower) for be in bes}
        reps = {be: fock.represent(singles[be]) for be in bes}
        c.ok(len(set(reps.values())) == len(bes), "faithful on basis")
        for b1 in bes:
            r1 = reps[b1]
            for b2 in bes:
                c.ok(fock.represent(singles[b1] * singles[b2]) == r1 @ reps[b2])
        for _ in range(50):
            x, y = rand_element(n, rng), rand_element(n, rng)
            c.ok(fock.represent(x * y) == fock.represent(x) @ fock.represent(y))
        c.ok(fock.represent(u) == fock.DenseOperator.identity(n), "unit is identity")
        pvac = fock.represent(pp)
        c.ok(
            pvac.rows[0][0] == 1
            and sum(1 for row in pvac.rows for x in row if x) == 1,
            "vacuum projector",
        )
        checks.append(c)

    c = Check("core/adjunction")
    g = metric if metric is not None else rand_metric(n, rng)
    for _ in range(25):
        x, y = rand_element(n, rng), rand_element(n, rng)
        c.ok(al.adjoint(al.adjoint(x, g), g) == x, "involution")
        c.ok(al.adjoint(x * y, g) == al.adjoint(y, g) * al.adjoint(x, g), "antihom")
    if n <= 3:
        delta = al.Metric.euclidean(n)
        for _ in range(10):
            x = rand_element(n, rng)
            c.ok(
                fock.represent(al.adjoint(x, delta)) == fock.represent(x).transpose(),
                "transpose oracle",
            )
    checks.append(c)

    c = Check("core/contraction")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            want = al.projector_p(n) if i == j else al.zero(n)
            c.ok(al.contract(al.single(n, (i,), (j,)), 1) == want)
    if n >= 2:
        for k, t, a, b in product(range(1, n + 1), repeat=4):
            w = al.basis_word(n, (k, t), (a, b))
            got = al.contract(w, 2) if not w.is_zero else al.zero(n)
            c.ok(got == al.gen_delta((k, t), (b, a)) * al.projector_p(n), f"{k}{t}|{a}{b}")
    checks.append(c)

    c = Check("core/embedding goldens")
    c.ok(al.embed_vector((1,), 1) == al.single(1, (), (1,)))
    c.ok(al.embed_covector((1,), 1) == al.single(1, (1,), ()))
    if n >= 2:
        want = al.single(2, (), (1,)) + al.single(2, (2,), (1, 2))
        c.ok(al.embed_vector((1, 0), 2) == want, "e_1 at n=2")
        want = al.single(2, (1,), ()) + al.single(2, (1, 2), (2,))
        c.ok(al.embed_covector((1, 0), 2) == want, "e^1 at n=2")
    checks.append(c)
    return checks


# -- dkp suite ---------------------------------------------------------------


def suite_dkp(n, rng, metric=None):
    checks = []
    basis_cov = _basis_vectors(n)

    def argset(family):
        if family in ("b_upper", "b_upper_neg", "b_lower_neg"):
            return basis_cov
        return list(range(1, n + 1))

    c = Check("dkp/trilinear relations")
    metrics = [al.Metric.euclidean(n)]
    if metric is not None:
        metrics.append(metric)
    metrics += [rand_metric(n, rng) for _ in range(3)]
    for g in metrics:
        for family in dkp.FAMILIES:
            args = argset(family)
            for trip in product(args, repeat=3):
                r = dkp.check_trilinear(family, trip, g)
                c.ok(r.is_zero, lambda: f"{family} residual {r}")
    checks.append(c)

    c = Check("dkp/unit")
    un = dkp.dkp_unit(n)
    g = al.Metric.euclidean(n)
    c.ok(un * un == un, "idempotent")
    for i in range(1, n + 1):
        b = dkp.make_generator("beta_lower", i, g)
        c.ok(un * b == b and b * un == b, f"identity on beta_{i}")
        bu = dkp.make_generator("b_upper_neg", basis_cov[i - 1], g)
        c.ok(un * bu == bu, f"identity on b^{i}")
    checks.append(c)

    c = Check("dkp/sign flip duality")
    g = rand_metric(n, rng)
    ng = al.Metric([[-x for x in row] for row in g.g])
    for i, a in enumerate(basis_cov, start=1):
        c.ok(dkp.make_generator("b_upper", a, ng) == dkp.make_generator("b_upper_neg", a, g))
        c.ok(
            dkp.make_generator("beta_lower", i, ng)
            == dkp.make_generator("beta_lower_neg", i, g)
        )
    for trip in product(range(1, n + 1), repeat=3):
        args = tuple(basis_cov[i - 1] for i in trip)
        c.ok(dkp.check_trilinear("b_upper", args, ng) == dkp.check_trilinear("b_upper_neg", args, g))
        c.ok(dkp.check_trilinear("beta_lower", trip, ng) == dkp.check_trilinear("beta_lower_neg", trip, g))
    checks.append(c)

    m = min(n, 3)
    c = Check("dkp/frame relation, orthonormal frames")
    frames = [dkp.FrameMap.identity(m)] + [rand_orthogonal_frame(m, rng) for _ in range(5)]
    for lam in frames:
        for mu, nu, ga in product(range(1, m + 1), repeat=3):
            c.ok(dkp.ndkc_residual(lam, mu, nu, ga).is_zero)
    checks.append(c)

    c = Check("dkp/frame relation, generic frames (induced metric)")
    for _ in range(5):
        lam = rand_frame(m, rng)
        for mu, nu, ga in product(range(1, m + 1), repeat=3):
            c.ok(dkp.ndkc_induced_residual(lam, mu, nu, ga).is_zero)
    if m >= 2:
        shear_rows = [[Fraction(int(i == j or (i == 0 and j == 1))) for j in range(m)] for i in range(m)]
        shear = dkp.FrameMap(shear_rows)
        # the plain delta form is NOT frame-covariant: pin the counterexample
        c.ok(not dkp.ndkc_residual(shear, 1, 1, 1).is_zero, "delta form must fail for a shear")
    checks.append(c)
    return checks


# -- subspaces suite ---------------------------------------------------------


def suite_subspaces(n, rng):
    checks = []

    c = Check("subspaces/dimension formula")
    for m in range(1, 7):
        for p in range(m + 1):
            c.ok(subspaces.dim_zp(m, p) == len(subspaces.zp_basis(m, p)), f"n={m} p={p}")
    checks.append(c)

    c = Check("subspaces/closure under the covector family")
    g = rand_metric(n, rng)
    for p in range(n + 1):
        for _ in range(25):
            alpha = rand_vector(n, rng)
            z = rand_zp_element(n, p, rng)
            gen = dkp.make_generator("b_upper_neg", alpha, g)
            out = subspaces.act_dkp(gen, z, p)
            c.ok(subspaces.in_zp(out, n, p))
    checks.append(c)

    c = Check("subspaces/action formula")
    for p in range(n + 1):
        for _ in range(10):
            alpha = rand_vector(n, rng)
            gamma = rand_vector(n, rng)
            members = sorted(rng.sample(range(1, n + 1), p))
            p_i = al.basis_word(n, (), tuple(members))
            z = p_i + al.embed_covector(gamma, n) * p_i
            gen = dkp.make_generator("b_upper_neg", alpha, g)
            want = al.embed_covector(alpha, n) * p_i - g.pair_inv(alpha, gamma) * p_i
            c.ok(subspaces.act_dkp(gen, z, p) == want)
    checks.append(c)

    c = Check("subspaces/unit acts as identity")
    un = dkp.dkp_unit(n)
    for p in range(n + 1):
        for _ in range(10):
            z = rand_zp_element(n, p, rng)
            c.ok(un * z == z)
    checks.append(c)
    return checks


# -- bracket suite -------------------------------------------------------------


def suite_bracket(n, rng, lam=None):
    checks = []
    m = min(n, 3)
    ranks = range(0, min(m, 2) + 1)

    def frames():
        base = [dkp.FrameMap.identity(m)]
        if lam is not None and lam.n == m:
            base.append(lam)
        base.append(rand_frame(m, rng))
        return base

    c = Check("bracket/word route equals closed form")
    for p in ranks:
        for _ in range(25):
            fr = rand_frame(m, rng)
            g1 = rand_field_poly(m, p, rng)
            f1 = rand_field_poly(m, p, rng)
            mu = rng.randint(1, m)
            c.ok(
                fl.bracket(g1, f1, mu, p, fr, m)
                == fl.bracket_closed_form(g1, f1, mu, p, m)
            )
    checks.append(c)

    c = Check("bracket/canonical pairs")
    for p in ranks:
        for fr in frames():
            for I in combinations(range(1, m + 1), p):
                for J in combinations(range(1, m + 1), p):
                    for mu in range(1, m + 1):
                        got = fl.bracket(
                            fl.FieldPoly.of(fl.y_sym(I)),
                            fl.FieldPoly.of(fl.p_sym(mu, J)),
                            mu, p, fr, m,
                        )
                        c.ok(got == (1 if I == J else 0))
                        c.ok(
                            fl.bracket(
                                fl.FieldPoly.of(fl.y_sym(I)),
                                fl.FieldPoly.of(fl.y_sym(J)),
                                mu, p, fr, m,
                            )
                            == 0
                        )
    checks.append(c)

    c = Check("bracket/antisymmetry")
    for p in ranks:
        for _ in range(25):
            fr = rand_frame(m, rng)
            g1, f1 = rand_field_poly(m, p, rng), rand_field_poly(m, p, rng)
            mu = rng.randint(1, m)
            c.ok(fl.bracket(g1, f1, mu, p, fr, m) + fl.bracket(f1, g1, mu, p, fr, m) == 0)
    checks.append(c)

    c = Check("bracket/leibniz rule")
    for p in ranks:
        for _ in range(10):
            fr = rand_frame(m, rng)
            g1, f1, k1 = (rand_field_poly(m, p, rng) for _ in range(3))
            c.ok(fl.check_leibniz(g1, f1, k1, rng.randint(1, m), p, fr, m) == 0)
    checks.append(c)

    c = Check("bracket/symmetrized jacobi identity")
    for p in ranks:
        for fr in frames():
            for _ in range(5):
                g1, f1, k1 = (rand_field_poly(m, p, rng, deg=2) for _ in range(3))
                mu, nu = rng.randint(1, m), rng.randint(1, m)
                c.ok(fl.check_jacobi_sym(g1, f1, k1, mu, nu, p, fr, m) == 0)
    checks.append(c)

    c = Check("bracket/field equations frame invariance")
    for p in ranks:
        h = rand_field_poly(m, p, rng, nterms=4, deg=2)
        base = fl.dwh_derive(h, p, dkp.FrameMap.identity(m), m)
        for _ in range(3):
            c.ok(fl.dwh_derive(h, p, rand_frame(m, rng), m) == base)
        for I, _lhs, rhs in base.momentum:
            c.ok(rhs == -h.partial(fl.y_sym(I)), "momentum rhs")
        for (mu, I), _lhs, rhs in base.field:
            c.ok(rhs == h.partial(fl.p_sym(mu, I)), "field rhs")
    checks.append(c)
    return checks


def run_suites(names, n, seed, metric=None, lam=None):
    """Run the given suites with one seeded generator; deterministic order."""
    rng = random.Random(seed)
    out = []
    for name in names:
        if name == "core":
            out.extend(suite_core(n, rng, metric))
        elif name == "dkp":
            out.extend(suite_dkp(n, rng, metric))
        elif name == "subspaces":
            out.extend(suite_subspaces(n, rng))
        elif name == "bracket":
            out.extend(suite_bracket(n, rng, lam))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out
