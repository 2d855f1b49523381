"""Exact rational matrix helpers (small n only)."""

from fractions import Fraction


class SingularMatrixError(ValueError):
    """Matrix has no exact inverse."""


def as_matrix(rows):
    """Normalize to a tuple-of-tuples of Fractions; rejects floats."""
    out = []
    for row in rows:
        frow = []
        for x in row:
            if isinstance(x, float):
                raise TypeError("float entries are not allowed; use Fraction or int")
            frow.append(Fraction(x))
        out.append(tuple(frow))
    if any(len(r) != len(out) for r in out):
        raise ValueError("matrix must be square")
    return tuple(out)


def identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def invert(m):
    """Gauss-Jordan inverse over Fractions.

    Raises SingularMatrixError if the matrix is not invertible.
    """
    n = len(m)
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def transpose(m):
    return tuple(tuple(row[j] for row in m) for j in range(len(m)))


def is_symmetric(m):
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))
