"""Shared helpers: bundled fixture bases, golden files, random basis changes."""

from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from qweier.ingest import load_basis
from qweier.qseries import QSeries
from qweier.weierstrass import CuspBasis

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "goldens"

FIXTURE_LEVELS = (34, 35, 37, 38, 44, 54, 55, 60)


def fixture_path(level):
    return FIXTURE_DIR / ("g0n%d_s2.qexp" % level)


@lru_cache(maxsize=None)
def load_fixture(level):
    """The bundled weight-2 cusp basis for Gamma_0(level)."""
    return load_basis(fixture_path(level))


def random_basis_change(basis, rng):
    """A new basis related to the input by a random invertible integer
    matrix (a product of elementary row operations, then a shuffle)."""
    g = basis.genus
    mat = [[Fraction(1 if i == j else 0) for j in range(g)] for i in range(g)]
    for _ in range(3 * g):
        i, j = rng.randrange(g), rng.randrange(g)
        if i != j:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(g):
                mat[i][k] += c * mat[j][k]
    rng.shuffle(mat)
    series = basis.series_list()
    new = []
    for row in mat:
        acc = QSeries.zero(basis.prec)
        for c, s in zip(row, series):
            if c:
                acc = acc + s.scaled(c)
        new.append(acc)
    return CuspBasis.from_series(basis.level_label, new)
