"""Spectral sequence of the vertex-weight filtration, over exact rationals.

The filtration U_l^k is the span of the k-simplices carrying at least l
weighted vertices; it is coordinate-aligned, so subspaces are index sets.
Page entries are computed from their Z/B description

    Z_{j,l}^k = U_l^k  intersect  (d^k)^{-1}(U_{l+j}^{k+1})
    B_{j,l}^k = U_l^k  intersect  d^{k-1}(U_{l-j}^{k-1})
    e_{j,l}^k = Z_{j,l}^k / (B_{j-1,l}^k + Z_{j-1,l+1}^k)

with all ranks and kernels over Q at lam := 1; the lambda-grading is carried
entirely by the filtration index.  The Forman comparison checks the page
dimensions against numeric eigenvalue-decay classes from spectra.sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import rational
from .complexes import CliqueComplex
from .errors import DimensionError, HomologyLabError
from .homology import betti
from .operators import coboundary
from .spectra import DEFAULT_GRID, BranchTable, sweep

FracVec = dict[int, Fraction]


class Filtration:
    """Index-set filtration of a built clique complex by weight exponent."""

    def __init__(self, K: CliqueComplex):
        if not K.complete:
            raise DimensionError("filtration requires the complex built through its top")
        self.K = K
        self.kmax = K.max_dim
        self.exponents: dict[int, list[int]] = {}
        self.lmax: dict[int, int] = {}
        for k in range(-1, self.kmax + 1):
            exps = [K.weight_exponent(s) for s in K.simplices(k)]
            self.exponents[k] = exps
            self.lmax[k] = max(exps, default=-1)
        self._d_cols: dict[int, dict[int, FracVec]] = {}
        self._check_compatibility()

    def _d_by_col(self, k: int) -> dict[int, FracVec]:
        """d^k at lam := 1 as {col: {row: value}}; zero map above the top."""
        if k in self._d_cols:
            return self._d_cols[k]
        if k >= self.kmax or k < -1:
            cols: dict[int, FracVec] = {}
        else:
            cols = {}
            for (r, c), v in coboundary(self.K, k).evaluate_exact(Fraction(1)).items():
                cols.setdefault(c, {})[r] = v
        self._d_cols[k] = cols
        return cols

    def level(self, k: int, l: int) -> frozenset[int]:
        """Index set of U_l^k; full space for l <= 0, empty above lmax."""
        if k < -1 or k > self.kmax:
            return frozenset()
        exps = self.exponents[k]
        if l <= 0:
            return frozenset(range(len(exps)))
        return frozenset(i for i, e in enumerate(exps) if e >= l)

    def _check_compatibility(self) -> None:
        for k in range(-1, self.kmax):
            exps_hi = self.exponents[k + 1]
            exps_lo = self.exponents[k]
            for c, col in self._d_by_col(k).items():
                for r in col:
                    if exps_hi[r] < exps_lo[c]:
                        raise HomologyLabError(
                            "filtration is not d-compatible (implementation bug)"
                        )

    # -- subspace machinery ------------------------------------------------

    def z_basis(self, k: int, l: int, j: int) -> list[FracVec]:
        """Basis of Z_{j,l}^k as sparse vectors in C^k coordinates."""
        cols = self.level(k, l)
        if not cols:
            return []
        forbidden = self._forbidden_rows(k, l + j)
        rows: dict[int, FracVec] = {}
        d_cols = self._d_by_col(k)
        for c in cols:
            for r, v in d_cols.get(c, {}).items():
                if r in forbidden:
                    rows.setdefault(r, {})[c] = v
        return rational.nullspace(rows.values(), self.K.dim_size(k), cols=sorted(cols))

    def _forbidden_rows(self, k: int, l: int) -> frozenset[int]:
        """Rows of C^{k+1} outside U_l^{k+1}."""
        if k + 1 > self.kmax:
            return frozenset()
        allowed = self.level(k + 1, l)
        return frozenset(range(self.K.dim_size(k + 1))) - allowed

    def b_vectors(self, k: int, l: int, j: int) -> list[FracVec]:
        """Spanning vectors of B_{j,l}^k (not necessarily independent)."""
        src = self.level(k - 1, l - j)
        if not src or self.K.dim_size(k) == 0:
            return []
        d_cols = self._d_by_col(k - 1)
        forbidden = frozenset(range(self.K.dim_size(k))) - self.level(k, l)
        rows: dict[int, FracVec] = {}
        for c in src:
            for r, v in d_cols.get(c, {}).items():
                if r in forbidden:
                    rows.setdefault(r, {})[c] = v
        kernel = rational.nullspace(rows.values(), self.K.dim_size(k - 1), cols=sorted(src))
        out: list[FracVec] = []
        for w in kernel:
            img: FracVec = {}
            for c, coef in w.items():
                for r, v in d_cols.get(c, {}).items():
                    acc = img.get(r, Fraction(0)) + coef * v
                    if acc:
                        img[r] = acc
                    elif r in img:
                        del img[r]
            if img:
                out.append(img)
        return out

    def _assert_in_z(self, vecs: list[FracVec], k: int, l: int, j: int) -> None:
        cols = self.level(k, l)
        forbidden = self._forbidden_rows(k, l + j)
        d_cols = self._d_by_col(k)
        for v in vecs:
            if any(c not in cols for c in v):
                raise HomologyLabError("containment violated: support outside U_l")
            img: FracVec = {}
            for c, coef in v.items():
                for r, x in d_cols.get(c, {}).items():
                    if r in forbidden:
                        acc = img.get(r, Fraction(0)) + coef * x
                        if acc:
                            img[r] = acc
                        elif r in img:
                            del img[r]
            if img:
                raise HomologyLabError("containment violated: image escapes U_{l+j}")

    def e_dim(self, k: int, l: int, j: int) -> int:
        z = self.z_basis(k, l, j)
        if not z:
            return 0
        b = self.b_vectors(k, l, j - 1)
        zp = self.z_basis(k, l + 1, j - 1)
        self._assert_in_z(b + zp, k, l, j)
        denom_rank = rational.rank_fraction(b + zp, self.K.dim_size(k))
        return len(z) - denom_rank


def filtration(K: CliqueComplex) -> Filtration:
    return Filtration(K)


@dataclass(frozen=True)
class Page:
    j: int
    dims: dict[tuple[int, int], int]  # (k, l) -> dim e_{j,l}^k

    def nonzero(self) -> list[tuple[int, int, int]]:
        return sorted((k, l, d) for (k, l), d in self.dims.items() if d)

    def total(self, k: int) -> int:
        return sum(d for (kk, _l), d in self.dims.items() if kk == k)

    def table_lines(self) -> list[str]:
        lines = [f"page {self.j}  (rows k, cols l; nonzero dims)"]
        ks = sorted({k for k, _ in self.dims})
        ls = sorted({l for _, l in self.dims})
        header = "k\\l " + " ".join(f"{l:>4}" for l in ls)
        lines.append(header)
        for k in reversed(ks):
            row = [f"{self.dims.get((k, l), 0):>4}" for l in ls]
            lines.append(f"{k:>3} " + " ".join(row))
        return lines


def page_dims(F: Filtration, j: int) -> Page:
    """All e_{j,l}^k dimensions for one page."""
    if j < 0:
        raise DimensionError("page index must be >= 0")
    dims: dict[tuple[int, int], int] = {}
    for k in range(-1, F.kmax + 1):
        if F.K.dim_size(k) == 0:
            continue
        for l in range(0, F.lmax[k] + 1):
            d = F.e_dim(k, l, j)
            if d or l <= F.lmax[k]:
                dims[(k, l)] = d
    return Page(j, dims)


@dataclass(frozen=True)
class StabilizationReport:
    k: int
    per_page: dict[int, int]  # j -> dim e_j^k
    stabilization_page: int
    betti: int


def stabilized_dims(F: Filtration, k: int, j_cap: int | None = None) -> StabilizationReport:
    """Run pages until two consecutive totals agree with the Betti number."""
    target = betti(F.K, k)
    if j_cap is None:
        j_cap = max(F.lmax.values(), default=0) + F.kmax + 3
    per_page: dict[int, int] = {}
    stab = None
    prev = None
    for j in range(0, j_cap + 1):
        total = sum(F.e_dim(k, l, j) for l in range(0, F.lmax[k] + 1))
        per_page[j] = total
        if prev is not None and total == prev == target and stab is None:
            stab = j - 1
            break
        prev = total
    if stab is None:
        raise HomologyLabError(
            f"spectral sequence did not stabilize to betti={target} within {j_cap} pages"
        )
    return StabilizationReport(k, per_page, stab, target)


@dataclass(frozen=True)
class FormanRow:
    j: int
    algebraic_dim: int
    branch_count: int

    @property
    def equal(self) -> bool:
        return self.algebraic_dim == self.branch_count


@dataclass(frozen=True)
class FormanReport:
    k: int
    rows: tuple[FormanRow, ...]
    branch_table: BranchTable

    @property
    def ok(self) -> bool:
        return all(r.equal for r in self.rows)


def forman_compare(
    K: CliqueComplex,
    k: int,
    grid: tuple[float, ...] = DEFAULT_GRID,
    slope_tol: float = 0.5,
) -> FormanReport:
    """Algebraic page dimensions against numeric decay-exponent counts.

    For each page j >= 1, dim e_j^k must equal the number of eigenvalue
    branches of the weighted Laplacian whose fitted decay exponent is at
    least 2j (exact-kernel branches count as infinitely fast).
    """
    F = filtration(K)
    stab = stabilized_dims(F, k)
    table = sweep(K, k, grid, slope_tol)
    j_top = stab.stabilization_page + 1
    rows = []
    for j in range(1, j_top + 1):
        alg = stab.per_page.get(j)
        if alg is None:
            alg = sum(F.e_dim(k, l, j) for l in range(0, F.lmax[k] + 1))
        rows.append(FormanRow(j, alg, table.count_exponent_at_least(2 * j)))
    return FormanReport(k, tuple(rows), table)
