"""Dense matrix representation of blades by Kronecker products of Pauli matrices.

Generator ``e_{2k-1}`` on ``N`` tensor factors is
``s1 x ... x s1 (N-k times) x s3 x 1 x ... x 1 (k-1 times)`` and ``e_{2k}`` is
the same with ``s2`` in place of ``s3``. Only the first ``N`` generators are
used for an algebra of width ``N``, so every matrix is ``2**N`` square.

Entries are Gaussian integers held as a pair of integer numpy arrays. Every
product is exact: float64 BLAS is used only when the worst-case partial sum
stays below 2**53, int64 below 2**63, and object arrays of Python ints
otherwise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .blade import BitString, grade
from .errors import DimError, NotMultivectorError, RangeError
from .function_model import FunctionTable
from .multivector import Multivector
from .pipeline import apply_Uf, build_En, build_Fn

DEFAULT_CARTAN_LIMIT = 8
MAX_CARTAN_LIMIT = 12

_FLOAT_EXACT = 1 << 53
_INT64_SAFE = 1 << 62


@dataclass(frozen=True, slots=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    def __add__(self, other):
        other = _as_gauss(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_gauss(other)
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def __str__(self):
        return f"{self.re}{self.im:+d}i"

    @classmethod
    def parse(cls, token: str) -> GaussianInt:
        """Accept ``a+bi`` as well as the short forms ``1-i``, ``-2i``, ``i``, ``0``."""
        tok = token.strip().replace(" ", "")
        if not tok:
            raise ValueError("empty Gaussian integer token")
        if not tok.endswith("i"):
            return cls(int(tok), 0)
        body = tok[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            real, imag = int(body[:cut]), body[cut:]
        else:
            real, imag = 0, body
        if imag in ("", "+"):
            return cls(real, 1)
        if imag == "-":
            return cls(real, -1)
        return cls(real, int(imag))


def _as_gauss(x) -> GaussianInt:
    if isinstance(x, GaussianInt):
        return x
    if isinstance(x, (int, np.integer)):
        return GaussianInt(int(x), 0)
    raise TypeError(f"cannot treat {type(x).__name__} as a Gaussian integer")


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(v)) for v in a.flat)
    return int(np.abs(a.astype(np.int64, copy=False)).max())


def _real_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    bound = _max_abs(a) * _max_abs(b) * a.shape[1]
    if a.dtype != object and b.dtype != object:
        if bound < _FLOAT_EXACT:
            prod = a.astype(np.float64) @ b.astype(np.float64)
            return np.rint(prod).astype(np.int64)
        if bound < _INT64_SAFE:
            return a.astype(np.int64) @ b.astype(np.int64)
    return a.astype(object) @ b.astype(object)


def _widen(*arrays: np.ndarray, bound: int) -> list[np.ndarray]:
    """Cast to int64 when ``bound`` is safe, else to Python-int objects."""
    if bound < _INT64_SAFE:
        return [a.astype(np.int64, copy=False) for a in arrays]
    return [a.astype(object) for a in arrays]


class DenseMatrix:
    """Square ``2**N`` matrix of Gaussian integers."""

    __slots__ = ("re", "im")

    def __init__(self, re: np.ndarray, im: np.ndarray | None = None):
        re = np.asarray(re)
        im = np.zeros_like(re) if im is None else np.asarray(im)
        if re.ndim != 2 or re.shape[0] != re.shape[1] or re.shape != im.shape:
            raise DimError(f"expected matching square arrays, got {re.shape} and {im.shape}")
        dim = re.shape[0]
        if dim < 1 or dim & (dim - 1):
            raise DimError(f"dimension must be a power of two, got {dim}")
        for arr in (re, im):
            if arr.dtype != object and not np.issubdtype(arr.dtype, np.integer):
                raise TypeError(f"entries must be integers, got dtype {arr.dtype}")
        self.re = re
        self.im = im

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    @property
    def width(self) -> int:
        return self.dim.bit_length() - 1

    @classmethod
    def identity(cls, dim: int) -> DenseMatrix:
        return cls(np.eye(dim, dtype=np.int64), np.zeros((dim, dim), dtype=np.int64))

    @classmethod
    def zeros(cls, dim: int) -> DenseMatrix:
        return cls(np.zeros((dim, dim), dtype=np.int64), np.zeros((dim, dim), dtype=np.int64))

    @classmethod
    def from_entries(cls, rows) -> DenseMatrix:
        rows = [[_as_gauss(v) for v in row] for row in rows]
        re = np.array([[int(v.re) for v in row] for row in rows], dtype=object)
        im = np.array([[int(v.im) for v in row] for row in rows], dtype=object)
        return cls(*_widen(re, im, bound=max(_max_abs(re), _max_abs(im))))

    def __getitem__(self, rc) -> GaussianInt:
        r, c = rc
        return GaussianInt(int(self.re[r, c]), int(self.im[r, c]))

    def rows(self) -> list[list[GaussianInt]]:
        return [[self[r, c] for c in range(self.dim)] for r in range(self.dim)]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.dim == other.dim
                and bool(np.all(self.re == other.re))
                and bool(np.all(self.im == other.im)))

    __hash__ = None

    def __repr__(self):
        return f"DenseMatrix(dim={self.dim})"

    def _check_dim(self, other: DenseMatrix):
        if self.dim != other.dim:
            raise DimError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        self._check_dim(other)
        bound = 2 * max(_max_abs(self.re), _max_abs(self.im), _max_abs(other.re), _max_abs(other.im))
        a_re, a_im, b_re, b_im = _widen(self.re, self.im, other.re, other.im, bound=bound)
        return DenseMatrix(a_re + b_re, a_im + b_im)

    def __neg__(self) -> DenseMatrix:
        return self.scale(-1)

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        return self + (-other)

    def scale(self, c: int | GaussianInt) -> DenseMatrix:
        c = _as_gauss(c)
        bound = 2 * max(abs(c.re), abs(c.im)) * max(_max_abs(self.re), _max_abs(self.im))
        re, im = _widen(self.re, self.im, bound=bound)
        return DenseMatrix(c.re * re - c.im * im, c.re * im + c.im * re)

    def __matmul__(self, other: DenseMatrix) -> DenseMatrix:
        return matmul(self, other)

    def trace(self) -> GaussianInt:
        return trace(self)

    def kron(self, other: DenseMatrix) -> DenseMatrix:
        bound = 2 * max(_max_abs(self.re), _max_abs(self.im)) * max(_max_abs(other.re), _max_abs(other.im))
        a_re, a_im, b_re, b_im = _widen(self.re, self.im, other.re, other.im, bound=bound)
        return DenseMatrix(np.kron(a_re, b_re) - np.kron(a_im, b_im),
                           np.kron(a_re, b_im) + np.kron(a_im, b_re))

    def to_text(self) -> str:
        """One row per line, comma-separated ``a+bi`` tokens."""
        return "\n".join(",".join(str(v) for v in row) for row in self.rows()) + "\n"

    @classmethod
    def from_text(cls, text: str) -> DenseMatrix:
        rows = [[GaussianInt.parse(t) for t in line.split(",")]
                for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        return cls.from_entries(rows)


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    a._check_dim(b)
    rr = _real_matmul(a.re, b.re)
    ii = _real_matmul(a.im, b.im)
    ri = _real_matmul(a.re, b.im)
    ir = _real_matmul(a.im, b.re)
    bound = 2 * max(_max_abs(x) for x in (rr, ii, ri, ir))
    rr, ii, ri, ir = _widen(rr, ii, ri, ir, bound=bound)
    return DenseMatrix(rr - ii, ri + ir)


def trace(a: DenseMatrix) -> GaussianInt:
    return GaussianInt(int(sum(int(v) for v in np.diagonal(a.re))),
                       int(sum(int(v) for v in np.diagonal(a.im))))


def trace_of_product(a: DenseMatrix, b: DenseMatrix) -> GaussianInt:
    """``Tr(a @ b)`` as ``sum_ij a_ij b_ji``, without forming the product."""
    a._check_dim(b)
    bound = 2 * max(_max_abs(a.re), _max_abs(a.im)) * max(_max_abs(b.re), _max_abs(b.im)) * a.dim * a.dim
    a_re, a_im, b_re, b_im = _widen(a.re, a.im, b.re.T, b.im.T, bound=bound)
    re = (a_re * b_re).sum() - (a_im * b_im).sum()
    im = (a_re * b_im).sum() + (a_im * b_re).sum()
    return GaussianInt(int(re), int(im))


ONE = DenseMatrix.from_entries([[1, 0], [0, 1]])
SIGMA1 = DenseMatrix.from_entries([[0, 1], [1, 0]])
SIGMA2 = DenseMatrix.from_entries([[0, GaussianInt(0, -1)], [GaussianInt(0, 1), 0]])
SIGMA3 = DenseMatrix.from_entries([[1, 0], [0, -1]])


def check_width(width: int, limit: int = DEFAULT_CARTAN_LIMIT):
    if limit > MAX_CARTAN_LIMIT:
        raise RangeError(f"Cartan limit may not exceed {MAX_CARTAN_LIMIT}, got {limit}")
    if not 1 <= width <= limit:
        raise RangeError(f"width {width} outside the Cartan limit 1..{limit}")
    if width > DEFAULT_CARTAN_LIMIT:
        warnings.warn(f"dense {2 ** width}x{2 ** width} matrices at width {width} are slow",
                      RuntimeWarning, stacklevel=3)


def generator_factors(i: int, width: int) -> list[DenseMatrix]:
    """The ``width`` 2x2 tensor factors of generator ``e_i``, leftmost first."""
    if not 1 <= i <= width:
        raise RangeError(f"generator index {i} outside 1..{width}")
    k = (i + 1) // 2
    middle = SIGMA3 if i % 2 else SIGMA2
    return [SIGMA1] * (width - k) + [middle] + [ONE] * (k - 1)


def _kron_all(factors: list[DenseMatrix]) -> DenseMatrix:
    out = factors[0]
    for f in factors[1:]:
        out = out.kron(f)
    return out


def generator_matrix(i: int, width: int, limit: int = DEFAULT_CARTAN_LIMIT) -> DenseMatrix:
    check_width(width, limit)
    return _kron_all(generator_factors(i, width))


@lru_cache(maxsize=4096)
def _blade_arrays(width: int, value: int) -> tuple[np.ndarray, np.ndarray]:
    # Mixed-product property: a product of Kronecker products is the
    # Kronecker product of the factorwise 2x2 products.
    factors = [ONE] * width
    x = BitString(width, value)
    for i in range(1, width + 1):
        if x[i]:
            factors = [p @ g for p, g in zip(factors, generator_factors(i, width))]
    m = _kron_all(factors)
    re = m.re.astype(np.int8)
    im = m.im.astype(np.int8)
    re.setflags(write=False)
    im.setflags(write=False)
    return re, im


def blade_matrix(x: BitString, limit: int = DEFAULT_CARTAN_LIMIT) -> DenseMatrix:
    """Ordered product of the generators at the set bits of ``x``, ascending."""
    check_width(x.width, limit)
    return DenseMatrix(*_blade_arrays(x.width, x.value))


def multivector_to_matrix(mv: Multivector, limit: int = DEFAULT_CARTAN_LIMIT) -> DenseMatrix:
    check_width(mv.width, limit)
    dim = 1 << mv.width
    total = sum(abs(c) for _, c in mv.items())
    dtype = np.int64 if total < _INT64_SAFE else object
    re = np.zeros((dim, dim), dtype=dtype)
    im = np.zeros((dim, dim), dtype=dtype)
    for blade, coeff in mv.items():
        b_re, b_im = _blade_arrays(mv.width, blade.value)
        re += coeff * b_re.astype(dtype)
        im += coeff * b_im.astype(dtype)
    return DenseMatrix(re, im)


def _reverse_sign_from_grade(g: int) -> int:
    return -1 if (g * (g - 1) // 2) % 2 else 1


@lru_cache(maxsize=MAX_CARTAN_LIMIT + 1)
def _monomial_table(width: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Column and value of the single nonzero in each row of every blade matrix.

    Read off the dense Kronecker-product matrices; row ``v`` of each returned
    array belongs to the blade with packed index ``v``.
    """
    dim = 1 << width
    cols = np.empty((dim, dim), dtype=np.intp)
    v_re = np.empty((dim, dim), dtype=np.int64)
    v_im = np.empty((dim, dim), dtype=np.int64)
    rows = np.arange(dim)
    for v in range(dim):
        re, im = _blade_arrays(width, v)
        nz = (re != 0) | (im != 0)
        if not np.all(nz.sum(axis=1) == 1):
            raise AssertionError(f"blade matrix {v} of width {width} is not monomial")
        c = nz.argmax(axis=1)
        cols[v] = c
        v_re[v] = re[rows, c]
        v_im[v] = im[rows, c]
    for arr in (cols, v_re, v_im):
        arr.setflags(write=False)
    return cols, v_re, v_im


def _all_blade_traces(a: DenseMatrix) -> list[GaussianInt]:
    """``Tr(blade_matrix(x) @ a)`` for every blade ``x``, in packed-index order."""
    cols, v_re, v_im = _monomial_table(a.width)
    rows = np.arange(a.dim)[None, :]
    # Tr(B A) = sum_r B[r, c(r)] * A[c(r), r] for monomial B.
    bound = 2 * max(_max_abs(a.re), _max_abs(a.im)) * a.dim
    g_re, g_im = _widen(a.re[cols, rows], a.im[cols, rows], bound=bound)
    if g_re.dtype == object:
        v_re, v_im = v_re.astype(object), v_im.astype(object)
    t_re = (v_re * g_re - v_im * g_im).sum(axis=1)
    t_im = (v_re * g_im + v_im * g_re).sum(axis=1)
    return [GaussianInt(int(r), int(i)) for r, i in zip(t_re, t_im)]


def blade_trace(a: DenseMatrix, x: BitString, limit: int = DEFAULT_CARTAN_LIMIT) -> GaussianInt:
    """``Tr(blade_matrix(x) @ a)``."""
    if a.width != x.width:
        raise DimError(f"matrix width {a.width} != blade width {x.width}")
    return trace_of_product(blade_matrix(x, limit), a)


def _decode_trace(t: GaussianInt, x: BitString) -> int:
    t = t * _reverse_sign_from_grade(grade(x))
    scale = 1 << x.width
    if t.im != 0 or t.re % scale:
        raise NotMultivectorError(f"trace {t} against e[{x}] is not a multiple of {scale}")
    return t.re // scale


def coefficient_from_matrix(a: DenseMatrix, x: BitString, limit: int = DEFAULT_CARTAN_LIMIT) -> int:
    """Coefficient of ``e_x``: ``(-1)**(g(g-1)/2) / 2**N * Tr(e_x a)``, g = grade."""
    return _decode_trace(blade_trace(a, x, limit), x)


def matrix_to_multivector(a: DenseMatrix, width: int | None = None,
                          limit: int = DEFAULT_CARTAN_LIMIT) -> Multivector:
    width = a.width if width is None else width
    if width != a.width:
        raise DimError(f"matrix of dim {a.dim} cannot represent width {width}")
    check_width(width, limit)
    traces = _all_blade_traces(a)
    terms = []
    for v, t in enumerate(traces):
        x = BitString(width, v)
        terms.append((x, _decode_trace(t, x)))
    return Multivector(width, terms)


@dataclass(frozen=True)
class MatrixTrace:
    En: DenseMatrix
    Fn: DenseMatrix
    after_En: DenseMatrix
    after_Uf: DenseMatrix
    final_matrix: DenseMatrix
    final: Multivector


def run_pipeline_matrices(f: FunctionTable, limit: int = DEFAULT_CARTAN_LIMIT) -> MatrixTrace:
    """Matrix route; the oracle step alone is done on the decoded multivector."""
    width = f.n + f.m
    check_width(width, limit)
    en = multivector_to_matrix(build_En(f.n, f.m), limit)
    fn = multivector_to_matrix(build_Fn(f.n, f.m), limit)
    after_en = en @ DenseMatrix.identity(1 << width)
    after_uf = multivector_to_matrix(apply_Uf(f, matrix_to_multivector(after_en, width, limit)), limit)
    final_matrix = fn @ after_uf
    return MatrixTrace(en, fn, after_en, after_uf, final_matrix,
                       matrix_to_multivector(final_matrix, width, limit))


def run_pipeline_matrix(f: FunctionTable, limit: int = DEFAULT_CARTAN_LIMIT) -> Multivector:
    return run_pipeline_matrices(f, limit).final
