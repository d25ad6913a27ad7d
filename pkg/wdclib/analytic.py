# %%
from __future__ import annotations

import logging
import math
from typing import Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.special import gammaln

logger = logging.getLogger(__name__)

# largest |a| accepted by the series constructors of the test-function families
A_CAP = 0.999
TRUNCATION_TOLERANCE = 1e-10


# %%
def _as_points(z) -> np.ndarray:
    if isinstance(z, DiskPoint):
        return np.asarray(z.z, dtype=complex)
    return np.asarray(z, dtype=complex)


def _restore(value: np.ndarray, z):
    # scalar in, scalar out
    if np.ndim(value) == 0 and not isinstance(z, np.ndarray):
        return complex(value)
    return value


def _rising(s: float, m: int) -> float:
    return math.prod(s + i for i in range(m))


def _check_order(k) -> int:
    if int(k) != k or k < 0:
        raise ValueError(f'derivative order must be a non-negative integer, got {k}')
    return int(k)


# %%
class DiskPoint:
    def __init__(self, z: complex):
        z = complex(z)
        if not abs(z) < 1.0:
            raise ValueError(f'point must lie in the open unit disk, got {z}')
        self._z = z

    @property
    def z(self) -> complex:
        return self._z

    def __complex__(self):
        return self._z

    def __abs__(self):
        return abs(self._z)

    def __eq__(self, other):
        return isinstance(other, DiskPoint) and other._z == self._z

    def __hash__(self):
        return hash(self._z)

    def __repr__(self):
        return f'DiskPoint({self._z})'


# %%
class TaylorFunction:
    # tail_bound bounds the discarded tail on the closed disk

    def __init__(self, coeffs: Sequence[complex] | np.ndarray, tail_bound: Optional[float] = None):
        c = np.array(np.atleast_1d(coeffs), dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError('coefficients must be a non-empty 1-d sequence')
        if not np.all(np.isfinite(c)):
            raise ValueError('coefficients must be finite')
        if tail_bound is not None and not tail_bound >= 0:
            raise ValueError(f'tail bound must be non-negative, got {tail_bound}')
        c.flags.writeable = False

        self._coeffs = c
        self._tail_bound = tail_bound

        nonzero = np.flatnonzero(c)
        self._valuation = int(nonzero[0]) if nonzero.size else 0

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def degree(self) -> int:
        return self._coeffs.size - 1

    @property
    def tail_bound(self) -> Optional[float]:
        return self._tail_bound

    @property
    def valuation(self) -> int:
        return self._valuation

    @property
    def extends_to_boundary(self) -> bool:
        return True

    @property
    def is_zero(self) -> bool:
        return not np.any(self._coeffs)

    def __call__(self, z):
        return evaluate(self, z)

    def derivative(self, k: int) -> TaylorFunction:
        return derivative(self, k)

    def recenter(self, w, order: int) -> TaylorFunction:
        # b_j = f^(j)(w) / j!
        w = complex(_as_points(w))
        local = [
            evaluate(derivative(self, j), w) / math.factorial(j)
            for j in range(_check_order(order) + 1)
        ]
        return TaylorFunction(local)

    def _sum_bound(self):
        return float(np.sum(np.abs(self._coeffs)))

    def __add__(self, other):
        if not isinstance(other, TaylorFunction):
            other = TaylorFunction([other])
        size = max(self._coeffs.size, other._coeffs.size)
        c = np.zeros(size, dtype=complex)
        c[: self._coeffs.size] += self._coeffs
        c[: other._coeffs.size] += other._coeffs
        return TaylorFunction(c, _combine_tails(self._tail_bound, other._tail_bound))

    __radd__ = __add__

    def __neg__(self):
        return TaylorFunction(-self._coeffs, self._tail_bound)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TaylorFunction):
            tail = None
            if self._tail_bound is not None or other._tail_bound is not None:
                tf = self._tail_bound or 0.0
                tg = other._tail_bound or 0.0
                tail = self._sum_bound() * tg + other._sum_bound() * tf + tf * tg
            return TaylorFunction(np.convolve(self._coeffs, other._coeffs), tail)
        scale = complex(other)
        tail = None if self._tail_bound is None else abs(scale) * self._tail_bound
        return TaylorFunction(scale * self._coeffs, tail)

    __rmul__ = __mul__

    def __repr__(self):
        return f'TaylorFunction(degree={self.degree}, tail_bound={self._tail_bound})'


def _combine_tails(a: Optional[float], b: Optional[float]) -> Optional[float]:
    if a is None and b is None:
        return None
    return (a or 0.0) + (b or 0.0)


def evaluate(f: TaylorFunction, z):
    w = _as_points(z)
    value = P.polyval(w, f.coeffs[f.valuation :])
    if f.valuation:
        value = value * w**f.valuation
    return _restore(value, z)


def derivative(f: TaylorFunction, k: int) -> TaylorFunction:
    k = _check_order(k)
    if k == 0:
        return f
    if k > f.degree:
        return TaylorFunction([0.0])
    m = np.arange(f.degree - k + 1)
    # (m + k)! / m!, exact in double precision for the degrees used here
    factor = np.prod(m[:, None] + np.arange(1, k + 1), axis=1, dtype=float)
    return TaylorFunction(factor * f.coeffs[k:])


def monomial(n: int) -> TaylorFunction:
    n = _check_order(n)
    c = np.zeros(n + 1, dtype=complex)
    c[n] = 1.0
    return TaylorFunction(c)


# %%
class Mobius:
    # sigma_a(z) = (a - z) / (1 - conj(a) z)

    def __init__(self, a):
        self._a = DiskPoint(a.z if isinstance(a, DiskPoint) else a).z

    @property
    def a(self) -> complex:
        return self._a

    def __call__(self, z):
        w = _as_points(z)
        return _restore((self._a - w) / (1.0 - np.conj(self._a) * w), z)

    def __repr__(self):
        return f'Mobius(a={self._a})'


def mobius(a) -> Mobius:
    return Mobius(a)


def pseudo_distance(z, w):
    z = _as_points(z)
    w = _as_points(w)
    d = np.abs((z - w) / (1.0 - np.conj(z) * w))
    return float(d) if np.ndim(d) == 0 else d


# %%
def truncation_degree(
    radius: float, exponent: float, tolerance: float = TRUNCATION_TOLERANCE
) -> int:
    # smallest N with radius^(N+1) (N+1)^exponent / (1 - radius) < tolerance
    if radius == 0.0:
        return 0
    if not 0.0 < radius < 1.0:
        raise ValueError(f'radius must lie in [0, 1), got {radius}')
    log_r = math.log(radius)
    log_tol = math.log(tolerance)
    peak = exponent / -log_r
    length = 64
    while True:
        l = np.arange(1, length + 1, dtype=float)
        log_bound = l * log_r + exponent * np.log(l) - math.log1p(-radius)
        if l[-1] > peak and log_bound[-1] < log_tol:
            failing = np.flatnonzero(log_bound >= log_tol)
            return int(failing[-1]) + 1 if failing.size else 0
        length *= 2


class ProbeFunction:
    """Closed form of f_a sigma_a^k and its derivatives.

    f_a(z) = ((1 - |a|^2) / (1 - conj(a) z)^2)^gamma, hence

        f_a sigma_a^k = (1 - |a|^2)^gamma (a - z)^k (1 - conj(a) z)^-(2 gamma + k).

    ``order`` counts derivatives already taken; derivatives follow from the
    Leibniz rule. ``a`` may be an array, in which case evaluation broadcasts
    a against z (one probe per point). Non-integer powers use the principal
    logarithm of 1 - conj(a) z, whose real part is positive on the closed disk.
    """

    def __init__(self, a, gamma: float, k: int = 0, order: int = 0):
        if gamma < 0:
            raise ValueError(f'gamma must be non-negative, got {gamma}')
        a = np.asarray(a.z if isinstance(a, DiskPoint) else a, dtype=complex)
        if not np.all(np.abs(a) < 1.0):
            raise ValueError('probe anchors must lie in the open unit disk')
        self._a = a
        self._gamma = float(gamma)
        self._k = _check_order(k)
        self._order = _check_order(order)
        self._s = 2.0 * self._gamma + self._k
        self._prefactor = (1.0 - np.abs(a) ** 2) ** self._gamma

    @property
    def a(self):
        return complex(self._a) if self._a.ndim == 0 else self._a

    @property
    def gamma(self) -> float:
        return self._gamma

    @property
    def k(self) -> int:
        return self._k

    @property
    def order(self) -> int:
        return self._order

    @property
    def extends_to_boundary(self) -> bool:
        return True

    def derivative(self, j: int) -> ProbeFunction:
        return ProbeFunction(self._a, self._gamma, self._k, self._order + _check_order(j))

    def __call__(self, z):
        w = _as_points(z)
        a = self._a
        ab = np.conj(a)
        log_base = np.log(1.0 - ab * w)
        d, k, s = self._order, self._k, self._s

        total = np.zeros(np.broadcast(a, w).shape, dtype=complex)
        for i in range(min(d, k) + 1):
            m = d - i
            poly = (-1) ** i * math.perm(k, i) * (a - w) ** (k - i)
            kernel = _rising(s, m) * ab**m * np.exp(-(s + m) * log_base)
            total = total + math.comb(d, i) * poly * kernel
        return _restore(self._prefactor * total, z)

    def taylor(self, degree: Optional[int] = None) -> TaylorFunction:
        if self._a.ndim != 0:
            raise ValueError('series expansion needs a single anchor point')
        a = complex(self._a)
        r = abs(a)
        if r > A_CAP:
            raise ValueError(f'|a| = {r} exceeds the series cap {A_CAP}')
        s, k = self._s, self._k

        if degree is None:
            kernel_degree = truncation_degree(r, max(s - 1.0, 0.0))
        else:
            kernel_degree = max(_check_order(degree) - k, 0)

        l = np.arange(kernel_degree + 1)
        if r == 0.0 or s == 0.0:
            kernel = np.zeros(kernel_degree + 1, dtype=complex)
            kernel[0] = 1.0
            tail = 0.0
        else:
            # (s)_l / l! conj(a)^l in log space, the Gamma ratios overflow otherwise
            log_mag = gammaln(l + s) - gammaln(s) - gammaln(l + 1) + l * math.log(r)
            kernel = np.exp(log_mag - 1j * l * np.angle(a))
            next_l = kernel_degree + 1
            tail = math.exp(
                next_l * math.log(r)
                + max(s - 1.0, 0.0) * math.log(next_l)
                - math.log1p(-r)
            ) / min(1.0, math.gamma(s))

        poly = np.array(
            [math.comb(k, j) * a ** (k - j) * (-1) ** j for j in range(k + 1)],
            dtype=complex,
        )
        prefactor = float(self._prefactor)
        series = TaylorFunction(
            prefactor * np.convolve(kernel, poly),
            tail_bound=prefactor * (1.0 + r) ** k * tail,
        )
        logger.debug(
            'taylor: a=%s gamma=%s k=%d degree=%d', a, self._gamma, k, series.degree
        )
        return derivative(series, self._order)

    def __repr__(self):
        return f'ProbeFunction(a={self.a}, gamma={self._gamma}, k={self._k}, order={self._order})'


def test_function(a, gamma: float, k: int = 0, degree: Optional[int] = None) -> TaylorFunction:
    return ProbeFunction(a, gamma, k).taylor(degree)


# keep pytest from collecting the builder above as a test
test_function.__test__ = False


def proof_probe(w, gamma: float, k: int, degree: Optional[int] = None) -> TaylorFunction:
    # g_k^(j)(w) = 0 for j < k and |g_k^(k)(w)| = k! / (1 - |w|^2)^(k + gamma)
    return test_function(w, gamma, k, degree)


def probe_derivative_data(g: TaylorFunction, w, k: int) -> np.ndarray:
    local = g.recenter(w, k)
    return np.array([local.coeffs[j] * math.factorial(j) for j in range(k + 1)])


# %%
def identity() -> TaylorFunction:
    return TaylorFunction([0.0, 1.0])


def scaled_identity(c: complex) -> TaylorFunction:
    return TaylorFunction([0.0, c])


def constant(c: complex) -> TaylorFunction:
    return TaylorFunction([c])


def zero() -> TaylorFunction:
    return TaylorFunction([0.0])


def polynomial(coeffs: Sequence[complex]) -> TaylorFunction:
    return TaylorFunction(coeffs)


def automorphism(a) -> TaylorFunction:
    return ProbeFunction(a, 0.0, 1).taylor()


BUILTINS = {
    'identity': identity,
    'scaled_identity': scaled_identity,
    'constant': constant,
    'zero': zero,
    'polynomial': polynomial,
    'automorphism': automorphism,
    'monomial': monomial,
}
