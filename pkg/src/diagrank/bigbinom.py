"""Exact binomial coefficients over all of Z x Z.

Every function here works on Python ints, so nothing overflows; the cost
grows with the size of the lower argument, never with a precomputed table.
"""


def binom(x: int, y: int) -> int:
    """Generalized binomial coefficient ``C(x, y)`` for any integers.

    * ``y < 0``            -> 0
    * ``x < 0 <= y``       -> ``(-1)**y * C(y - x - 1, y)``
    * ``0 <= x < y``       -> 0
    * ``x >= y >= 0``      -> ``x! / (y! (x - y)!)``

    The negative-``x`` reflection is checked before the ``x < y`` zero case;
    with the opposite precedence the parallel summation identity breaks for
    ``x <= 0``.

    >>> binom(5, 2), binom(3, 5), binom(-1, 2), binom(7, -1)
    (10, 0, 1, 0)
    """
    if y < 0:
        return 0
    if x < 0:
        value = binom(y - x - 1, y)
        return -value if y & 1 else value
    if x < y:
        return 0
    y = min(y, x - y)
    # prod_{i=1..y} (x - y + i) / i; every partial product is itself a binomial
    acc = 1
    base = x - y
    for i in range(1, y + 1):
        acc = acc * (base + i) // i
    return acc


def parallel_sum(x: int, y: int) -> int:
    """Term-by-term ``sum_{i=0..y} C(i + x - 1, i)``.

    Equal to ``binom(x + y, y)`` for every integer ``x``; this function does
    not use that closed form, so the two can be checked against each other.
    """
    if y < 0:
        raise ValueError(f"parallel_sum needs y >= 0, got {y}")
    return sum(binom(i + x - 1, i) for i in range(y + 1))


def compositions_count(m: int, j: int) -> int:
    """Number of ``m``-tuples of naturals whose coordinates sum to ``j``."""
    if m < 1:
        raise ValueError(f"compositions_count needs m >= 1, got {m}")
    if j < 0:
        return 0
    return binom(m - 1 + j, j)


def iroot(n: int, j: int) -> int:
    """Floor of the ``j``-th root of a nonnegative integer."""
    if n < 0 or j < 1:
        raise ValueError("iroot needs n >= 0 and j >= 1")
    if j == 1 or n < 2:
        return n
    x = 1 << -(-n.bit_length() // j)  # already >= the true root
    while True:
        y = ((j - 1) * x + n // x ** (j - 1)) // j
        if y >= x:
            return x
        x = y


def largest_index_below(r: int, j: int) -> int:
    """Largest ``c >= j - 1`` with ``binom(c, j) <= r``, for ``r >= 0, j >= 1``.

    With ``t = iroot(j! * r, j)`` the answer lies in ``[t, t + j - 1]``:
    ``C(t, j) <= t**j / j! <= r`` from below, and ``C(c, j) >= (c-j+1)**j / j!``
    rules out anything past ``t + j - 1``. A binary search over that bracket
    finishes the job with exact comparisons.
    """
    if r < 0 or j < 1:
        raise ValueError("largest_index_below needs r >= 0 and j >= 1")
    if j == 1:
        return r
    fact = 1
    for i in range(2, j + 1):
        fact *= i
    t = iroot(fact * r, j)
    lo = max(t, j - 1)
    hi = t + j - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if binom(mid, j) <= r:
            lo = mid
        else:
            hi = mid - 1
    return lo
