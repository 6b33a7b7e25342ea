"""Pure-Python kernels; reference behaviour for the compiled ``_kernels`` module.

Every value is an exact rational given as a ``(numerator, denominator)``
pair with ``denominator >= 1``.  An integer threshold ``k`` is met iff
``numerator // denominator >= k``, so all comparisons stay in integers.
"""


def _floors(numerators, denominators):
    if len(numerators) != len(denominators):
        raise ValueError("numerators and denominators differ in length")
    out = []
    for num, den in zip(numerators, denominators):
        if den < 1:
            raise ValueError(f"denominator must be >= 1, got {den}")
        if num < 0:
            raise ValueError(f"value must be non-negative, got {num}/{den}")
        out.append(num // den)
    return out


def h_from_pairs(numerators, denominators):
    """Largest k with at least k values >= k."""
    floors = _floors(numerators, denominators)
    n = len(floors)
    counts = [0] * (n + 1)
    for f in floors:
        counts[min(f, n)] += 1
    at_least = 0
    for k in range(n, 0, -1):
        at_least += counts[k]
        if at_least >= k:
            return k
    return 0


def count_at_least(numerators, denominators, threshold):
    return sum(1 for f in _floors(numerators, denominators) if f >= threshold)


def prefix_h(years, numerators, denominators, first_year, last_year):
    """h over the papers with ``year <= y``, for every y in [first_year, last_year]."""
    floors = _floors(numerators, denominators)
    if len(years) != len(floors):
        raise ValueError("years and values differ in length")
    n = len(floors)
    order = sorted(range(n), key=years.__getitem__)
    counts = [0] * (n + 2)
    h = 0
    above = 0  # values >= h + 1
    out = []
    i = 0
    for y in range(first_year, last_year + 1):
        while i < n and years[order[i]] <= y:
            v = min(floors[order[i]], n + 1)
            counts[v] += 1
            if v >= h + 1:
                above += 1
                while above >= h + 1:
                    h += 1
                    above -= counts[h]
            i += 1
        out.append(h)
    return out
