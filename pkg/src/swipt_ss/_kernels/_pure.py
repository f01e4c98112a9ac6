"""Pure-numpy kernels, the fallback for the compiled core.

Same contracts as ``swipt_ss._kernels._core``. Callers validate inputs;
kernels assume gains are 1-D float64, strictly positive and sorted
descending, ``noise > 0``, ``budget > 0`` and ``rate >= 0``.

Return conventions shared by both backends:

* ``budget_waterfill``   -> (powers, water_level, active_count)
* ``min_power_waterfill``-> (powers, active_count, water_level, total);
  active_count is 0 for a zero rate, -1 when the step-rule positivity
  guard fails (caller escalates), -2 when the gain list is empty but the
  rate is positive (total is +inf).
* ``candidate_id_totals``-> (totals, counts, levels), one entry per
  candidate EH channel e, each from the min-power fill over the gains
  with entry e removed.
* ``grid_min_power``     -> (found, best_total, best_point): exhaustive
  scan of the per-axis grids ``lo[j] + i*(hi[j]-lo[j])/steps`` for
  i = 0..steps, keeping the first point in row-major order that attains
  the minimal total among points with rate >= ``rate`` and
  total <= ``budget_cap``.
"""

import numpy as np


def budget_waterfill(gains, noise, budget):
    m = gains.shape[0]
    inv = noise / gains
    powers = np.zeros(m)
    mu = budget + inv[0]
    for w in range(m, 0, -1):
        mu = (budget + float(inv[:w].sum())) / w
        if mu > inv[w - 1]:
            break
    powers[:w] = mu - inv[:w]
    return powers, float(mu), int(w)


def min_power_waterfill(gains, noise, rate):
    m = gains.shape[0]
    powers = np.zeros(m)
    if rate <= 0.0:
        return powers, 0, 0.0, 0.0
    if m == 0:
        return powers, -2, 0.0, float("inf")
    lg = np.log2(gains)
    cum = np.cumsum(lg)
    # strict step rule; the t=1 term reduces to rate > 0, so a hit exists
    ok = rate > cum - np.arange(1, m + 1) * lg
    s = int(np.nonzero(ok)[0][-1]) + 1
    level = noise * np.exp2((rate - cum[s - 1]) / s)
    powers[:s] = level - noise / gains[:s]
    total = float(powers[:s].sum())
    if powers[s - 1] <= 0.0:
        return powers, -1, float(level), total
    return powers, s, float(level), total


def candidate_id_totals(gains, noise, rate):
    r = gains.shape[0]
    totals = np.empty(r)
    counts = np.empty(r, dtype=np.int64)
    levels = np.empty(r)
    for e in range(r):
        sub = np.delete(gains, e)
        _, s, level, total = min_power_waterfill(sub, noise, rate)
        totals[e] = total
        counts[e] = s
        levels[e] = level
    return totals, counts, levels


def _axis_grids(gains, noise, lo, hi, steps):
    n = steps + 1
    idx = np.arange(n)
    vals = []
    rates = []
    for j in range(gains.shape[0]):
        step = (hi[j] - lo[j]) / steps
        v = lo[j] + idx * step
        vals.append(v)
        rates.append(np.log2(1.0 + v * gains[j] / noise))
    return vals, rates


def grid_min_power(gains, noise, rate, lo, hi, steps, budget_cap):
    m = gains.shape[0]
    if not 1 <= m <= 4:
        raise ValueError("grid_min_power supports 1..4 dimensions")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    vals, rates = _axis_grids(gains, noise, lo, hi, steps)

    best_total = np.inf
    best_point = np.zeros(m)
    found = False

    def scan2(base_total, base_rate, a, b, offset_point):
        nonlocal best_total, best_point, found
        total = base_total + vals[a][:, None] + vals[b][None, :]
        rsum = base_rate + rates[a][:, None] + rates[b][None, :]
        masked = np.where((rsum >= rate) & (total <= budget_cap), total, np.inf)
        k = int(np.argmin(masked))
        t = masked.flat[k]
        if t < best_total:
            ia, ib = np.unravel_index(k, masked.shape)
            best_total = float(t)
            best_point = np.array(offset_point + [vals[a][ia], vals[b][ib]])
            found = True

    if m == 1:
        masked = np.where((rates[0] >= rate) & (vals[0] <= budget_cap), vals[0], np.inf)
        k = int(np.argmin(masked))
        if masked[k] < np.inf:
            return True, float(masked[k]), np.array([vals[0][k]])
        return False, np.inf, best_point
    if m == 2:
        scan2(0.0, 0.0, 0, 1, [])
    elif m == 3:
        for i0 in range(steps + 1):
            scan2(vals[0][i0], rates[0][i0], 1, 2, [vals[0][i0]])
    else:
        for i0 in range(steps + 1):
            for i1 in range(steps + 1):
                scan2(
                    vals[0][i0] + vals[1][i1],
                    rates[0][i0] + rates[1][i1],
                    2,
                    3,
                    [vals[0][i0], vals[1][i1]],
                )
    return found, float(best_total), best_point
