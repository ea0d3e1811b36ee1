"""Data series behind the three diagnostic figures, with CSV and PNG output.

Each generator returns a header tuple and a list of rows; `render` writes
the delimited data and a matplotlib rendering next to it.
"""

from __future__ import annotations

import csv

import mpmath

from .asym import eval_asym_laurent, get_context, rademacher_inf
from .exact_coeffs import laurent_coeff_exact, laurent_coeff_numeric, sylvester_wave_numeric
from .tables import unrestricted_p

FIGURE_IDS = ("cfig", "qfig", "wvfig")

_DEFAULT_RANGES = {
    # start, stop (inclusive), step
    "cfig": (1, 200, 1),
    "qfig": (750, 1150, 1),
    "wvfig": (8, 1800, 8),
}


def default_range(figure_id: str):
    return _DEFAULT_RANGES[figure_id]


def cfig_rows(start=1, stop=200, step=1, dps=30):
    """Principal-part coefficient A_{-4}(1,N) against its conjectured limit."""
    with mpmath.mp.workdps(dps):
        limit = rademacher_inf(4, dps)
        rows = []
        for N in range(start, stop + 1, step):
            c = laurent_coeff_exact(1, 0, -4, N).rational_value()
            val = mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
            rows.append((N, val, limit))
    return ("N", "C014_N", "C014_limit"), rows


def qfig_rows(start=750, stop=1150, step=1, dps=20):
    """Re A_{-2}(i,N), rescaled by N^3 |w0|^(N/4), against the r=1 main term.

    The rescaling turns the leading asymptotic behaviour into four
    interleaved sine waves indexed by N mod 4.
    """
    ctx = get_context(4, 8, dps)
    rows = []
    with mpmath.mp.workdps(dps + 10):
        absw0 = abs(mpmath.mpc(ctx.constants.w0))
        for N in range(start, stop + 1, step):
            scale = mpmath.mpf(N) ** 3 * absw0 ** (mpmath.mpf(N) / 4)
            exact = laurent_coeff_numeric(4, 1, -2, N, digits=10)
            main = eval_asym_laurent(4, 1, -2, N, 1, dps)
            rows.append((N, mpmath.re(exact) * scale, mpmath.re(main) * scale))
    return ("N", "scaled_re_A", "scaled_main_term"), rows


def wvfig_rows(start=8, stop=1800, step=8, dps=30):
    """Log-magnitude of the first wave W_1(n,n) against log p(n) and the
    log of the leading asymptotic term."""
    ctx = get_context(1, 8, dps)
    rows = []
    with mpmath.mp.workdps(dps + 10):
        z0 = mpmath.mpc(ctx.constants.z0)
        w0 = mpmath.mpc(ctx.constants.w0)
        U = mpmath.mpf(ctx.constants.U)
        C = z0 * mpmath.exp(-3 * z0 / 2) / (mpmath.pi * 1j)
        phase = mpmath.arg(1 / w0)
        for n in range(start, stop + 1, step):
            w1 = sylvester_wave_numeric(1, n, n, digits=8)
            logw1 = mpmath.log(abs(w1)) if w1 != 0 else mpmath.mpf("-inf")
            logp = mpmath.log(unrestricted_p(n))
            # |Re(C w0^-n / n^2)| = e^(nU) |C| |cos(n*phase + arg C)| / n^2
            osc = abs(mpmath.cos(n * phase + mpmath.arg(C)))
            logmain = n * U + mpmath.log(abs(C)) + mpmath.log(osc) - 2 * mpmath.log(n)
            rows.append((n, logw1, logp, logmain))
    return ("n", "log_abs_W1", "log_p", "log_abs_main_term"), rows


_GENERATORS = {"cfig": cfig_rows, "qfig": qfig_rows, "wvfig": wvfig_rows}


def figure_rows(figure_id: str, start=None, stop=None, step=None, dps=None):
    if figure_id not in _GENERATORS:
        raise ValueError(f"unknown figure id: {figure_id}")
    d_start, d_stop, d_step = _DEFAULT_RANGES[figure_id]
    kwargs = {
        "start": d_start if start is None else start,
        "stop": d_stop if stop is None else stop,
        "step": d_step if step is None else step,
    }
    if dps is not None:
        kwargs["dps"] = dps
    return _GENERATORS[figure_id](**kwargs)


def write_csv(path: str, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[0]] + [mpmath.nstr(v, 17) for v in row[1:]])


def render_png(path: str, figure_id: str, header, rows) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(8, 5))
    if figure_id == "cfig":
        ax.plot(xs, [float(r[1]) for r in rows], ".", ms=4, label=header[1])
        ax.axhline(float(rows[0][2]), color="tab:red", lw=1, label=header[2])
        ax.set_ylim(-0.05, 0.1)
        ax.set_xlabel("N")
    elif figure_id == "qfig":
        ax.plot(xs, [float(r[2]) for r in rows], "-", lw=0.8, label=header[2])
        ax.plot(xs, [float(r[1]) for r in rows], ".", ms=3, label=header[1])
        ax.set_xlabel("N")
    else:
        ax.plot(xs, [float(r[2]) for r in rows], "-", lw=1, label=header[2])
        ax.plot(xs, [float(r[3]) for r in rows], "-", lw=1, label=header[3])
        ax.plot(xs, [float(r[1]) for r in rows], ".", ms=4, label=header[1])
        ax.set_xlabel("n")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
