"""Figures written next to the text/JSON reports.

Uses the object-oriented matplotlib API with the Agg canvas so nothing
depends on a display or on pyplot's global state.
"""

from __future__ import annotations

import numpy as np
from matplotlib.figure import Figure

from .report import fmt

FIGSIZE = (7.0, 4.3)


def _save(fig: Figure, path) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata={"Software": None})


def plot_spectrum(path, numeric, closed=None, title="distance spectrum"):
    """Eigenvalues against their sorted index; overlays the closed form when given."""
    fig = Figure(figsize=FIGSIZE)
    ax = fig.add_subplot(1, 1, 1)
    idx = np.arange(1, len(numeric) + 1)
    ax.plot(idx, numeric.values, "o", ms=6, mfc="none", color="tab:blue", label="numeric")
    if closed is not None:
        ax.plot(idx, closed.values, "x", ms=5, color="tab:red", label="closed form")
        dev = max(abs(a - b) for a, b in zip(numeric.values, closed.values))
        title = f"{title}  (max deviation {dev:.2e})"
    ax.axhline(0.0, color="0.7", lw=0.8)
    ax.set_xlabel("index (descending)")
    ax.set_ylabel("eigenvalue")
    ax.set_title(title, fontsize=10)
    ax.legend(frameon=False)
    _save(fig, path)


def plot_family(path, cert, spectra):
    """Energy deviation per member (left) and the members' spectra (right)."""
    fig = Figure(figsize=(FIGSIZE[0] * 1.4, FIGSIZE[1]))
    ax_e, ax_s = fig.add_subplot(1, 2, 1), fig.add_subplot(1, 2, 2)
    energies = np.array([e for _, e in cert.members])
    labels = [str(p) if p is not None else f"#{i}" for i, (p, _) in enumerate(cert.members)]
    mean = energies.mean()
    ax_e.plot(range(len(energies)), energies - mean, "o", color="tab:blue")
    ax_e.axhline(0.0, color="0.7", lw=0.8)
    ax_e.set_xticks(range(len(energies)), labels, rotation=45, ha="right", fontsize=8)
    ax_e.set_ylabel(f"D-energy - {fmt(mean)}")
    ax_e.set_title(f"spread {cert.energy_spread:.2e} (tol {cert.tol:.1e})", fontsize=9)
    for i, s in enumerate(spectra):
        ax_s.plot(s.values, np.full(len(s), i), "|", ms=12)
    ax_s.set_yticks(range(len(spectra)), labels, fontsize=8)
    ax_s.set_xlabel("D-eigenvalue")
    title = f"a = {cert.a}" if cert.a is not None else "family"
    fig.suptitle(f"{title}: {'pass' if cert.passed else 'FAIL'}", fontsize=10)
    _save(fig, path)
