"""File-output figure rendering for the CLI report paths.

Charts are a convenience view of the emitted data, never a test surface;
everything checkable lives in the delimited files written next to them.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

__all__ = ["save_line_chart"]


def save_line_chart(path, x, y, *, xlabel: str, ylabel: str, title: str) -> None:
    """Render a single polyline chart and write it atomically to `path`.

    The image format follows the file suffix (svg on the CLI paths).
    """
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7.2, 4.2))
    try:
        ax.plot(x, y, linewidth=1.2)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.set_title(title, fontsize=10)
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
        try:
            with os.fdopen(fd, "wb") as fh:
                fig.savefig(fh, format=path.suffix.lstrip(".") or "svg")
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    finally:
        plt.close(fig)
