"""Report figures: matplotlib renderings of the report metrics.

Two charts per report: attribute support (how many objects own each
attribute, the genericity signal) and configuration sizes (how many
attributes each object owns). Written as PNG files next to the report
output; lattice drawing itself stays out of scope (DOT covers that).
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .variability import VariabilityReport


def _barh(path: Path, title: str, xlabel: str, data: dict[str, int]) -> None:
    names = list(data)
    values = [data[n] for n in names]
    height = max(2.0, 0.4 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(7, height))
    ax.barh(range(len(names)), values, color="#4878a8")
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel(xlabel)
    ax.set_title(title)
    ax.xaxis.set_major_locator(plt.MaxNLocator(integer=True))
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_report_figures(report: VariabilityReport, out_dir: str | Path) -> list[Path]:
    """Write the report's metric charts into ``out_dir`` and return their paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    support_png = out_dir / "attribute_support.png"
    sizes_png = out_dir / "configuration_sizes.png"
    _barh(support_png, "Attribute support", "objects owning the attribute",
          report.metrics["attribute_support"])
    _barh(sizes_png, "Configuration sizes", "attributes per object",
          report.metrics["object_configuration_size"])
    return [support_png, sizes_png]
