"""Self-contained SVG figures: scatter plots and correlation heat maps.

Everything is emitted as plain SVG with inline styling and no external
fonts, so the files render identically everywhere. Markers carry
``data-*`` attributes with their source values, which keeps the figures
machine-checkable.
"""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

from .errors import FigureError
from .stats import CorrelationMatrix, MetricTable

_FONT = "font-family=\"sans-serif\""


def _lerp(a: float, b: float, t: float) -> float:
    return a + (b - a) * t


def _hex_color(rgb) -> str:
    return "#%02x%02x%02x" % tuple(int(round(c)) for c in rgb)


def _ramp(t: float, start, end) -> str:
    t = min(1.0, max(0.0, t))
    return _hex_color([_lerp(s, e, t) for s, e in zip(start, end)])


def _diverging(value: float) -> str:
    """Blue (-1) through near-white (0) to red (+1)."""
    if value < 0:
        return _ramp(-value, (247, 247, 247), (33, 102, 172))
    return _ramp(value, (247, 247, 247), (178, 24, 43))


def _scale(value: float, lo: float, hi: float, out_lo: float, out_hi: float) -> float:
    if hi == lo:
        return (out_lo + out_hi) / 2.0  # single point: center it
    return out_lo + (value - lo) * (out_hi - out_lo) / (hi - lo)


def svg_scatter(
    table: MetricTable,
    x: str,
    y: str,
    *,
    size: str | None = None,
    color: str | None = None,
    width: int = 640,
    height: int = 480,
) -> str:
    """Scatter plot with one marker per model.

    Marker area is proportional to the ``size`` column; fill follows a
    linear color ramp over the ``color`` column. Axis labels are the column
    names and the legend lists every model.
    """
    for name in (x, y, size, color):
        if name is not None and name not in table.columns:
            raise FigureError(f"unknown column {name!r}")
    xs = table.column(x)
    ys = table.column(y)
    sizes = table.column(size) if size else None
    colors = table.column(color) if color else None

    margin_left, margin_right, margin_top, margin_bottom = 70, 190, 30, 60
    plot_w = width - margin_left - margin_right
    plot_h = height - margin_top - margin_bottom
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)

    max_radius = 18.0
    min_radius = 4.0
    if sizes:
        size_hi = max(sizes)
        if size_hi <= 0:
            raise FigureError(f"size column {size!r} must contain a positive value")

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
        # axes
        f'<line x1="{margin_left}" y1="{margin_top + plot_h}" x2="{margin_left + plot_w}" '
        f'y2="{margin_top + plot_h}" stroke="#333333" stroke-width="1"/>',
        f'<line x1="{margin_left}" y1="{margin_top}" x2="{margin_left}" '
        f'y2="{margin_top + plot_h}" stroke="#333333" stroke-width="1"/>',
        f'<text x="{margin_left + plot_w / 2:.1f}" y="{height - 15}" {_FONT} '
        f'font-size="14" text-anchor="middle" class="axis-label">{escape(x)}</text>',
        f'<text x="18" y="{margin_top + plot_h / 2:.1f}" {_FONT} font-size="14" '
        f'text-anchor="middle" class="axis-label" '
        f'transform="rotate(-90 18 {margin_top + plot_h / 2:.1f})">{escape(y)}</text>',
        # extent ticks
        f'<text x="{margin_left}" y="{margin_top + plot_h + 18}" {_FONT} font-size="11" '
        f'text-anchor="middle">{x_lo:g}</text>',
        f'<text x="{margin_left + plot_w}" y="{margin_top + plot_h + 18}" {_FONT} '
        f'font-size="11" text-anchor="middle">{x_hi:g}</text>',
        f'<text x="{margin_left - 8}" y="{margin_top + plot_h + 4}" {_FONT} font-size="11" '
        f'text-anchor="end">{y_lo:g}</text>',
        f'<text x="{margin_left - 8}" y="{margin_top + 4}" {_FONT} font-size="11" '
        f'text-anchor="end">{y_hi:g}</text>',
    ]

    pad = max_radius + 4
    for i, model in enumerate(table.models):
        cx = _scale(xs[i], x_lo, x_hi, margin_left + pad, margin_left + plot_w - pad)
        cy = _scale(ys[i], y_lo, y_hi, margin_top + plot_h - pad, margin_top + pad)
        if sizes:
            radius = max_radius * (sizes[i] / size_hi) ** 0.5  # area tracks the value
            radius = max(radius, min_radius)
        else:
            radius = 9.0
        if colors:
            c_lo, c_hi = min(colors), max(colors)
            t = 0.5 if c_hi == c_lo else (colors[i] - c_lo) / (c_hi - c_lo)
            fill = _ramp(t, (255, 237, 160), (128, 0, 38))
        else:
            fill = "#3b6fb5"
        attrs = [
            'class="marker"',
            f'cx="{cx:.2f}"',
            f'cy="{cy:.2f}"',
            f'r="{radius:.2f}"',
            f'fill="{fill}"',
            'fill-opacity="0.85"',
            'stroke="#222222"',
            f"data-model={quoteattr(model)}",
            f'data-x="{xs[i]:g}"',
            f'data-y="{ys[i]:g}"',
        ]
        if sizes:
            attrs.append(f'data-size="{sizes[i]:g}"')
        if colors:
            attrs.append(f'data-color="{colors[i]:g}"')
        parts.append("<circle " + " ".join(attrs) + "/>")
        parts.append(
            f'<text x="{cx:.2f}" y="{cy - radius - 4:.2f}" {_FONT} font-size="11" '
            f'text-anchor="middle">{escape(model)}</text>'
        )

    legend_x = margin_left + plot_w + 18
    legend_y = margin_top + 10
    parts.append(
        f'<text x="{legend_x}" y="{legend_y - 2}" {_FONT} font-size="12" '
        f'font-weight="bold">Models</text>'
    )
    for i, model in enumerate(table.models):
        row_y = legend_y + 18 * (i + 1)
        parts.append(
            f'<text x="{legend_x}" y="{row_y}" {_FONT} font-size="12" '
            f'class="legend">{escape(model)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def svg_heatmap(matrix: CorrelationMatrix, *, cell: int = 72) -> str:
    """Correlation heat map with each cell annotated to 2 decimals."""
    n = len(matrix.labels)
    if n == 0:
        raise FigureError("empty correlation matrix")
    margin_left, margin_top = 130, 110
    width = margin_left + n * cell + 20
    height = margin_top + n * cell + 20

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for j, label in enumerate(matrix.labels):
        x = margin_left + j * cell + cell / 2
        parts.append(
            f'<text x="{x:.1f}" y="{margin_top - 10}" {_FONT} font-size="12" '
            f'text-anchor="start" transform="rotate(-45 {x:.1f} {margin_top - 10})">'
            f"{escape(label)}</text>"
        )
    for i, label in enumerate(matrix.labels):
        y = margin_top + i * cell + cell / 2 + 4
        parts.append(
            f'<text x="{margin_left - 8}" y="{y:.1f}" {_FONT} font-size="12" '
            f'text-anchor="end">{escape(label)}</text>'
        )
    for i in range(n):
        for j in range(n):
            value = matrix.r[i][j]
            x = margin_left + j * cell
            y = margin_top + i * cell
            parts.append(
                f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                f'fill="{_diverging(value)}" stroke="#ffffff" stroke-width="1"/>'
            )
            text_fill = "#ffffff" if abs(value) > 0.6 else "#111111"
            parts.append(
                f'<text x="{x + cell / 2}" y="{y + cell / 2 + 4}" {_FONT} font-size="13" '
                f'text-anchor="middle" fill="{text_fill}" class="cell" '
                f"data-row={quoteattr(matrix.labels[i])} "
                f"data-col={quoteattr(matrix.labels[j])}>{value:.2f}</text>"
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
