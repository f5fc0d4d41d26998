"""CSV and SVG emitters for comparison layers and corpus stats.

Output is deterministic byte-for-byte for identical input: fixed geometry,
fixed field order, no timestamps. The SVG is dependency-light, plain
rectangles and text; geometry constants are documented in docs/schemas.md.
"""
from __future__ import annotations

import csv
import io
from xml.sax.saxutils import escape, quoteattr

from .taxonomy import Taxonomy, techniques_of

# Grid geometry (pixels). Kept in one place so the schema doc stays honest.
CELL_W = 170
CELL_H = 36
CELL_GAP = 4
HEADER_H = 40
PHASE_H = 24
MARGIN = 10

# Shades for heatmap buckets 0..4, light to dark.
BUCKET_SHADES = ("#f7f7f7", "#c6dbef", "#9ecae1", "#6baed6", "#2171b5")
EMPTY_FILL = "#f7f7f7"

PHASE_SPANS = (("Mounting", 0, 3), ("Execution", 3, 3), ("Results", 6, 2))


def is_layers_doc(doc: dict) -> bool:
    return "layers" in doc


def is_stats_doc(doc: dict) -> bool:
    return "grid" in doc and "corpus_size" in doc


def layers_to_csv(doc: dict, taxonomy: Taxonomy) -> str:
    """One row per occupied cell: technique, name, tactic, phase, color, members."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["technique", "name", "tactic", "phase", "color", "members"])
    for layer in doc.get("layers", []):
        technique_id = layer["technique"]
        technique = next(
            (t for t in taxonomy.techniques if t.id == technique_id), None
        )
        name = technique.name if technique else ""
        tactic_id = technique_id.split(".", 1)[0]
        phase = (
            taxonomy.tactic_by_id(tactic_id).phase.value
            if technique else ""
        )
        writer.writerow([
            technique_id, name, tactic_id, phase,
            layer["color"], ";".join(layer["members"]),
        ])
    return out.getvalue()


def stats_to_csv(doc: dict, taxonomy: Taxonomy) -> str:
    """One row per technique (all 47): id, name, tactic, phase, count, bucket."""
    by_id = {cell["technique"]: cell for cell in doc["grid"]}
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["id", "name", "tactic", "phase", "count", "bucket"])
    for tactic in taxonomy.tactics:
        for technique in techniques_of(taxonomy, tactic.id):
            cell = by_id.get(technique.id, {"count": 0, "bucket": 0})
            writer.writerow([
                technique.id, technique.name, tactic.id, tactic.phase.value,
                cell["count"], cell["bucket"],
            ])
    return out.getvalue()


def _svg_text(x: float, y: float, content: str, size: int, anchor: str = "start",
              weight: str = "normal", fill: str = "#1a1a1a") -> str:
    return (
        f'<text x="{x:g}" y="{y:g}" font-size="{size}" '
        f'font-family="Helvetica, Arial, sans-serif" font-weight="{weight}" '
        f'text-anchor="{anchor}" fill="{fill}">{escape(content)}</text>'
    )


def _truncate(name: str, limit: int = 30) -> str:
    return name if len(name) <= limit else name[: limit - 1] + "…"


def matrix_svg(fills: dict, taxonomy: Taxonomy, subtitle: str = "") -> str:
    """The full 8-column matrix with per-technique fill colors.

    fills maps technique-id -> (color, tooltip suffix); untouched cells get
    the neutral fill.
    """
    cols = list(taxonomy.tactics)
    max_rows = max(
        len(techniques_of(taxonomy, tactic.id)) for tactic in cols
    )
    width = MARGIN * 2 + len(cols) * CELL_W + (len(cols) - 1) * CELL_GAP
    height = (
        MARGIN * 2 + PHASE_H + HEADER_H
        + max_rows * (CELL_H + CELL_GAP)
    )
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]

    for phase_name, start, span in PHASE_SPANS:
        x = MARGIN + start * (CELL_W + CELL_GAP)
        w = span * CELL_W + (span - 1) * CELL_GAP
        parts.append(
            f'<rect x="{x}" y="{MARGIN}" width="{w}" height="{PHASE_H - 4}" '
            f'fill="#2b2b2b" rx="3"/>'
        )
        parts.append(_svg_text(
            x + w / 2, MARGIN + (PHASE_H - 4) / 2 + 4, phase_name, 11,
            anchor="middle", weight="bold", fill="#ffffff",
        ))

    header_y = MARGIN + PHASE_H
    for i, tactic in enumerate(cols):
        x = MARGIN + i * (CELL_W + CELL_GAP)
        parts.append(
            f'<rect x="{x}" y="{header_y}" width="{CELL_W}" '
            f'height="{HEADER_H - 6}" fill="#4a4a4a" rx="3"/>'
        )
        parts.append(_svg_text(
            x + CELL_W / 2, header_y + (HEADER_H - 6) / 2 + 4, tactic.name,
            11, anchor="middle", weight="bold", fill="#ffffff",
        ))

    grid_y = header_y + HEADER_H
    for i, tactic in enumerate(cols):
        x = MARGIN + i * (CELL_W + CELL_GAP)
        for row, technique in enumerate(techniques_of(taxonomy, tactic.id)):
            y = grid_y + row * (CELL_H + CELL_GAP)
            fill, note = fills.get(technique.id, (EMPTY_FILL, ""))
            dark = fill in (BUCKET_SHADES[3], BUCKET_SHADES[4], "#2b2b2b")
            tooltip = f"{technique.id} {technique.name}"
            if note:
                tooltip += f" [{note}]"
            parts.append(
                f'<g><title>{escape(tooltip)}</title>'
                f'<rect x="{x}" y="{y}" width="{CELL_W}" height="{CELL_H}" '
                f'fill={quoteattr(fill)} stroke="#9a9a9a" stroke-width="0.5" rx="2"/>'
            )
            parts.append(_svg_text(
                x + 5, y + 14, technique.id, 9, weight="bold",
                fill="#ffffff" if dark else "#1a1a1a",
            ))
            parts.append(_svg_text(
                x + 5, y + 27, _truncate(technique.name), 9,
                fill="#ffffff" if dark else "#333333",
            ))
            parts.append("</g>")

    if subtitle:
        parts.append(_svg_text(MARGIN, height - 4, subtitle, 9, fill="#555555"))

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def layers_to_svg(doc: dict, taxonomy: Taxonomy) -> str:
    fills = {}
    for layer in doc.get("layers", []):
        members = ", ".join(layer["members"])
        fills[layer["technique"]] = (layer["color"], members)
    legend = "; ".join(f"{m}" for m in doc.get("models", []))
    subtitle = f"models: {legend}" if legend else ""
    return matrix_svg(fills, taxonomy, subtitle=subtitle)


def stats_to_svg(doc: dict, taxonomy: Taxonomy) -> str:
    fills = {}
    for cell in doc["grid"]:
        bucket = int(cell["bucket"])
        if cell["count"] > 0:
            fills[cell["technique"]] = (
                BUCKET_SHADES[max(0, min(4, bucket))],
                f"count {cell['count']}, bucket {bucket}",
            )
    subtitle = f"corpus size: {doc['corpus_size']}"
    return matrix_svg(fills, taxonomy, subtitle=subtitle)
