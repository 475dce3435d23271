"""Report serialization: canonical JSON, TSV summaries, DOT graphs and
matplotlib quiver diagrams.

Reports serialize deterministically (sorted keys, canonical scalar
text), so identical inputs yield byte-identical output; wall-clock
timings are therefore kept out of the report body.
"""

import json
import os


def canonical_json(obj):
    return json.dumps(_plain(obj), sort_keys=True, indent=2,
                      separators=(",", ": ")) + "\n"


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    return str(obj)


def emit_dot(quiver, name="quiver"):
    """DOT text: one node per vertex, one edge per arrow, stable order."""
    lines = [f"digraph {name} {{"]
    for v in quiver.vertices:
        lines.append(f'  "{v}";')
    for aname, s, t in quiver.arrows:
        lines.append(f'  "{quiver.vertices[s]}" -> "{quiver.vertices[t]}" '
                     f'[label="{aname}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _flatten(obj, prefix=""):
    rows = []
    if isinstance(obj, dict):
        for k in sorted(obj, key=str):
            rows.extend(_flatten(obj[k], f"{prefix}{k}."))
    elif isinstance(obj, (list, tuple)):
        rows.append((prefix.rstrip("."), json.dumps(_plain(obj), sort_keys=True)))
    else:
        rows.append((prefix.rstrip("."), str(_plain(obj))))
    return rows


def summary_tsv(report):
    rows = _flatten(report)
    return "".join(f"{k}\t{v}\n" for k, v in rows)


def _vertex_positions(quiver):
    """Grid layout when vertex names look like "(i,j)", circle otherwise."""
    import math
    pos = {}
    parsed = []
    for v in quiver.vertices:
        txt = v.strip()
        if txt.startswith("(") and txt.endswith(")") and "," in txt:
            a, b = txt[1:-1].split(",", 1)
            try:
                parsed.append((float(int(a)), float(int(b))))
                continue
            except ValueError:
                pass
        parsed = None
        break
    n = len(quiver.vertices)
    for k, v in enumerate(quiver.vertices):
        if parsed is not None:
            i, j = parsed[k]
            pos[v] = (i, -j)
        else:
            ang = 2 * math.pi * k / max(n, 1)
            pos[v] = (math.cos(ang), math.sin(ang))
    return pos


def render_quiver(quiver, path, title=""):
    """Draw the quiver to an image file (PNG) with matplotlib."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    pos = _vertex_positions(quiver)
    fig, ax = plt.subplots(figsize=(7, 5))
    for aname, s, t in quiver.arrows:
        x1, y1 = pos[quiver.vertices[s]]
        x2, y2 = pos[quiver.vertices[t]]
        if (x1, y1) == (x2, y2):  # loop
            ax.annotate("", xy=(x1 + 0.12, y1 + 0.12), xytext=(x1 - 0.12, y1 + 0.12),
                        arrowprops=dict(arrowstyle="->", color="tab:blue",
                                        connectionstyle="arc3,rad=1.6"))
            ax.text(x1, y1 + 0.3, aname, fontsize=7, ha="center", color="tab:blue")
            continue
        ax.annotate("", xy=(x2, y2), xytext=(x1, y1),
                    arrowprops=dict(arrowstyle="->", color="tab:blue",
                                    shrinkA=12, shrinkB=12,
                                    connectionstyle="arc3,rad=0.08"))
        ax.text((x1 + x2) / 2, (y1 + y2) / 2, aname, fontsize=7,
                ha="center", color="tab:gray")
    for v, (x, y) in pos.items():
        ax.plot([x], [y], "o", color="black", markersize=4)
        ax.text(x, y + 0.08, v, fontsize=9, ha="center")
    ax.set_title(title)
    ax.set_axis_off()
    ax.margins(0.15)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report_dir(directory, report, quiver=None, title=""):
    """Write report.json, summary.tsv and (if a quiver is given) quiver.png."""
    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, "report.json"), "w") as fh:
        fh.write(canonical_json(report))
    with open(os.path.join(directory, "summary.tsv"), "w") as fh:
        fh.write(summary_tsv(report))
    if quiver is not None:
        render_quiver(quiver, os.path.join(directory, "quiver.png"), title)
