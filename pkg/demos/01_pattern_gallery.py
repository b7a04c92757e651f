"""
Gallery of the built-in beat patterns
=====================================

Loads each built-in pattern (2, 3, 4 and 6 beats), runs the validator on it,
and renders a labeled SVG diagram.  Preparations are drawn as open circles,
icti as filled discs; the curve closes on itself and every anchor sits at a
vertical extremum of the trajectory.
"""

from pathlib import Path

from baton import RenderOptions, default_document, render_curve, validate_pattern

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

opts = RenderOptions(width=800, height=600, show_labels=True)

for beats in (2, 3, 4, 6):
    doc = default_document(beats)
    report = validate_pattern(doc.pattern)
    status = "ok" if report.ok else "INVALID"
    print(f"{doc.name}: {len(doc.pattern.anchors)} anchors, "
          f"{len(report.warnings)} warning(s), {status}")
    for finding in report.findings:
        print(f"  {finding.severity.value}: {finding.message}")

    path = out_dir / f"pattern_{beats}.svg"
    path.write_text(render_curve(doc.pattern, opts))
    print(f"  wrote {path}")
