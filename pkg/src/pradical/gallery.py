"""Named instances with a frozen table of expected verdicts.

The expected table lives in ``data/gallery_expected.json`` and is compared
field by field with freshly computed rows.
"""
from __future__ import annotations

import json
from importlib import resources
from typing import Callable

from . import fgmod, symmod
from .analysis import analyze
from .fgmod import FinPresModule
from .rings import ideal, integers, is_prime_ideal, zloc
from .spectop import psi_image

COLUMNS = (
    "module",
    "primeful",
    "pradical",
    "colon",
    "mradical",
    "fullsemisimple",
    "primeless",
    "psi_image",
    "pradical_failing",
    "radical_colon_at_0",
    "radical_formula_at_ann",
)

INSTANCES: dict[str, Callable[[], object]] = {
    "example_2_6": lambda: symmod.construct_prop27(integers()),
    "example_3_2_M1": lambda: symmod.simple_family_module(integers(), [2]),
    "thm_2_11_Zloc5": lambda: symmod.construct_thm211(zloc(5)),
    "pruefer_Z5": lambda: symmod.pruefer_module(integers(), 5),
    "cyclic_Z12": lambda: FinPresModule.cyclic(integers(), 12),
    "Z_plus_Z4": lambda: FinPresModule.direct_sum(integers(), [0, 4]),
}


def _radical_colon_at_0(m) -> str:
    if isinstance(m, FinPresModule):
        return str(fgmod.colon(fgmod.prime_radical(m.zero())))
    if not is_prime_ideal(ideal(m.ring, 0)):
        return "n/a"
    return str(symmod.radical_colon(m, 0))


def _radical_formula_at_ann(m) -> str:
    if not isinstance(m, FinPresModule):
        return "n/a"
    return "holds" if fgmod.check_radical_formula(m, fgmod.ann(m)) else "fails"


def compute_row(name: str) -> dict:
    m = INSTANCES[name]()
    rows = {r.property: r for r in analyze(m)}
    pr = rows["pradical"].certificate
    return {
        "module": str(m) if not isinstance(m, FinPresModule) else f"{m.structure()} over {m.ring}",
        "primeful": rows["primeful"].mark,
        "pradical": rows["pradical"].mark,
        "colon": rows["colon"].mark,
        "mradical": rows["mradical"].mark,
        "fullsemisimple": rows["fullsemisimple"].mark,
        "primeless": rows["primeless"].mark,
        "psi_image": str(psi_image(m)),
        "pradical_failing": [c.label() for c in pr.failing()],
        "radical_colon_at_0": _radical_colon_at_0(m),
        "radical_formula_at_ann": _radical_formula_at_ann(m),
    }


def compute() -> dict[str, dict]:
    return {name: compute_row(name) for name in INSTANCES}


def expected() -> dict[str, dict]:
    text = resources.files("pradical").joinpath("data/gallery_expected.json").read_text()
    return json.loads(text)["rows"]


def compare(got: dict[str, dict], want: dict[str, dict]) -> list[str]:
    """Human-readable mismatches; empty when the tables agree exactly."""
    out = []
    for name in sorted(set(got) | set(want)):
        if name not in got or name not in want:
            out.append(f"{name}: present on one side only")
            continue
        for col in COLUMNS:
            if got[name].get(col) != want[name].get(col):
                out.append(f"{name}.{col}: got {got[name].get(col)!r}, expected {want[name].get(col)!r}")
    return out


def render(rows: dict[str, dict]) -> str:
    """Fixed-column text table, one block per instance."""
    lines = []
    width = max(len(c) for c in COLUMNS)
    for name in rows:
        lines.append(f"[{name}]")
        for col in COLUMNS:
            v = rows[name][col]
            if isinstance(v, list):
                v = ", ".join(v) if v else "-"
            lines.append(f"  {col:<{width}}  {v}")
    return "\n".join(lines)


__all__ = ["COLUMNS", "INSTANCES", "compute", "compute_row", "expected", "compare", "render"]
