"""Report construction and rendering for the command-line tool.

Builders return plain nested dicts in which every exact scalar is a
``Fraction`` and every count is an ``int``.  :func:`render_json` and
:func:`render_text` turn those into output, writing rationals as
``"p/q"`` strings or, with ``as_float``, as floats.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .classify import classify_raw
from .dispersion import NoWave, QUARTIC_KEYS, QuarticForm, fresnel_scalar, plane_wave_solve, quartic_of
from .dyadic import Dyadic, inverse, modified
from .errors import NoInverse
from .exterior import CONVENTION, MultiForm, MultiVector, wedge
from .media import Case1, decompose_hehl_obukhov, invert_case1
from .specfile import FORMAT_VERSION, recipe_to_dict

REPORT_VERSION = 1


def _q(x) -> Fraction:
    return Fraction(x)


def _matrix(d: Dyadic):
    return [[_q(x) for x in row] for row in d.matrix]


def _coords(x):
    return [_q(c) for c in x.coords]


def _value(v):
    if isinstance(v, Dyadic):
        return _matrix(v)
    if isinstance(v, (MultiVector, MultiForm)):
        return _coords(v)
    return _q(v)


def _recipe(recipe) -> dict:
    # recipe_to_dict already writes exact strings; keep them as Fractions here
    out = {"kind": recipe.kind}
    for k, v in recipe_to_dict(recipe).items():
        if k != "kind":
            out[k] = _parse_back(v)
    return out


def _parse_back(v):
    if isinstance(v, list):
        return [_parse_back(x) for x in v]
    return Fraction(v)


def _header(kind: str, recipe) -> dict:
    return {
        "report": kind,
        "report_version": REPORT_VERSION,
        "format_version": FORMAT_VERSION,
        "tool_version": __version__,
        "input": _recipe(recipe),
    }


def quartic_block(q: QuarticForm) -> dict:
    """Monomial coefficients keyed by index label (``"1123"`` is ``ν1²ν2ν3``)."""
    mono = q.monomials()
    return {QuarticForm.key_label(k): _q(mono[k]) for k in QUARTIC_KEYS}


def classify_report(recipe) -> dict:
    m = recipe.build()
    verdict = classify_raw(m)
    q = quartic_of(m)
    ho = decompose_hehl_obukhov(m)
    rep = _header("classify", recipe)
    rep["classification"] = {
        "dispersion_free": verdict.dispersion_free,
        "class": verdict.tag,
        "table_row": verdict.table_row,
        "discriminator": verdict.discriminator,
        "inverse_class": verdict.inverse_tag,
        "inverse_table_row": verdict.inverse_row,
        "parameters": {k: _q(v) for k, v in verdict.params.items()},
        "recovered_recipe": _recipe(verdict.recipe) if verdict.recipe is not None else None,
        "notes": list(verdict.notes),
    }
    rep["quartic"] = quartic_block(q)
    rep["nonzero_coefficients"] = sum(1 for v in rep["quartic"].values() if v)
    rep["decomposition"] = {
        "principal": _matrix(ho.principal),
        "skewon": _matrix(ho.skewon),
        "axion_scalar": _q(ho.axion_scalar),
    }
    try:
        rep["inverse"] = {"exists": True, "matrix": _matrix(inverse(m))}
    except NoInverse as exc:
        rep["inverse"] = {"exists": False, "reason": str(exc), "rank": exc.rank}
    return rep


def invert_report(recipe) -> tuple[dict, bool]:
    """Inverse data; the flag is False when no inverse exists."""
    rep = _header("invert", recipe)
    if isinstance(recipe, Case1):
        rep["path"] = "case-1 formula"
        try:
            inv = invert_case1(recipe.Pi, recipe.Lam, recipe.C, recipe.D, recipe.alpha)
        except NoInverse as exc:
            rep["inverse"] = {"exists": False, "reason": str(exc), "determinant": _q(exc.determinant)}
            return rep, False
        out = Case1(recipe.Pi, recipe.Lam, inv.C, inv.D, inv.alpha)
        rep["inverse"] = {"exists": True, "determinant": _q(inv.determinant), "recipe": _recipe(out),
                          "matrix": _matrix(out.build())}
        return rep, True
    rep["path"] = "generic exact inverse"
    try:
        rep["inverse"] = {"exists": True, "matrix": _matrix(inverse(recipe.build()))}
    except NoInverse as exc:
        rep["inverse"] = {"exists": False, "reason": str(exc), "rank": exc.rank}
        return rep, False
    return rep, True


def wave_report(recipe, nu: MultiForm) -> tuple[dict, bool]:
    m = recipe.build()
    result = plane_wave_solve(m, nu)
    rep = _header("wave", recipe)
    rep["nu"] = _coords(nu)
    rep["fresnel_scalar"] = _q(fresnel_scalar(modified(m), nu))
    rep["null_dimension"] = result.null_dimension
    if isinstance(result, NoWave):
        rep["wave"] = {"found": False, "reason": result.reason}
        return rep, False
    rep["wave"] = {
        "found": True,
        "phi": _coords(result.phi),
        "Phi": _coords(result.Phi),
        "Psi": _coords(result.Psi),
        "checks": {
            "nu_wedge_Phi_zero": wedge(nu, result.Phi).is_zero(),
            "nu_wedge_Psi_zero": wedge(nu, result.Psi).is_zero(),
        },
    }
    return rep, True


def conventions_report() -> dict:
    from .classify import DEFAULT_PROBES
    from .dispersion import POLARIZATION_POINTS
    from .dyadic import ENI2T, VENI2
    from .exterior import WEDGE_TABLES, label, BASIS

    def table(k, l):
        return [[label(BASIS[k][i]), label(BASIS[l][j]), label(BASIS[k + l][o]), s]
                for i, j, o, s in WEDGE_TABLES[k, l]]

    return {
        "report": "conventions",
        "report_version": REPORT_VERSION,
        "format_version": FORMAT_VERSION,
        "tool_version": __version__,
        "conventions": CONVENTION.as_dict(),
        "contraction_sign_s": CONVENTION.contraction_sign,
        "complement_matrices": {
            "e_N hook on two-forms (E2E2)": _matrix(ENI2T),
            "eps_N hook on bivectors (F2F2)": _matrix(VENI2),
        },
        "wedge_tables": {f"{k}^{l}": table(k, l) for k, l in ((1, 1), (1, 2), (2, 2), (1, 3))},
        "polarization_points": [list(p) for p in POLARIZATION_POINTS],
        "discriminator_probes": [list(p.coords) for p in DEFAULT_PROBES],
    }


# ------------------------------------------------------------------ rendering

def _plain(obj, as_float: bool):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return float(obj) if as_float else str(obj)
    if isinstance(obj, dict):
        return {k: _plain(v, as_float) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v, as_float) for v in obj]
    raise TypeError(f"cannot render {type(obj).__name__}")


def render_json(report: dict, as_float: bool = False) -> str:
    return json.dumps(_plain(report, as_float), indent=2, ensure_ascii=False) + "\n"


def _is_matrix(v):
    return isinstance(v, list) and v and all(isinstance(r, list) for r in v)


def _text(obj, indent: int, lines: list):
    pad = "  " * indent
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            _text(val, indent + 1, lines)
        elif _is_matrix(val):
            lines.append(f"{pad}{key}:")
            width = max(len(str(x)) for r in val for x in r)
            lines.extend(f"{pad}  [" + " ".join(str(x).rjust(width) for x in r) + "]" for r in val)
        elif isinstance(val, list):
            lines.append(f"{pad}{key}: [" + ", ".join(str(x) for x in val) + "]")
        else:
            lines.append(f"{pad}{key}: {'-' if val is None else val}")


def render_text(report: dict, as_float: bool = False) -> str:
    plain = _plain(report, as_float)
    if "quartic" in plain:
        # only nonzero monomials in text form; JSON keeps all 35
        nonzero = {k: v for k, v in plain["quartic"].items() if v not in ("0", 0.0)}
        plain["quartic"] = nonzero or {"all 35 coefficients": "0"}
    lines: list[str] = []
    _text(plain, 0, lines)
    return "\n".join(lines) + "\n"
