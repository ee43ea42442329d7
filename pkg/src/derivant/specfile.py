"""Group spec files.

Two forms, one per file.  Explicit generators::

    # D8 on the square
    degree 4
    (1 2 3 4)
    (1 3)

or a named family with ``key=value`` parameters::

    family agl d=2 q=3
    family wreath base=d8.grp k=2

Blank lines and ``#`` comments are ignored.  Parameters naming another spec
(``base=``, ``a=``, ``b=``, ``of=``) are file paths relative to the spec file;
``data_file`` reads a matrix generator file (``path=``) or a shipped one
(``name=``).  The ambient shorthand ``sym:<n>`` is also accepted wherever a
spec is expected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from . import constructors as C
from .errors import ParseError
from .group import PermGroup
from .perm import parse_cycles

# family -> (required params, optional params); int unless noted in _STR
FAMILIES: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "cyclic": (("n",), ()),
    "dihedral": (("order",), ()),
    "symmetric": (("n",), ()),
    "alternating": (("n",), ()),
    "quaternion": ((), ()),
    "direct": (("a", "b"), ()),
    "wreath": (("base", "k"), ()),
    "central_product": ((), ()),
    "extraspecial2": (("m",), ("sign",)),
    "metacyclic": (("m", "n", "r"), ()),
    "out_group": (("d", "f", "p"), ()),
    "agl": (("d", "q"), ()),
    "asl": (("d", "q"), ()),
    "agammal1": (("q",), ()),
    "affine_squares": (("q",), ()),
    "translations": (("d", "q"), ()),
    "gl": (("d", "q"), ()),
    "sl": (("d", "q"), ()),
    "psl": (("d", "q"), ()),
    "pgl": (("d", "q"), ()),
    "pgammal": (("d", "q"), ()),
    "holomorph": ((), ("of", "p", "d", "n")),
    "aut_psl3": ((), ("q",)),
    "case5": (("name",), ()),
    "data_file": ((), ("path", "name", "action")),
}
_STR = {"a", "b", "base", "of", "sign", "path", "name", "action"}
_SPEC_REFS = {"a", "b", "base", "of"}


@dataclass
class GroupSpec:
    """Declarative description of a group; ``build()`` makes it concrete."""

    degree: int | None = None
    generators: list[str] = field(default_factory=list)
    family: str | None = None
    params: dict[str, object] = field(default_factory=dict)
    source: str = "<string>"
    base_dir: Path | None = None

    def build(self) -> PermGroup:
        if self.family is None:
            gens = [parse_cycles(g, self.degree) for g in self.generators] or []
            return PermGroup(gens, self.degree, name=Path(self.source).stem if self.source != "<string>" else None)
        return _build_family(self)


def _coerce(key: str, value: str, line: int, column: int):
    if key in _STR:
        return value
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"parameter {key} needs an integer, got {value!r}", line, column) from None


def parse_spec(text: str, source: str = "<string>", base_dir: Path | None = None) -> GroupSpec:
    spec = GroupSpec(source=source, base_dir=base_dir)
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        if spec.family is not None:
            raise ParseError("nothing may follow a family line", ln, col0)
        if stripped.startswith("degree"):
            if spec.degree is not None:
                raise ParseError("duplicate degree line", ln, col0)
            m = re.fullmatch(r"degree\s+(\d+)", stripped)
            if not m or int(m.group(1)) < 1:
                raise ParseError("expected 'degree <positive integer>'", ln, col0)
            spec.degree = int(m.group(1))
        elif stripped.startswith("family"):
            if spec.degree is not None:
                raise ParseError("a spec is either explicit or a family, not both", ln, col0)
            _parse_family(spec, line, ln)
        elif stripped.startswith("("):
            if spec.degree is None:
                raise ParseError("generator before the degree line", ln, col0)
            try:
                parse_cycles(line, spec.degree)
            except ParseError as exc:
                raise ParseError(str(exc).rsplit(" (", 1)[0], ln, exc.column) from None
            spec.generators.append(stripped)
        else:
            raise ParseError(f"unrecognized line {stripped[:20]!r}", ln, col0)
    if spec.family is None and spec.degree is None:
        raise ParseError("empty spec: expected a degree or family line", 1, 1)
    return spec


def _parse_family(spec: GroupSpec, line: str, ln: int) -> None:
    toks = [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]
    if len(toks) < 2:
        raise ParseError("expected 'family <name> key=value ...'", ln, toks[0][1])
    name, col = toks[1]
    if name not in FAMILIES:
        raise ParseError(f"unknown family {name!r}", ln, col)
    required, optional = FAMILIES[name]
    params = {}
    for tok, col in toks[2:]:
        if "=" not in tok:
            raise ParseError(f"expected key=value, got {tok!r}", ln, col)
        k, v = tok.split("=", 1)
        if k not in required and k not in optional:
            raise ParseError(f"family {name} has no parameter {k!r}", ln, col)
        if k in params:
            raise ParseError(f"parameter {k} given twice", ln, col)
        params[k] = _coerce(k, v, ln, col)
    missing = [k for k in required if k not in params]
    if missing:
        raise ParseError(f"family {name} is missing {', '.join(missing)}", ln, toks[1][1])
    spec.family, spec.params = name, params


def load_spec(path) -> GroupSpec:
    text = str(path)
    m = re.fullmatch(r"sym:(\d+)", text)
    if m:
        return GroupSpec(family="symmetric", params={"n": int(m.group(1))}, source=text)
    p = Path(path)
    try:
        body = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc.strerror}") from None
    try:
        return parse_spec(body, str(p), p.parent)
    except ParseError as exc:
        exc.args = (f"{p}: {exc.args[0]}",)
        raise


def load_group(path) -> PermGroup:
    return load_spec(path).build()


def _sub(spec: GroupSpec, key: str) -> PermGroup:
    ref = spec.params[key]
    base = spec.base_dir or Path(".")
    target = ref if ref.startswith("sym:") else base / ref
    return load_group(target)


def _build_family(spec: GroupSpec) -> PermGroup:
    f, P = spec.family, spec.params
    try:
        if f in ("cyclic", "symmetric", "alternating"):
            return getattr(C, f)(P["n"])
        if f == "dihedral":
            return C.dihedral(P["order"])
        if f == "quaternion":
            return C.quaternion()
        if f == "direct":
            return C.direct_product(_sub(spec, "a"), _sub(spec, "b"))
        if f == "wreath":
            return C.wreath_imprimitive(_sub(spec, "base"), P["k"])
        if f == "central_product":
            return C.central_product_d8_q8()
        if f == "extraspecial2":
            return C.extraspecial2(P["m"], P.get("sign", "+"))
        if f == "metacyclic":
            return C.metacyclic(P["m"], P["n"], P["r"])
        if f == "out_group":
            return C.out_group(P["d"], P["f"], P["p"])
        if f in ("agl", "asl", "translations", "gl", "sl", "psl", "pgl", "pgammal"):
            return getattr(C, f)(P["d"], P["q"])
        if f in ("agammal1", "affine_squares"):
            return getattr(C, f)(P["q"])
        if f == "holomorph":
            if "of" in P:
                return C.holomorph(_sub(spec, "of"))
            if "n" in P:
                return C.holomorph_cyclic(P["n"])
            if "p" in P and "d" in P:
                return C.holomorph_elementary(P["p"], P["d"])
            raise ValueError("holomorph needs of=, n=, or p= and d=")
        if f == "aut_psl3":
            return C.aut_psl3_on_points_and_lines(P.get("q", 7))
        if f == "case5":
            return C.case5_witnesses([P["name"]])[P["name"]]
        if f == "data_file":
            return _data_file(spec)
    except (ValueError, KeyError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"{spec.source}: family {f}: {exc}") from None
    raise AssertionError(f"family {f} not wired")


def _data_file(spec: GroupSpec) -> PermGroup:
    from .datafiles import load_matrices, load_shipped

    P = spec.params
    if ("path" in P) == ("name" in P):
        raise ValueError("data_file needs exactly one of path= or name=")
    action = P.get("action", "affine")
    if "name" in P:
        data = load_shipped(P["name"])
    else:
        data = load_matrices((spec.base_dir or Path(".")) / P["path"])
    F, d = data.field, data.d
    if action == "affine":
        return C.affine_from_matrices(F, d, data.matrices,
                                      F.q**d * data.order if data.order else None, data.name or None)
    if action == "linear":
        return C.linear_from_matrices(F, d, data.matrices, data.order, data.name or None)
    raise ValueError(f"unknown action {action!r} (affine or linear)")
