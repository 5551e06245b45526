"""Parsing of group spec strings.

Grammar: `<FAMILY><RANK>` optionally followed by `:sc`, `:adj`, or
`:pi1=[v1;v2;...]` where each v is a comma-separated integer vector in
fundamental-weight coordinates.  No suffix means simply connected.
"""

from __future__ import annotations

import re

from . import lattices, rootdata
from .lattices import GroupSpec


class GroupSpecParseError(ValueError):
    """Invalid spec string; `position` is the byte offset of the problem."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at offset {position})")


_HEAD = re.compile(r"([A-G])([0-9]+)")
_PI1 = re.compile(r":pi1=\[(.*)\]$")


def parse_group_spec(text: str) -> GroupSpec:
    m = _HEAD.match(text)
    if not m:
        raise GroupSpecParseError(
            f"expected a family letter A-G followed by a rank, got {text!r}", 0
        )
    try:
        lie_type = rootdata.LieType(m.group(1), int(m.group(2)))
    except ValueError as exc:
        raise GroupSpecParseError(str(exc), 1) from exc
    rs = rootdata.build_root_system(lie_type)
    rest = text[m.end() :]
    if rest in ("", ":sc"):
        return lattices.group_spec(rs, ())
    if rest == ":adj":
        return lattices.adjoint_spec(rs)
    pm = _PI1.match(rest)
    if pm:
        generators = []
        body = pm.group(1)
        if body.strip():
            for chunk in body.split(";"):
                try:
                    vec = tuple(int(x) for x in chunk.split(","))
                except ValueError as exc:
                    offset = m.end() + len(":pi1=[") + pm.group(1).find(chunk)
                    raise GroupSpecParseError(
                        f"bad integer vector {chunk!r}", offset
                    ) from exc
                if len(vec) != lie_type.rank:
                    raise GroupSpecParseError(
                        f"generator {chunk!r} has length {len(vec)}, "
                        f"expected rank {lie_type.rank}",
                        m.end(),
                    )
                generators.append(vec)
        return lattices.group_spec(rs, generators)
    raise GroupSpecParseError(
        f"expected ':sc', ':adj' or ':pi1=[...]', got {rest!r}", m.end()
    )


def describe_form(g: GroupSpec) -> str:
    if g.weight_basis:
        return "adj"
    if lattices.is_simply_connected(g):
        return "sc"
    if lattices.is_adjoint(g):
        return "adj"
    return "pi1=[" + ";".join(",".join(map(str, v)) for v in g.pi1_generators) + "]"


def canonical_spec_string(g: GroupSpec) -> str:
    return f"{g.root_system.lie_type}:{describe_form(g)}"
