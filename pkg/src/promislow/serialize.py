"""Canonical JSON and text forms of group ring elements.

JSON layout::

    {"d":2,"t":0,"w":0,"n":1,"components":{"1":[[1,[0,0,0]],...],"a":[...],"b":[...],"c":[...]}}

Each component lists ``[coefficient, [i, j, k]]`` pairs with coefficients in
``[1, d)`` and exponent triples strictly ascending in lex order.  Output is
compact and byte-stable.
"""

from __future__ import annotations

import json
from typing import Tuple

from .group_ring import COSETS, GroupRingElem
from .laurent import LaurentPoly, parse, render
from .prime_field import FieldCtx
from .units import UnitParams


def to_document(u: GroupRingElem, params: UnitParams) -> dict:
    if u.ctx.d != params.d:
        raise ValueError(f"element lives over GF({u.ctx.d}) but params say d={params.d}")
    return {
        "d": params.d,
        "t": params.t,
        "w": params.w,
        "n": params.n,
        "components": {
            name: [[c, list(e)] for c, e in comp.raw_terms()]
            for name, comp in zip(COSETS, u.components)
        },
    }


def dumps(u: GroupRingElem, params: UnitParams) -> str:
    return json.dumps(to_document(u, params), separators=(",", ":")) + "\n"


def from_document(doc: dict) -> Tuple[UnitParams, GroupRingElem]:
    params = UnitParams(doc["d"], doc["t"], doc["w"], doc["n"])
    ctx = params.ctx
    comps = doc["components"]
    if sorted(comps) != sorted(COSETS):
        raise ValueError(f"components must be exactly {COSETS}, got {sorted(comps)}")
    parts = []
    for name in COSETS:
        terms = {}
        prev = None
        for entry in comps[name]:
            c, e = entry
            e = tuple(e)
            if not (isinstance(c, int) and 1 <= c < ctx.d):
                raise ValueError(f"coefficient {c} outside [1, {ctx.d})")
            if len(e) != 3 or not all(isinstance(v, int) for v in e):
                raise ValueError(f"bad exponent triple {e!r}")
            if prev is not None and e <= prev:
                raise ValueError(f"exponents in component {name!r} not strictly ascending at {e}")
            prev = e
            terms[e] = c
        parts.append(LaurentPoly(ctx, terms))
    return params, GroupRingElem(*parts)


def loads(text: str) -> Tuple[UnitParams, GroupRingElem]:
    return from_document(json.loads(text))


def to_text(u: GroupRingElem) -> str:
    return "".join(f"{name}: {render(comp)}\n" for name, comp in zip(COSETS, u.components))


def from_text(text: str, ctx: FieldCtx) -> GroupRingElem:
    parts = {}
    for line in text.strip().splitlines():
        name, _, body = line.partition(":")
        name = name.strip()
        if name not in COSETS or name in parts:
            raise ValueError(f"unexpected component label {name!r}")
        parts[name] = parse(body, ctx)
    if len(parts) != 4:
        raise ValueError("expected four labeled lines 1, a, b, c")
    return GroupRingElem(*(parts[name] for name in COSETS))
