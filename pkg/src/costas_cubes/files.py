"""Text file formats for permutations and cubes.

Array files hold one permutation per line as whitespace-separated
1-based values; lines starting with '#' and blank lines are ignored.

Cube files are either a JSON document {"order": n, "triples": [[i, j, k],
...]} (extra keys ignored) or plain text with one "i j k" line per row,
with the same comment convention.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .core import CostasCube, Permutation


def parse_array_file(text: str) -> list[Permutation]:
    perms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = tuple(int(tok) for tok in line.split())
            perms.append(Permutation(values))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not perms:
        raise ValueError("no permutations found")
    return perms


def emit_array_file(perms: Iterable[Permutation], comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.extend(" ".join(map(str, p.values)) for p in perms)
    return "\n".join(lines) + "\n"


def parse_cube_file(text: str) -> CostasCube:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad JSON cube file: {exc}") from None
        triples = doc.get("triples")
        if not isinstance(triples, list):
            raise ValueError('JSON cube file needs a "triples" list')
        clean = []
        for t in triples:
            if not (isinstance(t, list) and len(t) == 3 and all(isinstance(x, int) for x in t)):
                raise ValueError(f"bad triple {t!r}")
            clean.append((t[0], t[1], t[2]))
        cube = CostasCube.from_triples(clean)
        order = doc.get("order")
        if order is not None and order != cube.order:
            raise ValueError(f"declared order {order} does not match {cube.order} triples")
        return cube
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 3:
            raise ValueError(f"line {lineno}: expected 'i j k', got {line!r}")
        try:
            triples.append((int(toks[0]), int(toks[1]), int(toks[2])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer coordinate in {line!r}") from None
    if not triples:
        raise ValueError("no triples found")
    return CostasCube.from_triples(triples)


def emit_cube_file(cube: CostasCube, fmt: str = "text", comments: Sequence[str] = ()) -> str:
    if fmt == "machine":
        doc = {"order": cube.order, "triples": [list(t) for t in cube.triples()]}
        return json.dumps(doc, sort_keys=True) + "\n"
    lines = [f"# {c}" for c in comments]
    lines.append(f"# order {cube.order}")
    lines.extend(f"{i} {j} {k}" for i, j, k in cube.triples())
    return "\n".join(lines) + "\n"
