"""Instance and solution serialisation.

Text format (``#`` starts a comment, blank lines are ignored)::

    3          <- node count
    0 1 1      <- edge lines: u v cost
    1 2 2
    0 1        <- requirement lines: v r (missing nodes default to 0)
    1 2
    2 1

JSON format: ``{"n": 3, "edges": [[0, 1, 1], [1, 2, 2]], "requirements": [1, 2, 1]}``.
"""

from __future__ import annotations

import json

from .instance import Instance, InvalidInstanceError, Solution, check_instance, power_profile


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def parse_instance(text: str) -> Instance:
    """Parse either format, then validate."""
    if text.lstrip().startswith("{"):
        return parse_json_instance(text)
    return parse_text_instance(text)


def parse_text_instance(text: str) -> Instance:
    n: int | None = None
    edges: list[tuple[int, int, int]] = []
    reqs: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, f"expected integers, got {line!r}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError(lineno, "first line must be a non-negative node count")
            n = nums[0]
        elif len(nums) == 3:
            u, v, c = nums
            if c < 0:
                raise ParseError(lineno, f"negative cost {c}")
            edges.append((u, v, c))
        elif len(nums) == 2:
            v, r = nums
            if r < 0:
                raise ParseError(lineno, f"negative requirement {r}")
            if v in reqs:
                raise ParseError(lineno, f"second requirement for node {v}")
            reqs[v] = r
        else:
            raise ParseError(lineno, f"expected 'u v cost' or 'v r', got {line!r}")
    if n is None:
        raise ParseError(0, "empty document")
    unknown = sorted(v for v in reqs if not 0 <= v < n)
    if unknown:
        raise InvalidInstanceError([f"requirement for unknown node {v}" for v in unknown])
    return check_instance(Instance(n, edges, [reqs.get(v, 0) for v in range(n)]))


def parse_json_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
        inst = Instance(doc["n"], doc["edges"], doc.get("requirements", [0] * doc["n"]))
    except json.JSONDecodeError as err:
        raise ParseError(err.lineno, err.msg) from None
    except (KeyError, TypeError, ValueError) as err:
        raise ParseError(0, f"malformed instance document: {err}") from None
    return check_instance(inst)


def emit_instance(inst: Instance, fmt: str = "text") -> str:
    if fmt == "json":
        doc = {"n": inst.n, "edges": [list(e) for e in inst.edges], "requirements": list(inst.requirements)}
        return json.dumps(doc) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [str(inst.n)]
    lines += [f"{u} {v} {c}" for u, v, c in inst.edges]
    lines += [f"{v} {r}" for v, r in enumerate(inst.requirements)]
    return "\n".join(lines) + "\n"


def solution_to_dict(sol: Solution, **extra) -> dict:
    doc = {"edges": sorted(sol.chosen), "power": list(sol.power), "total": sol.total}
    doc.update(extra)
    return doc


def solution_from_dict(doc: dict, inst: Instance | None = None) -> Solution:
    """Read a solution document; powers are recomputed when absent."""
    chosen = frozenset(int(i) for i in doc["edges"])
    if "power" not in doc:
        if inst is None:
            raise ValueError("solution without powers needs its instance")
        return power_profile(inst, chosen)
    power = tuple(int(p) for p in doc["power"])
    return Solution(chosen, power, int(doc.get("total", sum(power))))
