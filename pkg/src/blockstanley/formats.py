"""Reading and writing ideals and decompositions.

Two input syntaxes are accepted for ideals: a JSON document
``{"n": 2, "variable_names": ["x", "y"], "generators": [[3, 9], [7, 5]]}``
and inline monomials such as ``x^3*y^9, x^7*y^5``.  Decomposition documents
add ``"blocks": [{"a": [...], "b": [... or "inf"]}]``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .core import INF, Block, BlockDecomposition, MonomialIdeal, minimalize_generators
from .stanley import StanleySpace, render_monomial
from .subprime import Filtration

_LETTERS = ("x", "y", "z")


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass
class IdealDocument:
    n: int
    variable_names: List[str]
    generators: List[Tuple[int, ...]]
    ideal: MonomialIdeal
    dropped: List[Tuple[int, ...]] = field(default_factory=list)
    decomposition: Optional[BlockDecomposition] = None


def default_names(n: int) -> List[str]:
    return [f"x{i + 1}" for i in range(n)]


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<op>[*^,;]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + stripped]!r}", pos + stripped)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    return tokens


def _parse_monomials(text: str) -> List[Tuple[List[Tuple[str, int, int]], int]]:
    """Split inline syntax into monomials: lists of (name, exponent, position)."""
    tokens = _tokenize(text)
    monomials = []
    i = 0

    def expect_factor():
        nonlocal i
        if i >= len(tokens):
            raise ParseError("expected a variable or 1", len(text))
        kind, value, pos = tokens[i]
        if kind == "int":
            if value != "1":
                raise ParseError(f"coefficient {value} not allowed; only 1", pos)
            i += 1
            return None
        if kind != "name":
            raise ParseError(f"expected a variable, got {value!r}", pos)
        i += 1
        exponent = 1
        if i < len(tokens) and tokens[i][1] == "^":
            i += 1
            if i >= len(tokens) or tokens[i][0] != "int":
                raise ParseError("expected an exponent after '^'", tokens[i - 1][2] + 1)
            exponent = int(tokens[i][1])
            i += 1
        return (value, exponent, pos)

    while i < len(tokens):
        start = tokens[i][2]
        factors = []
        f = expect_factor()
        if f:
            factors.append(f)
        while i < len(tokens) and tokens[i][1] == "*":
            i += 1
            f = expect_factor()
            if f:
                factors.append(f)
        monomials.append((factors, start))
        if i < len(tokens):
            kind, value, pos = tokens[i]
            if value not in (",", ";"):
                raise ParseError(f"expected ',' between monomials, got {value!r}", pos)
            i += 1
            if i >= len(tokens):
                raise ParseError("trailing separator", pos)
    return monomials


def _resolve_names(
    used: Sequence[Tuple[str, int]], n: int | None, names: Sequence[str] | None
) -> Tuple[int, List[str], Dict[str, int]]:
    if names:
        names = list(names)
        if n is not None and n != len(names):
            raise ParseError(f"{len(names)} variable names given for dimension {n}")
        return len(names), names, {v: k for k, v in enumerate(names)}
    if n is None:
        if not used:
            raise ParseError("cannot infer the dimension of an ideal with no generators")
        labels = {u for u, _ in used}
        if all(re.fullmatch(r"x[1-9]\d*", u) for u in labels):
            n = max(int(u[1:]) for u in labels)
            return n, default_names(n), {u: int(u[1:]) - 1 for u in default_names(n)}
        if labels <= set(_LETTERS):
            n = max(_LETTERS.index(u) for u in labels) + 1
            names = list(_LETTERS[:n])
            return n, names, {u: k for k, u in enumerate(names)}
        u, pos = next((u, p) for u, p in used if u not in _LETTERS)
        raise ParseError(f"cannot infer variables from {u!r}; pass variable names", pos)
    lookup = {u: k for k, u in enumerate(default_names(n))}
    if n <= len(_LETTERS):
        for k in range(n):
            lookup[_LETTERS[k]] = k
    letters_used = {u for u, _ in used} & set(_LETTERS)
    names = list(_LETTERS[:n]) if letters_used and n <= 3 else default_names(n)
    return n, names, lookup


def _document(n, names, gens, blocks=None) -> IdealDocument:
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != n:
            raise ParseError(f"generator {list(g)} does not have dimension {n}")
    ideal = minimalize_generators(gens, n=n)
    kept = list(ideal.generators)
    dropped = []
    remaining = list(kept)
    for g in gens:
        if g in remaining:
            remaining.remove(g)
        else:
            dropped.append(g)
    D = None
    if blocks is not None:
        D = BlockDecomposition(n, tuple(blocks))
    return IdealDocument(n, list(names), kept, ideal, dropped, D)


def _block_from_json(obj: Any, n: int | None) -> Block:
    if not isinstance(obj, dict) or "a" not in obj or "b" not in obj:
        raise ParseError(f"block must be an object with 'a' and 'b': {obj!r}")
    try:
        B = Block(tuple(obj["a"]), tuple(obj["b"]))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad block {obj!r}: {exc}") from None
    if n is not None and B.dim != n:
        raise ParseError(f"block {obj!r} does not have dimension {n}")
    return B


def parse_document(
    text: str, n: int | None = None, variable_names: Sequence[str] | None = None
) -> IdealDocument:
    """Parse a JSON document, a rendered text decomposition, or inline monomials."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from None
        if not isinstance(obj, dict):
            raise ParseError("document must be a JSON object")
        gens = obj.get("generators", [])
        if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
            raise ParseError("'generators' must be a list of exponent lists")
        names = obj.get("variable_names") or variable_names
        doc_n = obj.get("n", n)
        if doc_n is None and names:
            doc_n = len(names)
        if doc_n is None and gens:
            doc_n = len(gens[0])
        if doc_n is None and obj.get("blocks"):
            doc_n = len(obj["blocks"][0].get("a", []))
        if not isinstance(doc_n, int) or doc_n < 1:
            raise ParseError("document needs a positive dimension 'n'")
        if names is not None and len(names) != doc_n:
            raise ParseError(f"{len(names)} variable names given for dimension {doc_n}")
        blocks = None
        if "blocks" in obj:
            blocks = [_block_from_json(b, doc_n) for b in obj["blocks"]]
        try:
            return _document(doc_n, names or default_names(doc_n), gens, blocks)
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc)) from None
    if stripped.startswith(("[", "#")):
        D = parse_decomposition_text(stripped)
        if n is not None and n != D.n:
            raise ParseError(f"decomposition has dimension {D.n}, expected {n}")
        names = list(variable_names) if variable_names else default_names(D.n)
        return IdealDocument(D.n, names, [], MonomialIdeal.zero(D.n), [], D)

    monomials = _parse_monomials(text)
    used = [(u, pos) for factors, _ in monomials for u, _, pos in factors]
    n, names, lookup = _resolve_names(used, n, variable_names)
    gens = []
    for factors, _ in monomials:
        v = [0] * n
        for u, e, pos in factors:
            if u not in lookup:
                raise ParseError(f"unknown variable {u!r}", pos)
            v[lookup[u]] += e
        gens.append(tuple(v))
    return _document(n, names, gens)


def parse_ideal(
    text: str, n: int | None = None, variable_names: Sequence[str] | None = None
) -> IdealDocument:
    return parse_document(text, n=n, variable_names=variable_names)


_ROW = re.compile(r"^\s*\[(.*)\]\s*$")
_HEADER = re.compile(r"^\s*#\s*n\s*=\s*(\d+)\s*$")


def parse_decomposition_text(text: str) -> BlockDecomposition:
    """Inverse of :func:`render_decomposition_text`."""
    rows = []
    n = None
    for lineno, line in enumerate(text.splitlines(), 1):
        header = _HEADER.match(line)
        if header:
            n = int(header.group(1))
            continue
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _ROW.match(line)
        if m is None:
            raise ParseError(f"line {lineno}: expected a matrix row '[ ... ]'")
        try:
            rows.append([INF if c == "inf" else int(c) for c in m.group(1).split()])
        except ValueError:
            raise ParseError(f"line {lineno}: entries must be integers or 'inf'") from None
    if len(rows) % 2:
        raise ParseError("matrix rows must come in pairs (outer, inner)")
    try:
        blocks = [Block(tuple(rows[k + 1]), tuple(rows[k])) for k in range(0, len(rows), 2)]
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None
    if n is None:
        if not blocks:
            raise ParseError("no blocks and no '# n=' header")
        n = blocks[0].dim
    if any(B.dim != n for B in blocks):
        raise ParseError("blocks of mixed dimension")
    return BlockDecomposition(n, tuple(blocks))


def render_decomposition_text(D: BlockDecomposition) -> str:
    body = "\n\n".join(str(B) for B in D.nonempty())
    return f"# n={D.n}\n" + (body + "\n" if body else "")


def inline_block(B: Block) -> str:
    return "[" + " ".join(map(str, B.outer)) + " / " + " ".join(map(str, B.inner)) + "]"


def render_ideal(I: MonomialIdeal, names: Sequence[str]) -> str:
    return "<" + ", ".join(render_monomial(g, names) for g in I.generators) + ">"


def block_json(B: Block) -> Dict[str, list]:
    return {"a": list(B.inner), "b": ["inf" if b is INF else b for b in B.outer]}


def decomposition_json(
    D: BlockDecomposition,
    names: Sequence[str] | None = None,
    ideal: MonomialIdeal | None = None,
) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"n": D.n}
    if names is not None:
        doc["variable_names"] = list(names)
    if ideal is not None:
        doc["generators"] = [list(g) for g in ideal.generators]
    doc["blocks"] = [block_json(B) for B in D.nonempty()]
    return doc


def stanley_json(S: StanleySpace, names: Sequence[str]) -> Dict[str, Any]:
    return {"free": [names[i] for i in sorted(S.free_variables)], "base": list(S.base)}


def filtration_json(F: Filtration) -> Dict[str, Any]:
    return {
        "ideals": [[list(g) for g in I.generators] for I in F.ideals],
        "blocks": [block_json(B) for B in F.blocks],
    }


def render_filtration(F: Filtration, names: Sequence[str]) -> str:
    lines = [f"I0 = {render_ideal(F.ideals[0], names)}"]
    for k, (I, B) in enumerate(zip(F.ideals[1:], F.blocks), 1):
        lines.append(f"I{k} = {render_ideal(I, names)}    B{k} = {inline_block(B)}")
    return "\n".join(lines) + "\n"


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"
