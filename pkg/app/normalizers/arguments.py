# app/normalizers/arguments.py

"""Compact command-line notations for blocks, subgroup generators and edges."""

from app.errors import InvalidInputError


def _ints(chunk: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in chunk.split(",") if tok.strip()]
    except ValueError:
        raise InvalidInputError(f"bad {what} {chunk!r}: expected comma-separated integers")


def parse_vectors(text: str) -> list[list[int]]:
    """'1,1;2,0' -> [[1, 1], [2, 0]]."""
    vectors = [_ints(chunk, "vector") for chunk in text.split(";") if chunk.strip()]
    if not vectors:
        raise InvalidInputError("no vectors given")
    return vectors


def parse_blocks(text: str, nvars: int) -> list[list[int]]:
    """
    Either a block count s (variables split into s consecutive blocks, sizes as
    even as possible) or explicit blocks of 1-based variables: '1,2;3'.
    """
    text = text.strip()
    if text.isdigit():
        s = int(text)
        if not 1 <= s <= nvars:
            raise InvalidInputError(f"cannot split {nvars} variables into {s} blocks")
        size, extra = divmod(nvars, s)
        blocks, start = [], 1
        for i in range(s):
            width = size + (1 if i < extra else 0)
            blocks.append(list(range(start, start + width)))
            start += width
        return blocks
    return parse_vectors(text)


def parse_edges(text: str) -> list[list[int]]:
    """'1-2,2-3' -> [[1, 2], [2, 3]]."""
    edges = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split("-")
        if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
            raise InvalidInputError(f"bad edge {chunk!r}: expected i-j")
        edges.append([int(parts[0]), int(parts[1])])
    return edges
