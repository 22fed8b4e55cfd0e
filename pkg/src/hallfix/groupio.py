"""Line-oriented ASCII group files.

Format: optional ``#`` comment lines, one ``degree: <k>`` line, then one or
more ``gen: <cycles>`` lines in disjoint-cycle notation.  Printing is
bit-exact canonical: cycles sorted by least moved point, points separated by
single spaces.
"""

from __future__ import annotations

from pathlib import Path
from typing import List, Sequence, Tuple

from .perm import Permutation, format_permutation, parse_permutation


class GroupFileError(ValueError):
    """Raised for malformed group files."""


def parse_group_text(text: str) -> Tuple[int, List[Permutation]]:
    """Parse group-file text into (degree, generators)."""
    degree: int | None = None
    gen_specs: List[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("degree:"):
            if degree is not None:
                raise GroupFileError(f"line {lineno}: duplicate degree line")
            value = line[len("degree:"):].strip()
            try:
                degree = int(value)
            except ValueError:
                raise GroupFileError(f"line {lineno}: bad degree {value!r}") from None
            if degree < 1:
                raise GroupFileError(f"line {lineno}: degree must be positive")
        elif line.startswith("gen:"):
            if degree is None:
                raise GroupFileError(f"line {lineno}: gen before degree")
            gen_specs.append(line[len("gen:"):].strip())
        else:
            raise GroupFileError(f"line {lineno}: unrecognized line {line!r}")
    if degree is None:
        raise GroupFileError("missing degree line")
    if not gen_specs:
        raise GroupFileError("missing gen lines")
    try:
        gens = [parse_permutation(spec, degree) for spec in gen_specs]
    except ValueError as exc:
        raise GroupFileError(str(exc)) from exc
    return degree, gens


def read_group_file(path: "str | Path") -> Tuple[int, List[Permutation]]:
    return parse_group_text(Path(path).read_text(encoding="ascii"))


def format_group_text(degree: int, generators: Sequence[Permutation],
                      comment: str | None = None) -> str:
    """Canonical group-file text for a degree and generating set."""
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"degree: {degree}")
    for g in generators:
        lines.append(f"gen: {format_permutation(g)}")
    return "\n".join(lines) + "\n"
