"""Parser for textual group descriptions.

Grammar::

    spec  := "Z:" n | "D:" n | "Q:" n | "E:" p "^" k
           | "prod(" spec "," spec ")"
           | "perm:" degree ":" cycles (";" cycles)*
           | "table:" path
"""
from __future__ import annotations

from .group import (
    FiniteGroup,
    GroupError,
    direct_product,
    from_permutation_generators,
    make_cyclic,
    make_dihedral,
    make_elementary_abelian,
    make_quaternion,
    read_table,
)
from .perm import PermutationError, parse_cycles


class SpecError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at column {pos + 1} of {text!r}")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, perm_cap: int):
        self.text = text
        self.pos = 0
        self.perm_cap = perm_cap

    def error(self, message: str, pos: int | None = None) -> SpecError:
        return SpecError(message, self.text, self.pos if pos is None else pos)

    def expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a non-negative integer")
        return int(self.text[start:self.pos])

    def raw(self) -> tuple[str, int]:
        """Text up to a top-level ',' or ')' (parentheses nest)."""
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    break
                depth -= 1
            elif ch == "," and depth == 0:
                break
            self.pos += 1
        return self.text[start:self.pos], start

    def build(self, fn, arg_pos: int, *args) -> FiniteGroup:
        try:
            return fn(*args)
        except GroupError as exc:
            if type(exc) is not GroupError:
                raise
            raise self.error(str(exc), arg_pos) from None

    def spec(self) -> FiniteGroup:
        t = self.text
        for prefix, fn in (("Z:", make_cyclic), ("D:", make_dihedral), ("Q:", make_quaternion)):
            if t.startswith(prefix, self.pos):
                self.pos += len(prefix)
                at = self.pos
                return self.build(fn, at, self.integer())
        if t.startswith("E:", self.pos):
            self.pos += 2
            at = self.pos
            p = self.integer()
            self.expect("^")
            k = self.integer()
            return self.build(make_elementary_abelian, at, p, k)
        if t.startswith("prod(", self.pos):
            self.pos += 5
            a = self.spec()
            self.expect(",")
            b = self.spec()
            self.expect(")")
            return direct_product(a, b)
        if t.startswith("perm:", self.pos):
            self.pos += 5
            at = self.pos
            degree = self.integer()
            self.expect(":")
            body, start = self.raw()
            if degree < 1:
                raise self.error("degree must be positive", at)
            gens = []
            offset = start
            for chunk in body.split(";"):
                if chunk.strip():
                    try:
                        gens.append(parse_cycles(chunk, degree))
                    except PermutationError as exc:
                        raise self.error(str(exc), offset) from None
                offset += len(chunk) + 1
            return from_permutation_generators(degree, gens, cap=self.perm_cap,
                                               name=t[at - 5:self.pos])
        if t.startswith("table:", self.pos):
            self.pos += 6
            path, start = self.raw()
            if not path:
                raise self.error("missing table path")
            try:
                return read_table(path)
            except OSError as exc:
                raise self.error(f"cannot read table: {exc.strerror}", start) from None
            except GroupError as exc:
                raise self.error(str(exc), start) from None
        raise self.error("expected one of Z:, D:, Q:, E:, prod(, perm:, table:")


def parse_group(text: str, perm_cap: int = 5000) -> FiniteGroup:
    p = _Parser(text.strip(), perm_cap)
    G = p.spec()
    if p.pos != len(p.text):
        raise p.error("unexpected trailing text")
    return G
