"""Text format for Heegaard data, one cobordism per file::

    cobordism { g_minus=1 g_plus=1 r_minus=0 r_plus=0 G_rank=1
      phi { a1 -> t1 ; b1 -> 1 }
      f { a1 -> a1 ; b1 -> b1 a1 } }

The five numeric keys are mandatory.  Generators a1..a_ghat, b1..b_ghat of
the middle surface missing from ``phi`` are sent to 1; missing from ``f``
they are fixed.  ``#`` starts a comment.
"""

from __future__ import annotations

import re

from .cobordism import HeegaardData
from .errors import InvariantViolation, ParseError
from .freegroup import FreeEndo, PhiValuation, Word, format_surface_word, parse_word
from .ring import LaurentPoly, format_laurent, parse_laurent

KEYS = ("g_minus", "g_plus", "r_minus", "r_plus", "G_rank")

_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<sym>->|[{}=;])|(?P<int>-?\d+)|(?P<name>[A-Za-z_]\w*)")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg, pos=None):
        line, col = self.where(pos)
        return ParseError(msg, line, col)

    def skip(self):
        while self.pos < len(self.text):
            m = _TOKEN.match(self.text, self.pos)
            if m and m.lastgroup is None:
                self.pos = m.end()
            else:
                break

    def next(self):
        """(kind, value, start) of the next token, or (None, None, pos) at EOF."""
        self.skip()
        if self.pos >= len(self.text):
            return None, None, self.pos
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            raise self.error(f"unexpected character {self.text[self.pos]!r}")
        start = self.pos
        self.pos = m.end()
        return m.lastgroup, m.group(m.lastgroup), start

    def expect(self, value):
        kind, v, start = self.next()
        if v != value:
            found = "end of input" if kind is None else repr(v)
            raise self.error(f"expected {value!r}, found {found}", start)
        return start

    def raw_until(self, stops=";{}"):
        """Raw text up to (not including) the next stop character."""
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in stops:
            if self.text[self.pos] == "#":
                break
            self.pos += 1
        return self.text[start:self.pos].rstrip(), start


def _block(sc: _Scanner):
    """Parse ``{ name -> value ; ... }``; returns list of (name, value, pos)."""
    sc.expect("{")
    out = []
    while True:
        kind, v, start = sc.next()
        if v == "}":
            return out
        if kind != "name":
            raise sc.error("expected a generator name or '}'", start)
        sc.expect("->")
        text, tpos = sc.raw_until()
        if not text:
            raise sc.error(f"missing value for {v}", tpos)
        out.append((v, text, tpos))
        kind2, v2, s2 = sc.next()
        if v2 == "}":
            return out
        if v2 != ";":
            raise sc.error("expected ';' or '}'", s2)


def _gen_index(name, ghat, sc, pos):
    m = re.fullmatch(r"([ab])(\d+)", name)
    if not m or not 1 <= int(m.group(2)) <= ghat:
        raise sc.error(f"unknown generator {name!r} (genus {ghat})", pos)
    i = int(m.group(2))
    return i if m.group(1) == "a" else ghat + i


def parse_heegaard(text: str) -> HeegaardData:
    """Parse and validate one cobordism description."""
    sc = _Scanner(text)
    kind, v, start = sc.next()
    if v != "cobordism":
        raise sc.error("expected 'cobordism'", start)
    sc.expect("{")
    nums, phi_entries, f_entries = {}, None, None
    while True:
        kind, v, start = sc.next()
        if kind is None:
            raise sc.error("unexpected end of input, missing '}'", start)
        if v == "}":
            break
        if v in KEYS:
            sc.expect("=")
            k2, val, s2 = sc.next()
            if k2 != "int":
                raise sc.error(f"{v} needs an integer value", s2)
            if v in nums:
                raise sc.error(f"duplicate key {v}", start)
            nums[v] = int(val)
        elif v == "phi":
            if phi_entries is not None:
                raise sc.error("duplicate phi block", start)
            phi_entries = _block(sc)
        elif v == "f":
            if f_entries is not None:
                raise sc.error("duplicate f block", start)
            f_entries = _block(sc)
        else:
            raise sc.error(f"unknown key {v!r}", start)
    kind, v, start = sc.next()
    if kind is not None:
        raise sc.error("trailing input after cobordism block", start)
    missing = [k for k in KEYS if k not in nums]
    if missing:
        raise sc.error(f"missing key(s): {', '.join(missing)}", 0)
    for k in KEYS:
        if nums[k] < 0:
            raise sc.error(f"{k} must be non-negative", 0)
    ghat = nums["g_minus"] + nums["r_minus"]
    if nums["g_plus"] + nums["r_plus"] != ghat:
        raise InvariantViolation(
            "genus-mismatch", f"g_minus + r_minus = {ghat} but g_plus + r_plus = "
                              f"{nums['g_plus'] + nums['r_plus']}")
    n = nums["G_rank"]
    rank = 2 * ghat

    values = [LaurentPoly(1, n)] * rank
    for name, txt, pos in phi_entries or []:
        i = _gen_index(name, ghat, sc, pos)
        try:
            values[i - 1] = parse_laurent(txt, n)
        except ParseError as exc:
            line, col = sc.where(pos)
            raise ParseError(f"phi({name}): {exc.msg}", line,
                             col + (exc.col or 1) - 1) from None
    phi = PhiValuation.from_monomials(values, n)

    images = [Word.gen(k, rank) for k in range(1, rank + 1)]
    seen = set()
    for name, txt, pos in f_entries or []:
        i = _gen_index(name, ghat, sc, pos)
        if i in seen:
            raise sc.error(f"duplicate image for {name}", pos)
        seen.add(i)
        line, col = sc.where(pos)
        images[i - 1] = parse_word(txt, rank, line, col)
    f = FreeEndo(images, rank)
    return HeegaardData(nums["g_minus"], nums["g_plus"], nums["r_minus"], nums["r_plus"],
                        phi, f)


def load(path) -> HeegaardData:
    with open(path, encoding="utf-8") as fh:
        return parse_heegaard(fh.read())


def format_heegaard(h: HeegaardData) -> str:
    """Inverse of parse_heegaard (every generator written out)."""
    g = h.ghat
    names = [f"a{i}" for i in range(1, g + 1)] + [f"b{i}" for i in range(1, g + 1)]
    phi = " ; ".join(f"{nm} -> {format_laurent(h.phi.of_gen(k + 1))}"
                     for k, nm in enumerate(names))
    f = " ; ".join(f"{nm} -> {format_surface_word(h.f.images[k])}"
                   for k, nm in enumerate(names))
    head = (f"cobordism {{ g_minus={h.g_minus} g_plus={h.g_plus} r_minus={h.r_minus} "
            f"r_plus={h.r_plus} G_rank={h.nvars}")
    return f"{head}\n  phi {{ {phi} }}\n  f {{ {f} }} }}\n"
