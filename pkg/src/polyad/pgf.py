"""PGF: a line-oriented text format for polyadic groups.

Grammar (one directive per line, '#' starts a comment, blank lines ignored):

    pgf 1
    kind table|derived|gluskin|coset|product|permutation
    arity N
    size K
    labels "x" "y" ...          # optional, K quoted strings
    ... kind-specific payload ...
    end

Payloads:
    table        table          (k^n decimal entries, any line wrapping)
    derived      basesize M / base rows... / central I
    gluskin      basesize M / base rows... / beta J1..JM / d I
    coset        basesize M / base rows... / subgroup I1 I2... / rep I
    product      child <serialized child between beginchild/endchild>
    permutation  q Q / pwidth N / sigma (cycles)

Numbers are decimal; labels are double-quoted strings.  load(save(g))
reproduces g bit-exactly.
"""

from __future__ import annotations

import re
import shlex

from .bingroup import BinaryGroupTable
from .constructions import (
    coset_construction,
    derived,
    direct_product,
    gluskin,
)
from .core import NaryGroup, NaryGroupoid
from .errors import PGFError
from .permutations import permutation_group

FORMAT_VERSION = 1


def _quote(s):
    return '"' + s.replace('\\', '\\\\').replace('"', '\\"') + '"'


def _wrap_numbers(values, per_line=16):
    lines = []
    for i in range(0, len(values), per_line):
        lines.append(" ".join(str(v) for v in values[i:i + per_line]))
    return lines


def sigma_to_cycles(sigma):
    """1-based cycle notation for a permutation of 0..w-1."""
    w = len(sigma)
    seen = [False] * w
    parts = []
    for i in range(w):
        if seen[i] or sigma[i] == i:
            seen[i] = True
            continue
        cyc, j = [], i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = sigma[j]
        parts.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def cycles_to_sigma(text, width):
    sigma = list(range(width))
    for grp in re.findall(r"\(([^()]*)\)", text):
        nums = [int(t) for t in grp.split()]
        if not nums:
            continue
        for a in nums:
            if not 1 <= a <= width:
                raise PGFError(f"cycle entry {a} out of range 1..{width}")
        for i, a in enumerate(nums):
            sigma[a - 1] = nums[(i + 1) % len(nums)] - 1
    return tuple(sigma)


def save(group):
    """Serialize a verified NaryGroup to PGF text."""
    return "\n".join(_emit(group)) + "\n"


def _emit(group):
    g = group.g
    lines = [f"pgf {FORMAT_VERSION}"]
    kind = g.backing
    lines.append(f"kind {kind}")
    lines.append(f"arity {g.n}")
    lines.append(f"size {g.k}")
    if g.labels:
        lines.append("labels " + " ".join(_quote(s) for s in g.labels))
    if kind == "derived":
        base = g.derived_base
        lines += _emit_base(base)
        lines.append(f"central {g.derived_c}")
    elif kind == "gluskin":
        base = g.gluskin_base
        lines += _emit_base(base)
        lines.append("beta " + " ".join(str(v) for v in g.gluskin_beta))
        lines.append(f"d {g.gluskin_d}")
    elif kind == "coset":
        base = g.coset_base
        lines += _emit_base(base)
        lines.append("subgroup " + " ".join(str(v) for v in sorted(g.coset_H)))
        lines.append(f"rep {g.coset_rep}")
    elif kind == "product":
        for child in g.product_factors:
            lines.append("beginchild")
            lines += _emit(child)
            lines.append("endchild")
    elif kind == "permutation":
        lines.append(f"q {g.perm_q}")
        lines.append(f"pwidth {g.perm_n}")
        lines.append("sigma " + sigma_to_cycles(g.perm_sigma))
    else:
        if g.table is None:
            raise PGFError("table backing requires a materialized table")
        lines.append("table")
        lines += _wrap_numbers(g.table)
    lines.append("end")
    return lines


def _emit_base(base):
    lines = [f"basesize {base.k}"]
    lines.append("baselabels " + " ".join(_quote(s) for s in base.labels))
    lines.append("base")
    for row in base.mul:
        lines.append(" ".join(str(v) for v in row))
    return lines


class _Reader:
    def __init__(self, lines):
        self.lines = lines
        self.pos = 0

    def peek(self):
        while self.pos < len(self.lines):
            raw = self.lines[self.pos]
            stripped = raw.split("#", 1)[0].strip()
            if stripped:
                return stripped
            self.pos += 1
        return None

    def take(self):
        line = self.peek()
        if line is None:
            raise PGFError("unexpected end of document")
        self.pos += 1
        return line


def load(text):
    """Parse PGF text into a verified NaryGroup."""
    reader = _Reader(text.splitlines())
    return _parse(reader)


def _parse(reader):
    head = reader.take()
    if not re.fullmatch(r"pgf\s+1", head):
        raise PGFError(f"expected 'pgf 1' header, got {head!r}")
    fields = {}
    labels = None
    children = []
    base_rows = None
    while True:
        line = reader.take()
        if line == "end":
            break
        tok = line.split(None, 1)
        key = tok[0]
        rest = tok[1] if len(tok) > 1 else ""
        if key == "kind":
            fields["kind"] = rest.strip()
        elif key == "arity":
            fields["arity"] = int(rest)
        elif key == "size":
            fields["size"] = int(rest)
        elif key == "labels":
            labels = shlex.split(rest)
        elif key == "baselabels":
            fields["baselabels"] = shlex.split(rest)
        elif key == "basesize":
            fields["basesize"] = int(rest)
        elif key == "base":
            if "basesize" not in fields:
                raise PGFError("base rows require basesize first")
            m = fields["basesize"]
            base_rows = []
            for _ in range(m):
                base_rows.append([int(v) for v in reader.take().split()])
        elif key == "central":
            fields["central"] = int(rest)
        elif key == "beta":
            fields["beta"] = [int(v) for v in rest.split()]
        elif key == "d":
            fields["d"] = int(rest)
        elif key == "subgroup":
            fields["subgroup"] = frozenset(int(v) for v in rest.split())
        elif key == "rep":
            fields["rep"] = int(rest)
        elif key == "q":
            fields["q"] = int(rest)
        elif key == "pwidth":
            fields["pwidth"] = int(rest)
        elif key == "sigma":
            fields["sigma"] = rest.strip()
        elif key == "beginchild":
            children.append(_parse(reader))
            tail = reader.take()
            if tail != "endchild":
                raise PGFError("missing endchild")
        elif key == "table":
            if "size" not in fields or "arity" not in fields:
                raise PGFError("table payload requires size and arity first")
            need = fields["size"] ** fields["arity"]
            vals = []
            while len(vals) < need:
                vals.extend(int(v) for v in reader.take().split())
            if len(vals) != need:
                raise PGFError("table entry count mismatch")
            fields["table"] = vals
        else:
            raise PGFError(f"unknown directive {key!r}")
    return _build(fields, labels, base_rows, children)


def _build(fields, labels, base_rows, children):
    kind = fields.get("kind")
    n = fields.get("arity")
    k = fields.get("size")
    if kind is None or n is None or k is None:
        raise PGFError("kind, arity and size are required")
    if labels is not None and len(labels) != k:
        raise PGFError("label count must equal size")

    def base_group():
        if base_rows is None:
            raise PGFError(f"kind {kind} requires a base table")
        return BinaryGroupTable(base_rows, labels=fields.get("baselabels"))

    if kind == "table":
        g = NaryGroupoid.from_table(k, n, fields["table"], labels=labels)
        return NaryGroup.verify(g, mode="full")
    if kind == "derived":
        out = derived(base_group(), fields["central"], n)
    elif kind == "gluskin":
        out = gluskin(base_group(), fields["beta"], fields["d"], n)
    elif kind == "coset":
        out = coset_construction(base_group(), fields["subgroup"],
                                 fields["rep"], n)
    elif kind == "product":
        if not children:
            raise PGFError("product needs at least one child")
        out = direct_product(children)
    elif kind == "permutation":
        width = fields["pwidth"] - 1
        sigma = cycles_to_sigma(fields["sigma"], width)
        out = permutation_group(fields["q"], fields["pwidth"], sigma, arity=n)
    else:
        raise PGFError(f"unknown kind {kind!r}")
    if out.k != k or out.n != n:
        raise PGFError("header size/arity disagree with payload")
    if labels is not None:
        out.g.labels = labels
        out.labels = labels
    return out
