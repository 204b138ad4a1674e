"""Exhaustive finite checker for cartesian bicategory structure.

Two concrete instances are provided: spans of finite sets and relations of
finite sets.  Everything claimed about them is checked by finite enumeration
with zero tolerance; see the ``harness`` module and the ``bicat-check`` CLI.
"""

from .spans import SpanBicat
from .rels import RelBicat

_span = SpanBicat()
_rel = RelBicat()


def span_instance() -> SpanBicat:
    return _span


def rel_instance() -> RelBicat:
    return _rel
