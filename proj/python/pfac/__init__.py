"""Exact reductions to probabilistic finite automata.

Automata, instances and machines are plain dicts in the JSON layout of the
command-line tool; probabilities come back as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _pfac

__all__ = [
    "compile_pcp",
    "compile_integer",
    "accept_prob",
    "search",
    "solve_pcp",
    "encode_tm",
    "checker_outcomes",
]


def _frac(s):
    return Fraction(s)


def compile_pcp(construction, instance, antizero=False):
    return json.loads(_pfac.compile_pcp(construction, json.dumps(instance), antizero))


def compile_integer(construction, instance):
    return json.loads(_pfac.compile_integer(construction, json.dumps(instance)))


def accept_prob(pfa, word):
    return _frac(_pfac.accept_prob(json.dumps(pfa), list(word)))


def search(pfa, max_len, mode="strict", value="0"):
    r = json.loads(_pfac.search(json.dumps(pfa), max_len, mode, str(value)))
    r["max_seen"] = _frac(r["max_seen"])
    if r["witness"] is not None:
        r["witness"]["probability"] = _frac(r["witness"]["probability"])
    return r


def solve_pcp(instance, max_len, all=False):
    return json.loads(_pfac.solve_pcp(json.dumps(instance), max_len, all))


def encode_tm(tm, input, unique=False):
    return json.loads(_pfac.encode_tm(json.dumps(tm), list(input), unique))


def checker_outcomes(G, i, j):
    return {k: _frac(v) for k, v in json.loads(_pfac.checker_outcomes(G, i, j)).items()}
