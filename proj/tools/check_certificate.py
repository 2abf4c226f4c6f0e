#!/usr/bin/env python3
"""Independent replay of a normgeo certificate.

Checks, with exact arithmetic in Q(sqrt2) built on fractions.Fraction:
  * every constraint row annihilates the kernel vector,
  * the kernel vector is nonzero and its nonzero entries are exactly the
    listed pattern,
  * unknown counts are consistent with d.

Exit 0 when every result passes, 1 otherwise, 2 on malformed input.
"""

import json
import re
import sys
from fractions import Fraction

SCHEMA = "normgeo.certificate/1"
_TERM = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*\+\s*(-?\d+(?:/\d+)?)\*sqrt2\s*$")


class Q2:
    __slots__ = ("a", "b")

    def __init__(self, a, b=Fraction(0)):
        self.a, self.b = Fraction(a), Fraction(b)

    def __add__(self, o):
        return Q2(self.a + o.a, self.b + o.b)

    def __mul__(self, o):
        return Q2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    def is_zero(self):
        return self.a == 0 and self.b == 0


def parse(value):
    if isinstance(value, list) and len(value) == 2:
        return Q2(Fraction(value[0]), Fraction(value[1]))
    if not isinstance(value, str):
        raise ValueError(f"not an exact scalar: {value!r}")
    m = _TERM.match(value)
    if m:
        return Q2(Fraction(m.group(1)), Fraction(m.group(2)))
    if value.strip().endswith("sqrt2"):
        coef = value.strip()[: -len("sqrt2")].rstrip("*") or "1"
        return Q2(0, Fraction(coef))
    return Q2(Fraction(value))


def check_result(res):
    errors = []
    d = res["d"]
    unknowns = res["unknowns"]
    if unknowns != (d + 2) * (d + 1) * d // 6:
        errors.append("unknown count is not C(d+2, 3)")
    order = [tuple(t) for t in res["unknown_order"]]
    if len(order) != unknowns or len(set(order)) != unknowns:
        errors.append("unknown_order malformed")
    v = [parse(x) for x in res["kernel_vector"]]
    if len(v) != unknowns:
        errors.append("kernel vector has wrong length")
        return errors
    if all(x.is_zero() for x in v):
        errors.append("kernel vector is zero")
    if len(res["rows"]) != res["constraint_rows"]:
        errors.append("row count mismatch")
    for row in res["rows"]:
        acc = Q2(0)
        for col, coef in row["entries"]:
            acc = acc + parse(coef) * v[col]
        if not acc.is_zero():
            errors.append(f"row {row['label']} does not annihilate the kernel vector")
            break
    pattern = {tuple(e["triple"]): parse(e["value_over_p"]) for e in res["nonzero_pattern"]}
    nonzero = {order[i]: x for i, x in enumerate(v) if not x.is_zero()}
    if set(pattern) != set(nonzero):
        errors.append("nonzero entries differ from the listed pattern")
    else:
        for t, x in nonzero.items():
            y = pattern[t]
            if x.a != y.a or x.b != y.b:
                errors.append(f"entry {t} differs from the listed pattern")
                break
    if res["kernel_dim"] != 1:
        errors.append("kernel_dim is not 1")
    if res["rank"] + res["kernel_dim"] != unknowns:
        errors.append("rank + kernel_dim != unknowns")
    return errors


def main(argv):
    if len(argv) != 2:
        print("usage: check_certificate.py CERTIFICATE.json", file=sys.stderr)
        return 2
    try:
        with open(argv[1], encoding="utf-8") as f:
            cert = json.load(f)
        if cert.get("schema") != SCHEMA:
            print(f"unexpected schema {cert.get('schema')!r}", file=sys.stderr)
            return 2
        ok = True
        for res in cert["results"]:
            errors = check_result(res)
            status = "ok" if not errors else "FAILED: " + "; ".join(errors)
            print(f"n={res['n']}: {len(res['rows'])} rows, {res['unknowns']} unknowns, {status}")
            ok = ok and not errors
        return 0 if ok else 1
    except (KeyError, ValueError, TypeError, json.JSONDecodeError) as e:
        print(f"malformed certificate: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv))
