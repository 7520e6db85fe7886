#!/usr/bin/env python3
"""Extract integral character values from a GAP CTblLib data file.

Usage:
    ctbllib_extract.py <ctoconja.tbl> <group> <class,...> <index,...>
    ctbllib_extract.py <ctoconja.tbl> <group> orders:<n,...> <index,...>

Prints, for each requested irreducible (1-based position in the table, i.e.
the GAP numbering ``Irr(t)[i]``), the values on the requested classes as a
JSON object suitable for pasting into a case file.  Class names follow the
CTblLib convention: element order followed by a letter in table order
(``5a``, ``5b``, ...).

The CTblLib data files ship e.g. with the ``passagemath-gap-pkg-ctbllib-data``
wheel under ``gap/pkg/ctbllib/data``; the Conway groups live in
``ctoconja.tbl``.
"""

import json
import re
import sys
from math import gcd


def parse_gap_list(text, pos=0):
    """Parse a GAP list literal starting at text[pos] == '['.

    Returns (value, new_pos).  Scalars are returned as stripped strings,
    holes as None, nested lists as Python lists.
    """
    assert text[pos] == "["
    pos += 1
    items = []
    cur = ""
    pending = False
    while True:
        ch = text[pos]
        if ch == "[":
            val, pos = parse_gap_list(text, pos)
            items.append(val)
            pending = True
            cur = ""
            continue
        if ch in ",]":
            if not pending:
                s = cur.strip()
                items.append(s if s else None)
            pending = False
            cur = ""
            pos += 1
            if ch == "]":
                # "[]" is an empty list, not a list holding one hole
                if items == [None]:
                    items = []
                return items, pos
            continue
        cur += ch
        pos += 1


def mot_block(path, group):
    data = open(path, encoding="latin-1").read()
    start = data.index('MOT("%s",' % group)
    return data[start + len('MOT("%s",' % group):]


def element_orders(powermaps, nclasses):
    primes = [p for p in range(len(powermaps)) if powermaps[p] is not None]

    def power(cls, n):
        for p in primes:
            while n % p == 0:
                cls = powermaps[p][cls]
                n //= p
        return cls if n == 1 else None

    orders = []
    for c in range(nclasses):
        n = 1
        while True:
            img = power(c, n)
            if img == 0:
                orders.append(n)
                break
            n += 1
    return orders


def class_names(orders):
    seen = {}
    names = []
    for o in orders:
        k = seen.get(o, 0)
        seen[o] = k + 1
        names.append("%d%s" % (o, "abcdefghijklmnopqrstuvwxyz"[k]))
    return names


def main():
    path, group, classes_arg, chars_arg = sys.argv[1:5]
    body = mot_block(path, group)
    # MOT(name, texts, centralizers, powermaps, irreducibles, ...)
    pos = body.index("[")
    _, pos = parse_gap_list(body, pos)
    pos = body.index("[", pos)
    centralizers, pos = parse_gap_list(body, pos)
    pos = body.index("[", pos)
    pmaps_raw, pos = parse_gap_list(body, pos)
    pos = body.index("[", pos)
    irr_raw, pos = parse_gap_list(body, pos)

    nclasses = len(centralizers)
    # pmaps_raw[i] is the (i+1)-th power map; holes for non-primes
    powermaps = [None] * (len(pmaps_raw) + 1)
    for idx, m in enumerate(pmaps_raw):
        if m:
            powermaps[idx + 1] = [int(v) - 1 for v in m]
    orders = element_orders(powermaps, nclasses)
    names = class_names(orders)

    irr = []
    for row in irr_raw:
        if row and row[0] == "GALOIS":
            base, _exp = int(row[1][0]), int(row[1][1])
            src = irr[base - 1]
            irr.append([v if re.fullmatch(r"-?\d+", v or "") else "irrational"
                        for v in src])
        else:
            irr.append(row)

    if classes_arg.startswith("orders:"):
        # every class whose element order is listed
        keep = {int(o) for o in classes_arg[len("orders:"):].split(",")}
        wanted = [n for n, o in zip(names, orders) if o in keep]
    else:
        wanted = classes_arg.split(",")
    out = {}
    for idx in [int(i) for i in chars_arg.split(",")]:
        row = irr[idx - 1]
        vals = {}
        for cname in wanted:
            v = row[names.index(cname)]
            if not re.fullmatch(r"-?\d+", v):
                raise SystemExit("Irr[%d] not integral on %s: %s" % (idx, cname, v))
            vals[cname] = int(v)
        out["chi%d" % idx] = vals
    info = {n: {"order": o, "centralizer": int(c)}
            for n, o, c in zip(names, orders, centralizers) if n in wanted}
    json.dump({"group": group, "classes": info, "characters": out}, sys.stdout,
              indent=1)
    print()


if __name__ == "__main__":
    main()
