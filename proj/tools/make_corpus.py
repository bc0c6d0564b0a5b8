#!/usr/bin/env python3
"""Regenerate data/corpus.tsv and data/knotinfo_reference.tsv from KnotInfo.

Requires the `database_knotinfo` package (pip install database_knotinfo).
PD codes are written in X[a,b,c,d] form. Jones polynomials are converted from
the t variable to q with t = q^2. Khovanov polynomials are flattened to
`p,q,rank,tor2` records.
"""
import re
import sys
from pathlib import Path

import database_knotinfo

EXTRA = ["11a_362", "11a_358", "11a_367", "11n_34", "11n_42", "12n_821", "12a_1166"]


def pd_text(raw):
    tuples = re.findall(r"\[(\d+),(\d+),(\d+),(\d+)\]", raw)
    return " ".join("X[%s]" % ",".join(t) for t in tuples)


TERM = re.compile(r"([+-]?)\s*(\d*)\*?((?:[tqT](?:\^\(?-?\d+\)?)?\*?)*)")


def monomials(text):
    text = text.replace(" ", "")
    pos = 0
    while pos < len(text):
        m = TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse %r at %d" % (text, pos))
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        powers = {"t": 0, "q": 0, "T": 0}
        for var, exp in re.findall(r"([tqT])(?:\^\(?(-?\d+)\)?)?", m.group(3)):
            powers[var] += int(exp) if exp else 1
        yield sign * coeff, powers


def jones_q(text):
    out = {}
    for c, p in monomials(text):
        out[2 * p["t"]] = out.get(2 * p["t"], 0) + c
    return ",".join("%d:%d" % (e, c) for e, c in sorted(out.items()) if c)


def kh_records(text):
    cells = {}
    for c, p in monomials(text):
        key = (p["t"], p["q"])
        free, tor = cells.get(key, (0, 0))
        if p["T"]:
            tor += c
        else:
            free += c
        cells[key] = (free, tor)
    return ";".join("%d,%d,%d,%d" % (k[0], k[1], v[0], v[1]) for k, v in sorted(cells.items()))


def main(out_dir):
    rows = [k for k in database_knotinfo.link_list() if k.get("name")]
    wanted = []
    for k in rows:
        name = k["name"]
        try:
            cn = int(k["crossing_number"])
        except (KeyError, ValueError):
            continue
        if 3 <= cn <= 10 or name in EXTRA:
            wanted.append(k)
    out = Path(out_dir)
    with open(out / "corpus.tsv", "w") as corpus, open(out / "knotinfo_reference.tsv", "w") as ref:
        corpus.write("# name\tpd\tsignature  (source: KnotInfo)\n")
        ref.write("# name\talternating\tjones(q-exponent:coeff)\tkhovanov(p,q,rank,tor2)\n")
        for k in wanted:
            name = re.sub(r"^(\d+)([an])_", r"\1\2", k["name"])
            corpus.write("%s\t%s\t%s\n" % (name, pd_text(k["pd_notation"]), k["signature"]))
            ref.write("%s\t%s\t%s\t%s\n" % (name, k["alternating"], jones_q(k["jones_polynomial"]),
                                           kh_records(k["khovanov_unreduced_integral_polynomial"])))
    print("wrote %d entries" % len(wanted))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data")
