#!/usr/bin/env python3
"""Regenerate data/fields/degree{4,5,6}.csv.

Completeness comes from two independent enumerations, merged:
  * hunter_search (built alongside the CLI): every primitive field of the degree
    up to the bound has a defining polynomial among its candidates;
  * PARI/GP nflist for the transitive groups it supports, which covers the
    imprimitive quartic and sextic fields.
Each field is canonicalized with polredabs, except that a polynomial used by the
bundled tables is kept as the representative of its field.

Requires cypari2 (pip install cypari2).
"""
import argparse
import glob
import json
import os
import subprocess

import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9)

BOUNDS = {4: 2000, 5: 2000, 6: 34000}
# transitive groups nflist supports, by degree
NFLIST_GROUPS = {4: [1, 2, 3, 4, 5], 5: [1, 2, 3], 6: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13]}


def pol(coeffs):
    return pari('Pol(%s)' % str(list(reversed(coeffs))))


def coeffs(f):
    return [int(c) for c in reversed(pari.Vec(f))]


def table_polys(data):
    out = set()
    for path in glob.glob(os.path.join(data, 'table*.json')):
        for row in json.load(open(path))['rows']:
            out.add(tuple(int(c) for c in row['field_poly']))
    return [list(c) for c in out]


def candidates(degree, bound, hunter):
    res = subprocess.run([hunter, str(degree), str(bound)], check=True, capture_output=True, text=True)
    for line in res.stdout.split():
        yield pol([int(t) for t in line.split(',')])
    for k in NFLIST_GROUPS[degree]:
        for f in pari('nflist([%d,%d],[1,%d])' % (degree, k, bound)):
            yield f


def build(degree, bound, hunter, preferred):
    fields = {}
    for f in candidates(degree, bound, hunter):
        if not pari.polisirreducible(f):
            continue
        d = int(pari.nfdisc(f))
        if abs(d) > bound:
            continue
        fields.setdefault(str(pari.polredabs(f)), d)
    pref = [p for p in preferred if len(p) == degree + 1]
    rows = []
    for red, d in fields.items():
        rep = coeffs(pari(red))
        for p in pref:
            if int(pari.nfdisc(pol(p))) == d and pari.nfisisom(pol(p), pari(red)):
                rep = p
                break
        rows.append((abs(d), d, list(reversed(rep)), rep))
    rows.sort()
    return [(d, rep) for _, d, _, rep in rows]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument('--hunter', required=True, help='path to the hunter_search binary')
    ap.add_argument('--data', default=os.path.join(os.path.dirname(__file__), '..', 'data'))
    args = ap.parse_args()
    preferred = table_polys(args.data)
    os.makedirs(os.path.join(args.data, 'fields'), exist_ok=True)
    for degree, bound in BOUNDS.items():
        rows = build(degree, bound, args.hunter, preferred)
        path = os.path.join(args.data, 'fields', 'degree%d.csv' % degree)
        with open(path, 'w') as fh:
            fh.write('# all degree-%d fields with |disc| <= %d, ascending |disc|\n' % (degree, bound))
            fh.write('# degree,disc,c0,...,c%d (ascending coefficients)\n' % degree)
            for d, rep in rows:
                fh.write(','.join(str(v) for v in [degree, d] + rep) + '\n')
        print(path, len(rows))


if __name__ == '__main__':
    main()
