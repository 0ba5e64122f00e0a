#!/usr/bin/env python3
"""Convert GML, Pajek (.net) or whitespace edge lists to a plain `u v` edge list.

Usage: convert_network.py INPUT OUTPUT

Only the first two fields of each edge are kept; weights, timestamps and
directions are dropped. Self-loops and duplicates are left for netmix to
normalize.
"""

import re
import sys


def gml_edges(text):
    for block in re.finditer(r"edge\s*\[(.*?)\]", text, re.S):
        body = block.group(1)
        s = re.search(r"\bsource\s+(-?\d+)", body)
        t = re.search(r"\btarget\s+(-?\d+)", body)
        if s and t:
            yield s.group(1), t.group(1)


def pajek_edges(text):
    in_edges = False
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            head = line.split()[0].lower()
            in_edges = head in ("*edges", "*arcs")
            if head in ("*edgeslist", "*arcslist"):
                raise SystemExit("list-style Pajek sections are not supported")
            continue
        if in_edges:
            fields = line.split()
            if len(fields) >= 2:
                yield fields[0], fields[1]


def plain_edges(text):
    for line in text.splitlines():
        line = line.strip()
        if not line or line[0] in "#%":
            continue
        fields = line.replace(",", " ").split()
        if len(fields) >= 2:
            yield fields[0], fields[1]


def main():
    if len(sys.argv) != 3:
        raise SystemExit(__doc__)
    src, dst = sys.argv[1], sys.argv[2]
    with open(src, encoding="utf-8", errors="replace") as f:
        text = f.read()
    lower = src.lower()
    if lower.endswith(".gml"):
        edges = gml_edges(text)
    elif lower.endswith(".net") or text.lstrip().lower().startswith("*vertices"):
        edges = pajek_edges(text)
    else:
        edges = plain_edges(text)
    count = 0
    with open(dst, "w", encoding="utf-8") as out:
        for u, v in edges:
            out.write(f"{u} {v}\n")
            count += 1
    print(f"{dst}: {count} edges")


if __name__ == "__main__":
    main()
