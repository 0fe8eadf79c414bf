#!/usr/bin/env python3
"""Convert GAP transgrp library records into the plain-text corpus format.

Usage: extract_transgrp.py <transNN.grp[.gz]> <degree> <first> <last> > out.txt

Input is one of the data files of the GAP `transgrp` package (A. Hulpke).
Output lines are `<degree>T<index> | gen ; gen ; ...` with 1-based cycles.
"""
import gzip
import sys


def records(text):
    body = text[text.index(":=") + 2:]
    body = "".join(body.split())
    depth = 0
    start = None
    for i, ch in enumerate(body):
        if ch == "[":
            depth += 1
            if depth == 2:
                start = i
        elif ch == "]":
            if depth == 2:
                yield body[start + 1:i]
            depth -= 1
            if depth == 0:
                return


def split_record(rec):
    gens, name = [], ""
    depth, cur, in_str = 0, "", False
    for ch in rec:
        if ch == '"':
            in_str = not in_str
            cur += ch
            continue
        if in_str:
            cur += ch
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            gens.append(cur)
            cur = ""
        else:
            cur += ch
    gens.append(cur)
    if gens and gens[-1].startswith('"'):
        name = gens.pop().strip('"')
    return gens, name


def main():
    path, degree, first, last = sys.argv[1], int(sys.argv[2]), int(sys.argv[3]), int(sys.argv[4])
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "rt", encoding="latin-1") as f:
        text = f.read()
    print(f"# Transitive groups of degree {degree}, indices {first}-{last}.")
    print("# Source: GAP transgrp package data (A. Hulpke), file " + path.split("/")[-1] + ".")
    print("# Format: <degree>T<index> | generator ; generator ; ...  (1-based cycles)")
    for idx, rec in enumerate(records(text), start=1):
        if idx < first:
            continue
        if idx > last:
            break
        gens, name = split_record(rec)
        print(f"# {degree}T{idx}: {name}")
        print(f"{degree}T{idx} | " + " ; ".join(gens))


if __name__ == "__main__":
    main()
