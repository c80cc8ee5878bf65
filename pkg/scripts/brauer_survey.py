#!/usr/bin/env python3
"""Tabulate the graded Brauer groups and twist subgroups of the corpus."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from supercoh import brauer, corpus


def main():
    print(f"{'complex':10s} {'ku group':28s} {'ku twist':20s} {'ko group':28s} {'ko twist':20s}")
    for name in corpus.CORPUS_NAMES:
        x = corpus.complex_by_name(name)
        t0 = time.time()
        row = [
            str(brauer.abstract_group(x, "ku")),
            str(brauer.twist_subgroup(x, "ku")),
            str(brauer.abstract_group(x, "ko")),
            str(brauer.twist_subgroup(x, "ko")),
        ]
        print(
            f"{name:10s} {row[0]:28s} {row[1]:20s} {row[2]:28s} {row[3]:20s}"
            f"  ({time.time()-t0:.2f}s)"
        )


if __name__ == "__main__":
    main()
