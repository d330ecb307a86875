#!/usr/bin/env python3
"""Compare the word-level and factor-level Little walks empirically.

For a factor tuple d of some w in Psi+_r(v), the factor-level walk
produces a tuple d' of some x in Psi-_r(v).  It is an open question
whether some initial reduced word of w always makes the word-level walk
produce a word that splits, at the same length profile, into the
factors of d'.  This script counts how often such a word exists at desk
scale; it asserts nothing.

  python3 scripts/word_vs_factor_little.py -n 3 --max-length 3
"""

import argparse

from affsym.group import elements_of_length, right_r_covers
from affsym.little import generalized_little, phi_r
from affsym.stanley import alpha_decompositions, compositions_bounded
from affsym.words import CyclicSubset, Word, is_cyclically_decreasing, reduced_words


def splits_into(word: Word, profile, factors) -> bool:
    offset = 0
    for size, factor in zip(profile, factors):
        segment = Word(word.n, word.letters[offset : offset + size])
        offset += size
        if not is_cyclically_decreasing(segment):
            return False
        if CyclicSubset(word.n, segment.letters) != factor:
            return False
    return True


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", type=int, default=3)
    parser.add_argument("--max-length", type=int, default=3)
    args = parser.parse_args()
    n = args.n

    instances = matched = 0
    for l in range(args.max_length + 1):
        for v in elements_of_length(n, l):
            for r in range(n):
                for alpha in compositions_bounded(l + 1, n - 1):
                    for w in right_r_covers(v, r):
                        for d in alpha_decompositions(w, alpha):
                            out = generalized_little(v, r, d)
                            instances += 1
                            for a in reduced_words(w):
                                _, c = phi_r(v, r, a)
                                if splits_into(c, out.alpha, out.factors):
                                    matched += 1
                                    break

    print(f"n={n} max_length={args.max_length}")
    print(f"factor-tuple instances:          {instances}")
    print(f"with a matching word-level run:  {matched}")
    if instances:
        print(f"agreement rate:                  {matched / instances:.3f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
