"""Pure-Python enumeration kernel.

Reference implementation of the hot loops: exhaustive Gray-code walks over
all 2^k words of a coset ``offset + span(generators)``.  Words are Python
integer bitmasks (bit i = coordinate i), so any length up to 128 works
unchanged.  The compiled twin in ``_bitkernel.pyx`` must match this module
bit for bit; ``framecodes.kernels`` picks whichever is available.
"""

from __future__ import annotations

BACKEND = "python"


def weight_counts(gen_masks, offset, length):
    """Histogram of Hamming weights over ``offset + span(gen_masks)``.

    Returns a list of ``length + 1`` integers whose w-th entry counts the
    words of weight w.  The walk visits all 2^k combinations via a Gray
    code, flipping one generator per step.
    """
    gens = list(gen_masks)
    counts = [0] * (length + 1)
    word = offset
    counts[word.bit_count()] += 1
    for i in range(1, 1 << len(gens)):
        word ^= gens[(i & -i).bit_length() - 1]
        counts[word.bit_count()] += 1
    return counts


def words_up_to_weight(gen_masks, offset, max_weight):
    """Collect the words of ``offset + span(gen_masks)`` with weight <= max_weight.

    Returns masks in the order the Gray-code walk visits them.
    """
    gens = list(gen_masks)
    found = []
    word = offset
    if word.bit_count() <= max_weight:
        found.append(word)
    for i in range(1, 1 << len(gens)):
        word ^= gens[(i & -i).bit_length() - 1]
        if word.bit_count() <= max_weight:
            found.append(word)
    return found
