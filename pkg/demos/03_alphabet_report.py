"""
Accuracy table for the italic capitals
======================================

Runs detect + correct on every bundled italic capital and prints a
Markdown table with the angle before and after correction, the accuracy
and the median time of five runs.
"""

import string

from cogslant import render_fixture
from cogslant.bench import evaluate, summarize, write_markdown

rows = [evaluate(c, render_fixture(f"{c}-italic")) for c in string.ascii_uppercase]
print(write_markdown(rows, summarize(rows)))

# The same numbers for the synthetically sheared set, where the true slant
# is known to be 12 degrees for every letter.
rows = [evaluate(c, render_fixture(f"{c}-sheared")) for c in string.ascii_uppercase]
print(write_markdown(rows, summarize(rows)))
