#!/usr/bin/env python3
"""Writes TSV train/test corpora for one 20-newsgroups binary pair.

Uses scikit-learn's fetcher (downloads on first use) with headers,
footers and quotes stripped. Tabs and newlines inside the text are
escaped so each document fits on one `label<TAB>text` line.

Usage:
    convert_20news_pair.py OUT_DIR [POS_CATEGORY NEG_CATEGORY]

Defaults to comp.sys.ibm.pc.hardware vs comp.sys.mac.hardware.
"""

import sys
from pathlib import Path

from sklearn.datasets import fetch_20newsgroups


def escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def write_split(path: Path, subset: str, pos: str, neg: str) -> None:
    data = fetch_20newsgroups(subset=subset, categories=[pos, neg], remove=("headers", "footers", "quotes"))
    pos_index = data.target_names.index(pos)
    with path.open("w", encoding="utf-8") as out:
        for text, target in zip(data.data, data.target):
            label = "pos" if target == pos_index else "neg"
            out.write(f"{label}\t{escape(text)}\n")
    print(f"wrote {path} ({len(data.data)} documents)")


def main() -> int:
    if len(sys.argv) not in (2, 4):
        print(__doc__, file=sys.stderr)
        return 2
    out_dir = Path(sys.argv[1])
    pos = sys.argv[2] if len(sys.argv) == 4 else "comp.sys.ibm.pc.hardware"
    neg = sys.argv[3] if len(sys.argv) == 4 else "comp.sys.mac.hardware"
    out_dir.mkdir(parents=True, exist_ok=True)
    write_split(out_dir / "train.tsv", "train", pos, neg)
    write_split(out_dir / "test.tsv", "test", pos, neg)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
