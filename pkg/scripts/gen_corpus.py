"""
Write the example structures used in docs and benchmarks:
  python -m scripts.gen_corpus [OUT_DIR]
"""

import sys
from pathlib import Path

from libs.constructions.generators import direct_product, gen_affine, gen_modring, gen_powerset
from libs.io.structure_file import dump_structure

CORPUS = [
    gen_powerset(1, 2, 2),
    gen_powerset(2, 2, 3),
    gen_modring(4, 2, 2),
    gen_modring(6, 2, 2),
    gen_modring(5, 2, 3),
    gen_affine(2),
    gen_affine(3),
    direct_product(gen_powerset(1, 2, 2), gen_modring(3, 2, 2)),
]


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    out.mkdir(parents=True, exist_ok=True)
    for s in CORPUS:
        dump_structure(s, out / f"{s.name}.snr")
        print(f"wrote {s.name} (k={s.k}, m={s.m}, n={s.n})")


if __name__ == "__main__":
    main()
