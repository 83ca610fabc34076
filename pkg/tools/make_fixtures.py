"""Regenerate the computed fixture files from the static algebra files.

Run from the repository root:  python tools/make_fixtures.py
"""
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, "src"))

from repherd import io as rio
from repherd.homological import ar_translate_inv
from repherd.modules import injective_at, projective_at

FIX = os.path.join(ROOT, "fixtures")


def tauinv4p1():
    alg = rio.load_algebra(os.path.join(FIX, "tilted5.json"))
    x = projective_at(alg, "1")
    for _ in range(4):
        x = ar_translate_inv(x)
    rio.dump_json(os.path.join(FIX, "tilted5_tauinv4p1.json"), rio.module_to_dict(x))


def tilting_files():
    a2 = rio.load_algebra(os.path.join(FIX, "a2.json"))
    rio.dump_json(
        os.path.join(FIX, "tilting_a2.json"),
        {"summands": [rio.module_to_dict(projective_at(a2, v)) for v in ("1", "2")]},
    )
    a3 = rio.load_algebra(os.path.join(FIX, "a3.json"))
    rio.dump_json(
        os.path.join(FIX, "tilting_a3.json"),
        {"summands": [rio.module_to_dict(projective_at(a3, v)) for v in ("1", "2", "3")]},
    )
    h5 = rio.load_algebra(os.path.join(FIX, "h5.json"))
    t = [
        projective_at(h5, "5"),
        projective_at(h5, "4"),
        ar_translate_inv(ar_translate_inv(projective_at(h5, "5"))),
        injective_at(h5, "5"),
        injective_at(h5, "4"),
    ]
    rio.dump_json(os.path.join(FIX, "tilting_h5.json"), {"summands": [rio.module_to_dict(x) for x in t]})


if __name__ == "__main__":
    tauinv4p1()
    tilting_files()
    print("fixtures regenerated under", FIX)
