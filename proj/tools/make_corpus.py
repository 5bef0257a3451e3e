#!/usr/bin/env python3
"""Regenerate the bundled corpus. Output is a pure function of MASTER_SEED."""
import itertools
import json
import pathlib
import random

MASTER_SEED = 20240611
COUNT = 20
OUT = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def write(name, spec):
    (OUT / f"{name}.json").write_text(json.dumps(spec, indent=2) + "\n")


def minimal(gens):
    gens = sorted(set(gens), key=lambda g: (len(g), g))
    keep = []
    for g in gens:
        if not any(set(h) <= set(g) for h in keep):
            keep.append(g)
    return keep


def dimension(gens, nvars):
    # largest vertex set containing no generator support
    for size in range(nvars, -1, -1):
        for face in itertools.combinations(range(nvars), size):
            if not any(set(g) <= set(face) for g in gens):
                return size
    return -1


def random_squarefree(rng, index, seen):
    names = ["x", "y", "z", "u", "v"]
    while True:
        nvars = rng.randint(3, 5)
        ngens = rng.randint(2, 6)
        gens = []
        for _ in range(ngens):
            deg = rng.choice([2, 2, 3])
            gens.append(tuple(sorted(rng.sample(range(nvars), deg))))
        gens = minimal(gens)
        key = (nvars, tuple(gens))
        if len(gens) >= 2 and dimension(gens, nvars) >= 1 and key not in seen:
            seen.add(key)
            break
    ideal = ["*".join(names[i] for i in g) for g in gens]
    return {
        "characteristic": 32003,
        "variables": names[:nvars],
        "ideal": ideal,
        "labels": {"name": f"sqfree{index:02d}", "role": "squarefree", "seed": MASTER_SEED},
    }


def main():
    OUT.mkdir(exist_ok=True)
    write("ex54", {
        "characteristic": 32003,
        "variables": ["a", "b", "c", "d", "e"],
        "ideal": ["a*c", "a*d", "b*c", "b*d"],
        "s2_ification": {"summands": [["a", "b"], ["c", "d"]]},
        "labels": {"name": "ex54", "role": "golden"},
    })
    write("ex44", {
        "characteristic": 32003,
        "variables": ["x", "y", "z"],
        "ideal": ["x*y", "x*z"],
        "labels": {"name": "ex44", "role": "golden"},
    })
    write("buchsbaum", {
        "characteristic": 32003,
        "variables": ["x", "y", "u", "v"],
        "ideal": ["x*u", "x*v", "y*u", "y*v"],
        "labels": {"name": "buchsbaum", "role": "golden"},
    })
    write("cm_twisted_cubic", {
        "characteristic": 32003,
        "variables": ["a", "b", "c", "d"],
        "ideal": ["a*c-b^2", "a*d-b*c", "b*d-c^2"],
        "labels": {"name": "cm_twisted_cubic", "role": "cm"},
    })
    write("cm_fat_point", {
        "characteristic": 32003,
        "variables": ["x", "y", "z"],
        "ideal": ["x^2", "x*y", "y^2"],
        "labels": {"name": "cm_fat_point", "role": "cm"},
    })
    write("cm_pentagon", {
        "characteristic": 32003,
        "variables": ["x1", "x2", "x3", "x4", "x5"],
        "ideal": ["x1*x3", "x1*x4", "x2*x4", "x2*x5", "x3*x5"],
        "labels": {"name": "cm_pentagon", "role": "cm"},
    })
    rng = random.Random(MASTER_SEED)
    seen = set()
    for k in range(COUNT):
        write(f"sqfree{k:02d}", random_squarefree(rng, k, seen))


if __name__ == "__main__":
    main()
