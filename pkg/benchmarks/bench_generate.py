"""Compare the numba kernel against the plain-Python kernel on generation.

    python benchmarks/bench_generate.py --content 10,10 --repeat 3
"""

import argparse
import time

from necklace_bound import JIT_ENABLED
from necklace_bound.counting import count_necklaces
from necklace_bound.generation import generate_blocks
from necklace_bound.core import parse_content


def run(content, kind, jit):
    t0 = time.perf_counter()
    total = sum(len(b) for b in generate_blocks(content, kind, jit=jit))
    return total, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--content", default="10,10")
    ap.add_argument("--kind", default="necklace")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-python", action="store_true")
    args = ap.parse_args()
    c = parse_content(args.content)
    expected = count_necklaces(c) if args.kind == "necklace" else None

    modes = [("numba", True)] if JIT_ENABLED else []
    if not args.skip_python:
        modes.append(("python", False))
    if JIT_ENABLED:
        run(c, args.kind, True)  # compile / load cache
    for name, jit in modes:
        times = []
        for _ in range(args.repeat):
            total, dt = run(c, args.kind, jit)
            times.append(dt)
        check = "" if expected is None else f" (formula {expected}, {'ok' if total == expected else 'MISMATCH'})"
        print(f"{name:7s} content={args.content} kind={args.kind}: {total} words, best {min(times):.4f}s{check}")


if __name__ == "__main__":
    main()
