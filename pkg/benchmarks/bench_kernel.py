"""Compare the compiled and pure-Python coloring kernels.

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import timeit

from s3links import _kernel_py
from s3links.diagram import Crossing, Diagram
from s3links.notation import double_twist_diagram, plat_diagram, torus2_diagram

try:
    from s3links import _ckernel
except ImportError:
    _ckernel = None


def random_diagram(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return Diagram(n, tuple(Crossing(rng.choice((1, -1)), rng.randrange(n), i, perm[i])
                            for i in range(n)))


def cases():
    yield "T(2,12)", torus2_diagram(12)
    yield "T(2,20)", torus2_diagram(20)
    yield "J(7,7)", double_twist_diagram(7, 7)
    yield "C(2,4,-2,2,6)", plat_diagram(2, 4, -2, 2, 6)
    rng = random.Random(1)
    # random incidence structures split into many components, so the
    # search has to branch instead of propagating
    yield "random 10 arcs", random_diagram(rng, 10)
    yield "random 14 arcs", random_diagram(rng, 14)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    backends = [("python", _kernel_py.enumerate_colorings)]
    if _ckernel is not None:
        backends.append(("cython", _ckernel.enumerate_colorings))
    else:
        print("compiled kernel not built; timing the Python kernel only")

    print(f"{'diagram':<16}{'colorings':>10}" + "".join(f"{b + ' ms':>12}" for b, _ in backends)
          + ("    speedup" if len(backends) == 2 else ""))
    for name, d in cases():
        args_ = (d.num_arcs, *d.arrays())
        count = len(backends[0][1](*args_))
        times = []
        for _, fn in backends:
            number = 3
            best = min(timeit.repeat(lambda: fn(*args_), number=number, repeat=args.repeat))
            times.append(best / number * 1000)
        line = f"{name:<16}{count:>10}" + "".join(f"{t:>12.3f}" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>10.1f}x"
        print(line)


if __name__ == "__main__":
    main()
