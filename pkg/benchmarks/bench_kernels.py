"""Compare the compiled and pure-Python Laurent kernels on engine workloads.

Run:  python3 benchmarks/bench_kernels.py
The backend is forced through QCK_KERNEL in subprocesses so each timing
uses a cleanly imported engine.
"""

import json
import os
import subprocess
import sys
import textwrap
import time

WORKLOAD = textwrap.dedent(
    """
    import json, random, sys, time
    import qck
    from qck.cartan import CartanDatum
    from qck.laurent import QLaurentScalar
    from qck.seeds import build_seed
    from qck.torus import MutationState, torus_mul
    from qck import verifier as V

    t = {}
    rng = random.Random(0)

    # raw scalar convolution
    a = QLaurentScalar({e: rng.randint(-5, 5) for e in range(-200, 200)})
    b = QLaurentScalar({e: rng.randint(-5, 5) for e in range(-200, 200)})
    t0 = time.perf_counter()
    for _ in range(60):
        c = a * b
    t["scalar_mul"] = time.perf_counter() - t0

    # deep mutation walk
    seed = build_seed(CartanDatum.named("A3"), (1, 2, 1, 3, 2, 1))
    t0 = time.perf_counter()
    state = MutationState.initial(seed)
    for _ in range(400):
        k = rng.choice(state.seed.exchangeable())
        state = state.mutate(k)
    t["mutation_walk"] = time.perf_counter() - t0

    # identity suite over the functional realization
    t0 = time.perf_counter()
    for i in seed.indices():
        for j in seed.indices():
            if j <= i:
                assert V.verify_commutation(seed, i, j).passed
    for k in seed.exchangeable():
        assert V.verify_exchange(seed, k).passed
    t["identity_suite"] = time.perf_counter() - t0

    print(json.dumps({"backend": qck.kernel_backend, "timings": t}))
    """
)


def run(backend: str):
    env = dict(os.environ, QCK_KERNEL=backend)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    results = []
    for backend in ("python", "c"):
        try:
            results.append(run(backend))
        except subprocess.CalledProcessError as exc:
            print(f"{backend}: failed ({exc.stderr.strip().splitlines()[-1]})")
    for res in results:
        print(f"backend={res['backend']}")
        for name, secs in res["timings"].items():
            print(f"  {name:15s} {secs * 1000:9.1f} ms")
    if len(results) == 2:
        print("speedup (python/c):")
        for name in results[0]["timings"]:
            ratio = results[0]["timings"][name] / max(results[1]["timings"][name], 1e-9)
            print(f"  {name:15s} {ratio:6.2f}x")


if __name__ == "__main__":
    main()
