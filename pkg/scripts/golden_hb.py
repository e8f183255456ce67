"""Print the two-row rectangle generating polynomials for b = 25..30.

These six polynomials, and the mod-3 reduction of the b = 30 case, are the
frozen targets of the golden-value acceptance tests; this script exists to
regenerate them by eye.
"""

import time

from invkostka import h_polynomial


def main() -> None:
    t0 = time.perf_counter()
    for b in range(25, 31):
        print(f"h_{b}(t) = {h_polynomial(b).pretty()}")
    h30 = h_polynomial(30)
    print(f"h_30(t) mod 3 = {h30.reduce_mod(3).pretty()}")
    print(f"elapsed: {time.perf_counter() - t0:.3f}s")


if __name__ == "__main__":
    main()
