"""Tables of higher-genus relative and log invariants from refined counts.

The refined count, substituted at q = e^(iu) and multiplied by the right
power of 2 sin(u/2), is a generating series whose u-coefficients are the
relative invariants with a top lambda-class insertion; one more factor
(2 sin(u/2))^(2h) converts to log invariants.  The degree-1 plane case shows
why Laurent series are needed: its relative series starts at u^(-1).
"""

from floorgw import (
    degree_hirzebruch,
    degree_p2,
    gw_relative_series,
    log_series,
    points_for_genus,
)


def table(kind, series):
    print(f"  {kind} series: {series.series}")
    for g, value in series.invariants():
        print(f"    g = {g}: {value}")


def main():
    cases = [
        (degree_p2(1), 0),
        (degree_p2(3), 0),
        (degree_p2(3), 1),
        (degree_hirzebruch(0, 1, 1), 0),
        (degree_hirzebruch(2, 1, 2), 0),
    ]
    for delta, g in cases:
        n = points_for_genus(delta, g)
        print(f"{delta.label}, n = {n} (minimal genus {g})")
        table("relative", gw_relative_series(delta, n, 14))
        table("log", log_series(delta, n, 14))
        print()


if __name__ == "__main__":
    main()
