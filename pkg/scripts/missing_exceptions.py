"""List the (T, P) pairs at small order where the origin guarantee fails but no
catalog entry matches, and confirm each with the permutation oracle.

    python scripts/missing_exceptions.py --orders 5 6 7
"""

import argparse

from tourpaths.core import from_trn, is_strong, members, outsection, insection, strong_components
from tourpaths.embed import brute_force_origins
from tourpaths.pathtype import parse_type
from tourpaths.verify import verify_ht


def describe(trn: str, lit: str) -> str:
    t = from_trn(trn)
    p = parse_type(lit)
    org = brute_force_origins(t, p)
    non = [v + 1 for v in members(((1 << t.n) - 1) & ~org)]
    sec = outsection if p.is_outpath else insection
    pairs = [
        (x + 1, y + 1)
        for x in range(t.n) for y in range(x + 1, t.n)
        if bin(sec(t, 1 << x | 1 << y)).count("1") >= p.b1 + 1 and not (org >> x & 1 or org >> y & 1)
    ]
    comps = ["".join(str(v + 1) for v in members(c)) for c in strong_components(t)]
    return (f"{trn}  {lit}  S={non}  strong={is_strong(t)}  components={comps}  "
            f"failing pairs={pairs}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[5, 6, 7])
    args = ap.parse_args()
    for n in args.orders:
        rep = verify_ht(n)
        print(f"order {n}: {len(rep.violations)} unmatched pairs, {rep.details['exception_hits']} catalog hits")
        for v in rep.violations:
            print("  " + describe(v.trn, v.path_type))


if __name__ == "__main__":
    main()
