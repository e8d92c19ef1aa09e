"""Sweep error-probability bounds and receiver error curves over the pulse length.

Writes CSVs for the low-signal regime (where the entangled upper bound dips
below the classical lower bound) and the bright-signal regime for contrast.
"""
import pathlib
import sys

from qillum import cli

OUT = pathlib.Path(__file__).resolve().parent.parent / "results"


def main():
    OUT.mkdir(exist_ok=True)
    common = ["--nb", "20", "--kappa", "0.01", "--m-min", "1e2", "--m-max", "1e9"]
    jobs = [
        (["bounds", "--ns", "0.01", *common], "bounds_ns0.01.csv"),
        (["bounds", "--ns", "1.0", *common], "bounds_ns1.csv"),
        (["opa", "--ns", "0.01", *common], "receiver_errors_ns0.01.csv"),
    ]
    for argv, name in jobs:
        path = OUT / name
        code = cli.run(argv + ["-o", str(path)])
        if code != 0:
            return code
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
