"""Cross-check the analytic receiver error probabilities against seeded sampling."""
import pathlib
import sys

from qillum import cli

OUT = pathlib.Path(__file__).resolve().parent.parent / "results"


def main():
    OUT.mkdir(exist_ok=True)
    common = ["--ns", "0.01", "--nb", "20", "--kappa", "0.01", "--m", "100000",
              "--trials", "200000", "--seed", "2024"]
    for receiver in ("homodyne", "opa"):
        path = OUT / f"montecarlo_{receiver}.json"
        code = cli.run(["montecarlo", *common, "--receiver", receiver, "-o", str(path)])
        if code != 0:
            return code
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
