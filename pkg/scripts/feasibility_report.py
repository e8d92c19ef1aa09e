"""Report pulse duration and power for microwave and broadband source parameters."""
import pathlib
import sys

from qillum import cli

OUT = pathlib.Path(__file__).resolve().parent.parent / "results"


def main():
    OUT.mkdir(exist_ok=True)
    jobs = [
        (["feasibility", "--freq-hz", "1e10", "--bandwidth-hz", "1e8",
          "--ns", "0.01", "--m", "1e6"], "feasibility_microwave.json"),
        (["feasibility", "--freq-hz", "1e10", "--bandwidth-hz", "1e12",
          "--ns", "0.01", "--m", "1e6"], "feasibility_broadband.json"),
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
