"""Generate ROC curves for the three receivers and the detection-vs-SNR benchmark.

The scenario (n_s = 0.01, n_b = 20, kappa = 0.01, M = 1.5e6) sits in the
quantum-advantage regime where the receiver ordering FF-SFG >= OPA >= homodyne
holds pointwise.
"""
import pathlib
import sys

from qillum import cli

OUT = pathlib.Path(__file__).resolve().parent.parent / "results"


def main():
    OUT.mkdir(exist_ok=True)
    jobs = [
        (
            ["roc", "--ns", "0.01", "--nb", "20", "--kappa", "0.01", "--m", "1500000"],
            "roc_receivers.csv",
        ),
        (["snr", "--pf", "0.01"], "pd_vs_snr_pf1e-2.csv"),
        (["snr", "--pf", "1e-4"], "pd_vs_snr_pf1e-4.csv"),
        (["snr", "--pf", "1e-6"], "pd_vs_snr_pf1e-6.csv"),
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
