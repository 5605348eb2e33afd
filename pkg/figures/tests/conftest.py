import csv
import os

import pytest

pytest.importorskip("btcfig", reason="figures package not installed")

SUMMARY_COLUMNS = ["strategy", "peers", "tx_rate", "replications",
                   "prop_mean", "prop_ci", "conf_mean", "conf_ci",
                   "fork_count_mean", "fork_count_ci",
                   "overlap_mean", "overlap_std", "n_forks_total"]

METRICS_COLUMNS = ["txid", "origin", "t_g", "t_a", "propagation",
                   "confirmation"]

FORKS_COLUMNS = ["height", "fork_hash", "main_hash", "fork_b_g", "main_b_g",
                 "gap", "overlap", "branchlen"]


def write_csv(path, header, rows):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def metrics_rows(base, n):
    rows = []
    for k in range(n):
        t_g = 10.0 * k
        prop = base + 0.01 * k
        conf = f"{3600.0 + base * 100 + k:.9f}" if k % 3 else ""
        rows.append([f"tx{k:07d}", 2, f"{t_g:.9f}", f"{t_g + prop:.9f}",
                     f"{prop:.9f}", conf])
    return rows


@pytest.fixture(scope="session")
def matrix_dir(tmp_path_factory):
    """A small synthetic experiment tree: 2 strategies x P8 x rate 3, 2 runs."""
    root = tmp_path_factory.mktemp("matrix")
    summary = [
        ["normal", 8, 3.0, 2, 0.81, 0.02, 4100.0, 150.0, 0.5, 0.4,
         0.97, 0.01, 1],
        ["random", 8, 3.0, 2, 0.59, 0.01, 3900.0, 120.0, 0.0, 0.0,
         "", "", 0],
    ]
    write_csv(root / "summary.csv", SUMMARY_COLUMNS, summary)
    for strategy, base in (("normal", 0.8), ("random", 0.55)):
        for r in (1, 2):
            d = root / strategy / "P8" / "lam3" / f"run{r}"
            write_csv(d / "metrics.csv", METRICS_COLUMNS,
                      metrics_rows(base + 0.05 * r, 30))
            forks = []
            if strategy == "normal" and r == 1:
                forks = [[3, "blk00004", "blk00003", "1801.60", "1800.00",
                          "1.60", "0.990000", 1],
                         [7, "blk00009", "blk00008", "4203.20", "4200.00",
                          "3.20", "", 1]]
            write_csv(d / "forks.csv", FORKS_COLUMNS, forks)
    return root
