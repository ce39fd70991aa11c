#!/usr/bin/env python3
"""Regenerates the CSV files under data/.

wine.csv    -- the UCI wine recognition data as bundled with scikit-learn
               (178 rows, 13 numeric attributes, classes class_0/1/2).
vehicle.csv -- a synthetic benchmark shaped like the Statlog vehicle
               silhouettes data (846 rows, 18 numeric attributes, four
               classes sized 218/212/217/199). The real data set is not
               redistributable through this build environment, so a seeded
               stand-in is generated instead. Rows are noisy views of a
               small set of latent shape factors: each attribute measures
               one factor plus heavy view noise, so single attributes are
               weakly informative and classifiers improve by pooling
               several redundant views of the same factor, mirroring how
               the overlapping silhouette descriptors behave.

Both files are deterministic; run from the repository root:

    python3 scripts/make_datasets.py
"""

import csv
import numpy as np
from sklearn.datasets import load_wine

VEHICLE_CLASSES = [("bus", 218), ("opel", 212), ("saab", 217), ("van", 199)]
VEHICLE_ATTRS = 18
VEHICLE_SEED = 20240817
# Latent shape factors behind the attributes. Class centers sit
# VEHICLE_FACTOR_SEP apart per factor (in within-class units) and every
# attribute observes its factor through VEHICLE_VIEW_NOISE measurement
# noise, so single attributes stay weak while pooled views denoise.
VEHICLE_FACTORS = 6
VEHICLE_FACTOR_SEP = 0.8
VEHICLE_VIEW_NOISE = 0.9


def write_wine(path):
    wine = load_wine()
    names = [n.replace(" ", "_") for n in wine.feature_names]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(names + ["class"])
        for row, label in zip(wine.data, wine.target):
            w.writerow([format(v, "g") for v in row] + [wine.target_names[label]])


def write_vehicle(path):
    rng = np.random.default_rng(VEHICLE_SEED)
    n_classes = len(VEHICLE_CLASSES)
    # Each class has a center per latent factor; a row draws its factor
    # vector around the class center, then every attribute reports its
    # assigned factor plus measurement noise, scaled into an integer range
    # like silhouette shape descriptors.
    factor_centers = rng.standard_normal((n_classes, VEHICLE_FACTORS))
    factor_centers *= VEHICLE_FACTOR_SEP
    attr_factor = np.arange(VEHICLE_ATTRS) % VEHICLE_FACTORS
    base = rng.uniform(80.0, 220.0, size=VEHICLE_ATTRS)
    spreads = rng.uniform(8.0, 30.0, size=VEHICLE_ATTRS)
    rows = []
    for cls_idx, (name, count) in enumerate(VEHICLE_CLASSES):
        factors = factor_centers[cls_idx] + rng.standard_normal(
            (count, VEHICLE_FACTORS)
        )
        views = factors[:, attr_factor] + rng.normal(
            0.0, VEHICLE_VIEW_NOISE, size=(count, VEHICLE_ATTRS)
        )
        feats = base + views * spreads
        for r in feats:
            rows.append(([format(round(v), "d") for v in r], name))
    order = rng.permutation(len(rows))
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow([f"a{i + 1}" for i in range(VEHICLE_ATTRS)] + ["class"])
        for i in order:
            cells, name = rows[i]
            w.writerow(cells + [name])


if __name__ == "__main__":
    write_wine("data/wine.csv")
    write_vehicle("data/vehicle.csv")
    print("wrote data/wine.csv and data/vehicle.csv")
