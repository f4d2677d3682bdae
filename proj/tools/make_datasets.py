# Copyright 2026 The vqcbench developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the checked-in benchmark CSVs under data/.

wine.csv     - the UCI Wine dataset as bundled with scikit-learn
               (178 rows, 13 features, 3 classes sized 59/71/48).
diabetes.csv - a synthetic stand-in with the published schema of the
               168-row diabetes set used in the literature: 8 Pima-style
               features, binary Outcome with a 65%/35% class balance, and
               class overlap calibrated so a linear baseline lands around
               75% accuracy. Drop in a real CSV with the same header to
               benchmark the original data.

Deterministic: fixed seeds, stable formatting. Run from the repo root:
    python3 tools/make_datasets.py
"""

import csv
import pathlib

import numpy as np
from sklearn.datasets import load_wine
from sklearn.linear_model import LogisticRegression
from sklearn.model_selection import cross_val_score
from sklearn.preprocessing import StandardScaler

OUT_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"


def write_wine() -> None:
    wine = load_wine()
    path = OUT_DIR / "wine.csv"
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(list(wine.feature_names) + ["class"])
        for row, label in zip(wine.data, wine.target):
            writer.writerow([format(v, "g") for v in row] + [int(label)])
    counts = np.bincount(wine.target)
    print(f"wine.csv: {wine.data.shape[0]} rows, classes {counts.tolist()}")


def write_diabetes(seed: int = 20240917) -> None:
    rng = np.random.default_rng(seed)
    n_total, n_pos = 168, 59  # 109 negative / 59 positive ~ 65% / 35%
    n_neg = n_total - n_pos

    def sample(n, glucose_mu, bmi_mu, age_mu, pedigree_mu, insulin_mu):
        pregnancies = rng.poisson(3.2, n)
        glucose = rng.normal(glucose_mu, 26.0, n)
        blood_pressure = rng.normal(71.0, 11.0, n)
        skin = rng.normal(27.0, 9.0, n)
        insulin = np.abs(rng.normal(insulin_mu, 85.0, n))
        bmi = rng.normal(bmi_mu, 6.3, n)
        pedigree = np.abs(rng.normal(pedigree_mu, 0.30, n))
        age = np.abs(rng.normal(age_mu, 10.0, n)) + 21
        return np.column_stack(
            [pregnancies, glucose, blood_pressure, skin, insulin, bmi,
             pedigree, age])

    negative = sample(n_neg, glucose_mu=112.0, bmi_mu=30.6, age_mu=9.0,
                      pedigree_mu=0.40, insulin_mu=95.0)
    positive = sample(n_pos, glucose_mu=140.0, bmi_mu=34.8, age_mu=15.0,
                      pedigree_mu=0.55, insulin_mu=135.0)
    features = np.vstack([negative, positive])
    labels = np.array([0] * n_neg + [1] * n_pos)
    features = np.clip(features, 0, None)
    features[:, 1] = np.clip(features[:, 1], 55, 200)  # glucose
    features[:, 2] = np.clip(features[:, 2], 40, 110)  # blood pressure
    features[:, 5] = np.clip(features[:, 5], 18, 55)   # bmi

    order = rng.permutation(n_total)
    features, labels = features[order], labels[order]

    baseline = cross_val_score(
        LogisticRegression(max_iter=2000),
        StandardScaler().fit_transform(features), labels, cv=5).mean()
    print(f"diabetes.csv: {n_total} rows, {n_neg}/{n_pos} split, "
          f"linear baseline {baseline:.3f}")
    if not 0.68 <= baseline <= 0.82:
        raise SystemExit("baseline drifted out of the calibrated band; "
                         "adjust the class means before committing")

    header = ["Pregnancies", "Glucose", "BloodPressure", "SkinThickness",
              "Insulin", "BMI", "DiabetesPedigreeFunction", "Age", "Outcome"]
    path = OUT_DIR / "diabetes.csv"
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row, label in zip(features, labels):
            cells = [format(round(float(v), 3), "g") for v in row]
            writer.writerow(cells + [int(label)])


def main() -> None:
    OUT_DIR.mkdir(exist_ok=True)
    write_wine()
    write_diabetes()


if __name__ == "__main__":
    main()
