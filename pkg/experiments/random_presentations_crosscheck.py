from __future__ import annotations
from typing import Any, Tuple
from argparse import ArgumentParser

import h5py
import numpy as np
from tqdm import tqdm

from numpy.random import default_rng

import pyopgen as pog

def save_metadata(file: Any, seed: int, kind: str, num_runs: int, n_max: int):
    """
    Saves all the metadata of a run in an h5py-file

    Args:
        file (Any): The file object to be saved in
        seed (int): The seed used for random number generation
        kind (str): Whether nonsym or shuffle presentations are drawn.
        num_runs (int): The total number of presentations.
        n_max (int): The largest arity compared.
    """
    file.attrs["seed"] = seed
    file.attrs["kind"] = kind
    file.attrs["num_runs"] = num_runs
    file.attrs["n_max"] = n_max

def generate_random_presentation(rng: np.random.Generator,
                                 kind: str) -> pog.Presentation:
    if kind == "nonsym":
        return pog.random_nonsym_presentation(rng)
    return pog.random_shuffle_presentation(rng)

def create_dim_data_sets(file: h5py.File,
                         run: int,
                         p: pog.Presentation,
                         n_max: int) -> Tuple[h5py.Dataset, h5py.Dataset]:
    """
    Creates and returns the datasets in which the dimensions found by
    counting and by the equation system are saved.
    """
    grp = file.create_group(f"presentation_{run}")
    grp.attrs["dsl"] = p.to_dsl()
    dset_oracle = grp.create_dataset("oracle_dims", shape=(n_max,), dtype="i8")
    dset_system = grp.create_dataset("system_dims", shape=(n_max,), dtype="i8")
    return dset_oracle, dset_system

def main(filename: str, kind: str = "nonsym", num_runs: int = 200,
         n_max: int = 10):
    seed = 20240311
    rng = default_rng(seed=seed)
    mismatches = 0
    with h5py.File(filename, "w") as file:
        save_metadata(file, seed, kind, num_runs, n_max)
        for run in tqdm(range(num_runs)):
            p = generate_random_presentation(rng, kind)
            dset_oracle, dset_system = create_dim_data_sets(file, run, p, n_max)
            system = pog.build_system(p)
            dset_system[:] = pog.solve_coefficients(system, n_max).dims()
            dset_oracle[:] = pog.basis_dims(p, n_max)
            if not np.array_equal(dset_oracle[:], dset_system[:]):
                print(p.to_dsl())
                mismatches += 1
        file.attrs["mismatches"] = mismatches
    print(f"{mismatches} of {num_runs} presentations disagree.")

if __name__ == "__main__":
    parser = ArgumentParser()
    parser.add_argument("filepath", type=str, nargs=1)
    parser.add_argument("--kind", choices=["nonsym", "shuffle"], default="nonsym")
    parser.add_argument("--runs", type=int, default=200)
    parser.add_argument("--n-max", type=int, default=10)
    args = parser.parse_args()
    filepath = args.filepath[0] + f"_{args.kind}.hdf5"
    print("Data will be saved in " + filepath)
    main(filepath, args.kind, args.runs, args.n_max)
