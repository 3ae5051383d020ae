"""Character grids and certificate sweeps shared by the CLI and the tests."""

import itertools
import random
from concurrent.futures import ProcessPoolExecutor

from .characters import cone_tests, is_ample, is_l_character, is_orbitally_p_close
from .frobenius import FrobeniusModel
from .hasse import INCONSISTENT, hasse_certificate
from .zipdata import strata_table

GRID_LIMIT = 2_000_000


def character_grid(rd, box):
    """All integral characters with coordinates in [-box, box]."""
    if (2 * box + 1) ** rd.dim > GRID_LIMIT:
        raise OverflowError(f"grid of radius {box} in dimension {rd.dim} is too large")
    return [tuple(c) for c in itertools.product(range(-box, box + 1), repeat=rd.dim)]


def l_character_grid(zd, box):
    return [c for c in character_grid(zd.rd, box) if is_l_character(zd, c)]


def sample(points, count, seed):
    """A seeded subsample, kept in grid order; count 0 keeps everything."""
    if not count or count >= len(points):
        return list(points)
    keep = set(random.Random(seed).sample(range(len(points)), count))
    return [x for i, x in enumerate(points) if i in keep]


def ample_p_close(zd, p, chis):
    return [c for c in chis if is_ample(zd, c) and is_orbitally_p_close(zd.rd, c, p)]


def _certificates_for(args):
    zd, p, chi = args
    fm = FrobeniusModel(zd.rd, p)
    return [hasse_certificate(zd, fm, chi, r.w) for r in strata_table(zd)]


def certificate_sweep(zd, p, chis, jobs=1):
    """Certificates for every (chi, stratum), in input order."""
    tasks = [(zd, p, c) for c in chis]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_certificates_for, tasks))
    else:
        chunks = [_certificates_for(t) for t in tasks]
    return [cert for chunk in chunks for cert in chunk]


def inconsistencies(certs):
    return [c for c in certs if c.verdict == INCONSISTENT]


def cone_sweep(zd, p, chis):
    """(chi, flags) for each chi, plus the members of A_p failing the C++ test."""
    rows = [(c, cone_tests(zd, c, p)) for c in chis]
    bad = [c for c, f in rows if f.in_A_p and not f.in_C_plusplus]
    return rows, bad
