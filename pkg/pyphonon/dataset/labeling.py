import logging
from concurrent.futures import ProcessPoolExecutor
from math import isfinite, log10
from typing import Optional, Sequence

from tqdm import tqdm

from pyphonon.const import (
    MAX_REJECT_FRACTION,
    SamplingMode,
    SteadyStateMethod,
    SteadyStateMethodValues,
    WEAK_DRIVE_N_C,
)
from pyphonon.dataset.dataset import Dataset, Provenance, Reject, Sample
from pyphonon.dataset.sampling import SweepRanges, sample_points
from pyphonon.exceptions import BaseException, RejectRateException, SolverException
from pyphonon.params import EffectiveParams, HilbertDims
from pyphonon.quantum import solve_point
from pyphonon.quantum.steady_state import RESIDUAL_TOL

logger = logging.getLogger(__name__)


def label_point(
    params: EffectiveParams,
    dims: HilbertDims,
    method: SteadyStateMethodValues = SteadyStateMethod.direct.value,
) -> Sample:
    """Solve one point and return its features and ``log10 g2b`` label."""
    _, obs = solve_point(params, dims, method=method)
    if not obs.g2b > 0:
        raise SolverException(f"g2b = {obs.g2b:.3e} has no logarithm")
    y = log10(obs.g2b)
    if not isfinite(y):
        raise SolverException(f"label log10(g2b) = {y} is not finite")
    return Sample(params=params, x=obs.features, y=y, dims_used=dims)


def label_points(
    points: Sequence[EffectiveParams],
    dims: HilbertDims,
    jobs: int = 1,
    method: SteadyStateMethodValues = SteadyStateMethod.direct.value,
    progress: bool = False,
) -> tuple[list[Sample], list[Reject]]:
    """Label ``points`` on ``jobs`` worker processes, preserving input order."""
    tasks = [(index, params, dims, method) for index, params in enumerate(points)]
    bar = tqdm(total=len(tasks), disable=not progress, unit="point")

    if jobs > 1:
        chunksize = max(1, len(tasks) // (jobs * 16))
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            outcomes = []
            for outcome in executor.map(_label_task, tasks, chunksize=chunksize):
                outcomes.append(outcome)
                bar.update()
    else:
        outcomes = []
        for task in tasks:
            outcomes.append(_label_task(task))
            bar.update()
    bar.close()

    samples = [outcome for outcome in outcomes if isinstance(outcome, Sample)]
    rejects = [outcome for outcome in outcomes if isinstance(outcome, Reject)]
    for reject in rejects:
        logger.warning("rejected point %d: %s", reject.index, reject.reason)
    return samples, rejects


def generate(
    ranges: SweepRanges,
    n: int,
    seed: int,
    dims: HilbertDims,
    jobs: int = 1,
    mode: str = SamplingMode.uniform.value,
    method: SteadyStateMethodValues = SteadyStateMethod.direct.value,
    progress: bool = False,
    preset: Optional[str] = None,
) -> Dataset:
    """Sample ``n`` points from ``ranges`` and label each one.

    Raises:
        RejectRateException: if more than 1% of the points fail to label.
    """
    points = sample_points(ranges, n, seed, mode)
    samples, rejects = label_points(
        points, dims, jobs=jobs, method=method, progress=progress
    )

    if len(rejects) > MAX_REJECT_FRACTION * n:
        raise RejectRateException(
            f"{len(rejects)} of {n} points rejected; first: {rejects[0].reason}"
        )

    loud = [sample for sample in samples if sample.n_c > WEAK_DRIVE_N_C]
    if loud:
        logger.warning(
            "%d samples leave the weak-drive regime (n_c > %g), e.g. %r",
            len(loud),
            WEAK_DRIVE_N_C,
            loud[0].params,
        )

    provenance = Provenance(
        seed=seed,
        n=n,
        mode=mode,
        ranges=ranges,
        dims=dims,
        method=method,
        residual_tol=RESIDUAL_TOL,
        preset=preset,
    )
    return Dataset(samples=samples, provenance=provenance, rejects=rejects)


def _label_task(
    task: tuple[int, EffectiveParams, HilbertDims, SteadyStateMethodValues],
) -> Sample | Reject:
    index, params, dims, method = task
    try:
        return label_point(params, dims, method=method)
    except BaseException as error:
        reason = f"{type(error).__name__}: {error}"
        return Reject(index=index, params=params, reason=reason)
