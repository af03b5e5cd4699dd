from typing import Optional

from pyphonon.api.base import ApiBase
from pyphonon.const import SamplingMode
from pyphonon.dataset import Dataset, SweepRanges, generate
from pyphonon.exceptions import ConfigException
from pyphonon.presets import FIGURE_PRESETS


class Sweeps(ApiBase):
    def generate(
        self,
        ranges: SweepRanges = SweepRanges(),
        n: int = 1,
        seed: int = 0,
        jobs: int = 1,
        mode: str = SamplingMode.uniform.value,
        progress: bool = False,
    ) -> Dataset:
        """Sample and label ``n`` points of ``ranges``.

        Args:
            ranges (SweepRanges): parameter intervals in units of kappa.
            n (int): number of points.
            seed (int): seed of the uniform sampler.
            jobs (int): worker processes.
            mode (str): ``uniform`` or ``grid``.
            progress (bool): show a progress bar on stderr.
        """
        return generate(
            ranges,
            n,
            seed,
            self.dims,
            jobs=jobs,
            mode=mode,
            method=self.method,
            progress=progress,
        )

    def preset(
        self,
        name: str,
        seed: int = 0,
        jobs: int = 1,
        n: Optional[int] = None,
        progress: bool = False,
    ) -> Dataset:
        """Label the points of a figure preset."""
        if name not in FIGURE_PRESETS:
            raise ConfigException(f"Preset must be one of {', '.join(FIGURE_PRESETS)}")
        preset = FIGURE_PRESETS[name]
        return generate(
            SweepRanges.from_preset(name),
            n or preset["n"],
            seed,
            self.dims,
            jobs=jobs,
            mode=preset["mode"],
            method=self.method,
            progress=progress,
            preset=name,
        )
