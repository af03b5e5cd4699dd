from pyphonon import Blockade, SweepRanges
from pyphonon.dataset import write_csv, write_rejects
from pyphonon.dataset.io import rejects_path

blockade = Blockade()

dataset = blockade.sweeps.generate(SweepRanges(), n=200, seed=7, jobs=4, progress=True)

write_csv(dataset, "sweep.csv")
write_rejects(dataset.rejects, rejects_path("sweep.csv"))

print(dataset)
