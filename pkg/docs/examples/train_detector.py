from pyphonon import Blockade
from pyphonon.dataset import read_csv
from pyphonon.network import TrainOptions

blockade = Blockade()

dataset = read_csv("sweep.csv")
model, history, split = blockade.detector.train(dataset, TrainOptions(seed=0))

print(f"stopped: {history.stop_reason}, test mse: {history.final.test_mse:.3g}")

blockade.detector.save("detector.xml")
