import numpy as np, time, sys
sys.path.insert(0, "/root/pkg/src")
from dmtme.dataio import load_idx_pair
from dmtme.trainer import Config, fit, transform, save_checkpoint, write_training_log
from dmtme.evalmetrics import knn_accuracy, linear_accuracy, trustworthiness

tr = load_idx_pair("/root/pkg/data/mnist/train-images-idx3-ubyte")
te = load_idx_pair("/root/pkg/data/mnist/t10k-images-idx3-ubyte")
Xtr, ytr = tr.X[:10000], tr.labels[:10000]
Xte, yte = te.X[:1000], te.labels[:1000]
cfg = Config(dim=784, num_experts=10, nu=0.1, batch_size=1000, epochs=100,
             k_neighbors=5, seed=0)
t0 = time.time()
m = fit(Xtr, cfg)
fit_min = (time.time() - t0) / 60
print("fit minutes:", round(fit_min, 1), flush=True)
save_checkpoint(m, "/root/pkg/calib/desk.ckpt")
write_training_log(m, "/root/pkg/calib/desk_log.csv")
print("loss first/last:", m.log[0].total, m.log[-1].total, flush=True)
etr = transform(m, Xtr); ete = transform(m, Xte)
np.save("/root/pkg/calib/emb_train.npy", etr)
np.save("/root/pkg/calib/emb_test.npy", ete)
print("knn train:", knn_accuracy(etr, ytr, etr, ytr, k=10), flush=True)
print("knn test:", knn_accuracy(etr, ytr, ete, yte, k=10), flush=True)
print("trust test:", trustworthiness(Xte, ete, k=5), flush=True)
print("linear test:", linear_accuracy(etr, ytr, ete, yte), flush=True)
