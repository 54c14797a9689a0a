"""Scratch calibration for the desk-scale profile (not part of the package)."""
import sys, time
import numpy as np
import torch

from incdet import (SyntheticSpec, generate_synthetic, build_scenario, DetectorConfig,
                    DistillationConfig, TrainSchedule, evaluate_model, step_view)
from incdet.training import _train_phase, RunLog
from incdet.detector import TwoStageDetector

K = 6
SPEC = SyntheticSpec(num_classes=K, num_images=600, image_size=48,
                     instances_per_image=(1, 3), radius_range=(7.0, 10.0), seed=100)
CFG = DetectorConfig(
    image_size=48,
    stem_channels=(12, 24),
    extractor_channels=(32, 32),
    head_hidden=96,
    anchor_scales=(14.0, 21.0),
    anchor_ratios=(0.75, 1.0, 1.33),
    rpn_pre_nms_top=96,
    rpn_post_nms_top=24,
    rpn_batch=24,
    roi_batch=20,
)

def main(iters=1500, lr=0.02):
    ds = generate_synthetic(SPEC)
    sc = build_scenario(ds, b=4, n=2, test_fraction=0.25, seed=0)
    print("train", len(sc.train_ids), "test", len(sc.test_ids))
    dcfg = DistillationConfig(n_rois=16)
    base = TrainSchedule(iterations=iters, base_lr=lr, batch_size=4,
                         milestones=(int(iters*0.7), int(iters*0.9)))
    t0 = time.time()
    view = step_view(sc, ds, 0, "train")
    model = TwoStageDetector(CFG, [sc.step_classes(0)], seed=0)
    log = RunLog()
    _train_phase(model, "finetune", view, base, dcfg, None, 0, 0, log)
    dt = time.time() - t0
    print(f"{iters} iters in {dt:.1f}s -> {iters/dt:.1f} it/s")
    view_test = step_view(sc, ds, 0, "test")
    t1 = time.time()
    rep = evaluate_model(model, view_test, (0.5,))
    print(f"eval {len(view_test.images)} images in {time.time()-t1:.1f}s")
    print("per-class AP@0.5:", {k: round(v, 3) for k, v in rep.per_class.items()},
          "mean:", round(np.mean(list(rep.per_class.values())), 3))

if __name__ == "__main__":
    iters = int(sys.argv[1]) if len(sys.argv) > 1 else 1500
    lr = float(sys.argv[2]) if len(sys.argv) > 2 else 0.02
    main(iters, lr)
