"""Scratch: full-method ordering check on the desk profile (not packaged)."""
import json, sys, time
import numpy as np

from incdet.config import DatasetSource, ExperimentConfig
from incdet.data.synthetic import SyntheticSpec
from incdet.detector import DetectorConfig
from incdet.distill import DistillationConfig
from incdet.runner import execute_runs
from incdet.training import TrainSchedule

def make_config(seeds=(0,), base_iters=2000, inc_iters=500, base_lr=0.02, inc_lr=0.002,
                out="scratch_runs"):
    return ExperimentConfig(
        dataset=DatasetSource(
            type="synthetic",
            synthetic=SyntheticSpec(num_classes=6, num_images=600, image_size=48,
                                    instances_per_image=(1, 3), radius_range=(7.0, 10.0),
                                    seed=100),
        ),
        scenario_b=4,
        scenario_n=2,
        test_fraction=0.25,
        methods=("finetune", "ilod", "filod", "dynykd", "joint"),
        seeds=tuple(seeds),
        detector=DetectorConfig(
            image_size=48,
            stem_channels=(12,),
            extractor_channels=(24, 32, 32),
            extractor_downsamples=2,
            head_hidden=96,
            anchor_scales=(14.0, 21.0),
            anchor_ratios=(0.75, 1.0, 1.33),
            rpn_pre_nms_top=96,
            rpn_post_nms_top=24,
            rpn_batch=24,
            roi_batch=20,
        ),
        distill=DistillationConfig(lambda_box=1.0, lambda_feat=1.0, lambda_rpn=1.0,
                                   tau=0.1, n_rois=16),
        base_schedule=TrainSchedule(iterations=base_iters, base_lr=base_lr, batch_size=4,
                                    milestones=(int(base_iters*0.7), int(base_iters*0.9))),
        increment_schedule=TrainSchedule(iterations=inc_iters, base_lr=inc_lr, batch_size=4,
                                         per_class=True),
        eval_thresholds="0.5",
        eval_each_step=False,
        output_dir=out,
    )

if __name__ == "__main__":
    seeds = tuple(int(s) for s in sys.argv[1].split(",")) if len(sys.argv) > 1 else (0,)
    workers = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    config = make_config(seeds=seeds)
    t0 = time.time()
    failures, agg = execute_runs(config, "scratch_runs", workers=workers)
    print(f"\nwall: {(time.time()-t0)/60:.1f} min, failures={failures}")
    for method, data in agg["methods"].items():
        mg = {k: round(100*v, 1) for k, v in data["mean_groups"].items() if v is not None}
        print(f"{method:9s} {mg}")
    print("joint ratios:", {k: round(100*v, 1) for k, v in agg["joint_ratio"].items()})
