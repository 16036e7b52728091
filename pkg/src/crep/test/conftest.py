# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""测试公共配置。"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

import pytest  # noqa: E402
from hypothesis import HealthCheck, settings  # noqa: E402

settings.register_profile(
    "crep",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("crep")

# 数值影子判定阈值（与 config.settings 默认值一致）
RESIDUAL_TRUE = 1e-8
RESIDUAL_FALSE = 1e-4
PADE_SLOPE_RANGE = (2.8, 3.2)

# 精确判据为真 / 假的目录条目
EXACT_TRUE_LABELS = (
    "sl2-sym-1",
    "sl2-sym-2",
    "sl2-adjoint",
    "soN-standard:B2",
    "soN-standard:B3",
    "sp2n-standard:C3",
    "sl4-lambda2",
    "spin-so5",
    "gl-diagonal:2",
    "unipotent-upper:3",
)
EXACT_TRUE_LARGE_LABELS = ("soN-standard:D4", "spin8-plus", "spin8-minus")
EXACT_FALSE_LABELS = ("sl2-sym-3", "sl2-sym-4")


@pytest.fixture(autouse=True)
def _clear_root_handlers():
    """CLI 会替换根日志处理器，测试之间恢复原状。"""
    import logging

    root = logging.getLogger()
    saved = list(root.handlers)
    yield
    root.handlers = saved
