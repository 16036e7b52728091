# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
cayley-rep 运行时配置。

集中管理环境变量与数值常量。
"""

import os

from dotenv import load_dotenv

# 加载 .env 文件中的变量
load_dotenv()

# 并行
THREADS = max(1, int(os.environ.get("CAYLEY_REP_THREADS", "1")))

# 有界搜索
SEARCH_BOUND = int(os.environ.get("CAYLEY_REP_SEARCH_BOUND", "3"))
MAX_SEARCH_RANK = 8
MAX_SEARCH_BOUND = 3

# 随机探测
DEFAULT_SEED = int(os.environ.get("CAYLEY_REP_SEED", "0"))
ODD_POWER_MAX_K = int(os.environ.get("CAYLEY_REP_ODD_MAX_K", "3"))
ODD_POWER_SAMPLES = int(os.environ.get("CAYLEY_REP_ODD_SAMPLES", "5"))

# 数值影子（log 级数残差）
RESIDUAL_SEEDS = int(os.environ.get("CAYLEY_REP_RESIDUAL_SEEDS", "20"))
RESIDUAL_NORM = float(os.environ.get("CAYLEY_REP_RESIDUAL_NORM", "0.2"))
RESIDUAL_TRUE_THRESHOLD = float(os.environ.get("CAYLEY_REP_RESIDUAL_TRUE", "1e-8"))
RESIDUAL_FALSE_THRESHOLD = float(os.environ.get("CAYLEY_REP_RESIDUAL_FALSE", "1e-4"))

LOG_DOMAIN_BOUND = 1.0 / 3.0  # ‖u‖ < 1/3 时 C(u) 与对数级数均有定义
LOG_DOMAIN_SAFETY = 0.95
SERIES_MAX_TERMS = 200
SERIES_REL_TOL = 1e-16
EXPM_REL_TOL = 1e-15
PADE_SCALES = (0.1, 0.05, 0.025, 0.0125)

# 轨道物化上限（超过则只保留支配代表元）
ORBIT_LIMIT = int(os.environ.get("CAYLEY_REP_ORBIT_LIMIT", "20000"))

# 日志
LOG_LEVEL = os.environ.get("CAYLEY_REP_LOG_LEVEL", "INFO").upper()
