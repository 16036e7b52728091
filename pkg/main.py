# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
cayley-rep 项目入口。

直接转发到命令行实现，参数与 `cayley-rep` 脚本一致。
"""

import sys

from src.crep.cli import main

if __name__ == "__main__":
    sys.exit(main())
