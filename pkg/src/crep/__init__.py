"""Cayley 表示判定工具包（cayley-rep）。"""

__version__ = "0.1.0"
