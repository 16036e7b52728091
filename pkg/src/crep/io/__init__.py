"""crep 模块。"""
