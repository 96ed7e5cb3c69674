"""MLTT 博弈语义解释器。

入口为 main_ludic.py；各层按包划分：arena、games、engine、predicative、cwf、mltt，
命令层由 config、core、services 与 tools 组成。
"""

__version__ = "0.1.0"
