# Makes zigzag a package for imports
from ._workbench import Workspace, ZigzagWorkbench
from .corpus import CorpusReport, CorpusRunner

__all__ = ["CorpusReport", "CorpusRunner", "Workspace", "ZigzagWorkbench"]
