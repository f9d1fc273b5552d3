"""Counters collected during one search or compile run, and the report the CLI writes with --stats"""

from pathlib import Path

import attr

from .file_utils import write_json_to_file


@attr.s(auto_attribs=True)
class SearchStats:
    ### Counters of one run
    mode: str = "tree"
    nodes_expanded: int = 0
    leaf_count: int = 0
    failure_count: int = 0
    elapsed: float = 0.0
    cache_entries: int = 0
    cache_hits: int = 0
    cache_misses: int = 0
    hits_by_variable: dict = attr.ib(factory=dict)
    size: dict = attr.ib(factory=dict)

    @property
    def hit_rate(self) -> float:
        lookups = self.cache_hits + self.cache_misses
        return self.cache_hits / lookups if lookups else 0.0

    def to_dict(self, include_time: bool = True) -> dict:
        """Flat key-value view, size counts inlined

        Args:
            include_time (bool, optional): Whether to include the wall time. Defaults to True

        Returns:
            dict: The stats
        """
        result = {
            "mode": self.mode,
            "nodes_expanded": self.nodes_expanded,
            "leaf_count": self.leaf_count,
            "failure_count": self.failure_count,
        }
        if self.mode == "dd":
            result["cache_entries"] = self.cache_entries
            result["cache_hits"] = self.cache_hits
            result["cache_misses"] = self.cache_misses
            result["hit_rate"] = self.hit_rate
            result["hits_by_variable"] = dict(self.hits_by_variable)
        result.update(self.size)
        if include_time:
            result["elapsed"] = self.elapsed
        return result


@attr.s(auto_attribs=True)
class RunReport:
    mode: str
    value: float = None
    stats: SearchStats = attr.ib(factory=SearchStats)
    model: str = ""
    spec: dict = attr.ib(factory=dict)

    @property
    def feasible(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        stats = self.stats.to_dict(include_time=False)
        report = {"mode": self.mode, "model": self.model, "feasible": self.feasible, "value": self.value}
        report.update({key: value for key, value in stats.items() if key != "mode"})
        report["elapsed"] = self.stats.elapsed
        if self.spec:
            report["spec"] = self.spec
        return report

    def save(self, output_file: str):
        write_json_to_file(self.to_dict(), Path(output_file))
