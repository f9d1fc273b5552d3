"""Conditional probability tables over random variables"""

from collections.abc import Mapping

import attr


def _to_pairs(distribution) -> tuple:
    """Converts a value -> probability mapping (or a list of pairs) to a tuple of pairs sorted by value

    Args:
        distribution (Mapping | Iterable): The distribution

    Returns:
        tuple: ((value, probability), ...)
    """
    items = distribution.items() if isinstance(distribution, Mapping) else distribution
    return tuple(sorted((int(value), float(probability)) for value, probability in items))


@attr.s(frozen=True, auto_attribs=True)
class CptRow:
    parent_values: tuple = attr.ib(converter=tuple)
    distribution: tuple = attr.ib(converter=_to_pairs)

    @property
    def total(self) -> float:
        return sum(probability for _, probability in self.distribution)


@attr.s(frozen=True, auto_attribs=True)
class Cpt:
    child: int
    parents: tuple = attr.ib(converter=tuple)
    rows: tuple = attr.ib(converter=tuple)

    @property
    def scope(self) -> tuple:
        """Parents first, child last. The order used for the keys of table()"""
        return self.parents + (self.child,)

    def table(self) -> dict[tuple, float]:
        """Flattens the rows into a lookup keyed by the full scope assignment

        Returns:
            dict[tuple, float]: (parent values..., child value) -> probability
        """
        lookup = {}
        for row in self.rows:
            for value, probability in row.distribution:
                lookup[row.parent_values + (value,)] = probability
        return lookup
