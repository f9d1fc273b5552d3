"""FactorGraph: bipartite networkx graph between variables and factors.
Factor nodes are named f1, f2, ... with the CPTs first and the constraints after them
"""

import networkx

from .problem import Problem


class FactorGraph:
    def __init__(self, problem: Problem):
        """Builds the factor graph, one factor node per CPT and per constraint

        Args:
            problem (Problem): The problem
        """
        self.problem = problem
        self.graph = networkx.Graph()

        for variable in problem.variables:
            self.graph.add_node(self.variable_node(variable.id), bipartite=0, name=variable.name, kind=variable.kind.value)

        for index, factor in enumerate(problem.all_factors):
            factor_node = self.factor_node(index)
            kind = "cpt" if index < len(problem.factors) else "constraint"
            self.graph.add_node(factor_node, bipartite=1, name=self.factor_name(index), kind=kind)
            for variable_id in factor.scope:
                self.graph.add_edge(self.variable_node(variable_id), factor_node)

    @staticmethod
    def variable_node(variable_id: int) -> tuple:
        return ("variable", variable_id)

    @staticmethod
    def factor_node(index: int) -> tuple:
        return ("factor", index)

    @staticmethod
    def factor_name(index: int) -> str:
        return f"f{index + 1}"

    @property
    def variable_nodes(self) -> list[tuple]:
        return [node for node, data in self.graph.nodes(data=True) if data["bipartite"] == 0]

    @property
    def factor_nodes(self) -> list[tuple]:
        return [node for node, data in self.graph.nodes(data=True) if data["bipartite"] == 1]

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    def factor_neighbors(self, factor_name: str) -> set[str]:
        """Names of the variables adjacent to a factor node

        Args:
            factor_name (str): Factor name such as "f5"

        Returns:
            set[str]: The variable names in its scope
        """
        factor_node = self.factor_node(int(factor_name[1:]) - 1)
        return {self.graph.nodes[node]["name"] for node in self.graph.neighbors(factor_node)}

    def is_bipartite(self) -> bool:
        return all(self.graph.nodes[u]["bipartite"] != self.graph.nodes[v]["bipartite"] for u, v in self.graph.edges)


def factor_graph(problem: Problem) -> FactorGraph:
    return FactorGraph(problem)
