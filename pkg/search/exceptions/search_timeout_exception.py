class SearchTimeoutException(Exception):
    def __init__(self, timeout: float, nodes_expanded: int):
        self.timeout = timeout
        self.nodes_expanded = nodes_expanded

    def __str__(self):
        return f"Search exceeded the {self.timeout:g}s timeout after expanding {self.nodes_expanded} nodes"
