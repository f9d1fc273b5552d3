class OracleBoundExceededException(Exception):
    def __init__(self, assignments: int, bound: int):
        self.assignments = assignments
        self.bound = bound

    def __str__(self):
        return f"Enumeration needs {self.assignments} complete assignments, more than the bound of {self.bound}"
