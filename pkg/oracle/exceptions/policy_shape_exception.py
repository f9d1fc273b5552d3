class PolicyShapeException(Exception):
    def __init__(self, message: str):
        self.message = message

    def __str__(self):
        return f"Policy does not fit the problem: {self.message}"
