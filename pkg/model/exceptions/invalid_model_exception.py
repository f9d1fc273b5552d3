class InvalidModelException(Exception):
    def __init__(self, report):
        self.report = report

    def __str__(self):
        return f"Invalid model:\n{self.report}"
