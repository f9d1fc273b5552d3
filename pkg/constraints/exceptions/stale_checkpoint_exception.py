class StaleCheckpointException(Exception):
    def __init__(self, mark, innermost):
        self.mark = mark
        self.innermost = innermost

    def __str__(self):
        return f"Restoring checkpoint {self.mark} but the innermost checkpoint is {self.innermost}"
