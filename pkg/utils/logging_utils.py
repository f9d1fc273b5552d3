import logging
import constants
from pathlib import Path
from utils.singleton import singleton
from utils.file_utils import initialize_file


@singleton
class Logger:
    generator_logger = None
    solver_logger = None
    generator_log_path = ""
    solver_log_path = ""

    def __init__(self):
        pass

    def initialize_loggers(self, mode: str, save_path: str):
        """Initialize logger paths

        Args:
            mode (str): Mode of run, one of [gen, solve, compare, sweep]
            save_path (str): Directory the logs folder is created in
        """
        self.generator_log_path = Path(save_path) / constants.GENERATOR_LOG_FILE_PATH
        self.solver_log_path = Path(save_path) / constants.SOLVER_LOG_FILE_PATH
        if mode == "gen":
            initialize_file(self.generator_log_path)
        elif mode in ("solve", "compare"):
            initialize_file(self.solver_log_path)
        else:
            initialize_file(self.generator_log_path)
            initialize_file(self.solver_log_path)

        self.generator_logger = self._get_logger("generator", self.generator_log_path)
        self.solver_logger = self._get_logger("solver", self.solver_log_path)

    def get_generator_logger(self) -> logging.Logger:
        """Gets the generator logger, a silent one if the loggers were never initialized

        Returns:
            logging.Logger: The generator logger
        """
        if self.generator_logger is None:
            return self._get_silent_logger("generator")
        return self.generator_logger

    def get_solver_logger(self) -> logging.Logger:
        """Gets the solver logger, a silent one if the loggers were never initialized

        Returns:
            logging.Logger: The solver logger
        """
        if self.solver_logger is None:
            return self._get_silent_logger("solver")
        return self.solver_logger

    def _get_logger(self, name: str, file_path: Path) -> logging.Logger:
        """Gets a logger with the given name writing to file_path. Handlers from a previous
           initialization are closed so re-initializing never duplicates lines

        Args:
            name (str): The name of the logger
            file_path (Path): The file path of the logged file

        Returns:
            logging.Logger: The logger returned
        """
        formatter = logging.Formatter("[%(levelname)s][%(asctime)s][%(name)s]:%(message)s", datefmt="%Y-%m-%d %H:%M:%S")
        logger = logging.getLogger(name)
        for old_handler in list(logger.handlers):
            logger.removeHandler(old_handler)
            old_handler.close()

        if file_path.exists():
            handler = logging.FileHandler(file_path)
            handler.setFormatter(formatter)
        else:
            handler = logging.NullHandler()

        logger.setLevel(logging.INFO)
        logger.addHandler(handler)
        logger.propagate = False
        return logger

    def _get_silent_logger(self, name: str) -> logging.Logger:
        logger = logging.getLogger(name)
        if not logger.handlers:
            logger.addHandler(logging.NullHandler())
            logger.propagate = False
        return logger
