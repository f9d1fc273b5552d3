from .malformed_diagram_exception import MalformedDiagramException
