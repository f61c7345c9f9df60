from .fuzzy import FuzzyMethodsMixin
from .tables import TablesMethodsMixin
from .diagrams import DiagramsMethodsMixin
from .transforms import TransformsMethodsMixin
from .sensitivity import SensitivityMethodsMixin
from .oracle import OracleMethodsMixin
from .files import FilesMethodsMixin
from .utility_error_handler import UtilityErrorHandler

class Methods(
    FuzzyMethodsMixin,
    TablesMethodsMixin,
    DiagramsMethodsMixin,
    TransformsMethodsMixin,
    SensitivityMethodsMixin,
    OracleMethodsMixin,
    FilesMethodsMixin,
    UtilityErrorHandler
):
    """Methods class combining all available methods for the FuzzyIDPy client.

    This class serves as a mixin container for all methods available in the
    FuzzyIDPy engine, organized into logical categories by functionality.
    """
    pass
