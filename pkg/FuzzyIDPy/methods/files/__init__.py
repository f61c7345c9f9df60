from .parse_file import ParseFile
from .write_file import WriteFile


class FilesMethodsMixin(
    ParseFile,
    WriteFile
):
    """Diagram file methods.

    This mixin reads and writes ``.fid.json`` diagram documents.
    """
    pass
