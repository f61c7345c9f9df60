import functools
import logging
import time
import traceback
import typing
from typing import Any, Callable, Dict, TypeVar, Union

from ..errors import EXIT_SOLVER, FuzzyIDError, StructureError

if typing.TYPE_CHECKING:
    from ..client import FuzzyIDPy

T = TypeVar('T')


class UtilityErrorHandler:
    """Utility methods for error handling."""

    def with_error_handling(
        self: "FuzzyIDPy",
        func: Callable[..., T],
        *args,
        **kwargs
    ) -> Union[T, Dict[str, Any]]:
        """Execute a function and turn failures into an error document.

        Parameters:
            func (``Callable``):
                Function to execute.

            *args, **kwargs:
                Arguments to pass to the function.

        Returns:
            Result of the function or error information.

        Example:
            .. code-block:: python

                result = solver.with_error_handling(solver.parse_file, "model.fid.json")

                if isinstance(result, dict) and "error" in result:
                    print(result["description"])
        """
        try:
            return func(*args, **kwargs)
        except StructureError as e:
            self.logger.error(f"Structure Error: {e.description} ({len(e.errors)} problems)")
            return {
                "error": "structure_error",
                "description": e.description,
                "errors": e.errors,
                "error_code": e.error_code,
                "timestamp": time.time()
            }
        except FuzzyIDError as e:
            self.logger.error(f"{type(e).__name__}: {e.description} (Code: {e.error_code})")
            return {
                "error": _snake(type(e).__name__),
                "description": e.description,
                "error_code": e.error_code,
                "parameters": e.parameters,
                "timestamp": time.time()
            }
        except Exception as e:
            self.logger.error(f"Unexpected Error: {str(e)}", exc_info=True)
            return {
                "error": "unexpected_error",
                "description": str(e),
                "error_code": EXIT_SOLVER,
                "traceback": traceback.format_exc(),
                "timestamp": time.time()
            }

    def log_errors(
        self: "FuzzyIDPy",
        level: int = logging.ERROR
    ) -> Callable:
        """Decorator to log errors from a function.

        Parameters:
            level (``int``, optional):
                Logging level. Defaults to logging.ERROR.

        Returns:
            ``Callable``: Decorated function.

        Example:
            .. code-block:: python

                @solver.log_errors(level=logging.WARNING)
                def risky_query(diagram):
                    return solver.infer(diagram, query)
        """
        def decorator(func):
            @functools.wraps(func)
            def wrapper(*args, **kwargs):
                try:
                    return func(*args, **kwargs)
                except Exception as e:
                    self.logger.log(
                        level,
                        f"Error in {func.__name__}: {str(e)}",
                        exc_info=True
                    )
                    raise
            return wrapper
        return decorator


def _snake(name: str) -> str:
    out = []
    for i, ch in enumerate(name):
        if ch.isupper() and i:
            out.append("_")
        out.append(ch.lower())
    return "".join(out)
