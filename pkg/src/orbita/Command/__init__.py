from ..utils import list_modules

__all__ = []
for p in __path__:
    __all__.extend(list_modules(p))
