from .config import DEFAULTS, get_thread_count

__all__ = [DEFAULTS, get_thread_count]
