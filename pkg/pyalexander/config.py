"""
Run-time settings shared by the library and the command line.
"""


class Settings:
    """Knobs that bound the size of a computation.

    Class attributes hold the defaults; pass keyword arguments to override
    them for one run.

    Args:
        margin (int, optional): Extra cells added beyond the conductor in
            every coordinate of the box. Defaults to MARGIN.
        max_cells (int, optional): Largest monomial matrix (rows times
            columns) and largest box volume accepted. Defaults to MAX_CELLS.
        threads (int, optional): Worker threads for the Hilbert sweep.
            Defaults to THREADS.
        max_branches (int, optional): Largest accepted number of branches.
            Defaults to MAX_BRANCHES.
        max_series_order (int, optional): Truncation order at which the
            branch semigroup search gives up. Defaults to MAX_SERIES_ORDER.
        order (int, optional): Requested zeta window order. Defaults to the
            smallest box side.
        max_resultant_size (int, optional): Largest Sylvester matrix side
            accepted when implicitizing a branch, that is deg x + deg y.
            Defaults to MAX_RESULTANT_SIZE.
    """

    MAX_BRANCHES = 4
    MARGIN = 2
    MAX_CELLS = 2_000_000
    THREADS = 1
    MAX_SERIES_ORDER = 1024
    MAX_RESULTANT_SIZE = 96

    def __init__(
        self,
        margin=None,
        max_cells=None,
        threads=None,
        max_branches=None,
        max_series_order=None,
        order=None,
        max_resultant_size=None,
    ):
        self.margin = self.MARGIN if margin is None else margin
        self.max_cells = self.MAX_CELLS if max_cells is None else max_cells
        self.threads = self.THREADS if threads is None else threads
        self.max_branches = self.MAX_BRANCHES if max_branches is None else max_branches
        self.max_series_order = (
            self.MAX_SERIES_ORDER if max_series_order is None else max_series_order
        )
        self.order = order
        self.max_resultant_size = (
            self.MAX_RESULTANT_SIZE if max_resultant_size is None else max_resultant_size
        )

        if self.margin < 1:
            raise ValueError("margin must be at least 1")
        if self.max_cells < 1:
            raise ValueError("max_cells must be positive")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if self.max_branches < 1:
            raise ValueError("max_branches must be at least 1")
        if self.max_series_order < 8:
            raise ValueError("max_series_order must be at least 8")
        if self.order is not None and self.order < 0:
            raise ValueError("order must be non-negative")
        if self.max_resultant_size < 1:
            raise ValueError("max_resultant_size must be positive")

    def __repr__(self):
        return (
            f"Settings(margin={self.margin}, max_cells={self.max_cells}, "
            f"threads={self.threads}, max_branches={self.max_branches}, "
            f"max_series_order={self.max_series_order}, order={self.order}, "
            f"max_resultant_size={self.max_resultant_size})"
        )
