from .logger import get_logger
from .config import (
    BASE_DIR,
    FIXTURES_DIR,
    REPORTS_DIR,
    LOG_LEVEL,
    SEARCH_GRID,
    DEFAULT_DEFORMATION_ORDER,
    STRICT_LITERAL,
    RANDOM_SEED,
)
