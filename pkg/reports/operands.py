import logging
from pathlib import Path

from fuzzysets.sets import FuzzySet, Normalization, peak_normalize
from fuzzysets.textio import load_fuzzy_set
from movielens.dataset import MovieLensDataset, film_fuzzy_set

from .config import RunConfig, UsageError

logger = logging.getLogger(__name__)


def resolve_operand(name: str, config: RunConfig, dataset: MovieLensDataset) -> FuzzySet:
    """
    A path to an existing set file, otherwise a film name.

    Files are peak-normalised under ``peak`` and used as written under the
    other modes. Films are always fuzzified, so ``none`` is refused for them.
    """
    path = Path(name)
    if path.is_file():
        fuzzy_set = load_fuzzy_set(path)
        logger.debug("loaded %s from %s", fuzzy_set.label, path)
        if config.normalization == Normalization.PEAK:
            return peak_normalize(fuzzy_set)
        return fuzzy_set
    if config.normalization == Normalization.NONE:
        raise UsageError(f"{name!r} is not a file; films need --normalization peak or proportion")
    return film_fuzzy_set(name, config.normalization, config.source, dataset)


def resolve_operands(config: RunConfig) -> list[FuzzySet]:
    dataset = MovieLensDataset(config.data_dir)
    return [resolve_operand(name, config, dataset) for name in config.inputs]
