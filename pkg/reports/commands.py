"""
Shared plumbing for the ``distance``, ``matrix``, ``rank`` and ``reproduce``
management commands: common flags, option validation and exit codes.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from fuzzysets.exceptions import FuzzySetError
from fuzzysets.sets import Normalization
from metrics.exceptions import MeasureError
from metrics.params import Measure
from movielens.dataset import Source
from movielens.exceptions import IngestError

from .config import CommandName, OutputFormat, RunConfig, UsageError
from .serializers import RunConfigSerializer

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_PRECONDITION = 3

# parser dest -> RunConfigSerializer field
CONFIG_OPTIONS = {
    "measure": "measure",
    "signed": "signed",
    "alpha_cuts": "alpha_cuts",
    "levels": "levels",
    "epsilon": "epsilon",
    "x_points": "x_points",
    "normalization": "normalization",
    "output_format": "output_format",
    "data": "data_dir",
    "source": "source",
}


def format_errors(errors) -> str:
    return "; ".join(f"{field}: {' '.join(str(message) for message in messages)}" for field, messages in errors.items())


class ReportCommand(BaseCommand):
    command_name: CommandName
    requires_system_checks = []
    _arguments_parsed = False

    # --- arguments ---
    def add_measure_arguments(self, parser):
        parser.add_argument("--measure", choices=Measure.values, default=Measure.CR, help="Distance measure (default: cr).")
        sign = parser.add_mutually_exclusive_group()
        sign.add_argument("--signed", dest="signed", action="store_true", default=True, help="Signed interval kernel (default).")
        sign.add_argument("--unsigned", dest="signed", action="store_false", help="Classic unsigned Hausdorff kernel.")
        parser.add_argument(
            "--normalization",
            choices=Normalization.values,
            default=Normalization.PEAK,
            help="How operands are scaled before measuring (default: peak).",
        )

    def add_grid_arguments(self, parser):
        parser.add_argument("--alpha-cuts", type=int, default=None, help="Number of equally spaced α-levels from 0 to 1.")
        parser.add_argument("--levels", default=None, help="Explicit α-grid as start:stop:step; overrides --alpha-cuts.")
        parser.add_argument("--epsilon", type=float, default=None, help="Weight of the membership term of cr-nonnormal.")
        parser.add_argument("--x-points", type=int, default=None, help="Points on the x grid of vertical and ε terms.")

    def add_dataset_arguments(self, parser):
        parser.add_argument("--data", default=None, help="MovieLens 100k folder (default: MOVIELENS_DIR).")
        parser.add_argument("--source", choices=Source.values, default=Source.FILES, help="Read films from files or the database.")

    def add_output_arguments(self, parser):
        parser.add_argument("--format", dest="output_format", choices=OutputFormat.values, default=OutputFormat.CSV)

    # --- execution ---
    def run_from_argv(self, argv):
        try:
            super().run_from_argv(argv)
        except SystemExit as exc:
            # argparse exits with 2 on bad flags; 2 is reserved for data errors here
            if exc.code == 2 and not self._arguments_parsed:
                raise SystemExit(EXIT_USAGE) from exc
            raise

    def execute(self, *args, **options):
        self._arguments_parsed = True
        return super().execute(*args, **options)

    def run_config(self, options) -> RunConfig:
        data = {field: options[dest] for dest, field in CONFIG_OPTIONS.items() if options.get(dest) is not None}
        data["command"] = self.command_name
        data["operands"] = list(options.get("operands") or [])
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(format_errors(serializer.errors), returncode=EXIT_USAGE)
        try:
            return serializer.save()
        except (MeasureError, FuzzySetError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

    def handle(self, *args, **options):
        config = self.run_config(options)
        logger.debug("%s with %s", self.command_name, config)
        try:
            self.perform(config, options)
        except UsageError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        except MeasureError as exc:
            logger.error("%s failed: %s", self.command_name, exc)
            raise CommandError(str(exc), returncode=EXIT_PRECONDITION) from exc
        except (IngestError, FuzzySetError, OSError) as exc:
            logger.error("%s failed: %s", self.command_name, exc)
            raise CommandError(str(exc), returncode=EXIT_DATA) from exc

    def perform(self, config: RunConfig, options):
        raise NotImplementedError("subclasses of ReportCommand must provide a perform() method")
