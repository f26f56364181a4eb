import logging

from metrics.measures import measure_distance
from reports.commands import ReportCommand
from reports.config import CommandName
from reports.operands import resolve_operands
from reports.writers import write_distance

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = (
        "Distance from the first operand to the second; positive when the second lies to the right. "
        "crf on the printed SMB/SW shares gives 3.081; the 2.261 listed with them aggregates listed kernels "
        "that do not follow from those shares (see `reproduce --tables appendix`)."
    )
    command_name = CommandName.DISTANCE

    def add_arguments(self, parser):
        parser.add_argument("operands", nargs="+", help="Two set files or film names (titles or SMB, MA, SW, ADGH2).")
        self.add_measure_arguments(parser)
        self.add_grid_arguments(parser)
        self.add_dataset_arguments(parser)
        self.add_output_arguments(parser)

    def perform(self, config, options):
        a, b = resolve_operands(config)
        report = measure_distance(config.measure, a, b, config.params)
        logger.info("%s(%s, %s) = %g", report.measure.value, a.label, b.label, report.value)
        write_distance(self.stdout, report, config.output_format)
