from metrics.measures import distance_matrix
from reports.commands import ReportCommand
from reports.config import CommandName
from reports.operands import resolve_operands
from reports.writers import write_matrix


class Command(ReportCommand):
    help = "Distances between every ordered pair of operands; row i, column j holds d(i, j)."
    command_name = CommandName.MATRIX

    def add_arguments(self, parser):
        parser.add_argument("operands", nargs="+", help="Two or more set files or film names.")
        self.add_measure_arguments(parser)
        self.add_grid_arguments(parser)
        self.add_dataset_arguments(parser)
        self.add_output_arguments(parser)

    def perform(self, config, options):
        sets = resolve_operands(config)
        write_matrix(self.stdout, distance_matrix(config.measure, sets, config.params), config.output_format)
