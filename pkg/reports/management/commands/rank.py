from metrics.measures import measure_distance
from reports.commands import ReportCommand
from reports.config import CommandName
from reports.operands import resolve_operands
from reports.writers import write_ranking


class Command(ReportCommand):
    help = (
        "Rank operands by signed distance from the first one, largest first. "
        "Ties are ordered by label."
    )
    command_name = CommandName.RANK

    def add_arguments(self, parser):
        parser.add_argument("operands", nargs="+", help="The reference followed by one or more operands to rank.")
        self.add_measure_arguments(parser)
        self.add_grid_arguments(parser)
        self.add_dataset_arguments(parser)
        self.add_output_arguments(parser)

    def perform(self, config, options):
        reference, *others = resolve_operands(config)
        reports = [measure_distance(config.measure, reference, other, config.params) for other in others]
        ranking = sorted(reports, key=lambda report: (-report.value, report.operands[1]))
        write_ranking(self.stdout, ranking, config.output_format)
