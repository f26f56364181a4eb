import logging
from pathlib import Path

from movielens.dataset import MovieLensDataset, film_fuzzy_set
from reports.commands import ReportCommand
from reports.config import CommandName
from reports.reproduction import TableName, build_tables
from reports.writers import write_table

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = (
        "Write the film, non-normal, non-convex film, worked-example, concavity and synthetic tables. "
        "The film tables need MovieLens 100k (see fetch_movielens)."
    )
    command_name = CommandName.REPRODUCE

    def add_arguments(self, parser):
        parser.add_argument("--output", default="reproduction", help="Folder the tables are written to.")
        parser.add_argument(
            "--tables",
            nargs="+",
            choices=TableName.values,
            default=None,
            help="Tables to build (default: all).",
        )
        self.add_grid_arguments(parser)
        self.add_dataset_arguments(parser)
        self.add_output_arguments(parser)

    def perform(self, config, options):
        names = set(options["tables"] or TableName.values)
        dataset = MovieLensDataset(config.data_dir)

        def film_loader(films, mode):
            return {name: film_fuzzy_set(name, mode, config.source, dataset) for name in films}

        tables = build_tables(names, config.params, film_loader)
        output = Path(options["output"])
        output.mkdir(parents=True, exist_ok=True)
        for table in tables:
            path = output / f"{table.filename}.{config.output_format.value}"
            with path.open("w", encoding="utf-8", newline="") as handle:
                write_table(handle, table, config.output_format)
            logger.info("wrote %s (%d rows)", path, len(table.rows))
            self.stdout.write(self.style.SUCCESS(f"Wrote {path}"))
