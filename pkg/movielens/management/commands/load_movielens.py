import logging

from django.core.management.base import BaseCommand, CommandError
from django.db import transaction

from movielens.dataset import MovieLensDataset
from movielens.exceptions import IngestError
from movielens.models import Film

logger = logging.getLogger(__name__)

EXIT_DATA = 2


class Command(BaseCommand):
    help = "Parse u.data/u.item once and store every film's rating histogram for `--source db`."

    def add_arguments(self, parser):
        parser.add_argument("--data", default=None, help="Folder holding u.data and u.item (default: MOVIELENS_DIR).")

    @transaction.atomic
    def handle(self, *args, **options):
        dataset = MovieLensDataset(options["data"])
        try:
            histograms = dataset.histograms
        except IngestError as exc:
            raise CommandError(str(exc), returncode=EXIT_DATA) from exc

        films = [Film.from_histogram(histogram) for histogram in histograms.values()]
        Film.objects.bulk_create(
            films,
            update_conflicts=True,
            unique_fields=["item_id"],
            update_fields=["title", "counts", "total", "updated_at"],
        )
        logger.info("stored %d film histograms", len(films))
        self.stdout.write(self.style.SUCCESS(f"Stored {len(films)} films from {dataset.directory}"))
