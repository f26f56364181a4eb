import io
import logging
import zipfile
from pathlib import Path

import requests
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from movielens.dataset import MovieLensDataset
from movielens.exceptions import IngestError

logger = logging.getLogger(__name__)

EXIT_DATA = 2


class Command(BaseCommand):
    help = (
        "Download the MovieLens 100k archive (GroupLens, "
        "https://files.grouplens.org/datasets/movielens/ml-100k.zip), extract it "
        "and verify it holds exactly 100,000 ratings."
    )

    def add_arguments(self, parser):
        parser.add_argument("--data", default=None, help="Target folder for u.data/u.item (default: MOVIELENS_DIR).")
        parser.add_argument("--url", default=None, help="Archive URL (default: MOVIELENS_URL).")
        parser.add_argument("--force", action="store_true", help="Download even when the files are present.")

    def handle(self, *args, **options):
        dataset = MovieLensDataset(options["data"])
        url = options["url"] or settings.MOVIELENS_URL

        if options["force"] or not dataset.exists():
            self.stdout.write(f"Downloading {url} ...")
            try:
                response = requests.get(url, timeout=120)
                response.raise_for_status()
            except requests.RequestException as exc:
                raise CommandError(f"download failed: {exc}", returncode=EXIT_DATA) from exc
            self._extract(response.content, dataset.directory)

        try:
            count = len(dataset.records)
        except IngestError as exc:
            raise CommandError(str(exc), returncode=EXIT_DATA) from exc
        expected = settings.MOVIELENS_EXPECTED_RECORDS
        if count != expected:
            raise CommandError(f"u.data holds {count} ratings, expected {expected}", returncode=EXIT_DATA)
        logger.info("MovieLens 100k ready in %s", dataset.directory)
        self.stdout.write(self.style.SUCCESS(f"{count} ratings verified in {dataset.directory}"))

    def _extract(self, payload: bytes, target: Path):
        target.mkdir(parents=True, exist_ok=True)
        try:
            archive = zipfile.ZipFile(io.BytesIO(payload))
        except zipfile.BadZipFile as exc:
            raise CommandError("downloaded file is not a zip archive", returncode=EXIT_DATA) from exc
        with archive:
            # the archive nests everything under ml-100k/; flatten into target
            for member in archive.infolist():
                name = Path(member.filename).name
                if member.is_dir() or not name:
                    continue
                (target / name).write_bytes(archive.read(member))
