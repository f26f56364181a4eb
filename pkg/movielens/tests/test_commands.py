import io
import zipfile
from io import StringIO

import pytest
import requests
from django.core.management import call_command
from django.core.management.base import CommandError

from conftest import MINI_FILMS, MINI_RATING_COUNT, write_movielens
from movielens.models import Film


def zipped_movielens(tmp_path):
    source = write_movielens(tmp_path / "build")
    payload = io.BytesIO()
    with zipfile.ZipFile(payload, "w") as archive:
        archive.writestr("ml-100k/", "")
        for name in ("u.data", "u.item"):
            archive.write(source / name, f"ml-100k/{name}")
    return payload.getvalue()


class FakeResponse:
    def __init__(self, content, status=200):
        self.content = content
        self.status = status

    def raise_for_status(self):
        if self.status >= 400:
            raise requests.HTTPError(f"{self.status} error")


@pytest.fixture
def expect_mini(settings):
    settings.MOVIELENS_EXPECTED_RECORDS = MINI_RATING_COUNT


def test_fetch_downloads_and_verifies(tmp_path, monkeypatch, expect_mini):
    payload = zipped_movielens(tmp_path)
    calls = []

    def fake_get(url, timeout):
        calls.append(url)
        return FakeResponse(payload)

    monkeypatch.setattr(requests, "get", fake_get)
    target = tmp_path / "data"
    out = StringIO()
    call_command("fetch_movielens", data=str(target), url="http://example.org/ml.zip", stdout=out)
    assert calls == ["http://example.org/ml.zip"]
    assert (target / "u.data").is_file()
    assert f"{MINI_RATING_COUNT} ratings verified" in out.getvalue()


def test_fetch_skips_download_when_present(movielens_dir, monkeypatch, expect_mini):
    def fail(*args, **kwargs):
        raise AssertionError("should not download")

    monkeypatch.setattr(requests, "get", fail)
    call_command("fetch_movielens", data=str(movielens_dir), stdout=StringIO())


def test_fetch_rejects_wrong_record_count(movielens_dir):
    with pytest.raises(CommandError) as excinfo:
        call_command("fetch_movielens", data=str(movielens_dir), stdout=StringIO())
    assert excinfo.value.returncode == 2
    assert "expected 100000" in str(excinfo.value)


@pytest.mark.parametrize(
    "response",
    [FakeResponse(b"", status=404), FakeResponse(b"not a zip")],
)
def test_fetch_failures_are_data_errors(tmp_path, monkeypatch, response):
    monkeypatch.setattr(requests, "get", lambda url, timeout: response)
    with pytest.raises(CommandError) as excinfo:
        call_command("fetch_movielens", data=str(tmp_path / "data"), stdout=StringIO())
    assert excinfo.value.returncode == 2


@pytest.mark.django_db
def test_load_stores_rated_films_once(movielens_dir):
    call_command("load_movielens", data=str(movielens_dir), stdout=StringIO())
    call_command("load_movielens", data=str(movielens_dir), stdout=StringIO())
    rated = [item_id for item_id, (_, counts) in MINI_FILMS.items() if sum(counts)]
    assert list(Film.objects.values_list("item_id", flat=True)) == rated
    star_wars = Film.objects.get(title="Star Wars (1977)")
    assert star_wars.to_histogram().counts == {1: 9, 2: 16, 3: 57, 4: 176, 5: 325}


@pytest.mark.django_db
def test_load_without_dataset(tmp_path):
    with pytest.raises(CommandError) as excinfo:
        call_command("load_movielens", data=str(tmp_path), stdout=StringIO())
    assert excinfo.value.returncode == 2
