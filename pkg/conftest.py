import pytest

# item id -> (title, counts of ratings 1..5); SMB and SW match the proportions
# of the worked non-normal example to three decimals
MINI_FILMS = {
    1: ("Super Mario Bros. (1993)", (10, 7, 6, 3, 0)),
    2: ("Mars Attacks! (1996)", (30, 50, 70, 50, 17)),
    3: ("Star Wars (1977)", (9, 16, 57, 176, 325)),
    4: ("All Dogs Go to Heaven 2 (1996)", (5, 2, 4, 8, 1)),
    5: ("Unrated Film (1990)", (0, 0, 0, 0, 0)),
}
MINI_RATING_COUNT = sum(sum(counts) for _, counts in MINI_FILMS.values())


def write_movielens(directory, films=MINI_FILMS):
    """Write ``u.data`` and ``u.item`` in the ml-100k layout."""
    directory.mkdir(parents=True, exist_ok=True)
    lines = []
    user_id = 0
    for item_id, (_, counts) in films.items():
        for rating, count in enumerate(counts, start=1):
            for _ in range(count):
                user_id += 1
                lines.append(f"{user_id}\t{item_id}\t{rating}\t881250949")
    (directory / "u.data").write_text("\n".join(lines) + "\n", encoding="latin-1")
    items = [
        f"{item_id}|{title}|01-Jan-1995||http://us.imdb.com/|0|0|0|1|1|1|0|0|0|0|0|0|0|0|0|0|0|0|0"
        for item_id, (title, _) in films.items()
    ]
    (directory / "u.item").write_text("\n".join(items) + "\n", encoding="latin-1")
    return directory


@pytest.fixture
def movielens_dir(tmp_path):
    return write_movielens(tmp_path / "ml-100k")


@pytest.fixture
def mini_dataset(movielens_dir):
    from movielens.dataset import MovieLensDataset

    return MovieLensDataset(movielens_dir)


@pytest.fixture
def real_dataset():
    from movielens.dataset import MovieLensDataset

    dataset = MovieLensDataset()
    if not dataset.exists():
        pytest.skip(f"MovieLens 100k not present in {dataset.directory}")
    return dataset


@pytest.fixture
def set_file(tmp_path):
    """Write (x, mu) pairs to ``<name>.set`` and return its path."""

    def write(name, pairs):
        path = tmp_path / f"{name}.set"
        path.write_text("".join(f"{x}\t{mu}\n" for x, mu in pairs), encoding="utf-8")
        return path

    return write
