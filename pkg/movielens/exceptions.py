class IngestError(ValueError):
    """Base class for dataset and rating-file problems."""


class MalformedLine(IngestError):
    def __init__(self, line_no, reason):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class RatingOutOfRange(MalformedLine):
    pass


class DuplicateItem(MalformedLine):
    pass


class UnknownItem(IngestError):
    pass


class FilmNotFound(IngestError):
    def __init__(self, name, near_matches=()):
        self.name = name
        self.near_matches = tuple(near_matches)
        message = f"no film titled {name!r}"
        if self.near_matches:
            message += "; did you mean: " + ", ".join(repr(title) for title in self.near_matches)
        super().__init__(message)


class DatasetMissing(IngestError):
    def __init__(self, directory):
        self.directory = directory
        super().__init__(
            f"MovieLens 100k not found in {directory}. "
            "Run `python manage.py fetch_movielens` or point MOVIELENS_DIR / --data at an extracted ml-100k folder."
        )
