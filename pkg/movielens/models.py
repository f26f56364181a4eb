from django.db import models

from .histograms import RatingHistogram


class Film(models.Model):
    """Cached rating histogram of one MovieLens item."""

    item_id = models.PositiveIntegerField(unique=True)
    title = models.CharField(max_length=255)
    counts = models.JSONField(default=dict)  # rating (as text) -> count
    total = models.PositiveIntegerField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        ordering = ["item_id"]
        indexes = [
            # Films are resolved by title
            models.Index(fields=['title'], name='film_title_idx'),
        ]

    def __str__(self):
        return f"{self.title} ({self.total} ratings)"

    @classmethod
    def from_histogram(cls, histogram: RatingHistogram):
        return cls(
            item_id=histogram.item_id,
            title=histogram.title,
            counts={str(rating): count for rating, count in histogram.counts.items()},
            total=histogram.total,
        )

    def to_histogram(self) -> RatingHistogram:
        return RatingHistogram(
            self.item_id,
            self.title,
            {int(rating): count for rating, count in self.counts.items()},
        )
