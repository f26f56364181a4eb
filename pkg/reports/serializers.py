from pathlib import Path

from django.conf import settings
from rest_framework import serializers

from fuzzysets.exceptions import InvalidAlphaGrid
from fuzzysets.sets import AlphaGrid, Normalization
from metrics.measures import NORMAL_ONLY
from metrics.params import Measure, MeasureParams
from movielens.dataset import Source

from .config import CommandName, OutputFormat, RunConfig

# (fewest, most) operands per command; None means unbounded
OPERAND_COUNTS = {
    CommandName.DISTANCE: (2, 2),
    CommandName.MATRIX: (2, None),
    CommandName.RANK: (2, None),
    CommandName.REPRODUCE: (0, 0),
}


class RunConfigSerializer(serializers.Serializer):
    """Validates command-line options and turns them into a ``RunConfig``."""

    command = serializers.ChoiceField(choices=CommandName.choices)
    measure = serializers.ChoiceField(choices=Measure.choices, default=Measure.CR)
    signed = serializers.BooleanField(default=True)
    alpha_cuts = serializers.IntegerField(min_value=2, required=False, allow_null=True)
    levels = serializers.CharField(required=False, allow_null=True, allow_blank=True)
    epsilon = serializers.FloatField(min_value=0.0, required=False, allow_null=True)
    x_points = serializers.IntegerField(min_value=2, required=False, allow_null=True)
    normalization = serializers.ChoiceField(choices=Normalization.choices, default=Normalization.PEAK)
    operands = serializers.ListField(child=serializers.CharField(), default=list)
    output_format = serializers.ChoiceField(choices=OutputFormat.choices, default=OutputFormat.CSV)
    data_dir = serializers.CharField(required=False, allow_null=True, allow_blank=True)
    source = serializers.ChoiceField(choices=Source.choices, default=Source.FILES)

    def validate_levels(self, value):
        if not value:
            return None
        try:
            return AlphaGrid.from_range(value)
        except InvalidAlphaGrid as exc:
            raise serializers.ValidationError(str(exc))

    def validate(self, attrs):
        fewest, most = OPERAND_COUNTS[attrs["command"]]
        count = len(attrs["operands"])
        if count < fewest or (most is not None and count > most):
            expected = f"exactly {fewest}" if fewest == most else f"at least {fewest}"
            raise serializers.ValidationError({"operands": f"{attrs['command']} takes {expected} operands, got {count}."})
        if attrs["measure"] in NORMAL_ONLY and attrs["normalization"] == Normalization.PROPORTION:
            raise serializers.ValidationError({
                "normalization": f"{attrs['measure']} needs normal sets; use --normalization peak or none."
            })
        return attrs

    def create(self, validated_data):
        defaults = settings.FUZZY_DISTANCE
        grid = validated_data.get("levels") or AlphaGrid.uniform(
            validated_data.get("alpha_cuts") or defaults["ALPHA_CUTS"]
        )
        epsilon = validated_data.get("epsilon")
        params = MeasureParams(
            grid=grid,
            epsilon=defaults["EPSILON"] if epsilon is None else epsilon,
            x_grid_count=validated_data.get("x_points") or defaults["X_POINTS"],
            signed=validated_data["signed"],
        )
        data_dir = validated_data.get("data_dir")
        return RunConfig(
            command=CommandName(validated_data["command"]),
            measure=Measure(validated_data["measure"]),
            params=params,
            normalization=Normalization(validated_data["normalization"]),
            inputs=tuple(validated_data["operands"]),
            output_format=OutputFormat(validated_data["output_format"]),
            data_dir=Path(data_dir) if data_dir else None,
            source=Source(validated_data["source"]),
        )
