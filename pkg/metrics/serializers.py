from rest_framework import serializers

from .params import Measure


# --- Parameters ---
class MeasureParamsSerializer(serializers.Serializer):
    levels = serializers.ListField(child=serializers.FloatField(), source="grid.levels")
    epsilon = serializers.FloatField()
    x_grid_count = serializers.IntegerField()
    signed = serializers.BooleanField()


# --- Reports ---
class DistanceReportSerializer(serializers.Serializer):
    measure = serializers.ChoiceField(choices=Measure.choices)
    operands = serializers.ListField(child=serializers.CharField())
    value = serializers.FloatField()
    params = MeasureParamsSerializer()


class LevelKernelSerializer(serializers.Serializer):
    level = serializers.FloatField()
    value = serializers.FloatField()
    substituted = serializers.BooleanField()
