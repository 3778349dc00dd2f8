from django import forms

from core.validation import DefaultsForm

DIRECTION_CHOICES = [
    ("west", "С запада на восток"),
    ("east", "С востока на запад"),
    ("south", "С юга на север"),
    ("north", "С севера на юг"),
]


class ApproachForm(DefaultsForm):
    defaults = {"accel": 0.0, "arrival_jitter": 0.0, "entry_accel": 0.0, "entry_time": 0.0}

    direction = forms.ChoiceField(choices=DIRECTION_CHOICES)
    count = forms.IntegerField(min_value=0)
    first_arrival = forms.FloatField(min_value=0)
    spacing = forms.FloatField(min_value=0, required=False)
    accel = forms.FloatField(required=False)
    arrival_jitter = forms.FloatField(min_value=0, required=False)
    entry_accel = forms.FloatField(required=False)
    entry_time = forms.FloatField(min_value=0, required=False)

    def clean(self):
        cleaned_data = super().clean()
        if cleaned_data.get("spacing") is None:
            if (cleaned_data.get("count") or 0) > 1:
                raise forms.ValidationError("Для нескольких ТС нужен интервал spacing.")
            cleaned_data["spacing"] = 0.0
        return cleaned_data


class GeneratorForm(DefaultsForm):
    defaults = {
        "center": [0.0, 0.0],
        "comm_range": 500.0,
        "t_start": 0.0,
        "duration": 100.0,
        "slot_period": 1.0,
        "speed_min": 8.0,
        "speed_max": 12.0,
        "lane_offset": 1.0,
    }

    center = forms.JSONField(required=False)
    comm_range = forms.FloatField(min_value=0, required=False)
    t_start = forms.FloatField(min_value=0, required=False)
    duration = forms.FloatField(min_value=0, required=False)
    slot_period = forms.FloatField(min_value=0, required=False)
    speed_min = forms.FloatField(required=False)
    speed_max = forms.FloatField(required=False)
    lane_offset = forms.FloatField(min_value=0, required=False)
    approach_length = forms.FloatField(min_value=0, required=False)
    approaches = forms.JSONField()

    def clean_center(self):
        center = self.cleaned_data.get("center")
        if center is None:
            return None
        if not (isinstance(center, list) and len(center) == 2):
            raise forms.ValidationError("Ожидалась пара координат [x, y].")
        return center

    def clean_approaches(self):
        approaches = self.cleaned_data.get("approaches")
        if not isinstance(approaches, list):
            raise forms.ValidationError("Ожидался список подходов.")
        return approaches


class ExtractionForm(DefaultsForm):
    defaults = {
        "format": "canonical",
        "comm_range": 500.0,
        "t_start": 0.0,
        "duration": 100.0,
        "slot_period": 1.0,
    }

    trajectories = forms.CharField()
    format = forms.ChoiceField(
        choices=[("canonical", "Канонический"), ("fcd", "SUMO FCD")], required=False
    )
    fog_location = forms.JSONField()
    comm_range = forms.FloatField(min_value=0, required=False)
    t_start = forms.FloatField(min_value=0, required=False)
    duration = forms.FloatField(min_value=0, required=False)
    slot_period = forms.FloatField(min_value=0, required=False)

    def clean_fog_location(self):
        location = self.cleaned_data.get("fog_location")
        if not (isinstance(location, list) and len(location) == 2):
            raise forms.ValidationError("Ожидалась пара координат [x, y].")
        return location
