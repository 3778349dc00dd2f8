from django import forms

from channel.presets import PRESET_NAMES
from core.validation import DefaultsForm
from fog.algorithms import Algorithm
from fog.state import LatencyEstimator

MODEL_CHOICES = [("stable", "Устойчивое распределение"), ("trace", "Трасса"), ("constant", "Постоянная")]


class ChannelForm(DefaultsForm):
    defaults = {"loss_rate": 0.0, "wrap": False}

    preset = forms.ChoiceField(choices=[(name, name) for name in PRESET_NAMES], required=False)
    model = forms.ChoiceField(choices=MODEL_CHOICES, required=False)
    alpha = forms.FloatField(min_value=0, max_value=2, required=False)
    beta = forms.FloatField(min_value=-1, max_value=1, required=False)
    mu = forms.FloatField(required=False)
    sigma = forms.FloatField(min_value=0, required=False)
    trace = forms.CharField(required=False)
    wrap = forms.BooleanField(required=False)
    latency_ms = forms.FloatField(min_value=0, required=False)
    loss_rate = forms.FloatField(min_value=0, max_value=1, required=False)

    def clean(self):
        cleaned_data = super().clean()
        preset, model = cleaned_data.get("preset"), cleaned_data.get("model")

        if bool(preset) == bool(model):
            raise forms.ValidationError("Укажите либо preset, либо model.")
        if model == "stable":
            missing = [name for name in ("alpha", "beta", "mu", "sigma") if cleaned_data.get(name) is None]
            if missing:
                raise forms.ValidationError(f"Для модели stable не заданы: {', '.join(missing)}.")
        if model == "trace" and not cleaned_data.get("trace"):
            raise forms.ValidationError("Для модели trace нужен путь к трассе.")
        if model == "constant" and cleaned_data.get("latency_ms") is None:
            raise forms.ValidationError("Для модели constant нужна latency_ms.")
        return cleaned_data


class ThresholdsForm(DefaultsForm):
    defaults = {
        "tau": 10.0,
        "gamma": 0.2,
        "headway": 3.0,
        "d_col": 2.0,
        "predict_horizon": 5.0,
    }

    tau = forms.FloatField(min_value=0, required=False)
    gamma = forms.FloatField(min_value=0, required=False)
    headway = forms.FloatField(min_value=0, required=False)
    d_col = forms.FloatField(min_value=0, required=False)
    predict_horizon = forms.FloatField(min_value=0, required=False)
    match_tolerance = forms.FloatField(min_value=0, required=False)

    def clean(self):
        cleaned_data = super().clean()
        for name in ("headway", "d_col", "predict_horizon"):
            if cleaned_data.get(name) == 0:
                self.add_error(name, "Значение должно быть положительным.")
        return cleaned_data


class FogForm(DefaultsForm):
    defaults = {"estimator": LatencyEstimator.RANDOM.value}

    estimator = forms.ChoiceField(
        choices=[(estimator.value, estimator.value) for estimator in LatencyEstimator], required=False
    )


class EmissionForm(DefaultsForm):
    defaults = {"phase": 0.0, "jitter": 0.0}

    phase = forms.FloatField(min_value=0, required=False)
    jitter = forms.FloatField(min_value=0, required=False)


class OutputForm(DefaultsForm):
    directory = forms.CharField(required=False)


class RunConfigForm(forms.Form):
    algorithm = forms.ChoiceField(choices=[(item.value, item.value) for item in Algorithm])
    seed = forms.IntegerField(min_value=0)
