from django import forms

from core.exceptions import ConfigError


class DefaultsForm(forms.Form):
    """Форма раздела конфигурации: незаданные поля получают значения из defaults"""

    defaults: dict = {}

    def clean(self):
        cleaned_data = super().clean()
        for name, value in self.defaults.items():
            if cleaned_data.get(name) in (None, ""):
                cleaned_data[name] = value
        return cleaned_data


def clean_form(form_class, data, label):
    """Проверяет раздел конфигурации формой Django; ошибки собираются в ConfigError"""
    if not isinstance(data, dict):
        raise ConfigError(f"{label}: ожидался объект, получено {type(data).__name__}")

    form = form_class(data=data)
    if form.is_valid():
        return form.cleaned_data

    problems = []
    for field, messages in sorted(form.errors.items()):
        name = label if field == "__all__" else f"{label}.{field}"
        problems.extend(f"{name}: {message}" for message in messages)
    raise ConfigError("; ".join(problems))
