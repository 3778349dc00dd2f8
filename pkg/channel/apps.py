from django.apps import AppConfig


class ChannelAppConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "channel"
    verbose_name = "КАНАЛ СВЯЗИ"
