from django.apps import AppConfig


class TrajectoryConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "trajectory"
    verbose_name = "ТРАЕКТОРИИ И СЦЕНАРИИ"
