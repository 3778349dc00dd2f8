from django.apps import AppConfig


class FogConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "fog"
    verbose_name = "УЗЕЛ ТУМАНА"
