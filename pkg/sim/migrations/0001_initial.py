from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="SimulationRun",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                ("name", models.CharField(max_length=255, verbose_name="Конфигурация")),
                ("algorithm", models.CharField(max_length=8, verbose_name="Алгоритм")),
                ("seed", models.BigIntegerField(verbose_name="Seed")),
                ("scenario", models.CharField(max_length=255, verbose_name="Сценарий")),
                ("true_positives", models.PositiveIntegerField(verbose_name="Верные предупреждения")),
                ("false_positives", models.PositiveIntegerField(verbose_name="Ложные предупреждения")),
                ("false_negatives", models.PositiveIntegerField(verbose_name="Пропущенные конфликты")),
                ("precision", models.FloatField(verbose_name="Точность")),
                ("recall", models.FloatField(verbose_name="Полнота")),
                ("packets", models.JSONField(default=dict, verbose_name="Учёт пакетов")),
                ("report_digest", models.CharField(max_length=64, verbose_name="SHA-256 отчёта")),
                (
                    "output_dir",
                    models.CharField(blank=True, max_length=500, verbose_name="Каталог результатов"),
                ),
                ("created_at", models.DateTimeField(auto_now_add=True, verbose_name="Дата запуска")),
            ],
            options={
                "verbose_name": "Прогон",
                "verbose_name_plural": "Прогоны",
                "ordering": ["-created_at"],
            },
        ),
        migrations.CreateModel(
            name="SweepCellResult",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                ("sweep", models.CharField(max_length=255, verbose_name="Серия")),
                ("axis", models.CharField(max_length=16, verbose_name="Ось")),
                ("value", models.CharField(max_length=255, verbose_name="Значение")),
                ("algorithm", models.CharField(max_length=8, verbose_name="Алгоритм")),
                ("replicate", models.PositiveIntegerField(default=0, verbose_name="Повтор")),
                ("seed", models.BigIntegerField(verbose_name="Seed")),
                ("true_positives", models.PositiveIntegerField(blank=True, null=True, verbose_name="TP")),
                ("false_positives", models.PositiveIntegerField(blank=True, null=True, verbose_name="FP")),
                ("false_negatives", models.PositiveIntegerField(blank=True, null=True, verbose_name="FN")),
                ("precision", models.FloatField(blank=True, null=True, verbose_name="Точность")),
                ("recall", models.FloatField(blank=True, null=True, verbose_name="Полнота")),
                ("error", models.TextField(blank=True, verbose_name="Ошибка")),
                ("created_at", models.DateTimeField(auto_now_add=True, verbose_name="Дата записи")),
            ],
            options={
                "verbose_name": "Ячейка серии",
                "verbose_name_plural": "Ячейки серий",
                "ordering": ["sweep", "axis", "value", "algorithm", "replicate"],
            },
        ),
    ]
