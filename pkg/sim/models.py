from django.db import models


class SimulationRun(models.Model):
    """Архив итогов прогона (файлы отчёта остаются основным результатом)"""

    name = models.CharField(max_length=255, verbose_name="Конфигурация")
    algorithm = models.CharField(max_length=8, verbose_name="Алгоритм")
    seed = models.BigIntegerField(verbose_name="Seed")
    scenario = models.CharField(max_length=255, verbose_name="Сценарий")
    true_positives = models.PositiveIntegerField(verbose_name="Верные предупреждения")
    false_positives = models.PositiveIntegerField(verbose_name="Ложные предупреждения")
    false_negatives = models.PositiveIntegerField(verbose_name="Пропущенные конфликты")
    precision = models.FloatField(verbose_name="Точность")
    recall = models.FloatField(verbose_name="Полнота")
    packets = models.JSONField(default=dict, verbose_name="Учёт пакетов")
    report_digest = models.CharField(max_length=64, verbose_name="SHA-256 отчёта")
    output_dir = models.CharField(max_length=500, blank=True, verbose_name="Каталог результатов")
    created_at = models.DateTimeField(auto_now_add=True, verbose_name="Дата запуска")

    class Meta:
        verbose_name = "Прогон"
        verbose_name_plural = "Прогоны"
        ordering = ["-created_at"]

    def __str__(self):
        return f"{self.name} ({self.algorithm}, seed {self.seed})"


class SweepCellResult(models.Model):
    """Ячейка серии: значение оси, алгоритм и повтор"""

    sweep = models.CharField(max_length=255, verbose_name="Серия")
    axis = models.CharField(max_length=16, verbose_name="Ось")
    value = models.CharField(max_length=255, verbose_name="Значение")
    algorithm = models.CharField(max_length=8, verbose_name="Алгоритм")
    replicate = models.PositiveIntegerField(default=0, verbose_name="Повтор")
    seed = models.BigIntegerField(verbose_name="Seed")
    true_positives = models.PositiveIntegerField(null=True, blank=True, verbose_name="TP")
    false_positives = models.PositiveIntegerField(null=True, blank=True, verbose_name="FP")
    false_negatives = models.PositiveIntegerField(null=True, blank=True, verbose_name="FN")
    precision = models.FloatField(null=True, blank=True, verbose_name="Точность")
    recall = models.FloatField(null=True, blank=True, verbose_name="Полнота")
    error = models.TextField(blank=True, verbose_name="Ошибка")
    created_at = models.DateTimeField(auto_now_add=True, verbose_name="Дата записи")

    class Meta:
        verbose_name = "Ячейка серии"
        verbose_name_plural = "Ячейки серий"
        ordering = ["sweep", "axis", "value", "algorithm", "replicate"]

    def __str__(self):
        return f"{self.sweep}: {self.axis}={self.value} {self.algorithm} #{self.replicate}"

    @property
    def failed(self):
        return bool(self.error)
