import math

from django import forms
from django.test import SimpleTestCase

from core.exceptions import ConfigError
from core.geometry import distance, midpoint, slot_count, slot_times
from core.validation import DefaultsForm, clean_form


class GeometryTests(SimpleTestCase):
    def test_distance(self):
        self.assertEqual(distance((0, 0), (3, 4)), 5.0)
        self.assertAlmostEqual(distance((1, 0), (0, 1)), math.sqrt(2))

    def test_midpoint(self):
        self.assertEqual(midpoint((0, 0), (2, -4)), (1.0, -2.0))

    def test_slot_times_include_both_ends(self):
        self.assertEqual(slot_times(10.0, 3.0, 1.0), [10.0, 11.0, 12.0, 13.0])

    def test_slot_count_tolerates_rounding(self):
        self.assertEqual(slot_count(0.3, 0.1), 3)
        self.assertEqual(slot_count(0.0, 1.0), 0)


class SampleForm(DefaultsForm):
    rate = forms.FloatField(required=False, min_value=0)
    name = forms.CharField(required=False)

    defaults = {"rate": 0.5, "name": "default"}


class CleanFormTests(SimpleTestCase):
    def test_defaults_fill_missing_fields(self):
        self.assertEqual(clean_form(SampleForm, {}, "section"), {"rate": 0.5, "name": "default"})

    def test_explicit_values_win(self):
        self.assertEqual(clean_form(SampleForm, {"rate": 2}, "section")["rate"], 2.0)

    def test_errors_name_section_and_field(self):
        with self.assertRaisesMessage(ConfigError, "section.rate"):
            clean_form(SampleForm, {"rate": -1}, "section")

    def test_non_object_rejected(self):
        with self.assertRaisesMessage(ConfigError, "section"):
            clean_form(SampleForm, [1, 2], "section")
