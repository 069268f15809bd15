from django.apps import AppConfig


class SectionsConfig(AppConfig):
    """Zeros of sections of the binomial expansion."""
    name = 'sections'
    verbose_name = 'Binomial sections'
