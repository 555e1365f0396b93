from django.apps import AppConfig


class ManipulationConfig(AppConfig):
    name = 'manipulation'
    verbose_name = 'Single-voter manipulation'
