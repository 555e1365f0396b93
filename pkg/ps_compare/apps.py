from django.apps import AppConfig


class PsCompareConfig(AppConfig):
    name = 'ps_compare'
    verbose_name = 'Pathak-Sonmez comparison'
