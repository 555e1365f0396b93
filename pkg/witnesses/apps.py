from django.apps import AppConfig


class WitnessesConfig(AppConfig):
    name = 'witnesses'
    verbose_name = 'Witness constructions and claim verification'

    def ready(self):
        import witnesses.checks  # noqa: F401
