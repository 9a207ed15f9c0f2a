from django.apps import AppConfig


class HeckecentralConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'heckecentral'
    verbose_name = 'Hecke central'
