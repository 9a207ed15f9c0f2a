from django.apps import AppConfig


class CentraliserConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'centraliser'
    verbose_name = 'Centraliser engine'
