from django.apps import AppConfig


class CellularConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'cellular'
    verbose_name = 'Cellular structure'
