from django.apps import AppConfig


class PermmodulesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'permmodules'
    verbose_name = 'Permutation modules'
