from django.apps import AppConfig


class ExactalgebraConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'exactalgebra'
    verbose_name = 'Exact algebra'
