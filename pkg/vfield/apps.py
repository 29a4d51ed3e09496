from django.apps import AppConfig


class VfieldConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'vfield'
