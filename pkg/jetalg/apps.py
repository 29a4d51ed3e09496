from django.apps import AppConfig


class JetalgConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'jetalg'
