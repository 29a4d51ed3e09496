from django.apps import AppConfig


class DarbouxConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'darboux'
