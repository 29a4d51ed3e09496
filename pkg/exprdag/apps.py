from django.apps import AppConfig


class ExprdagConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'exprdag'
