from django.apps import AppConfig


class FuzzysetsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'fuzzysets'
