from django.apps import AppConfig


class MovielensConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'movielens'
