import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'crframes.settings')
django.setup()
