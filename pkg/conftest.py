import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'heckecentral.settings')
django.setup()
