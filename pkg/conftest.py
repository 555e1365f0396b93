import os

import django

# Mirror the `manage.py test` environment when the suite is run under pytest.
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'settings')
os.environ.setdefault('DJANGO_TEST_MODE', '1')
django.setup()
