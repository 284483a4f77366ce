import os
from hypothesis import settings

# derandomized so that repeated runs explore the same examples
settings.register_profile('default', derandomize=True, deadline=None, max_examples=200)
settings.register_profile('thorough', derandomize=True, deadline=None, max_examples=5000)
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'default'))
