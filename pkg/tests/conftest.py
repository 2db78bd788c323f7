import os

from hypothesis import settings

# fixed seed by default; HYPOTHESIS_PROFILE=explore switches to fresh randomness
settings.register_profile("default", derandomize=True, deadline=None, max_examples=60)
settings.register_profile("explore", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))
