from hypothesis import settings

# exact arithmetic has wildly uneven per-example cost; wall-clock deadlines
# only produce flaky failures here
settings.register_profile("exact", deadline=None, max_examples=50)
settings.load_profile("exact")
