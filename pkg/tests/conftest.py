from hypothesis import settings

# Numeric property tests can blow the default per-example deadline on a
# loaded machine; correctness is what matters here, not per-example speed.
settings.register_profile("numeric", deadline=None)
settings.load_profile("numeric")
