from hypothesis import settings

from addix.field import build_field

settings.register_profile("addix", database=None, max_examples=30, deadline=None)
settings.load_profile("addix")


def f4():
    return build_field(2, 2)


def f8():
    return build_field(2, 3)


def f9():
    return build_field(3, 2)


def f16():
    return build_field(2, 4)


def f25():
    return build_field(5, 2)


def f27():
    return build_field(3, 3)


def f49():
    return build_field(7, 2)


SMALL_FIELDS = [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]


def prime_powers_upto(limit):
    """All (p, n) with p prime and p^n <= limit, n >= 1."""
    from addix.field import is_prime

    out = []
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        n, q = 1, p
        while q <= limit:
            out.append((p, n))
            n += 1
            q *= p
    return out
